//! Candidate ordering for the backtracking search.

use crate::error::{Error, Result};

/// A partial path together with the chord types it still has to use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchState {
    n: usize,
    path: Vec<usize>,
    /// `residual[t - 1]`: copies of type `t` still to place
    residual: Vec<u32>,
    used: u64,
}

impl SearchState {
    /// A path of one point with the full target still to place.
    pub fn start(n: usize, target: &[u32], first: usize) -> Result<Self> {
        Self::new(n, vec![first], target.to_vec())
    }

    pub fn new(n: usize, path: Vec<usize>, residual: Vec<u32>) -> Result<Self> {
        if !(3..=64).contains(&n) {
            return Err(Error::TooLarge {
                what: "search state",
                n,
                limit: 64,
            });
        }
        if residual.len() != n / 2 {
            return Err(Error::InvalidMultiset(format!(
                "residual has {} entries, expected {}",
                residual.len(),
                n / 2
            )));
        }
        let mut used = 0u64;
        for &p in &path {
            if p >= n || used >> p & 1 == 1 {
                return Err(Error::InvalidPath(format!("bad or repeated point {p}")));
            }
            used |= 1 << p;
        }
        if path.is_empty() {
            return Err(Error::InvalidPath("empty partial path".into()));
        }
        let placed = path.len() as u32 - 1;
        if residual.iter().sum::<u32>() + placed != n as u32 - 1 {
            return Err(Error::InvalidMultiset(
                "residual does not match the unplaced chords".into(),
            ));
        }
        Ok(Self {
            n,
            path,
            residual,
            used,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn residual(&self) -> &[u32] {
        &self.residual
    }

    pub fn is_complete(&self) -> bool {
        self.path.len() == self.n
    }

    fn end(&self) -> usize {
        *self.path.last().expect("nonempty")
    }

    fn is_used(&self, p: usize) -> bool {
        self.used >> p & 1 == 1
    }

    fn ty(&self, a: usize, b: usize) -> usize {
        let d = a.abs_diff(b);
        d.min(self.n - d)
    }

    /// Appends a candidate's point.
    pub fn push(&mut self, c: &Candidate) {
        debug_assert!(!self.is_used(c.point));
        self.residual[c.chord_type - 1] -= 1;
        self.used |= 1 << c.point;
        self.path.push(c.point);
    }

    pub fn pop(&mut self) {
        let p = self.path.pop().expect("nonempty");
        self.used &= !(1 << p);
        let t = self.ty(self.end(), p);
        self.residual[t - 1] += 1;
    }

    /// For every point, how many points of `unused + end` it can still be
    /// joined to with a residual chord type.
    fn neighbor_counts(&self) -> Vec<u32> {
        let n = self.n;
        let end = self.end();
        let open = |w: usize| !self.is_used(w) || w == end;
        (0..n)
            .map(|u| {
                if self.is_used(u) {
                    return 0;
                }
                let mut c = 0;
                for (s, &r) in (1..).zip(&self.residual) {
                    if r == 0 {
                        continue;
                    }
                    let up = (u + s) % n;
                    let down = (u + n - s) % n;
                    c += open(up) as u32;
                    if down != up {
                        c += open(down) as u32;
                    }
                }
                c
            })
            .collect()
    }
}

/// One extension of a partial path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate {
    pub chord_type: usize,
    pub point: usize,
    /// points the new end could move to next
    pub exits: u32,
    /// copies of `chord_type` left before this step
    pub remaining: u32,
}

impl Candidate {
    fn key(&self) -> (u32, u32, usize, usize) {
        (self.exits, self.remaining, self.chord_type, self.point)
    }
}

/// Every unused point reachable from the end with a residual type, in
/// point order, without pruning.
pub fn feasible_extensions(state: &SearchState) -> Vec<Candidate> {
    candidates(state, false)
}

/// Feasible extensions, pruned and sorted by fewest exits from the new end,
/// then fewest remaining copies of the type, then type, then point.
///
/// A candidate is dropped when afterwards some unused point has no possible
/// neighbour, two unused points have at most one (only one can be the far
/// end), the new end has no exit, or, for even `n`, the unused points
/// cannot absorb the parity changes of the remaining odd chords.
pub fn heuristic_order(state: &SearchState) -> Vec<Candidate> {
    let mut out = candidates(state, true);
    out.sort_unstable_by_key(Candidate::key);
    out
}

fn candidates(state: &SearchState, prune: bool) -> Vec<Candidate> {
    let n = state.n;
    let end = state.end();
    let base = if prune {
        state.neighbor_counts()
    } else {
        Vec::new()
    };
    let odd_left: u32 = (1..)
        .zip(&state.residual)
        .filter(|(t, _)| t % 2 == 1)
        .map(|(_, &r)| r)
        .sum();
    let unused_even = (0..n).filter(|&p| !state.is_used(p) && p % 2 == 0).count();
    let unused_odd = (0..n).filter(|&p| !state.is_used(p) && p % 2 == 1).count();
    let mut out = Vec::new();
    for q in (0..n).filter(|&q| !state.is_used(q)) {
        let t = state.ty(end, q);
        let remaining = state.residual[t - 1];
        if remaining == 0 {
            continue;
        }
        let last_copy = remaining == 1;
        // neighbours of `u` after the step: drop `end`, and drop type `t`
        // edges inside the unused set if `t` runs out
        let after = |u: usize| -> u32 {
            let mut c = base[u];
            if state.residual[state.ty(u, end) - 1] > 0 {
                c -= 1;
            }
            if last_copy {
                let up = (u + t) % n;
                let down = (u + n - t) % n;
                c -= !state.is_used(up) as u32;
                if down != up {
                    c -= !state.is_used(down) as u32;
                }
            }
            c
        };
        let left = n - state.path.len() - 1;
        let exits = if prune {
            after(q)
        } else {
            (0..n)
                .filter(|&w| !state.is_used(w) && w != q)
                .filter(|&w| state.residual[state.ty(q, w) - 1] > (state.ty(q, w) == t) as u32)
                .count() as u32
        };
        if prune && left > 0 {
            if exits == 0 {
                continue;
            }
            let mut weak = 0;
            let mut dead = false;
            for u in (0..n).filter(|&u| !state.is_used(u) && u != q) {
                match after(u) {
                    0 => {
                        dead = true;
                        break;
                    }
                    1 => weak += 1,
                    _ => {}
                }
            }
            if dead || weak > 1 {
                continue;
            }
            if n.is_multiple_of(2) {
                let k = odd_left - (t % 2) as u32;
                let (same, other) = if q % 2 == 0 {
                    (unused_even - 1, unused_odd)
                } else {
                    (unused_odd - 1, unused_even)
                };
                let (same, other) = (same as u32, other as u32);
                let feasible = (k > 0 || other == 0) && other >= k.div_ceil(2) && same >= k / 2;
                if !feasible {
                    continue;
                }
            }
        }
        out.push(Candidate {
            chord_type: t,
            point: q,
            exits,
            remaining,
        });
    }
    out
}
