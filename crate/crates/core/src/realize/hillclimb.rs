//! Randomized hill-climbing over paths.
//!
//! A move reverses a prefix or a suffix of the path. Reversing `p_0..p_i`
//! keeps every chord inside the prefix and turns the chord
//! `(p_i, p_(i+1))` into `(p_0, p_(i+1))`; a suffix reversal is the mirror
//! image. Each move therefore swaps exactly one chord type for another.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chord::{Multiset, Path};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HillClimbConfig {
    pub seed: u64,
    pub max_iters: u64,
    pub weight_worse: u64,
    pub weight_sideways: u64,
    pub weight_better: u64,
}

impl Default for HillClimbConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_iters: 100_000,
            weight_worse: 1,
            weight_sideways: 100,
            weight_better: 10_000,
        }
    }
}

impl HillClimbConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1".into()));
        }
        if self.weight_worse == 0 || self.weight_sideways == 0 || self.weight_better == 0 {
            return Err(Error::InvalidConfig("weights must be positive".into()));
        }
        Ok(())
    }
}

/// Reversal of a prefix ending at index `i - 1` or of a suffix starting at
/// index `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// `2 <= i <= n - 1`
    Prefix(usize),
    /// `1 <= i <= n - 2`
    Suffix(usize),
}

impl Move {
    pub fn all(n: usize) -> impl Iterator<Item = Move> {
        (2..n).map(Move::Prefix).chain((1..n - 1).map(Move::Suffix))
    }

    /// `(removed, added)` chord types.
    pub fn effect(self, points: &[usize], n: usize) -> (usize, usize) {
        let last = points.len() - 1;
        match self {
            Move::Prefix(i) => (ty(points[i - 1], points[i], n), ty(points[0], points[i], n)),
            Move::Suffix(i) => (
                ty(points[i - 1], points[i], n),
                ty(points[i - 1], points[last], n),
            ),
        }
    }

    pub fn apply(self, points: &mut [usize]) {
        match self {
            Move::Prefix(i) => points[..i].reverse(),
            Move::Suffix(i) => points[i..].reverse(),
        }
    }
}

fn ty(a: usize, b: usize, n: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HillClimbResult {
    Found { path: Path, iterations: u64 },
    GaveUp { iterations: u64 },
}

impl HillClimbResult {
    pub fn path(&self) -> Option<&Path> {
        match self {
            HillClimbResult::Found { path, .. } => Some(path),
            HillClimbResult::GaveUp { .. } => None,
        }
    }

    pub fn iterations(&self) -> u64 {
        match self {
            HillClimbResult::Found { iterations, .. } | HillClimbResult::GaveUp { iterations } => {
                *iterations
            }
        }
    }
}

/// A seeded hill-climber; its generator carries over between calls, so a
/// sequence of solves is reproducible from the seed.
#[derive(Debug, Clone)]
pub struct HillClimber {
    cfg: HillClimbConfig,
    rng: ChaCha8Rng,
}

impl HillClimber {
    pub fn new(cfg: HillClimbConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self {
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            cfg,
        })
    }

    pub fn random_path(&mut self, n: usize) -> Path {
        let mut points: Vec<usize> = (0..n).collect();
        points.shuffle(&mut self.rng);
        Path::new(points).expect("a permutation")
    }

    /// Climbs from `start`, or from a random path if none is given.
    pub fn solve(&mut self, target: &Multiset, start: Option<&Path>) -> Result<HillClimbResult> {
        let n = target.n();
        let mut points = match start {
            Some(p) if p.n() == n => p.points().to_vec(),
            Some(p) => {
                return Err(Error::InvalidPath(format!(
                    "start path has {} points, target needs {n}",
                    p.n()
                )))
            }
            None => self.random_path(n).points().to_vec(),
        };
        let goal = target.counts();
        let mut cur = vec![0u32; goal.len()];
        for w in points.windows(2) {
            cur[ty(w[0], w[1], n) - 1] += 1;
        }
        let full = (n - 1) as u32;
        let mut matches: u32 = cur.iter().zip(goal).map(|(&a, &b)| a.min(b)).sum();
        let moves: Vec<Move> = Move::all(n).collect();
        let mut weights = vec![0u64; moves.len()];
        let mut iterations = 0;
        while matches < full {
            if iterations == self.cfg.max_iters {
                return Ok(HillClimbResult::GaveUp { iterations });
            }
            iterations += 1;
            let mut finishing = None;
            for (w, mv) in weights.iter_mut().zip(&moves) {
                let (out, inn) = mv.effect(&points, n);
                let delta = gain(&cur, goal, out, inn);
                if matches as i64 + delta == full as i64 {
                    finishing = Some(*mv);
                    break;
                }
                *w = match delta {
                    d if d < 0 => self.cfg.weight_worse,
                    0 => self.cfg.weight_sideways,
                    _ => self.cfg.weight_better,
                };
            }
            let mv = match finishing {
                Some(mv) => mv,
                None => {
                    let total: u64 = weights.iter().sum();
                    let mut pick = self.rng.random_range(0..total);
                    let mut chosen = moves[moves.len() - 1];
                    for (w, mv) in weights.iter().zip(&moves) {
                        if pick < *w {
                            chosen = *mv;
                            break;
                        }
                        pick -= w;
                    }
                    chosen
                }
            };
            let (out, inn) = mv.effect(&points, n);
            let delta = gain(&cur, goal, out, inn);
            #[cfg(debug_assertions)]
            let before = cur.clone();
            mv.apply(&mut points);
            cur[out - 1] -= 1;
            cur[inn - 1] += 1;
            matches = (matches as i64 + delta) as u32;
            #[cfg(debug_assertions)]
            {
                let mut recount = vec![0u32; goal.len()];
                for w in points.windows(2) {
                    recount[ty(w[0], w[1], n) - 1] += 1;
                }
                assert_eq!(recount, cur, "move {mv:?} changed more than one chord");
                let changed: u32 = before.iter().zip(&cur).map(|(a, b)| a.abs_diff(*b)).sum();
                assert!(changed == 0 || changed == 2);
            }
        }
        Ok(HillClimbResult::Found {
            path: Path::new(points)?,
            iterations,
        })
    }
}

/// Change in `sum_t min(cur_t, goal_t)` from swapping one `out` for one `inn`.
fn gain(cur: &[u32], goal: &[u32], out: usize, inn: usize) -> i64 {
    if out == inn {
        return 0;
    }
    let lost = (cur[out - 1] <= goal[out - 1]) as i64;
    let won = (cur[inn - 1] < goal[inn - 1]) as i64;
    won - lost
}

/// One hill-climbing run from a random start drawn from `cfg.seed`.
pub fn hillclimb(target: &Multiset, cfg: HillClimbConfig) -> Result<HillClimbResult> {
    HillClimber::new(cfg)?.solve(target, None)
}
