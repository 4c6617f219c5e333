//! The `⤳` preorder and the essential identity set.
//!
//! `B ⤳ A` says every multiset eliminated by `B` is also eliminated by `A`.
//! The relation is reflexive and transitive, so removing `B` whenever some
//! other surviving `A` has `B ⤳ A` leaves exactly one identity from each
//! maximal equivalence class, whatever order the removals happen in, and
//! with a reverse-lexicographic sweep that one is the lexicographically
//! smallest member.

use super::{enumerate_bounded_identities, widen, BoundedIdentitySet};
use crate::chord::ProblemSize;
use crate::error::Result;
use crate::identities::IdentityVector;

/// `B ⤳ A`: for every `j`, `a_j >= 0` or `a_j >= b_j`; and for every
/// divisor `d`, `sigma_d(A) <= 0` or `sigma_d(A) <= sigma_d(B)`.
pub fn arrow(b: &[i64], a: &[i64], n: usize) -> bool {
    assert_eq!(a.len(), b.len());
    let entries = a.iter().zip(b).all(|(&x, &y)| x >= 0 || x >= y);
    entries
        && ProblemSize::new(n).map_or(true, |size| {
            size.divisors().into_iter().all(|d| {
                let sa = sigma(a, d);
                sa <= 0 || sa <= sigma(b, d)
            })
        })
}

fn sigma(v: &[i64], d: usize) -> i64 {
    (d..=v.len()).step_by(d).map(|j| v[j - 1]).sum()
}

/// The data `arrow` needs, precomputed: `B ⤳ A` iff `a >= lower(B)`
/// entrywise and `sigma(A) <= upper(B)` per divisor.
struct Features {
    /// `min(0, b_j)`
    lower: Vec<i64>,
    /// `max(0, sigma_d(B))`
    upper: Vec<i64>,
    values: Vec<i64>,
    sigmas: Vec<i64>,
}

impl Features {
    fn new(v: &[i8], divisors: &[usize]) -> Self {
        let values: Vec<i64> = v.iter().map(|&x| x as i64).collect();
        let sigmas: Vec<i64> = divisors.iter().map(|&d| sigma(&values, d)).collect();
        Self {
            lower: values.iter().map(|&x| x.min(0)).collect(),
            upper: sigmas.iter().map(|&s| s.max(0)).collect(),
            values,
            sigmas,
        }
    }

    /// `self ⤳ other`
    fn arrow_to(&self, other: &Features) -> bool {
        other.values.iter().zip(&self.lower).all(|(a, l)| a >= l)
            && other.sigmas.iter().zip(&self.upper).all(|(s, u)| s <= u)
    }

    fn negative_mass(&self) -> i64 {
        -self.lower.iter().sum::<i64>()
    }
}

/// Reduces a bounded set to its essential identities.
///
/// Keeps a window of current maximal candidates: a new identity is dropped
/// if it points into the window, and otherwise evicts every window entry
/// that points to it. By transitivity this ends with one member of each
/// maximal class in any visiting order. If `B ⤳ A` then no entry of `A` is
/// more negative than the matching entry of `B`, so visiting by increasing
/// negative mass, ties lexicographically, reaches every class at its
/// smallest member first and keeps the window small.
pub fn reduce_essential(full: &BoundedIdentitySet) -> BoundedIdentitySet {
    let divisors = ProblemSize::new(full.n()).map_or(Vec::new(), |s| s.divisors());
    let features: Vec<Features> = full.iter().map(|v| Features::new(v, &divisors)).collect();
    let mut order: Vec<usize> = (0..full.len()).collect();
    // `full` is lexicographically sorted, so a stable sort keeps ties in order
    order.sort_by_key(|&i| features[i].negative_mass());
    let mut window: Vec<usize> = Vec::new();
    for i in order {
        let f = &features[i];
        if window.iter().any(|&w| f.arrow_to(&features[w])) {
            continue;
        }
        window.retain(|&w| !features[w].arrow_to(f));
        window.push(i);
    }
    let rows = window.into_iter().map(|i| full.get(i).to_vec()).collect();
    BoundedIdentitySet::from_rows(full.n(), rows, true)
}

/// The removal sweep carried out literally: scan in reverse lexicographic
/// order, dropping `B` if some other identity still present has `B ⤳ A`,
/// and repeat until nothing changes. Quadratic; used as a reference.
pub fn reduce_by_sweep(full: &BoundedIdentitySet) -> BoundedIdentitySet {
    let divisors = ProblemSize::new(full.n()).map_or(Vec::new(), |s| s.divisors());
    let features: Vec<Features> = full.iter().map(|v| Features::new(v, &divisors)).collect();
    let mut alive = vec![true; full.len()];
    loop {
        let mut changed = false;
        for b in (0..full.len()).rev() {
            if !alive[b] {
                continue;
            }
            let dominated =
                (0..full.len()).any(|a| a != b && alive[a] && features[b].arrow_to(&features[a]));
            if dominated {
                alive[b] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let rows = (0..full.len())
        .filter(|&i| alive[i])
        .map(|i| full.get(i).to_vec())
        .collect();
    BoundedIdentitySet::from_rows(full.n(), rows, true)
}

/// The essential identities for `n`.
pub fn essential_identities(n: usize) -> Result<BoundedIdentitySet> {
    Ok(reduce_essential(&enumerate_bounded_identities(n)?))
}

/// For each identity removed from `full`, one surviving identity of
/// `essential` it points to.
pub fn removal_witnesses(
    full: &BoundedIdentitySet,
    essential: &BoundedIdentitySet,
) -> Vec<(IdentityVector, IdentityVector)> {
    let divisors = ProblemSize::new(full.n()).map_or(Vec::new(), |s| s.divisors());
    let kept: Vec<Features> = essential
        .iter()
        .map(|v| Features::new(v, &divisors))
        .collect();
    full.iter()
        .filter(|b| !essential.contains(&widen(b)))
        .filter_map(|b| {
            let fb = Features::new(b, &divisors);
            kept.iter()
                .position(|a| fb.arrow_to(a))
                .map(|k| (widen(b), widen(essential.get(k))))
        })
        .collect()
}
