//! Realizing admissible multisets as Hamiltonian paths.

pub mod campaign;
pub mod checkpoint;
pub mod heuristic;
pub mod hillclimb;
pub mod lds;

use std::collections::BTreeSet;

use crate::chord::{Multiset, Path};
use crate::error::{Error, Result};

pub use campaign::{campaign, CampaignMethod, CampaignOptions, CampaignReport};
pub use checkpoint::CampaignCheckpoint;
pub use heuristic::{feasible_extensions, heuristic_order, Candidate, SearchState};
pub use hillclimb::{hillclimb, HillClimbConfig, HillClimbResult, HillClimber, Move};
pub use lds::{lds_backtrack, LdsConfig, LdsOutcome, LdsResult};

/// Checks a claimed realization from the raw point indices.
pub fn verify(points: &[usize], target: &Multiset) -> bool {
    let n = target.n();
    if points.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in points {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    let mut counts = vec![0u32; n / 2];
    for i in 1..n {
        let (a, b) = (points[i - 1], points[i]);
        let forward = (a + n - b) % n;
        let backward = n - forward;
        let t = if forward < backward {
            forward
        } else {
            backward
        };
        counts[t - 1] += 1;
    }
    counts == target.counts()
}

/// Largest `n` accepted by [`brute_force_realizable`].
pub const BRUTE_FORCE_LIMIT: usize = 9;

/// Multisets of all Hamiltonian paths on `n` points. Every path is a
/// rotation of one starting at point 0, so only those `(n - 1)!` are
/// generated.
pub fn brute_force_realizable(n: usize) -> Result<BTreeSet<Multiset>> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "brute-force realization",
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    crate::chord::ProblemSize::new(n)?;
    let mut rest: Vec<usize> = (1..n).collect();
    let mut out = BTreeSet::new();
    permute(&mut rest, 0, &mut |perm| {
        let mut points = Vec::with_capacity(n);
        points.push(0);
        points.extend_from_slice(perm);
        out.insert(Path::new(points).expect("permutation").multiset());
    });
    Ok(out)
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// The image of a path under `i -> k i mod n`, which realizes the
/// coprime transform of its multiset.
pub fn scale_path(path: &Path, k: usize) -> Result<Path> {
    let n = path.n();
    Path::new(path.points().iter().map(|&p| p * k % n).collect())
}
