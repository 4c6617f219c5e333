//! Counting distinct path lengths.
//!
//! Two admissible multisets give equal lengths iff their difference is an
//! identity, so the number of distinct lengths equals the number of
//! admissible multisets that are lexicographically least in their length
//! class. `M` fails to be least exactly when `M + A` is admissible for some
//! nonzero identity `A` whose first nonzero entry is negative; any such `A`
//! has positive part at most `n - 1`, which makes the relevant identities a
//! finite set that can be enumerated and then thinned out with the `⤳`
//! preorder.

pub mod lattice;
mod numeric;
mod reduce;

use std::cmp::Ordering;

use num_bigint::BigUint;

use crate::chord::{Multiset, ProblemSize};
use crate::enumerate::{count_admissible, iter_admissible, EnumerationRange};
use crate::error::Result;
use crate::identities::IdentityVector;

pub use lattice::{enumerate_short_vectors, in_lattice, integer_identity_lattice, lll_reduce};
pub use numeric::{count_distinct_lengths_numeric, NumericLengthCount, NUMERIC_LIMIT};
pub use reduce::{
    arrow, essential_identities, reduce_by_sweep, reduce_essential, removal_witnesses,
};

/// A set of bounded identities: first nonzero entry negative and positive
/// part at most `n - 1`, stored sorted lexicographically without
/// duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedIdentitySet {
    n: usize,
    m: usize,
    /// row-major, `m` entries per identity; entries are bounded by `n - 1`
    data: Vec<i8>,
    reduced: bool,
}

impl BoundedIdentitySet {
    fn from_rows(n: usize, mut rows: Vec<Vec<i8>>, reduced: bool) -> Self {
        rows.sort_unstable();
        rows.dedup();
        let m = n / 2;
        Self {
            n,
            m,
            data: rows.concat(),
            reduced,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.data.len().checked_div(self.m).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// `true` for the essential set, `false` for the full bounded set.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn get(&self, i: usize) -> &[i8] {
        &self.data[i * self.m..(i + 1) * self.m]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[i8]> + '_ {
        self.data.chunks_exact(self.m.max(1))
    }

    pub fn vectors(&self) -> Vec<IdentityVector> {
        self.iter().map(widen).collect()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.m || v.iter().any(|x| x.abs() > i8::MAX as i64) {
            return false;
        }
        let key: Vec<i8> = v.iter().map(|&x| x as i8).collect();
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(&key[..]) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return true,
            }
        }
        false
    }
}

pub(crate) fn widen(v: &[i8]) -> IdentityVector {
    IdentityVector(v.iter().map(|&x| x as i64).collect())
}

/// Sum of the positive entries.
pub fn positive_part(v: &[i64]) -> i64 {
    v.iter().filter(|&&x| x > 0).sum()
}

/// Every integer identity `A` with first nonzero entry negative and
/// positive part at most `n - 1`.
///
/// Exhaustive by the norm bound documented in [`lattice`]: the search
/// covers every lattice point with `|A|^2 <= 2 (n - 1)^2`.
pub fn enumerate_bounded_identities(n: usize) -> Result<BoundedIdentitySet> {
    let size = ProblemSize::new(n)?;
    let mut basis: Vec<Vec<i64>> = integer_identity_lattice(n)?
        .into_iter()
        .map(|v| v.0)
        .collect();
    lll_reduce(&mut basis);
    let bound = (n - 1) as i64;
    let mut rows = Vec::new();
    enumerate_short_vectors(&basis, 2 * bound * bound, |v| {
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) && positive_part(v) <= bound {
            rows.push(v.iter().map(|&x| x as i8).collect::<Vec<i8>>());
        }
    });
    Ok(BoundedIdentitySet::from_rows(size.n(), rows, false))
}

/// Whether `M + A` is admissible.
pub fn eliminates(a: &[i64], m: &Multiset) -> bool {
    let n = m.n();
    let counts: Option<Vec<u32>> = m
        .counts()
        .iter()
        .zip(a)
        .map(|(&c, &x)| u32::try_from(c as i64 + x).ok())
        .collect();
    counts.is_some_and(|c| Multiset::new(n, c).is_ok_and(|s| s.is_admissible()))
}

/// Precomputed elimination test against a fixed identity set.
pub(crate) struct Eliminator {
    m: usize,
    /// `n - d` per divisor
    bounds: Vec<i64>,
    divisors: Vec<usize>,
    identities: Vec<i64>,
    /// per identity, its divisor sums
    sigmas: Vec<i64>,
}

impl Eliminator {
    pub(crate) fn new(set: &BoundedIdentitySet) -> Self {
        let size = ProblemSize::new(set.n()).expect("valid set");
        let divisors = size.divisors();
        let identities: Vec<i64> = set.data.iter().map(|&x| x as i64).collect();
        let sigmas = set
            .iter()
            .flat_map(|a| {
                divisors
                    .iter()
                    .map(|&d| {
                        (d..=a.len())
                            .step_by(d)
                            .map(|j| a[j - 1] as i64)
                            .sum::<i64>()
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        Self {
            m: set.m(),
            bounds: divisors.iter().map(|&d| (set.n() - d) as i64).collect(),
            divisors,
            identities,
            sigmas,
        }
    }

    /// Whether some identity of the set eliminates the multiset.
    pub(crate) fn any(&self, counts: &[u32], sigma: &mut Vec<i64>) -> bool {
        sigma.clear();
        sigma.extend(self.divisors.iter().map(|&d| {
            (d..=counts.len())
                .step_by(d)
                .map(|j| counts[j - 1] as i64)
                .sum::<i64>()
        }));
        let k = self.divisors.len();
        self.identities
            .chunks_exact(self.m.max(1))
            .zip(self.sigmas.chunks(k.max(1)))
            .any(|(a, s)| {
                a.iter().zip(counts).all(|(&x, &c)| c as i64 + x >= 0)
                    && s.iter()
                        .zip(sigma.iter())
                        .zip(&self.bounds)
                        .all(|((&x, &y), &b)| x + y <= b)
            })
    }
}

/// Number of admissible multisets in `range` that no identity in `set`
/// eliminates.
pub fn count_minimal_in_range(set: &BoundedIdentitySet, range: EnumerationRange) -> Result<u64> {
    let elim = Eliminator::new(set);
    let mut sigma = Vec::new();
    let mut count = 0u64;
    iter_admissible(range)?.for_each_counts(|c| {
        if !elim.any(c, &mut sigma) {
            count += 1;
        }
    });
    Ok(count)
}

/// Counts minimal multisets over all of `A_n`, splitting the stream into
/// `workers` rank ranges scanned in parallel.
pub fn count_minimal(set: &BoundedIdentitySet, workers: usize) -> Result<u64> {
    let range = EnumerationRange::full(set.n())?;
    let parts = range.split(workers.max(1));
    std::thread::scope(|scope| {
        let handles: Vec<_> = parts
            .into_iter()
            .map(|r| scope.spawn(move || count_minimal_in_range(set, r)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .sum()
    })
}

/// The number of distinct lengths of admissible paths for `n`, i.e. of
/// Hamiltonian paths whenever every admissible multiset is realizable.
pub fn count_distinct_lengths(n: usize) -> Result<BigUint> {
    count_distinct_lengths_with(n, default_workers())
}

pub fn count_distinct_lengths_with(n: usize, workers: usize) -> Result<BigUint> {
    let essential = essential_identities(n)?;
    if essential.is_empty() {
        return count_admissible(n);
    }
    Ok(count_minimal(&essential, workers)?.into())
}

pub(crate) fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get())
}
