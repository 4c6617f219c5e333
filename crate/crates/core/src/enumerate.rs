//! Counting and streaming enumeration of `M_n` and the admissible subset
//! `A_n`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::chord::{Multiset, ProblemSize};
use crate::error::{Error, Result};
use crate::rank::MultisetRanker;

/// Exact binomial coefficient.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// `|M_n| = C(n + m - 2, m - 1)`.
pub fn count_all(n: usize) -> Result<BigUint> {
    let size = ProblemSize::new(n)?;
    Ok(binomial((n + size.m() - 2) as u64, (size.m() - 1) as u64))
}

/// `|A_n|` by inclusion-exclusion over sets of violated divisor bounds.
///
/// Violating the bound for `d` means all but at most `d - 2` chords sit at
/// positions divisible by `d`. For a set `S` of violated divisors, the
/// positions divisible by `lcm(S)` are unconstrained and are counted with a
/// single binomial; the remaining positions carry only a few chords and are
/// counted by a sparse dynamic program over the per-divisor spillover.
pub fn count_admissible(n: usize) -> Result<BigUint> {
    let size = ProblemSize::new(n)?;
    let m = size.m();
    let divisors = size.divisors();
    let mut total = BigInt::zero();

    for mask in 0u32..(1 << divisors.len()) {
        let chosen: Vec<usize> = divisors
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &d)| d)
            .collect();
        let lcm = chosen.iter().fold(1usize, |acc, &d| acc.lcm(&d));
        let free = m / lcm;
        let caps: Vec<u32> = chosen.iter().map(|&d| (d - 2) as u32).collect();
        let max_spill = caps.iter().sum::<u32>().min((n - 1) as u32);

        // state: (chords placed on constrained positions, spill per divisor)
        let mut states: HashMap<(u32, Vec<u32>), u128> = HashMap::new();
        states.insert((0, vec![0; chosen.len()]), 1);
        for j in (1..=m).filter(|j| j % lcm != 0) {
            let hits: Vec<bool> = chosen.iter().map(|&d| j % d != 0).collect();
            let mut next: HashMap<(u32, Vec<u32>), u128> = HashMap::with_capacity(states.len());
            for ((placed, spill), ways) in states {
                for v in 0..=(max_spill - placed) {
                    let mut s = spill.clone();
                    let mut ok = true;
                    for (k, hit) in hits.iter().enumerate() {
                        if *hit {
                            s[k] += v;
                            if s[k] > caps[k] {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        break;
                    }
                    *next.entry((placed + v, s)).or_insert(0) += ways;
                }
            }
            states = next;
        }

        let mut term = BigInt::zero();
        for ((placed, _), ways) in states {
            let rest = (n - 1) as u64 - placed as u64;
            let completions = match free {
                0 => {
                    if rest == 0 {
                        BigUint::one()
                    } else {
                        BigUint::zero()
                    }
                }
                f => binomial(rest + f as u64 - 1, f as u64 - 1),
            };
            term += BigInt::from(completions * ways);
        }
        if chosen.len().is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total
        .to_biguint()
        .expect("inclusion-exclusion total is nonnegative"))
}

/// `|A_n|` by streaming the pruned admissible enumeration.
pub fn count_admissible_by_filter(n: usize) -> Result<u128> {
    Ok(iter_admissible(EnumerationRange::full(n)?)?.count() as u128)
}

/// Half-open rank range `[from_rank, to_rank)` of `M_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationRange {
    pub n: usize,
    pub from_rank: u128,
    pub to_rank: u128,
}

impl EnumerationRange {
    pub fn new(n: usize, from_rank: u128, to_rank: u128) -> Result<Self> {
        let total = MultisetRanker::new(n)?.total();
        if from_rank > to_rank || to_rank > total {
            return Err(Error::InvalidRange {
                from: from_rank,
                to: to_rank,
                total,
            });
        }
        Ok(Self {
            n,
            from_rank,
            to_rank,
        })
    }

    pub fn full(n: usize) -> Result<Self> {
        let total = MultisetRanker::new(n)?.total();
        Ok(Self {
            n,
            from_rank: 0,
            to_rank: total,
        })
    }

    pub fn len(&self) -> u128 {
        self.to_rank - self.from_rank
    }

    pub fn is_empty(&self) -> bool {
        self.from_rank == self.to_rank
    }

    /// Splits into `parts` contiguous ranges of near-equal size.
    pub fn split(&self, parts: usize) -> Vec<EnumerationRange> {
        let parts = parts.max(1) as u128;
        let len = self.len();
        (0..parts)
            .map(|i| EnumerationRange {
                n: self.n,
                from_rank: self.from_rank + len * i / parts,
                to_rank: self.from_rank + len * (i + 1) / parts,
            })
            .filter(|r| !r.is_empty())
            .collect()
    }
}

/// Pull-based stream of `(rank, multiset)` for the admissible multisets in
/// a rank range, in increasing rank order.
///
/// Works on the counts as an odometer: position `i` is bumped only while
/// the partial divisor sums of the prefix stay within their bounds, so an
/// entire lexicographic subtree is skipped as soon as its prefix violates a
/// bound.
#[derive(Debug, Clone)]
pub struct AdmissibleIter {
    ranker: MultisetRanker,
    n: usize,
    to_rank: u128,
    /// for each position (0-based), the divisor indices dividing `j + 1`
    hits: Vec<Vec<usize>>,
    bounds: Vec<u32>,
    counts: Vec<u32>,
    /// `partial[i][k]`: sum for divisor `k` over positions `< i`
    partial: Vec<Vec<u32>>,
    pending: bool,
    done: bool,
}

pub fn iter_admissible(range: EnumerationRange) -> Result<AdmissibleIter> {
    AdmissibleIter::new(range)
}

impl AdmissibleIter {
    pub fn new(range: EnumerationRange) -> Result<Self> {
        let ranker = MultisetRanker::new(range.n)?;
        let size = ranker.size();
        let m = size.m();
        let divisors = size.divisors();
        let hits = (1..=m)
            .map(|j| {
                divisors
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| j % d == 0)
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        let bounds = divisors.iter().map(|&d| (range.n - d) as u32).collect();
        let mut it = Self {
            n: range.n,
            to_rank: range.to_rank,
            hits,
            bounds,
            counts: Vec::new(),
            partial: vec![vec![0; divisors.len()]; m + 1],
            pending: false,
            done: range.is_empty(),
            ranker,
        };
        if !it.done {
            let start = it.ranker.unrank(range.from_rank)?;
            it.counts = start.into_counts();
            it.seek_from(0);
        }
        Ok(it)
    }

    /// Recomputes prefix sums from position `pos` onwards and moves the
    /// odometer to the first admissible multiset `>=` the current counts.
    fn seek_from(&mut self, pos: usize) {
        let m = self.counts.len();
        let mut i = pos;
        loop {
            // extend prefix sums through position i, checking bounds
            let mut bad = None;
            while i < m {
                let (head, tail) = self.partial.split_at_mut(i + 1);
                let cur = &head[i];
                let nxt = &mut tail[0];
                nxt.copy_from_slice(cur);
                let c = self.counts[i];
                let mut ok = true;
                for &k in &self.hits[i] {
                    nxt[k] += c;
                    if nxt[k] > self.bounds[k] {
                        ok = false;
                    }
                }
                if !ok {
                    bad = Some(i);
                    break;
                }
                i += 1;
            }
            match bad {
                None => {
                    self.pending = true;
                    return;
                }
                Some(b) => match self.bump(b) {
                    Some(p) => i = p,
                    None => {
                        self.done = true;
                        return;
                    }
                },
            }
        }
    }

    /// Moves to the lexicographically next multiset whose prefix differs
    /// at a position `< limit`, i.e. skips every multiset sharing the
    /// prefix `counts[..limit]`. Bumping position `limit` itself is never
    /// useful when it is the violating position, since a larger count there
    /// only grows the violated sum. Returns the position that changed.
    fn bump(&mut self, limit: usize) -> Option<usize> {
        let m = self.counts.len();
        let mut suffix: u32 = self.counts[limit..].iter().sum();
        let mut i = limit;
        while i > 0 {
            i -= 1;
            if suffix > 0 {
                self.counts[i] += 1;
                suffix -= 1;
                for c in &mut self.counts[i + 1..m - 1] {
                    *c = 0;
                }
                self.counts[m - 1] = suffix;
                return Some(i);
            }
            suffix += self.counts[i];
        }
        None
    }
}

impl AdmissibleIter {
    /// Advances without allocating; returns the rank and counts of the next
    /// admissible multiset.
    pub fn next_counts(&mut self) -> Option<(u128, &[u32])> {
        if self.done || !self.pending {
            return None;
        }
        let rank = self.ranker.rank_counts(&self.counts);
        if rank >= self.to_rank {
            self.done = true;
            return None;
        }
        self.pending = false;
        Some((rank, &self.counts))
    }

    fn advance(&mut self) {
        // smallest change is at position m - 2
        let m = self.counts.len();
        match self.bump(m - 1) {
            Some(p) => self.seek_from(p),
            None => self.done = true,
        }
    }

    /// Calls `f` on the counts of every remaining multiset in the range.
    pub fn for_each_counts(mut self, mut f: impl FnMut(&[u32])) {
        while let Some((_, counts)) = self.next_counts() {
            f(counts);
            self.advance();
        }
    }
}

impl Iterator for AdmissibleIter {
    type Item = (u128, Multiset);

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.n;
        let (rank, counts) = self.next_counts()?;
        let out = Multiset::from_counts_unchecked(n, counts.to_vec());
        self.advance();
        Some((rank, out))
    }
}

/// One canonical representative per coprime-action orbit of `A_n`.
pub fn iter_canonical(n: usize) -> Result<impl Iterator<Item = Multiset>> {
    Ok(iter_admissible(EnumerationRange::full(n)?)?
        .map(|(_, m)| m)
        .filter(|m| m.is_canonical()))
}
