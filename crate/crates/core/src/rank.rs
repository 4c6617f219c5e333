//! Lexicographic ranking of the multisets of `M_n`.
//!
//! A multiset is a composition of `n - 1` into `m` ordered parts. The
//! number of compositions of `s` into `k` parts is `C(s + k - 1, k - 1)`,
//! and the number of completions that put fewer than `v` at the current
//! position collapses to a difference of two binomials.

use crate::chord::{Multiset, ProblemSize};
use crate::error::{Error, Result};

/// Pascal triangle in `u128`, indexed `[a][b]` for `b <= a`.
#[derive(Debug, Clone)]
pub struct Binomials {
    rows: Vec<Vec<u128>>,
}

impl Binomials {
    pub fn new(max: usize) -> Option<Self> {
        let mut rows: Vec<Vec<u128>> = Vec::with_capacity(max + 1);
        for a in 0..=max {
            let mut row = vec![1u128; a + 1];
            for b in 1..a {
                row[b] = rows[a - 1][b - 1].checked_add(rows[a - 1][b])?;
            }
            rows.push(row);
        }
        Some(Self { rows })
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u128 {
        if b > a {
            0
        } else {
            self.rows[a][b]
        }
    }

    /// Compositions of `s` into `parts` nonnegative parts.
    #[inline]
    pub fn compositions(&self, s: usize, parts: usize) -> u128 {
        match parts {
            0 => (s == 0) as u128,
            _ => self.get(s + parts - 1, parts - 1),
        }
    }
}

/// Bijection between `M_n` in lexicographic order and `0..|M_n|`.
#[derive(Debug, Clone)]
pub struct MultisetRanker {
    size: ProblemSize,
    binomials: Binomials,
    total: u128,
}

impl MultisetRanker {
    pub fn new(n: usize) -> Result<Self> {
        let size = ProblemSize::new(n)?;
        let max = n + size.m();
        let binomials = Binomials::new(max).ok_or(Error::TooLarge {
            what: "128-bit ranking",
            n,
            limit: 100,
        })?;
        let total = binomials.compositions(n - 1, size.m());
        Ok(Self {
            size,
            binomials,
            total,
        })
    }

    pub fn size(&self) -> ProblemSize {
        self.size
    }

    /// `|M_n|`.
    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn binomials(&self) -> &Binomials {
        &self.binomials
    }

    pub fn rank(&self, multiset: &Multiset) -> u128 {
        debug_assert_eq!(multiset.n(), self.size.n());
        self.rank_counts(multiset.counts())
    }

    pub(crate) fn rank_counts(&self, counts: &[u32]) -> u128 {
        let m = counts.len();
        let mut rem = self.size.n() - 1;
        let mut r = 0u128;
        for (i, &c) in counts.iter().enumerate().take(m - 1) {
            let c = c as usize;
            let k = m - 1 - i;
            // sum over v < c of compositions(rem - v, k)
            r += self.binomials.get(rem + k, k) - self.binomials.get(rem - c + k, k);
            rem -= c;
        }
        r
    }

    pub fn unrank(&self, rank: u128) -> Result<Multiset> {
        if rank >= self.total {
            return Err(Error::RankOutOfRange {
                rank,
                total: self.total,
            });
        }
        let m = self.size.m();
        let mut counts = vec![0u32; m];
        let mut rem = self.size.n() - 1;
        let mut r = rank;
        for (i, slot) in counts.iter_mut().enumerate().take(m - 1) {
            let k = m - 1 - i;
            let mut v = 0;
            loop {
                let block = self.binomials.compositions(rem - v, k);
                if r < block {
                    break;
                }
                r -= block;
                v += 1;
            }
            *slot = v as u32;
            rem -= v;
        }
        counts[m - 1] = rem as u32;
        Ok(Multiset::from_counts_unchecked(self.size.n(), counts))
    }
}
