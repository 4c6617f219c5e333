//! Chord types, multisets of chord types, paths, and the divisor-sum
//! admissibility condition.
//!
//! Points on the circle are numbered `0..n`. Chord types run over `1..=m`
//! with `m = n / 2`, and multiset positions are 1-based so that `count(t)`
//! is the number of chords of type `t`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Number of points `n` together with the number of chord types `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemSize {
    n: usize,
    m: usize,
}

impl ProblemSize {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize(n));
        }
        Ok(Self { n, m: n / 2 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Divisors `d` of `n` with `2 <= d <= m`: the ones that constrain
    /// admissibility. `d = 1` always holds and larger divisors have no
    /// positions.
    pub fn divisors(&self) -> Vec<usize> {
        (2..=self.m).filter(|d| self.n.is_multiple_of(*d)).collect()
    }

    /// Multipliers `k` in `1..=m` coprime to `n`. `k` and `n - k` act
    /// identically on chord types, so the upper half is omitted.
    pub fn units(&self) -> Vec<usize> {
        (1..=self.m).filter(|k| k.gcd(&self.n) == 1).collect()
    }

    /// Folds a residue modulo `n` into a chord type.
    #[inline]
    pub fn fold(&self, x: usize) -> usize {
        let x = x % self.n;
        x.min(self.n - x)
    }
}

/// Chord type between points `i` and `j`: `min(|i - j|, n - |i - j|)`.
pub fn chord_type(i: usize, j: usize, n: usize) -> Result<usize> {
    if i == j || i >= n || j >= n {
        return Err(Error::InvalidChord { i, j, n });
    }
    let diff = i.abs_diff(j);
    Ok(diff.min(n - diff))
}

/// Sum of the entries at 1-based positions divisible by `d`.
pub fn sigma_d<T>(entries: &[T], d: usize) -> Result<T>
where
    T: Copy + std::iter::Sum<T>,
{
    if d < 2 || d > entries.len() {
        return Err(Error::DivisorOutOfRange {
            d,
            max: entries.len(),
        });
    }
    Ok(entries.iter().skip(d - 1).step_by(d).copied().sum())
}

/// A multiset of `n - 1` chord types, stored as counts `[l_1, ..., l_m]`.
///
/// The derived ordering is lexicographic on the counts, smallest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    counts: Vec<u32>,
    n: usize,
}

impl Multiset {
    pub fn new(n: usize, counts: Vec<u32>) -> Result<Self> {
        let size = ProblemSize::new(n)?;
        if counts.len() != size.m() {
            return Err(Error::InvalidMultiset(format!(
                "expected {} counts for n = {n}, got {}",
                size.m(),
                counts.len()
            )));
        }
        let total: u64 = counts.iter().map(|&c| c as u64).sum();
        if total != (n - 1) as u64 {
            return Err(Error::InvalidMultiset(format!(
                "counts sum to {total}, expected n - 1 = {}",
                n - 1
            )));
        }
        Ok(Self { counts, n })
    }

    pub(crate) fn from_counts_unchecked(n: usize, counts: Vec<u32>) -> Self {
        debug_assert_eq!(counts.len(), n / 2);
        debug_assert_eq!(counts.iter().sum::<u32>() as usize, n - 1);
        Self { counts, n }
    }

    /// Parses the comma-separated text form, e.g. `"2,3,1,2"`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let counts = text
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidMultiset(format!("bad count {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, counts)
    }

    /// `[n - 1, 0, ..., 0]`, the multiset of the path `0, 1, ..., n - 1`.
    pub fn monotone(n: usize) -> Result<Self> {
        let size = ProblemSize::new(n)?;
        let mut counts = vec![0; size.m()];
        counts[0] = (n - 1) as u32;
        Ok(Self { counts, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.counts.len()
    }

    pub fn size(&self) -> ProblemSize {
        ProblemSize {
            n: self.n,
            m: self.counts.len(),
        }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<u32> {
        self.counts
    }

    /// Number of chords of type `t` (1-based).
    pub fn count(&self, t: usize) -> u32 {
        self.counts[t - 1]
    }

    pub fn sigma(&self, d: usize) -> Result<u32> {
        sigma_d(&self.counts, d)
    }

    /// The smallest divisor `d` of `n` with `sigma_d > n - d`, if any.
    pub fn violated_divisor(&self) -> Option<usize> {
        violated_divisor(self.n, &self.counts)
    }

    pub fn is_admissible(&self) -> bool {
        self.violated_divisor().is_none()
    }

    /// The image `kM` under multiplication of chord types by a unit `k`.
    pub fn coprime_transform(&self, k: usize) -> Result<Self> {
        let size = self.size();
        if k.gcd(&self.n) != 1 {
            return Err(Error::NotCoprime { k, n: self.n });
        }
        let mut counts = vec![0; size.m()];
        for (j, &c) in self.counts.iter().enumerate() {
            counts[size.fold(k * (j + 1)) - 1] += c;
        }
        Ok(Self { counts, n: self.n })
    }

    /// Every image `kM` for the units `k <= m` (duplicates included).
    pub fn orbit(&self) -> Vec<Self> {
        self.size()
            .units()
            .into_iter()
            .map(|k| self.coprime_transform(k).expect("unit"))
            .collect()
    }

    /// Lexicographically least element of the coprime-action orbit.
    pub fn canonical_rep(&self) -> Self {
        self.orbit().into_iter().min().expect("k = 1 is a unit")
    }

    pub fn is_canonical(&self) -> bool {
        let size = self.size();
        size.units().into_iter().skip(1).all(|k| {
            let image = self.coprime_transform(k).expect("unit");
            image >= *self
        })
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn is_admissible(multiset: &Multiset) -> bool {
    multiset.is_admissible()
}

pub(crate) fn violated_divisor(n: usize, counts: &[u32]) -> Option<usize> {
    let m = counts.len();
    (2..=m).filter(|d| n.is_multiple_of(*d)).find(|&d| {
        let s: u32 = counts.iter().skip(d - 1).step_by(d).sum();
        s as usize > n - d
    })
}

/// A Hamiltonian path: a permutation of the points `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    points: Vec<usize>,
}

impl Path {
    pub fn new(points: Vec<usize>) -> Result<Self> {
        let n = points.len();
        if n < 3 {
            return Err(Error::InvalidPath(format!(
                "need at least 3 points, got {n}"
            )));
        }
        let mut seen = vec![false; n];
        for &p in &points {
            if p >= n {
                return Err(Error::InvalidPath(format!("point {p} out of range 0..{n}")));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPath(format!("point {p} repeated")));
            }
        }
        Ok(Self { points })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let points = text
            .trim()
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPath(format!("bad point {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    pub fn monotone(n: usize) -> Result<Self> {
        Self::new((0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// The associated multiset of chord types.
    pub fn multiset(&self) -> Multiset {
        let n = self.n();
        let mut counts = vec![0u32; n / 2];
        for w in self.points.windows(2) {
            let t = chord_type(w[0], w[1], n).expect("validated path");
            counts[t - 1] += 1;
        }
        Multiset::from_counts_unchecked(n, counts)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Multiset of a path given as raw points, validating against `n`.
pub fn path_multiset(points: &[usize], n: usize) -> Result<Multiset> {
    if points.len() != n {
        return Err(Error::InvalidPath(format!(
            "expected {n} points, got {}",
            points.len()
        )));
    }
    Ok(Path::new(points.to_vec())?.multiset())
}
