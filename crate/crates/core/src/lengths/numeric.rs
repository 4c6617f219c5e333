//! Distinct lengths by sorting high-precision approximations.
//!
//! Floating values only propose which neighbours might be equal; every
//! adjacent pair in sorted order is then decided exactly, and a numeric
//! verdict that disagrees with the exact one is an error.

use num_bigint::{BigInt, BigUint};

use crate::enumerate::{iter_admissible, EnumerationRange};
use crate::error::{Error, Result};
use crate::identities::IdentityOracle;
use crate::numeric::ChordLengths;

/// Largest `n` for which all admissible lengths are materialized.
pub const NUMERIC_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericLengthCount {
    pub distinct: BigUint,
    /// adjacent pairs within the error bound, confirmed equal
    pub grouped_pairs: u64,
    /// adjacent pairs outside the error bound, confirmed unequal
    pub separated_pairs: u64,
}

/// Number of distinct admissible path lengths for `n`, from lengths
/// computed with `precision_bits` fractional bits.
pub fn count_distinct_lengths_numeric(n: usize, precision_bits: u32) -> Result<NumericLengthCount> {
    if n > NUMERIC_LIMIT {
        return Err(Error::TooLarge {
            what: "numeric length count",
            n,
            limit: NUMERIC_LIMIT,
        });
    }
    let oracle = IdentityOracle::new(n)?;
    let chords = ChordLengths::new(n, precision_bits);
    let m = n / 2;
    let mut counts: Vec<u8> = Vec::new();
    let mut values: Vec<(BigInt, u32)> = Vec::new();
    iter_admissible(EnumerationRange::full(n)?)?.for_each_counts(|c| {
        let index = values.len() as u32;
        values.push((chords.combine(c).mantissa, index));
        counts.extend(c.iter().map(|&x| x as u8));
    });
    values.sort_unstable();
    let row = |i: u32| -> Vec<u32> {
        let start = i as usize * m;
        counts[start..start + m].iter().map(|&x| x as u32).collect()
    };
    // each length carries at most `error_units` of rounding error
    let tolerance = BigInt::from(2 * ChordLengths::error_units((n - 1) as u64));
    let mut report = NumericLengthCount {
        distinct: BigUint::from(!values.is_empty() as u8),
        grouped_pairs: 0,
        separated_pairs: 0,
    };
    for pair in values.windows(2) {
        let (x, i) = &pair[0];
        let (y, j) = &pair[1];
        let gap = y - x;
        let close = gap <= tolerance;
        let (a, b) = (row(*i), row(*j));
        match (close, oracle.same_length(&a, &b)) {
            (true, true) => report.grouped_pairs += 1,
            (false, false) => {
                report.separated_pairs += 1;
                report.distinct += 1u8;
            }
            (true, false) => {
                let bits = chords.precision_bits();
                return Err(Error::InsufficientPrecision {
                    precision_bits: bits,
                    suggested_bits: 2 * bits,
                });
            }
            (false, true) => {
                return Err(Error::NumericMismatch(format!(
                    "{a:?} and {b:?} are exactly equal but numerically apart"
                )));
            }
        }
    }
    Ok(report)
}
