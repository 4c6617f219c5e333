//! Fixed-point high-precision evaluation of chord and path lengths.
//!
//! Values are big integers scaled by `2^bits`. Only `pi` and `sin` on
//! `[0, pi/2]` are needed, both by plain series summation with guard bits.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::chord::Multiset;

const GUARD_BITS: u32 = 32;

/// A real number `mantissa / 2^frac_bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedReal {
    pub mantissa: BigInt,
    pub frac_bits: u32,
}

impl FixedReal {
    pub fn to_f64(&self) -> f64 {
        let shift = self.frac_bits.saturating_sub(60);
        let top = (&self.mantissa >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(-((self.frac_bits - shift) as i32))
    }

    /// `log2 |x|`, or `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.mantissa.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.mantissa.abs().bits() as f64;
        bits - self.frac_bits as f64
    }
}

impl PartialOrd for FixedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.frac_bits == other.frac_bits {
            return Some(self.mantissa.cmp(&other.mantissa));
        }
        let (a, b) = if self.frac_bits < other.frac_bits {
            (
                &self.mantissa << (other.frac_bits - self.frac_bits),
                other.mantissa.clone(),
            )
        } else {
            (
                self.mantissa.clone(),
                &other.mantissa << (self.frac_bits - other.frac_bits),
            )
        };
        Some(a.cmp(&b))
    }
}

fn atan_inv(x: u64, bits: u32) -> BigInt {
    // atan(1/x) = sum (-1)^k / ((2k + 1) x^(2k + 1))
    let one = BigInt::from(1) << bits;
    let x2 = BigInt::from(x * x);
    let mut power = &one / x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// `pi * 2^bits`, accurate to a few units in the last place.
pub fn pi_fixed(bits: u32) -> BigInt {
    let work = bits + GUARD_BITS;
    let pi = atan_inv(5, work) * 16 - atan_inv(239, work) * 4;
    pi >> GUARD_BITS
}

/// `sin(theta) * 2^bits` for `theta` given at the same scale, `|theta| <= 2`.
fn sin_fixed(theta: &BigInt, bits: u32) -> BigInt {
    let theta2 = (theta * theta) >> bits;
    let mut term = theta.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    while !term.is_zero() {
        sum += &term;
        term = -((&term * &theta2) >> bits) / ((k + 1) * (k + 2));
        k += 2;
    }
    sum
}

/// Chord lengths `2 sin(j pi / n)` for `j = 1..=m` on a unit circle.
#[derive(Debug, Clone)]
pub struct ChordLengths {
    n: usize,
    bits: u32,
    lengths: Vec<BigInt>,
}

impl ChordLengths {
    pub fn new(n: usize, precision_bits: u32) -> Self {
        let bits = precision_bits.max(53);
        let work = bits + GUARD_BITS;
        let pi = pi_fixed(work);
        let lengths = (1..=n / 2)
            .map(|j| {
                let theta = (&pi * j) / n;
                (sin_fixed(&theta, work) * 2) >> GUARD_BITS
            })
            .collect();
        Self { n, bits, lengths }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn precision_bits(&self) -> u32 {
        self.bits
    }

    /// Scaled chord lengths, one per type.
    pub fn scaled(&self) -> &[BigInt] {
        &self.lengths
    }

    pub fn chord(&self, t: usize) -> FixedReal {
        FixedReal {
            mantissa: self.lengths[t - 1].clone(),
            frac_bits: self.bits,
        }
    }

    /// `sum_j weights[j] * 2 sin(j pi / n)`.
    pub fn combine<W: Into<BigInt> + Copy>(&self, weights: &[W]) -> FixedReal {
        let mantissa = weights
            .iter()
            .zip(&self.lengths)
            .map(|(&w, c)| w.into() * c)
            .sum();
        FixedReal {
            mantissa,
            frac_bits: self.bits,
        }
    }

    /// Upper bound on the absolute error of `combine`, in units of
    /// `2^-bits`, given the L1 norm of the weights.
    pub fn error_units(weight_l1: u64) -> u64 {
        2 * weight_l1 + 2
    }
}

/// Euclidean length of any path with multiset `multiset`, on a unit circle.
pub fn path_length_numeric(multiset: &Multiset, precision_bits: u32) -> FixedReal {
    ChordLengths::new(multiset.n(), precision_bits).combine(multiset.counts())
}
