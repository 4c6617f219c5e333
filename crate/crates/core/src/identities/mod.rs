//! The vector space of identities: rational vectors `(a_1..a_m)` with
//! `sum a_j sin(j pi / n) = 0` and `sum a_j = 0`.
//!
//! The sine condition is decided exactly. With `z = exp(i pi / n)` it is
//! equivalent to `P(z) = 0` for `P(x) = sum_j a_j (x^(m+j) - x^(m-j))`, and
//! since the cyclotomic polynomial `Phi_2n` is the minimal polynomial of
//! `z`, to `P mod Phi_2n` vanishing identically.

pub mod linalg;
pub mod poly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::chord::{Multiset, ProblemSize};
use crate::error::{Error, Result};
use linalg::Row;
pub use poly::{IntPolynomial, LinearForm, LinearFormPolynomial};

/// An integer identity vector `(a_1, ..., a_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdentityVector(pub Vec<i64>);

impl Deref for IdentityVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for IdentityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Euler's totient.
pub fn totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `max(0, m - phi(2n)/2 - 1)`.
pub fn dimension_formula(n: usize) -> usize {
    (n / 2).saturating_sub(totient(2 * n) / 2 + 1)
}

/// The cyclotomic polynomial `Phi_k`, from `x^k - 1 = prod_{d | k} Phi_d`.
pub fn cyclotomic(k: usize) -> IntPolynomial {
    assert!(k >= 1);
    let mut cache: BTreeMap<usize, IntPolynomial> = BTreeMap::new();
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        let mut p = IntPolynomial::x_pow_minus_one(d);
        for (e, phi) in cache.iter() {
            if d % e == 0 {
                let (q, r) = p.div_rem_monic(phi);
                debug_assert!(r.is_zero());
                p = q;
            }
        }
        cache.insert(d, p);
    }
    cache.remove(&k).expect("k divides itself")
}

/// Coefficient constraints of the remainder `R_n`, lowest degree first,
/// followed by the all-ones row for `sum a_j = 0`. Columns are `a_1..a_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub n: usize,
    pub rows: Vec<Row>,
}

impl LinearSystem {
    pub fn m(&self) -> usize {
        self.n / 2
    }

    /// The remainder rows only (without the all-ones row).
    pub fn remainder_rows(&self) -> &[Row] {
        &self.rows[..self.rows.len() - 1]
    }

    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_i64().expect("small entries"))
                    .collect()
            })
            .collect()
    }
}

pub fn build_remainder_system(n: usize) -> Result<LinearSystem> {
    let size = ProblemSize::new(n)?;
    let m = size.m();
    let phi = cyclotomic(2 * n);
    let sine = LinearFormPolynomial::sine_polynomial(m);
    let mut rows: Vec<Row> = sine.rem_monic(&phi).into_iter().map(|f| f.0).collect();
    rows.push(vec![BigInt::one(); m]);
    Ok(LinearSystem { n, rows })
}

/// Normalized basis of the identity space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityBasis {
    pub n: usize,
    pub vectors: Vec<IdentityVector>,
}

impl IdentityBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let basis: Vec<Row> = self.vectors.iter().map(|b| big(b)).collect();
        linalg::in_span(&basis, &big(v))
    }
}

pub fn identity_basis(n: usize) -> Result<IdentityBasis> {
    let system = build_remainder_system(n)?;
    let vectors = linalg::nullspace_basis(&system.rows, system.m())
        .into_iter()
        .map(|row| IdentityVector(small(&row)))
        .collect();
    Ok(IdentityBasis { n, vectors })
}

fn big(v: &[i64]) -> Row {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn small(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| x.to_i64().expect("identity entries fit in i64"))
        .collect()
}

/// `true` iff `P_n` built from `v` vanishes modulo `Phi_2n`.
fn satisfies_sine_equation(v: &[BigInt], n: usize) -> bool {
    let m = n / 2;
    let mut coeffs = vec![BigInt::zero(); 2 * m + 1];
    for (j, a) in v.iter().enumerate() {
        coeffs[m + j + 1] += a;
        coeffs[m - j - 1] -= a;
    }
    IntPolynomial::new(coeffs)
        .rem_monic(&cyclotomic(2 * n))
        .is_zero()
}

/// Exact identity test for a rational vector of length `m`.
pub fn is_identity(v: &[BigRational], n: usize) -> bool {
    if v.len() != n / 2 {
        return false;
    }
    let denom = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: Row = v
        .iter()
        .map(|x| (x * BigRational::from_integer(denom.clone())).to_integer())
        .collect();
    scaled.iter().sum::<BigInt>().is_zero() && satisfies_sine_equation(&scaled, n)
}

pub fn is_integer_identity(v: &[i64], n: usize) -> bool {
    v.len() == n / 2 && v.iter().sum::<i64>() == 0 && satisfies_sine_equation(&big(v), n)
}

/// Whether two multisets of `M_n` give paths of equal Euclidean length.
pub fn same_length(a: &Multiset, b: &Multiset) -> bool {
    assert_eq!(a.n(), b.n());
    let diff: Vec<i64> = b
        .counts()
        .iter()
        .zip(a.counts())
        .map(|(&x, &y)| x as i64 - y as i64)
        .collect();
    assert_eq!(diff.iter().sum::<i64>(), 0);
    is_integer_identity(&diff, a.n())
}

/// Cached remainder system for repeated exact identity tests.
#[derive(Debug, Clone)]
pub struct IdentityOracle {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl IdentityOracle {
    pub fn new(n: usize) -> Result<Self> {
        let system = build_remainder_system(n)?;
        let rows = system.to_i64();
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self, v: &[i64]) -> bool {
        self.rows
            .iter()
            .all(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() == 0)
    }

    /// Remainder coefficients of `P_n` for the multiset; two multisets have
    /// equal length iff their keys are equal.
    pub fn length_key(&self, counts: &[u32]) -> Vec<i64> {
        self.rows[..self.rows.len() - 1]
            .iter()
            .map(|r| r.iter().zip(counts).map(|(a, &b)| a * b as i64).sum())
            .collect()
    }

    pub fn same_length(&self, a: &[u32], b: &[u32]) -> bool {
        let diff: Vec<i64> = b
            .iter()
            .zip(a)
            .map(|(&x, &y)| x as i64 - y as i64)
            .collect();
        self.is_identity(&diff)
    }
}

fn small_prime_factors(n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Multiplier `C(x)` for the base shapes `2p`, `p^2` and `pq`.
fn improper_multiplier(n: usize) -> Option<IntPolynomial> {
    let f = small_prime_factors(n);
    let xk = |k: usize| IntPolynomial::monomial(k, BigInt::one());
    match f.as_slice() {
        [(2, 1), (p, 1)] if *p > 2 => Some(&xk(2) - &IntPolynomial::one()),
        [(p, 2)] if *p > 2 => {
            let t = p - 1;
            Some(&xk(t / 2 - 1) - &xk(t / 2 + 1))
        }
        [(p, 1), (q, 1)] if *p > 2 => {
            let x_minus_1 = &xk(1) - &IntPolynomial::one();
            let xp_plus_1 = &xk(*p) + &IntPolynomial::one();
            Some(&(&xk((q - 3) / 2) * &x_minus_1) * &xp_plus_1)
        }
        _ => None,
    }
}

/// A vector satisfying the sine equation but with `sum a_j = +-1`.
///
/// Built directly for `n = 2p`, `p^2` or `pq` (odd primes `p < q`) by
/// reading `a_j` off the coefficient of `x^(m+j)` in `C(x) Phi_2n(x)`; for
/// a multiple `n = k n0` of such a base size the base vector is spread out
/// as `a'_(kj) = a_j`.
pub fn improper_identity(n: usize) -> Result<IdentityVector> {
    ProblemSize::new(n)?;
    let (base, multiplier) = (6..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find_map(|d| improper_multiplier(d).map(|c| (d, c)))
        .ok_or(Error::UnsupportedShape(n))?;
    let m0 = base / 2;
    let product = &multiplier * &cyclotomic(2 * base);
    debug_assert!(product.is_antipalindromic(2 * m0));
    let base_vec: Vec<i64> = (1..=m0)
        .map(|j| product.coeff(m0 + j).to_i64().expect("small"))
        .collect();
    Ok(IdentityVector(spread(&base_vec, n / base, n / 2)))
}

/// `a'_(kj) = a_j`, zero elsewhere, padded to length `m`.
pub fn spread(v: &[i64], k: usize, m: usize) -> Vec<i64> {
    let mut out = vec![0; m];
    for (j, &a) in v.iter().enumerate() {
        out[k * (j + 1) - 1] = a;
    }
    out
}

/// Whether the sine polynomial of `v` is antipalindromic of degree `2m`.
pub fn sine_polynomial_antipalindromic(v: &[i64]) -> bool {
    let m = v.len();
    let a = big(v);
    LinearFormPolynomial::sine_polynomial(m)
        .eval_forms(&a)
        .is_antipalindromic(2 * m)
}

pub fn satisfies_sine_equation_i64(v: &[i64], n: usize) -> bool {
    satisfies_sine_equation(&big(v), n)
}

/// Sum of absolute values; handy for L1 bounds.
pub fn l1(v: &[i64]) -> u64 {
    v.iter().map(|x| x.unsigned_abs()).sum()
}

/// `sign(first nonzero)`.
pub fn leading_sign(v: &[i64]) -> i64 {
    v.iter().find(|x| **x != 0).map_or(0, |x| x.signum())
}
