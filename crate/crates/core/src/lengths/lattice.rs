//! Integer identity lattice, LLL reduction and exhaustive short-vector
//! enumeration.
//!
//! A bounded identity has positive part `<= n - 1`, and since its entries
//! sum to zero its negative part has the same mass. Each part contributes
//! at most the square of its mass to the squared norm, so every bounded
//! identity lies in the ball `|A|^2 <= 2 (n - 1)^2`. Enumerating all lattice
//! points in that ball (Fincke-Pohst over an LLL-reduced basis) and then
//! filtering exactly is therefore exhaustive.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::Result;
use crate::identities::{build_remainder_system, linalg, IdentityVector};

/// Basis of all integer identity vectors for `n`.
pub fn integer_identity_lattice(n: usize) -> Result<Vec<IdentityVector>> {
    let system = build_remainder_system(n)?;
    Ok(linalg::integer_kernel(&system.rows, system.m())
        .into_iter()
        .map(|row| {
            IdentityVector(
                row.iter()
                    .map(|x| x.to_i64().expect("kernel entries fit in i64"))
                    .collect(),
            )
        })
        .collect())
}

struct GramSchmidt {
    mu: Vec<Vec<BigRational>>,
    norms: Vec<BigRational>,
}

fn gram_schmidt(basis: &[Vec<i64>]) -> GramSchmidt {
    let k = basis.len();
    let rows: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|b| {
            b.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(k);
    let mut mu = vec![vec![BigRational::zero(); k]; k];
    let mut norms = Vec::with_capacity(k);
    for i in 0..k {
        let mut v = rows[i].clone();
        for j in 0..i {
            let m = dot(&rows[i], &star[j]) / &norms[j];
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= &m * y;
            }
            mu[i][j] = m;
        }
        norms.push(dot(&v, &v));
        star.push(v);
    }
    GramSchmidt { mu, norms }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// LLL reduction with `delta = 3/4`, in exact arithmetic.
pub fn lll_reduce(basis: &mut [Vec<i64>]) {
    let delta = BigRational::new(3.into(), 4.into());
    let mut k = 1;
    let mut gs = gram_schmidt(basis);
    while k < basis.len() {
        for j in (0..k).rev() {
            let q = gs.mu[k][j].round().to_integer();
            if !q.is_zero() {
                let q = q.to_i64().expect("LLL multiplier fits in i64");
                let bj = basis[j].clone();
                for (x, y) in basis[k].iter_mut().zip(&bj) {
                    *x -= q * y;
                }
                gs = gram_schmidt(basis);
            }
        }
        let mu = &gs.mu[k][k - 1];
        if gs.norms[k] >= (&delta - mu * mu) * &gs.norms[k - 1] {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            gs = gram_schmidt(basis);
            k = (k - 1).max(1);
        }
    }
}

/// All lattice vectors `v = sum c_i b_i` with `|v|^2 <= radius_sq`,
/// including zero, passed to `visit` as integer vectors.
///
/// The search walks coefficients from the last basis vector down, bounding
/// each by the remaining budget over its Gram-Schmidt length. Floating
/// point is only used to choose the coefficient ranges, and those are
/// widened by a relative slack far above the rounding error, so no point of
/// the ball is missed; callers filter the output exactly.
pub fn enumerate_short_vectors(basis: &[Vec<i64>], radius_sq: i64, mut visit: impl FnMut(&[i64])) {
    let k = basis.len();
    let dim = basis.first().map_or(0, Vec::len);
    if k == 0 {
        visit(&vec![0; dim]);
        return;
    }
    let gs = gram_schmidt(basis);
    let mu: Vec<Vec<f64>> = gs
        .mu
        .iter()
        .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(0.0)).collect())
        .collect();
    let norms: Vec<f64> = gs.norms.iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let bound = radius_sq as f64 * (1.0 + 1e-9) + 1e-6;
    let mut coeffs = vec![0i64; k];
    let mut partial = vec![vec![0i64; dim]; k + 1];
    search(
        &Search {
            basis,
            mu: &mu,
            norms: &norms,
            bound,
        },
        k,
        0.0,
        &mut coeffs,
        &mut partial,
        &mut visit,
    );
}

struct Search<'a> {
    basis: &'a [Vec<i64>],
    mu: &'a [Vec<f64>],
    norms: &'a [f64],
    bound: f64,
}

fn search(
    s: &Search<'_>,
    level: usize,
    used: f64,
    coeffs: &mut [i64],
    partial: &mut [Vec<i64>],
    visit: &mut impl FnMut(&[i64]),
) {
    if level == 0 {
        visit(&partial[0]);
        return;
    }
    let i = level - 1;
    let center: f64 = -(level..coeffs.len())
        .map(|j| s.mu[j][i] * coeffs[j] as f64)
        .sum::<f64>();
    let budget = s.bound - used;
    if budget < 0.0 {
        return;
    }
    let width = (budget / s.norms[i]).sqrt();
    let lo = (center - width).ceil() as i64;
    let hi = (center + width).floor() as i64;
    for c in lo..=hi {
        let d = c as f64 - center;
        let next = used + d * d * s.norms[i];
        if next > s.bound {
            continue;
        }
        coeffs[i] = c;
        let (head, tail) = partial.split_at_mut(level);
        let above = &tail[0];
        let row = &mut head[i];
        for ((x, &a), &b) in row.iter_mut().zip(above).zip(&s.basis[i]) {
            *x = a + c * b;
        }
        search(s, i, next, coeffs, partial, visit);
    }
    coeffs[i] = 0;
}

/// Whether `v` has an exact integer representation over `basis`.
pub fn in_lattice(basis: &[IdentityVector], v: &[i64]) -> bool {
    let rows: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|b| b.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut aug = rows.clone();
    aug.push(v.iter().map(|&x| BigInt::from(x)).collect());
    linalg::hermite_normal_form(aug) == linalg::hermite_normal_form(rows)
}
