//! Exact integer linear algebra: fraction-free Gauss-Jordan elimination,
//! rational nullspaces, integer kernels and Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Row = Vec<BigInt>;

/// Divides a row by the gcd of its entries and makes its first nonzero
/// entry positive.
pub fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let negate = row
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in row.iter_mut() {
        *x /= &g;
        if negate {
            *x = -std::mem::take(x);
        }
    }
}

/// Fraction-free Gauss-Jordan elimination in place.
///
/// Row operations are `row_i <- p * row_i - a * row_pivot` followed by
/// division by the row content, so every row stays a primitive integer
/// vector. On return the first `pivots.len()` rows are the nonzero rows,
/// each with a positive entry at its pivot column and zeros at every other
/// pivot column; remaining rows are zero. Returns the pivot columns.
pub fn rref_fraction_free(rows: &mut Vec<Row>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(found) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(top, found);
        make_primitive(&mut rows[top]);
        if rows[top][col].is_negative() {
            for x in rows[top].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        let pivot_row = rows[top].clone();
        let p = &pivot_row[col];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == top || row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * p - &a * y;
            }
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in row.iter_mut() {
                    *x /= &g;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    pivots
}

/// Basis of the rational nullspace `{v : rows * v = 0}` in normalized form:
/// rows of the basis matrix in reduced echelon order, each scaled to a
/// primitive integer vector with positive leading entry.
pub fn nullspace_basis(rows: &[Row], ncols: usize) -> Vec<Row> {
    let mut work = rows.to_vec();
    let pivots = rref_fraction_free(&mut work);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let lcm = work
        .iter()
        .zip(&pivots)
        .fold(BigInt::one(), |l, (r, &c)| l.lcm(&r[c]));
    let mut basis: Vec<Row> = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigInt::zero(); ncols];
            v[f] = lcm.clone();
            for (r, &c) in work.iter().zip(&pivots) {
                v[c] = -(&r[f] * (&lcm / &r[c]));
            }
            make_primitive(&mut v);
            v
        })
        .collect();
    rref_fraction_free(&mut basis);
    basis
}

/// Lattice basis of the integer kernel `{v in Z^ncols : rows * v = 0}`,
/// returned in Hermite normal form.
///
/// Row-reduces `[rows^T | I]` with unimodular integer operations; the
/// identity half of every row whose left half vanishes is a kernel vector,
/// and together they generate the whole integer kernel.
pub fn integer_kernel(rows: &[Row], ncols: usize) -> Vec<Row> {
    let nrows = rows.len();
    let mut aug: Vec<Row> = (0..ncols)
        .map(|i| {
            let mut r: Row = rows.iter().map(|row| row[i].clone()).collect();
            r.extend((0..ncols).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            r
        })
        .collect();
    let top = euclid_echelon(&mut aug, 0..nrows);
    let kernel: Vec<Row> = aug[top..].iter().map(|r| r[nrows..].to_vec()).collect();
    hermite_normal_form(kernel)
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: echelon
/// form, positive pivots, entries above each pivot reduced into
/// `0..pivot`. Zero rows are dropped.
pub fn hermite_normal_form(mut rows: Vec<Row>) -> Vec<Row> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut top = 0;
    for col in 0..ncols {
        let before = top;
        top = euclid_echelon_column(&mut rows, col, top);
        if top > before {
            let pivot_row = rows[before].clone();
            let p = pivot_row[col].clone();
            for row in rows.iter_mut().take(before) {
                let q = row[col].div_floor(&p);
                if !q.is_zero() {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
        }
    }
    rows.truncate(top);
    rows
}

fn euclid_echelon(rows: &mut [Row], cols: std::ops::Range<usize>) -> usize {
    let mut top = 0;
    for col in cols {
        top = euclid_echelon_column(rows, col, top);
    }
    top
}

/// Unimodular reduction of column `col` over rows `top..`: leaves at most
/// one nonzero (made positive) and moves it to `top`. Returns the new top.
fn euclid_echelon_column(rows: &mut [Row], col: usize, top: usize) -> usize {
    loop {
        let nonzero: Vec<usize> = (top..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .collect();
        let Some(&best) = nonzero.iter().min_by_key(|&&i| rows[i][col].abs()) else {
            return top;
        };
        if nonzero.len() == 1 {
            rows.swap(top, best);
            if rows[top][col].is_negative() {
                for x in rows[top].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            return top + 1;
        }
        let pivot_row = rows[best].clone();
        for &i in &nonzero {
            if i == best {
                continue;
            }
            let q = rows[i][col].div_floor(&pivot_row[col]);
            for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                *x -= &q * y;
            }
        }
    }
}

pub fn to_big(rows: &[Vec<i64>]) -> Vec<Row> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Whether `v` is a rational combination of `basis`.
pub fn in_span(basis: &[Row], v: &[BigInt]) -> bool {
    let mut rows = basis.to_vec();
    let rank = rref_fraction_free(&mut rows).len();
    rows.push(v.to_vec());
    rref_fraction_free(&mut rows).len() == rank
}
