use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial with big-integer coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(degree: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x^k - 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = -BigInt::one();
        coeffs[k] = BigInt::one();
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let q = std::mem::take(&mut rem[top]);
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs[..dd].iter().enumerate() {
                rem[top - dd + i] -= &q * c;
            }
            quot[top - dd] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem_monic(&self, divisor: &Self) -> Self {
        self.div_rem_monic(divisor).1
    }

    /// `x^k f(1/x) = f(x)`.
    pub fn is_palindromic(&self, k: usize) -> bool {
        is_palindromic(&self.coeffs, k)
    }

    /// `x^k f(1/x) = -f(x)`.
    pub fn is_antipalindromic(&self, k: usize) -> bool {
        is_antipalindromic(&self.coeffs, k)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

/// Coefficients `c[j] == c[k - j]` for `0 <= j <= k`, missing ones zero.
pub fn is_palindromic<T>(coeffs: &[T], k: usize) -> bool
where
    T: PartialEq + Default,
{
    check_mirror(coeffs, k, |a, b| a == b)
}

/// Coefficients `c[k - j] == -c[j]` for `0 <= j <= k`, missing ones zero.
pub fn is_antipalindromic<T>(coeffs: &[T], k: usize) -> bool
where
    T: PartialEq + Default + Clone + Neg<Output = T>,
{
    check_mirror(coeffs, k, |a, b| *a == -b.clone())
}

fn check_mirror<T: Default>(coeffs: &[T], k: usize, pair: impl Fn(&T, &T) -> bool) -> bool {
    if coeffs.len() > k + 1 {
        return false;
    }
    let zero = T::default();
    let at = |i: usize| coeffs.get(i).unwrap_or(&zero);
    (0..=k).all(|j| pair(at(k - j), at(j)))
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: Self) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: Self) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Highest degree first, e.g. `x^8 + x^7 - x^5 - x^4 - x^3 + x + 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = !mag.is_one() || deg == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

/// An integer linear form `sum_j c_j a_j` in the unknowns `a_1..a_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinearForm(pub Vec<BigInt>);

impl LinearForm {
    pub fn zero(m: usize) -> Self {
        Self(vec![BigInt::zero(); m])
    }

    pub fn unit(m: usize, j: usize) -> Self {
        let mut v = Self::zero(m);
        v.0[j] = BigInt::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, a: &[BigInt]) -> BigInt {
        self.0.iter().zip(a).map(|(c, x)| c * x).sum()
    }

    fn sub_scaled(&mut self, other: &Self, k: &BigInt) {
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            *x -= y * k;
        }
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;

    fn neg(self) -> LinearForm {
        LinearForm(self.0.into_iter().map(|c| -c).collect())
    }
}

/// Polynomial whose coefficients are linear forms in `a_1..a_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormPolynomial {
    m: usize,
    coeffs: Vec<LinearForm>,
}

impl LinearFormPolynomial {
    /// `x^m sum_j a_j (x^j - x^-j)`: coefficient of `x^(m+j)` is `a_j`,
    /// of `x^(m-j)` is `-a_j`.
    pub fn sine_polynomial(m: usize) -> Self {
        let mut coeffs = vec![LinearForm::zero(m); 2 * m + 1];
        for j in 1..=m {
            coeffs[m + j] = LinearForm::unit(m, j - 1);
            coeffs[m - j] = -LinearForm::unit(m, j - 1);
        }
        Self { m, coeffs }
    }

    pub fn coeffs(&self) -> &[LinearForm] {
        &self.coeffs
    }

    /// Remainder on division by a monic integer polynomial; the result has
    /// exactly `deg(divisor)` coefficients.
    pub fn rem_monic(&self, divisor: &IntPolynomial) -> Vec<LinearForm> {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        while rem.len() < dd {
            rem.push(LinearForm::zero(self.m));
        }
        for top in (dd..rem.len()).rev() {
            let q = std::mem::take(&mut rem[top]);
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs()[..dd].iter().enumerate() {
                if !c.is_zero() {
                    rem[top - dd + i].sub_scaled(&q, c);
                }
            }
        }
        rem.truncate(dd);
        rem
    }

    /// Substitutes numeric values for `a_1..a_m`.
    pub fn eval_forms(&self, a: &[BigInt]) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|f| f.eval(a)).collect())
    }

    pub fn is_antipalindromic(&self, k: usize) -> bool {
        is_antipalindromic(&self.coeffs, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_lowest_degree_last() {
        let p = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, 0, 1, 1]);
        assert_eq!(p.to_string(), "x^8 + x^7 - x^5 - x^4 - x^3 + x + 1");
        assert_eq!(IntPolynomial::from_i64(&[0, -2]).to_string(), "-2x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn division_reconstructs() {
        let a = IntPolynomial::from_i64(&[3, -1, 4, 1, -5, 9, 2]);
        let b = IntPolynomial::from_i64(&[1, 0, -2, 1]);
        let (q, r) = a.div_rem_monic(&b);
        assert!(r.degree().is_none_or(|d| d < 3));
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn mirror_checks() {
        assert!(IntPolynomial::from_i64(&[-1, 0, 1]).is_antipalindromic(2));
        assert!(!IntPolynomial::from_i64(&[-1, 0, 1]).is_palindromic(2));
        assert!(IntPolynomial::from_i64(&[1, 2, 1]).is_palindromic(2));
        // degree below k counts the missing top coefficients as zero
        assert!(!IntPolynomial::from_i64(&[1, 1]).is_palindromic(2));
        assert!(LinearFormPolynomial::sine_polynomial(7).is_antipalindromic(14));
    }

    #[test]
    fn linear_form_remainder_matches_numeric() {
        let m = 5;
        let p = LinearFormPolynomial::sine_polynomial(m);
        let phi = IntPolynomial::from_i64(&[1, -1, 1, -1, 1]);
        let rem = p.rem_monic(&phi);
        let a: Vec<BigInt> = [2, -3, 0, 7, 1].iter().map(|&x| BigInt::from(x)).collect();
        let direct = p.eval_forms(&a).rem_monic(&phi);
        let via_forms = IntPolynomial::new(rem.iter().map(|f| f.eval(&a)).collect());
        assert_eq!(direct, via_forms);
    }
}
