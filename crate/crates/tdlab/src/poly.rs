//! Dense univariate polynomials with exact integer coefficients.
//!
//! Coefficients are stored degree-ascending with no trailing zeros, so the
//! zero polynomial is the empty vector and `degree` is well defined for
//! everything else. All ring operations are exact over `BigInt`; evaluation
//! is offered exactly (at integers and rationals) and in floating point
//! (at `f64` and `Complex64`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("expected a polynomial of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: usize, found: isize },
    #[error("cannot parse coefficient {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

/// A polynomial in one variable over the integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    /// Coefficients in ascending degree order; invariant: last entry nonzero.
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::monomial(1)
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `x^k` with coefficient one.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Poly { coeffs }
    }

    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(1 + x)^k`, i.e. the k-th row of Pascal's triangle.
    pub fn binomial_pow(k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        for i in 0..=k {
            coeffs.push(c.clone());
            // C(k, i+1) = C(k, i) * (k - i) / (i + 1), exact at every step.
            c = c * BigInt::from(k - i) / BigInt::from(i + 1);
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer, with the zero polynomial at -1.
    pub fn degree_isize(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Largest power of `x` dividing the polynomial; zero for the zero
    /// polynomial.
    pub fn trailing_zero_order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Divides out `x^k`. Panics if the low-order coefficients are nonzero.
    pub fn shift_down(&self, k: usize) -> Poly {
        assert!(
            self.coeffs.iter().take(k).all(|c| c.is_zero()),
            "shift_down would drop nonzero coefficients"
        );
        Poly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes `inner` for the variable, by Horner over polynomials.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            if !c.is_zero() {
                acc = acc.add(&Poly::constant(c.clone()));
            }
        }
        acc
    }

    /// The m-th formal derivative.
    pub fn derivative(&self, m: usize) -> Poly {
        if m == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= m {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - m);
        for (i, c) in self.coeffs.iter().enumerate().skip(m) {
            // falling factorial i * (i-1) * … * (i-m+1)
            let mut f = BigInt::one();
            for j in 0..m {
                f *= BigInt::from(i - j);
            }
            coeffs.push(c * f);
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplicity of the integer `a` as a root, by repeated exact
    /// synthetic division by `(x − a)`; 0 when `p(a) ≠ 0` and for the zero
    /// polynomial.
    pub fn integer_root_multiplicity(&self, a: i64) -> usize {
        self.deflate_integer_root(a).0
    }

    /// Multiplicity of the integer `a` as a root together with the exact
    /// quotient after dividing out `(x − a)^multiplicity`.
    pub fn deflate_integer_root(&self, a: i64) -> (usize, Poly) {
        if self.is_zero() {
            return (0, self.clone());
        }
        let a = BigInt::from(a);
        let mut cur = self.coeffs.clone();
        let mut mult = 0;
        while cur.len() > 1 {
            let d = cur.len() - 1;
            let mut quotient = vec![BigInt::zero(); d];
            let mut carry = cur[d].clone();
            for k in (0..d).rev() {
                quotient[k] = carry.clone();
                carry = &cur[k] + &a * &carry;
            }
            if !carry.is_zero() {
                break;
            }
            cur = quotient;
            mult += 1;
        }
        (mult, Poly::from_coeffs(cur))
    }

    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Floating-point evaluation; subject to overflow and rounding for
    /// large coefficients, use the exact evaluators for certificates.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::INFINITY);
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_f64().unwrap_or(f64::INFINITY);
        }
        acc
    }

    /// Coefficients converted to `f64`, ascending degree.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }

    /// Writes a degree-`n` polynomial `p` as `(1+x)^n - f` and returns `f`.
    ///
    /// Fails unless `p` has degree exactly `n`.
    pub fn tail_decompose(&self, n: usize) -> Result<Poly, PolyError> {
        if self.degree() != Some(n) {
            return Err(PolyError::DegreeMismatch {
                expected: n,
                found: self.degree_isize(),
            });
        }
        Ok(Poly::binomial_pow(n).sub(self))
    }

    /// Sum of absolute coefficient values.
    pub fn abs_coeff_sum(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Canonical text form: coefficients ascending from degree zero,
    /// space-separated; the zero polynomial is `"0"`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl FromStr for Poly {
    type Err = PolyError;

    /// Parses the canonical text form produced by [`Poly::to_text`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut coeffs = Vec::new();
        for token in s.split_whitespace() {
            let c = token.parse::<BigInt>().map_err(|e| PolyError::Parse {
                token: token.to_string(),
                reason: e.to_string(),
            })?;
            coeffs.push(c);
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.to_text())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_i64(coeffs)
    }

    #[test]
    fn normalization_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert_eq!(p(&[0, 0]), Poly::zero());
        assert!(p(&[0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[0, 1]).degree(), Some(1));
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        // (1 + x)(1 - x) = 1 - x^2
        assert_eq!(p(&[1, 1]).mul(&p(&[1, -1])), p(&[1, 0, -1]));
        // (x^2 + 2x)(x + 3) = x^3 + 5x^2 + 6x
        assert_eq!(p(&[0, 2, 1]).mul(&p(&[3, 1])), p(&[0, 6, 5, 1]));
        assert_eq!(p(&[1, 2]).add(&p(&[0, -2, 4])), p(&[1, 0, 4]));
        assert_eq!(p(&[5]).sub(&p(&[1, 1])), p(&[4, -1]));
    }

    #[test]
    fn pow_and_binomial_rows_agree() {
        for k in 0..=10 {
            assert_eq!(p(&[1, 1]).pow(k), Poly::binomial_pow(k));
        }
        assert_eq!(Poly::binomial_pow(4), p(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn compose_evaluates_at_polynomials() {
        // p(x) = x^2 + 1, q(x) = x + 2 => p(q) = x^2 + 4x + 5
        assert_eq!(p(&[1, 0, 1]).compose(&p(&[2, 1])), p(&[5, 4, 1]));
        // Composition with a constant equals evaluation.
        let f = p(&[3, -1, 2]);
        assert_eq!(
            f.compose(&Poly::constant(BigInt::from(5))),
            Poly::constant(f.eval_int(&BigInt::from(5)))
        );
    }

    #[test]
    fn derivative_orders() {
        let f = p(&[7, 0, 3, 5]); // 7 + 3x^2 + 5x^3
        assert_eq!(f.derivative(1), p(&[0, 6, 15]));
        assert_eq!(f.derivative(2), p(&[6, 30]));
        assert_eq!(f.derivative(3), p(&[30]));
        assert_eq!(f.derivative(4), Poly::zero());
        assert_eq!(f.derivative(0), f);
    }

    #[test]
    fn exact_evaluation() {
        let f = p(&[-1, 0, 1]); // x^2 - 1
        assert_eq!(f.eval_int(&BigInt::from(5)), BigInt::from(24));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            f.eval_exact(&half),
            BigRational::new(BigInt::from(-3), BigInt::from(4))
        );
    }

    #[test]
    fn complex_evaluation_on_known_root() {
        // x^2 + 1 vanishes at i.
        let f = p(&[1, 0, 1]);
        let v = f.eval_complex(Complex64::new(0.0, 1.0));
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn tail_decompose_recovers_binomial_remainder() {
        // D_t(K_4) = (1+x)^4 - (4x + 1): f must be 4x + 1.
        let dt_k4 = p(&[0, 0, 6, 4, 1]);
        let f = dt_k4.tail_decompose(4).unwrap();
        assert_eq!(f, p(&[1, 4]));
        // Degree mismatch is an error, not a silent truncation.
        let err = dt_k4.tail_decompose(5).unwrap_err();
        assert_eq!(
            err,
            PolyError::DegreeMismatch {
                expected: 5,
                found: 4
            }
        );
    }

    #[test]
    fn shift_and_trailing_order() {
        let f = p(&[0, 0, 3, 1]);
        assert_eq!(f.trailing_zero_order(), 2);
        assert_eq!(f.shift_down(2), p(&[3, 1]));
        assert_eq!(p(&[3, 1]).shift_up(2), f);
        assert_eq!(Poly::zero().trailing_zero_order(), 0);
    }

    #[test]
    fn text_round_trip() {
        let f = p(&[0, 0, 6, 4, 1]);
        assert_eq!(f.to_text(), "0 0 6 4 1");
        assert_eq!(f.to_text().parse::<Poly>().unwrap(), f);
        assert_eq!(Poly::zero().to_text(), "0");
        assert_eq!("0".parse::<Poly>().unwrap(), Poly::zero());
        assert!("1 x 3".parse::<Poly>().is_err());
    }

    #[test]
    fn integer_root_multiplicity_by_exact_division() {
        // x^3 (x+1)^5 (x+2)^2 (x - 3)
        let f = Poly::binomial_pow(5)
            .mul(&p(&[2, 1]).pow(2))
            .mul(&p(&[-3, 1]))
            .shift_up(3);
        assert_eq!(f.integer_root_multiplicity(0), 3);
        assert_eq!(f.integer_root_multiplicity(-1), 5);
        assert_eq!(f.integer_root_multiplicity(-2), 2);
        assert_eq!(f.integer_root_multiplicity(3), 1);
        assert_eq!(f.integer_root_multiplicity(7), 0);
        assert_eq!(Poly::zero().integer_root_multiplicity(0), 0);
        assert_eq!(Poly::one().integer_root_multiplicity(0), 0);
        // Agrees with the dedicated zero-order accessor.
        assert_eq!(f.integer_root_multiplicity(0), f.trailing_zero_order());
    }
}
