//! Dense univariate polynomials over the rationals, exact throughout.

use num::rational::BigRational;
use num::Zero;

/// Polynomial with ascending coefficients and no trailing zeros; the zero
/// polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_integer_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// The monomial t^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::from_integer(1.into());
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(i.into()))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = other
                .coeffs
                .get(i)
                .cloned()
                .unwrap_or_else(BigRational::zero);
            coeffs.push(a + b);
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
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// First `count` Taylor coefficients at `center`, that is the
    /// coefficients of `p(t + center)` in degrees `0..count`, via repeated
    /// synthetic division by `(t - center)`.
    pub fn taylor_coefficients(&self, center: &BigRational, count: usize) -> Vec<BigRational> {
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            if work.is_empty() {
                out.push(BigRational::zero());
                continue;
            }
            let (quotient, remainder) = div_by_linear(&work, center);
            out.push(remainder);
            work = quotient;
        }
        out
    }

    /// The reversal `t^d p(1/t)` within a frame of degree d.
    ///
    /// # Panics
    ///
    /// Panics if `deg p > d`.
    pub fn reversed_in_frame(&self, d: usize) -> Poly {
        assert!(
            self.coeffs.len() <= d + 1,
            "degree exceeds the reversal frame"
        );
        let mut coeffs = vec![BigRational::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }
}

/// Divides by `(t - center)`, returning (quotient, remainder). The input is
/// ascending and nonempty.
fn div_by_linear(coeffs: &[BigRational], center: &BigRational) -> (Vec<BigRational>, BigRational) {
    let n = coeffs.len();
    if n == 1 {
        return (Vec::new(), coeffs[0].clone());
    }
    let mut quotient = vec![BigRational::zero(); n - 1];
    quotient[n - 2] = coeffs[n - 1].clone();
    for k in (0..n - 2).rev() {
        quotient[k] = &coeffs[k + 1] + center * &quotient[k + 1];
    }
    let remainder = &coeffs[0] + center * &quotient[0];
    (quotient, remainder)
}
