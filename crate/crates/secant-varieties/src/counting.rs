//! Exact counts of divisors subordinate to two linear series at once.
//!
//! For series l1 = g^{r1}_{d1} and l2 = g^{r2}_{d2} on a general curve of
//! genus g, the incidence varieties of degree-e divisors subordinate to each
//! series meet in finitely many points exactly when e = r1 + r2. This module
//! computes that number by three independent routes:
//!
//! - [`incidence_count`]: coefficient extraction from the generating function
//!   `(1+t1)^{d1-g-r1} (1+t2)^{d2-g-r2} (1+t1+t2)^g`
//! - [`adjunction_nodes`] and [`severi_count`]: closed forms for special
//!   families (double points of product curves, plane curves of nonnegative
//!   Brill-Noether number)
//! - [`gamma_class`] and [`chow_product_evaluate`]: products of incidence
//!   classes in the rational Chow ring of the e-th symmetric power of the
//!   curve, written in the classes x and theta
//!
//! All arithmetic is exact: big integers throughout, and rational
//! coefficients in lowest terms inside [`ChowClass`].

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

use crate::series::SeriesParams;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("count inputs invalid: {0}")]
    InvalidInputs(String),
    #[error("class is not homogeneous")]
    NonHomogeneous,
    #[error("class degrees sum to {got}, expected {expected}")]
    DegreeMismatch { expected: i64, got: i64 },
    #[error("intersection number evaluated to the non-integer {0}")]
    InternalNonInteger(BigRational),
}

/// Generalized binomial coefficient `C(n, k)` for any integer n and k >= 0,
/// via the falling factorial `n (n-1) ... (n-k+1) / k!`.
///
/// For negative n this equals `(-1)^k C(-n+k-1, k)`; it is always an integer.
///
/// # Panics
///
/// Panics if `k < 0`.
pub fn gen_binomial(n: i64, k: i64) -> BigInt {
    assert!(k >= 0, "expected k >= 0, got k={k}");
    let mut acc = BigInt::one();
    for i in 0..k {
        // Exact at every step: the running value is C(n, i+1) times (i+1)!
        // divided out incrementally.
        acc = acc * (BigInt::from(n) - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Trinomial coefficient `g! / (p! q! (g-p-q)!)`, the coefficient of
/// `t1^p t2^q` in `(1 + t1 + t2)^g`. Zero outside `p, q >= 0`, `p + q <= g`.
///
/// # Panics
///
/// Panics if `g < 0`.
pub fn trinomial_coefficient(g: i64, p: i64, q: i64) -> BigInt {
    assert!(g >= 0, "expected g >= 0, got g={g}");
    if p < 0 || q < 0 || p + q > g {
        return BigInt::zero();
    }
    gen_binomial(g, p) * gen_binomial(g - p, q)
}

/// Validated inputs for a finite incidence-intersection count: two series on
/// the same curve and the divisor degree e = r1 + r2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountInputs {
    g: i64,
    l1: SeriesParams,
    l2: SeriesParams,
    e: i64,
}

impl CountInputs {
    /// Requires both series to share one genus and e = r1 + r2 to satisfy
    /// `e <= min(d1, d2)`.
    pub fn new(l1: SeriesParams, l2: SeriesParams) -> Result<Self, CountError> {
        if l1.g() != l2.g() {
            return Err(CountError::InvalidInputs(format!(
                "series live on different genera ({} vs {})",
                l1.g(),
                l2.g()
            )));
        }
        let e = l1.r() + l2.r();
        if e > l1.d() || e > l2.d() {
            return Err(CountError::InvalidInputs(format!(
                "divisor degree e = r1 + r2 = {e} exceeds a series degree \
                 (d1 = {}, d2 = {})",
                l1.d(),
                l2.d()
            )));
        }
        Ok(CountInputs {
            g: l1.g(),
            l1,
            l2,
            e,
        })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn l1(&self) -> SeriesParams {
        self.l1
    }

    pub fn l2(&self) -> SeriesParams {
        self.l2
    }

    pub fn e(&self) -> i64 {
        self.e
    }
}

/// Number of degree-e divisors subordinate to both series, as the coefficient
/// of `t1^{e-r1} t2^{e-r2}` in
///
/// ```text
/// (1 + t1)^{d1-g-r1} (1 + t2)^{d2-g-r2} (1 + t1 + t2)^g
/// ```
///
/// expanded with generalized binomials, so negative exponents are fine.
pub fn incidence_count(inputs: &CountInputs) -> BigInt {
    let g = inputs.g();
    let (r1, d1) = (inputs.l1().r(), inputs.l1().d());
    let (r2, d2) = (inputs.l2().r(), inputs.l2().d());
    let e = inputs.e();

    let mut total = BigInt::zero();
    for p in 0..=(e - r1) {
        for q in 0..=(e - r2) {
            let tri = trinomial_coefficient(g, p, q);
            if tri.is_zero() {
                continue;
            }
            total += tri
                * gen_binomial(d1 - g - r1, e - r1 - p)
                * gen_binomial(d2 - g - r2, e - r2 - q);
        }
    }
    total
}

/// Nodes of the image of a genus-g curve under a map of bidegree (d1, d2) to
/// a smooth quadric: `(d1 - 1)(d2 - 1) - g` by adjunction.
pub fn adjunction_nodes(g: i64, d1: i64, d2: i64) -> BigInt {
    (BigInt::from(d1) - 1_i64) * (BigInt::from(d2) - 1_i64) - BigInt::from(g)
}

/// Count of divisors of degree r1 + 1 subordinate to a g^{r1}_{d1} and a
/// pencil of degree d2:
///
/// ```text
/// (d1 - r1) C(d2 - 1, r1) - g C(d2 - 2, r1 - 1)
/// ```
///
/// For a plane curve (r1 = 2) this is the classical count of hyperplanes
/// meeting the image curve in a divisor with only r1 + 1 distinct points off
/// the pencil fibers, as used in degree computations for Severi varieties.
///
/// # Panics
///
/// Panics if `r1 < 1`.
pub fn severi_count(g: i64, r1: i64, d1: i64, d2: i64) -> BigInt {
    assert!(r1 >= 1, "expected r1 >= 1, got r1={r1}");
    (BigInt::from(d1) - BigInt::from(r1)) * gen_binomial(d2 - 1, r1)
        - BigInt::from(g) * gen_binomial(d2 - 2, r1 - 1)
}

/// Element of the rational Chow ring of the e-th symmetric power of a curve,
/// written as a polynomial in the hyperplane-type class x and the theta
/// divisor class, with exact rational coefficients.
///
/// Keys are exponent pairs `(a, b)` for the monomial `x^a theta^b`; zero
/// coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChowClass {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl ChowClass {
    /// The zero class.
    pub fn zero() -> Self {
        ChowClass::default()
    }

    /// The fundamental class.
    pub fn one() -> Self {
        let mut c = ChowClass::zero();
        c.add_term(0, 0, BigRational::one());
        c
    }

    /// Adds `coeff * x^a theta^b`, dropping the term if it cancels.
    pub fn add_term(&mut self, a: u32, b: u32, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^a theta^b` (zero if the monomial is absent).
    pub fn coefficient(&self, a: u32, b: u32) -> BigRational {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Iterates terms in lexicographic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    /// Total degree `a + b` shared by all terms, `None` for the zero class,
    /// or an error if the terms disagree.
    pub fn homogeneous_degree(&self) -> Result<Option<i64>, CountError> {
        let mut deg = None;
        for (a, b) in self.terms.keys() {
            let this = i64::from(*a) + i64::from(*b);
            match deg {
                None => deg = Some(this),
                Some(other) if other != this => return Err(CountError::NonHomogeneous),
                Some(_) => {}
            }
        }
        Ok(deg)
    }

    /// Formal product; no ring relations are imposed at this stage.
    pub fn mul(&self, other: &ChowClass) -> ChowClass {
        let mut out = ChowClass::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b), coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = Vec::new();
            if !coeff.is_one() || (*a == 0 && *b == 0) {
                parts.push(coeff.to_string());
            }
            match a {
                0 => {}
                1 => parts.push("x".to_string()),
                _ => parts.push(format!("x^{a}")),
            }
            match b {
                0 => {}
                1 => parts.push("theta".to_string()),
                _ => parts.push(format!("theta^{b}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

fn factorial(n: i64) -> BigInt {
    assert!(n >= 0);
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Class of the incidence variety of degree-e divisors subordinate to a
/// g^r_d, inside the e-th symmetric power of a genus-g curve:
///
/// ```text
/// sum_{j=0}^{e-r} C(d - g - r, j) x^j theta^{e-r-j} / (e-r-j)!
/// ```
///
/// # Panics
///
/// Panics unless `0 <= r <= e` and `g >= 0`.
pub fn gamma_class(g: i64, r: i64, d: i64, e: i64) -> ChowClass {
    assert!(g >= 0, "expected g >= 0, got g={g}");
    assert!(0 <= r && r <= e, "expected 0 <= r <= e, got r={r}, e={e}");
    let mut class = ChowClass::zero();
    for j in 0..=(e - r) {
        let coeff = BigRational::new(gen_binomial(d - g - r, j), factorial(e - r - j));
        class.add_term(j as u32, (e - r - j) as u32, coeff);
    }
    class
}

/// Evaluates the product of two homogeneous classes of complementary degree
/// against the fundamental class of the e-th symmetric power of a genus-g
/// curve, using the intersection numbers
///
/// ```text
/// integral of x^{e-b} theta^b = g! / (g-b)!   (zero when b > g)
/// ```
///
/// The result of a well-posed evaluation is always an integer; a non-integer
/// total is reported as an internal error rather than rounded.
pub fn chow_product_evaluate(
    c1: &ChowClass,
    c2: &ChowClass,
    g: i64,
    e: i64,
) -> Result<BigInt, CountError> {
    assert!(g >= 0, "expected g >= 0, got g={g}");
    assert!(e >= 0, "expected e >= 0, got e={e}");
    let d1 = c1.homogeneous_degree()?;
    let d2 = c2.homogeneous_degree()?;
    let (deg1, deg2) = match (d1, d2) {
        // A zero factor pairs to zero regardless of degree bookkeeping.
        (None, _) | (_, None) => return Ok(BigInt::zero()),
        (Some(a), Some(b)) => (a, b),
    };
    if deg1 + deg2 != e {
        return Err(CountError::DegreeMismatch {
            expected: e,
            got: deg1 + deg2,
        });
    }

    let product = c1.mul(c2);
    let mut total = BigRational::zero();
    for ((a, b), coeff) in product.terms() {
        debug_assert_eq!(i64::from(*a) + i64::from(*b), e);
        let b = i64::from(*b);
        if b > g {
            continue;
        }
        // Falling factorial g (g-1) ... (g-b+1) = g! / (g-b)!.
        let mut monomial = BigInt::one();
        for i in 0..b {
            monomial *= BigInt::from(g - i);
        }
        total += coeff * BigRational::from_integer(monomial);
    }

    if !total.is_integer() {
        return Err(CountError::InternalNonInteger(total));
    }
    Ok(total.to_integer())
}
