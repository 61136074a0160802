//! Concrete secant-variety oracle for linear series on the projective line.
//!
//! A g^r_d on the rational curve is realized as a span of r + 1 explicit
//! polynomials of degree at most d with rational coefficients. Whether an
//! effective divisor imposes dependent conditions is then a statement about
//! the exact rank of a matrix of Taylor coefficients, so the oracle can
//! answer membership questions about secant loci with no genericity
//! assumptions and no rounding.
//!
//! - [`RationalSeries`]: validated span, independence checked by exact rank
//! - [`MultiDivisor`]: effective divisor supported at distinct rational
//!   points with positive multiplicities
//! - [`secant_matrix`], [`is_secant_divisor`]: the conditions a divisor
//!   imposes, and whether at least f of them fail
//! - [`ramification_weight_total`]: total ramification weight from the
//!   Wronskian plus the contribution at infinity
//! - [`random_series`], [`enumerate_grid_divisors`]: reproducible sampling
//!   helpers used by tests, examples, and the command line tool

pub mod matrix;
pub mod poly;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use rand::Rng;
use thiserror::Error;

use matrix::RatMatrix;
use poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("series needs a nonempty basis")]
    EmptyBasis,
    #[error("degree bound must be nonnegative, got {0}")]
    NegativeBound(i64),
    #[error("basis element has degree {degree}, above the bound {bound}")]
    DegreeAboveBound { degree: usize, bound: i64 },
    #[error("basis is linearly dependent")]
    DependentBasis,
    #[error("divisor needs at least one point")]
    EmptyDivisor,
    #[error("divisor points must be distinct, {0} repeats")]
    DuplicatePoint(BigRational),
    #[error("multiplicity must be positive, got {0}")]
    NonPositiveMultiplicity(i64),
}

/// Span of r + 1 independent polynomials of degree at most d: a concrete
/// g^r_d on the projective line, in the affine coordinate t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    d: i64,
    basis: Vec<Poly>,
}

impl RationalSeries {
    /// Validates the degree bound and checks linear independence by the
    /// exact rank of the coefficient matrix.
    pub fn new(d: i64, basis: Vec<Poly>) -> Result<Self, OracleError> {
        if d < 0 {
            return Err(OracleError::NegativeBound(d));
        }
        if basis.is_empty() {
            return Err(OracleError::EmptyBasis);
        }
        for p in &basis {
            if let Some(degree) = p.degree() {
                if degree as i64 > d {
                    return Err(OracleError::DegreeAboveBound { degree, bound: d });
                }
            } else {
                // The zero polynomial can never be part of a basis.
                return Err(OracleError::DependentBasis);
            }
        }
        let series = RationalSeries { d, basis };
        if series.coefficient_matrix().rank() != series.basis.len() {
            return Err(OracleError::DependentBasis);
        }
        Ok(series)
    }

    /// Convenience constructor from ascending integer coefficient rows.
    pub fn from_integer_basis(d: i64, rows: &[&[i64]]) -> Result<Self, OracleError> {
        RationalSeries::new(
            d,
            rows.iter().map(|r| Poly::from_integer_coeffs(r)).collect(),
        )
    }

    /// The complete series of degree d: the span of 1, t, ..., t^d.
    pub fn complete(d: i64) -> Self {
        assert!(d >= 0, "expected d >= 0, got d={d}");
        let basis = (0..=d as usize).map(Poly::monomial).collect();
        RationalSeries { d, basis }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Rank r: the basis has r + 1 elements.
    pub fn r(&self) -> i64 {
        self.basis.len() as i64 - 1
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    /// Coefficient matrix, one row per basis element, columns ascending in
    /// degree from 0 to d.
    pub fn coefficient_matrix(&self) -> RatMatrix {
        let cols = self.d as usize + 1;
        RatMatrix::from_rows(
            self.basis
                .iter()
                .map(|p| {
                    let mut row = p.coeffs().to_vec();
                    row.resize(cols, BigRational::zero());
                    row
                })
                .collect(),
        )
    }

    /// The image of the series under the coordinate flip t -> 1/t, each
    /// basis polynomial replaced by t^d p(1/t). Moves questions about the
    /// point at infinity to the origin.
    pub fn flipped(&self) -> RationalSeries {
        let basis = self
            .basis
            .iter()
            .map(|p| p.reversed_in_frame(self.d as usize))
            .collect();
        RationalSeries::new(self.d, basis).expect("flip preserves independence")
    }
}

/// Effective divisor `sum a_i p_i` with distinct rational points and
/// positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiDivisor {
    points: Vec<BigRational>,
    multiplicities: Vec<i64>,
}

impl MultiDivisor {
    pub fn new(support: Vec<(BigRational, i64)>) -> Result<Self, OracleError> {
        if support.is_empty() {
            return Err(OracleError::EmptyDivisor);
        }
        let mut points = Vec::with_capacity(support.len());
        let mut multiplicities = Vec::with_capacity(support.len());
        for (p, m) in support {
            if m <= 0 {
                return Err(OracleError::NonPositiveMultiplicity(m));
            }
            if points.contains(&p) {
                return Err(OracleError::DuplicatePoint(p));
            }
            points.push(p);
            multiplicities.push(m);
        }
        Ok(MultiDivisor {
            points,
            multiplicities,
        })
    }

    /// Convenience constructor from integer points.
    pub fn from_integer_points(support: &[(i64, i64)]) -> Result<Self, OracleError> {
        MultiDivisor::new(
            support
                .iter()
                .map(|&(p, m)| (BigRational::from_integer(p.into()), m))
                .collect(),
        )
    }

    pub fn degree(&self) -> i64 {
        self.multiplicities.iter().sum()
    }

    pub fn points(&self) -> &[BigRational] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.multiplicities
    }
}

/// Matrix of the conditions the divisor imposes on the series: one row per
/// point and derivative order (orders 0..multiplicity, points in divisor
/// order), one column per basis element, entries the Taylor coefficients
/// `s_j^{(k)}(p_i) / k!`.
pub fn secant_matrix(series: &RationalSeries, divisor: &MultiDivisor) -> RatMatrix {
    let e = divisor.degree() as usize;
    let mut rows = Vec::with_capacity(e);
    let per_point: Vec<Vec<Vec<BigRational>>> = divisor
        .points()
        .iter()
        .zip(divisor.multiplicities())
        .map(|(p, &m)| {
            series
                .basis()
                .iter()
                .map(|s| s.taylor_coefficients(p, m as usize))
                .collect()
        })
        .collect();
    for (i, &m) in divisor.multiplicities().iter().enumerate() {
        for k in 0..m as usize {
            rows.push(per_point[i].iter().map(|t| t[k].clone()).collect());
        }
    }
    RatMatrix::from_rows(rows)
}

/// Whether the divisor imposes at most `e - f` conditions on the series,
/// that is, whether it lies on the secant locus with f failed conditions.
///
/// # Panics
///
/// Panics unless `0 <= f < e` where e is the divisor degree.
pub fn is_secant_divisor(series: &RationalSeries, divisor: &MultiDivisor, f: i64) -> bool {
    let e = divisor.degree();
    assert!(0 <= f && f < e, "expected 0 <= f < e, got e={e}, f={f}");
    secant_matrix(series, divisor).rank() as i64 <= e - f
}

/// Whether some nonzero section vanishes on the whole divisor, decided by an
/// exact kernel computation. For `f = e - r` this is the same question as
/// [`is_secant_divisor`], but it is answered through an independent
/// elimination pipeline.
pub fn has_section_vanishing_on(series: &RationalSeries, divisor: &MultiDivisor) -> bool {
    !secant_matrix(series, divisor).kernel_basis().is_empty()
}

/// Wronskian determinant `det(s_j^{(i)})` of the basis, a nonzero polynomial
/// for any independent basis in characteristic zero.
pub fn wronskian(series: &RationalSeries) -> Poly {
    let n = series.basis().len();
    let mut rows: Vec<Vec<Poly>> = vec![series.basis().to_vec()];
    for i in 1..n {
        rows.push(rows[i - 1].iter().map(Poly::derivative).collect());
    }
    poly_determinant(&rows)
}

/// Laplace expansion along the first column; matrices here are small, with
/// r + 1 rarely above single digits.
fn poly_determinant(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let cofactor = m[i][0].mul(&poly_determinant(&minor));
        acc = if i % 2 == 0 {
            acc.add(&cofactor)
        } else {
            acc.add(&cofactor.neg())
        };
    }
    acc
}

/// Total ramification weight of the series over the whole projective line.
///
/// The finite contribution is the degree of the Wronskian, since the weight
/// of a point equals the vanishing order of the Wronskian there. At infinity
/// the vanishing sequence is read off the echelon form of the coefficient
/// matrix with columns in descending degree order: pivots in columns c_0 <
/// c_1 < ... give vanishing orders c_i, hence weight `sum c_i - r(r+1)/2`.
pub fn ramification_weight_total(series: &RationalSeries) -> BigInt {
    let w = wronskian(series);
    assert!(
        !w.is_zero(),
        "independent basis must have a nonzero Wronskian"
    );
    let finite = w.degree().expect("nonzero") as i64;

    let d = series.d() as usize;
    let descending = RatMatrix::from_rows(
        series
            .basis()
            .iter()
            .map(|p| {
                let mut row = vec![BigRational::zero(); d + 1];
                for (i, c) in p.coeffs().iter().enumerate() {
                    row[d - i] = c.clone();
                }
                row
            })
            .collect(),
    );
    let pivots = descending.rref_pivot_columns();
    let r = series.r();
    let at_infinity = pivots.iter().map(|&c| c as i64).sum::<i64>() - r * (r + 1) / 2;

    BigInt::from(finite + at_infinity)
}

/// Pseudorandom series with integer coefficients in [-5, 5], redrawn until
/// the basis is independent. Deterministic for a fixed generator state.
///
/// # Panics
///
/// Panics unless `0 <= r <= d`.
pub fn random_series<R: Rng + ?Sized>(d: i64, r: i64, rng: &mut R) -> RationalSeries {
    assert!(0 <= r && r <= d, "expected 0 <= r <= d, got r={r}, d={d}");
    loop {
        let basis: Vec<Poly> = (0..=r)
            .map(|_| {
                Poly::from_coeffs(
                    (0..=d)
                        .map(|_| BigRational::from_integer(rng.gen_range(-5..=5i64).into()))
                        .collect(),
                )
            })
            .collect();
        if let Ok(series) = RationalSeries::new(d, basis) {
            return series;
        }
    }
}

/// Every effective divisor of the given degree supported on the pool of
/// points, in lexicographic order of multiplicity vectors. The pool must
/// consist of distinct points.
pub fn enumerate_grid_divisors(pool: &[BigRational], degree: i64) -> Vec<MultiDivisor> {
    assert!(degree >= 1, "expected degree >= 1, got {degree}");
    let mut out = Vec::new();
    let mut current = vec![0_i64; pool.len()];
    fill_multiplicities(pool, degree, 0, &mut current, &mut out);
    out
}

fn fill_multiplicities(
    pool: &[BigRational],
    remaining: i64,
    index: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<MultiDivisor>,
) {
    if index == pool.len() {
        if remaining == 0 {
            let support: Vec<(BigRational, i64)> = pool
                .iter()
                .zip(current.iter())
                .filter(|(_, &m)| m > 0)
                .map(|(p, &m)| (p.clone(), m))
                .collect();
            if !support.is_empty() {
                out.push(MultiDivisor::new(support).expect("distinct pool points"));
            }
        }
        return;
    }
    for m in 0..=remaining {
        current[index] = m;
        fill_multiplicities(pool, remaining - m, index + 1, current, out);
    }
    current[index] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramification::plucker_total;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn series_validation() {
        assert!(RationalSeries::from_integer_basis(2, &[&[1], &[0, 0, 1]]).is_ok());
        assert_eq!(
            RationalSeries::from_integer_basis(2, &[&[1], &[2]]),
            Err(OracleError::DependentBasis)
        );
        assert_eq!(
            RationalSeries::from_integer_basis(1, &[&[0, 0, 1]]),
            Err(OracleError::DegreeAboveBound {
                degree: 2,
                bound: 1
            })
        );
        assert!(RationalSeries::new(2, vec![]).is_err());
        assert!(RationalSeries::from_integer_basis(2, &[&[1], &[0]]).is_err());
    }

    #[test]
    fn divisor_validation() {
        assert!(MultiDivisor::from_integer_points(&[(0, 2), (1, 1)]).is_ok());
        assert_eq!(
            MultiDivisor::from_integer_points(&[(0, 1), (0, 1)]),
            Err(OracleError::DuplicatePoint(rat(0, 1)))
        );
        assert_eq!(
            MultiDivisor::from_integer_points(&[(0, 0)]),
            Err(OracleError::NonPositiveMultiplicity(0))
        );
        assert!(MultiDivisor::new(vec![]).is_err());
        assert_eq!(
            MultiDivisor::from_integer_points(&[(0, 2), (1, 3)])
                .unwrap()
                .degree(),
            5
        );
    }

    #[test]
    fn secant_matrix_of_double_point_is_taylor_block() {
        let series = RationalSeries::from_integer_basis(1, &[&[1], &[0, 1]]).unwrap();
        let divisor = MultiDivisor::from_integer_points(&[(0, 2)]).unwrap();
        let m = secant_matrix(&series, &divisor);
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert_eq!(*m.at(0, 0), rat(1, 1));
        assert_eq!(*m.at(0, 1), rat(0, 1));
        assert_eq!(*m.at(1, 0), rat(0, 1));
        assert_eq!(*m.at(1, 1), rat(1, 1));
    }

    #[test]
    fn symmetric_points_on_even_series_drop_rank() {
        // Spanned by even polynomials, so {-1, +1} imposes one condition.
        let series = RationalSeries::from_integer_basis(
            4,
            &[&[1], &[0, 0, 1], &[0, 0, 0, 0, 1]],
        )
        .unwrap();
        let divisor = MultiDivisor::from_integer_points(&[(-1, 1), (1, 1)]).unwrap();
        let m = secant_matrix(&series, &divisor);
        assert_eq!(m.rank(), 1);
        assert!(is_secant_divisor(&series, &divisor, 1));
        // An asymmetric pair imposes independent conditions.
        let generic = MultiDivisor::from_integer_points(&[(1, 1), (2, 1)]).unwrap();
        assert!(!is_secant_divisor(&series, &generic, 1));
    }

    #[test]
    fn complete_series_admits_no_failing_divisor() {
        // On the full g^d_d every divisor of degree e <= d imposes exactly e
        // conditions.
        for d in 1..=5 {
            let series = RationalSeries::complete(d);
            for divisor in enumerate_grid_divisors(
                &[rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2)],
                d.min(3),
            ) {
                let e = divisor.degree();
                assert_eq!(secant_matrix(&series, &divisor).rank() as i64, e);
                for f in 1..e {
                    assert!(!is_secant_divisor(&series, &divisor, f));
                }
            }
        }
    }

    #[test]
    fn trivial_f_bound_always_holds() {
        let series = RationalSeries::from_integer_basis(3, &[&[1], &[0, 1]]).unwrap();
        // e - f >= min(e, r + 1) makes the rank condition vacuous.
        let divisor = MultiDivisor::from_integer_points(&[(0, 1), (1, 1), (2, 1)]).unwrap();
        assert!(is_secant_divisor(&series, &divisor, 1));
    }

    #[test]
    fn kernel_route_agrees_with_rank_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pool = [rat(0, 1), rat(1, 1), rat(-1, 1), rat(2, 1), rat(1, 2)];
        for _ in 0..20 {
            let d = rng.gen_range(2..=6);
            let r = rng.gen_range(1..=d.min(3));
            let series = random_series(d, r, &mut rng);
            for e in (r + 1)..=d.min(r + 3) {
                let f = e - r;
                for divisor in enumerate_grid_divisors(&pool[..3], e) {
                    assert_eq!(
                        is_secant_divisor(&series, &divisor, f),
                        has_section_vanishing_on(&series, &divisor),
                        "routes disagree at d={d}, r={r}, e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn wronskian_known_values() {
        // span{1, t^2}: W = 2t.
        let series = RationalSeries::from_integer_basis(2, &[&[1], &[0, 0, 1]]).unwrap();
        let w = wronskian(&series);
        assert_eq!(w, Poly::from_integer_coeffs(&[0, 2]));
        assert_eq!(ramification_weight_total(&series), BigInt::from(2));
        assert_eq!(plucker_total(0, 1, 2), BigInt::from(2));

        // The complete series is unramified everywhere.
        for d in 1..=5 {
            assert_eq!(
                ramification_weight_total(&RationalSeries::complete(d)),
                BigInt::from(0)
            );
        }
    }

    #[test]
    fn weight_total_matches_plucker_on_random_series() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..25 {
            let d = rng.gen_range(1..=8);
            let r = rng.gen_range(0..=d.min(3));
            let series = random_series(d, r, &mut rng);
            assert_eq!(
                ramification_weight_total(&series),
                plucker_total(0, r, d),
                "weight drifted at d={d}, r={r}"
            );
        }
    }

    #[test]
    fn weight_total_is_flip_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let d = rng.gen_range(1..=6);
            let r = rng.gen_range(0..=d.min(2));
            let series = random_series(d, r, &mut rng);
            assert_eq!(
                ramification_weight_total(&series),
                ramification_weight_total(&series.flipped())
            );
        }
    }

    #[test]
    fn rank_is_invariant_under_basis_change() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let series = random_series(5, 2, &mut rng);
        // Apply a fixed invertible change of basis.
        let change: [[i64; 3]; 3] = [[1, 1, 0], [0, 1, 2], [1, 0, 1]];
        let new_basis: Vec<Poly> = change
            .iter()
            .map(|row| {
                let mut acc = Poly::zero();
                for (c, s) in row.iter().zip(series.basis()) {
                    acc = acc.add(&s.scale(&rat(*c, 1)));
                }
                acc
            })
            .collect();
        let changed = RationalSeries::new(5, new_basis).unwrap();
        for divisor in enumerate_grid_divisors(&[rat(0, 1), rat(1, 1), rat(-2, 1)], 3) {
            assert_eq!(
                secant_matrix(&series, &divisor).rank(),
                secant_matrix(&changed, &divisor).rank()
            );
        }
        assert_eq!(
            ramification_weight_total(&series),
            ramification_weight_total(&changed)
        );
    }

    #[test]
    fn grid_enumeration_counts_multisets() {
        let pool = [rat(0, 1), rat(1, 1), rat(2, 1)];
        // Multisets of size 2 over 3 points: C(4, 2) = 6.
        assert_eq!(enumerate_grid_divisors(&pool, 2).len(), 6);
        // Each enumerated divisor has the requested degree.
        for d in enumerate_grid_divisors(&pool, 3) {
            assert_eq!(d.degree(), 3);
        }
    }

    #[test]
    fn random_series_is_reproducible() {
        let a = random_series(6, 2, &mut ChaCha8Rng::seed_from_u64(42));
        let b = random_series(6, 2, &mut ChaCha8Rng::seed_from_u64(42));
        assert_eq!(a, b);
    }
}
