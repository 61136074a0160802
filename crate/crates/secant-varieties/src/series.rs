//! Numeric parameter algebra for linear series.
//!
//! A linear series of type g^r_d on a smooth projective curve of genus g is
//! represented purely by the integer triple `(g, r, d)`. This module provides:
//!
//! - [`rho`]: the Brill-Noether number `g - (r+1)(g-d+r)`
//! - [`SeriesParams::residual`]: numeric Serre duality `l -> K - l`
//! - [`expected_dim_secant`]: expected dimension `e - f(r+1-e+f)` of the
//!   variety of effective degree-e divisors imposing at most `e - f`
//!   conditions on the series
//! - [`incidence_dim`]: dimension of the incidence variety of divisors
//!   subordinate to the series
//! - [`emptiness_condition_holds`]: the dimension gate under which the
//!   degeneration method of [`crate::certifier`] applies
//!
//! Derived quantities are returned as arbitrary-precision integers so no
//! input can overflow.

use num::bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("invalid series (g={g}, r={r}, d={d}): {reason}")]
    InvalidSeries {
        g: i64,
        r: i64,
        d: i64,
        reason: &'static str,
    },
    #[error("residual of (g={g}, r={r}, d={d}) is not an effective series")]
    ResidualNotEffective { g: i64, r: i64, d: i64 },
    #[error("invalid secant parameters (e={e}, f={f}): require 0 <= f < e")]
    InvalidSecantParams { e: i64, f: i64 },
}

/// Brill-Noether number `rho(g, r, d) = g - (r+1)(g - d + r)`.
///
/// Nonnegative `rho` is the expected dimension of the space of g^r_d's on a
/// general curve of genus g; negative `rho` means a general curve carries
/// none.
pub fn rho(g: i64, r: i64, d: i64) -> BigInt {
    let (g, r, d) = (BigInt::from(g), BigInt::from(r), BigInt::from(d));
    &g - (&r + 1_i64) * (&g - &d + &r)
}

/// Expected dimension `e - f(r + 1 - e + f)` of the locus of effective
/// degree-e divisors that impose at most `e - f` conditions on a g^r_d.
///
/// # Panics
///
/// Panics unless `0 <= f < e`.
pub fn expected_dim_secant(e: i64, f: i64, r: i64) -> BigInt {
    assert!(0 <= f && f < e, "expected 0 <= f < e, got e={e}, f={f}");
    let (e, f, r) = (BigInt::from(e), BigInt::from(f), BigInt::from(r));
    &e - &f * (&r + 1_i64 - &e + &f)
}

/// Dimension of the incidence variety of effective degree-e divisors
/// subordinate to a g^r_d. It equals r for every e with 1 <= e <= d.
///
/// # Panics
///
/// Panics if `r < 0`.
pub fn incidence_dim(r: i64) -> i64 {
    assert!(r >= 0, "expected r >= 0, got r={r}");
    r
}

/// Numeric type `(g, r, d)` of a linear series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SeriesParams {
    g: i64,
    r: i64,
    d: i64,
}

impl SeriesParams {
    /// Validates `g >= 0`, `r >= 0`, `d >= 0` and `r <= d`.
    pub fn new(g: i64, r: i64, d: i64) -> Result<Self, ParamError> {
        let fail = |reason| ParamError::InvalidSeries { g, r, d, reason };
        if g < 0 {
            return Err(fail("genus must be nonnegative"));
        }
        if r < 0 || d < 0 {
            return Err(fail("rank and degree must be nonnegative"));
        }
        if r > d {
            return Err(fail("rank cannot exceed degree"));
        }
        Ok(SeriesParams { g, r, d })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Brill-Noether number of this series type.
    pub fn rho(&self) -> BigInt {
        rho(self.g, self.r, self.d)
    }

    /// Index of speciality `s = g - d + r`, the rank of the residual system
    /// plus one when the series is special and complete.
    pub fn speciality(&self) -> i64 {
        self.g - self.d + self.r
    }

    /// Residual series type `K - l`: for a complete g^r_d this is the
    /// g^{g-d+r-1}_{2g-2-d} cut out by canonical divisors containing a
    /// divisor of the series.
    ///
    /// Fails with [`ParamError::ResidualNotEffective`] when the residual
    /// parameters are not those of an effective series.
    pub fn residual(&self) -> Result<SeriesParams, ParamError> {
        let not_effective = ParamError::ResidualNotEffective {
            g: self.g,
            r: self.r,
            d: self.d,
        };
        let r2 = self.g - self.d + self.r - 1;
        let d2 = 2 * self.g - 2 - self.d;
        if r2 < 0 || d2 < 0 {
            return Err(not_effective);
        }
        SeriesParams::new(self.g, r2, d2).map_err(|_| not_effective)
    }
}

/// Secant parameters `(e, f)`: degree-e divisors imposing at most `e - f`
/// conditions. `f = e - r` recovers the incidence variety of a g^r_e.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SecantParams {
    e: i64,
    f: i64,
}

impl SecantParams {
    /// Validates `0 <= f < e`.
    pub fn new(e: i64, f: i64) -> Result<Self, ParamError> {
        if !(0 <= f && f < e) {
            return Err(ParamError::InvalidSecantParams { e, f });
        }
        Ok(SecantParams { e, f })
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn f(&self) -> i64 {
        self.f
    }
}

/// Dimension gate for the emptiness certifier.
///
/// Let `l2` be the residual of `l1 = (g, r1, d1)` and write `rho` for
/// `rho(g, r1, d1)`. The certifier's method addresses the secant variety of
/// `l2` with parameters `(e, f)` precisely when
///
/// ```text
/// f * (r2 + 1 - e + f) >= r1 + 1 + rho
/// ```
///
/// that is, when the expected dimension of the secant variety is too small
/// for it to meet the incidence locus for dimension reasons alone.
///
/// The caller is expected to have checked `rho >= 0`; only residual
/// effectivity is enforced here.
pub fn emptiness_condition_holds(
    g: i64,
    r1: i64,
    d1: i64,
    e: i64,
    f: i64,
) -> Result<bool, ParamError> {
    let l1 = SeriesParams::new(g, r1, d1)?;
    let l2 = l1.residual()?;
    let lhs = BigInt::from(f) * BigInt::from(l2.r() + 1 - e + f);
    let rhs = BigInt::from(r1) + 1_i64 + l1.rho();
    Ok(lhs >= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn rho_known_values() {
        assert_eq!(rho(9, 1, 6), big(1));
        assert_eq!(rho(0, 0, 0), big(0));
        assert_eq!(rho(6, 2, 6), big(0));
        assert_eq!(rho(3, 2, 4), big(0));
        assert_eq!(rho(12, 2, 10), big(0));
    }

    #[test]
    fn rho_is_preserved_by_residuation() {
        for g in 0..=20 {
            for r in 0..=g {
                for d in r..=(2 * g + 2) {
                    let l = SeriesParams::new(g, r, d).unwrap();
                    if let Ok(res) = l.residual() {
                        assert_eq!(l.rho(), res.rho(), "residuation changed rho at {l:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn residual_known_values() {
        let l = SeriesParams::new(9, 1, 6).unwrap();
        assert_eq!(l.residual().unwrap(), SeriesParams::new(9, 3, 10).unwrap());

        let canonical = SeriesParams::new(3, 2, 4).unwrap();
        assert_eq!(
            canonical.residual().unwrap(),
            SeriesParams::new(3, 0, 0).unwrap()
        );

        let l = SeriesParams::new(12, 2, 10).unwrap();
        assert_eq!(l.residual().unwrap(), SeriesParams::new(12, 3, 12).unwrap());
    }

    #[test]
    fn residual_is_an_involution_where_defined() {
        for g in 0..=16 {
            for r in 0..=g {
                for d in r..=(2 * g) {
                    let l = SeriesParams::new(g, r, d).unwrap();
                    if let Ok(res) = l.residual() {
                        if let Ok(back) = res.residual() {
                            assert_eq!(back, l, "double residual moved {l:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn residual_rejects_nonspecial_series() {
        // g - d + r - 1 < 0: nothing residual to speak of.
        let l = SeriesParams::new(0, 1, 3).unwrap();
        assert_eq!(
            l.residual(),
            Err(ParamError::ResidualNotEffective { g: 0, r: 1, d: 3 })
        );
        // 2g - 2 - d < 0 on an elliptic curve.
        let l = SeriesParams::new(1, 0, 1).unwrap();
        assert!(l.residual().is_err());
    }

    #[test]
    fn residual_rejects_rank_exceeding_degree() {
        // (3, 3, 4) has r2 = 1, d2 = 0, which is not an effective series.
        let l = SeriesParams::new(3, 3, 4).unwrap();
        assert!(l.residual().is_err());
    }

    #[test]
    fn speciality_matches_residual_rank() {
        for g in 0..=12 {
            for r in 0..=g {
                for d in r..=(2 * g) {
                    let l = SeriesParams::new(g, r, d).unwrap();
                    if let Ok(res) = l.residual() {
                        assert_eq!(l.speciality(), res.r() + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn expected_dim_secant_known_values() {
        // Incidence case f = e - r has expected dimension e - f = r; it
        // needs r >= 1 to keep f below e.
        for r in 1..=6 {
            for e in (r + 1)..=(r + 5) {
                assert_eq!(expected_dim_secant(e, e - r, r), big(r));
            }
        }
        // The degree-2 secant locus of a g^3_d with one failed condition.
        assert_eq!(expected_dim_secant(2, 1, 3), big(-1));
        // Zero expected dimension for the (e, f, r) = (2d-8, d-4, d-3) family.
        for d in 6..=40 {
            assert_eq!(expected_dim_secant(2 * d - 8, d - 4, d - 3), big(0));
        }
    }

    #[test]
    #[should_panic]
    fn expected_dim_secant_rejects_f_not_below_e() {
        expected_dim_secant(2, 2, 3);
    }

    #[test]
    fn incidence_dim_is_the_rank() {
        assert_eq!(incidence_dim(0), 0);
        assert_eq!(incidence_dim(3), 3);
    }

    #[test]
    fn secant_params_validation() {
        assert!(SecantParams::new(2, 1).is_ok());
        assert!(SecantParams::new(1, 0).is_ok());
        assert!(SecantParams::new(2, 2).is_err());
        assert!(SecantParams::new(0, 0).is_err());
        assert!(SecantParams::new(3, -1).is_err());
    }

    #[test]
    fn emptiness_condition_known_values() {
        // (9, 1, 6): residual is a g^3_10, rho = 1.
        // e = 2, f = 1: 1 * (3 + 1 - 2 + 1) = 3 >= 1 + 1 + 1 = 3.
        assert_eq!(emptiness_condition_holds(9, 1, 6, 2, 1), Ok(true));
        // e = 5, f = 1: 1 * (3 + 1 - 5 + 1) = 0 < 3.
        assert_eq!(emptiness_condition_holds(9, 1, 6, 5, 1), Ok(false));
        // The (2d-3, 1, d) family with e = d, f = 3.
        for d in 6..=12 {
            assert_eq!(emptiness_condition_holds(2 * d - 3, 1, d, d, 3), Ok(true));
        }
        // The same family at e = d - 4, f = 1.
        for d in 6..=12 {
            assert_eq!(
                emptiness_condition_holds(2 * d - 3, 1, d, d - 4, 1),
                Ok(true)
            );
        }
    }

    #[test]
    fn emptiness_condition_propagates_residual_error() {
        assert!(matches!(
            emptiness_condition_holds(0, 1, 3, 2, 1),
            Err(ParamError::ResidualNotEffective { .. })
        ));
    }

    #[test]
    fn series_params_validation() {
        assert!(SeriesParams::new(0, 0, 0).is_ok());
        assert!(SeriesParams::new(-1, 0, 0).is_err());
        assert!(SeriesParams::new(2, -1, 0).is_err());
        assert!(SeriesParams::new(2, 1, -2).is_err());
        assert!(SeriesParams::new(2, 3, 2).is_err());
    }
}
