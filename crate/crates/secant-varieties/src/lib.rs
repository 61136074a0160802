//! Exact enumerative geometry of incidence and secant varieties of linear
//! series on algebraic curves.
//!
//! Everything here is integer or rational arithmetic at arbitrary precision;
//! there is no floating point anywhere in the crate.
//!
//! Module map:
//!
//! - [`series`]: numeric parameter algebra for a g^r_d (Brill-Noether number,
//!   residuation, expected dimensions, applicability gates)
//! - [`counting`]: exact counts of divisors subordinate to two series at once,
//!   by generating function, by closed form, and by Chow-class products
//! - [`ramification`]: vanishing and ramification sequences, complements, and
//!   Plucker weight budgets
//! - [`certifier`]: a mechanical emptiness certifier for secant varieties of
//!   general curves, by degeneration to a flag curve
//! - [`genus_zero`]: a concrete oracle over explicit rational polynomial
//!   series, with exact rank computations
//! - [`cli`]: the `secant` command line tool
//!
//! The `examples/` directory contains one runnable walkthrough per module.

pub mod certifier;
pub mod cli;
pub mod counting;
pub mod genus_zero;
pub mod ramification;
pub mod series;

pub use certifier::{certify_empty, Certificate, CertifierInstance, Status};
pub use counting::{adjunction_nodes, incidence_count, severi_count, ChowClass};
pub use genus_zero::{MultiDivisor, RationalSeries};
pub use ramification::{plucker_total, VanishingSequence};
pub use series::{rho, SeriesParams};
