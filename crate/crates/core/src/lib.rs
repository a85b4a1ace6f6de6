//! Quotient sets `R(A) = {a/a' : a, a' ∈ A}` of subsets of the naturals.
//!
//! The crate builds exact symbolic sets ([`SetSpec`]), measures their
//! asymptotic densities, scans and certifies gaps in their quotient sets,
//! constructs ratio approximations of arbitrary rational targets, and
//! checks partition and arithmetic-progression statements about them.
//! All verdicts use exact rational arithmetic.

pub mod approx;
pub mod catalog;
pub mod density;
mod error;
pub mod export;
pub mod lang;
pub mod numeric;
pub mod partition;
pub mod progression;
pub mod quotient;
pub mod setspec;

pub use error::Error;
pub use numeric::{Natural, Rational};
pub use setspec::{Part, SetSpec};
