//! Exact arithmetic in cyclotomic fields Q(ζ_n) and Z[ζ_n], Bernoulli-number
//! regularity of primes, and an exhaustive Case I Fermat search.
//!
//! Nothing here uses floating point.

pub mod arith;
pub mod cycring;
pub mod cyclotomic;
pub mod error;
pub mod fermat;
#[cfg(any(test, feature = "oracles"))]
pub mod oracle;
pub mod poly;
pub mod regularity;

pub use arith::{PosNat, Rational};
pub use cycring::{CycElt, GaloisIndex, UnitDecomposition};
pub use error::{Error, Result};
pub use fermat::SearchReport;
pub use poly::{IntPoly, RatPoly};
pub use regularity::RegularityReport;
