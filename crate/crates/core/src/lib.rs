//! Enumeration of partial monoids of `[0, n-1]` and of subalgebras of
//! `F_p[x]/x^n`, with the invariants that relate the two: the generator count
//! `d(E)`, the family dimension `e(E)`, and `dim m/m^2`.

pub mod algebra;
pub mod census;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod monoid;
pub mod witness;

pub use error::{Error, Result};

/// Embedded in every report.
pub const VERSION: &str = concat!("truncalg ", env!("CARGO_PKG_VERSION"));
