//! Exact arithmetic in `F_p[x]/x^n` and its unital subalgebras.

mod echelon;
mod field;
mod poly;
mod subalgebra;

pub use echelon::Echelon;
pub use field::{is_prime, PrimeField, MAX_MODULUS};
pub use poly::TruncPoly;
pub use subalgebra::{close_generators, MDims, Subalgebra, SubalgebraRepr};

pub(crate) use poly::mul_slices;
