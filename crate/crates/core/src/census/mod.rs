//! Counting subalgebras: count polynomials, the exponent-set search, a
//! brute-force subspace oracle and aggregated reports.

mod echelon;
mod poly;
mod report;
mod subspace;

pub use echelon::subalgebras_with_exponent_set;
pub use poly::{count_polynomial, count_polynomials, CountPolynomial, CountRegime};
pub use report::{
    census_algebras, census_of_monoids, check_feasible, compare_counts, feasibility_limit,
    full_census, lift_total, verify_count_tables, AlgebraRecord, CensusReport, CodimensionCheck,
    CountVerdict, Method, MonoidCount, Scope,
};
pub use subspace::all_closed_subspaces;
