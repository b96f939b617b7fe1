//! Verification suites: the smallest non-thin subalgebra, the two families
//! carrying non-thin algebras at n = 14, Frobenius families, minimality
//! statements and the generator tables.

mod construct;
mod suites;
mod template;
mod verdict;

pub use construct::{
    build_witness, family_claims, family_scan_14, witness_claims, witness_generators, witness_span,
    Family, FamilyScan, WITNESS_E, WITNESS_N,
};
pub use suites::{
    minimality_suite, per_monoid_claim, run_suite, run_suites, verify_count_polynomials,
    verify_dual_oracle, verify_e_values, verify_frobenius_families, verify_generator_tables,
    verify_lifting, verify_minimality_props, verify_monoid_tables, verify_per_monoid_law,
    verify_thin_regime, Suite,
};
pub use template::GeneratorTemplate;
pub use verdict::{Claim, VerdictReport};
