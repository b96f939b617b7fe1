use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::template::GeneratorTemplate;
use super::verdict::VerdictReport;
use crate::algebra::{close_generators, PrimeField, Subalgebra, TruncPoly};
use crate::error::{Error, Result};
use crate::monoid::{d_invariant, has_multiplicity, property_n};

/// Ambient bound of the smallest non-thin example.
pub const WITNESS_N: usize = 14;
pub const WITNESS_E: [usize; 7] = [0, 4, 6, 8, 10, 12, 13];

/// `a = x^4 + x^5`, `b = x^6 + x^7`.
pub fn witness_generators(field: PrimeField) -> (TruncPoly, TruncPoly) {
    (
        TruncPoly::from_terms(field, WITNESS_N, &[(4, 1), (5, 1)]),
        TruncPoly::from_terms(field, WITNESS_N, &[(6, 1), (7, 1)]),
    )
}

/// `{1, a, b, a^2, ab, x^12, x^13}`.
pub fn witness_span(field: PrimeField) -> Vec<TruncPoly> {
    let (a, b) = witness_generators(field);
    vec![
        TruncPoly::one(field, WITNESS_N),
        a.clone(),
        b.clone(),
        a.mul_unchecked(&a),
        a.mul_unchecked(&b),
        TruncPoly::monomial(field, WITNESS_N, 12),
        TruncPoly::monomial(field, WITNESS_N, 13),
    ]
}

/// Builds the witness and checks everything claimed about it, one claim per
/// property. The algebra is `None` only if the span fails to be closed.
pub fn witness_claims(field: PrimeField) -> (Option<Subalgebra>, VerdictReport) {
    let mut v = VerdictReport::new("witness", field.modulus());
    let (a, b) = witness_generators(field);
    let cube_minus_square = a.pow(3).sub(&b.pow(2)).expect("same ring");
    v.check(
        "witness.identity",
        "(x^4+x^5)^3 - (x^6+x^7)^2 = x^13",
        cube_minus_square == TruncPoly::monomial(field, WITNESS_N, 13),
        format!("difference is {cube_minus_square}"),
    );
    let r = match Subalgebra::from_span(field, WITNESS_N, &witness_span(field)) {
        Ok(r) => r,
        Err(e) => {
            v.check(
                "witness.closed",
                "span{1, a, b, a^2, ab, x^12, x^13} is a subalgebra",
                false,
                e.to_string(),
            );
            return (None, v);
        }
    };
    v.check(
        "witness.closed",
        "span{1, a, b, a^2, ab, x^12, x^13} is a subalgebra",
        true,
        "closed under products",
    );
    v.check(
        "witness.dimension",
        "the witness has dimension 7",
        r.dim() == 7,
        format!("dim {}", r.dim()),
    );
    let e = r.exponent_set();
    v.check(
        "witness.exponents",
        "the exponent set is {0,4,6,8,10,12,13}",
        e.elements() == WITNESS_E,
        format!("E = {e}"),
    );
    let dims = r.m_dims();
    v.check(
        "witness.m-dims",
        "dim m = 6, dim m^2 = 4, dim m/m^2 = 2",
        (dims.m, dims.m2, dims.quotient) == (6, 4, 2),
        format!("({}, {}, {})", dims.m, dims.m2, dims.quotient),
    );
    let d = d_invariant(&e);
    v.check(
        "witness.non-thin",
        "dim m/m^2 < d(E) = 3",
        d == 3 && !r.is_thin(),
        format!("dim m/m^2 = {}, d(E) = {d}", dims.quotient),
    );
    v.check(
        "witness.property-m-fails",
        "13 is a generator of E yet x^13 lies in m^2",
        property_n(&e) && r.top_in_m_squared(),
        format!(
            "property N: {}, x^13 in m^2: {}",
            property_n(&e),
            r.top_in_m_squared()
        ),
    );
    v.check(
        "witness.multiplicity",
        "E has a repeated pair sum (4+8 = 6+6)",
        has_multiplicity(&e),
        format!("{:?}", crate::monoid::sumset2(&e).multiplicities()),
    );
    let from_ab = close_generators(field, WITNESS_N, &[a.clone(), b.clone()]);
    v.check(
        "witness.generated-by-a-b",
        "a and b alone generate the witness",
        from_ab.as_ref() == Ok(&r),
        match &from_ab {
            Ok(s) => format!("closure has dimension {}", s.dim()),
            Err(e) => e.to_string(),
        },
    );
    // Adjoining x^10, x^11, x^13 to a and b gives a larger algebra, since
    // x^11 is not in the witness.
    let mut listed = vec![a, b];
    listed.extend([10, 11, 13].map(|k| TruncPoly::monomial(field, WITNESS_N, k)));
    let bigger = close_generators(field, WITNESS_N, &listed).expect("valid generators");
    v.check(
        "witness.with-x11",
        "adjoining x^10, x^11, x^13 gives dimension 8 with E = {0,4,6,8,10,11,12,13}",
        bigger.dim() == 8 && bigger.exponent_set().elements() == [0, 4, 6, 8, 10, 11, 12, 13],
        format!("dim {}, E = {}", bigger.dim(), bigger.exponent_set()),
    );
    (Some(r), v)
}

/// The smallest non-thin subalgebra, in `F_p[x]/x^14`. Any failed check is
/// returned as `ClaimViolated`.
pub fn build_witness(field: PrimeField) -> Result<Subalgebra> {
    let (r, v) = witness_claims(field);
    if let Some(c) = v.failures().next() {
        return Err(Error::ClaimViolated(format!(
            "{} ({}): {}",
            c.id, c.claim, c.detail
        )));
    }
    Ok(r.expect("closed when every claim passes"))
}

/// The two exponent sets at `n = 14` carrying non-thin algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `{0,4,6,8,10,12,13}`, seven parameters.
    E1,
    /// `{0,4,6,8,10,11,12,13}`, five parameters.
    E2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::E1 => "E1",
            Family::E2 => "E2",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E1" | "e1" => Ok(Family::E1),
            "E2" | "e2" => Ok(Family::E2),
            other => Err(Error::Unsupported(format!("unknown family {other:?}"))),
        }
    }
}

// Parameter indices: a=0, b=1, c=2, d=3, e=4, f=5, g=6.
const A: usize = 0;
const C: usize = 2;

impl Family {
    pub fn template(self) -> GeneratorTemplate {
        match self {
            Family::E1 => GeneratorTemplate::from_slots(
                WITNESS_N,
                &WITNESS_E,
                &[
                    (4, &[(5, 0), (7, 1), (9, 3), (11, 5)]),
                    (6, &[(7, 2), (9, 4), (11, 6)]),
                    (13, &[]),
                ],
            ),
            Family::E2 => GeneratorTemplate::from_slots(
                WITNESS_N,
                &[0, 4, 6, 8, 10, 11, 12, 13],
                &[
                    (4, &[(5, 0), (7, 1), (9, 3)]),
                    (6, &[(7, 2), (9, 4)]),
                    (11, &[]),
                    (13, &[]),
                ],
            ),
        }
        .expect("fixed template is valid")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyScan {
    pub family: Family,
    pub p: u32,
    pub params: usize,
    pub thin: u64,
    pub non_thin: u64,
    /// Distinct algebras among all instantiations.
    pub distinct: u64,
    /// Thin exactly when `3a = 2c`, at every assignment.
    pub criterion_holds: bool,
}

/// Instantiates every parameter tuple of the family, closes it, and tags
/// thinness. Fails if some closure has the wrong exponent set.
pub fn family_scan_14(field: PrimeField, family: Family) -> Result<FamilyScan> {
    let t = family.template();
    let all = t.instantiate_all(field)?;
    let mut thin = 0;
    let mut criterion_holds = true;
    let mut seen = BTreeSet::new();
    for (vals, alg) in &all {
        let e = alg.exponent_set();
        if e != t.exponents {
            return Err(Error::ClaimViolated(format!(
                "family {family} at {vals:?} closes to exponent set {e}, expected {}",
                t.exponents
            )));
        }
        let is_thin = alg.is_thin();
        let predicted =
            field.mul(3 % field.modulus(), vals[A]) == field.mul(2 % field.modulus(), vals[C]);
        criterion_holds &= is_thin == predicted;
        thin += is_thin as u64;
        seen.insert(alg);
    }
    Ok(FamilyScan {
        family,
        p: field.modulus(),
        params: t.params,
        thin,
        non_thin: all.len() as u64 - thin,
        distinct: seen.len() as u64,
        criterion_holds,
    })
}

pub fn family_claims(field: PrimeField) -> VerdictReport {
    let mut v = VerdictReport::new("families", field.modulus());
    let q = field.modulus() as u64;
    for fam in [Family::E1, Family::E2] {
        let id = fam.to_string().to_lowercase();
        match family_scan_14(field, fam) {
            Ok(s) => {
                let k = s.params as u32;
                v.check(
                    format!("families.{id}.counts"),
                    format!(
                        "{fam}: q^{} thin and q^{k} - q^{} non-thin algebras",
                        k - 1,
                        k - 1
                    ),
                    (s.thin, s.non_thin) == (q.pow(k - 1), q.pow(k) - q.pow(k - 1)),
                    format!("thin {}, non-thin {}", s.thin, s.non_thin),
                );
                v.check(
                    format!("families.{id}.criterion"),
                    format!("{fam}: thin exactly when 3a = 2c"),
                    s.criterion_holds,
                    format!("{} assignments checked", q.pow(k)),
                );
                v.check(
                    format!("families.{id}.distinct"),
                    format!("{fam}: distinct parameter tuples give distinct algebras"),
                    s.distinct == q.pow(k),
                    format!("{} distinct of {}", s.distinct, q.pow(k)),
                );
            }
            Err(e) => {
                v.check(
                    format!("families.{id}.exponents"),
                    format!("{fam}: every instantiation has the family's exponent set"),
                    false,
                    e.to_string(),
                );
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn witness_small_primes() {
        for p in [2, 3, 5] {
            let r = build_witness(f(p)).unwrap();
            assert_eq!(r.dim(), 7);
            assert_eq!(r.m_dims().m2, 4);
        }
    }

    #[test]
    fn family_e2_q2() {
        let s = family_scan_14(f(2), Family::E2).unwrap();
        assert_eq!((s.thin, s.non_thin, s.distinct), (16, 16, 32));
        assert!(s.criterion_holds);
        assert!(family_claims(f(2)).pass);
    }

    #[test]
    fn parse_family() {
        assert_eq!("E1".parse::<Family>().unwrap(), Family::E1);
        assert!("E3".parse::<Family>().is_err());
        assert_eq!(Family::E1.template().params, 7);
        assert_eq!(Family::E2.template().params, 5);
    }
}
