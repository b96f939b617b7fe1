use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::echelon::subalgebras_with_exponent_set;
use super::poly::count_polynomials;
use super::subspace::all_closed_subspaces;
use crate::algebra::{MDims, PrimeField, Subalgebra};
use crate::error::{Error, Result};
use crate::monoid::{d_invariant, enumerate_partial_monoids, EMemo, PartialMonoid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Union over partial monoids `E` of the subalgebras with exponent set `E`.
    Echelon,
    /// Every unital subspace, filtered by closure.
    Subspace,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Echelon => "echelon",
            Method::Subspace => "subspace",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "echelon" => Ok(Method::Echelon),
            "subspace" => Ok(Method::Subspace),
            other => Err(Error::Unsupported(format!(
                "unknown census method {other:?}"
            ))),
        }
    }
}

/// Largest bound each method runs at without `force`.
pub fn feasibility_limit(method: Method, p: u32) -> usize {
    match (method, p) {
        (Method::Echelon, 2) => 16,
        (Method::Echelon, 3) => 14,
        (Method::Echelon, 5) => 11,
        (Method::Echelon, 7..=11) => 9,
        (Method::Echelon, 13..=17) => 8,
        (Method::Echelon, _) => 6,
        (Method::Subspace, 2) => 9,
        (Method::Subspace, 3) => 8,
        (Method::Subspace, 5) => 6,
        (Method::Subspace, 7) => 5,
        (Method::Subspace, _) => 4,
    }
}

pub fn check_feasible(method: Method, field: PrimeField, n: usize, force: bool) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidBound(n));
    }
    if !force && n > feasibility_limit(method, field.modulus()) {
        return Err(Error::Infeasible {
            what: match method {
                Method::Echelon => "echelon census",
                Method::Subspace => "subspace census",
            },
            p: field.modulus(),
            n,
        });
    }
    Ok(())
}

/// One censused subalgebra with its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraRecord {
    pub algebra: Subalgebra,
    #[serde(skip)]
    pub exponents: PartialMonoid,
    pub d: usize,
    pub dims: MDims,
    pub thin: bool,
}

impl AlgebraRecord {
    pub fn new(algebra: Subalgebra) -> Self {
        let exponents = algebra.exponent_set();
        let d = d_invariant(&exponents);
        let dims = algebra.m_dims();
        assert!(
            dims.quotient <= d,
            "dim m/m^2 = {} exceeds d(E) = {d} for {algebra:?}",
            dims.quotient
        );
        Self {
            thin: dims.quotient == d,
            algebra,
            exponents,
            d,
            dims,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidCount {
    #[serde(rename = "E")]
    pub members: Vec<usize>,
    pub cosize: usize,
    pub e: usize,
    pub d: usize,
    pub total: u64,
    pub thin: u64,
    pub non_thin: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    /// Every partial monoid of `[0, n-1]`.
    Full,
    /// A caller-chosen list of exponent sets.
    Restricted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub version: String,
    pub p: u32,
    pub n: usize,
    pub method: Method,
    pub scope: Scope,
    /// Sorted by exponent-set mask.
    pub monoids: Vec<MonoidCount>,
    pub codimension_totals: BTreeMap<usize, u64>,
    pub total: u64,
    #[serde(skip)]
    pub algebras: Vec<AlgebraRecord>,
}

impl CensusReport {
    /// Aggregates `algebras` over the listed exponent sets.
    pub fn from_algebras(
        field: PrimeField,
        n: usize,
        method: Method,
        scope: Scope,
        monoids: &[PartialMonoid],
        algebras: Vec<Subalgebra>,
    ) -> Self {
        let records: Vec<AlgebraRecord> =
            algebras.into_par_iter().map(AlgebraRecord::new).collect();
        let mut by_e: BTreeMap<PartialMonoid, (u64, u64)> =
            monoids.iter().map(|e| (e.clone(), (0, 0))).collect();
        for r in &records {
            let slot = by_e.entry(r.exponents.clone()).or_insert((0, 0));
            slot.0 += 1;
            if r.thin {
                slot.1 += 1;
            }
        }
        let mut memo = EMemo::new();
        let monoids: Vec<MonoidCount> = by_e
            .into_iter()
            .map(|(e, (total, thin))| MonoidCount {
                members: e.elements(),
                cosize: e.cosize(),
                e: memo.get(&e),
                d: d_invariant(&e),
                total,
                thin,
                non_thin: total - thin,
            })
            .collect();
        let mut codimension_totals = BTreeMap::new();
        for m in &monoids {
            *codimension_totals.entry(m.cosize).or_insert(0) += m.total;
        }
        let total = records.len() as u64;
        debug_assert_eq!(total, codimension_totals.values().sum::<u64>());
        Self {
            version: crate::VERSION.to_string(),
            p: field.modulus(),
            n,
            method,
            scope,
            monoids,
            codimension_totals,
            total,
            algebras: records,
        }
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated at construction")
    }

    pub fn non_thin_total(&self) -> u64 {
        self.monoids.iter().map(|m| m.non_thin).sum()
    }

    pub fn count_for(&self, e: &PartialMonoid) -> Option<&MonoidCount> {
        let members = e.elements();
        self.monoids.iter().find(|m| m.members == members)
    }

    /// Canonical bases, sorted; equal for equal sets of algebras.
    pub fn algebra_set(&self) -> Vec<&Subalgebra> {
        let mut v: Vec<&Subalgebra> = self.algebras.iter().map(|r| &r.algebra).collect();
        v.sort();
        v
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("E,total,thin,nonthin\n");
        for m in &self.monoids {
            let e: Vec<String> = m.members.iter().map(usize::to_string).collect();
            s.push_str(&format!(
                "\"{{{}}}\",{},{},{}\n",
                e.join(","),
                m.total,
                m.thin,
                m.non_thin
            ));
        }
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "<!-- {} -->\n### Subalgebras of F_{}[x]/x^{} ({} method)\n\n| E | e | d | total | thin | non-thin |\n|---|---|---|---|---|---|\n",
            self.version, self.p, self.n, self.method
        );
        for m in &self.monoids {
            let e: Vec<String> = m.members.iter().map(usize::to_string).collect();
            s.push_str(&format!(
                "| {{{}}} | {} | {} | {} | {} | {} |\n",
                e.join(", "),
                m.e,
                m.d,
                m.total,
                m.thin,
                m.non_thin
            ));
        }
        s.push_str(&format!("\nTotal: {}\n", self.total));
        s
    }
}

/// Subalgebras of `F_p[x]/x^n` by the chosen method, sorted.
pub fn census_algebras(field: PrimeField, n: usize, method: Method) -> Result<Vec<Subalgebra>> {
    match method {
        Method::Echelon => {
            let monoids = enumerate_partial_monoids(n)?;
            Ok(algebras_over(field, &monoids))
        }
        Method::Subspace => {
            if n > 64 {
                return Err(Error::Unsupported(format!("subspace census at n = {n}")));
            }
            Ok(all_closed_subspaces(field, n))
        }
    }
}

fn algebras_over(field: PrimeField, monoids: &[PartialMonoid]) -> Vec<Subalgebra> {
    monoids
        .par_iter()
        .map(|e| subalgebras_with_exponent_set(field, e))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Full census of `F_p[x]/x^n`, refusing scales beyond the feasibility wall
/// unless `force` is set.
pub fn full_census(
    field: PrimeField,
    n: usize,
    method: Method,
    force: bool,
) -> Result<CensusReport> {
    check_feasible(method, field, n, force)?;
    let monoids = enumerate_partial_monoids(n)?;
    let algebras = census_algebras(field, n, method)?;
    if method == Method::Subspace {
        for a in &algebras {
            let e = a.exponent_set();
            assert!(
                monoids.binary_search(&e).is_ok(),
                "exponent set {e:?} is not a partial monoid"
            );
        }
    }
    Ok(CensusReport::from_algebras(
        field,
        n,
        method,
        Scope::Full,
        &monoids,
        algebras,
    ))
}

/// Echelon census restricted to the given exponent sets (all at the same bound).
pub fn census_of_monoids(field: PrimeField, monoids: &[PartialMonoid]) -> Result<CensusReport> {
    let n = monoids
        .first()
        .map(PartialMonoid::n)
        .ok_or_else(|| Error::Unsupported("empty monoid list".into()))?;
    if let Some(bad) = monoids.iter().find(|e| e.n() != n) {
        return Err(Error::BoundMismatch {
            left: n,
            right: bad.n(),
        });
    }
    let mut sorted = monoids.to_vec();
    sorted.sort();
    sorted.dedup();
    let algebras = algebras_over(field, &sorted);
    Ok(CensusReport::from_algebras(
        field,
        n,
        Method::Echelon,
        Scope::Restricted,
        &sorted,
        algebras,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimensionCheck {
    pub c: usize,
    pub polynomial: String,
    pub predicted: u128,
    pub census: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountVerdict {
    pub version: String,
    pub p: u32,
    pub n: usize,
    pub rows: Vec<CodimensionCheck>,
    pub first_mismatch: Option<usize>,
    pub pass: bool,
}

/// Compares census counts per codimension with the count polynomials at `q = p`.
pub fn verify_count_tables(field: PrimeField, n: usize, force: bool) -> Result<CountVerdict> {
    let report = full_census(field, n, Method::Echelon, force)?;
    compare_counts(&report)
}

pub fn compare_counts(report: &CensusReport) -> Result<CountVerdict> {
    let n = report.n;
    let polys = count_polynomials(n)?;
    let rows: Vec<CodimensionCheck> = polys
        .iter()
        .enumerate()
        .map(|(i, poly)| {
            let c = i + 1;
            let predicted = poly.eval(report.p as u64);
            let census = report.codimension_totals.get(&c).copied().unwrap_or(0);
            CodimensionCheck {
                c,
                polynomial: poly.to_string(),
                predicted,
                census,
                pass: predicted == census as u128,
            }
        })
        .collect();
    let first_mismatch = rows.iter().find(|r| !r.pass).map(|r| r.c);
    Ok(CountVerdict {
        version: crate::VERSION.to_string(),
        p: report.p,
        n,
        pass: first_mismatch.is_none(),
        rows,
        first_mismatch,
    })
}

/// `Σ lift_count(R)` over a census: the number of subalgebras one level up
/// that do not contain `x^n`.
pub fn lift_total(report: &CensusReport) -> u128 {
    report
        .algebras
        .par_iter()
        .map(|r| r.algebra.lift_count())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn n6_q2_total() {
        let rep = full_census(f(2), 6, Method::Echelon, false).unwrap();
        assert_eq!(rep.total, 24);
        assert_eq!(rep.non_thin_total(), 0);
        let sub = full_census(f(2), 6, Method::Subspace, false).unwrap();
        assert_eq!(rep.monoids, sub.monoids);
        assert_eq!(rep.algebra_set(), sub.algebra_set());
    }

    #[test]
    fn walls() {
        assert!(matches!(
            full_census(f(2), 10, Method::Subspace, false),
            Err(Error::Infeasible { .. })
        ));
        assert!(check_feasible(Method::Subspace, f(3), 9, false).is_err());
        assert!(check_feasible(Method::Echelon, f(2), 17, false).is_err());
        assert!(check_feasible(Method::Echelon, f(2), 16, false).is_ok());
        assert!(full_census(f(5), 3, Method::Subspace, false).is_ok());
        assert!(check_feasible(Method::Subspace, f(2), 10, true).is_ok());
        assert_eq!("subspace".parse::<Method>().unwrap(), Method::Subspace);
        assert!("nope".parse::<Method>().is_err());
    }

    #[test]
    fn counts_match_small() {
        let v = verify_count_tables(f(2), 2, false).unwrap();
        assert!(v.pass);
        assert_eq!(v.rows[0].census, 1);
        let v = verify_count_tables(f(3), 7, false).unwrap();
        assert!(v.pass, "{v:?}");
    }

    #[test]
    fn lifting_identity_small() {
        let k = f(2);
        let r5 = full_census(k, 5, Method::Echelon, false).unwrap();
        let r6 = full_census(k, 6, Method::Echelon, false).unwrap();
        assert_eq!(r5.total, 9);
        assert_eq!(lift_total(&r5), 15);
        assert_eq!(r6.total as u128, r5.total as u128 + lift_total(&r5));
    }

    #[test]
    fn restricted_census() {
        let e = PartialMonoid::new(10, &[0, 5, 6]).unwrap();
        let rep = census_of_monoids(f(2), &[e.clone(), e.clone()]).unwrap();
        assert_eq!(rep.scope, Scope::Restricted);
        assert_eq!(rep.total, 64);
        assert_eq!(rep.count_for(&e).unwrap().thin, 64);
        assert!(census_of_monoids(f(2), &[]).is_err());
    }

    #[test]
    fn csv_and_markdown() {
        let rep = full_census(f(2), 3, Method::Echelon, false).unwrap();
        assert_eq!(
            rep.to_csv(),
            "E,total,thin,nonthin\n\"{0}\",1,1,0\n\"{0,2}\",1,1,0\n\"{0,1,2}\",1,1,0\n"
        );
        assert!(rep.to_markdown().contains("| {0, 2} | 0 | 1 | 1 | 1 | 0 |"));
    }
}
