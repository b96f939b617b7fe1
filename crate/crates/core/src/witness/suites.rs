use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::construct::{family_claims, witness_claims, WITNESS_E, WITNESS_N};
use super::template::GeneratorTemplate;
use super::verdict::VerdictReport;
use crate::algebra::PrimeField;
use crate::census::{
    census_of_monoids, check_feasible, compare_counts, count_polynomial, feasibility_limit,
    full_census, lift_total, CensusReport, Method,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::monoid::{
    e_invariant, enumerate_partial_monoids, frobenius_completion, frobenius_maximal_monoids,
    has_multiplicity, monoid_table, property_n, PartialMonoid,
};

fn fmt_list(xs: &[usize]) -> String {
    let s: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", s.join(","))
}

/// Checks every generator-table row at bound `n` over `field`: parameter
/// count, exponent set and thinness of every instantiation, distinctness, and
/// per-codimension totals against the count polynomials.
pub fn verify_generator_tables(field: PrimeField, n: usize) -> Result<VerdictReport> {
    if !(1..=10).contains(&n) {
        return Err(Error::Unsupported(format!(
            "generator tables cover 1 <= n <= 10, got {n}"
        )));
    }
    let q = field.modulus() as u128;
    let mut v = VerdictReport::new("tables", field.modulus());
    let rows: Vec<_> = fixtures::generator_rows()?
        .into_iter()
        .filter(|r| r.n == n)
        .collect();
    let listed: BTreeSet<PartialMonoid> = rows.iter().map(|r| r.monoid()).collect::<Result<_>>()?;
    let all: BTreeSet<PartialMonoid> = enumerate_partial_monoids(n)?.into_iter().collect();
    v.check(
        format!("tables.n{n}.coverage"),
        format!("the n = {n} table lists every partial monoid exactly once"),
        listed == all && rows.len() == all.len(),
        format!("{} rows, {} partial monoids", rows.len(), all.len()),
    );
    let mut by_cosize: BTreeMap<usize, u128> = BTreeMap::new();
    for row in &rows {
        let t = GeneratorTemplate::from_row(row)?;
        let e = e_invariant(&t.exponents);
        let label = fmt_list(&row.members);
        let id = format!("tables.n{n}.{label}");
        v.check(
            format!("{id}.parameters"),
            format!("{label}: parameter count equals e(E)"),
            t.params == e && row.e == e,
            format!(
                "{} parameters, printed e {}, computed e {e}",
                t.params, row.e
            ),
        );
        let algs = t.instantiate_all(field)?;
        let wrong = algs.iter().find(|(_, a)| a.exponent_set() != t.exponents);
        v.check(
            format!("{id}.exponents"),
            format!("{label}: every instantiation closes to exponent set E"),
            wrong.is_none(),
            match wrong {
                Some((vals, a)) => format!("at {vals:?} the exponent set is {}", a.exponent_set()),
                None => format!("{} instantiations", algs.len()),
            },
        );
        let distinct: BTreeSet<_> = algs.iter().map(|(_, a)| a).collect();
        v.check(
            format!("{id}.distinct"),
            format!("{label}: distinct parameter tuples give distinct algebras"),
            distinct.len() == algs.len(),
            format!("{} distinct of {}", distinct.len(), algs.len()),
        );
        let non_thin = algs.iter().filter(|(_, a)| !a.is_thin()).count();
        v.check(
            format!("{id}.thin"),
            format!("{label}: every instantiation is thin"),
            non_thin == 0,
            format!("{non_thin} non-thin"),
        );
        *by_cosize.entry(t.exponents.cosize()).or_default() += distinct.len() as u128;
    }
    for c in 1..n {
        let poly = count_polynomial(n, c)?;
        let got = by_cosize.get(&c).copied().unwrap_or(0);
        v.check(
            format!("tables.n{n}.c{c}.count"),
            format!("the union over rows of co-size {c} has {poly} members at q = {q}"),
            got == poly.eval(q as u64),
            format!("{got} algebras, polynomial gives {}", poly.eval(q as u64)),
        );
    }
    Ok(v)
}

/// Partial monoid grids against the reference tables, `1 <= n <= 10`.
pub fn verify_monoid_tables() -> Result<VerdictReport> {
    let mut v = VerdictReport::new("tables", 0);
    let rows = fixtures::monoid_rows()?;
    for n in 1..=10 {
        let table = monoid_table(n)?;
        let expected: Vec<_> = rows.iter().filter(|r| r.n == n).collect();
        let mut mismatches = Vec::new();
        for r in &expected {
            let got: BTreeMap<usize, u64> = table
                .cells
                .get(&r.c)
                .cloned()
                .unwrap_or_default()
                .into_iter()
                .filter(|&(_, k)| k > 0)
                .collect();
            if got != r.counts || table.row_total(r.c) != r.total {
                mismatches.push(format!("c={}: got {got:?}, expected {:?}", r.c, r.counts));
            }
        }
        let rows_match = expected.len() == table.cells.len();
        v.check(
            format!("tables.n{n}.monoid-grid"),
            format!(
                "partial monoids of [0,{}] tallied by (co-size, e) match the reference grid",
                n - 1
            ),
            mismatches.is_empty() && rows_match,
            if mismatches.is_empty() {
                format!("{} rows", expected.len())
            } else {
                mismatches.join("; ")
            },
        );
    }
    Ok(v)
}

/// Printed `e` values of the generator tables against `e_invariant`.
pub fn verify_e_values() -> Result<VerdictReport> {
    let mut v = VerdictReport::new("tables", 0);
    let rows = fixtures::generator_rows()?;
    let bad: Vec<String> = rows
        .iter()
        .map(|r| Ok((r, e_invariant(&r.monoid()?))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(r, e)| r.e != *e)
        .map(|(r, e)| {
            format!(
                "n={} {}: printed {}, computed {e}",
                r.n,
                fmt_list(&r.members),
                r.e
            )
        })
        .collect();
    v.check(
        "tables.e-values",
        "e(E) equals the printed value for every generator-table row",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} rows", rows.len())
        } else {
            bad.join("; ")
        },
    );
    Ok(v)
}

/// Count polynomials against the reference tables, `2 <= n <= 10`.
pub fn verify_count_polynomials() -> Result<VerdictReport> {
    let mut v = VerdictReport::new("tables", 0);
    let rows = fixtures::count_rows()?;
    let mut seen = BTreeSet::new();
    for n in 2..=10 {
        let mut bad = Vec::new();
        for c in 1..n {
            let got = count_polynomial(n, c)?;
            match rows.iter().find(|r| r.n == n && r.c == c) {
                Some(r) if r.coeffs == got.coeffs() => {
                    seen.insert((n, c));
                }
                Some(r) => bad.push(format!("c={c}: got {got}, expected {:?}", r.coeffs)),
                None => bad.push(format!("c={c}: no reference entry")),
            }
        }
        v.check(
            format!("tables.n{n}.count-polynomials"),
            format!("count polynomials for n = {n} match the reference table"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} codimensions", n - 1)
            } else {
                bad.join("; ")
            },
        );
    }
    v.check(
        "tables.count-polynomials.complete",
        "every reference entry was compared",
        seen.len() == rows.len(),
        format!("{} of {}", seen.len(), rows.len()),
    );
    Ok(v)
}

/// Both census methods agree for every `n` up to `max_n`, and totals equal
/// the count polynomials plus one.
pub fn verify_dual_oracle(field: PrimeField, max_n: usize) -> Result<VerdictReport> {
    let mut v = VerdictReport::new("tables", field.modulus());
    for n in 1..=max_n {
        let ech = full_census(field, n, Method::Echelon, false)?;
        let sub = full_census(field, n, Method::Subspace, false)?;
        v.check(
            format!("census.n{n}.dual-oracle"),
            format!("echelon and subspace censuses of n = {n} give the same algebras"),
            ech.algebra_set() == sub.algebra_set() && ech.monoids == sub.monoids,
            format!("{} vs {} algebras", ech.total, sub.total),
        );
        if n >= 2 {
            let counts = compare_counts(&ech)?;
            let predicted: u128 = 1 + counts.rows.iter().map(|r| r.predicted).sum::<u128>();
            v.check(
                format!("census.n{n}.total"),
                format!("census total for n = {n} is the sum of the count polynomials plus one"),
                counts.pass && predicted == ech.total as u128,
                format!("census {}, predicted {predicted}", ech.total),
            );
        }
    }
    Ok(v)
}

/// Per-monoid law: every `E` carries exactly `q^e(E)` algebras.
pub fn per_monoid_claim(v: &mut VerdictReport, report: &CensusReport) -> bool {
    let q = report.p as u128;
    let bad: Vec<String> = report
        .monoids
        .iter()
        .filter(|m| m.total as u128 != q.pow(m.e as u32))
        .map(|m| format!("{}: {} vs q^{}", fmt_list(&m.members), m.total, m.e))
        .collect();
    v.check(
        format!("census.n{}.per-monoid", report.n),
        format!(
            "each exponent set E at n = {} carries q^e(E) algebras",
            report.n
        ),
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} exponent sets", report.monoids.len())
        } else {
            bad.join("; ")
        },
    )
}

pub fn verify_per_monoid_law(field: PrimeField, max_n: usize) -> Result<VerdictReport> {
    let mut v = VerdictReport::new("tables", field.modulus());
    for n in 1..=max_n {
        per_monoid_claim(&mut v, &full_census(field, n, Method::Echelon, false)?);
    }
    Ok(v)
}

/// `total(n+1) = total(n) + Σ lift_count` for `lo <= n <= hi`.
pub fn verify_lifting(field: PrimeField, lo: usize, hi: usize) -> Result<VerdictReport> {
    let mut v = VerdictReport::new("tables", field.modulus());
    let mut prev = full_census(field, lo, Method::Echelon, false)?;
    for n in lo..=hi {
        let next = full_census(field, n + 1, Method::Echelon, false)?;
        let lifts = lift_total(&prev);
        v.check(
            format!("census.n{n}.lifting"),
            format!(
                "total({}) = total({n}) + lifts of the n = {n} census",
                n + 1
            ),
            next.total as u128 == prev.total as u128 + lifts,
            format!("{} = {} + {lifts}", next.total, prev.total),
        );
        prev = next;
    }
    Ok(v)
}

/// Every algebra in full censuses `1 <= n <= max_n` is thin and every
/// exponent set carries `q^e(E)` algebras.
pub fn verify_thin_regime(field: PrimeField, max_n: usize) -> Result<VerdictReport> {
    let mut v = VerdictReport::new("frobenius", field.modulus());
    let reports: Vec<CensusReport> = (1..=max_n)
        .into_par_iter()
        .map(|n| full_census(field, n, Method::Echelon, false))
        .collect::<Result<_>>()?;
    for r in &reports {
        v.check(
            format!("census.n{}.thin", r.n),
            format!("every subalgebra at n = {} is thin", r.n),
            r.non_thin_total() == 0,
            format!("{} algebras, {} non-thin", r.total, r.non_thin_total()),
        );
        per_monoid_claim(&mut v, r);
    }
    Ok(v)
}

fn e1() -> PartialMonoid {
    PartialMonoid::new(WITNESS_N, &WITNESS_E).expect("fixed set")
}

fn e2() -> PartialMonoid {
    PartialMonoid::new(WITNESS_N, &[0, 4, 6, 8, 10, 11, 12, 13]).expect("fixed set")
}

/// Maximal Frobenius families at `n` (Frobenius number `n - 1`) against the
/// reference lists, and thinness of everything they govern.
///
/// For `n <= 13` the census covers every exponent set with property N (its
/// top element is a generator), which is where a non-thin algebra would
/// first appear. For `n = 14` the census is full where feasible and
/// otherwise restricted to the same sets.
pub fn verify_frobenius_families(field: PrimeField, n: usize) -> Result<VerdictReport> {
    if !(11..=14).contains(&n) {
        return Err(Error::Unsupported(format!(
            "Frobenius families cover 11 <= n <= 14, got {n}"
        )));
    }
    let q = field.modulus() as u128;
    let mut v = VerdictReport::new("frobenius", field.modulus());
    let rows: Vec<_> = fixtures::frobenius_rows()?
        .into_iter()
        .filter(|r| r.n == n)
        .collect();
    let listed: BTreeSet<PartialMonoid> = rows.iter().map(|r| r.monoid()).collect::<Result<_>>()?;
    let maximal: BTreeSet<PartialMonoid> = frobenius_maximal_monoids(n - 1)?.into_iter().collect();
    let show = |s: &BTreeSet<PartialMonoid>| {
        s.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    v.check(
        format!("frobenius.n{n}.maximal-sets"),
        format!(
            "maximal partial monoids with Frobenius element {} match the reference list",
            n - 1
        ),
        listed == maximal,
        format!("computed {}", show(&maximal)),
    );

    let with_n: Vec<PartialMonoid> = enumerate_partial_monoids(n)?
        .into_iter()
        .filter(property_n)
        .collect();
    let trivial = frobenius_completion(n - 1, &[])?.expect("empty seed never reaches f");
    let uncovered: Vec<String> = with_n
        .iter()
        .filter(|e| !e.is_subset(&trivial) && !maximal.iter().any(|m| e.is_subset(m)))
        .map(|e| e.to_string())
        .collect();
    v.check(
        format!("frobenius.n{n}.reduction"),
        "every property-N set lies in a listed maximal set or in the m^2 = 0 completion",
        uncovered.is_empty(),
        format!(
            "{} property-N sets; uncovered: {}",
            with_n.len(),
            uncovered.join(" ")
        ),
    );

    let full = n == WITNESS_N && check_feasible(Method::Echelon, field, n, false).is_ok();
    let report = if full {
        full_census(field, n, Method::Echelon, false)?
    } else {
        census_of_monoids(field, &with_n)?
    };
    let scope = if full {
        "all exponent sets"
    } else {
        "property-N exponent sets"
    };

    for r in &rows {
        let e = r.monoid()?;
        let label = fmt_list(&r.members);
        let computed = e_invariant(&e);
        let Some(count) = report.count_for(&e) else {
            v.check(
                format!("frobenius.n{n}.{label}.censused"),
                format!("{label} is covered by the census"),
                false,
                scope,
            );
            continue;
        };
        v.check(
            format!("frobenius.n{n}.{label}.total"),
            format!("{label} carries q^e(E) algebras in total"),
            count.total as u128 == q.pow(computed as u32),
            format!("{} algebras, e(E) = {computed}", count.total),
        );
        if let Some(stated) = r.e {
            // For the exceptional set the stated value counts the thin algebras.
            let observed = if r.exceptional {
                count.thin
            } else {
                count.total
            };
            v.check(
                format!("frobenius.n{n}.{label}.e"),
                format!(
                    "{label}: the tabulated e matches the census ({} algebras = q^{stated})",
                    if r.exceptional { "thin" } else { "all" }
                ),
                observed as u128 == q.pow(stated as u32) && (r.exceptional || stated == computed),
                match r.printed_e {
                    Some(p) => format!("{observed} algebras; printed {p}, corrected to {stated}"),
                    None => format!("{observed} algebras"),
                },
            );
        }
        v.check(
            format!("frobenius.n{n}.{label}.exceptional"),
            format!("{label} is flagged exceptional exactly when it carries non-thin algebras"),
            r.exceptional == (count.non_thin > 0),
            format!(
                "{} non-thin, multiplicity in E^(2): {}",
                count.non_thin,
                has_multiplicity(&e)
            ),
        );
    }

    if n < WITNESS_N {
        v.check(
            format!("frobenius.n{n}.thin"),
            format!("every subalgebra over a property-N set at n = {n} is thin"),
            report.non_thin_total() == 0,
            format!(
                "{} algebras over {} sets",
                report.total,
                report.monoids.len()
            ),
        );
        let fails_m: Vec<String> = report
            .algebras
            .iter()
            .filter(|r| r.algebra.top_in_m_squared())
            .take(3)
            .map(|r| format!("{:?}", r.algebra))
            .collect();
        v.check(
            format!("frobenius.n{n}.property-m"),
            format!("x^{} is never in m^2 over a property-N set", n - 1),
            fails_m.is_empty(),
            fails_m.join("; "),
        );
        let bad: Vec<String> = report
            .monoids
            .iter()
            .filter(|m| m.total as u128 != q.pow(m.e as u32))
            .map(|m| format!("{}: {} vs q^{}", fmt_list(&m.members), m.total, m.e))
            .collect();
        v.check(
            format!("frobenius.n{n}.per-monoid"),
            "each property-N set E carries q^e(E) algebras",
            bad.is_empty(),
            bad.join("; "),
        );
    } else {
        let located: Vec<Vec<usize>> = report
            .monoids
            .iter()
            .filter(|m| m.non_thin > 0)
            .map(|m| m.members.clone())
            .collect();
        let supersets = enumerate_partial_monoids(n)?
            .into_iter()
            .filter(|e| e1().is_subset(e))
            .count();
        v.check(
            format!("frobenius.n{n}.non-thin-location"),
            format!(
                "over {scope}, non-thin algebras occur exactly at {} and {}",
                e1(),
                e2()
            ),
            located == [e1().elements(), e2().elements()],
            format!(
                "non-thin at {located:?}; {supersets} partial monoids contain {}",
                e1()
            ),
        );
        let counts: Vec<(u128, u128)> = [e1(), e2()]
            .iter()
            .map(|e| {
                report
                    .count_for(e)
                    .map_or((0, 0), |m| (m.thin as u128, m.non_thin as u128))
            })
            .collect();
        v.check(
            format!("frobenius.n{n}.non-thin-counts"),
            "the census finds q^6 thin and q^7 - q^6 non-thin at E1, q^4 and q^5 - q^4 at E2",
            counts
                == [
                    (q.pow(6), q.pow(7) - q.pow(6)),
                    (q.pow(4), q.pow(5) - q.pow(4)),
                ],
            format!("{counts:?}"),
        );
        let others_thin: u64 = report
            .monoids
            .iter()
            .filter(|m| m.members != e1().elements() && m.members != e2().elements())
            .map(|m| m.total)
            .sum();
        v.check(
            format!("frobenius.n{n}.thin-elsewhere"),
            "every other censused algebra at n = 14 is thin",
            report.non_thin_total() as u128 == counts.iter().map(|c| c.1).sum::<u128>(),
            format!(
                "{others_thin} algebras over {} other sets",
                report.monoids.len() - 2
            ),
        );
    }
    Ok(v)
}

/// Over every censused algebra: `d(E) <= 2`, `dim m/m^2 = 1` and `#E <= 6`
/// each force thinness.
pub fn verify_minimality_props(census: &CensusReport) -> VerdictReport {
    let mut v = VerdictReport::new("minimality", census.p);
    let n = census.n;
    type Hyp = fn(&crate::census::AlgebraRecord) -> bool;
    let props: [(&str, &str, Hyp); 3] = [
        ("d-le-2", "d(E) in {1, 2} implies thin", |r| {
            (1..=2).contains(&r.d)
        }),
        ("quotient-1", "dim m/m^2 = 1 implies thin", |r| {
            r.dims.quotient == 1
        }),
        ("size-le-6", "#E <= 6 implies thin", |r| {
            r.exponents.len() <= 6
        }),
    ];
    for (id, claim, hyp) in props {
        let applicable = census.algebras.iter().filter(|r| hyp(r)).count();
        let counter: Vec<String> = census
            .algebras
            .iter()
            .filter(|r| hyp(r) && !r.thin)
            .take(3)
            .map(|r| format!("{:?}", r.algebra))
            .collect();
        v.check(
            format!("minimality.n{n}.{id}"),
            claim,
            counter.is_empty(),
            format!(
                "{applicable} of {} algebras satisfy the hypothesis{}",
                census.algebras.len(),
                if counter.is_empty() {
                    String::new()
                } else {
                    format!("; counterexamples: {}", counter.join("; "))
                }
            ),
        );
    }
    v
}

/// Minimality over full censuses up to `max_n`, plus the extremal values
/// realised by non-thin algebras.
pub fn minimality_suite(field: PrimeField, max_n: usize) -> Result<VerdictReport> {
    let mut v = VerdictReport::new("minimality", field.modulus());
    let reports: Vec<CensusReport> = (1..=max_n)
        .into_par_iter()
        .map(|n| full_census(field, n, Method::Echelon, false))
        .collect::<Result<_>>()?;
    let mut non_thin = Vec::new();
    for r in &reports {
        v.absorb(verify_minimality_props(r));
        non_thin.extend(r.algebras.iter().filter(|a| !a.thin).map(|a| (r.n, a)));
    }
    if max_n >= WITNESS_N {
        let min_n = non_thin.iter().map(|(n, _)| *n).min();
        let min_d = non_thin.iter().map(|(_, a)| a.d).min();
        let min_size = non_thin.iter().map(|(_, a)| a.exponents.len()).min();
        let min_quot = non_thin.iter().map(|(_, a)| a.dims.quotient).min();
        v.check(
            "minimality.extremes",
            "the smallest non-thin algebras have n = 14, d(E) = 3, #E = 7, dim m/m^2 = 2",
            (min_n, min_d, min_size, min_quot) == (Some(14), Some(3), Some(7), Some(2)),
            format!("n {min_n:?}, d {min_d:?}, #E {min_size:?}, quotient {min_quot:?}"),
        );
    }
    let (r, _) = witness_claims(field);
    let detail = match &r {
        Some(r) => {
            let e = r.exponent_set();
            format!(
                "d = {}, dim m/m^2 = {}, #E = {}",
                crate::monoid::d_invariant(&e),
                r.m_dims().quotient,
                e.len()
            )
        }
        None => "witness not constructed".into(),
    };
    v.check(
        "minimality.witness",
        "the witness lies outside every hypothesis (d = 3, dim m/m^2 = 2, #E = 7)",
        r.is_some_and(|r| {
            let e = r.exponent_set();
            crate::monoid::d_invariant(&e) == 3 && r.m_dims().quotient == 2 && e.len() == 7
        }),
        detail,
    );
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Families,
    Frobenius,
    Minimality,
    Tables,
    Witness,
}

impl Suite {
    /// In name order.
    pub const ALL: [Suite; 5] = [
        Suite::Families,
        Suite::Frobenius,
        Suite::Minimality,
        Suite::Tables,
        Suite::Witness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Families => "families",
            Suite::Frobenius => "frobenius",
            Suite::Minimality => "minimality",
            Suite::Tables => "tables",
            Suite::Witness => "witness",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite {s:?}")))
    }
}

/// Largest `n` whose full echelon census is within the default limits,
/// capped at `cap`.
fn census_reach(field: PrimeField, cap: usize) -> usize {
    feasibility_limit(Method::Echelon, field.modulus()).min(cap)
}

pub fn run_suite(field: PrimeField, suite: Suite) -> Result<VerdictReport> {
    let mut v = VerdictReport::new(suite.name(), field.modulus());
    match suite {
        Suite::Witness => v.absorb(witness_claims(field).1),
        Suite::Families => v.absorb(family_claims(field)),
        Suite::Tables => {
            v.absorb(verify_monoid_tables()?);
            v.absorb(verify_e_values()?);
            v.absorb(verify_count_polynomials()?);
            let reach = census_reach(field, 10);
            v.absorb(verify_per_monoid_law(field, reach)?);
            v.absorb(verify_dual_oracle(
                field,
                feasibility_limit(Method::Subspace, field.modulus()).min(reach),
            )?);
            v.absorb(verify_lifting(
                field,
                2,
                reach.saturating_sub(1).clamp(2, 9),
            )?);
            for n in 1..=10 {
                v.absorb(verify_generator_tables(field, n)?);
            }
        }
        Suite::Frobenius => {
            v.absorb(verify_thin_regime(field, census_reach(field, 13))?);
            for n in 11..=14 {
                v.absorb(verify_frobenius_families(field, n)?);
            }
        }
        Suite::Minimality => v.absorb(minimality_suite(field, census_reach(field, WITNESS_N))?),
    }
    v.suite = suite.name().to_string();
    Ok(v)
}

/// Runs the given suites in parallel; reports come back in name order.
pub fn run_suites(field: PrimeField, suites: &[Suite]) -> Result<Vec<VerdictReport>> {
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    suites
        .into_par_iter()
        .map(|s| run_suite(field, s))
        .collect()
}
