//! Published reference tables, embedded at build time as JSON lines.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::PartialMonoid;

pub const SUBALGEBRA_TABLES: &str = include_str!("../fixtures/subalgebra_tables.jsonl");
pub const MONOID_TABLES: &str = include_str!("../fixtures/monoid_tables.jsonl");
pub const COUNT_TABLES: &str = include_str!("../fixtures/count_tables.jsonl");
pub const FROBENIUS_FAMILIES: &str = include_str!("../fixtures/frobenius_families.jsonl");

/// One coefficient of a generator: the parameter with index `param`
/// multiplies `x^pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slot {
    pub pos: usize,
    pub param: usize,
}

/// A generator of the form `x^base_exp + Σ a_param x^pos`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Template {
    pub base_exp: usize,
    pub slots: Vec<Slot>,
}

/// Generators of the family of subalgebras with exponent set `E`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRow {
    pub n: usize,
    #[serde(rename = "E")]
    pub members: Vec<usize>,
    pub e: usize,
    pub templates: Vec<Template>,
}

impl GeneratorRow {
    pub fn monoid(&self) -> Result<PartialMonoid> {
        PartialMonoid::new(self.n, &self.members)
    }

    /// Number of distinct parameters across all templates.
    pub fn parameter_count(&self) -> usize {
        self.templates
            .iter()
            .flat_map(|t| t.slots.iter().map(|s| s.param + 1))
            .max()
            .unwrap_or(0)
    }
}

/// Partial monoids of `[0, n-1]` with co-size `c`, tallied by `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidRow {
    pub n: usize,
    pub c: usize,
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
}

/// Coefficients (constant term first) of the count polynomial at `(n, c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub c: usize,
    pub coeffs: Vec<u64>,
}

/// An inclusion-maximal partial monoid with Frobenius element `n - 1`.
///
/// `e` is absent where the table leaves it unstated. For the exceptional set
/// it counts the thin algebras only. `printed_e` keeps the tabulated value
/// where it was corrected (see `fixtures/NOTES.md`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusRow {
    pub n: usize,
    #[serde(rename = "E")]
    pub members: Vec<usize>,
    pub e: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_e: Option<usize>,
    pub exceptional: bool,
}

impl FrobeniusRow {
    pub fn monoid(&self) -> Result<PartialMonoid> {
        PartialMonoid::new(self.n, &self.members)
    }
}

fn parse_lines<T: DeserializeOwned>(name: &str, text: &str) -> Result<Vec<T>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::Fixture(format!("{name}:{}: {e}", i + 1)))
        })
        .collect()
}

pub fn generator_rows() -> Result<Vec<GeneratorRow>> {
    parse_lines("subalgebra_tables", SUBALGEBRA_TABLES)
}

pub fn monoid_rows() -> Result<Vec<MonoidRow>> {
    parse_lines("monoid_tables", MONOID_TABLES)
}

pub fn count_rows() -> Result<Vec<CountRow>> {
    parse_lines("count_tables", COUNT_TABLES)
}

pub fn frobenius_rows() -> Result<Vec<FrobeniusRow>> {
    parse_lines("frobenius_families", FROBENIUS_FAMILIES)
}
