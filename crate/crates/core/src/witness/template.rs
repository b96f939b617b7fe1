use rayon::prelude::*;

use crate::algebra::{close_generators, PrimeField, Subalgebra, TruncPoly};
use crate::error::{Error, Result};
use crate::fixtures::{GeneratorRow, Slot, Template};
use crate::monoid::PartialMonoid;

/// A parametrised family of generating sets: each generator is
/// `x^base_exp` plus parameters placed at fixed positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorTemplate {
    pub exponents: PartialMonoid,
    pub generators: Vec<Template>,
    pub params: usize,
}

impl GeneratorTemplate {
    pub fn new(exponents: PartialMonoid, generators: Vec<Template>) -> Result<Self> {
        let n = exponents.n();
        for t in &generators {
            if t.base_exp >= n {
                return Err(Error::IndexOutOfRange {
                    index: t.base_exp,
                    n,
                });
            }
            for s in &t.slots {
                if s.pos <= t.base_exp || s.pos >= n {
                    return Err(Error::IndexOutOfRange { index: s.pos, n });
                }
            }
        }
        let params = generators
            .iter()
            .flat_map(|t| t.slots.iter().map(|s| s.param + 1))
            .max()
            .unwrap_or(0);
        Ok(Self {
            exponents,
            generators,
            params,
        })
    }

    pub fn from_row(row: &GeneratorRow) -> Result<Self> {
        Self::new(row.monoid()?, row.templates.clone())
    }

    /// Shorthand: `&[(base, &[(pos, param)])]`.
    pub fn from_slots(
        n: usize,
        members: &[usize],
        gens: &[(usize, &[(usize, usize)])],
    ) -> Result<Self> {
        let generators = gens
            .iter()
            .map(|&(base_exp, slots)| Template {
                base_exp,
                slots: slots
                    .iter()
                    .map(|&(pos, param)| Slot { pos, param })
                    .collect(),
            })
            .collect();
        Self::new(PartialMonoid::new(n, members)?, generators)
    }

    pub fn n(&self) -> usize {
        self.exponents.n()
    }

    /// The generators at one parameter assignment.
    pub fn instantiate(&self, field: PrimeField, values: &[u32]) -> Result<Vec<TruncPoly>> {
        if values.len() != self.params {
            return Err(Error::LengthMismatch {
                expected: self.params,
                got: values.len(),
            });
        }
        let n = self.n();
        Ok(self
            .generators
            .iter()
            .map(|t| {
                let mut terms = vec![(t.base_exp, 1i64)];
                terms.extend(t.slots.iter().map(|s| (s.pos, values[s.param] as i64)));
                TruncPoly::from_terms(field, n, &terms)
            })
            .collect())
    }

    pub fn algebra(&self, field: PrimeField, values: &[u32]) -> Result<Subalgebra> {
        close_generators(field, self.n(), &self.instantiate(field, values)?)
    }

    /// Every assignment in `F_p^params`, the last parameter varying fastest.
    pub fn assignments(&self, field: PrimeField) -> Vec<Vec<u32>> {
        let q = field.modulus() as u64;
        let total = q
            .checked_pow(self.params as u32)
            .expect("assignment count overflows");
        (0..total)
            .map(|mut code| {
                let mut v = vec![0u32; self.params];
                for slot in v.iter_mut().rev() {
                    *slot = (code % q) as u32;
                    code /= q;
                }
                v
            })
            .collect()
    }

    /// Closures of all assignments, in assignment order.
    pub fn instantiate_all(&self, field: PrimeField) -> Result<Vec<(Vec<u32>, Subalgebra)>> {
        self.assignments(field)
            .into_par_iter()
            .map(|v| {
                let a = self.algebra(field, &v)?;
                Ok((v, a))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instantiation() {
        let k = PrimeField::new(3).unwrap();
        let t =
            GeneratorTemplate::from_slots(6, &[0, 3, 4], &[(3, &[(5, 0)]), (4, &[(5, 1)])]).unwrap();
        assert_eq!(t.params, 2);
        let g = t.instantiate(k, &[2, 1]).unwrap();
        assert_eq!(g[0].to_string(), "x^3 + 2x^5");
        assert_eq!(g[1].to_string(), "x^4 + x^5");
        assert_eq!(t.assignments(k).len(), 9);
        assert_eq!(t.assignments(k)[1], vec![0, 1]);
        assert!(t.instantiate(k, &[1]).is_err());
        let a = t.algebra(k, &[2, 1]).unwrap();
        assert_eq!(a.exponent_set(), t.exponents);
    }

    #[test]
    fn rejects_bad_positions() {
        assert!(GeneratorTemplate::from_slots(6, &[0, 3, 4], &[(3, &[(6, 0)])]).is_err());
        assert!(GeneratorTemplate::from_slots(6, &[0, 3, 4], &[(3, &[(2, 0)])]).is_err());
    }
}
