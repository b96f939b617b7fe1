//! Subalgebras with a prescribed exponent set, by filling the free slots of
//! the reduced echelon basis.

use crate::algebra::{mul_slices, PrimeField, Subalgebra};
use crate::monoid::PartialMonoid;

/// Every subalgebra of `F_p[x]/x^n` whose exponent set is exactly `e`, each
/// once.
///
/// The row with pivot `v > 0` is `x^v` plus free coefficients at every
/// `j > v` outside `e`; the unit row is exactly 1. Rows are fixed from the
/// highest pivot downwards, and a partial assignment is abandoned as soon as
/// a product of two fixed rows leaves their span (such a product only
/// involves rows of higher pivot, which are already fixed).
///
/// Output is ordered by the free coefficients read row-major, pivots
/// ascending, each in natural order.
pub fn subalgebras_with_exponent_set(field: PrimeField, e: &PartialMonoid) -> Vec<Subalgebra> {
    let n = e.n();
    let pivots = e.elements();
    let mut index_of = vec![None; n];
    for (i, &p) in pivots.iter().enumerate() {
        index_of[p] = Some(i);
    }
    let slots: Vec<Vec<usize>> = pivots
        .iter()
        .map(|&v| {
            if v == 0 {
                Vec::new()
            } else {
                (v + 1..n).filter(|&j| !e.contains(j)).collect()
            }
        })
        .collect();
    let rows: Vec<Vec<u32>> = pivots
        .iter()
        .map(|&v| {
            let mut r = vec![0; n];
            r[v] = 1;
            r
        })
        .collect();
    let mut search = Search {
        field,
        n,
        pivots: &pivots,
        index_of,
        slots,
        rows,
        out: Vec::new(),
    };
    if pivots.len() > 1 {
        search.fill(pivots.len() - 1);
    } else {
        search.emit();
    }
    let mut out = search.out;
    out.sort();
    out
}

struct Search<'a> {
    field: PrimeField,
    n: usize,
    pivots: &'a [usize],
    index_of: Vec<Option<usize>>,
    slots: Vec<Vec<usize>>,
    rows: Vec<Vec<u32>>,
    out: Vec<Subalgebra>,
}

impl Search<'_> {
    fn emit(&mut self) {
        let rows = self
            .pivots
            .iter()
            .copied()
            .zip(self.rows.iter().cloned())
            .collect();
        self.out
            .push(Subalgebra::from_echelon_rows(self.field, self.n, rows));
    }

    fn fill(&mut self, level: usize) {
        if level == 0 {
            self.emit();
            return;
        }
        let q = self.field.modulus();
        let k = self.slots[level].len();
        let mut digits = vec![0u32; k];
        loop {
            for (d, &j) in digits.iter().zip(&self.slots[level]) {
                self.rows[level][j] = *d;
            }
            if self.products_close(level) {
                self.fill(level - 1);
            }
            // Odometer, last slot fastest.
            let mut i = k;
            loop {
                if i == 0 {
                    for &j in &self.slots[level] {
                        self.rows[level][j] = 0;
                    }
                    return;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// Products of row `level` with itself and every higher row lie in the span.
    fn products_close(&self, level: usize) -> bool {
        let v = self.pivots[level];
        for w_idx in level..self.pivots.len() {
            let w = self.pivots[w_idx];
            if v + w >= self.n {
                break;
            }
            let prod = mul_slices(self.field, &self.rows[level], &self.rows[w_idx]);
            if !self.in_span_from(prod, v + w) {
                return false;
            }
        }
        true
    }

    /// Membership test for a vector of valuation at least `start`, using only
    /// rows with pivot `>= start`.
    fn in_span_from(&self, mut prod: Vec<u32>, start: usize) -> bool {
        let f = self.field;
        for j in start..self.n {
            let c = prod[j];
            if c == 0 {
                continue;
            }
            match self.index_of[j] {
                Some(idx) => {
                    let row = &self.rows[idx];
                    for (x, &r) in prod.iter_mut().zip(row).skip(j + 1) {
                        if r != 0 {
                            *x = f.sub(*x, f.mul(c, r));
                        }
                    }
                }
                None => return false,
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TruncPoly;
    use crate::monoid::{e_invariant, enumerate_partial_monoids};

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn family_x2_plus_ax3() {
        let k = f(2);
        let e = PartialMonoid::new(4, &[0, 2]).unwrap();
        let algs = subalgebras_with_exponent_set(k, &e);
        let expect: Vec<Subalgebra> = [0, 1]
            .iter()
            .map(|&a| {
                let g = TruncPoly::from_terms(k, 4, &[(2, 1), (3, a)]);
                crate::algebra::close_generators(k, 4, &[g]).unwrap()
            })
            .collect();
        assert_eq!(algs, expect);
    }

    #[test]
    fn trivial_exponent_set() {
        for n in 1..7 {
            let e = PartialMonoid::trivial(n).unwrap();
            let algs = subalgebras_with_exponent_set(f(2), &e);
            assert_eq!(algs, vec![Subalgebra::trivial(f(2), n).unwrap()]);
        }
    }

    #[test]
    fn e056_has_64_algebras() {
        let e = PartialMonoid::new(10, &[0, 5, 6]).unwrap();
        assert_eq!(e_invariant(&e), 6);
        let algs = subalgebras_with_exponent_set(f(2), &e);
        assert_eq!(algs.len(), 64);
        assert!(algs.iter().all(|a| a.exponent_set() == e));
        assert!(algs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn every_output_is_a_closed_span() {
        let k = f(3);
        for e in enumerate_partial_monoids(6).unwrap() {
            for a in subalgebras_with_exponent_set(k, &e) {
                let again = Subalgebra::from_span(k, 6, &a.basis()).unwrap();
                assert_eq!(again, a);
                assert_eq!(a.exponent_set(), e);
            }
        }
    }
}
