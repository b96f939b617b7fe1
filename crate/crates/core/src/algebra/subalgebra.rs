use std::fmt;

use serde::{Deserialize, Serialize};

use super::echelon::Echelon;
use super::field::PrimeField;
use super::poly::{mul_slices, TruncPoly};
use crate::error::{Error, Result};
use crate::monoid::{d_invariant, Mask, PartialMonoid};

/// A unital subalgebra of `F_p[x]/x^n`, held as its reduced echelon basis.
///
/// Rows are sorted by pivot (valuation); each is monic and vanishes at every
/// other pivot, so equal algebras have identical bases.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subalgebra {
    field: PrimeField,
    n: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

/// `(dim m, dim m^2, dim m/m^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MDims {
    pub m: usize,
    pub m2: usize,
    pub quotient: usize,
}

impl Subalgebra {
    /// Trusted constructor for rows already in reduced echelon form and closed.
    pub(crate) fn from_echelon_rows(
        field: PrimeField,
        n: usize,
        rows: Vec<(usize, Vec<u32>)>,
    ) -> Self {
        let (pivots, rows) = rows.into_iter().unzip();
        let s = Self {
            field,
            n,
            pivots,
            rows,
        };
        debug_assert!(s.pivots.first() == Some(&0));
        s
    }

    fn from_echelon(ech: &Echelon, field: PrimeField) -> Self {
        Self::from_echelon_rows(
            field,
            ech.n(),
            ech.rows().map(|(p, r)| (p, r.to_vec())).collect(),
        )
    }

    /// `F_p` itself, spanned by 1.
    pub fn trivial(field: PrimeField, n: usize) -> Result<Self> {
        Self::from_span(field, n, &[TruncPoly::one(field, n)])
    }

    /// The whole of `F_p[x]/x^n`.
    pub fn full(field: PrimeField, n: usize) -> Result<Self> {
        close_generators(field, n, &[TruncPoly::monomial(field, n, 1)])
    }

    /// Echelonises `vectors` and verifies that the span contains 1 and is
    /// closed under multiplication.
    pub fn from_span(field: PrimeField, n: usize, vectors: &[TruncPoly]) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidBound(n));
        }
        let mut ech = Echelon::new(field, n);
        for v in vectors {
            check_shape(field, n, v)?;
            ech.insert(v.coeffs());
        }
        if !ech.contains(TruncPoly::one(field, n).coeffs()) {
            return Err(Error::NotUnital);
        }
        let rows: Vec<(usize, &[u32])> = ech.rows().collect();
        for (i, &(pa, ra)) in rows.iter().enumerate() {
            for &(pb, rb) in &rows[i..] {
                if pa + pb >= n {
                    continue;
                }
                if !ech.contains(&mul_slices(field, ra, rb)) {
                    return Err(Error::ClosureViolation {
                        left: pa,
                        right: pb,
                    });
                }
            }
        }
        Ok(Self::from_echelon(&ech, field))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis elements in ascending valuation order.
    pub fn basis(&self) -> Vec<TruncPoly> {
        self.rows
            .iter()
            .map(|r| TruncPoly::from_residues(self.field, r.clone()))
            .collect()
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = (usize, &[u32])> + '_ {
        self.pivots
            .iter()
            .copied()
            .zip(self.rows.iter().map(Vec::as_slice))
    }

    pub fn contains(&self, v: &TruncPoly) -> bool {
        if v.field() != self.field || v.n() != self.n {
            return false;
        }
        let f = self.field;
        let mut w = v.coeffs().to_vec();
        for (p, row) in self.basis_rows() {
            let c = w[p];
            if c != 0 {
                for (x, &r) in w.iter_mut().zip(row).skip(p) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        w.iter().all(|&c| c == 0)
    }

    /// The set of valuations of monic elements, i.e. the pivot set.
    pub fn exponent_set(&self) -> PartialMonoid {
        let mut mask = Mask::empty(self.n);
        for &p in &self.pivots {
            mask.insert(p);
        }
        PartialMonoid::from_mask_unchecked(self.n, mask)
    }

    /// Echelon basis of `m^2`, the span of all products of positive-valuation rows.
    fn m_squared(&self) -> Echelon {
        let mut ech = Echelon::new(self.field, self.n);
        let pos: Vec<(usize, &[u32])> = self.basis_rows().filter(|&(p, _)| p > 0).collect();
        for (i, &(pa, ra)) in pos.iter().enumerate() {
            for &(pb, rb) in &pos[i..] {
                if pa + pb < self.n {
                    ech.insert(&mul_slices(self.field, ra, rb));
                }
            }
        }
        ech
    }

    pub fn m_dims(&self) -> MDims {
        let m = self.dim() - 1;
        let m2 = self.m_squared().rank();
        MDims {
            m,
            m2,
            quotient: m - m2,
        }
    }

    /// `dim m/m^2 == d(E)`.
    ///
    /// Panics if `dim m/m^2 > d(E)`, which can never hold for a genuine subalgebra.
    pub fn is_thin(&self) -> bool {
        let q = self.m_dims().quotient;
        let d = d_invariant(&self.exponent_set());
        assert!(q <= d, "dim m/m^2 = {q} exceeds d(E) = {d} for {self:?}");
        q == d
    }

    /// `x^(n-1) ∈ m^2`.
    pub fn top_in_m_squared(&self) -> bool {
        self.n > 1
            && self
                .m_squared()
                .contains(TruncPoly::monomial(self.field, self.n, self.n - 1).coeffs())
    }

    /// Preimage under `F_p[x]/x^(n+1) -> F_p[x]/x^n`.
    pub fn preimage(&self) -> Subalgebra {
        let mut rows: Vec<(usize, Vec<u32>)> = self
            .basis_rows()
            .map(|(p, r)| {
                let mut v = r.to_vec();
                v.push(0);
                (p, v)
            })
            .collect();
        let mut top = vec![0; self.n + 1];
        top[self.n] = 1;
        rows.push((self.n, top));
        Subalgebra::from_echelon_rows(self.field, self.n + 1, rows)
    }

    /// Number of subalgebras of `F_q[x]/x^(n+1)` mapping isomorphically onto
    /// this one: zero when `x^n` lies in the square of the preimage's maximal
    /// ideal, and `q^(dim m/m^2)` otherwise.
    pub fn lift_count(&self) -> u128 {
        if self.preimage().top_in_m_squared() {
            0
        } else {
            let q = self.field.modulus() as u128;
            q.checked_pow(self.m_dims().quotient as u32)
                .expect("lift count overflows u128")
        }
    }

    /// Image under `F_p[x]/x^n -> F_p[x]/x^(n-1)`.
    pub fn project(&self) -> Result<Subalgebra> {
        if self.n < 2 {
            return Err(Error::InvalidBound(self.n - 1));
        }
        let vs: Vec<TruncPoly> = self.basis().iter().map(TruncPoly::project).collect();
        Subalgebra::from_span(self.field, self.n - 1, &vs)
    }
}

fn check_shape(field: PrimeField, n: usize, v: &TruncPoly) -> Result<()> {
    if v.field() != field {
        return Err(Error::FieldMismatch {
            left: field.modulus(),
            right: v.field().modulus(),
        });
    }
    if v.n() != n {
        return Err(Error::BoundMismatch {
            left: n,
            right: v.n(),
        });
    }
    Ok(())
}

/// The smallest unital multiplicatively closed subspace containing `gens`.
///
/// Each round multiplies only the rows added in the previous round against
/// the whole basis, until the rank stops growing.
pub fn close_generators(field: PrimeField, n: usize, gens: &[TruncPoly]) -> Result<Subalgebra> {
    if n < 1 {
        return Err(Error::InvalidBound(n));
    }
    let mut ech = Echelon::new(field, n);
    ech.insert(TruncPoly::one(field, n).coeffs());
    // Vectors inserted but not yet multiplied against the basis.
    let mut fresh: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        check_shape(field, n, g)?;
        if ech.insert(g.coeffs()).is_some() {
            fresh.push(g.coeffs().to_vec());
        }
    }
    let mut seen: Vec<Vec<u32>> = vec![TruncPoly::one(field, n).coeffs().to_vec()];
    while !fresh.is_empty() {
        seen.extend(fresh.iter().cloned());
        let mut next = Vec::new();
        for a in &fresh {
            for b in &seen {
                let prod = mul_slices(field, a, b);
                if ech.insert(&prod).is_some() {
                    next.push(prod);
                }
            }
        }
        fresh = next;
    }
    Ok(Subalgebra::from_echelon(&ech, field))
}

impl fmt::Debug for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subalgebra({}, n={}, span{{", self.field, self.n)?;
        for (i, b) in self.basis().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("})")
    }
}

/// Wire form `{p, n, basis: [[coeff, ...], ...]}` with rows sorted by pivot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraRepr {
    pub p: u32,
    pub n: usize,
    pub basis: Vec<Vec<u32>>,
}

impl Serialize for Subalgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubalgebraRepr {
            p: self.field.modulus(),
            n: self.n,
            basis: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subalgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = SubalgebraRepr::deserialize(d)?;
        let field = PrimeField::new(r.p).map_err(D::Error::custom)?;
        let vs = r
            .basis
            .iter()
            .map(|row| {
                let ints: Vec<i64> = row.iter().map(|&c| c as i64).collect();
                TruncPoly::from_ints(field, r.n, &ints)
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let alg = Subalgebra::from_span(field, r.n, &vs).map_err(D::Error::custom)?;
        if alg.dim() != r.basis.len() {
            return Err(D::Error::custom("basis rows are linearly dependent"));
        }
        Ok(alg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn t(k: PrimeField, n: usize, terms: &[(usize, i64)]) -> TruncPoly {
        TruncPoly::from_terms(k, n, terms)
    }

    fn witness_span(k: PrimeField) -> Vec<TruncPoly> {
        let n = 14;
        vec![
            TruncPoly::one(k, n),
            t(k, n, &[(4, 1), (5, 1)]),
            t(k, n, &[(6, 1), (7, 1)]),
            t(k, n, &[(8, 1), (9, 2), (10, 1)]),
            t(k, n, &[(10, 1), (11, 2), (12, 1)]),
            t(k, n, &[(12, 1)]),
            t(k, n, &[(13, 1)]),
        ]
    }

    #[test]
    fn witness_from_span() {
        let k = f(5);
        let r = Subalgebra::from_span(k, 14, &witness_span(k)).unwrap();
        assert_eq!(r.dim(), 7);
        assert_eq!(r.exponent_set().elements(), vec![0, 4, 6, 8, 10, 12, 13]);
        assert_eq!(
            r.m_dims(),
            MDims {
                m: 6,
                m2: 4,
                quotient: 2
            }
        );
        assert!(!r.is_thin());
        assert!(r.top_in_m_squared());
    }

    #[test]
    fn closure_of_two_generators_is_the_witness() {
        let k = f(5);
        let gens = &witness_span(k)[1..3];
        let r = close_generators(k, 14, gens).unwrap();
        assert_eq!(r, Subalgebra::from_span(k, 14, &witness_span(k)).unwrap());
        // With x^10, x^11, x^13 thrown in, x^11 enlarges the exponent set.
        let mut more = gens.to_vec();
        more.extend([10, 11, 13].map(|e| TruncPoly::monomial(k, 14, e)));
        let big = close_generators(k, 14, &more).unwrap();
        assert_eq!(big.dim(), 8);
        assert_eq!(
            big.exponent_set().elements(),
            vec![0, 4, 6, 8, 10, 11, 12, 13]
        );
    }

    #[test]
    fn small_closures() {
        let k = f(3);
        let r = close_generators(k, 3, &[TruncPoly::monomial(k, 3, 2)]).unwrap();
        assert_eq!(
            r.basis(),
            vec![TruncPoly::one(k, 3), TruncPoly::monomial(k, 3, 2)]
        );
        let full = close_generators(k, 7, &[TruncPoly::monomial(k, 7, 1)]).unwrap();
        assert_eq!(full.dim(), 7);
        // A nonconstant unit generates everything.
        let unit = t(k, 5, &[(0, 2), (1, 1)]);
        assert_eq!(close_generators(k, 5, &[unit]).unwrap().dim(), 5);
        // Constants contribute only the unit line.
        let c = t(k, 5, &[(0, 2)]);
        assert_eq!(close_generators(k, 5, &[c]).unwrap().dim(), 1);
    }

    #[test]
    fn span_violations() {
        let k = f(2);
        let one = TruncPoly::one(k, 3);
        let err = Subalgebra::from_span(k, 3, &[one, TruncPoly::monomial(k, 3, 1)]).unwrap_err();
        assert_eq!(err, Error::ClosureViolation { left: 1, right: 1 });
        let triv = Subalgebra::from_span(k, 5, &[TruncPoly::one(k, 5)]).unwrap();
        assert_eq!(triv.dim(), 1);
        assert_eq!(triv.exponent_set().elements(), vec![0]);
        assert_eq!(
            Subalgebra::from_span(k, 3, &[TruncPoly::monomial(k, 3, 2)]),
            Err(Error::NotUnital)
        );
    }

    #[test]
    fn full_algebra_dims() {
        let k = f(7);
        for n in 2..9 {
            let full = Subalgebra::full(k, n).unwrap();
            assert_eq!(
                full.m_dims(),
                MDims {
                    m: n - 1,
                    m2: n - 2,
                    quotient: 1
                }
            );
            assert!(full.is_thin());
            assert_eq!(full.exponent_set(), PartialMonoid::full(n).unwrap());
        }
    }

    #[test]
    fn non_thin_example_in_degree_18() {
        let k = f(3);
        let n = 18;
        let gens = [
            t(k, n, &[(6, 1), (9, 1)]),
            TruncPoly::monomial(k, n, 7),
            TruncPoly::monomial(k, n, 8),
        ];
        let r = close_generators(k, n, &gens).unwrap();
        assert_eq!(
            r.exponent_set().elements(),
            vec![0, 6, 7, 8, 12, 13, 14, 15, 16, 17]
        );
        assert_eq!(r.m_dims().quotient, 3);
        assert_eq!(d_invariant(&r.exponent_set()), 4);
        assert!(!r.is_thin());
    }

    #[test]
    fn lift_counts() {
        for p in [2u32, 3, 5] {
            let k = f(p);
            let r = close_generators(k, 3, &[TruncPoly::monomial(k, 3, 2)]).unwrap();
            assert_eq!(r.lift_count(), p as u128);
            for n in 1..6 {
                assert_eq!(Subalgebra::trivial(k, n).unwrap().lift_count(), 1);
            }
        }
    }

    #[test]
    fn preimage_projects_back() {
        let k = f(5);
        let r = Subalgebra::from_span(k, 14, &witness_span(k)).unwrap();
        let up = r.preimage();
        assert_eq!(up.n(), 15);
        assert_eq!(up.dim(), 8);
        assert_eq!(up.project().unwrap(), r);
    }

    #[test]
    fn json_shape() {
        let k = f(2);
        let r = close_generators(k, 4, &[t(k, 4, &[(2, 1), (3, 1)])]).unwrap();
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(js, r#"{"p":2,"n":4,"basis":[[1,0,0,0],[0,0,1,1]]}"#);
        let back: Subalgebra = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
        assert!(
            serde_json::from_str::<Subalgebra>(r#"{"p":2,"n":3,"basis":[[1,0,0],[0,1,0]]}"#)
                .is_err()
        );
    }
}
