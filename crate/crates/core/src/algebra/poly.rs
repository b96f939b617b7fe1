use std::fmt;

use super::field::PrimeField;
use crate::error::{Error, Result};

/// An element of `F_p[x]/x^n`; `coeffs[i]` is the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruncPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl TruncPoly {
    pub fn zero(field: PrimeField, n: usize) -> Self {
        Self {
            field,
            coeffs: vec![0; n],
        }
    }

    pub fn one(field: PrimeField, n: usize) -> Self {
        Self::monomial(field, n, 0)
    }

    /// `x^k`, which is zero once `k >= n`.
    pub fn monomial(field: PrimeField, n: usize, k: usize) -> Self {
        let mut p = Self::zero(field, n);
        if k < n {
            p.coeffs[k] = 1;
        }
        p
    }

    /// Reduces arbitrary integers mod `p`. Exactly `n` coefficients are required.
    pub fn from_ints(field: PrimeField, n: usize, coeffs: &[i64]) -> Result<Self> {
        if coeffs.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: coeffs.len(),
            });
        }
        Ok(Self {
            field,
            coeffs: coeffs.iter().map(|&c| field.reduce(c)).collect(),
        })
    }

    /// Sparse constructor from `(exponent, coefficient)` terms; terms at or
    /// beyond `n` are truncated.
    pub fn from_terms(field: PrimeField, n: usize, terms: &[(usize, i64)]) -> Self {
        let mut p = Self::zero(field, n);
        for &(k, c) in terms {
            if k < n {
                p.coeffs[k] = field.add(p.coeffs[k], field.reduce(c));
            }
        }
        p
    }

    pub(crate) fn from_residues(field: PrimeField, coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.modulus()));
        Self { field, coeffs }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Least exponent with a nonzero coefficient; `n` for the zero element.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|&c| c != 0)
            .unwrap_or(self.coeffs.len())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.modulus(),
                right: other.field.modulus(),
            });
        }
        if self.n() != other.n() {
            return Err(Error::BoundMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// Truncated product; terms `x^i` with `i >= n` are discarded.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        Self {
            field: self.field,
            coeffs: mul_slices(self.field, &self.coeffs, &other.coeffs),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field;
        Ok(Self {
            field: f,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field;
        Ok(Self {
            field: f,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, k: u32) -> Self {
        let f = self.field;
        let k = k % f.modulus();
        Self {
            field: f,
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, k)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.field, self.n());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Image in `F_p[x]/x^(n+1)` with a zero coefficient on `x^n`.
    pub fn lift(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(0);
        Self {
            field: self.field,
            coeffs,
        }
    }

    /// Image in `F_p[x]/x^(n-1)`.
    pub fn project(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.pop();
        Self {
            field: self.field,
            coeffs,
        }
    }
}

/// Truncated convolution of two residue slices of equal length.
pub(crate) fn mul_slices(field: PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len();
    let p = field.modulus() as u64;
    let va = a.iter().position(|&c| c != 0).unwrap_or(n);
    let vb = b.iter().position(|&c| c != 0).unwrap_or(n);
    let mut out = vec![0u32; n];
    if va + vb >= n {
        return out;
    }
    for (k, slot) in out.iter_mut().enumerate().skip(va + vb) {
        let mut acc: u64 = 0;
        for i in va..=k - vb {
            acc += a[i] as u64 * b[k - i] as u64;
        }
        *slot = (acc % p) as u32;
    }
    out
}

impl fmt::Debug for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (c, i) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "x^{i}")?,
                (_, 1) => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn witness_product() {
        let k = f(5);
        let a = TruncPoly::from_terms(k, 14, &[(4, 1), (5, 1)]);
        let b = TruncPoly::from_terms(k, 14, &[(6, 1), (7, 1)]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab,
            TruncPoly::from_terms(k, 14, &[(10, 1), (11, 2), (12, 1)])
        );
    }

    #[test]
    fn identity_and_truncation() {
        let k = f(7);
        let u = TruncPoly::from_terms(k, 6, &[(0, 3), (2, 5), (5, 1)]);
        assert_eq!(TruncPoly::one(k, 6).mul(&u).unwrap(), u);
        let top = TruncPoly::monomial(k, 6, 5);
        let x = TruncPoly::monomial(k, 6, 1);
        assert!(top.mul(&x).unwrap().is_zero());
    }

    #[test]
    fn valuations() {
        let k = f(5);
        assert_eq!(
            TruncPoly::from_terms(k, 14, &[(4, 1), (5, 1)]).valuation(),
            4
        );
        assert_eq!(TruncPoly::zero(k, 9).valuation(), 9);
        assert_eq!(
            TruncPoly::from_terms(k, 4, &[(0, 3), (2, 1)]).valuation(),
            0
        );
    }

    #[test]
    fn mismatches() {
        let a = TruncPoly::one(f(2), 4);
        assert_eq!(
            a.mul(&TruncPoly::one(f(3), 4)),
            Err(Error::FieldMismatch { left: 2, right: 3 })
        );
        assert_eq!(
            a.mul(&TruncPoly::one(f(2), 5)),
            Err(Error::BoundMismatch { left: 4, right: 5 })
        );
        assert!(TruncPoly::from_ints(f(2), 3, &[1, 0]).is_err());
    }

    #[test]
    fn display() {
        let k = f(5);
        let p = TruncPoly::from_terms(k, 14, &[(0, 1), (1, 1), (8, 1), (9, 2)]);
        assert_eq!(p.to_string(), "1 + x + x^8 + 2x^9");
        assert_eq!(TruncPoly::zero(k, 3).to_string(), "0");
    }
}
