use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::{enumerate_partial_monoids, EMemo};

/// Integer polynomial in the formal variable `q`, `coeffs[k]` multiplying `q^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CountPolynomial {
    coeffs: Vec<u64>,
}

impl CountPolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_monomial(&mut self, degree: usize, count: u64) {
        if count == 0 {
            return;
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] += count;
    }

    pub fn eval(&self, q: u64) -> u128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * q as u128 + c as u128)
    }
}

impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "{c}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Whether a count polynomial is a proven count or an extrapolation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountRegime {
    /// Every subalgebra at this bound is thin, so the sum of `q^e(E)` is exact.
    Exact,
    /// Non-thin algebras exist from `n = 14` on; the sum is only what a
    /// thin-only model would predict.
    ThinModelPrediction,
}

impl CountRegime {
    pub fn for_bound(n: usize) -> Self {
        if n <= 13 {
            Self::Exact
        } else {
            Self::ThinModelPrediction
        }
    }
}

/// `Σ q^e(E)` over partial monoids of `[0, n-1]` with co-size `c`.
pub fn count_polynomial(n: usize, c: usize) -> Result<CountPolynomial> {
    if c < 1 || c >= n {
        return Err(Error::CodimensionOutOfRange { n, c });
    }
    Ok(count_polynomials(n)?.swap_remove(c - 1))
}

/// Count polynomials for every codimension `1..n`, in order.
pub fn count_polynomials(n: usize) -> Result<Vec<CountPolynomial>> {
    let mut memo = EMemo::new();
    let mut out = vec![CountPolynomial::default(); n.saturating_sub(1)];
    for e in enumerate_partial_monoids(n)? {
        let c = e.cosize();
        if c >= 1 {
            out[c - 1].add_monomial(memo.get(&e), 1);
        }
    }
    Ok(out)
}
