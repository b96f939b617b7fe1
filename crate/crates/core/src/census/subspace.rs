//! Brute-force oracle: every subspace of `F_p^n` containing 1, filtered by
//! multiplicative closure. Shares no enumeration or membership code with the
//! exponent-set search, only the truncated product.

use crate::algebra::{mul_slices, PrimeField, Subalgebra};

/// All unital subalgebras of `F_p[x]/x^n`, sorted.
pub fn all_closed_subspaces(field: PrimeField, n: usize) -> Vec<Subalgebra> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let positive = n - 1;
    for bits in 0u64..(1u64 << positive) {
        let pivots: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|j| (bits >> (j - 1)) & 1 == 1))
            .collect();
        for_each_reduced_matrix(field, n, &pivots, |rows| {
            if is_closed(field, n, rows) {
                out.push(Subalgebra::from_echelon_rows(
                    field,
                    n,
                    pivots.iter().copied().zip(rows.iter().cloned()).collect(),
                ));
            }
        });
    }
    out.sort();
    out
}

/// Visits every reduced echelon matrix with the given pivot columns whose
/// first row is exactly `e_0`.
fn for_each_reduced_matrix(
    field: PrimeField,
    n: usize,
    pivots: &[usize],
    mut visit: impl FnMut(&[Vec<u32>]),
) {
    let is_pivot = |j: usize| pivots.contains(&j);
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .skip(1)
        .flat_map(|(r, &v)| {
            (v + 1..n)
                .filter(move |&j| !is_pivot(j))
                .map(move |j| (r, j))
        })
        .collect();
    let q = field.modulus() as u64;
    let total = q.pow(free.len() as u32);
    let mut rows: Vec<Vec<u32>> = pivots
        .iter()
        .map(|&v| {
            let mut r = vec![0; n];
            r[v] = 1;
            r
        })
        .collect();
    for mut code in 0..total {
        for &(r, j) in free.iter().rev() {
            rows[r][j] = (code % q) as u32;
            code /= q;
        }
        visit(&rows);
    }
}

fn is_closed(field: PrimeField, n: usize, rows: &[Vec<u32>]) -> bool {
    let base = rank(field, rows.to_vec());
    for i in 1..rows.len() {
        for j in i..rows.len() {
            let prod = mul_slices(field, &rows[i], &rows[j]);
            if prod.iter().all(|&c| c == 0) {
                continue;
            }
            let mut ext = rows.to_vec();
            ext.push(prod);
            if rank(field, ext) != base {
                return false;
            }
        }
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    true
}

/// Plain Gaussian elimination.
fn rank(field: PrimeField, mut m: Vec<Vec<u32>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = field.inv(m[r][c]).expect("nonzero");
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = field.mul(row[c], inv);
                for (x, &y) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let f2 = PrimeField::new(2).unwrap();
        // n = 4 at q = 2: 1 + 1 + (q+1) + 1 = 6.
        assert_eq!(all_closed_subspaces(f2, 4).len(), 6);
        assert_eq!(all_closed_subspaces(f2, 1).len(), 1);
    }

    #[test]
    fn rank_basics() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(rank(f, vec![vec![1, 2], vec![2, 1]]), 1);
        assert_eq!(rank(f, vec![vec![1, 0], vec![0, 1], vec![1, 1]]), 2);
        assert_eq!(rank(f, vec![]), 0);
    }
}
