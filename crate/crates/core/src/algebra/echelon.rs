use super::field::PrimeField;

/// Incremental reduced row echelon form over `F_p`, indexed by pivot column.
///
/// Every stored row is monic at its pivot and zero at every other pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    rows: Vec<Option<Vec<u32>>>,
    rank: usize,
}

impl Echelon {
    pub fn new(field: PrimeField, n: usize) -> Self {
        Self {
            field,
            rows: vec![None; n],
            rank: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.rows.get(col).is_some_and(Option::is_some)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().map(|_| i))
    }

    pub fn row(&self, pivot: usize) -> Option<&[u32]> {
        self.rows.get(pivot).and_then(|r| r.as_deref())
    }

    /// Rows in ascending pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &[u32])> + '_ {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_deref().map(|r| (i, r)))
    }

    /// Clears every pivot column of `v`.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for col in 0..v.len() {
            let c = v[col];
            if c == 0 {
                continue;
            }
            if let Some(row) = &self.rows[col] {
                for (x, &r) in v.iter_mut().zip(row.iter()).skip(col) {
                    if r != 0 {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&c| c == 0)
    }

    /// Inserts `v`, returning the new pivot if the rank grew.
    pub fn insert(&mut self, v: &[u32]) -> Option<usize> {
        debug_assert_eq!(v.len(), self.n());
        let f = self.field;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let pivot = w.iter().position(|&c| c != 0)?;
        let inv = f.inv(w[pivot]).expect("nonzero pivot");
        for x in w.iter_mut().skip(pivot) {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut().flatten() {
            let c = row[pivot];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(w.iter()).skip(pivot) {
                    if r != 0 {
                        *x = f.sub(*x, f.mul(c, r));
                    }
                }
            }
        }
        self.rows[pivot] = Some(w);
        self.rank += 1;
        Some(pivot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form() {
        let f = PrimeField::new(5).unwrap();
        let mut e = Echelon::new(f, 4);
        assert_eq!(e.insert(&[0, 2, 1, 0]), Some(1));
        assert_eq!(e.row(1), Some(&[0, 1, 3, 0][..]));
        assert_eq!(e.insert(&[0, 0, 1, 1]), Some(2));
        // Column 2 is now cleared from row 1.
        assert_eq!(e.row(1), Some(&[0, 1, 0, 2][..]));
        assert_eq!(e.insert(&[0, 1, 1, 3]), None);
        assert!(e.contains(&[0, 3, 3, 4]));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(e.insert(&[0, 0, 0, 0]), None);
    }
}
