use std::collections::BTreeMap;

use crate::scalar::{FieldSpec, Scalar};

use super::subspace::Subspace;

type SparseRow = Vec<(usize, Scalar)>;

/// Incrementally maintained reduced row echelon form of a sparse linear
/// system. Rows are fed one at a time; redundant rows are dropped on entry.
///
/// Every stored row has a unit pivot and no entries in any other pivot
/// column, so the stored set is always fully reduced.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    field: FieldSpec,
    cols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        SparseEchelon {
            field,
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds a row given as (column, coefficient) pairs; duplicate columns are
    /// summed. Returns whether the rank increased.
    pub fn insert(&mut self, entries: impl IntoIterator<Item = (usize, Scalar)>) -> bool {
        if self.rows.len() == self.cols {
            return false;
        }
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in entries {
            debug_assert!(c < self.cols);
            if v.is_zero() {
                continue;
            }
            let slot = acc.entry(c).or_insert_with(|| Scalar::zero(self.field));
            *slot = &*slot + &v;
        }
        acc.retain(|_, v| !v.is_zero());

        // Clear existing pivot columns. Pivot rows carry no other pivot
        // columns, so the original coefficients are the right multipliers.
        let hits: Vec<(usize, Scalar)> = acc
            .iter()
            .filter(|(c, _)| self.rows.contains_key(c))
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        for (pc, coef) in hits {
            for (c, v) in &self.rows[&pc] {
                let slot = acc.entry(*c).or_insert_with(|| Scalar::zero(self.field));
                *slot = &*slot - &(&coef * v);
            }
        }
        acc.retain(|_, v| !v.is_zero());

        let Some((&pivot, lead)) = acc.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        let new_row: SparseRow = acc.into_iter().map(|(c, v)| (c, &v * &inv)).collect();

        for row in self.rows.values_mut() {
            let Ok(pos) = row.binary_search_by_key(&pivot, |(c, _)| *c) else {
                continue;
            };
            let coef = row[pos].1.clone();
            let mut merged: BTreeMap<usize, Scalar> = row.drain(..).collect();
            for (c, v) in &new_row {
                let slot = merged.entry(*c).or_insert_with(|| Scalar::zero(self.field));
                *slot = &*slot - &(&coef * v);
            }
            *row = merged.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        self.rows.insert(pivot, new_row);
        true
    }

    /// Basis of {x : row·x = 0 for every inserted row}.
    pub fn nullspace(&self) -> Subspace {
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !self.rows.contains_key(c))
            .collect();
        let mut position = vec![usize::MAX; self.cols];
        for (i, &f) in free.iter().enumerate() {
            position[f] = i;
        }
        let mut vectors = vec![vec![Scalar::zero(self.field); self.cols]; free.len()];
        for (i, &f) in free.iter().enumerate() {
            vectors[i][f] = Scalar::one(self.field);
        }
        for (&pivot, row) in &self.rows {
            for (c, v) in row {
                if *c != pivot {
                    vectors[position[*c]][pivot] = -v;
                }
            }
        }
        Subspace::span(self.field, self.cols, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{nullspace, Matrix};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn agrees_with_dense_nullspace() {
        let m = Matrix::from_i64(
            Q,
            &[&[1, 2, 0, -1], &[2, 4, 1, 0], &[3, 6, 1, -1], &[0, 0, 2, 4]],
        );
        let mut e = SparseEchelon::new(Q, 4);
        for i in 0..m.rows() {
            e.insert(m.row(i).iter().cloned().enumerate());
        }
        assert_eq!(e.rank(), m.rank());
        assert_eq!(e.nullspace(), nullspace(&m));
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let mut e = SparseEchelon::new(Q, 3);
        assert!(e.insert([(0, Scalar::one(Q)), (2, Scalar::one(Q))]));
        assert!(!e.insert([(0, Scalar::from_i64(Q, 2)), (2, Scalar::from_i64(Q, 2))]));
        assert!(!e.insert([(1, Scalar::one(Q)), (1, Scalar::from_i64(Q, -1))]));
        assert_eq!(e.rank(), 1);
    }
}
