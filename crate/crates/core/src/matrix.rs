//! Dense matrices over a field with reduced row echelon form.
//!
//! RREF here is canonical (pivots are 1, pivot columns are cleared above and
//! below, rows ordered by pivot column, zero rows dropped), so two equal row
//! spaces always reduce to the same matrix.

use alloc::vec::Vec;

use crate::field::{Field, FieldVec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    cols: usize,
    rows: Vec<Vec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn new(cols: usize, rows: Vec<Vec<F>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { cols, rows }
    }

    pub fn identity(n: usize) -> Self {
        let mut rows = alloc::vec![alloc::vec![F::ZERO; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = F::ONE;
        }
        Matrix { cols: n, rows }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.rows[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[F]> {
        self.rows.iter().map(|r| r.as_slice())
    }

    pub fn row_vec(&self, i: usize) -> FieldVec<F> {
        FieldVec::new(self.rows[i].clone())
    }

    /// Reduce to canonical RREF in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            // find a row at or below r with a nonzero entry in column c
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r][c].inv().expect("pivot is nonzero");
            for e in self.rows[r].iter_mut() {
                *e = e.mul(inv);
            }
            for i in 0..self.rows.len() {
                if i != r && !self.rows[i][c].is_zero() {
                    let f = self.rows[i][c];
                    for j in 0..self.cols {
                        let sub = f.mul(self.rows[r][j]);
                        self.rows[i][j] = self.rows[i][j].sub(sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows.len() {
                break;
            }
        }
        self.rows.truncate(r);
        pivots
    }

    /// Row-reduce choosing pivots in the given column order. Rows end up
    /// sorted by the position of their pivot in `order`; returns the pivot
    /// columns in that order. Used to re-systematize a generator on a
    /// chosen information set.
    pub fn rref_in_order(&mut self, order: &[usize]) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in order {
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r][c].inv().expect("pivot is nonzero");
            for e in self.rows[r].iter_mut() {
                *e = e.mul(inv);
            }
            for i in 0..self.rows.len() {
                if i != r && !self.rows[i][c].is_zero() {
                    let f = self.rows[i][c];
                    for j in 0..self.cols {
                        let sub = f.mul(self.rows[r][j]);
                        self.rows[i][j] = self.rows[i][j].sub(sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows.len() {
                break;
            }
        }
        pivots
    }

    /// Basis of the right kernel: all v with M v^T = 0, returned in RREF.
    pub fn kernel(&self) -> Matrix<F> {
        let mut reduced = self.clone();
        let pivots = reduced.rref();
        let k = pivots.len();
        let mut is_pivot = alloc::vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - k);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = alloc::vec![F::ZERO; self.cols];
            v[free] = F::ONE;
            // pivot row i has its pivot in column pivots[i]; solve for it
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = reduced.rows[i][free].neg();
            }
            basis.push(v);
        }
        let mut m = Matrix::new(self.cols, basis);
        m.rref();
        m
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut rows = alloc::vec![alloc::vec![F::ZERO; self.rows.len()]; self.cols];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                rows[j][i] = e;
            }
        }
        Matrix {
            cols: self.rows.len(),
            rows,
        }
    }

    /// Entry-wise conjugation (squares every entry over GF(4)).
    pub fn conj(&self) -> Matrix<F> {
        Matrix {
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|e| e.conj()).collect())
                .collect(),
        }
    }

    /// Reduce `v` against the rows (assumed RREF with the given pivots);
    /// returns the remainder.
    pub fn reduce_vector(&self, pivots: &[usize], v: &FieldVec<F>) -> FieldVec<F> {
        let mut w: Vec<F> = v.as_slice().to_vec();
        for (i, &pc) in pivots.iter().enumerate() {
            if !w[pc].is_zero() {
                let f = w[pc];
                for (j, &e) in self.rows[i].iter().enumerate() {
                    w[j] = w[j].sub(f.mul(e));
                }
            }
        }
        FieldVec::new(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf3;

    fn m3(cols: usize, data: &[&[u8]]) -> Matrix<Gf3> {
        Matrix::new(
            cols,
            data.iter()
                .map(|r| r.iter().map(|&v| Gf3::new(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_is_fixed_by_rref() {
        let mut m = Matrix::<Gf3>::identity(3);
        let expect = m.clone();
        m.rref();
        assert_eq!(m, expect);
    }

    #[test]
    fn dependent_row_is_dropped() {
        // row 2 = 2 * row 1
        let mut m = m3(2, &[&[1, 2], &[2, 1]]);
        m.rref();
        assert_eq!(m, m3(2, &[&[1, 2]]));
    }

    #[test]
    fn rref_is_canonical_under_row_permutation() {
        let mut a = m3(4, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let mut b = m3(4, &[&[0, 1, 1, 2], &[1, 0, 1, 1]]);
        a.rref();
        b.rref();
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_is_orthogonal_complement() {
        let m = m3(4, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let k = m.kernel();
        assert_eq!(k.n_rows(), 2);
        for kr in 0..k.n_rows() {
            for mr in 0..m.n_rows() {
                let dot = k
                    .row(kr)
                    .iter()
                    .zip(m.row(mr))
                    .fold(Gf3::ZERO, |acc, (&a, &b)| acc.add(a.mul(b)));
                assert!(dot.is_zero());
            }
        }
    }
}
