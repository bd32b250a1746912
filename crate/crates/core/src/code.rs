//! Linear codes over GF(3)/GF(4) with canonical generator matrices.
//!
//! A [`LinearCode`] always stores its generator in canonical RREF, so two
//! equal codes (as sets of codewords) compare equal structurally. Duality is
//! always taken under the field's natural form: Euclidean over GF(3),
//! Hermitian over GF(4).

use alloc::vec::Vec;

use crate::error::Error;
use crate::field::{Field, FieldKind, FieldVec};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode<F: Field> {
    n: usize,
    gen: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> LinearCode<F> {
    /// Build a code from spanning rows; the rows are reduced to canonical
    /// RREF and zero rows are dropped.
    pub fn from_rows(n: usize, rows: Vec<FieldVec<F>>) -> Result<Self, Error> {
        for r in &rows {
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
        }
        let mut gen = Matrix::new(n, rows.into_iter().map(|r| r.as_slice().to_vec()).collect());
        let pivots = gen.rref();
        Ok(LinearCode { n, gen, pivots })
    }

    pub fn from_matrix(gen: Matrix<F>) -> Self {
        let n = gen.cols();
        let mut gen = gen;
        let pivots = gen.rref();
        LinearCode { n, gen, pivots }
    }

    /// The zero code of length n.
    pub fn zero(n: usize) -> Self {
        LinearCode {
            n,
            gen: Matrix::new(n, Vec::new()),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.gen.n_rows()
    }

    pub fn field(&self) -> FieldKind {
        F::KIND
    }

    /// Number of codewords, if it fits in u128.
    pub fn size(&self) -> Option<u128> {
        (F::ORDER as u128).checked_pow(u32::try_from(self.dim()).ok()?)
    }

    pub fn generator(&self) -> &Matrix<F> {
        &self.gen
    }

    pub fn generator_rows(&self) -> impl Iterator<Item = FieldVec<F>> + '_ {
        (0..self.dim()).map(|i| self.gen.row_vec(i))
    }

    /// The dual code under the field's duality form.
    pub fn dual(&self) -> LinearCode<F> {
        // x is dual to all rows g iff conj(G) x^T = 0.
        let mut gen = self.gen.conj().kernel();
        let pivots = gen.rref();
        LinearCode {
            n: self.n,
            gen,
            pivots,
        }
    }

    /// True iff the code equals its dual. Self-dual codes have dimension
    /// n/2 and pairwise orthogonal generator rows, which is what is
    /// actually checked.
    pub fn is_self_dual(&self) -> bool {
        if self.n == 0 || !self.n.is_multiple_of(2) || self.dim() * 2 != self.n {
            return false;
        }
        for i in 0..self.dim() {
            let ri = self.gen.row_vec(i);
            for j in i..self.dim() {
                let d = ri.dot(&self.gen.row_vec(j)).expect("equal lengths");
                if !d.is_zero() {
                    return false;
                }
            }
        }
        // Existence conditions: self-dual ternary codes need 4 | n,
        // quaternary Hermitian ones need n even.
        match F::KIND {
            FieldKind::F3 => assert!(self.n.is_multiple_of(4), "ternary self-dual forces 4 | n"),
            FieldKind::F4 => assert!(self.n.is_multiple_of(2)),
        }
        true
    }

    /// Membership: x reduces to zero against the generator.
    pub fn contains(&self, x: &FieldVec<F>) -> Result<bool, Error> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(self.gen.reduce_vector(&self.pivots, x).is_zero())
    }

    /// Encode a message (length k) into a codeword (length n).
    pub fn encode(&self, msg: &[F]) -> FieldVec<F> {
        debug_assert_eq!(msg.len(), self.dim());
        let mut out = alloc::vec![F::ZERO; self.n];
        for (i, &m) in msg.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (j, &g) in self.gen.row(i).iter().enumerate() {
                out[j] = out[j].add(m.mul(g));
            }
        }
        FieldVec::new(out)
    }
}
