//! Sparse univariate polynomials with arbitrary-precision integer
//! coefficients. Exponents map to coefficients; zero coefficients are
//! never stored. All arithmetic is exact.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl BigPoly {
    pub fn zero() -> Self {
        BigPoly::default()
    }

    pub fn one() -> Self {
        BigPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: usize, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        BigPoly { coeffs }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut out = BigPoly::zero();
        for (e, c) in pairs {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, exp: usize, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.coeffs.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &BigPoly) -> BigPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    /// self + scale * rhs.
    pub fn add_scaled(&self, rhs: &BigPoly, scale: &BigInt) -> BigPoly {
        let mut out = self.clone();
        if scale.is_zero() {
            return out;
        }
        for (e, c) in rhs.terms() {
            out.add_term(e, c * scale);
        }
        out
    }

    pub fn mul(&self, rhs: &BigPoly) -> BigPoly {
        let mut out = BigPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, mut exp: usize) -> BigPoly {
        let mut base = self.clone();
        let mut out = BigPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                out = out.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Value at y = 1 (the sum of all coefficients).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn into_pairs(self) -> Vec<(usize, BigInt)> {
        self.coeffs.into_iter().collect()
    }
}
