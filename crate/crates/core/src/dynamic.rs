//! Field-tagged wrappers for callers that pick the field at run time
//! (the CLI, the catalog loader). Mixed-tag and wrong-form operations are
//! rejected here; the typed layer underneath cannot express them.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::code::LinearCode;
use crate::enumerate::{weight_enumerator_full, WeightEnumerator};
use crate::error::Error;
use crate::field::{Field, FieldKind, FieldVec, Form, Gf3, Gf4};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnyElem {
    F3(Gf3),
    F4(Gf4),
}

// fallible arithmetic (tags can mismatch), so no operator impls
#[allow(clippy::should_implement_trait)]
impl AnyElem {
    pub fn kind(self) -> FieldKind {
        match self {
            AnyElem::F3(_) => FieldKind::F3,
            AnyElem::F4(_) => FieldKind::F4,
        }
    }

    pub fn parse(kind: FieldKind, tok: &str) -> Result<Self, Error> {
        match kind {
            FieldKind::F3 => Gf3::from_token(tok)
                .map(AnyElem::F3)
                .ok_or_else(|| Error::BadSymbol(String::from(tok))),
            FieldKind::F4 => Gf4::from_token(tok)
                .map(AnyElem::F4)
                .ok_or_else(|| Error::BadSymbol(String::from(tok))),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            AnyElem::F3(e) => e.token(),
            AnyElem::F4(e) => e.token(),
        }
    }

    pub fn add(self, rhs: Self) -> Result<Self, Error> {
        match (self, rhs) {
            (AnyElem::F3(a), AnyElem::F3(b)) => Ok(AnyElem::F3(a.add(b))),
            (AnyElem::F4(a), AnyElem::F4(b)) => Ok(AnyElem::F4(a.add(b))),
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn mul(self, rhs: Self) -> Result<Self, Error> {
        match (self, rhs) {
            (AnyElem::F3(a), AnyElem::F3(b)) => Ok(AnyElem::F3(a.mul(b))),
            (AnyElem::F4(a), AnyElem::F4(b)) => Ok(AnyElem::F4(a.mul(b))),
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn neg(self) -> Self {
        match self {
            AnyElem::F3(a) => AnyElem::F3(a.neg()),
            AnyElem::F4(a) => AnyElem::F4(a.neg()),
        }
    }

    pub fn inv(self) -> Result<Self, Error> {
        match self {
            AnyElem::F3(a) => a.inv().map(AnyElem::F3).ok_or(Error::DivisionByZero),
            AnyElem::F4(a) => a.inv().map(AnyElem::F4).ok_or(Error::DivisionByZero),
        }
    }

    /// GF(4) conjugation (squaring); an error over GF(3), which has no
    /// conjugation in this artifact.
    pub fn conjugate(self) -> Result<Self, Error> {
        match self {
            AnyElem::F3(_) => Err(Error::FormMismatch),
            AnyElem::F4(a) => Ok(AnyElem::F4(a.conj())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyVec {
    F3(FieldVec<Gf3>),
    F4(FieldVec<Gf4>),
}

impl AnyVec {
    pub fn parse(kind: FieldKind, row: &str) -> Result<Self, Error> {
        match kind {
            FieldKind::F3 => FieldVec::parse(row).map(AnyVec::F3),
            FieldKind::F4 => FieldVec::parse(row).map(AnyVec::F4),
        }
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            AnyVec::F3(_) => FieldKind::F3,
            AnyVec::F4(_) => FieldKind::F4,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyVec::F3(v) => v.len(),
            AnyVec::F4(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn weight(&self) -> usize {
        match self {
            AnyVec::F3(v) => v.weight(),
            AnyVec::F4(v) => v.weight(),
        }
    }

    /// 1-based support.
    pub fn support(&self) -> Vec<usize> {
        match self {
            AnyVec::F3(v) => v.support(),
            AnyVec::F4(v) => v.support(),
        }
    }

    pub fn render(&self) -> String {
        match self {
            AnyVec::F3(v) => v.render(),
            AnyVec::F4(v) => v.render(),
        }
    }
}

/// Inner product with explicit form selection: Euclidean requires GF(3)
/// operands, Hermitian requires GF(4); tags and lengths must agree.
pub fn inner_product(x: &AnyVec, y: &AnyVec, form: Form) -> Result<AnyElem, Error> {
    match (x, y, form) {
        (AnyVec::F3(a), AnyVec::F3(b), Form::Euclidean) => a.dot(b).map(AnyElem::F3),
        (AnyVec::F4(a), AnyVec::F4(b), Form::Hermitian) => a.dot(b).map(AnyElem::F4),
        (AnyVec::F3(_), AnyVec::F3(_), _) | (AnyVec::F4(_), AnyVec::F4(_), _) => {
            Err(Error::FormMismatch)
        }
        _ => Err(Error::FieldMismatch),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyCode {
    F3(LinearCode<Gf3>),
    F4(LinearCode<Gf4>),
}

impl AnyCode {
    pub fn kind(&self) -> FieldKind {
        match self {
            AnyCode::F3(_) => FieldKind::F3,
            AnyCode::F4(_) => FieldKind::F4,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyCode::F3(c) => c.len(),
            AnyCode::F4(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyCode::F3(c) => c.dim(),
            AnyCode::F4(c) => c.dim(),
        }
    }

    pub fn size(&self) -> Option<u128> {
        match self {
            AnyCode::F3(c) => c.size(),
            AnyCode::F4(c) => c.size(),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        match self {
            AnyCode::F3(c) => c.is_self_dual(),
            AnyCode::F4(c) => c.is_self_dual(),
        }
    }

    pub fn dual(&self) -> AnyCode {
        match self {
            AnyCode::F3(c) => AnyCode::F3(c.dual()),
            AnyCode::F4(c) => AnyCode::F4(c.dual()),
        }
    }

    pub fn contains(&self, x: &AnyVec) -> Result<bool, Error> {
        match (self, x) {
            (AnyCode::F3(c), AnyVec::F3(v)) => c.contains(v),
            (AnyCode::F4(c), AnyVec::F4(v)) => c.contains(v),
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn generator_rows(&self) -> Vec<AnyVec> {
        match self {
            AnyCode::F3(c) => c.generator_rows().map(AnyVec::F3).collect(),
            AnyCode::F4(c) => c.generator_rows().map(AnyVec::F4).collect(),
        }
    }

    pub fn weight_enumerator(&self, budget: u64) -> Result<WeightEnumerator, Error> {
        match self {
            AnyCode::F3(c) => weight_enumerator_full(c, budget),
            AnyCode::F4(c) => weight_enumerator_full(c, budget),
        }
    }

    pub fn neighbor(&self, x_hat: &AnyVec) -> Result<AnyCode, Error> {
        match (self, x_hat) {
            (AnyCode::F3(c), AnyVec::F3(v)) => crate::construct::neighbor(c, v).map(AnyCode::F3),
            (AnyCode::F4(c), AnyVec::F4(v)) => crate::construct::neighbor(c, v).map(AnyCode::F4),
            _ => Err(Error::FieldMismatch),
        }
    }

    /// Minimum-weight count from a full enumeration.
    pub fn alpha(&self, budget: u64) -> Result<(usize, BigUint), Error> {
        let we = self.weight_enumerator(budget)?;
        let d = we.min_weight().ok_or(Error::OutOfRange("zero code"))?;
        Ok((d, we.count(d)))
    }
}
