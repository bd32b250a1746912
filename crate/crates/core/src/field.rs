//! Arithmetic in GF(3) and GF(4), vectors over them, and the two inner
//! products that define duality.
//!
//! GF(3) is the integers mod 3. GF(4) = {0, 1, w, w2} with w2 = w + 1 and
//! characteristic 2; elements are stored as two bits (coefficient of 1,
//! coefficient of w), so addition is XOR.
//!
//! Duality uses the Euclidean inner product sum x_i y_i over GF(3) and the
//! Hermitian inner product sum x_i y_i^2 over GF(4); squaring is the GF(4)
//! conjugation (it fixes 0 and 1 and swaps w and w2).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hash;

use crate::error::Error;

/// Which of the two fields a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    F3,
    F4,
}

impl FieldKind {
    pub fn order(self) -> u64 {
        match self {
            FieldKind::F3 => 3,
            FieldKind::F4 => 4,
        }
    }

    /// The inner-product form that defines duality over this field.
    pub fn natural_form(self) -> Form {
        match self {
            FieldKind::F3 => Form::Euclidean,
            FieldKind::F4 => Form::Hermitian,
        }
    }

    /// Modulus of the minimum-weight count of a near-extremal self-dual
    /// code: 8 over GF(3), 9 over GF(4).
    pub fn alpha_modulus(self) -> u64 {
        match self {
            FieldKind::F3 => 8,
            FieldKind::F4 => 9,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::F3 => write!(f, "F3"),
            FieldKind::F4 => write!(f, "F4"),
        }
    }
}

/// Inner-product form. Euclidean applies to GF(3), Hermitian to GF(4).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    Euclidean,
    Hermitian,
}

/// Field element operations shared by [`Gf3`] and [`Gf4`].
///
/// Arithmetic is by named method rather than operator overloads so that
/// code generic over the field needs only this one bound.
#[allow(clippy::should_implement_trait)]
pub trait Field: Copy + Eq + Ord + Hash + fmt::Debug + 'static {
    const KIND: FieldKind;
    const ORDER: u64;
    const ZERO: Self;
    const ONE: Self;
    /// All elements, zero first, then one.
    const ELEMS: &'static [Self];

    fn add(self, rhs: Self) -> Self;
    fn mul(self, rhs: Self) -> Self;
    fn neg(self) -> Self;
    fn inv(self) -> Option<Self>;
    /// Conjugation used by the duality form: identity on GF(3),
    /// squaring on GF(4).
    fn conj(self) -> Self;
    fn token(self) -> &'static str;
    fn from_token(tok: &str) -> Option<Self>;

    fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    fn sub(self, rhs: Self) -> Self {
        self.add(rhs.neg())
    }
}

/// Element of GF(3): 0, 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf3(u8);

impl Gf3 {
    /// Construct from a residue; values are reduced mod 3.
    pub const fn new(v: u8) -> Self {
        Gf3(v % 3)
    }

    pub const fn value(self) -> u8 {
        self.0
    }
}

impl Field for Gf3 {
    const KIND: FieldKind = FieldKind::F3;
    const ORDER: u64 = 3;
    const ZERO: Self = Gf3(0);
    const ONE: Self = Gf3(1);
    const ELEMS: &'static [Self] = &[Gf3(0), Gf3(1), Gf3(2)];

    fn add(self, rhs: Self) -> Self {
        Gf3((self.0 + rhs.0) % 3)
    }

    fn mul(self, rhs: Self) -> Self {
        Gf3((self.0 * rhs.0) % 3)
    }

    fn neg(self) -> Self {
        Gf3((3 - self.0) % 3)
    }

    fn inv(self) -> Option<Self> {
        match self.0 {
            0 => None,
            // 1 and 2 are self-inverse: 2*2 = 4 = 1 mod 3.
            v => Some(Gf3(v)),
        }
    }

    fn conj(self) -> Self {
        self
    }

    fn token(self) -> &'static str {
        ["0", "1", "2"][self.0 as usize]
    }

    fn from_token(tok: &str) -> Option<Self> {
        match tok {
            "0" => Some(Gf3(0)),
            "1" => Some(Gf3(1)),
            "2" => Some(Gf3(2)),
            _ => None,
        }
    }
}

/// Element of GF(4): 0, 1, w or w2 where w2 = w + 1.
///
/// Stored as two bits (b1, b0) = (coefficient of w, coefficient of 1),
/// so 1 = 0b01, w = 0b10, w2 = 0b11 and addition is XOR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf4(u8);

impl Gf4 {
    pub const W: Self = Gf4(2);
    pub const W2: Self = Gf4(3);

    /// Construct from the two-bit encoding (masked to two bits).
    pub const fn new(v: u8) -> Self {
        Gf4(v & 3)
    }

    pub const fn value(self) -> u8 {
        self.0
    }
}

// Multiplication table; w*w = w2, w*w2 = 1, w2*w2 = w.
const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Field for Gf4 {
    const KIND: FieldKind = FieldKind::F4;
    const ORDER: u64 = 4;
    const ZERO: Self = Gf4(0);
    const ONE: Self = Gf4(1);
    const ELEMS: &'static [Self] = &[Gf4(0), Gf4(1), Gf4(2), Gf4(3)];

    fn add(self, rhs: Self) -> Self {
        Gf4(self.0 ^ rhs.0)
    }

    fn mul(self, rhs: Self) -> Self {
        Gf4(GF4_MUL[self.0 as usize][rhs.0 as usize])
    }

    fn neg(self) -> Self {
        // Characteristic 2: -x = x.
        self
    }

    fn inv(self) -> Option<Self> {
        match self.0 {
            0 => None,
            1 => Some(Gf4(1)),
            2 => Some(Gf4(3)),
            _ => Some(Gf4(2)),
        }
    }

    fn conj(self) -> Self {
        self.mul(self)
    }

    fn token(self) -> &'static str {
        ["0", "1", "w", "w2"][self.0 as usize]
    }

    fn from_token(tok: &str) -> Option<Self> {
        match tok {
            "0" => Some(Gf4(0)),
            "1" => Some(Gf4(1)),
            "w" => Some(Gf4(2)),
            "w2" => Some(Gf4(3)),
            _ => None,
        }
    }
}

/// A vector over GF(3) or GF(4). Coordinates are 1-based in all
/// user-facing output (supports, reports).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldVec<F: Field> {
    elems: Vec<F>,
}

impl<F: Field> FieldVec<F> {
    pub fn new(elems: Vec<F>) -> Self {
        FieldVec { elems }
    }

    pub fn zero(n: usize) -> Self {
        FieldVec {
            elems: alloc::vec![F::ZERO; n],
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn as_slice(&self) -> &[F] {
        &self.elems
    }

    pub fn get(&self, i: usize) -> F {
        self.elems[i]
    }

    pub fn is_zero(&self) -> bool {
        self.elems.iter().all(|e| e.is_zero())
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.elems.iter().filter(|e| !e.is_zero()).count()
    }

    /// 1-based indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.elems
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn scaled(&self, c: F) -> Self {
        FieldVec {
            elems: self.elems.iter().map(|&e| e.mul(c)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        if self.len() != rhs.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: rhs.len(),
            });
        }
        Ok(FieldVec {
            elems: self
                .elems
                .iter()
                .zip(&rhs.elems)
                .map(|(&a, &b)| a.add(b))
                .collect(),
        })
    }

    /// Inner product under the field's duality form: sum x_i y_i over
    /// GF(3), sum x_i y_i^2 over GF(4).
    pub fn dot(&self, rhs: &Self) -> Result<F, Error> {
        if self.len() != rhs.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: rhs.len(),
            });
        }
        Ok(self
            .elems
            .iter()
            .zip(&rhs.elems)
            .fold(F::ZERO, |acc, (&a, &b)| acc.add(a.mul(b.conj()))))
    }

    /// Parse a comma-separated token row (`0,1,2` / `0,1,w,w2`).
    pub fn parse(row: &str) -> Result<Self, Error> {
        row.split(',')
            .map(|tok| F::from_token(tok.trim()).ok_or_else(|| Error::BadSymbol(String::from(tok))))
            .collect::<Result<Vec<_>, _>>()
            .map(FieldVec::new)
    }

    /// Render as the comma-separated token row used by the catalog format.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(e.token());
        }
        out
    }
}

impl<F: Field> From<Vec<F>> for FieldVec<F> {
    fn from(elems: Vec<F>) -> Self {
        FieldVec { elems }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn all4() -> impl Iterator<Item = Gf4> {
        Gf4::ELEMS.iter().copied()
    }

    #[test]
    fn gf3_examples() {
        // 2 * 2 = 4 = 1 mod 3
        assert_eq!(Gf3::new(2).mul(Gf3::new(2)), Gf3::ONE);
        assert_eq!(Gf3::new(1).neg(), Gf3::new(2));
        assert_eq!(Gf3::new(0).inv(), None);
    }

    #[test]
    fn gf4_examples() {
        // w * w = w2 and w * w2 = 1 (so w^3 = 1)
        assert_eq!(Gf4::W.mul(Gf4::W), Gf4::W2);
        assert_eq!(Gf4::W.mul(Gf4::W2), Gf4::ONE);
        // w2 = w + 1
        assert_eq!(Gf4::W.add(Gf4::ONE), Gf4::W2);
        assert_eq!(Gf4::ZERO.inv(), None);
    }

    #[test]
    fn conjugation_fixes_base_field_and_swaps_omegas() {
        assert_eq!(Gf4::W.conj(), Gf4::W2);
        assert_eq!(Gf4::W2.conj(), Gf4::W);
        assert_eq!(Gf4::ONE.conj(), Gf4::ONE);
        assert_eq!(Gf4::ZERO.conj(), Gf4::ZERO);
        for a in all4() {
            assert_eq!(a.conj().conj(), a, "conjugation is an involution");
        }
    }

    fn check_axioms<F: Field>() {
        for &a in F::ELEMS {
            assert_eq!(a.add(F::ZERO), a);
            assert_eq!(a.mul(F::ONE), a);
            assert_eq!(a.add(a.neg()), F::ZERO);
            if !a.is_zero() {
                assert_eq!(a.mul(a.inv().unwrap()), F::ONE);
            }
            for &b in F::ELEMS {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
                for &c in F::ELEMS {
                    assert_eq!(a.add(b).add(c), a.add(b.add(c)));
                    assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
                    assert_eq!(a.mul(b.add(c)), a.mul(b).add(a.mul(c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        check_axioms::<Gf3>();
        check_axioms::<Gf4>();
    }

    #[test]
    fn frobenius_is_additive_over_gf4() {
        // (a+b)^2 = a^2 + b^2, all 16 pairs
        for a in all4() {
            for b in all4() {
                assert_eq!(a.add(b).conj(), a.conj().add(b.conj()));
            }
        }
    }

    #[test]
    fn weight_and_support() {
        let v: FieldVec<Gf3> = FieldVec::parse("1,0,2,0").unwrap();
        assert_eq!(v.weight(), 2);
        assert_eq!(v.support(), vec![1, 3]);

        let z: FieldVec<Gf3> = FieldVec::zero(5);
        assert_eq!(z.weight(), 0);
        assert!(z.support().is_empty());

        let w: FieldVec<Gf4> = FieldVec::parse("w,w2,1").unwrap();
        assert_eq!(w.weight(), 3);
        assert_eq!(w.support(), vec![1, 2, 3]);
    }

    #[test]
    fn inner_product_examples() {
        let ones: FieldVec<Gf3> = FieldVec::parse("1,1,1,1").unwrap();
        // 4 = 1 mod 3
        assert_eq!(ones.dot(&ones).unwrap(), Gf3::ONE);

        // <(1,w),(1,w)>_H = 1 + w*w^2 = 1 + 1 = 0
        let v: FieldVec<Gf4> = FieldVec::parse("1,w").unwrap();
        assert_eq!(v.dot(&v).unwrap(), Gf4::ZERO);

        let z: FieldVec<Gf4> = FieldVec::zero(2);
        assert_eq!(v.dot(&z).unwrap(), Gf4::ZERO);

        let short: FieldVec<Gf3> = FieldVec::parse("1,2").unwrap();
        assert!(matches!(
            ones.dot(&short),
            Err(Error::LengthMismatch {
                expected: 4,
                got: 2
            })
        ));
    }

    #[test]
    fn hermitian_form_is_sesquilinear() {
        // <cx,y> = c<x,y> and <x,cy> = c^2 <x,y>, exhaustive over
        // length-2 vectors and all scalars.
        let pool: Vec<FieldVec<Gf4>> = {
            let mut v = Vec::new();
            for a in all4() {
                for b in all4() {
                    v.push(FieldVec::new(vec![a, b]));
                }
            }
            v
        };
        for x in &pool {
            for y in &pool {
                let base = x.dot(y).unwrap();
                for c in all4() {
                    assert_eq!(x.scaled(c).dot(y).unwrap(), c.mul(base));
                    assert_eq!(x.dot(&y.scaled(c)).unwrap(), c.conj().mul(base));
                }
            }
        }
    }

    #[test]
    fn hermitian_form_is_conjugate_symmetric() {
        let v: FieldVec<Gf4> = FieldVec::parse("1,w,w2,0").unwrap();
        let u: FieldVec<Gf4> = FieldVec::parse("w,w,1,1").unwrap();
        assert_eq!(v.dot(&u).unwrap(), u.dot(&v).unwrap().conj());
    }

    #[test]
    fn token_round_trip() {
        for &e in Gf4::ELEMS {
            assert_eq!(Gf4::from_token(e.token()), Some(e));
        }
        for &e in Gf3::ELEMS {
            assert_eq!(Gf3::from_token(e.token()), Some(e));
        }
        assert!(FieldVec::<Gf3>::parse("0,1,x").is_err());
    }
}
