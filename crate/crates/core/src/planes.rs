//! Bit-plane packed codewords.
//!
//! A vector over GF(3) or GF(4) of length n <= 64*W is stored as two
//! n-bit planes:
//!
//! * GF(3): plane0 marks coordinates equal to 1, plane1 marks coordinates
//!   equal to 2.
//! * GF(4): plane0 holds the coefficient of 1, plane1 the coefficient of w
//!   in the basis {1, w}.
//!
//! Either way the weight is `popcount(plane0 | plane1)`, GF(4) addition is
//! plane-wise XOR, and GF(3) addition is a short boolean circuit, which is
//! what makes the Gray-walk enumeration cheap per codeword.

use alloc::vec::Vec;

use crate::field::{Field, FieldVec, Gf3, Gf4};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneWord<const W: usize> {
    pub p0: [u64; W],
    pub p1: [u64; W],
}

impl<const W: usize> PlaneWord<W> {
    pub const ZERO: Self = PlaneWord {
        p0: [0; W],
        p1: [0; W],
    };

    #[inline]
    pub fn weight(&self) -> u32 {
        let mut w = 0;
        for i in 0..W {
            w += (self.p0[i] | self.p1[i]).count_ones();
        }
        w
    }

    /// GF(4) addition (characteristic 2).
    #[inline]
    pub fn xor(&mut self, rhs: &Self) {
        for i in 0..W {
            self.p0[i] ^= rhs.p0[i];
            self.p1[i] ^= rhs.p1[i];
        }
    }

    /// GF(3) addition, coordinate-wise mod 3 on the (is-1, is-2) encoding.
    #[inline]
    pub fn add3(&mut self, rhs: &Self) {
        for i in 0..W {
            let (a, b) = (self.p0[i], self.p1[i]);
            let (c, d) = (rhs.p0[i], rhs.p1[i]);
            let x0 = !(a | b);
            let y0 = !(c | d);
            self.p0[i] = (x0 & c) | (a & y0) | (b & d);
            self.p1[i] = (x0 & d) | (b & y0) | (a & c);
        }
    }

    /// GF(3) scalar multiple by 2 (swaps the planes).
    #[inline]
    pub fn double3(&self) -> Self {
        PlaneWord {
            p0: self.p1,
            p1: self.p0,
        }
    }

    /// GF(4) scalar multiple by w: (a + b w) w = b + (a + b) w.
    #[inline]
    pub fn mul_omega(&self) -> Self {
        let mut out = PlaneWord::ZERO;
        for i in 0..W {
            out.p0[i] = self.p1[i];
            out.p1[i] = self.p0[i] ^ self.p1[i];
        }
        out
    }
}

/// Packing and unpacking between dense vectors and plane words.
pub trait Planed: Field {
    fn pack<const W: usize>(v: &FieldVec<Self>) -> PlaneWord<W>;
    fn unpack<const W: usize>(w: &PlaneWord<W>, n: usize) -> FieldVec<Self>;
}

impl Planed for Gf3 {
    fn pack<const W: usize>(v: &FieldVec<Self>) -> PlaneWord<W> {
        debug_assert!(v.len() <= 64 * W);
        let mut out = PlaneWord::ZERO;
        for (i, &e) in v.as_slice().iter().enumerate() {
            match e.value() {
                1 => out.p0[i / 64] |= 1 << (i % 64),
                2 => out.p1[i / 64] |= 1 << (i % 64),
                _ => {}
            }
        }
        out
    }

    fn unpack<const W: usize>(w: &PlaneWord<W>, n: usize) -> FieldVec<Self> {
        let mut elems = Vec::with_capacity(n);
        for i in 0..n {
            let bit = 1u64 << (i % 64);
            let v = if w.p0[i / 64] & bit != 0 {
                1
            } else if w.p1[i / 64] & bit != 0 {
                2
            } else {
                0
            };
            elems.push(Gf3::new(v));
        }
        FieldVec::new(elems)
    }
}

impl Planed for Gf4 {
    fn pack<const W: usize>(v: &FieldVec<Self>) -> PlaneWord<W> {
        debug_assert!(v.len() <= 64 * W);
        let mut out = PlaneWord::ZERO;
        for (i, &e) in v.as_slice().iter().enumerate() {
            if e.value() & 1 != 0 {
                out.p0[i / 64] |= 1 << (i % 64);
            }
            if e.value() & 2 != 0 {
                out.p1[i / 64] |= 1 << (i % 64);
            }
        }
        out
    }

    fn unpack<const W: usize>(w: &PlaneWord<W>, n: usize) -> FieldVec<Self> {
        let mut elems = Vec::with_capacity(n);
        for i in 0..n {
            let bit = 1u64 << (i % 64);
            let mut v = 0u8;
            if w.p0[i / 64] & bit != 0 {
                v |= 1;
            }
            if w.p1[i / 64] & bit != 0 {
                v |= 2;
            }
            elems.push(Gf4::new(v));
        }
        FieldVec::new(elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn gf3_plane_addition_matches_field_addition() {
        // exhaustive over all 9 coordinate pairs, packed in one word
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for &a in Gf3::ELEMS {
            for &b in Gf3::ELEMS {
                xs.push(a);
                ys.push(b);
            }
        }
        let x = FieldVec::new(xs.clone());
        let y = FieldVec::new(ys.clone());
        let mut px: PlaneWord<1> = Gf3::pack(&x);
        px.add3(&Gf3::pack(&y));
        let expect = x.add(&y).unwrap();
        assert_eq!(Gf3::unpack(&px, 9), expect);
        assert_eq!(px.weight() as usize, expect.weight());
    }

    #[test]
    fn gf3_double_is_scalar_two() {
        let v: FieldVec<Gf3> = FieldVec::parse("0,1,2,1").unwrap();
        let p: PlaneWord<1> = Gf3::pack(&v);
        assert_eq!(Gf3::unpack(&p.double3(), 4), v.scaled(Gf3::new(2)));
    }

    #[test]
    fn gf4_xor_and_omega() {
        let v: FieldVec<Gf4> = FieldVec::parse("0,1,w,w2").unwrap();
        let u: FieldVec<Gf4> = FieldVec::parse("w,w,1,1").unwrap();
        let mut p: PlaneWord<1> = Gf4::pack(&v);
        p.xor(&Gf4::pack(&u));
        assert_eq!(Gf4::unpack(&p, 4), v.add(&u).unwrap());

        let pw: PlaneWord<1> = Gf4::pack(&v);
        assert_eq!(Gf4::unpack(&pw.mul_omega(), 4), v.scaled(Gf4::W));
    }

    #[test]
    fn two_word_round_trip() {
        let mut elems = vec![Gf3::ZERO; 100];
        elems[0] = Gf3::new(1);
        elems[63] = Gf3::new(2);
        elems[64] = Gf3::new(1);
        elems[99] = Gf3::new(2);
        let v = FieldVec::new(elems);
        let p: PlaneWord<2> = Gf3::pack(&v);
        assert_eq!(p.weight(), 4);
        assert_eq!(Gf3::unpack(&p, 100), v);
    }
}
