//! Self-dual linear codes over GF(3) and GF(4).
//!
//! This crate provides the exact-arithmetic machinery behind the `sdcodes`
//! command line tool:
//!
//! * [`field`] — arithmetic in GF(3) and GF(4), vectors, and the Euclidean /
//!   Hermitian inner products that define duality.
//! * [`code`] — linear codes with canonical reduced generator matrices,
//!   duals, self-duality tests, and membership.
//! * [`enumerate`] — exhaustive weight enumeration by an incremental Gray
//!   walk over the message space, with bit-plane packed codewords.
//! * [`lowweight`] — information-set based counting of low-weight codewords
//!   with an explicit certification of what is exact and what is a bound.
//! * [`construct`] — circulant-family constructions (four-circulant,
//!   bordered double circulant, mu-circulant, the 4x4 negacirculant block
//!   array) and the neighbor construction.
//! * [`gleason`] — Gleason-type weight enumerator expansions for self-dual
//!   codes, the one-parameter near-extremal families, divisibility checks,
//!   and admissible ranges for the minimum-weight count.
//! * [`design`] — scalar classes of codewords, 1-design verification on
//!   codeword supports, and the counting identities they imply.
//!
//! The crate is `no_std` (with `alloc`); everything is exact integer
//! arithmetic, and all heavy routines are pure functions safe to call from
//! any number of threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod code;
pub mod construct;
pub mod design;
pub mod dynamic;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod gleason;
pub mod lowweight;
pub mod matrix;
pub mod planes;
pub mod poly;

pub use code::LinearCode;
pub use enumerate::WeightEnumerator;
pub use error::Error;
pub use field::{FieldKind, FieldVec, Form, Gf3, Gf4};
