//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different fields.
    FieldMismatch,
    /// Vector lengths disagree.
    LengthMismatch { expected: usize, got: usize },
    /// The inner-product form does not apply to this field
    /// (Euclidean is for GF(3), Hermitian for GF(4)).
    FormMismatch,
    /// Zero has no multiplicative inverse.
    DivisionByZero,
    /// A symbol outside the field's token set.
    BadSymbol(String),
    /// Circulant twist constant must be nonzero.
    ZeroTwist,
    /// Enumerating this code would visit more codewords than allowed.
    BudgetExceeded { codewords: u128, budget: u64 },
    /// Code length too large for the packed enumeration kernels.
    LengthUnsupported(usize),
    /// Parameter out of the admissible range for the operation.
    OutOfRange(&'static str),
    /// Precondition of the neighbor construction failed.
    Neighbor(&'static str),
    /// No admissible minimum-weight count: the constraint set is empty,
    /// which would prove nonexistence at that length.
    EmptyAlphaRange,
    /// Input contained a zero vector where nonzero words are required.
    ZeroWord,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::FormMismatch => write!(f, "inner-product form does not match the field"),
            Error::DivisionByZero => write!(f, "inverse of zero"),
            Error::BadSymbol(s) => write!(f, "bad field symbol `{s}`"),
            Error::ZeroTwist => write!(f, "circulant twist constant must be nonzero"),
            Error::BudgetExceeded { codewords, budget } => {
                write!(f, "{codewords} codewords exceed the budget of {budget}")
            }
            Error::LengthUnsupported(n) => write!(f, "length {n} not supported by enumeration"),
            Error::OutOfRange(what) => write!(f, "{what} out of range"),
            Error::Neighbor(why) => write!(f, "neighbor precondition failed: {why}"),
            Error::EmptyAlphaRange => write!(f, "no admissible minimum-weight count"),
            Error::ZeroWord => write!(f, "zero vector not allowed here"),
        }
    }
}

impl core::error::Error for Error {}
