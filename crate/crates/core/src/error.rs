use alloc::string::String;
use core::fmt;

use crate::exactalg::UPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Exact division left a remainder. The remainder is reported when the
    /// divisor's leading coefficient is a unit, so it is an integer polynomial.
    NotDivisible {
        remainder: Option<UPoly>,
    },
    DivisionByZero,
    /// A q-point evaluation or q-substitution hit a half-integer power of q.
    OddUExponent,
    ZeroPolynomial,
    /// The numerator vanishes to lower order than the denominator at the limit point.
    OrderDeficit {
        numerator: usize,
        denominator: usize,
    },
    NonUnitConstantTerm,
    UnknownIdentity(String),
    UnknownFamily(String),
    NotPrime(u64),
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    IdentityViolated(String),
    /// A rational function that was expected to be a polynomial still has a denominator.
    NotPolynomial,
    /// An even-in-a-symbol substitution was requested on an expression with odd powers.
    NotEven,
    InvalidParameter(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotDivisible { remainder: Some(r) } => {
                write!(f, "not divisible, remainder {}", r)
            }
            Error::NotDivisible { remainder: None } => {
                f.write_str("not divisible over the integers")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::OddUExponent => {
                f.write_str("half-integer power of q where an integer power is required")
            }
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::OrderDeficit {
                numerator,
                denominator,
            } => write!(
                f,
                "numerator vanishes to order {} but denominator to order {}",
                numerator, denominator
            ),
            Error::NonUnitConstantTerm => f.write_str("series constant term is not 1"),
            Error::UnknownIdentity(id) => write!(f, "unknown identity `{}`", id),
            Error::UnknownFamily(fam) => write!(f, "unknown family `{}`", fam),
            Error::NotPrime(p) => write!(f, "{} is not prime", p),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {}, found {}", expected, found)
            }
            Error::IdentityViolated(what) => write!(f, "identity violated: {}", what),
            Error::NotPolynomial => f.write_str("expression has a nontrivial denominator"),
            Error::NotEven => f.write_str("expression is not even in the substituted symbol"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {}", what),
        }
    }
}

impl core::error::Error for Error {}
