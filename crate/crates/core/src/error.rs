//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors raised by partition operations, family evaluation, series
/// expansion, and the identity catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `difference(a, b)` where `b` is not a sub-multiset of `a`.
    NotSubMultiset { value: u64, have: u64, need: u64 },
    /// `divide(lambda, m)` where some part is not a multiple of `m`.
    NotDivisible { part: u64, divisor: u64 },
    /// Malformed partition text or family/bijection name.
    Parse(String),
    /// `n` exceeds the configured enumeration or factorization bound.
    BoundExceeded { n: u64, bound: u64 },
    /// A q-Pochhammer factor with offset 0 would contain the vanishing
    /// term `1 - q^0`.
    ZeroOffset,
    /// Arithmetic on truncated series of different orders.
    OrderMismatch { left: usize, right: usize },
    /// No product formula (or no signed product formula) is registered for
    /// the family, or an identity id is not in the catalog.
    UnknownFamily(String),
    /// A bijection was applied to a partition outside its source family.
    NotInSourceFamily { family: String, partition: String },
    /// Parameters outside the domain of a constructor, identity, or map.
    BadParameters(String),
    /// `ord_p` called with a composite modulus.
    NotPrime(u64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSubMultiset { value, have, need } => write!(
                f,
                "not a sub-multiset: value {value} occurs {have} times, {need} required"
            ),
            Error::NotDivisible { part, divisor } => {
                write!(f, "part {part} is not divisible by {divisor}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::BoundExceeded { n, bound } => {
                write!(f, "n = {n} exceeds the configured bound {bound}")
            }
            Error::ZeroOffset => write!(f, "q-Pochhammer factor with offset 0 vanishes"),
            Error::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            Error::UnknownFamily(name) => write!(f, "unknown or unregistered family: {name}"),
            Error::NotInSourceFamily { family, partition } => {
                write!(f, "partition {partition} is not in the source family {family}")
            }
            Error::BadParameters(msg) => write!(f, "bad parameters: {msg}"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
