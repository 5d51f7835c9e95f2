use thiserror::Error;

/// Errors raised by constructors and operations. Verification failures are
/// not errors; they are reported as verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field of order {p}^{m} exceeds the supported size 2^16")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("modulus must be monic of degree {m} over GF({p})")]
    BadModulus { p: u32, m: u32 },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("modulus is irreducible but its root is not a primitive element")]
    NonPrimitiveModulus,
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field has no index-2 subfield")]
    NoQuadraticStructure,
    #[error("element does not lie in the subfield GF(q)")]
    NotInSubfield,
    #[error("zero element where a nonzero one is required")]
    ZeroElement,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("enumeration of {needed} codewords exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("duplicate evaluation point")]
    DuplicatePoint,
    #[error("defining set is not closed under multiplication by q modulo n")]
    NotCosetClosed,
    #[error("gcd(n, q) != 1")]
    NotCoprime,
    #[error("construction hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
