use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("modulus {0} is not square-free")]
    NotSquareFree(u64),
    #[error("modulus mismatch: expected {expected}, got {found}")]
    ModulusMismatch { expected: u64, found: u64 },
    #[error("residue {residue} out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },
    #[error("polynomial has no terms")]
    EmptyPolynomial,
    #[error("duplicate exponent {0} in polynomial")]
    DuplicateExponent(u32),
    #[error("form is invalid: {0}")]
    InvalidForm(String),
    #[error("enumeration cost {cost} exceeds budget {budget}")]
    CostBudgetExceeded { cost: u128, budget: u128 },
    #[error("{a} is not a root of f modulo {p}")]
    NotARoot { a: u64, p: u64 },
    #[error("singular root: f'({a}) is zero modulo {p}")]
    SingularRoot { a: u64, p: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis of the construction not met: {0}")]
    Hypothesis(String),
    #[error("integer overflow during exact evaluation")]
    Overflow,
    #[error("chain must be validated before use")]
    UnvalidatedChain,
    #[error("set would exceed {limit} elements; materialization refused")]
    TooLarge { limit: u64 },
    #[error("digit length {y} too small: construction requires Y >= {min}")]
    DigitLengthTooSmall { y: u32, min: u32 },
    #[error("m^Y = {m}^{y} exceeds the 2^63-1 element range")]
    RangeExceeded { m: u64, y: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
