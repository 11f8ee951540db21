//! Exact computation in finite commutative rings with identity.
//!
//! The crate builds rings from constructor specs (`Z/n`, finite products,
//! `Z/p[x]/(f)`), computes with their ideals (sum, product, colon, radical,
//! full lattice enumeration), decides a family of absorbing/primary ideal
//! predicates with reproducible minimal witnesses, and runs exhaustive
//! verification sweeps that test implication laws between those predicates
//! over batteries of small rings.  A separate monomial-ideal calculus covers
//! the polynomial-ring constructions that finite rings cannot express.

pub mod bitset;
pub mod cli;

pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod report;
pub mod predicate;

pub mod ring;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.  Variants map onto the CLI exit codes: parse and
/// input problems exit 2, cap overruns exit 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("polynomial quotient modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("quotient polynomial must be monic of degree at least 1")]
    NonMonicPoly,
    #[error("product spec needs at least 2 factors")]
    TooFewFactors,
    #[error("ring size {size} exceeds cap {cap} (set ABSORB_SIZE_CAP to raise)")]
    SizeCapExceeded { size: u128, cap: u128 },
    #[error("scan cost {cost} exceeds cap {cap} (pass --force to override)")]
    CostCapExceeded { cost: u128, cap: u128 },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("ideal is the whole ring where a proper ideal is required")]
    ImproperIdeal,
    #[error("element index {index} out of range for ring of size {size}")]
    ElementOutOfRange { index: u32, size: usize },
    #[error("parse error at byte {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },
    #[error("monomial has {got} variables, ambient ring has {expected}")]
    VariableCountMismatch { expected: usize, got: usize },
    #[error("absorbing index n must be at least 1")]
    BadAbsorbingIndex,
    #[error("format {0} is not supported for this payload")]
    UnsupportedFormatForPayload(String),
    #[error("unknown predicate {0}")]
    UnknownPredicate(String),
    #[error("unknown theorem id {0}")]
    UnknownTheorem(String),
    #[error("unknown hypothesis {hypothesis} for theorem {theorem}")]
    UnknownHypothesis { theorem: String, hypothesis: String },
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
