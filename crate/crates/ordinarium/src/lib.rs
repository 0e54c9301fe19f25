//! Desk-scale verification toolkit for ordinary reduction of GL₂-type
//! abelian varieties and weight-2 newforms.
//!
//! The crate is organized around exact arithmetic: arbitrary-precision
//! integers and rationals everywhere a wrong answer could hide in rounding,
//! floating point only where a statement is itself approximate (density
//! fractions, the Weil root-modulus spot check).
//!
//! Module map:
//! - [`nf`] — integer/rational polynomials, resultants, number fields,
//!   factorization patterns over prime fields, prime sieve.
//! - [`splitting`] — splitting types of rational primes, joint-splitting
//!   searches and density estimates.
//! - [`perm`] — permutation groups, the S₄/S₆ subgroup lattice and the
//!   transitive-subgroup cycle-type check.
//! - [`gl2`] — census of GL₂(F_ℓ) and of the determinant/trace-constrained
//!   tuple sets used in the density-zero bound.
//! - [`hypell`] — the Dickson-polynomial hyperelliptic family, point counts,
//!   L-polynomials, Cartier–Manin matrices, ordinariness scans.
//! - [`modforms`] — weight-2 newform coefficient data and per-prime
//!   ordinariness verdicts.
//! - [`density`] — shared density bookkeeping and PASS/FAIL comparisons.

pub mod density;
pub mod gl2;
pub mod hypell;
pub mod modforms;
pub mod nf;
pub mod perm;
pub mod splitting;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial must be monic, got leading coefficient {0}")]
    NotMonic(String),
    #[error("defining polynomial must be squarefree (discriminant is zero)")]
    NotSquarefree,
    #[error("{0}")]
    Precondition(String),
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),
    #[error("empty prime range [{0}, {1}]")]
    EmptyRange(u64, u64),
    #[error("no witness prime found below bound {0}")]
    NotFoundBelowBound(u64),
    #[error("inconsistent point counts: Newton recursion produced a non-integer at step {0}")]
    InconsistentCounts(usize),
    #[error("non-totally-real characteristic polynomial: no integral real Weil polynomial exists")]
    NonTotallyReal,
    #[error("ordinariness oracle mismatch at l={l}: middle coefficient test says {middle_says_ordinary}, Cartier-Manin rank says {rank_says_ordinary}")]
    OracleMismatch {
        l: u64,
        middle_says_ordinary: bool,
        rank_says_ordinary: bool,
    },
    #[error("data integrity: {0}")]
    DataIntegrity(String),
    #[error("bad prime {0}: divides the level")]
    BadPrime(u64),
    #[error("no coefficient data for prime {0}")]
    NoData(u64),
    #[error("prime {0} divides the field polynomial discriminant; verdict uncertified")]
    Uncertified(u64),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
