//! Exact palindrome-factorization calculator for free nilpotent groups.
//!
//! A word over a fixed basis `x1..xn` is a *palindrome* if it reads the same
//! forwards and backwards. In the free `r`-step nilpotent group of rank `n`
//! every element is a product of boundedly many palindromes; this crate turns
//! the known constructions into explicit, machine-verified factorizations:
//!
//! - [`words`]: free-group word algebra and the text grammar,
//! - [`magnus`]: exact equality in `N_{n,r}` via truncated integer power series,
//! - [`nil2`]: the exponent normal form of the class-2 quotient,
//! - [`palcalc`]: palindrome calculus (verified factorization constructors),
//! - [`decompose`]: constructive decompositions, lower bounds, and the exact
//!   palindromic-length decision for `N_{2,2}`,
//! - [`search`]: brute-force oracles for cross-checking everything above,
//! - [`cli`]: the `palwidth` command-line front end and its JSON certificates.
//!
//! All arithmetic is over arbitrary-precision integers; no floats anywhere.

#![forbid(unsafe_code)]

pub mod cli;
pub mod decompose;
mod hnf;
pub mod magnus;
pub mod nil2;
pub mod palcalc;
pub mod search;
pub mod words;





pub use words::{GroupContext, Word};

/// Errors shared by every module of the crate.
///
/// Domain errors (bad input, violated preconditions) are reported through the
/// non-`Internal` variants; `Internal` marks a broken invariant of the crate
/// itself and maps to a distinct process exit code in the CLI.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator x{index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("invalid group context: {0}")]
    InvalidContext(String),
    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch {
        left: GroupContext,
        right: GroupContext,
    },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("operation needs nilpotency class {expected}, context has class {got}")]
    ClassMismatch { expected: usize, got: usize },
    #[error("degree {k} out of range for class {r}")]
    DegreeOutOfRange { k: usize, r: usize },
    #[error("word is not a palindrome: {0}")]
    NotAPalindrome(String),
    #[error("factor {index} is not a palindrome")]
    FactorNotPalindrome { index: usize },
    #[error("product of factors does not equal the target")]
    ProductMismatch,
    #[error("expected a power of generator x{generator}, got {word}")]
    NotAGeneratorPower { generator: usize, word: String },
    #[error("product of the two palindromes is not central")]
    NotCentral,
    #[error("word does not lie in the required lower-central term gamma_{k}")]
    NotInGamma { k: usize },
    #[error("power {power} would expand to more than {limit} syllables")]
    PowerTooLarge { power: String, limit: usize },
    #[error("unsupported for this context: {0}")]
    Unsupported(String),
    #[error("internal invariant breached: {0}")]
    Internal(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
