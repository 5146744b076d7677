//! Error type shared by the whole crate.

use std::fmt;

/// Everything that can go wrong at desk scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A key that was claimed to be prime is not.
    NotPrime(u64),
    /// The same key appeared twice in a finite-adele or spec-language item list.
    DuplicateKey(String),
    /// `valuation` was asked about zero (the valuation would be +infinity).
    ValuationOfZero,
    /// Bezout inputs must be >= 1.
    BezoutRange,
    /// A denominator had an unfactorable cofactor above the trial-division bound.
    DenominatorTooLarge(String),
    /// `(q, y)` fails the membership test `y - lift_phi(a, q) in Z`.
    NotAnElement { q: String, y: String },
    /// Value is not a valid p-adic fractional part for the given prime.
    InvalidPAdicFrac { prime: u64, value: String },
    /// Two elements of different presentations were combined.
    PresentationMismatch,
    /// A congruence witness was applied where it does not relate the presentations.
    InvalidWitness,
    /// Quadratic field parameter must be squarefree.
    NotSquarefree(i64),
    /// Quadratic field parameter must not be 0 or 1.
    DegenerateField(i64),
    /// Quadratic field parameter exceeds the supported factoring range.
    FieldTooLarge(i64),
    /// Text input failed to parse; positions are 1-based.
    Parse {
        line: usize,
        col: usize,
        token: String,
        expected: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DuplicateKey(k) => write!(f, "duplicate key `{k}`"),
            Error::ValuationOfZero => write!(f, "valuation of zero is undefined"),
            Error::BezoutRange => write!(f, "bezout arguments must be positive"),
            Error::DenominatorTooLarge(d) => {
                write!(f, "denominator {d} is beyond the supported factoring range")
            }
            Error::NotAnElement { q, y } => {
                write!(f, "({q}, {y}) is not an element of the presented extension")
            }
            Error::InvalidPAdicFrac { prime, value } => {
                write!(f, "{value} is not in [0,1) with a power of {prime} as denominator")
            }
            Error::PresentationMismatch => {
                write!(f, "elements belong to different presentations")
            }
            Error::InvalidWitness => write!(f, "congruence witness does not relate these presentations"),
            Error::NotSquarefree(d) => write!(f, "{d} is not squarefree"),
            Error::DegenerateField(d) => write!(f, "d = {d} does not define a quadratic field"),
            Error::FieldTooLarge(d) => write!(f, "|d| = {d} is beyond the supported factoring range"),
            Error::Parse {
                line,
                col,
                token,
                expected,
            } => write!(
                f,
                "parse error at line {line}, column {col}: unexpected `{token}`, expected {expected}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
