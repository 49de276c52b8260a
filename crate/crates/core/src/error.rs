//! Error type shared across the library.

use std::fmt;

/// Errors raised by library operations. Each variant names the violated
/// precondition so callers (in particular the CLI) can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero rational function.
    DivisionByZero,
    /// Order of vanishing / Laurent expansion requested for the zero function.
    ZeroFunction,
    /// Laurent expansion requested with `depth` below the order of vanishing.
    DepthBelowOrder { depth: i64, order: i64 },
    /// A set literal does not match the `PRE(REP)` grammar.
    ParseSet(String),
    /// A rational literal does not match `p/q` or `p`.
    ParseRational(String),
    /// A distance set was empty, contained zero, or was too large to handle.
    InvalidDistanceSet(String),
    /// A letter word or circular word violated a structural invariant.
    InvalidWord(String),
    /// Both operands of an outpacing comparison must be infinite sets.
    InfiniteSetRequired,
    /// Circular concatenation requires the left word to end with the letter
    /// the right word starts with.
    AnchorMismatch,
    /// The decomposition anchor does not occur in the repetend, so it does
    /// not recur in the infinite word.
    AnchorDoesNotRecur,
    /// The concatenation-chain check was called with operands in the wrong
    /// order (the first word must not germ-exceed the second).
    ChainPreconditionViolated,
    /// The star table has no entry for a letter required by `dominate_word`.
    StarTableMissing(u32),
    /// A star-table entry failed validation against an enumerated circular
    /// word it was supposed to dominate.
    StarTableInvalid { letter: u32, detail: String },
    /// A rewriting step produced a word that does not dominate its input;
    /// the star-table hypothesis fails beyond the validated length bound.
    DominationFailed,
    /// `improve_preperiod` requires the input set to avoid the distance set.
    NotAvoiding,
    /// The translates overlap, so the union generating function identity
    /// does not apply.
    OverlappingTranslates,
    /// A bounded search exceeded its configured node budget.
    BudgetExhausted { explored: u64, budget: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by the zero function"),
            Error::ZeroFunction => write!(f, "operation undefined for the zero function"),
            Error::DepthBelowOrder { depth, order } => write!(
                f,
                "requested depth {depth} is below the order of vanishing {order}"
            ),
            Error::ParseSet(s) => write!(f, "malformed set literal: {s}"),
            Error::ParseRational(s) => write!(f, "malformed rational literal: {s}"),
            Error::InvalidDistanceSet(s) => write!(f, "invalid distance set: {s}"),
            Error::InvalidWord(s) => write!(f, "invalid word: {s}"),
            Error::InfiniteSetRequired => {
                write!(f, "outpacing comparison requires infinite sets")
            }
            Error::AnchorMismatch => write!(
                f,
                "circular concatenation requires matching end/start letters"
            ),
            Error::AnchorDoesNotRecur => {
                write!(f, "anchor letter does not occur in the repetend")
            }
            Error::ChainPreconditionViolated => write!(
                f,
                "chain check requires the first word to be germ-dominated by the second"
            ),
            Error::StarTableMissing(code) => {
                write!(f, "star table has no entry for letter {code:#b}")
            }
            Error::StarTableInvalid { letter, detail } => {
                write!(f, "star table entry for letter {letter:#b} is not maximal: {detail}")
            }
            Error::DominationFailed => write!(
                f,
                "rewriting produced a non-dominating word; star table inadequate"
            ),
            Error::NotAvoiding => {
                write!(f, "input set does not avoid the distance set")
            }
            Error::OverlappingTranslates => {
                write!(f, "translates overlap; not a translation set")
            }
            Error::BudgetExhausted { explored, budget } => write!(
                f,
                "search budget exhausted ({explored} nodes explored, budget {budget})"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
