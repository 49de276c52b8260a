//! Exact measurement of subsets of the naturals by the germ of their
//! generating functions at `q = 1^-`, and bounded search for the largest
//! sets avoiding a finite list of forbidden differences.
//!
//! The layers, bottom up:
//!
//! - [`rat`], [`poly`], [`ratfun`]: exact rationals, dense polynomials, and
//!   canonical rational functions with order, sign, and Laurent data at 1.
//! - [`set`]: eventually periodic subsets of the naturals in canonical
//!   `PRE(REP)` form, their generating functions, the total germ-ordering,
//!   the valuation `(a_{-1}, a_0)`, and the lim-inf preorder it induces.
//! - [`words`], [`circular`]: the sliding-window block coding, legal
//!   letters, circular words with their concatenation algebra, factor
//!   decompositions, monotonicity certificates, and domination rewriting.
//! - [`optimize`], [`packing`]: bounded search for germ-maximal avoiding
//!   sets over the legal-letter graph (periodic champion by maximum cycle
//!   mean plus exhaustive preperiod improvement), and the reduction from
//!   packing bodies to forbidden differences.
//! - [`probe`]: exact numeric probing with certified tail bounds, the one
//!   window onto non-rational sets.
//! - [`verify`]: seeded property suites and the independent oracles
//!   (evaluation-based germ signs, cyclic-pattern density enumeration).
//!
//! Everything except `probe`'s tail estimate is exact integer/rational
//! arithmetic; no floating point is used anywhere. All values are immutable
//! after construction and all operations are pure functions.

pub mod circular;
pub mod error;
mod graph;
pub mod optimize;
pub mod packing;
pub mod poly;
pub mod probe;
pub mod rat;
pub mod ratfun;
mod seq;
pub mod set;
pub mod verify;
pub mod words;

pub use circular::{
    best_star_table, closed_walks, concat_chain_holds, decompose, dominate_word,
    factor_monotonicity, CircularWord, Decomposition, FactorMonotonicity, StarTable,
    SwapCertificate,
};
pub use error::{Error, Result};
pub use optimize::{
    best_periodic, efficiency_gap_report, improve_preperiod, optimize, GapReport,
    SearchReport, DEFAULT_SEARCH_BUDGET, SEARCH_CAVEAT,
};
pub use packing::{is_translation_set, optimize_packing, union_gf, PackReport, PackingBody};
pub use poly::Polynomial;
pub use probe::{even_digit_count, numeric_probe, ProbeSample};
pub use rat::{format_rat, parse_rat, Rat};
pub use ratfun::{GermExpansion, RationalFunction};
pub use set::{GermOrderResult, RationalSet, Valuation};
pub use verify::{run_suite, Suite, SuiteReport};
pub use words::{
    block_decode, block_encode, greedy_avoiding, is_avoiding, legal_alphabet, DistanceSet,
    Letter, LetterWord,
};
