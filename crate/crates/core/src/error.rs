use thiserror::Error;

use crate::search::SearchStats;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?}: must be non-empty, contain no whitespace and differ from \"-\"")]
    InvalidSymbol(String),
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("words must be non-empty")]
    EmptyWord,
    #[error("task has no pairs")]
    EmptyTask,
    #[error("contradictory outputs for word {0:?}")]
    ContradictoryPair(String),
    #[error("undefined transition at position {position} (state {state}, symbol {symbol:?})")]
    UndefinedTransition {
        state: usize,
        symbol: String,
        position: usize,
    },
    #[error("undefined output at state {0}")]
    UndefinedOutput(usize),
    #[error("alphabets of transducer and task differ")]
    AlphabetMismatch,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid transducer: {0}")]
    InvalidTransducer(String),
    #[error("{n} is not divisible by {k}")]
    NonDivisible { n: usize, k: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("UNSAT up to {0} states")]
    NoSolutionWithin(usize),
    #[error("search budget exhausted at {n} states after {} nodes", stats.nodes)]
    BudgetExhausted { n: usize, stats: SearchStats },
    #[error("enumeration of {size} candidates exceeds cap {cap}")]
    CapExceeded { size: String, cap: u64 },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
