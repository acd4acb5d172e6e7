use thiserror::Error;

use crate::indices::TbpFormula;

/// Hard ceiling on table arity regardless of any configured cap; `2^30` bits is 128 MiB.
pub const ABSOLUTE_MAX_VARS: usize = 30;

/// Default cap on the number of voters a decision function may range over.
pub const DEFAULT_MAX_VARS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable X{} is out of range for a function of {n} variables", var + 1)]
    VarOutOfRange { var: usize, n: usize },

    #[error("arity mismatch: {left} variables vs {right} variables")]
    ArityMismatch { left: usize, right: usize },

    #[error("variable X{} appears more than once", var + 1)]
    DuplicateVariable { var: usize },

    #[error("function depends on excluded variable X{}", var + 1)]
    DependsOnExcluded { var: usize },

    #[error("{n} variables exceeds the cap of {cap}")]
    TooManyVariables { n: usize, cap: usize },

    #[error("function is not monotone (X{} is {polarity})", var + 1)]
    NotMonotone { var: usize, polarity: &'static str },

    #[error("formula {formula} requires a positively monoform variable, but X{} is {polarity}", var + 1)]
    MonotoneFormulaRejected {
        formula: TbpFormula,
        var: usize,
        polarity: &'static str,
    },

    #[error("variable X{} is not among the symmetric function's variables", var + 1)]
    NotASymmetricVariable { var: usize },

    #[error("ratio is undefined: {0} has zero weight")]
    Undefined(&'static str),

    #[error("voters must be distinct (got X{} twice)", var + 1)]
    SameVoter { var: usize },

    #[error("empty member set")]
    EmptyMembers,

    #[error("invalid voting system: {0}")]
    InvalidSystem(String),

    #[error("malformed truth-table dump: {0}")]
    MalformedDump(String),
}

pub type Result<T> = std::result::Result<T, Error>;
