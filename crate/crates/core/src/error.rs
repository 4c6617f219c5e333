use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("need at least 3 points, got n = {0}")]
    InvalidSize(usize),

    #[error("invalid chord ({i}, {j}) for n = {n}")]
    InvalidChord { i: usize, j: usize, n: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid multiset: {0}")]
    InvalidMultiset(String),

    #[error("divisor {d} out of range 2..={max}")]
    DivisorOutOfRange { d: usize, max: usize },

    #[error("multiplier {k} is not coprime to n = {n}")]
    NotCoprime { k: usize, n: usize },

    #[error("rank {rank} out of range (total {total})")]
    RankOutOfRange { rank: u128, total: u128 },

    #[error("invalid enumeration range {from}..{to} (total {total})")]
    InvalidRange { from: u128, to: u128, total: u128 },

    #[error("no improper identity construction for n = {0}")]
    UnsupportedShape(usize),

    #[error("n = {n} too large for {what} (limit {limit})")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("checkpoint integrity: {0}")]
    Checkpoint(String),

    #[error("path {0:?} failed independent verification")]
    VerificationFailed(Vec<usize>),

    #[error(
        "numeric grouping disagrees with exact comparison at {precision_bits} bits; \
         retry with at least {suggested_bits} bits"
    )]
    InsufficientPrecision {
        precision_bits: u32,
        suggested_bits: u32,
    },

    #[error("numeric/exact disagreement: {0}")]
    NumericMismatch(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
