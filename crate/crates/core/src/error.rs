use std::io;

use thiserror::Error;

use crate::solution::Violation;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by this crate. Indices in messages are 1-based.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("index {} out of range for n = {n}", .index + 1)]
    IndexOutOfRange { index: usize, n: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("solution fails the required axioms: {0}")]
    Axiom(Violation),

    #[error("the word x{}x{} appears in more than one relation", .0 + 1, .1 + 1)]
    RepeatedWord(usize, usize),

    #[error("presentation does not define a non-degenerate solution: {0}")]
    NotGarside(String),

    #[error("word equivalence class exceeds the cap of {cap} words")]
    ClassTooLarge { cap: usize },

    #[error("unsupported size n = {n}: {reason}")]
    UnsupportedSize { n: usize, reason: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
