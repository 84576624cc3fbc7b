use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet symbols must be distinct (duplicate {:?})", *.0 as char)]
    DuplicateAlphabetSymbol(u8),

    #[error("read {id} is empty")]
    EmptyRead { id: usize },

    #[error("symbol {:?} is not in the alphabet", *.0 as char)]
    UnknownSymbol(u8),

    #[error("read {id} ({read}) is not primitive: it is a power of a shorter string")]
    NonPrimitiveRead { id: usize, read: String },

    #[error("position {pos} out of range 0..={len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("select rank {k} out of range: symbol occurs {count} times")]
    SelectOutOfRange { k: usize, count: usize },

    #[error("omega-order is undefined for the empty string")]
    EmptyOmegaOperand,

    #[error("mapping is not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("terminator order is not a permutation of the read ids")]
    BadTerminatorOrder,

    #[error("{got} contexts supplied for {want} reads")]
    ContextCountMismatch { got: usize, want: usize },

    #[error("minimum overlap must be at least 1")]
    ZeroMinOverlap,

    #[error("context for read {read} contains a terminator symbol")]
    TerminatorInContext { read: usize },

    #[error("run list is not a valid run-length encoding: {0}")]
    InvalidRuns(&'static str),

    #[error("index parts are inconsistent: {0}")]
    InconsistentIndex(&'static str),
}
