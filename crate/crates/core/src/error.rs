use thiserror::Error;

use crate::geometry::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot span a line from the single point {0}")]
    DegeneratePair(LatticePoint),

    #[error("at least 2 vertices are needed to span a line, got {got}")]
    InsufficientVertices { got: usize },

    #[error("vertex {point} lies outside the lattice 0..={n}")]
    OutOfRange { point: LatticePoint, n: u32 },

    #[error("duplicate vertex {0}")]
    DuplicateVertex(LatticePoint),

    #[error("lattice mismatch: expected n={expected}, found n={found}")]
    MismatchedLattice { expected: u32, found: u32 },

    #[error("n={n} exceeds the exact-search cap n<={cap}; use the heuristic solver instead")]
    Capacity { n: u32, cap: u32 },

    #[error("lattice parameter n={n} out of range (need n>={min})")]
    LatticeTooSmall { n: u32, min: u32 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("tile is missing corner vertex {0}")]
    MissingCorner(LatticePoint),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
