//! Finding, verifying and drawing small vertex subsets of a square lattice
//! whose pairwise spanned lines pass through every lattice vertex.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod heuristic;
pub mod io;
pub mod symmetry;

pub use error::{Error, Result};
pub use geometry::{
    coverage, is_cover, normalize_line, points_on_line, spanned_lines, CoverageMask, LatticePoint,
    LineKey, Solution,
};
pub use symmetry::{
    apply_symmetry, canonical_form, classify, orbit_size, CongruenceClass, SymmetryOp,
};
