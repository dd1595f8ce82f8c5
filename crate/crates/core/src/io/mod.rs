//! Solution files, corpus verification and SVG output.

mod record;
mod svg;
mod verify;

pub use record::{format_solution_line, parse_corpus, parse_solution_line, SolutionRecord};
pub use svg::{coverage_line_subset, render_svg, RenderOptions};
pub use verify::{verify_corpus, verify_record, RecordCheck, VerificationReport};

const BEST_KNOWN: &str = include_str!("../../data/best_known.txt");

/// The shipped corpus of covers for lattices from n = 12 to n = 110.
pub fn best_known() -> Vec<SolutionRecord> {
    parse_corpus(BEST_KNOWN, "best_known.txt").expect("shipped corpus parses")
}
