use rayon::prelude::*;
use serde::Serialize;

use super::record::SolutionRecord;
use crate::geometry::{is_cover, spanned_lines};
use crate::symmetry::orbit_size;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordCheck {
    pub n: u32,
    pub t_claimed: usize,
    pub actual_size: usize,
    pub is_cover: bool,
    pub line_count: usize,
    pub orbit_size: usize,
    pub source: String,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub records: Vec<RecordCheck>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// A record passes when its vertices cover the lattice and their count equals
/// the claimed bound.
pub fn verify_record(record: &SolutionRecord) -> RecordCheck {
    let mut check = RecordCheck {
        n: record.n,
        t_claimed: record.t_claimed,
        actual_size: record.vertices.len(),
        is_cover: false,
        line_count: 0,
        orbit_size: 0,
        source: record.source.clone(),
        error: None,
        pass: false,
    };
    let outcome = record.solution().and_then(|s| {
        let lines = spanned_lines(&s)?.len();
        Ok((is_cover(&s)?, lines, orbit_size(&s)))
    });
    match outcome {
        Ok((cover, lines, orbit)) => {
            check.is_cover = cover;
            check.line_count = lines;
            check.orbit_size = orbit;
            check.pass = cover && check.actual_size == check.t_claimed;
        }
        Err(e) => check.error = Some(e.to_string()),
    }
    check
}

/// Checks every record; entries keep input order.
pub fn verify_corpus(records: &[SolutionRecord]) -> VerificationReport {
    let records: Vec<RecordCheck> = records.par_iter().map(verify_record).collect();
    let passed = records.iter().filter(|r| r.pass).count();
    VerificationReport {
        failed: records.len() - passed,
        passed,
        records,
    }
}
