//! The eight symmetries of the square acting on vertex sets.
//!
//! Each operation is stored as an integer 2x2 matrix acting on centered
//! coordinates `(2x - n, 2y - n)`, which makes composition a matrix product.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{LatticePoint, Solution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryOp {
    Identity,
    /// `(x, y) -> (y, n - x)`.
    Rot90,
    Rot180,
    Rot270,
    /// Flip across the horizontal mid axis, `(x, y) -> (x, n - y)`.
    MirrorX,
    /// Flip across the vertical mid axis, `(x, y) -> (n - x, y)`.
    MirrorY,
    /// Main-diagonal transpose, `(x, y) -> (y, x)`.
    MirrorD,
    /// Anti-diagonal, `(x, y) -> (n - y, n - x)`.
    MirrorAntiD,
}

impl SymmetryOp {
    pub const ALL: [SymmetryOp; 8] = [
        SymmetryOp::Identity,
        SymmetryOp::Rot90,
        SymmetryOp::Rot180,
        SymmetryOp::Rot270,
        SymmetryOp::MirrorX,
        SymmetryOp::MirrorY,
        SymmetryOp::MirrorD,
        SymmetryOp::MirrorAntiD,
    ];

    pub const MIRRORS: [SymmetryOp; 4] = [
        SymmetryOp::MirrorX,
        SymmetryOp::MirrorY,
        SymmetryOp::MirrorD,
        SymmetryOp::MirrorAntiD,
    ];

    fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            SymmetryOp::Identity => [[1, 0], [0, 1]],
            SymmetryOp::Rot90 => [[0, 1], [-1, 0]],
            SymmetryOp::Rot180 => [[-1, 0], [0, -1]],
            SymmetryOp::Rot270 => [[0, -1], [1, 0]],
            SymmetryOp::MirrorX => [[1, 0], [0, -1]],
            SymmetryOp::MirrorY => [[-1, 0], [0, 1]],
            SymmetryOp::MirrorD => [[0, 1], [1, 0]],
            SymmetryOp::MirrorAntiD => [[0, -1], [-1, 0]],
        }
    }

    fn from_matrix(m: [[i64; 2]; 2]) -> SymmetryOp {
        *Self::ALL
            .iter()
            .find(|op| op.matrix() == m)
            .expect("product of square symmetries is a square symmetry")
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(self, other: SymmetryOp) -> SymmetryOp {
        let (a, b) = (self.matrix(), other.matrix());
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self::from_matrix(m)
    }

    pub fn inverse(self) -> SymmetryOp {
        match self {
            SymmetryOp::Rot90 => SymmetryOp::Rot270,
            SymmetryOp::Rot270 => SymmetryOp::Rot90,
            other => other,
        }
    }

    pub fn apply_point(self, p: LatticePoint, n: u32) -> LatticePoint {
        let [[a, b], [c, d]] = self.matrix();
        let n = i64::from(n);
        let (u, v) = (2 * i64::from(p.x) - n, 2 * i64::from(p.y) - n);
        let (u2, v2) = (a * u + b * v, c * u + d * v);
        LatticePoint::new(((u2 + n) / 2) as u32, ((v2 + n) / 2) as u32)
    }

    pub fn name(self) -> &'static str {
        match self {
            SymmetryOp::Identity => "identity",
            SymmetryOp::Rot90 => "rot90",
            SymmetryOp::Rot180 => "rot180",
            SymmetryOp::Rot270 => "rot270",
            SymmetryOp::MirrorX => "mirror_x",
            SymmetryOp::MirrorY => "mirror_y",
            SymmetryOp::MirrorD => "mirror_d",
            SymmetryOp::MirrorAntiD => "mirror_d'",
        }
    }
}

impl fmt::Display for SymmetryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown symmetry operation `{s}`")))
    }
}

pub fn apply_symmetry(op: SymmetryOp, s: &Solution) -> Solution {
    let n = s.n();
    let mut v: Vec<_> = s.vertices().iter().map(|&p| op.apply_point(p, n)).collect();
    v.sort_unstable();
    Solution::from_sorted_unchecked(n, v)
}

/// Lexicographically smallest of the eight images of `s`.
pub fn canonical_form(s: &Solution) -> Solution {
    SymmetryOp::ALL
        .iter()
        .map(|&op| apply_symmetry(op, s))
        .min()
        .expect("eight images")
}

/// Number of distinct images of `s`; always divides 8.
pub fn orbit_size(s: &Solution) -> usize {
    let mut images: Vec<_> = SymmetryOp::ALL
        .iter()
        .map(|&op| apply_symmetry(op, s))
        .collect();
    images.sort_unstable();
    images.dedup();
    images.len()
}

/// Smallest point in the orbit of `p`.
pub fn point_orbit_min(p: LatticePoint, n: u32) -> LatticePoint {
    SymmetryOp::ALL
        .iter()
        .map(|op| op.apply_point(p, n))
        .min()
        .expect("eight images")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CongruenceClass {
    pub representative: Solution,
    pub orbit_size: usize,
}

impl CongruenceClass {
    pub fn of(s: &Solution) -> Self {
        let representative = canonical_form(s);
        let orbit_size = orbit_size(&representative);
        Self {
            representative,
            orbit_size,
        }
    }
}

/// Groups solutions into congruence classes, sorted by representative.
pub fn classify(solutions: &[Solution]) -> Result<Vec<CongruenceClass>> {
    let Some(first) = solutions.first() else {
        return Ok(Vec::new());
    };
    let n = first.n();
    let mut classes = BTreeMap::new();
    for s in solutions {
        if s.n() != n {
            return Err(Error::MismatchedLattice {
                expected: n,
                found: s.n(),
            });
        }
        classes.entry(canonical_form(s)).or_insert(());
    }
    Ok(classes
        .into_keys()
        .map(|representative| CongruenceClass {
            orbit_size: orbit_size(&representative),
            representative,
        })
        .collect())
}
