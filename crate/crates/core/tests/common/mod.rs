//! Slow, independent reference implementations used to cross-check the
//! library. Nothing here calls into the crate's geometry or symmetry code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;

pub type Pt = (i64, i64);

pub fn collinear(a: Pt, b: Pt, q: Pt) -> bool {
    (b.0 - a.0) * (q.1 - a.1) - (b.1 - a.1) * (q.0 - a.0) == 0
}

/// Coverage by testing every lattice point against every vertex pair.
pub fn covered_points(n: u32, pts: &[Pt]) -> Vec<bool> {
    let n = i64::from(n);
    let mut out = Vec::new();
    for x in 0..=n {
        for y in 0..=n {
            let q = (x, y);
            let hit = pts
                .iter()
                .tuple_combinations()
                .any(|(&a, &b)| collinear(a, b, q));
            out.push(hit);
        }
    }
    out
}

pub fn is_cover(n: u32, pts: &[Pt]) -> bool {
    pts.len() >= 2 && covered_points(n, pts).into_iter().all(|c| c)
}

/// Distinct lines spanned by `pts`, each identified by the set of vertices
/// lying on it.
pub fn line_count(pts: &[Pt]) -> usize {
    let lines: BTreeSet<Vec<usize>> = pts
        .iter()
        .tuple_combinations()
        .map(|(&a, &b)| {
            (0..pts.len())
                .filter(|&k| collinear(a, b, pts[k]))
                .collect()
        })
        .collect();
    lines.len()
}

pub fn has_collinear_triple(pts: &[Pt]) -> bool {
    pts.iter()
        .tuple_combinations()
        .any(|(&a, &b, &c)| collinear(a, b, c))
}

/// The eight symmetries of the square written out as coordinate maps.
pub fn images(n: u32, pts: &[Pt]) -> Vec<Vec<Pt>> {
    let n = i64::from(n);
    let maps: [fn(i64, i64, i64) -> Pt; 8] = [
        |_, x, y| (x, y),
        |n, x, y| (y, n - x),
        |n, x, y| (n - x, n - y),
        |n, x, y| (n - y, x),
        |n, x, y| (x, n - y),
        |n, x, y| (n - x, y),
        |_, x, y| (y, x),
        |n, x, y| (n - y, n - x),
    ];
    maps.iter()
        .map(|f| pts.iter().map(|&(x, y)| f(n, x, y)).sorted().collect())
        .collect()
}

pub fn canonical(n: u32, pts: &[Pt]) -> Vec<Pt> {
    images(n, pts).into_iter().min().unwrap()
}

pub fn orbit(n: u32, pts: &[Pt]) -> usize {
    images(n, pts).into_iter().collect::<BTreeSet<_>>().len()
}

pub fn lattice(n: u32) -> Vec<Pt> {
    let n = i64::from(n);
    (0..=n).cartesian_product(0..=n).collect()
}

/// Canonical forms of every `t`-subset cover, by full enumeration.
pub fn naive_classes(n: u32, t: usize) -> BTreeSet<Vec<Pt>> {
    lattice(n)
        .into_iter()
        .combinations(t)
        .filter(|s| is_cover(n, s))
        .map(|s| canonical(n, &s))
        .collect()
}

pub fn naive_t_min(n: u32) -> usize {
    (2..).find(|&t| !naive_classes(n, t).is_empty()).unwrap()
}

pub fn phi(k: u64) -> u64 {
    (1..=k).filter(|&j| gcd(j, k) == 1).count() as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn to_pts(s: &lattice_cover::Solution) -> Vec<Pt> {
    s.vertices()
        .iter()
        .map(|p| (i64::from(p.x), i64::from(p.y)))
        .collect()
}

pub fn from_pts(n: u32, pts: &[Pt]) -> lattice_cover::Solution {
    lattice_cover::Solution::new(
        n,
        pts.iter()
            .map(|&(x, y)| lattice_cover::LatticePoint::new(x as u32, y as u32))
            .collect(),
    )
    .unwrap()
}
