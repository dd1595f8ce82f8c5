//! Integer-exact lattice points, spanned lines and coverage.
//!
//! A line through two lattice points is stored as the primitive integer
//! triple `(a, b, c)` of `a*x + b*y = c`, so two point pairs on the same
//! geometric line always produce the same [`LineKey`]. No floating point is
//! involved anywhere in this module.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct LatticePoint {
    pub x: u32,
    pub y: u32,
}

impl LatticePoint {
    pub const fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    pub fn in_lattice(self, n: u32) -> bool {
        self.x <= n && self.y <= n
    }
}

impl From<[u32; 2]> for LatticePoint {
    fn from([x, y]: [u32; 2]) -> Self {
        Self { x, y }
    }
}

impl From<LatticePoint> for [u32; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.x, p.y]
    }
}

impl From<(u32, u32)> for LatticePoint {
    fn from((x, y): (u32, u32)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The infinite line `a*x + b*y = c`, normalized so that `gcd(|a|, |b|) = 1`
/// and `a > 0`, or `a = 0` and `b > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineKey {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl LineKey {
    /// Primitive step between consecutive lattice points on the line.
    pub fn direction(&self) -> (i64, i64) {
        (-self.b, self.a)
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.a * i64::from(p.x) + self.b * i64::from(p.y) == self.c
    }
}

impl fmt::Display for LineKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{:+}y={}", self.a, self.b, self.c)
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Canonical key of the line through `p` and `q`.
pub fn normalize_line(p: LatticePoint, q: LatticePoint) -> Result<LineKey> {
    if p == q {
        return Err(Error::DegeneratePair(p));
    }
    let (px, py) = (i64::from(p.x), i64::from(p.y));
    let (qx, qy) = (i64::from(q.x), i64::from(q.y));
    let mut a = qy - py;
    let mut b = px - qx;
    let g = gcd(a, b);
    a /= g;
    b /= g;
    if a < 0 || (a == 0 && b < 0) {
        a = -a;
        b = -b;
    }
    Ok(LineKey {
        a,
        b,
        c: a * px + b * py,
    })
}

/// Walks `line` in both directions from `start`, calling `visit` for every
/// lattice point of `[0, n]^2` on it. `start` must lie on the line.
pub(crate) fn walk_line(
    line: &LineKey,
    start: LatticePoint,
    n: u32,
    mut visit: impl FnMut(u32, u32),
) {
    let (dx, dy) = line.direction();
    let n = i64::from(n);
    let inside = |x: i64, y: i64| (0..=n).contains(&x) && (0..=n).contains(&y);
    let (mut x, mut y) = (i64::from(start.x), i64::from(start.y));
    while inside(x - dx, y - dy) {
        x -= dx;
        y -= dy;
    }
    while inside(x, y) {
        visit(x as u32, y as u32);
        x += dx;
        y += dy;
    }
}

// Smallest k with lo <= base + k*step, for step > 0.
fn ceil_div(a: i64, b: i64) -> i64 {
    let q = a.div_euclid(b);
    if a.rem_euclid(b) == 0 {
        q
    } else {
        q + 1
    }
}

// Inverse of a modulo m (m > 0, gcd(a, m) = 1).
fn mod_inverse(a: i64, m: i64) -> i64 {
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m)
}

/// Lattice points of `[0, n]^2` on `line`, in sorted order.
pub fn points_on_line(line: &LineKey, n: u32) -> Vec<LatticePoint> {
    let ni = i64::from(n);
    let LineKey { a, b, c } = *line;
    // Parametrize x = x0 + k*|b| (or a vertical line when b = 0).
    let start = if b == 0 {
        (c % a == 0 && (0..=ni).contains(&(c / a))).then(|| LatticePoint::new((c / a) as u32, 0))
    } else {
        let m = b.abs();
        let x0 = if m == 1 {
            0
        } else {
            (c.rem_euclid(m) * mod_inverse(a, m)).rem_euclid(m)
        };
        // y(k) = (c - a*x0)/b - k*a*sign(b); find first k >= 0 with x in range and y in range.
        let y0 = (c - a * x0) / b;
        let dy = -a * b.signum();
        let (mut k_lo, mut k_hi) = (0i64, (ni - x0).div_euclid(m));
        if dy > 0 {
            k_lo = k_lo.max(ceil_div(-y0, dy));
            k_hi = k_hi.min((ni - y0).div_euclid(dy));
        } else if dy < 0 {
            k_lo = k_lo.max(ceil_div(y0 - ni, -dy));
            k_hi = k_hi.min(y0.div_euclid(-dy));
        } else if !(0..=ni).contains(&y0) {
            k_hi = -1;
        }
        (x0 <= ni && k_lo <= k_hi)
            .then(|| LatticePoint::new((x0 + k_lo * m) as u32, (y0 + k_lo * dy) as u32))
    };
    let mut out = Vec::new();
    if let Some(p) = start {
        walk_line(line, p, n, |x, y| out.push(LatticePoint::new(x, y)));
    }
    out.sort_unstable();
    out
}

/// Lattice parameter plus a sorted, duplicate-free vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    n: u32,
    vertices: Vec<LatticePoint>,
}

impl Solution {
    /// Sorts `vertices`; rejects duplicates and points outside `[0, n]^2`.
    pub fn new(n: u32, mut vertices: Vec<LatticePoint>) -> Result<Self> {
        if let Some(&point) = vertices.iter().find(|p| !p.in_lattice(n)) {
            return Err(Error::OutOfRange { point, n });
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Self { n, vertices })
    }

    /// Like [`Solution::new`] but silently merges repeated points.
    pub fn from_points(n: u32, points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut vertices: Vec<_> = points.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        Self::new(n, vertices)
    }

    pub(crate) fn from_sorted_unchecked(n: u32, vertices: Vec<LatticePoint>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { n, vertices }
    }

    /// The four corners of the `n`-lattice.
    pub fn corners(n: u32) -> Self {
        Self::from_points(n, [(0, 0), (0, n), (n, 0), (n, n)].map(LatticePoint::from))
            .expect("corners are in range")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.vertices.binary_search(&p).is_ok()
    }

    /// Shifts every vertex by `(dx, dy)` into the lattice of parameter `n`.
    pub fn translated(&self, dx: u32, dy: u32, n: u32) -> Result<Self> {
        Self::new(
            n,
            self.vertices
                .iter()
                .map(|p| LatticePoint::new(p.x + dx, p.y + dy))
                .collect(),
        )
    }

    pub fn without(&self, p: LatticePoint) -> Self {
        Self {
            n: self.n,
            vertices: self.vertices.iter().copied().filter(|&v| v != p).collect(),
        }
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} t={}", self.n, self.vertices.len())?;
        for p in &self.vertices {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// Bitset over the `(n+1)^2` lattice vertices, bit `x*(n+1) + y` for `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverageMask {
    n: u32,
    words: Vec<u64>,
}

impl CoverageMask {
    pub fn empty(n: u32) -> Self {
        let bits = Self::bit_len_for(n);
        Self {
            n,
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn bit_len_for(n: u32) -> usize {
        let side = n as usize + 1;
        side * side
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn bit_len(&self) -> usize {
        Self::bit_len_for(self.n)
    }

    pub fn index(&self, x: u32, y: u32) -> usize {
        x as usize * (self.n as usize + 1) + y as usize
    }

    pub fn set(&mut self, x: u32, y: u32) {
        let i = self.index(x, y);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, p: LatticePoint) -> bool {
        let i = self.index(p.x, p.y);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_full(&self) -> bool {
        self.count_ones() == self.bit_len()
    }

    /// `true` when every bit set here is also set in `other`.
    pub fn is_subset_of(&self, other: &CoverageMask) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn uncovered(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..=self.n)
            .flat_map(move |x| (0..=self.n).map(move |y| LatticePoint::new(x, y)))
            .filter(move |&p| !self.get(p))
    }
}

// Each distinct spanned line with one of its defining points.
fn spanned_with_anchor(s: &Solution) -> Result<HashMap<LineKey, LatticePoint>> {
    let v = s.vertices();
    if v.len() < 2 {
        return Err(Error::InsufficientVertices { got: v.len() });
    }
    let mut lines = HashMap::with_capacity(v.len() * (v.len() - 1) / 2);
    for (i, &p) in v.iter().enumerate() {
        for &q in &v[i + 1..] {
            lines.entry(normalize_line(p, q)?).or_insert(p);
        }
    }
    Ok(lines)
}

/// Lattice vertices lying on at least one line spanned by two vertices of `s`.
pub fn coverage(s: &Solution) -> Result<CoverageMask> {
    let mut mask = CoverageMask::empty(s.n());
    for (line, anchor) in spanned_with_anchor(s)? {
        walk_line(&line, anchor, s.n(), |x, y| mask.set(x, y));
    }
    Ok(mask)
}

pub fn is_cover(s: &Solution) -> Result<bool> {
    Ok(coverage(s)?.is_full())
}

/// Distinct lines spanned by pairs of vertices of `s`, sorted.
pub fn spanned_lines(s: &Solution) -> Result<Vec<LineKey>> {
    let mut lines: Vec<_> = spanned_with_anchor(s)?.into_keys().collect();
    lines.sort_unstable();
    Ok(lines)
}
