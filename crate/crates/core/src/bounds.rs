//! Deterministic constructions of covering sets and the upper bounds they
//! give on the minimum order.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{gcd, is_cover, LatticePoint, Solution};
use crate::io::parse_corpus;

const EXACT_WITNESSES: &str = include_str!("../data/exact_witnesses.txt");
const TILES: &str = include_str!("../data/tiles.txt");

fn require_cover(s: &Solution, what: &str) -> Result<()> {
    if is_cover(s)? {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "{what} does not cover its n={} lattice",
            s.n()
        )))
    }
}

/// The `2n` vertices of both diagonals minus one column near the middle:
/// `x = n/2` for even `n`, `x = (n-1)/2` for odd `n`.
pub fn symmetric_design(n: u32) -> Result<Solution> {
    if n < 2 {
        return Err(Error::LatticeTooSmall { n, min: 2 });
    }
    let skip = if n.is_multiple_of(2) {
        n / 2
    } else {
        (n - 1) / 2
    };
    Solution::from_points(
        n,
        (0..=n)
            .filter(|&i| i != skip)
            .flat_map(|i| [LatticePoint::new(i, i), LatticePoint::new(i, n - i)]),
    )
}

/// Cover of the `(n+1)`-lattice from a cover of the `n`-lattice: adds the new
/// corner `(n+1, n+1)` and the far ends `(0, n+1)`, `(n+1, 0)` of the new row
/// and column.
pub fn taper_extend(s: &Solution) -> Result<Solution> {
    require_cover(s, "taper_extend input")?;
    let m = s.n() + 1;
    Solution::from_points(
        m,
        s.vertices()
            .iter()
            .copied()
            .chain([(m, m), (0, m), (m, 0)].map(LatticePoint::from)),
    )
}

/// Cover of the `(n+2)`-lattice: the input shifted by `(1, 1)` plus the four
/// outer corners.
pub fn corner_extend(s: &Solution) -> Result<Solution> {
    require_cover(s, "corner_extend input")?;
    let m = s.n() + 2;
    let shifted = s.translated(1, 1, m)?;
    Solution::from_points(
        m,
        shifted
            .vertices()
            .iter()
            .copied()
            .chain(Solution::corners(m).vertices().iter().copied()),
    )
}

/// Covers the `n`-lattice with a `k x k` arrangement of copies of `block`,
/// spread evenly so that neighbouring copies touch or overlap.
pub fn block_tile(n: u32, k: u32, block: &Solution) -> Result<Solution> {
    let m = block.n();
    if k < 2 || m > n || k * (m + 1) < n + 1 {
        return Err(Error::InvalidInput(format!(
            "{k}x{k} blocks of side {} cannot tile the n={n} lattice",
            m + 1
        )));
    }
    require_cover(block, "tiling block")?;
    let origins: Vec<u32> = (0..k).map(|a| a * (n - m) / (k - 1)).collect();
    let mut points = Vec::with_capacity(block.len() * (k * k) as usize);
    for &ox in &origins {
        for &oy in &origins {
            points.extend(
                block
                    .vertices()
                    .iter()
                    .map(|p| LatticePoint::new(p.x + ox, p.y + oy)),
            );
        }
    }
    Solution::from_points(n, points)
}

/// Four-block tiling with blocks for `floor(n/2)`; the blocks overlap by one
/// row and column when `n` is even.
pub fn quad_tile(n: u32, block: &Solution) -> Result<Solution> {
    if block.n() != n / 2 {
        return Err(Error::MismatchedLattice {
            expected: n / 2,
            found: block.n(),
        });
    }
    block_tile(n, 2, block)
}

/// `i x i` copies of a corner-anchored tile sharing their boundary rows and
/// columns.
pub fn stack_tiles(tile: &Solution, i: u32) -> Result<Solution> {
    let k = tile.n();
    if let Some(&missing) = Solution::corners(k)
        .vertices()
        .iter()
        .find(|&&c| !tile.contains(c))
    {
        return Err(Error::MissingCorner(missing));
    }
    require_cover(tile, "stacking tile")?;
    if i == 0 {
        return Err(Error::InvalidInput(
            "repetition count must be positive".into(),
        ));
    }
    let n = k * i;
    let mut points = Vec::with_capacity(tile.len() * (i * i) as usize);
    for a in 0..i {
        for b in 0..i {
            points.extend(
                tile.vertices()
                    .iter()
                    .map(|p| LatticePoint::new(p.x + a * k, p.y + b * k)),
            );
        }
    }
    Solution::from_points(n, points)
}

/// Euler's totient of `1..=m` by a linear sieve; index 0 holds 0.
pub fn totients(m: usize) -> Vec<u64> {
    let mut phi = vec![0u64; m + 1];
    let mut primes = Vec::new();
    if m >= 1 {
        phi[1] = 1;
    }
    for i in 2..=m {
        if phi[i] == 0 {
            phi[i] = i as u64 - 1;
            primes.push(i);
        }
        for &p in &primes {
            if i * p > m {
                break;
            }
            if i % p == 0 {
                phi[i * p] = phi[i] * p as u64;
                break;
            }
            phi[i * p] = phi[i] * (p as u64 - 1);
        }
    }
    phi
}

/// `sum_{k=1..m} phi(k)`, the number of reduced fractions in `(0, 1]` with
/// denominator at most `m`.
pub fn totient_summatory(m: usize) -> u64 {
    totients(m).iter().sum()
}

/// Size limit of [`central_star`]: `1 + 4 * totient_summatory(floor((n+1)/2))`.
pub fn central_star_bound(n: u32) -> u64 {
    1 + 4 * totient_summatory(n.div_ceil(2) as usize)
}

/// One vertex at `(ceil(n/2), ceil(n/2))` plus, for every line through it
/// that meets another lattice vertex, the lattice neighbour along that line.
pub fn central_star(n: u32) -> Result<Solution> {
    if n < 2 {
        return Err(Error::LatticeTooSmall { n, min: 2 });
    }
    let h = i64::from(n.div_ceil(2));
    let ni = i64::from(n);
    let inside = |x: i64, y: i64| (0..=ni).contains(&x) && (0..=ni).contains(&y);
    let mut points = vec![LatticePoint::new(h as u32, h as u32)];
    // One representative per line: dy > 0, or dy = 0 and dx > 0.
    for dy in 0..=h {
        for dx in -h..=h {
            if (dy == 0 && dx <= 0) || gcd(dx, dy) != 1 {
                continue;
            }
            let hit = [(h + dx, h + dy), (h - dx, h - dy)]
                .into_iter()
                .find(|&(x, y)| inside(x, y));
            if let Some((x, y)) = hit {
                points.push(LatticePoint::new(x as u32, y as u32));
            }
        }
    }
    Solution::from_points(n, points)
}

/// Whether `t < (n+1)^(2/3) * ln(n+1)`. The logarithm base is not fixed by
/// the source of this bound; the natural logarithm is assumed.
pub fn summary_check(n: u32, t: usize) -> bool {
    (t as f64) < summary_limit(n)
}

pub fn summary_limit(n: u32) -> f64 {
    let m = f64::from(n) + 1.0;
    m.powf(2.0 / 3.0) * m.ln()
}

pub const SUMMARY_LOG_NOTE: &str =
    "summary bound uses the natural logarithm (base not stated at the source)";

/// Minimal covers for `n = 1..=6`, one per lattice, found by exhaustive search.
pub fn exact_witnesses() -> BTreeMap<u32, Solution> {
    parse_corpus(EXACT_WITNESSES, "exact_witnesses.txt")
        .expect("shipped witnesses parse")
        .into_iter()
        .map(|r| (r.n, r.solution().expect("valid witness")))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TileKind {
    /// The four corners of the 3-lattice.
    Corners3,
    /// A 6-vertex cover of the 4-lattice with its corners and two vertices
    /// that neighbouring tiles do not share.
    Interstitial4,
    /// A 6-vertex cover of the 4-lattice with its corners and two opposite
    /// edge midpoints, which neighbouring tiles share.
    SharedEdge4,
}

impl TileKind {
    pub const ALL: [TileKind; 3] = [
        TileKind::Corners3,
        TileKind::Interstitial4,
        TileKind::SharedEdge4,
    ];

    pub fn tile(self) -> Solution {
        match self {
            TileKind::Corners3 => Solution::corners(3),
            TileKind::Interstitial4 => shipped_tile("interstitial"),
            TileKind::SharedEdge4 => shipped_tile("shared-edge"),
        }
    }

    /// Vertex count promised for `i x i` stacking.
    pub fn stacked_size(self, i: u32) -> usize {
        let i = i as usize;
        match self {
            TileKind::Corners3 => (i + 1).pow(2),
            TileKind::Interstitial4 => (i + 1).pow(2) + 2 * i * i,
            TileKind::SharedEdge4 => (i + 1).pow(2) + i * (i + 1),
        }
    }
}

fn shipped_tile(name: &str) -> Solution {
    parse_corpus(TILES, "tiles.txt")
        .expect("shipped tiles parse")
        .into_iter()
        .find(|r| r.source == name)
        .and_then(|r| r.solution().ok())
        .unwrap_or_else(|| panic!("tile `{name}` missing from tiles.txt"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// A cover supplied by the caller for this very `n`.
    Known,
    SymmetricDesign,
    Taper,
    CornerExtension,
    BlockTiling {
        k: u32,
    },
    StackedTiles {
        tile: TileKind,
    },
    CentralStar,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Known => f.write_str("known"),
            Method::SymmetricDesign => f.write_str("symmetric design (2n)"),
            Method::Taper => f.write_str("taper t(n-1)+3"),
            Method::CornerExtension => f.write_str("corner extension t(n-2)+4"),
            Method::BlockTiling { k } => write!(f, "{}-block tiling", k * k),
            Method::StackedTiles { tile } => write!(f, "stacked tiles ({tile:?})"),
            Method::CentralStar => f.write_str("central star"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub method: Method,
    pub bound: usize,
    #[serde(serialize_with = "ser_witness")]
    pub witness: Option<Solution>,
}

fn ser_witness<S: serde::Serializer>(
    w: &Option<Solution>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(sol) => s.collect_seq(sol.vertices()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: u32,
    pub entries: Vec<BoundEntry>,
    pub best: BoundEntry,
}

/// Evaluates every construction for `n`; recursive and tiling entries draw
/// their seeds from `known` (covers of smaller lattices, keyed by `n`).
pub fn bounds_report(n: u32, known: &BTreeMap<u32, Solution>) -> Result<BoundsReport> {
    if n < 2 {
        return Err(Error::LatticeTooSmall { n, min: 2 });
    }
    let mut entries = Vec::new();
    let mut push = |method: Method, witness: Result<Solution>| -> Result<()> {
        let w = witness?;
        debug_assert!(
            is_cover(&w).unwrap_or(false),
            "{method} produced a non-cover"
        );
        entries.push(BoundEntry {
            method,
            bound: w.len(),
            witness: Some(w),
        });
        Ok(())
    };
    let known_cover = |m: u32| known.get(&m).filter(|s| s.n() == m);

    if let Some(s) = known_cover(n) {
        push(Method::Known, Ok(s.clone()))?;
    }
    push(Method::SymmetricDesign, symmetric_design(n))?;
    if let Some(s) = known_cover(n - 1) {
        push(Method::Taper, taper_extend(s))?;
    }
    if n >= 3 {
        if let Some(s) = known_cover(n - 2) {
            push(Method::CornerExtension, corner_extend(s))?;
        }
    }
    for k in 2..=5 {
        let m = (n + 1).div_ceil(k) - 1;
        if m == 0 || m >= n {
            continue;
        }
        if let Some(block) = known_cover(m) {
            push(Method::BlockTiling { k }, block_tile(n, k, block))?;
        }
    }
    for kind in TileKind::ALL {
        let tile = kind.tile();
        if n.is_multiple_of(tile.n()) {
            push(
                Method::StackedTiles { tile: kind },
                stack_tiles(&tile, n / tile.n()),
            )?;
        }
    }
    push(Method::CentralStar, central_star(n))?;

    let best = entries
        .iter()
        .min_by_key(|e| e.bound)
        .cloned()
        .expect("symmetric design always applies");
    Ok(BoundsReport { n, entries, best })
}

/// Best constructive cover for every `n` in `2..=up_to`, each report seeded
/// with `seed` plus the best covers found for smaller lattices.
pub fn known_chain(up_to: u32, seed: &BTreeMap<u32, Solution>) -> Result<BTreeMap<u32, Solution>> {
    let mut known = seed.clone();
    for n in 2..=up_to {
        let best = bounds_report(n, &known)?.best;
        if let Some(w) = best.witness {
            known.insert(n, w);
        }
    }
    Ok(known)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(n: u32, pts: &[(u32, u32)]) -> Solution {
        Solution::new(n, pts.iter().map(|&p| p.into()).collect()).unwrap()
    }

    #[test]
    fn symmetric_design_examples() {
        let s4 = symmetric_design(4).unwrap();
        assert_eq!(s4.len(), 8);
        assert!(is_cover(&s4).unwrap());
        let s5 = symmetric_design(5).unwrap();
        assert_eq!(s5.len(), 10);
        assert!(is_cover(&s5).unwrap());
        assert_eq!(symmetric_design(2).unwrap(), Solution::corners(2));
        assert_eq!(
            symmetric_design(1),
            Err(Error::LatticeTooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn recursions() {
        let t = taper_extend(&Solution::corners(3)).unwrap();
        assert_eq!((t.n(), t.len()), (4, 7));
        assert!(is_cover(&t).unwrap());

        let c = corner_extend(&Solution::corners(2)).unwrap();
        assert_eq!((c.n(), c.len()), (4, 8));
        assert!(is_cover(&c).unwrap());

        let bad = sol(3, &[(0, 0), (1, 1)]);
        assert!(matches!(taper_extend(&bad), Err(Error::InvalidInput(_))));
        assert!(matches!(corner_extend(&bad), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn tilings() {
        let q5 = quad_tile(5, &Solution::corners(2)).unwrap();
        assert!(q5.len() <= 16 && is_cover(&q5).unwrap());
        let q6 = quad_tile(6, &Solution::corners(3)).unwrap();
        assert!(q6.len() < 16 && is_cover(&q6).unwrap());
        assert!(quad_tile(6, &Solution::corners(2)).is_err());

        let s2 = stack_tiles(&Solution::corners(3), 2).unwrap();
        assert_eq!((s2.n(), s2.len()), (6, 9));
        let s3 = stack_tiles(&Solution::corners(3), 3).unwrap();
        assert_eq!((s3.n(), s3.len()), (9, 16));
        assert!(is_cover(&s3).unwrap());

        assert_eq!(
            stack_tiles(&sol(3, &[(0, 0), (0, 3), (3, 0), (1, 2)]), 2),
            Err(Error::MissingCorner(LatticePoint::new(3, 3)))
        );
    }

    #[test]
    fn four_lattice_tiles_stack_to_formula() {
        for kind in [TileKind::Interstitial4, TileKind::SharedEdge4] {
            let tile = kind.tile();
            assert_eq!(tile.len(), 6);
            for i in 1..=4 {
                let s = stack_tiles(&tile, i).unwrap();
                assert_eq!(s.len(), kind.stacked_size(i), "{kind:?} i={i}");
                assert!(is_cover(&s).unwrap());
            }
        }
        assert_eq!(
            stack_tiles(&TileKind::Interstitial4.tile(), 2)
                .unwrap()
                .len(),
            17
        );
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient_summatory(0), 0);
        assert_eq!(totient_summatory(1), 1);
        assert_eq!(totient_summatory(5), 10);
        assert_eq!(totients(12)[1..], [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn central_star_examples() {
        let s2 = central_star(2).unwrap();
        assert!(s2.len() as u64 <= central_star_bound(2));
        assert_eq!(central_star_bound(2), 5);
        assert!(is_cover(&s2).unwrap());
        assert_eq!(central_star_bound(4), 9);
        assert!(central_star(4).unwrap().len() <= 9);
    }

    #[test]
    fn report_for_six() {
        let known = exact_witnesses();
        let r =
            bounds_report(6, &known.range(..6).map(|(k, v)| (*k, v.clone())).collect()).unwrap();
        let bound = |m: Method| r.entries.iter().find(|e| e.method == m).map(|e| e.bound);
        assert_eq!(bound(Method::Taper), Some(9));
        assert_eq!(bound(Method::CornerExtension), Some(10));
        assert_eq!(bound(Method::SymmetricDesign), Some(12));
        assert_eq!(
            bound(Method::StackedTiles {
                tile: TileKind::Corners3
            }),
            Some(9)
        );
        assert!(r.best.bound <= 9);
        for e in &r.entries {
            let w = e.witness.as_ref().unwrap();
            assert_eq!(w.len(), e.bound);
            assert!(is_cover(w).unwrap());
            assert!(r.best.bound <= e.bound);
        }
    }

    #[test]
    fn report_for_three() {
        let r = bounds_report(3, &BTreeMap::new()).unwrap();
        assert_eq!(
            r.entries
                .iter()
                .find(|e| e.method == Method::SymmetricDesign)
                .unwrap()
                .bound,
            6
        );
        assert!(r.best.bound <= 6);
    }

    #[test]
    fn summary_examples() {
        assert!(summary_check(12, 11));
        assert!(summary_check(110, 100));
        assert!(!summary_check(2, 4));
        assert!((summary_limit(12) - 14.2).abs() < 0.05);
        assert!((summary_limit(110) - 108.77).abs() < 0.01);
    }
}
