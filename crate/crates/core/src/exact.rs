//! Exhaustive search for minimum covering sublattices on small lattices.
//!
//! Subsets are built depth-first in lexicographic point order over
//! precomputed per-pair line bitmasks. Two prunes apply:
//!
//! * the smallest vertex must be the smallest point of its own symmetry
//!   orbit, and no later vertex may have a smaller orbit minimum (the
//!   canonical image of every covering set survives this filter);
//! * a branch is cut when the lines still obtainable from the remaining
//!   budget cannot reach the uncovered points, each line holding at most
//!   `n + 1` of them.
//!
//! Congruence classes are formed afterwards by [`classify`].

use std::collections::BTreeSet;
use std::ops::{BitAnd, BitOr, BitOrAssign, Not};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{normalize_line, walk_line, LatticePoint, Solution};
use crate::symmetry::{canonical_form, classify, point_orbit_min, CongruenceClass};

/// Largest `n` whose lattice fits the 128-bit search masks.
pub const MAX_EXACT_N: u32 = 10;

#[derive(Clone, Debug)]
pub struct ExactConfig {
    /// `t_min` refuses lattices with `n` above this.
    pub feasibility_cap: u32,
    pub symmetry_pruning: bool,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub jobs: Option<usize>,
}

impl Default for ExactConfig {
    fn default() -> Self {
        Self {
            feasibility_cap: 7,
            symmetry_pruning: true,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSearch {
    pub classes: Vec<CongruenceClass>,
    /// Complete `t`-subsets reached by the search.
    pub subsets_examined: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub n: u32,
    pub t_min: usize,
    pub classes: Vec<CongruenceClass>,
    pub subsets_examined: u64,
    pub proven: bool,
}

/// Smallest `t` with `t(t-1) >= 2(n+1)`: fewer vertices span too few lines
/// of at most `n + 1` points to reach all `(n+1)^2` vertices.
pub fn lower_bound(n: u32) -> usize {
    let need = 2 * (n as usize + 1);
    (2..)
        .find(|&t| t * (t - 1) >= need)
        .expect("unbounded range")
}

trait Bits:
    Copy
    + Eq
    + Send
    + Sync
    + BitOr<Output = Self>
    + BitOrAssign
    + BitAnd<Output = Self>
    + Not<Output = Self>
{
    const ZERO: Self;
    fn bit(i: usize) -> Self;
    fn ones(self) -> u32;
}

impl Bits for u64 {
    const ZERO: Self = 0;
    fn bit(i: usize) -> Self {
        1 << i
    }
    fn ones(self) -> u32 {
        self.count_ones()
    }
}

impl Bits for u128 {
    const ZERO: Self = 0;
    fn bit(i: usize) -> Self {
        1 << i
    }
    fn ones(self) -> u32 {
        self.count_ones()
    }
}

struct LineTable<M> {
    n: u32,
    side: usize,
    npts: usize,
    full: M,
    pair: Vec<M>,
}

impl<M: Bits> LineTable<M> {
    fn new(n: u32) -> Self {
        let side = n as usize + 1;
        let npts = side * side;
        let point = |i: usize| LatticePoint::new((i / side) as u32, (i % side) as u32);
        let mut pair = vec![M::ZERO; npts * npts];
        for i in 0..npts {
            for j in i + 1..npts {
                let line = normalize_line(point(i), point(j)).expect("distinct points");
                let mut m = M::ZERO;
                walk_line(&line, point(i), n, |x, y| {
                    m |= M::bit(x as usize * side + y as usize)
                });
                pair[i * npts + j] = m;
                pair[j * npts + i] = m;
            }
        }
        let full = (0..npts).fold(M::ZERO, |m, i| m | M::bit(i));
        Self {
            n,
            side,
            npts,
            full,
            pair,
        }
    }

    fn point(&self, i: usize) -> LatticePoint {
        LatticePoint::new((i / self.side) as u32, (i % self.side) as u32)
    }

    fn index(&self, p: LatticePoint) -> usize {
        p.x as usize * self.side + p.y as usize
    }
}

fn lines_between(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

struct Dfs<'a, M> {
    table: &'a LineTable<M>,
    t: usize,
    candidates: &'a [usize],
    chosen: Vec<usize>,
    leaves: u64,
    found: Vec<Vec<usize>>,
}

impl<M: Bits> Dfs<'_, M> {
    fn run(&mut self, from: usize, covered: M) {
        if self.chosen.len() == self.t {
            self.leaves += 1;
            if covered == self.table.full {
                self.found.push(self.chosen.clone());
            }
            return;
        }
        let need = self.t - self.chosen.len();
        let npts = self.table.npts;
        let line_cap = self.table.n as usize + 1;
        for ci in from..self.candidates.len() {
            if self.candidates.len() - ci < need {
                break;
            }
            let v = self.candidates[ci];
            let row = &self.table.pair[v * npts..(v + 1) * npts];
            let mut cov = covered;
            for &c in &self.chosen {
                cov |= row[c];
            }
            let uncovered = (self.table.full & !cov).ones() as usize;
            let k = self.chosen.len() + 1;
            let remaining = need - 1;
            if uncovered > 0
                && (lines_between(k + remaining) - lines_between(k)) * line_cap < uncovered
            {
                continue;
            }
            self.chosen.push(v);
            self.run(ci + 1, cov);
            self.chosen.pop();
        }
    }
}

fn initial_cover<M: Bits>(table: &LineTable<M>, chosen: &[usize]) -> M {
    let mut cov = M::ZERO;
    for (i, &a) in chosen.iter().enumerate() {
        for &b in &chosen[i + 1..] {
            cov |= table.pair[a * table.npts + b];
        }
    }
    cov
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn search_impl<M: Bits>(n: u32, t: usize, config: &ExactConfig) -> (BTreeSet<Solution>, u64) {
    let table = LineTable::<M>::new(n);
    let npts = table.npts;
    let orbit_min: Vec<usize> = (0..npts)
        .map(|i| table.index(point_orbit_min(table.point(i), n)))
        .collect();
    // Top-level branches are (first, second) vertex choices.
    let mut branches = Vec::new();
    for f in (0..npts).filter(|&i| !config.symmetry_pruning || orbit_min[i] == i) {
        let later: Vec<usize> = (f + 1..npts)
            .filter(|&v| !config.symmetry_pruning || orbit_min[v] >= f)
            .collect();
        for (si, &s) in later.iter().enumerate() {
            branches.push((vec![f, s], later[si + 1..].to_vec()));
        }
    }
    let results: Vec<(Vec<Solution>, u64)> = with_jobs(config.jobs, || {
        branches
            .par_iter()
            .map(|(chosen, rest)| {
                let (found, leaves) = run_branch(&table, t, chosen.clone(), rest);
                let forms = found.into_iter().map(|s| canonical_form(&s)).collect();
                (forms, leaves)
            })
            .collect()
    });
    let mut all = BTreeSet::new();
    let mut leaves = 0;
    for (forms, l) in results {
        all.extend(forms);
        leaves += l;
    }
    (all, leaves)
}

fn run_branch<M: Bits>(
    table: &LineTable<M>,
    t: usize,
    chosen: Vec<usize>,
    candidates: &[usize],
) -> (Vec<Solution>, u64) {
    let covered = initial_cover(table, &chosen);
    let mut dfs = Dfs {
        table,
        t,
        candidates,
        chosen,
        leaves: 0,
        found: Vec::new(),
    };
    dfs.run(0, covered);
    let found = dfs
        .found
        .into_iter()
        .map(|mut idx| {
            idx.sort_unstable();
            Solution::from_sorted_unchecked(
                table.n,
                idx.into_iter().map(|i| table.point(i)).collect(),
            )
        })
        .collect();
    (found, dfs.leaves)
}

fn check_size(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::LatticeTooSmall { n, min: 1 });
    }
    if n > MAX_EXACT_N {
        return Err(Error::Capacity {
            n,
            cap: MAX_EXACT_N,
        });
    }
    Ok(())
}

/// All congruence classes of `t`-vertex covers of the `n`-lattice.
pub fn search(n: u32, t: usize, config: &ExactConfig) -> Result<ExactSearch> {
    check_size(n)?;
    let npts = (n as usize + 1).pow(2);
    if t < 2 || t > npts {
        return Ok(ExactSearch {
            classes: Vec::new(),
            subsets_examined: 0,
        });
    }
    let (forms, subsets_examined) = if npts <= 64 {
        search_impl::<u64>(n, t, config)
    } else {
        search_impl::<u128>(n, t, config)
    };
    let forms: Vec<Solution> = forms.into_iter().collect();
    Ok(ExactSearch {
        classes: classify(&forms)?,
        subsets_examined,
    })
}

/// [`search`] with the default configuration.
pub fn solve_exact(n: u32, t: usize) -> Result<Vec<CongruenceClass>> {
    Ok(search(n, t, &ExactConfig::default())?.classes)
}

pub fn t_min(n: u32) -> Result<ExactResult> {
    t_min_with(n, &ExactConfig::default())
}

/// Raises `t` from [`lower_bound`] until a cover exists. The search is
/// exhaustive at every size, so the result is always proven.
pub fn t_min_with(n: u32, config: &ExactConfig) -> Result<ExactResult> {
    if n > config.feasibility_cap {
        return Err(Error::Capacity {
            n,
            cap: config.feasibility_cap,
        });
    }
    check_size(n)?;
    let mut examined = 0;
    for t in lower_bound(n).. {
        let found = search(n, t, config)?;
        examined += found.subsets_examined;
        if !found.classes.is_empty() {
            return Ok(ExactResult {
                n,
                t_min: t,
                classes: found.classes,
                subsets_examined: examined,
                proven: true,
            });
        }
    }
    unreachable!("the full lattice always covers itself")
}

/// Every `t`-vertex cover of the `n`-lattice containing all of `forced`,
/// without symmetry reduction, in lexicographic order.
pub fn covers_with_forced(n: u32, t: usize, forced: &[LatticePoint]) -> Result<Vec<Solution>> {
    check_size(n)?;
    let forced = Solution::new(n, forced.to_vec())?;
    if t < forced.len().max(2) {
        return Ok(Vec::new());
    }
    let npts = (n as usize + 1).pow(2);
    fn go<M: Bits>(n: u32, t: usize, forced: &Solution) -> Vec<Solution> {
        let table = LineTable::<M>::new(n);
        let chosen: Vec<usize> = forced.vertices().iter().map(|&p| table.index(p)).collect();
        let rest: Vec<usize> = (0..table.npts).filter(|i| !chosen.contains(i)).collect();
        let mut found = run_branch(&table, t, chosen, &rest).0;
        found.sort();
        found
    }
    Ok(if npts <= 64 {
        go::<u64>(n, t, &forced)
    } else {
        go::<u128>(n, t, &forced)
    })
}
