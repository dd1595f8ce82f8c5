//! Randomized search for small covers on lattices beyond exhaustive reach.
//!
//! Every restart draws from its own ChaCha8 stream, selected by
//! `(seed, restart index)`, so results do not depend on how many worker
//! threads run the restarts.
//!
//! Per restart, [`best_upper_bound_search`] starts from the best
//! constructive cover and repeatedly tries one vertex fewer: first by plain
//! Monte Carlo sampling, then by a fixed-size tabu search that swaps single
//! vertices to shrink the uncovered set. Each hit is shrunk further by
//! [`improve`].

use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::{exact_witnesses, known_chain};
use crate::error::{Error, Result};
use crate::exact::lower_bound;
use crate::geometry::{is_cover, normalize_line, walk_line, LatticePoint, Solution};
use crate::symmetry::{canonical_form, SymmetryOp};

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    UniformRandom,
    /// Vertices come in mirror pairs across one randomly chosen axis of the
    /// square.
    SymmetricPairs,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" | "uniform-random" => Ok(Strategy::UniformRandom),
            "symmetric" | "symmetric-pairs" => Ok(Strategy::SymmetricPairs),
            other => Err(Error::InvalidInput(format!("unknown strategy `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub strategy: Strategy,
    /// Size sampled by [`random_search`]; [`best_upper_bound_search`] stops
    /// descending once it reaches this size.
    pub target_t: usize,
    /// Monte Carlo samples per attempted size.
    pub budget: u64,
    pub seed: u64,
    pub restarts: u32,
    /// Tabu steps per attempted size, and swap attempts inside [`improve`].
    pub improve_rounds: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            strategy: Strategy::UniformRandom,
            target_t: 2,
            budget: 1_000_000,
            seed: DEFAULT_SEED,
            restarts: 16,
            improve_rounds: 10_000,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.target_t < 2 {
            return Err(Error::InsufficientVertices { got: self.target_t });
        }
        if self.budget == 0 {
            return Err(Error::InvalidInput("budget must be at least 1".into()));
        }
        Ok(())
    }
}

/// RNG for stream `index` of the master `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

// Table entries above this fall back to walking lines on demand.
const MAX_TABLE_WORDS: usize = 1 << 22;

/// Coverage over point indices `x*(n+1)+y` with per-pair line bitmasks.
pub(crate) struct Evaluator {
    n: u32,
    side: usize,
    npts: usize,
    words: usize,
    table: Option<Vec<u64>>,
    full: Vec<u64>,
}

impl Evaluator {
    pub(crate) fn new(n: u32) -> Self {
        let side = n as usize + 1;
        let npts = side * side;
        let words = npts.div_ceil(64);
        let mut full = vec![u64::MAX; words];
        if !npts.is_multiple_of(64) {
            full[words - 1] = (1u64 << (npts % 64)) - 1;
        }
        let mut ev = Self {
            n,
            side,
            npts,
            words,
            table: None,
            full,
        };
        if npts * npts * words <= MAX_TABLE_WORDS {
            let mut table = vec![0u64; npts * npts * words];
            for i in 0..npts {
                for j in i + 1..npts {
                    let mut m = vec![0u64; words];
                    ev.walk_pair(i, j, &mut m);
                    table[(i * npts + j) * words..][..words].copy_from_slice(&m);
                    table[(j * npts + i) * words..][..words].copy_from_slice(&m);
                }
            }
            ev.table = Some(table);
        }
        ev
    }

    fn point(&self, i: usize) -> LatticePoint {
        LatticePoint::new((i / self.side) as u32, (i % self.side) as u32)
    }

    fn index(&self, p: LatticePoint) -> usize {
        p.x as usize * self.side + p.y as usize
    }

    fn walk_pair(&self, i: usize, j: usize, acc: &mut [u64]) {
        let line = normalize_line(self.point(i), self.point(j)).expect("distinct points");
        let side = self.side;
        walk_line(&line, self.point(i), self.n, |x, y| {
            let b = x as usize * side + y as usize;
            acc[b / 64] |= 1 << (b % 64);
        });
    }

    fn or_line(&self, i: usize, j: usize, acc: &mut [u64]) {
        match &self.table {
            Some(t) => {
                let m = &t[(i * self.npts + j) * self.words..][..self.words];
                for (a, b) in acc.iter_mut().zip(m) {
                    *a |= b;
                }
            }
            None => self.walk_pair(i, j, acc),
        }
    }

    fn cover_of(&self, set: &[usize], acc: &mut [u64]) {
        acc.fill(0);
        for (a, &i) in set.iter().enumerate() {
            for &j in &set[a + 1..] {
                self.or_line(i, j, acc);
            }
        }
    }

    fn uncovered(&self, acc: &[u64]) -> usize {
        acc.iter()
            .zip(&self.full)
            .map(|(a, f)| (f & !a).count_ones() as usize)
            .sum()
    }

    fn for_each_uncovered(&self, acc: &[u64], mut visit: impl FnMut(usize)) {
        for (k, (a, f)) in acc.iter().zip(&self.full).enumerate() {
            let mut bits = f & !a;
            while bits != 0 {
                visit(k * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
    }

    fn weighted_uncovered(&self, acc: &[u64], weight: &[u64]) -> u64 {
        let mut total = 0;
        self.for_each_uncovered(acc, |i| total += weight[i]);
        total
    }

    fn is_cover(&self, set: &[usize], acc: &mut [u64]) -> bool {
        self.cover_of(set, acc);
        self.uncovered(acc) == 0
    }

    fn solution(&self, set: &[usize]) -> Solution {
        Solution::from_points(self.n, set.iter().map(|&i| self.point(i))).expect("indices in range")
    }

    fn indices(&self, s: &Solution) -> Vec<usize> {
        s.vertices().iter().map(|&p| self.index(p)).collect()
    }
}

/// Draws `t` distinct vertices placed as mirror pairs across one random axis
/// of the square. An odd vertex goes on the axis, or anywhere when the axis
/// holds no lattice points. Panics if `t` exceeds the number of vertices.
pub fn sample_symmetric(n: u32, t: usize, rng: &mut impl Rng) -> (SymmetryOp, Solution) {
    let side = n as usize + 1;
    let npts = side * side;
    assert!(t <= npts, "cannot choose {t} of {npts} vertices");
    let point = |i: usize| LatticePoint::new((i / side) as u32, (i % side) as u32);
    let index = |p: LatticePoint| p.x as usize * side + p.y as usize;
    let op = SymmetryOp::MIRRORS[rng.random_range(0..4)];
    let mut chosen = vec![false; npts];
    let mut set = Vec::with_capacity(t);
    let off_axis: Vec<usize> = (0..npts)
        .filter(|&i| op.apply_point(point(i), n) != point(i))
        .collect();
    let mut attempts = 0;
    while set.len() + 2 <= t && attempts < 64 * npts {
        attempts += 1;
        let p = off_axis[rng.random_range(0..off_axis.len())];
        let q = index(op.apply_point(point(p), n));
        if !chosen[p] && !chosen[q] {
            chosen[p] = true;
            chosen[q] = true;
            set.extend([p, q]);
        }
    }
    while set.len() < t {
        let on_axis: Vec<usize> = (0..npts)
            .filter(|&i| !chosen[i] && op.apply_point(point(i), n) == point(i))
            .collect();
        let pool: Vec<usize> = if on_axis.is_empty() {
            (0..npts).filter(|&i| !chosen[i]).collect()
        } else {
            on_axis
        };
        let p = pool[rng.random_range(0..pool.len())];
        chosen[p] = true;
        set.push(p);
    }
    let sol = Solution::from_points(n, set.into_iter().map(point)).expect("in range");
    (op, sol)
}

fn sample_into(
    ev: &Evaluator,
    t: usize,
    strategy: Strategy,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<usize>,
) {
    out.clear();
    match strategy {
        Strategy::UniformRandom => out.extend(sample(rng, ev.npts, t)),
        Strategy::SymmetricPairs => {
            let (_, s) = sample_symmetric(ev.n, t, rng);
            out.extend(ev.indices(&s));
        }
    }
}

fn monte_carlo(
    ev: &Evaluator,
    t: usize,
    strategy: Strategy,
    budget: u64,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<usize>> {
    let mut set = Vec::with_capacity(t);
    let mut acc = vec![0u64; ev.words];
    for _ in 0..budget {
        sample_into(ev, t, strategy, rng, &mut set);
        if ev.is_cover(&set, &mut acc) {
            return Some(set);
        }
    }
    None
}

fn check_size(n: u32, t: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::LatticeTooSmall { n, min: 1 });
    }
    let npts = (n as usize + 1).pow(2);
    if t > npts {
        return Err(Error::InvalidInput(format!(
            "cannot choose {t} of {npts} vertices"
        )));
    }
    Ok(())
}

/// Samples `config.target_t` vertices per the strategy until one sample
/// covers the lattice, for at most `config.budget` samples.
pub fn random_search(n: u32, config: &SearchConfig) -> Result<Option<Solution>> {
    config.validate()?;
    check_size(n, config.target_t)?;
    let ev = Evaluator::new(n);
    let mut rng = stream(config.seed, 0);
    Ok(monte_carlo(
        &ev,
        config.target_t,
        config.strategy,
        config.budget,
        &mut rng,
    )
    .map(|s| ev.solution(&s)))
}

const TABU_TENURE: u64 = 7;

/// Fixed-size local search over weighted uncovered points. Every step makes
/// the single vertex swap with the lowest weighted score, ties broken at
/// random, and a removed point may not return for a few steps. At a local
/// minimum the weights of the points still uncovered grow by one.
fn tabu_repair(
    ev: &Evaluator,
    mut set: Vec<usize>,
    rounds: u64,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<usize>> {
    let t = set.len();
    let w = ev.words;
    let mut member = vec![false; ev.npts];
    for &i in &set {
        member[i] = true;
    }
    let mut weight = vec![1u64; ev.npts];
    let mut tabu_until = vec![0u64; ev.npts];
    let mut base = vec![0u64; w];
    let mut cand = vec![0u64; w];
    let mut others = Vec::with_capacity(t);
    let mut acc = vec![0u64; w];
    if ev.is_cover(&set, &mut acc) {
        return Some(set);
    }
    let mut current = ev.weighted_uncovered(&acc, &weight);
    for step in 1..=rounds {
        let mut best = u64::MAX;
        let mut best_moves = 0u32;
        let mut chosen = (0, 0);
        for out in 0..t {
            others.clear();
            others.extend(
                set.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != out)
                    .map(|(_, &v)| v),
            );
            ev.cover_of(&others, &mut base);
            for p in 0..ev.npts {
                if member[p] {
                    continue;
                }
                cand.copy_from_slice(&base);
                for &o in &others {
                    ev.or_line(p, o, &mut cand);
                }
                if ev.uncovered(&cand) == 0 {
                    set[out] = p;
                    return Some(set);
                }
                if tabu_until[p] > step {
                    continue;
                }
                let score = ev.weighted_uncovered(&cand, &weight);
                if score < best {
                    best = score;
                    best_moves = 1;
                    chosen = (out, p);
                } else if score == best {
                    best_moves += 1;
                    if rng.random_range(0..best_moves) == 0 {
                        chosen = (out, p);
                    }
                }
            }
        }
        if best == u64::MAX {
            return None;
        }
        let (out, p) = chosen;
        let removed = set[out];
        member[removed] = false;
        tabu_until[removed] = step + TABU_TENURE;
        member[p] = true;
        set[out] = p;
        ev.cover_of(&set, &mut acc);
        if best >= current {
            ev.for_each_uncovered(&acc, |i| weight[i] += 1);
        }
        current = ev.weighted_uncovered(&acc, &weight);
    }
    None
}

// Drops vertices, in order, while the rest still covers.
fn delete_redundant(ev: &Evaluator, set: &mut Vec<usize>, acc: &mut [u64]) -> bool {
    let mut shrunk = false;
    let mut i = 0;
    while i < set.len() && set.len() > 2 {
        let v = set.remove(i);
        if ev.is_cover(set, acc) {
            shrunk = true;
        } else {
            set.insert(i, v);
            i += 1;
        }
    }
    shrunk
}

fn improve_indices(
    ev: &Evaluator,
    mut set: Vec<usize>,
    budget: u64,
    rng: &mut ChaCha8Rng,
) -> Vec<usize> {
    let mut acc = vec![0u64; ev.words];
    delete_redundant(ev, &mut set, &mut acc);
    if set.len() >= ev.npts {
        return set;
    }
    for _ in 0..budget {
        let i = rng.random_range(0..set.len());
        let p = rng.random_range(0..ev.npts);
        if set.contains(&p) {
            continue;
        }
        let mut cand = set.clone();
        cand[i] = p;
        if ev.is_cover(&cand, &mut acc) && delete_redundant(ev, &mut cand, &mut acc) {
            set = cand;
        }
    }
    set.sort_unstable();
    set
}

/// Greedy shrinking of a cover: drop redundant vertices, then try `budget`
/// random single-vertex swaps, keeping a swap only when it lets another
/// vertex be dropped. With `budget = 0` only the deletion pass runs.
pub fn improve(s: &Solution, budget: u64, seed: u64) -> Result<Solution> {
    if !is_cover(s)? {
        return Err(Error::InvalidInput("improve needs a covering set".into()));
    }
    let ev = Evaluator::new(s.n());
    let mut rng = stream(seed, 0);
    let set = improve_indices(&ev, ev.indices(s), budget, &mut rng);
    Ok(ev.solution(&set))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBound {
    pub n: u32,
    pub t_ub: usize,
    pub witness: Solution,
    /// Size of the constructive cover the search started from.
    pub seed_size: usize,
}

/// Smallest cover found by all restarts, starting from the best constructive
/// cover for `n`. Only an upper bound on the minimum.
pub fn best_upper_bound_search(n: u32, config: &SearchConfig) -> Result<UpperBound> {
    config.validate()?;
    if n < 2 {
        return Err(Error::LatticeTooSmall { n, min: 2 });
    }
    let mut known = exact_witnesses();
    known.retain(|&k, _| k < n);
    let start = known_chain(n, &known)?.remove(&n).expect("chain covers n");
    let ev = Evaluator::new(n);
    let floor = config.target_t.max(lower_bound(n));
    let start_idx = ev.indices(&start);

    let results: Vec<Vec<usize>> = (0..config.restarts.max(1))
        .into_par_iter()
        .map(|r| {
            let mut rng = stream(config.seed, u64::from(r) + 1);
            let mut current =
                improve_indices(&ev, start_idx.clone(), config.improve_rounds, &mut rng);
            while current.len() > floor {
                let target = current.len() - 1;
                let hit = monte_carlo(&ev, target, config.strategy, config.budget, &mut rng)
                    .or_else(|| {
                        let mut seed_set = current.clone();
                        seed_set.remove(rng.random_range(0..seed_set.len()));
                        tabu_repair(&ev, seed_set, config.improve_rounds, &mut rng)
                    });
                match hit {
                    Some(set) => {
                        current = improve_indices(&ev, set, config.improve_rounds, &mut rng)
                    }
                    None => break,
                }
            }
            current
        })
        .collect();

    let witness = results
        .iter()
        .map(|set| canonical_form(&ev.solution(set)))
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .expect("at least one restart");
    assert!(is_cover(&witness)?, "search produced a non-cover");
    Ok(UpperBound {
        n,
        t_ub: witness.len(),
        witness,
        seed_size: start.len(),
    })
}
