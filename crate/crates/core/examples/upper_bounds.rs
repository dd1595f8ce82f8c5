// Usage: upper_bounds [lo hi [budget improve_rounds]]
use std::time::Instant;

use lattice_cover::heuristic::{best_upper_bound_search, SearchConfig};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().unwrap())
        .collect();
    let (lo, hi) = (
        args.first().copied().unwrap_or(7) as u32,
        args.get(1).copied().unwrap_or(11) as u32,
    );
    let mut cfg = SearchConfig::default();
    if let Some(&b) = args.get(2) {
        cfg.budget = b;
    }
    if let Some(&r) = args.get(3) {
        cfg.improve_rounds = r;
    }
    let total = Instant::now();
    for n in lo..=hi {
        let start = Instant::now();
        let r = best_upper_bound_search(n, &cfg).unwrap();
        println!(
            "n={n} t<={} (from {}) {} [{:.1?}]",
            r.t_ub,
            r.seed_size,
            r.witness,
            start.elapsed()
        );
    }
    println!("total {:.1?}", total.elapsed());
}
