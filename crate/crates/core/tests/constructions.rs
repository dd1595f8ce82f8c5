mod common;

use lattice_cover::bounds::{
    block_tile, bounds_report, central_star, central_star_bound, corner_extend, exact_witnesses,
    known_chain, quad_tile, stack_tiles, symmetric_design, taper_extend, totient_summatory,
    totients, Method, TileKind,
};
use lattice_cover::exact::{covers_with_forced, t_min};
use lattice_cover::{is_cover, LatticePoint, Solution};

const MAX_N: u32 = 60;
// Above this the library check stands in for the quadratic oracle.
const ORACLE_N: u32 = 16;

fn assert_cover(s: &Solution, what: &str) {
    let ok = if s.n() <= ORACLE_N {
        common::is_cover(s.n(), &common::to_pts(s))
    } else {
        is_cover(s).unwrap()
    };
    assert!(ok, "{what}: n={} not covered", s.n());
}

#[test]
fn symmetric_design_has_2n_vertices() {
    for n in 2..=MAX_N {
        let s = symmetric_design(n).unwrap();
        assert_eq!(s.len(), 2 * n as usize, "n={n}");
        assert_cover(&s, "symmetric design");
    }
}

#[test]
fn corner_and_taper_chains_from_exact_witnesses() {
    let exact = exact_witnesses();
    for (&base, w) in &exact {
        let mut s = w.clone();
        while s.n() + 2 <= MAX_N {
            let next = corner_extend(&s).unwrap();
            assert_eq!(next.len(), s.len() + 4);
            assert_cover(&next, "corner chain");
            if let Some(e) = exact.get(&next.n()) {
                assert!(
                    next.len() >= e.len(),
                    "corner chain from {base} beats exact at n={}",
                    next.n()
                );
            }
            s = next;
        }
        let mut s = w.clone();
        while s.n() < 20 {
            let next = taper_extend(&s).unwrap();
            assert_eq!(next.len(), s.len() + 3);
            assert_cover(&next, "taper chain");
            if let Some(e) = exact.get(&next.n()) {
                assert!(next.len() >= e.len());
            }
            s = next;
        }
    }
}

#[test]
fn tilings_from_best_known_blocks() {
    let known = known_chain(MAX_N, &exact_witnesses()).unwrap();
    for n in 2..=MAX_N {
        let half = &known[&(n / 2).max(1)];
        if n / 2 >= 1 {
            let q = quad_tile(n, half).unwrap();
            assert!(q.len() <= 4 * half.len(), "n={n}");
            assert_cover(&q, "quad tiling");
        }
        for k in 3..=5 {
            let m = (n + 1).div_ceil(k) - 1;
            if m == 0 || m >= n {
                continue;
            }
            let t = block_tile(n, k, &known[&m]).unwrap();
            assert!(t.len() <= (k * k) as usize * known[&m].len());
            assert_cover(&t, "block tiling");
        }
    }
}

#[test]
fn stacked_tiles_have_the_promised_sizes() {
    let corners = TileKind::Corners3.tile();
    for i in 1..=10 {
        let s = stack_tiles(&corners, i).unwrap();
        assert_eq!(s.len(), ((i + 1) * (i + 1)) as usize);
        assert_cover(&s, "corner stack");
    }
    for kind in TileKind::ALL {
        let tile = kind.tile();
        for i in 1..=MAX_N / tile.n() {
            let s = stack_tiles(&tile, i).unwrap();
            assert_eq!(s.len(), kind.stacked_size(i), "{kind:?} i={i}");
            assert_cover(&s, "tile stack");
        }
    }
    let no_corner = Solution::new(
        3,
        vec![(0, 0).into(), (0, 3).into(), (3, 0).into(), (1, 1).into()],
    )
    .unwrap();
    assert!(stack_tiles(&no_corner, 2).is_err());
}

#[test]
fn central_star_respects_totient_bound() {
    for n in 2..=MAX_N {
        let half = u64::from(n.div_ceil(2));
        let oracle_bound = 1 + 4 * (1..=half).map(common::phi).sum::<u64>();
        assert_eq!(central_star_bound(n), oracle_bound, "n={n}");
        let s = central_star(n).unwrap();
        assert!(
            s.len() as u64 <= oracle_bound,
            "n={n}: {} > {oracle_bound}",
            s.len()
        );
        assert_cover(&s, "central star");
    }
}

#[test]
fn totients_match_trial_division() {
    let phi = totients(500);
    for k in 1..=500u64 {
        assert_eq!(phi[k as usize], common::phi(k), "phi({k})");
    }
    assert_eq!(totient_summatory(5), 10);
    assert_eq!(totient_summatory(1), 1);
}

#[test]
fn reports_never_beat_exact_minima() {
    let exact = exact_witnesses();
    let mut smaller = exact.clone();
    for n in 2..=6 {
        smaller.remove(&n);
        let r = bounds_report(n, &smaller).unwrap();
        let t = t_min(n).unwrap().t_min;
        for e in &r.entries {
            assert!(e.bound >= t, "n={n} {} = {} < {t}", e.method, e.bound);
            assert_cover(e.witness.as_ref().unwrap(), "report entry");
        }
        smaller.insert(n, exact[&n].clone());
    }
    let r = bounds_report(6, &exact).unwrap();
    let bound = |m: Method| r.entries.iter().find(|e| e.method == m).unwrap().bound;
    assert_eq!(bound(Method::Taper), 9);
    assert_eq!(bound(Method::CornerExtension), 10);
    assert_eq!(bound(Method::SymmetricDesign), 12);
    assert_eq!(
        bound(Method::StackedTiles {
            tile: TileKind::Corners3
        }),
        9
    );
}

#[test]
fn shipped_tiles_are_rederived_by_constrained_search() {
    let corners = Solution::corners(4);
    let stacked = |s: &Solution| stack_tiles(s, 2).unwrap().len();
    let covers = covers_with_forced(4, 6, corners.vertices()).unwrap();
    assert!(!covers.is_empty());
    let interstitial = covers.iter().find(|s| stacked(s) == 17).unwrap();
    assert_eq!(interstitial, &TileKind::Interstitial4.tile());

    let forced: Vec<LatticePoint> = corners
        .vertices()
        .iter()
        .copied()
        .chain([LatticePoint::new(2, 0)])
        .collect();
    let shared = covers_with_forced(4, 6, &forced)
        .unwrap()
        .into_iter()
        .find(|s| stacked(s) == 15)
        .unwrap();
    assert_eq!(shared, TileKind::SharedEdge4.tile());
    for s in &covers {
        assert!(common::is_cover(4, &common::to_pts(s)));
    }
}
