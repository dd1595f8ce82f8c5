mod common;

use std::collections::BTreeSet;

use lattice_cover::bounds::exact_witnesses;
use lattice_cover::exact::{covers_with_forced, lower_bound, search, t_min, ExactConfig};
use lattice_cover::{is_cover, LatticePoint};

fn class_set(n: u32, t: usize, config: &ExactConfig) -> BTreeSet<Vec<common::Pt>> {
    search(n, t, config)
        .unwrap()
        .classes
        .iter()
        .map(|c| common::to_pts(&c.representative))
        .collect()
}

#[test]
fn pruned_search_equals_enumeration_for_small_lattices() {
    for n in 1..=3 {
        let side = (n as usize + 1).pow(2);
        for t in 2..=side.min(7) {
            let naive = common::naive_classes(n, t);
            assert_eq!(
                class_set(n, t, &ExactConfig::default()),
                naive,
                "n={n} t={t}"
            );
            let unpruned = ExactConfig {
                symmetry_pruning: false,
                ..ExactConfig::default()
            };
            assert_eq!(class_set(n, t, &unpruned), naive, "n={n} t={t} unpruned");
        }
    }
}

#[test]
fn n4_classes_equal_enumeration() {
    let naive = common::naive_classes(4, 6);
    assert_eq!(naive.len(), 59);
    assert_eq!(class_set(4, 6, &ExactConfig::default()), naive);
    assert!(common::naive_classes(4, 5).is_empty());
}

#[test]
fn t_min_matches_enumeration() {
    for n in 1..=4 {
        assert_eq!(t_min(n).unwrap().t_min, common::naive_t_min(n), "n={n}");
    }
}

#[test]
fn lower_bound_is_the_counting_bound() {
    for n in 1..200u32 {
        let need = 2 * (n as usize + 1);
        let t = lower_bound(n);
        assert!(t * (t - 1) >= need && (t - 1) * (t - 2) < need, "n={n}");
    }
}

#[test]
fn orbit_sizes_agree_with_oracle() {
    for c in search(4, 6, &ExactConfig::default()).unwrap().classes {
        let pts = common::to_pts(&c.representative);
        assert_eq!(c.orbit_size, common::orbit(4, &pts));
        assert!(common::is_cover(4, &pts));
    }
}

#[test]
fn forced_search_returns_every_cover_with_the_forced_points() {
    let forced = [LatticePoint::new(0, 0), LatticePoint::new(3, 3)];
    let got: BTreeSet<Vec<common::Pt>> = covers_with_forced(3, 4, &forced)
        .unwrap()
        .iter()
        .map(common::to_pts)
        .collect();
    let expect: BTreeSet<Vec<common::Pt>> = {
        use itertools::Itertools;
        common::lattice(3)
            .into_iter()
            .combinations(4)
            .filter(|s| s.contains(&(0, 0)) && s.contains(&(3, 3)) && common::is_cover(3, s))
            .collect()
    };
    assert_eq!(got, expect);
}

#[test]
fn shipped_exact_witnesses_are_rederived() {
    let shipped = exact_witnesses();
    assert_eq!(
        shipped.keys().copied().collect::<Vec<_>>(),
        (1..=6).collect::<Vec<_>>()
    );
    for (&n, w) in &shipped {
        let r = t_min(n).unwrap();
        assert_eq!(w.len(), r.t_min, "n={n}");
        assert_eq!(w, &r.classes[0].representative, "n={n}");
        assert!(is_cover(w).unwrap());
    }
}
