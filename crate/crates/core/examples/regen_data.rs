//! Regenerates `data/exact_witnesses.txt` and `data/tiles.txt`.
//!
//! cargo run --release -p lattice-cover --example regen_data

use std::fs;
use std::time::Instant;

use lattice_cover::bounds::stack_tiles;
use lattice_cover::exact::{covers_with_forced, t_min};
use lattice_cover::io::{format_solution_line, SolutionRecord};
use lattice_cover::{LatticePoint, Solution};

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

    let mut witnesses = String::from(
        "# One minimal cover per lattice (first canonical class of an exhaustive search).\n",
    );
    for n in 1..=6 {
        let start = Instant::now();
        let r = t_min(n).expect("within cap");
        eprintln!(
            "n={n}: t_min={} classes={} examined={} ({:.2?})",
            r.t_min,
            r.classes.len(),
            r.subsets_examined,
            start.elapsed()
        );
        let rec =
            SolutionRecord::from_solution(&r.classes[0].representative, format!("exact n={n}"));
        witnesses.push_str(&format_solution_line(&rec));
        witnesses.push('\n');
    }
    fs::write(format!("{dir}/exact_witnesses.txt"), witnesses).unwrap();

    // Corner-anchored 6-vertex covers of the 4-lattice, picked by how many
    // vertices a 2x2 stack of them needs: 17 when no edge vertex is shared
    // with a neighbour, 15 when an opposite pair of edge midpoints is.
    let corners = Solution::corners(4);
    let covers = covers_with_forced(4, 6, corners.vertices()).unwrap();
    let stacked = |s: &Solution| stack_tiles(s, 2).unwrap().len();
    let interstitial = covers
        .iter()
        .find(|s| stacked(s) == 17)
        .expect("tile for 17");
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
        .expect("tile for 15");
    eprintln!("{} corner-anchored tiles", covers.len());
    let mut tiles =
        String::from("# Corner-anchored 6-vertex covers of the 4-lattice used for stacking.\n");
    for (s, name) in [(interstitial, "interstitial"), (&shared, "shared-edge")] {
        tiles.push_str(&format_solution_line(&SolutionRecord::from_solution(
            s, name,
        )));
        tiles.push('\n');
    }
    fs::write(format!("{dir}/tiles.txt"), tiles).unwrap();
}
