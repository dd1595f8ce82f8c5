//! SVG drawings: grey squares for lattice vertices, red squares for the
//! sublattice, and the spanned lines clipped to a slightly enlarged box.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::geometry::{points_on_line, spanned_lines, LatticePoint, LineKey, Solution};

const GREY: &str = "#b0b0b0";
const RED: &str = "#cc0000";
const LINE_COLOR: &str = "#404040";
// Lines run this far (in lattice units) past the outermost vertices.
const OVERHANG: f64 = 0.4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    pub show_all_lines: bool,
    /// Pixels per lattice spacing.
    pub scale: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            show_all_lines: true,
            scale: 24.0,
        }
    }
}

/// Greedy choice of spanned lines that still covers every covered vertex:
/// repeatedly take the line with the most not-yet-covered points, ties to
/// the smaller key.
pub fn coverage_line_subset(s: &Solution) -> Vec<LineKey> {
    let Ok(lines) = spanned_lines(s) else {
        return Vec::new();
    };
    let point_sets: Vec<Vec<LatticePoint>> =
        lines.iter().map(|l| points_on_line(l, s.n())).collect();
    let mut covered = BTreeSet::new();
    let mut chosen = Vec::new();
    let mut used = vec![false; lines.len()];
    loop {
        let best = (0..lines.len())
            .filter(|&i| !used[i])
            .map(|i| {
                (
                    point_sets[i]
                        .iter()
                        .filter(|p| !covered.contains(*p))
                        .count(),
                    i,
                )
            })
            .filter(|&(gain, _)| gain > 0)
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let Some((_, i)) = best else { break };
        used[i] = true;
        covered.extend(point_sets[i].iter().copied());
        chosen.push(lines[i]);
    }
    chosen.sort_unstable();
    chosen
}

// Clip a*x + b*y = c to the square [lo, hi]^2.
fn clip(line: &LineKey, lo: f64, hi: f64) -> Option<((f64, f64), (f64, f64))> {
    let (a, b, c) = (line.a as f64, line.b as f64, line.c as f64);
    let (dx, dy) = (-b, a);
    let norm = a * a + b * b;
    let (px, py) = (a * c / norm, b * c / norm);
    let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
    for (p, d) in [(px, dx), (py, dy)] {
        if d == 0.0 {
            if p < lo || p > hi {
                return None;
            }
        } else {
            let (ta, tb) = ((lo - p) / d, (hi - p) / d);
            t0 = t0.max(ta.min(tb));
            t1 = t1.min(ta.max(tb));
        }
    }
    (t0 < t1).then_some(((px + t0 * dx, py + t0 * dy), (px + t1 * dx, py + t1 * dy)))
}

pub fn render_svg(s: &Solution, options: &RenderOptions) -> String {
    let n = s.n();
    let scale = options.scale;
    let margin = scale;
    let size = 2.0 * margin + f64::from(n) * scale;
    let sx = |x: f64| margin + x * scale;
    let sy = |y: f64| margin + (f64::from(n) - y) * scale;
    let square = 0.3 * scale;

    let lines = if options.show_all_lines {
        spanned_lines(s).unwrap_or_default()
    } else {
        coverage_line_subset(s)
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size:.2}\" height=\"{size:.2}\" viewBox=\"0 0 {size:.2} {size:.2}\">"
    );
    let _ = writeln!(out, "<title>n={} t={}</title>", n, s.len());
    let _ = writeln!(
        out,
        "<g id=\"lines\" stroke=\"{LINE_COLOR}\" stroke-width=\"{:.2}\">",
        (scale / 24.0).max(0.5)
    );
    for line in &lines {
        if let Some(((x0, y0), (x1, y1))) = clip(line, -OVERHANG, f64::from(n) + OVERHANG) {
            let _ = writeln!(
                out,
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>",
                sx(x0),
                sy(y0),
                sx(x1),
                sy(y1)
            );
        }
    }
    out.push_str("</g>\n");
    let mut squares = |id: &str, color: &str, pts: &mut dyn Iterator<Item = LatticePoint>| {
        let _ = writeln!(out, "<g id=\"{id}\" fill=\"{color}\">");
        for p in pts {
            let _ = writeln!(
                out,
                "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{square:.2}\" height=\"{square:.2}\"/>",
                sx(f64::from(p.x)) - square / 2.0,
                sy(f64::from(p.y)) - square / 2.0
            );
        }
        out.push_str("</g>\n");
    };
    squares(
        "lattice",
        GREY,
        &mut (0..=n).flat_map(|x| (0..=n).map(move |y| LatticePoint::new(x, y))),
    );
    squares("sublattice", RED, &mut s.vertices().iter().copied());
    out.push_str("</svg>\n");
    out
}
