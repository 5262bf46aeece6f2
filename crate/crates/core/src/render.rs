//! Static SVG drawing of a net: unit circle, labelled vertices, straight
//! chords, the distinguished vertex highlighted, and optionally the marked
//! points `r`, `s` with the arc `(r, s)` shaded.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::diagram::ChordDiagram;
use crate::error::Result;
use crate::trajectory::check_k;

const SIZE: f64 = 400.0;
const RADIUS: f64 = 150.0;

// `s` sits at angle 0 and position `p` half a step before `p`'s index, so the
// vertices fill the circle counterclockwise starting just past `s`.
fn angle(n: usize, position: f64) -> f64 {
    TAU * (position - 0.5) / n as f64
}

fn point(theta: f64, radius: f64) -> (f64, f64) {
    let c = SIZE / 2.0;
    // screen y grows downward
    (c + radius * theta.cos(), c - radius * theta.sin())
}

/// SVG document for `g`. With `k`, the marker `r` is drawn between positions
/// `2d-2-k` and `2d-1-k`, and the arc from `r` to `s` is shaded.
pub fn render_svg(g: &ChordDiagram, k: Option<usize>) -> Result<String> {
    if let Some(k) = k {
        check_k(g.degree(), k)?;
    }
    let n = g.len();
    let c = SIZE / 2.0;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"  <title>net {g}</title>"#);
    let _ = writeln!(svg, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    if let Some(k) = k {
        let r_theta = angle(n, (n - k) as f64 + 0.5);
        let (x0, y0) = point(r_theta, RADIUS);
        let (x1, y1) = point(TAU, RADIUS);
        let large = if TAU - r_theta > TAU / 2.0 { 1 } else { 0 };
        let _ = writeln!(
            svg,
            r#"  <path class="arc-rs" d="M {c:.2} {c:.2} L {x0:.2} {y0:.2} A {RADIUS} {RADIUS} 0 {large} 0 {x1:.2} {y1:.2} Z" fill="moccasin" stroke="none"/>"#
        );
        for (label, theta) in [("r", r_theta), ("s", 0.0)] {
            let (x, y) = point(theta, RADIUS);
            let (lx, ly) = point(theta, RADIUS + 32.0);
            let _ = writeln!(
                svg,
                r#"  <rect class="marker" x="{:.2}" y="{:.2}" width="8" height="8" fill="black"/>"#,
                x - 4.0,
                y - 4.0
            );
            let _ = writeln!(
                svg,
                r#"  <text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="16" font-style="italic" text-anchor="middle" dominant-baseline="middle">{label}</text>"#
            );
        }
    }

    let _ = writeln!(
        svg,
        r#"  <circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1.5"/>"#
    );
    for (a, b) in g.pairs() {
        let (x0, y0) = point(angle(n, a as f64), RADIUS);
        let (x1, y1) = point(angle(n, b as f64), RADIUS);
        let _ = writeln!(
            svg,
            r#"  <line class="chord" data-ends="{a}-{b}" x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}" stroke="steelblue" stroke-width="2"/>"#
        );
    }
    for p in 1..=n {
        let theta = angle(n, p as f64);
        let (x, y) = point(theta, RADIUS);
        let (lx, ly) = point(theta, RADIUS + 16.0);
        let (radius, fill) = if p == 1 {
            (6.5, "crimson")
        } else {
            (4.0, "black")
        };
        let _ = writeln!(
            svg,
            r#"  <circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="{radius}" fill="{fill}"/>"#
        );
        let _ = writeln!(
            svg,
            r#"  <text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="13" text-anchor="middle" dominant-baseline="middle">{p}</text>"#
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
