//! Straight-line drawing: outer walk on a regular polygon, every other
//! vertex at the average of its neighbours (Tutte's barycentric layout).

use std::collections::HashSet;
use std::fmt::Write;

use crate::embedding::{PlaneGraph, Vid};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

/// Coordinates indexed by vertex id; dead ids get `(0, 0)`.
pub fn tutte_layout(g: &PlaneGraph) -> Vec<(f64, f64)> {
    let mut pos = vec![(0.0, 0.0); g.capacity()];
    let mut fixed = vec![false; g.capacity()];
    let mut ring = Vec::new();
    let mut seen = HashSet::new();
    for v in g.outer_walk() {
        if seen.insert(v) {
            ring.push(v);
        }
    }
    let k = ring.len() as f64;
    let r = SIZE / 2.0 - MARGIN;
    for (i, &v) in ring.iter().enumerate() {
        // clockwise on screen, since the y axis points down
        let a = std::f64::consts::TAU * i as f64 / k - std::f64::consts::FRAC_PI_2;
        pos[v as usize] = (SIZE / 2.0 + r * a.cos(), SIZE / 2.0 - r * a.sin());
        fixed[v as usize] = true;
    }
    let inner: Vec<Vid> = g.vertices().filter(|&v| !fixed[v as usize]).collect();
    for &v in &inner {
        pos[v as usize] = (SIZE / 2.0, SIZE / 2.0);
    }
    // Gauss-Seidel on the barycentric equations
    for _ in 0..20_000 {
        let mut delta: f64 = 0.0;
        for &v in &inner {
            let nb = g.neighbors(v);
            let (sx, sy) = nb.iter().fold((0.0, 0.0), |(x, y), &w| {
                (x + pos[w as usize].0, y + pos[w as usize].1)
            });
            let p = (sx / nb.len() as f64, sy / nb.len() as f64);
            let old = pos[v as usize];
            delta = delta.max((p.0 - old.0).abs() + (p.1 - old.1).abs());
            pos[v as usize] = p;
        }
        if delta < 1e-9 {
            break;
        }
    }
    pos
}

pub fn export_svg(g: &PlaneGraph, highlight: &[Vid]) -> String {
    let pos = tutte_layout(g);
    let mut s = String::new();
    writeln!(s, r##"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"##).unwrap();
    writeln!(s, r##"<g stroke="#555" stroke-width="1.5">"##).unwrap();
    for (a, b) in g.edges() {
        let (p, q) = (pos[a as usize], pos[b as usize]);
        writeln!(
            s,
            r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"##,
            p.0, p.1, q.0, q.1
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(
        s,
        r##"<g font-family="sans-serif" font-size="11" text-anchor="middle">"##
    )
    .unwrap();
    for v in g.vertices() {
        let p = pos[v as usize];
        let (fill, rad) = if highlight.contains(&v) {
            ("#d33", 9)
        } else {
            ("#fff", 7)
        };
        writeln!(
            s,
            r##"<circle cx="{:.3}" cy="{:.3}" r="{rad}" fill="{fill}" stroke="#222"/>"##,
            p.0, p.1
        )
        .unwrap();
        writeln!(
            s,
            r##"<text x="{:.3}" y="{:.3}">{v}</text>"##,
            p.0,
            p.1 - 11.0
        )
        .unwrap();
    }
    writeln!(s, "</g>\n</svg>").unwrap();
    s
}
