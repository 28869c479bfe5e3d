//! Reductions for a 2-connected graph without interesting chords: a
//! polygon with interior vertices, plus small OR and A/B attachments
//! hanging off polygon edges.

use std::collections::HashSet;

use crate::embedding::{PlaneGraph, Roots, Vid};
use crate::generators::is_sporadic;
use crate::penalty::{penalty, Config};

use super::plan::{cover, del, force, CasePlan, Step};
use super::{CaseId, Ctx, SolveError, Solver};

/// An A/B attachment: `tip` has degree 2 and sits next to `red`; `mid`
/// has degree 3 and sits next to `other`.
#[derive(Clone, Copy, Debug)]
pub(super) struct Ab {
    pub red: Vid,
    pub other: Vid,
    pub tip: Vid,
    pub mid: Vid,
}

#[derive(Clone, Copy, Debug)]
pub(super) struct Or {
    pub a: Vid,
    pub b: Vid,
    pub tip: Vid,
}

pub(super) struct Poly<'g> {
    pub g: &'g PlaneGraph,
    pub cyc: Vec<Vid>,
    pos: Vec<usize>,
    on: Vec<bool>,
    pub ors: Vec<Or>,
    pub abs: Vec<Ab>,
}

impl<'g> Poly<'g> {
    pub fn new(g: &'g PlaneGraph) -> Option<Self> {
        let walk = g.outer_walk();
        let mut seen = HashSet::new();
        if !walk.iter().all(|&x| seen.insert(x)) {
            return None;
        }
        let on = g.boundary_flags();
        let mut attached = vec![false; g.capacity()];
        let mut ors = Vec::new();
        let mut abs = Vec::new();
        for &t in &walk {
            if g.degree(t) != 2 || attached[t as usize] {
                continue;
            }
            let nb = g.neighbors(t);
            let ab = [(nb[0], nb[1]), (nb[1], nb[0])]
                .into_iter()
                .find_map(|(p, r)| {
                    if g.degree(p) != 3 || attached[p as usize] {
                        return None;
                    }
                    let o = *g.neighbors(p).iter().find(|&&y| y != t && y != r)?;
                    (g.adjacent(p, r) && g.adjacent(r, o)).then_some(Ab {
                        red: r,
                        other: o,
                        tip: t,
                        mid: p,
                    })
                });
            if let Some(ab) = ab {
                attached[t as usize] = true;
                attached[ab.mid as usize] = true;
                abs.push(ab);
            } else if g.adjacent(nb[0], nb[1]) {
                attached[t as usize] = true;
                ors.push(Or {
                    a: nb[0],
                    b: nb[1],
                    tip: t,
                });
            }
        }
        let cyc: Vec<Vid> = walk
            .into_iter()
            .filter(|&x| !attached[x as usize])
            .collect();
        if cyc.len() < 3 {
            return None;
        }
        let mut pos = vec![usize::MAX; g.capacity()];
        for (i, &x) in cyc.iter().enumerate() {
            pos[x as usize] = i;
        }
        let m = cyc.len();
        if !(0..m).all(|i| g.adjacent(cyc[i], cyc[(i + 1) % m])) {
            return None;
        }
        Some(Poly {
            g,
            cyc,
            pos,
            on,
            ors,
            abs,
        })
    }

    pub fn m(&self) -> usize {
        self.cyc.len()
    }

    /// Vertex `k` steps from index `i` in direction `o`.
    pub fn at(&self, i: usize, o: isize, k: isize) -> Vid {
        let m = self.m() as isize;
        self.cyc[(((i as isize + o * k) % m + m) % m) as usize]
    }

    pub fn deg(&self, v: Vid) -> usize {
        self.g.degree(v)
    }

    pub fn in_polygon(&self, v: Vid) -> bool {
        self.pos[v as usize] != usize::MAX
    }

    pub fn interior(&self, v: Vid) -> bool {
        !self.on[v as usize]
    }

    pub fn interior_nbrs(&self, v: Vid) -> Vec<Vid> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&y| self.interior(y))
            .collect()
    }

    /// The two polygon neighbours of a polygon vertex.
    pub fn poly_nbrs(&self, v: Vid) -> [Vid; 2] {
        let i = self.pos[v as usize];
        [self.at(i, 1, -1), self.at(i, 1, 1)]
    }

    pub fn other_nbr(&self, v: Vid, not: Vid) -> Vid {
        let [p, q] = self.poly_nbrs(v);
        if p == not {
            q
        } else {
            p
        }
    }

    pub fn has_attachment(&self, a: Vid, b: Vid) -> bool {
        let same = |x: Vid, y: Vid| (x == a && y == b) || (x == b && y == a);
        self.ors.iter().any(|o| same(o.a, o.b)) || self.abs.iter().any(|t| same(t.red, t.other))
    }

    pub fn touches_attachment(&self, v: Vid) -> bool {
        self.ors.iter().any(|o| o.a == v || o.b == v)
            || self.abs.iter().any(|t| t.red == v || t.other == v)
    }

    pub fn or_on(&self, a: Vid, b: Vid) -> Option<Or> {
        self.ors
            .iter()
            .copied()
            .find(|o| (o.a == a && o.b == b) || (o.a == b && o.b == a))
    }

    pub fn roles(&self) -> impl Iterator<Item = (usize, isize)> {
        let m = self.m();
        (0..m).flat_map(|i| [(i, 1), (i, -1)])
    }

    /// Whether `p`, `q` would be a bad 3-pair in G minus `removed`.
    pub fn bad_pair_without(&self, p: Vid, q: Vid, removed: &[Vid]) -> bool {
        let g = self.g;
        let gone = |x: Vid| removed.contains(&x);
        let d = |x: Vid| g.neighbors(x).iter().filter(|&&y| !gone(y)).count();
        if gone(p) || gone(q) || !g.adjacent(p, q) || d(p) != 3 || d(q) != 3 {
            return false;
        }
        g.neighbors(p).iter().copied().filter(|&h| h != q && !gone(h) && g.adjacent(h, q)).any(|h| {
            if d(h) != 4 {
                return false;
            }
            let c = g.neighbors(p).iter().copied().find(|&y| y != q && y != h && !gone(y));
            let e = g.neighbors(q).iter().copied().find(|&y| y != p && y != h && !gone(y));
            matches!((c, e), (Some(c), Some(e)) if c != e && g.adjacent(c, e) && g.adjacent(h, c) && g.adjacent(h, e))
        })
    }

    /// Interior degree-4 neighbours of `w` taken in consecutive pairs
    /// around `w` that form a bad pair once `removed` is gone.
    pub fn wedge_pairs(&self, w: Vid, removed: &[Vid], skip: &[Vid]) -> Vec<(Vid, Vid)> {
        let rot = self.g.neighbors(w);
        let k = rot.len();
        let mut out = Vec::new();
        for i in 0..k {
            let (p, q) = (rot[i], rot[(i + 1) % k]);
            if skip.contains(&p) || skip.contains(&q) || !self.interior(p) || !self.interior(q) {
                continue;
            }
            if self.deg(p) == 4 && self.deg(q) == 4 && self.bad_pair_without(p, q, removed) {
                out.push((p, q));
            }
        }
        out
    }
}

fn plan(case: CaseId, steps: Vec<Step>, add: Vec<Vid>) -> CasePlan {
    CasePlan::new(case, steps, add)
}

fn minus(list: &[Vid], gone: &[Vid]) -> Vec<Vid> {
    list.iter().copied().filter(|x| !gone.contains(x)).collect()
}

fn same_red(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for (i, a) in p.abs.iter().enumerate() {
        for b in &p.abs[i + 1..] {
            if a.red == b.red {
                out.push(
                    plan(CaseId::SameRed, vec![del(&[a.tip, a.mid])], vec![])
                        .named(&[("red", a.red)]),
                );
                out.push(
                    plan(CaseId::SameRed, vec![del(&[b.tip, b.mid])], vec![])
                        .named(&[("red", b.red)]),
                );
            }
        }
    }
    out
}

fn consecutive_red(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for a in &p.abs {
        for b in &p.abs {
            if a.red == b.red
                || !p.in_polygon(a.red)
                || !p.poly_nbrs(a.red).contains(&b.red)
                || a.red > b.red
            {
                continue;
            }
            let (v, w) = (a.red, b.red);
            out.push(
                plan(
                    CaseId::ConsecutiveRed,
                    vec![
                        del(&[a.tip, a.mid, b.tip, b.mid]),
                        Step::DeleteEdge(v, w),
                        force(v, a.other),
                        force(w, b.other),
                    ],
                    vec![],
                )
                .named(&[("v", v), ("w", w)]),
            );
        }
    }
    out
}

fn red_with_or(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for a in &p.abs {
        for o in &p.ors {
            if o.a == a.red || o.b == a.red {
                out.push(
                    plan(CaseId::RedWithOr, vec![del(&[o.tip])], vec![]).named(&[("red", a.red)]),
                );
            }
        }
    }
    out
}

fn red_next(p: &Poly, high: bool) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for a in &p.abs {
        let v = a.red;
        if !p.in_polygon(v) {
            continue;
        }
        for w in p.poly_nbrs(v) {
            if w == a.other || p.has_attachment(v, w) {
                continue;
            }
            let x = p.other_nbr(w, v);
            if high && (p.deg(w) >= 5 || p.has_attachment(w, x)) {
                out.push(
                    plan(CaseId::RedNextToHigh, vec![Step::DeleteEdge(v, w)], vec![])
                        .named(&[("v", v), ("w", w)]),
                );
            }
            if !high && matches!(p.deg(w), 3 | 4) && !p.touches_attachment(w) {
                out.push(
                    plan(CaseId::RedNextToLow, vec![del(&[w])], vec![])
                        .named(&[("v", v), ("w", w)]),
                );
            }
        }
    }
    out
}

fn bad_wheel(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for c in penalty(p.g, Roots::None).configurations {
        let Config::BadWheel { hub, pairs, .. } = c else {
            continue;
        };
        for (a, b) in pairs {
            if !p.in_polygon(a) || !p.in_polygon(b) || !p.poly_nbrs(a).contains(&b) {
                continue;
            }
            let u = p.other_nbr(a, b);
            let x = p.other_nbr(b, a);
            for (t, c) in [(u, x), (x, u)] {
                out.push(
                    plan(
                        CaseId::BadWheel,
                        vec![del(&[a, b]), force(hub, t), cover(&[c])],
                        vec![],
                    )
                    .named(&[("p", hub), ("v", a), ("w", b)]),
                );
            }
        }
    }
    out
}

fn consecutive_ors(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for (i, o1) in p.ors.iter().enumerate() {
        for o2 in &p.ors[i + 1..] {
            let shared = [o1.a, o1.b].into_iter().find(|&x| x == o2.a || x == o2.b);
            let Some(v) = shared else { continue };
            let u = if o1.a == v { o1.b } else { o1.a };
            let w = if o2.a == v { o2.b } else { o2.a };
            for t in [u, w] {
                out.push(
                    plan(
                        CaseId::ConsecutiveOrs,
                        vec![del(&[o1.tip, o2.tip]), force(v, t)],
                        vec![],
                    )
                    .named(&[("v", v)]),
                );
            }
        }
    }
    out
}

fn degree3_triple(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    if p.m() < 4 {
        return out;
    }
    for i in 0..p.m() {
        let r = |k| p.at(i, 1, k);
        let (u, v, w, x, y) = (r(-1), r(0), r(1), r(2), r(3));
        if p.deg(v) != 3 || p.deg(w) != 3 || p.deg(x) != 3 {
            continue;
        }
        for q in p.interior_nbrs(w) {
            if p.g.adjacent(q, v) && p.g.adjacent(q, x) {
                for (t, c) in [(y, u), (u, y)] {
                    out.push(
                        plan(
                            CaseId::Degree3Triple,
                            vec![del(&[v, w, x]), force(q, t), cover(&[c])],
                            vec![],
                        )
                        .named(&[("p", q), ("w", w)]),
                    );
                }
            }
        }
    }
    out
}

fn or_next_to_high(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for o in &p.ors {
        for (v, u) in [(o.a, o.b), (o.b, o.a)] {
            if !p.in_polygon(v) {
                continue;
            }
            let w = p.other_nbr(v, u);
            if p.deg(w) >= 5 && !p.has_attachment(v, w) {
                out.push(
                    plan(CaseId::OrNextToHigh, vec![Step::DeleteEdge(v, w)], vec![])
                        .named(&[("v", v), ("w", w)]),
                );
            }
        }
    }
    out
}

fn two_ors_apart(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for o in &p.ors {
        for (v, u) in [(o.a, o.b), (o.b, o.a)] {
            if !p.in_polygon(v) {
                continue;
            }
            let w = p.other_nbr(v, u);
            let x = p.other_nbr(w, v);
            if p.or_on(w, x).is_some() && !p.has_attachment(v, w) {
                out.push(
                    plan(CaseId::TwoOrsApart, vec![Step::DeleteEdge(v, w)], vec![])
                        .named(&[("v", v), ("w", w)]),
                );
            }
        }
    }
    out
}

fn or_on_triangle(p: &Poly) -> Vec<CasePlan> {
    if p.m() != 3 {
        return vec![];
    }
    p.ors
        .iter()
        .filter_map(|o| {
            let c = p.cyc.iter().copied().find(|&c| c != o.a && c != o.b)?;
            Some(plan(CaseId::OrOnTriangle, vec![del(&[c])], vec![]).named(&[("c", c)]))
        })
        .collect()
}

/// Cases for an OR at polygon edge x-y with tip o.
fn or_cases(p: &Poly, case: CaseId) -> Vec<CasePlan> {
    let mut out = Vec::new();
    let g = p.g;
    for o in &p.ors {
        if !p.in_polygon(o.a) || !p.in_polygon(o.b) {
            continue;
        }
        for (x, y) in [(o.a, o.b), (o.b, o.a)] {
            let w = p.other_nbr(x, y);
            match case {
                CaseId::OrInteriorDeg3 => {
                    for r in p.interior_nbrs(x) {
                        if p.deg(r) == 3 {
                            out.push(
                                plan(
                                    case,
                                    vec![del(&[r, o.tip]), force(x, y), cover(&[w])],
                                    vec![],
                                )
                                .named(&[("x", x), ("r", r)]),
                            );
                        }
                    }
                }
                CaseId::AntipodalWheels => {
                    for q in p.interior_nbrs(x) {
                        let rot = g.neighbors(q);
                        if rot.len() != 4 || !g.adjacent(q, y) {
                            continue;
                        }
                        let ix = rot.iter().position(|&z| z == x).unwrap();
                        if rot[(ix + 2) % 4] != y {
                            continue;
                        }
                        let (r1, r2) = (rot[(ix + 1) % 4], rot[(ix + 3) % 4]);
                        out.push(
                            plan(case, vec![del(&[q]), Step::AddEdge(r1, r2)], vec![])
                                .named(&[("q", q)]),
                        );
                    }
                }
                CaseId::OctahedralPairs => {
                    let pairs = octahedral_pairs(p, x);
                    if pairs.is_empty() {
                        continue;
                    }
                    let mut gone = vec![o.tip, x];
                    for (a, b) in &pairs {
                        gone.extend([*a, *b]);
                    }
                    let rest = minus(g.neighbors(x), &gone);
                    out.push(
                        plan(case, vec![del(&gone), cover(&rest)], vec![x]).named(&[("x", x)]),
                    );
                }
                CaseId::OrNoInterior => {
                    let gone = [o.tip, w, x, y];
                    let rest = minus(g.neighbors(x), &gone);
                    out.push(
                        plan(case, vec![del(&gone), cover(&rest)], vec![x])
                            .named(&[("x", x), ("w", w)]),
                    );
                }
                _ => {}
            }
        }
    }
    out
}

/// Adjacent interior degree-4 neighbours of `x` whose common neighbours
/// are `x` and one other vertex.
fn octahedral_pairs(p: &Poly, x: Vid) -> Vec<(Vid, Vid)> {
    let g = p.g;
    let rot = g.neighbors(x);
    let k = rot.len();
    let mut used = HashSet::new();
    let mut out = Vec::new();
    for i in 0..k {
        let (a, b) = (rot[i], rot[(i + 1) % k]);
        if !p.interior(a) || !p.interior(b) || p.deg(a) != 4 || p.deg(b) != 4 || !g.adjacent(a, b) {
            continue;
        }
        if used.contains(&a) || used.contains(&b) {
            continue;
        }
        let common: Vec<Vid> = g
            .neighbors(a)
            .iter()
            .copied()
            .filter(|&c| g.adjacent(b, c))
            .collect();
        if common.len() == 2 && common.contains(&x) {
            used.extend([a, b]);
            out.push((a, b));
        }
    }
    out
}

fn sporadic_plus_edge(p: &Poly) -> Vec<CasePlan> {
    let g = p.g;
    if !matches!(g.n(), 6 | 10) {
        return vec![];
    }
    let walk = g.outer_walk();
    let k = walk.len();
    let hit = (0..k).any(|i| {
        let mut h = g.clone();
        h.delete_edge(walk[i], walk[(i + 1) % k]);
        is_sporadic(&h).is_some()
    });
    if hit {
        vec![CasePlan::terminal(CaseId::SporadicPlusEdge)]
    } else {
        vec![]
    }
}

/// Outer edges, most promising first: high degree at both ends and a
/// high-degree apex.
pub(super) fn deletable_edges(g: &PlaneGraph, case: CaseId) -> Vec<CasePlan> {
    let walk = g.outer_walk();
    let k = walk.len();
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for i in 0..k {
        let (a, b) = (walk[i], walk[(i + 1) % k]);
        if a == b || !seen.insert(crate::embedding::ordered(a, b)) {
            continue;
        }
        let apex_deg = [g.pred(a, b), g.pred(b, a)]
            .iter()
            .map(|&c| {
                if g.adjacent(a, c) && g.adjacent(b, c) {
                    g.degree(c)
                } else {
                    0
                }
            })
            .max()
            .unwrap_or(0);
        let lo = g.degree(a).min(g.degree(b));
        let score = (lo >= 5 && apex_deg >= 4) as usize * 100 + lo.min(9) * 10 + apex_deg.min(9);
        edges.push((std::cmp::Reverse(score), a, b));
    }
    edges.sort_unstable();
    edges
        .into_iter()
        .map(|(_, a, b)| {
            CasePlan::new(case, vec![Step::DeleteEdge(a, b)], vec![]).named(&[("u", a), ("v", b)])
        })
        .collect()
}

fn small_terminal(p: &Poly, case: CaseId) -> Vec<CasePlan> {
    let hit = match case {
        CaseId::WheelPlusEdge => p.g.n() == 6,
        CaseId::Hexagon => p.m() == 6 && p.g.n() <= 12,
        _ => false,
    };
    if hit {
        vec![CasePlan::terminal(case)]
    } else {
        vec![]
    }
}

fn triangular_boundary(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    if p.m() != 3 || !p.ors.is_empty() || !p.abs.is_empty() {
        return out;
    }
    let g = p.g;
    for &u in &p.cyc {
        if p.deg(u) != 3 {
            continue;
        }
        for &v in &p.cyc {
            if v != u && g.neighbors(u).iter().all(|&y| y == v || g.adjacent(v, y)) {
                out.push(
                    plan(CaseId::TriangularBoundary, vec![del(&[v])], vec![])
                        .named(&[("u", u), ("v", v)]),
                );
            }
        }
    }
    out
}

fn interior_octahedron(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for i in 0..p.m() {
        let w = p.cyc[i];
        if p.deg(w) < 5 {
            continue;
        }
        let [v, x] = p.poly_nbrs(w);
        for (a, b) in p.wedge_pairs(w, &[w], &[v, x]) {
            let gone = [v, w, x, a, b];
            let rest = minus(p.g.neighbors(w), &gone);
            out.push(
                plan(
                    CaseId::InteriorOctahedron,
                    vec![del(&gone), cover(&rest)],
                    vec![w],
                )
                .named(&[("w", w), ("p", a), ("q", b)]),
            );
        }
    }
    out
}

fn deletable_k4(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    for (i, o) in p.roles() {
        let (v, w, x) = (p.at(i, o, 0), p.at(i, o, 1), p.at(i, o, 2));
        if p.deg(v) != 3 || v == x {
            continue;
        }
        for q in p.interior_nbrs(w) {
            if p.deg(q) == 3 {
                let gone = [v, w, x, q];
                let rest = minus(p.g.neighbors(w), &gone);
                out.push(
                    plan(CaseId::DeletableK4, vec![del(&gone), cover(&rest)], vec![w])
                        .named(&[("w", w), ("q", q)]),
                );
            }
        }
    }
    out
}

fn shared_interior(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    let g = p.g;
    for (i, o) in p.roles() {
        let (v, w, x) = (p.at(i, o, 0), p.at(i, o, 1), p.at(i, o, 2));
        if p.deg(v) < 4 || p.deg(w) != 3 || p.deg(x) < 4 {
            continue;
        }
        if p.interior_nbrs(x).iter().any(|&q| p.deg(q) == 3) {
            continue;
        }
        let Some(&q) = p.interior_nbrs(w).first() else {
            continue;
        };
        for &s2 in &p.cyc {
            if s2 == w || p.deg(s2) != 3 || !g.adjacent(s2, q) || g.adjacent(s2, w) {
                continue;
            }
            let [r, t] = p.poly_nbrs(s2);
            out.push(
                plan(
                    CaseId::SharedInteriorVertex,
                    vec![del(&[x, w, s2]), force(q, v), cover(&[r, t])],
                    vec![],
                )
                .named(&[("w", w), ("p", q), ("s", s2)]),
            );
        }
    }
    out
}

fn interior_deg3(p: &Poly, v: Vid, not: Vid) -> Option<Vid> {
    p.interior_nbrs(v)
        .into_iter()
        .find(|&q| q != not && p.deg(q) == 3)
}

fn consecutive_deg3(p: &Poly, case: CaseId) -> Vec<CasePlan> {
    let mut out = Vec::new();
    if p.m() < 5 {
        return out;
    }
    let g = p.g;
    for (i, o) in p.roles() {
        let r = |k| p.at(i, o, k);
        let (t, u, v, w, x, y, z) = (r(-2), r(-1), r(0), r(1), r(2), r(3), r(4));
        if p.deg(u) < 4 || p.deg(v) != 3 || p.deg(w) != 3 || p.deg(x) < 4 {
            continue;
        }
        let Some(q) = p.interior_nbrs(v).into_iter().find(|&q| g.adjacent(q, w)) else {
            continue;
        };
        match case {
            CaseId::ConsecutiveDeg3NoK4 => {
                if interior_deg3(p, x, q).is_none() {
                    out.push(plan(case, vec![del(&[x])], vec![]).named(&[("x", x)]));
                }
            }
            CaseId::ConsecutiveDeg3BothK4 => {
                if let (Some(a), Some(b)) = (interior_deg3(p, u, q), interior_deg3(p, x, q)) {
                    out.push(
                        plan(
                            case,
                            vec![
                                del(&[a, b, t, v, w, y]),
                                force(u, q),
                                force(x, q),
                                cover(&[q]),
                            ],
                            vec![],
                        )
                        .named(&[("u", u), ("x", x), ("p", q)]),
                    );
                }
            }
            CaseId::ConsecutiveDeg3Special if p.deg(z) == 3 => {
                if let Some(&qz) = p.interior_nbrs(z).first() {
                    let [a, b] = p.poly_nbrs(z);
                    out.push(
                        plan(case, vec![del(&[a, z, b, qz])], vec![qz])
                            .named(&[("z", z), ("q", qz)]),
                    );
                }
            }
            _ => {}
        }
    }
    out
}

fn pattern_deg4(p: &Poly, case: CaseId) -> Vec<CasePlan> {
    let mut out = Vec::new();
    if p.m() < 5 {
        return out;
    }
    for (i, o) in p.roles() {
        let r = |k| p.at(i, o, k);
        let (u, v, w, x, y) = (r(-1), r(0), r(1), r(2), r(3));
        if p.deg(w) != 4 || p.deg(x) != 3 || p.deg(y) < 4 {
            continue;
        }
        let hit = match case {
            CaseId::Pattern5Plus4 => p.deg(v) >= 5,
            _ => p.deg(u) == 4 && p.deg(v) == 4,
        };
        if !hit {
            continue;
        }
        if let Some(&q) = p.interior_nbrs(x).first() {
            out.push(
                plan(case, vec![del(&[y, x, w]), force(q, v)], vec![]).named(&[("x", x), ("p", q)]),
            );
        }
    }
    out
}

fn deg3_interior(p: &Poly, case: CaseId) -> Vec<CasePlan> {
    let mut out = Vec::new();
    let g = p.g;
    for (i, o) in p.roles() {
        let (u, v, w) = (p.at(i, o, -1), p.at(i, o, 0), p.at(i, o, 1));
        if p.deg(u) < 4 || p.deg(v) != 3 || p.deg(w) < 4 {
            continue;
        }
        let Some(&q) = p.interior_nbrs(v).first() else {
            continue;
        };
        match case {
            CaseId::Deg3InteriorOctahedron => {
                for (a, b) in p.wedge_pairs(q, &[v, q], &[u, w]) {
                    let gone = [v, q, a, b];
                    let rest = minus(g.neighbors(q), &gone);
                    out.push(plan(case, vec![del(&gone), cover(&rest)], vec![q]).named(&[
                        ("p", q),
                        ("r", a),
                        ("s", b),
                    ]));
                }
            }
            CaseId::Deg3InteriorK4 => {
                if interior_deg3(p, w, q).is_some() {
                    continue;
                }
                for r in g
                    .neighbors(q)
                    .iter()
                    .copied()
                    .filter(|&r| p.interior(r) && p.deg(r) == 3)
                {
                    let rest = minus(g.neighbors(r), &[q, w, v]);
                    out.push(
                        plan(
                            case,
                            vec![del(&[w, v, r]), force(q, u), cover(&rest)],
                            vec![],
                        )
                        .named(&[("p", q), ("r", r)]),
                    );
                }
            }
            _ => {}
        }
    }
    out
}

fn delete_deg3_and_nbr(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    if p.m() < 5 {
        return out;
    }
    for (i, o) in p.roles() {
        let r = |k| p.at(i, o, k);
        let (u, v, w, x, y) = (r(-1), r(0), r(1), r(2), r(3));
        if p.deg(u) < 4 || p.deg(v) != 3 || p.deg(w) < 4 || p.deg(x) != 3 || p.deg(y) < 4 {
            continue;
        }
        let (Some(&a), Some(&b)) = (p.interior_nbrs(v).first(), p.interior_nbrs(x).first()) else {
            continue;
        };
        if a == b {
            continue;
        }
        out.push(
            plan(
                CaseId::DeleteDeg3AndNeighbor,
                vec![
                    del(&[v, a, x]),
                    Step::CoverOtherNeighbor { of: w, not: b },
                    force(w, b),
                ],
                vec![],
            )
            .named(&[("v", v), ("p", a), ("x", x), ("q", b)]),
        );
    }
    out
}

fn big_polygon(p: &Poly, case: CaseId) -> Vec<CasePlan> {
    let mut out = Vec::new();
    let g = p.g;
    let m = p.m();
    let fits = match case {
        CaseId::Pentagon => m == 5,
        CaseId::BigPolygonNoCut | CaseId::BigPolygonWheel => m >= 6,
        _ => false,
    };
    if !fits {
        return out;
    }
    for (i, o) in p.roles() {
        let r = |k| p.at(i, o, k);
        let (t, u, v, w, x, y, z) = (r(-2), r(-1), r(0), r(1), r(2), r(3), r(4));
        if p.deg(v) != 3 || p.deg(w) != 4 || p.deg(x) != 4 || p.deg(y) != 3 {
            continue;
        }
        match case {
            CaseId::Pentagon => out.push(
                plan(case, vec![del(&[u]), Step::DeleteEdge(w, x)], vec![]).named(&[("u", u)]),
            ),
            CaseId::BigPolygonNoCut => {
                out.push(
                    plan(case, vec![del(&[u, z]), Step::DeleteEdge(w, x)], vec![])
                        .named(&[("u", u), ("z", z)]),
                );
            }
            _ => {
                let Some(&q) = p.interior_nbrs(v).first() else {
                    continue;
                };
                for l in g
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&l| p.deg(l) == 4 && g.adjacent(l, z))
                {
                    let rot = g.neighbors(l);
                    let iu = rot.iter().position(|&c| c == u).unwrap();
                    if rot[(iu + 2) % 4] != z {
                        continue;
                    }
                    let (j, k) = (rot[(iu + 1) % 4], rot[(iu + 3) % 4]);
                    out.push(
                        plan(
                            case,
                            vec![del(&[l]), Step::AddEdge(j, k), del(&[v, t]), force(u, q)],
                            vec![],
                        )
                        .named(&[("l", l)]),
                    );
                }
            }
        }
    }
    out
}

fn square_polygon(p: &Poly) -> Vec<CasePlan> {
    let mut out = Vec::new();
    if p.m() != 4 {
        return out;
    }
    for (i, o) in p.roles() {
        let r = |k| p.at(i, o, k);
        let (u, v, w, x) = (r(-1), r(0), r(1), r(2));
        if p.deg(u) < 5 || p.deg(v) != 3 || p.deg(w) < 4 || p.deg(x) != 3 {
            continue;
        }
        let (Some(&a), Some(&b)) = (p.interior_nbrs(v).first(), p.interior_nbrs(x).first()) else {
            continue;
        };
        out.push(
            plan(
                CaseId::SquarePolygon,
                vec![del(&[v, a, x]), force(w, b)],
                vec![],
            )
            .named(&[("w", w), ("q", b)]),
        );
    }
    out
}

const ORDER: [CaseId; 35] = [
    CaseId::SameRed,
    CaseId::ConsecutiveRed,
    CaseId::RedWithOr,
    CaseId::RedNextToHigh,
    CaseId::RedNextToLow,
    CaseId::BadWheel,
    CaseId::ConsecutiveOrs,
    CaseId::Degree3Triple,
    CaseId::OrNextToHigh,
    CaseId::TwoOrsApart,
    CaseId::OrOnTriangle,
    CaseId::OrInteriorDeg3,
    CaseId::AntipodalWheels,
    CaseId::OctahedralPairs,
    CaseId::OrNoInterior,
    CaseId::SporadicPlusEdge,
    CaseId::DeletableEdge,
    CaseId::WheelPlusEdge,
    CaseId::TriangularBoundary,
    CaseId::InteriorOctahedron,
    CaseId::DeletableK4,
    CaseId::SharedInteriorVertex,
    CaseId::ConsecutiveDeg3NoK4,
    CaseId::ConsecutiveDeg3BothK4,
    CaseId::ConsecutiveDeg3Special,
    CaseId::Pattern5Plus4,
    CaseId::Pattern444,
    CaseId::Deg3InteriorOctahedron,
    CaseId::Deg3InteriorK4,
    CaseId::DeleteDeg3AndNeighbor,
    CaseId::BigPolygonNoCut,
    CaseId::BigPolygonWheel,
    CaseId::Pentagon,
    CaseId::Hexagon,
    CaseId::SquarePolygon,
];

/// Candidate plans of one case, in scan order.
pub(super) fn plans_for(p: &Poly, case: CaseId) -> Vec<CasePlan> {
    match case {
        CaseId::SameRed => same_red(p),
        CaseId::ConsecutiveRed => consecutive_red(p),
        CaseId::RedWithOr => red_with_or(p),
        CaseId::RedNextToHigh => red_next(p, true),
        CaseId::RedNextToLow => red_next(p, false),
        CaseId::BadWheel => bad_wheel(p),
        CaseId::ConsecutiveOrs => consecutive_ors(p),
        CaseId::Degree3Triple => degree3_triple(p),
        CaseId::OrNextToHigh => or_next_to_high(p),
        CaseId::TwoOrsApart => two_ors_apart(p),
        CaseId::OrOnTriangle => or_on_triangle(p),
        CaseId::OrInteriorDeg3
        | CaseId::AntipodalWheels
        | CaseId::OctahedralPairs
        | CaseId::OrNoInterior => or_cases(p, case),
        CaseId::SporadicPlusEdge => sporadic_plus_edge(p),
        CaseId::DeletableEdge => deletable_edges(p.g, case),
        CaseId::WheelPlusEdge | CaseId::Hexagon => small_terminal(p, case),
        CaseId::TriangularBoundary => triangular_boundary(p),
        CaseId::InteriorOctahedron => interior_octahedron(p),
        CaseId::DeletableK4 => deletable_k4(p),
        CaseId::SharedInteriorVertex => shared_interior(p),
        CaseId::ConsecutiveDeg3NoK4
        | CaseId::ConsecutiveDeg3BothK4
        | CaseId::ConsecutiveDeg3Special => consecutive_deg3(p, case),
        CaseId::Pattern5Plus4 | CaseId::Pattern444 => pattern_deg4(p, case),
        CaseId::Deg3InteriorOctahedron | CaseId::Deg3InteriorK4 => deg3_interior(p, case),
        CaseId::DeleteDeg3AndNeighbor => delete_deg3_and_nbr(p),
        CaseId::BigPolygonNoCut | CaseId::BigPolygonWheel | CaseId::Pentagon => {
            big_polygon(p, case)
        }
        CaseId::SquarePolygon => square_polygon(p),
        _ => vec![],
    }
}

/// Every polygon case in registry order.
pub fn registry() -> &'static [CaseId] {
    &ORDER
}

pub(super) fn reduce(
    sv: &mut Solver,
    g: &PlaneGraph,
    limit: usize,
) -> Result<Option<Vec<Vid>>, SolveError> {
    let Some(p) = Poly::new(g) else {
        return Ok(None);
    };
    let ctx = Ctx::of(g, limit);
    let mut doubtful = Vec::new();
    for &case in registry() {
        let plans = plans_for(&p, case);
        if let Some(s) = sv.try_plans(g, &ctx, plans, &mut doubtful)? {
            return Ok(Some(s));
        }
    }
    sv.try_doubtful(g, &ctx, doubtful)
}
