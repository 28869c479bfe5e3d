use std::collections::HashSet;

use thiserror::Error;

use crate::error::EmbeddingError;

use super::blocks::{blocks_of, BlockCutTree};
use super::graph::{ordered, Dart, PlaneGraph, Vid};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Connected, bounded faces triangles, minimum degree two.
    Skeletal,
    /// Skeletal and 2-connected.
    NearTriangulation,
    /// Every face, outer included, is a triangle.
    Triangulation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Roots {
    None,
    Vertex(Vid),
    /// Ordered: the first root is `u`, the second `v`.
    Edge(Vid, Vid),
}

impl Roots {
    pub fn contains(&self, x: Vid) -> bool {
        match *self {
            Roots::None => false,
            Roots::Vertex(u) => u == x,
            Roots::Edge(u, v) => u == x || v == x,
        }
    }

    pub fn list(&self) -> Vec<Vid> {
        match *self {
            Roots::None => vec![],
            Roots::Vertex(u) => vec![u],
            Roots::Edge(u, v) => vec![u, v],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Disconnected,
    TooSmall,
    NonTriangularFace(Vec<Vid>),
    LowDegree { vertex: Vid, degree: usize },
    CutVertex(Vid),
    OuterFaceNotTriangle(usize),
    RootNotOnOuterFace(Vid),
    RootEdgeNotOnOuterFace(Vid, Vid),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph fails validation: {violations:?}")]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

/// A graph that passed [`validate`], with its outer walk cached.
#[derive(Clone, Debug)]
pub struct SkeletalView {
    pub graph: PlaneGraph,
    pub boundary: Vec<Vid>,
    pub kind: Kind,
    pub roots: Roots,
}

fn violations(g: &PlaneGraph, kind: Kind, roots: Roots) -> Vec<Violation> {
    let mut out = Vec::new();
    if g.n() < 3 {
        out.push(Violation::TooSmall);
        return out;
    }
    if !g.is_connected() {
        out.push(Violation::Disconnected);
        return out;
    }
    let outer: HashSet<Dart> = g.outer_face().into_iter().collect();
    for f in g.faces() {
        if outer.contains(&f[0]) {
            if kind == Kind::Triangulation && f.len() != 3 {
                out.push(Violation::OuterFaceNotTriangle(f.len()));
            }
            continue;
        }
        let vs: HashSet<Vid> = f.iter().map(|d| d.0).collect();
        if f.len() != 3 || vs.len() != 3 {
            out.push(Violation::NonTriangularFace(
                f.iter().map(|d| d.0).collect(),
            ));
        }
    }
    let deg1_root = match roots {
        Roots::Vertex(u) => Some(u),
        _ => None,
    };
    for v in g.vertices() {
        let d = g.degree(v);
        if d < 2 && !(d == 1 && deg1_root == Some(v)) {
            out.push(Violation::LowDegree {
                vertex: v,
                degree: d,
            });
        }
    }
    let needs_2conn = kind != Kind::Skeletal || matches!(roots, Roots::Edge(..));
    if needs_2conn {
        for c in blocks_of(g).cut_vertices {
            out.push(Violation::CutVertex(c));
        }
    }
    match roots {
        Roots::None => {}
        Roots::Vertex(u) => {
            if !g.is_alive(u) || !outer.iter().any(|d| d.0 == u) {
                out.push(Violation::RootNotOnOuterFace(u));
            }
        }
        Roots::Edge(u, v) => {
            if !outer.contains(&Dart(u, v)) && !outer.contains(&Dart(v, u)) {
                out.push(Violation::RootEdgeNotOnOuterFace(u, v));
            }
        }
    }
    out
}

pub fn validate(g: &PlaneGraph, kind: Kind, roots: Roots) -> Result<SkeletalView, ValidationError> {
    let violations = violations(g, kind, roots);
    if !violations.is_empty() {
        return Err(ValidationError { violations });
    }
    Ok(SkeletalView {
        graph: g.clone(),
        boundary: g.outer_walk(),
        kind,
        roots,
    })
}

/// Cheap skeletal check used inside the solver. `deg1_root` may have degree one.
pub fn check_skeletal(g: &PlaneGraph, deg1_root: Option<Vid>) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    for v in g.vertices() {
        let d = g.degree(v);
        if d < 2 && !(d == 1 && deg1_root == Some(v)) {
            return false;
        }
    }
    let outer: HashSet<Dart> = g.outer_face().into_iter().collect();
    g.faces().iter().all(|f| {
        outer.contains(&f[0])
            || (f.len() == 3 && f[0].0 != f[1].0 && f[1].0 != f[2].0 && f[0].0 != f[2].0)
    })
}

#[derive(Clone, Debug)]
pub struct Structure {
    pub boundary: Vec<Vid>,
    pub blocks: BlockCutTree,
    /// Edges joining two outer vertices that are not themselves outer edges.
    pub chords: Vec<(Vid, Vid)>,
    pub interior: Vec<Vid>,
}

pub fn structure(g: &PlaneGraph) -> Structure {
    let boundary = g.outer_walk();
    let on = g.boundary_flags();
    let bedges = g.boundary_edges();
    let chords = g
        .edges()
        .filter(|&(a, b)| on[a as usize] && on[b as usize] && !bedges.contains(&ordered(a, b)))
        .collect();
    Structure {
        boundary,
        blocks: blocks_of(g),
        chords,
        interior: g.vertices().filter(|&v| !on[v as usize]).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitAt {
    CutVertex(Vid),
    Bridge(Vid, Vid),
    Chord(Vid, Vid),
}

/// Connected components of `g` minus `removed`, each sorted.
pub fn components_without(
    g: &PlaneGraph,
    removed: &[Vid],
    skip_edge: Option<(Vid, Vid)>,
) -> Vec<Vec<Vid>> {
    let mut seen = vec![false; g.capacity()];
    for &r in removed {
        seen[r as usize] = true;
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s as usize] {
            continue;
        }
        seen[s as usize] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if skip_edge.is_some_and(|(a, b)| ordered(a, b) == ordered(v, w)) {
                    continue;
                }
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn keep_only(g: &PlaneGraph, keep: &[bool]) -> PlaneGraph {
    let mut h = g.clone();
    let dead: Vec<Vid> = g.vertices().filter(|&v| !keep[v as usize]).collect();
    h.delete_vertices(&dead);
    h
}

/// Splits at a cut vertex, bridge or chord. The first part holds the
/// component met first around the split point, the second holds the rest.
/// Both parts keep the original ids.
pub fn split(g: &PlaneGraph, at: SplitAt) -> Result<(PlaneGraph, PlaneGraph), EmbeddingError> {
    let cap = g.capacity();
    match at {
        SplitAt::CutVertex(u) => {
            if !g.is_alive(u) {
                return Err(EmbeddingError::UnknownVertex(u));
            }
            let comps = components_without(g, &[u], None);
            if comps.len() < 2 {
                return Err(EmbeddingError::NotCutVertex(u));
            }
            let first = g.neighbors(u)[0];
            let mut k1 = vec![false; cap];
            let mut k2 = vec![false; cap];
            for c in &comps {
                let target = if c.binary_search(&first).is_ok() {
                    &mut k1
                } else {
                    &mut k2
                };
                for &x in c {
                    target[x as usize] = true;
                }
            }
            k1[u as usize] = true;
            k2[u as usize] = true;
            Ok((keep_only(g, &k1), keep_only(g, &k2)))
        }
        SplitAt::Bridge(u, v) => {
            if !g.adjacent(u, v) {
                return Err(EmbeddingError::NotAnEdge(u, v));
            }
            let comps = components_without(g, &[], Some((u, v)));
            if comps.len() != 2 {
                return Err(EmbeddingError::NotBridge(u, v));
            }
            let mut k1 = vec![false; cap];
            let mut k2 = vec![false; cap];
            let cu = comps
                .iter()
                .position(|c| c.binary_search(&u).is_ok())
                .unwrap();
            for &x in &comps[cu] {
                k1[x as usize] = true;
            }
            for &x in &comps[1 - cu] {
                k2[x as usize] = true;
            }
            Ok((keep_only(g, &k1), keep_only(g, &k2)))
        }
        SplitAt::Chord(u, v) => {
            if !g.adjacent(u, v) {
                return Err(EmbeddingError::NotAnEdge(u, v));
            }
            let comps = components_without(g, &[u, v], None);
            if comps.len() < 2 {
                return Err(EmbeddingError::NotSeparating(u, v));
            }
            let mut k1 = vec![false; cap];
            let mut k2 = vec![false; cap];
            for &x in &comps[0] {
                k1[x as usize] = true;
            }
            for c in &comps[1..] {
                for &x in c {
                    k2[x as usize] = true;
                }
            }
            for k in [&mut k1, &mut k2] {
                k[u as usize] = true;
                k[v as usize] = true;
            }
            Ok((keep_only(g, &k1), keep_only(g, &k2)))
        }
    }
}
