//! Lower-bound families. Building blocks that are only known by their
//! domination contract are found by search and cached.

use std::sync::OnceLock;

use crate::embedding::{blocks_of, PlaneGraph, Vid};
use crate::error::GenError;
use crate::oracle::{min_size_capped, DomConstraints};

use super::enumerate::{edge, near_triangulations, sphere_triangulations, triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    MtOuterplanar,
    K4Chain,
    Gadget10,
    Gadget7,
    Deg2Cut,
    ThreeConn11,
    EulerianQuarter,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::MtOuterplanar,
        FamilyKind::K4Chain,
        FamilyKind::Gadget10,
        FamilyKind::Gadget7,
        FamilyKind::Deg2Cut,
        FamilyKind::ThreeConn11,
        FamilyKind::EulerianQuarter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::MtOuterplanar => "mt_outerplanar",
            FamilyKind::K4Chain => "k4_chain",
            FamilyKind::Gadget10 => "gadget10",
            FamilyKind::Gadget7 => "gadget7",
            FamilyKind::Deg2Cut => "deg2cut",
            FamilyKind::ThreeConn11 => "threeconn11",
            FamilyKind::EulerianQuarter => "eulerian_quarter",
        }
    }

    pub fn from_name(s: &str) -> Option<FamilyKind> {
        FamilyKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, k: usize) -> Self {
        FamilySpec { kind, k }
    }

    /// Promised `(n, gamma)`.
    pub fn contract(&self) -> Result<(usize, usize), GenError> {
        let k = self.k;
        Ok(match self.kind {
            FamilyKind::MtOuterplanar => (3 * k, k),
            FamilyKind::K4Chain => (4 * k, k),
            FamilyKind::Gadget10 => (10 * k, 3 * k),
            FamilyKind::Gadget7 => (7 * k, 2 * k),
            FamilyKind::Deg2Cut => (10 * k, 3 * k),
            FamilyKind::ThreeConn11 => (11 * k + 1, 3 * k),
            FamilyKind::EulerianQuarter => {
                let n0 = even_block()?.0.n();
                (n0 * k, n0 / 4 * k)
            }
        })
    }
}

pub fn family(spec: FamilySpec) -> Result<PlaneGraph, GenError> {
    let k = spec.k;
    // one deg2cut block alone keeps its pendant root
    if k == 0 || (k == 1 && spec.kind == FamilyKind::Deg2Cut) {
        return Err(GenError::NoMember {
            family: spec.kind.name(),
            k,
        });
    }
    let g = match spec.kind {
        FamilyKind::MtOuterplanar => {
            let t = triangle();
            edge_blocks_on_polygon(k, &t, (0, 1))?
        }
        FamilyKind::K4Chain => {
            let k4 = tris_of(&super::enumerate::k4());
            chain(&k4, 4, [0, 1, 2], k)?
        }
        FamilyKind::Gadget10 => {
            let (b, u, v) = edge_gadget(10, 3)?;
            edge_blocks_on_polygon(k, b, (*u, *v))?
        }
        FamilyKind::Gadget7 => {
            let (b, u, v) = edge_gadget(7, 2)?;
            edge_blocks_on_polygon(k, b, (*u, *v))?
        }
        FamilyKind::Deg2Cut => {
            let (b, r) = deg2cut_gadget()?;
            vertex_blocks_on_polygon(k, b, *r)?
        }
        FamilyKind::ThreeConn11 => {
            let (b, x) = threeconn_block()?;
            glue_at_apex(k, b, *x)?
        }
        FamilyKind::EulerianQuarter => {
            let (b, face) = even_block()?;
            let t = tris_of(b);
            let g = chain(&t, b.n(), *face, k)?;
            if g.vertices().any(|v| g.degree(v) % 2 == 1) {
                return Err(GenError::Contract("odd degree after composition".into()));
            }
            g
        }
    };
    let (n, _) = spec.contract()?;
    if g.n() != n {
        return Err(GenError::Contract(format!(
            "{} has {} vertices, expected {}",
            spec.kind.name(),
            g.n(),
            n
        )));
    }
    Ok(g)
}

/// Bounded triangular faces as vertex triples; every face for a triangulation.
fn tris_of(g: &PlaneGraph) -> Vec<[Vid; 3]> {
    let outer = g.outer_face();
    let full = outer.len() == 3 && g.m() == 3 * g.n() - 6;
    g.faces()
        .into_iter()
        .filter(|f| f.len() == 3 && (full || !f.contains(&outer[0])))
        .map(|f| [f[0].0, f[1].0, f[2].0])
        .collect()
}

fn same_tri(a: [Vid; 3], b: [Vid; 3]) -> bool {
    let mut a = a;
    let mut b = b;
    a.sort();
    b.sort();
    a == b
}

/// `k` copies of a sphere triangulation, each one placed inside a face of the
/// previous and joined to it by an octahedral band. Every band vertex gains
/// exactly two neighbours, so degree parity is kept.
fn chain(block: &[[Vid; 3]], n0: usize, face: [Vid; 3], k: usize) -> Result<PlaneGraph, GenError> {
    let mut tris: Vec<[Vid; 3]> = block.to_vec();
    let mut host_face = face;
    for i in 1..k {
        let off = (i * n0) as Vid;
        let [x, y, z] = host_face;
        let [a, b, c] = face.map(|v| v + off);
        tris.retain(|t| !same_tri(*t, host_face));
        tris.extend(
            block
                .iter()
                .filter(|t| !same_tri(**t, face))
                .map(|t| t.map(|v| v + off)),
        );
        tris.extend([
            [x, y, a],
            [y, b, a],
            [y, z, b],
            [z, c, b],
            [z, x, c],
            [x, a, c],
        ]);
        host_face = [x, a, c];
    }
    // a band face outside, or the chosen block face for a single copy
    let p = tris.iter().position(|t| same_tri(*t, host_face)).unwrap();
    tris.swap(0, p);
    Ok(PlaneGraph::from_faces(n0 * k, &tris)?)
}

/// Fan-triangulated `2k`-gon with `block` attached by its edge `root` on
/// every second polygon edge. For `k = 1` the polygon is a single edge.
fn edge_blocks_on_polygon(
    k: usize,
    block: &PlaneGraph,
    root: (Vid, Vid),
) -> Result<PlaneGraph, GenError> {
    let mut g = polygon(2 * k);
    for i in 0..k as Vid {
        g.attach(2 * i, 2 * i + 1, block, root.0, root.1)?;
    }
    Ok(g.compacted().0)
}

/// Fan-triangulated `k`-gon with `block` fused by `root` at every vertex.
fn vertex_blocks_on_polygon(
    k: usize,
    block: &PlaneGraph,
    root: Vid,
) -> Result<PlaneGraph, GenError> {
    if k == 1 {
        return Ok(block.clone());
    }
    let mut g = polygon(k);
    for i in 0..k as Vid {
        g.fuse(i, block, root, false)?;
    }
    Ok(g.compacted().0)
}

fn polygon(n: usize) -> PlaneGraph {
    match n {
        2 => edge(),
        _ => {
            let tris: Vec<[Vid; 3]> = (1..n as Vid - 1).map(|i| [0, i, i + 1]).collect();
            PlaneGraph::from_faces(n, &tris).unwrap()
        }
    }
}

/// `k` copies of `block` identified at `x`, with an edge between the two
/// outer neighbours of `x` that face each other across every seam.
fn glue_at_apex(k: usize, block: &PlaneGraph, x: Vid) -> Result<PlaneGraph, GenError> {
    let mut g = block.clone();
    let seam = |g: &PlaneGraph, x: Vid| -> Vec<(Vid, Vid)> {
        // outer corners at x: (neighbour before, neighbour after) along the outer walk
        let face = g.outer_face();
        let l = face.len();
        (0..l)
            .filter(|&i| face[i].0 == x)
            .map(|i| (face[(i + l - 1) % l].0, face[i].1))
            .collect()
    };
    for _ in 1..k {
        g.fuse(x, block, x, false)?;
    }
    if k > 1 {
        for (a, b) in seam(&g, x) {
            if a != b && !g.adjacent(a, b) {
                let d = g
                    .outer_face()
                    .into_iter()
                    .find(|d| d.0 == a && d.1 == x)
                    .unwrap();
                g.add_edge_in_face(a, b, d)?;
                g.set_outer_dart(crate::embedding::Dart(a, b));
            }
        }
    }
    Ok(g.compacted().0)
}

/// Rooted optimum with `roots` exempt, and whether some optimum contains all of them.
fn rooted(g: &PlaneGraph, roots: &[Vid]) -> (usize, bool) {
    let s = min_size_capped(g, &DomConstraints::exempt(roots), 64).unwrap();
    let with = min_size_capped(g, &DomConstraints::must_exempt(roots, roots), 64).unwrap();
    (s, with == s)
}

/// Vertices needed besides the forced ones to dominate everything.
fn need(g: &PlaneGraph, forced: &[Vid]) -> usize {
    min_size_capped(g, &DomConstraints::must_exempt(forced, &[]), 64).unwrap() - forced.len()
}

fn gamma(g: &PlaneGraph) -> usize {
    min_size_capped(g, &DomConstraints::default(), 64).unwrap()
}

pub type EdgeBlock = (PlaneGraph, Vid, Vid);

/// A near-triangulation on `n` vertices rooted at an outer edge whose
/// non-root vertices need `s` vertices of the block, with some such set
/// containing both roots. Blocks whose non-root vertices all have degree at
/// least 3 are preferred.
fn edge_gadget(n: usize, s: usize) -> Result<&'static EdgeBlock, GenError> {
    static G7: OnceLock<Option<EdgeBlock>> = OnceLock::new();
    static G10: OnceLock<Option<EdgeBlock>> = OnceLock::new();
    let cell = if n == 7 { &G7 } else { &G10 };
    cell.get_or_init(|| search_edge_gadget(n, s))
        .as_ref()
        .ok_or(GenError::SearchFailed(if n == 7 {
            "gadget7"
        } else {
            "gadget10"
        }))
}

pub fn search_edge_gadget(n: usize, s: usize) -> Option<EdgeBlock> {
    let mut fallback = None;
    for g in near_triangulations(n) {
        for d in g.outer_face() {
            let (u, v) = (d.0, d.1);
            if rooted(&g, &[u, v]) != (s, true) {
                continue;
            }
            let sturdy = g.vertices().all(|w| w == u || w == v || g.degree(w) >= 3);
            if sturdy {
                return Some((g, u, v));
            }
            if fallback.is_none() {
                fallback = Some((g.clone(), u, v));
            }
        }
    }
    fallback
}

pub fn gadget7_block() -> Result<&'static EdgeBlock, GenError> {
    edge_gadget(7, 2)
}

pub fn gadget10_block() -> Result<&'static EdgeBlock, GenError> {
    edge_gadget(10, 3)
}

/// A 10-vertex gadget whose non-root vertices need 3 vertices, with some
/// such set containing the root, and whose only degree-2 vertex is a cut
/// vertex `c` hanging between two bridges. The first shape tried is a
/// block, then `c`, then the root as a pendant vertex; fused onto a host
/// the root gains degree and `c` stays a degree-2 cut vertex.
pub fn deg2cut_gadget() -> Result<&'static (PlaneGraph, Vid), GenError> {
    static CELL: OnceLock<Option<(PlaneGraph, Vid)>> = OnceLock::new();
    CELL.get_or_init(search_deg2cut)
        .as_ref()
        .ok_or(GenError::SearchFailed("deg2cut"))
}

fn search_deg2cut() -> Option<(PlaneGraph, Vid)> {
    let parts = |k: usize| {
        if k == 3 {
            vec![triangle()]
        } else {
            near_triangulations(k)
        }
    };
    // far side a lone vertex, which then serves as the root
    for a in parts(8) {
        for x in outer_vertices(&a) {
            let mut g = a.clone();
            let c = g.fuse(x, &edge(), 0, false).ok()?[1].unwrap();
            let r = g.fuse(c, &edge(), 0, false).ok()?[1].unwrap();
            if rooted(&g, &[r]) == (3, true) {
                return Some((g, r));
            }
        }
    }
    for na in 3..=6 {
        let nb = 9 - na;
        for a in parts(na) {
            for b in parts(nb) {
                for x in outer_vertices(&a) {
                    for y in outer_vertices(&b) {
                        let mut g = a.clone();
                        let c = g.fuse(x, &edge(), 0, false).ok()?[1].unwrap();
                        let yy = g.fuse(c, &edge(), 0, false).ok()?[1].unwrap();
                        g.fuse(yy, &b, y, false).ok()?;
                        let deg2: Vec<Vid> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
                        if deg2 != [c] {
                            continue;
                        }
                        for r in a.vertices() {
                            if r != x && rooted(&g, &[r]) == (3, true) {
                                return Some((g, r));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn outer_vertices(g: &PlaneGraph) -> Vec<Vid> {
    let on = g.boundary_flags();
    g.vertices().filter(|&v| on[v as usize]).collect()
}

fn chordless(g: &PlaneGraph) -> bool {
    let on = g.boundary_flags();
    let bset = g.boundary_edges();
    g.edges().all(|(a, b)| {
        !(on[a as usize] && on[b as usize]) || bset.contains(&crate::embedding::ordered(a, b))
    })
}

/// A 12-vertex 3-connected near-triangulation with an outer vertex `x` such
/// that the other 11 vertices need 3 even with `x` in the set, and two
/// copies glued at `x` need 6.
pub fn threeconn_block() -> Result<&'static (PlaneGraph, Vid), GenError> {
    static CELL: OnceLock<Option<(PlaneGraph, Vid)>> = OnceLock::new();
    CELL.get_or_init(search_threeconn)
        .as_ref()
        .ok_or(GenError::SearchFailed("threeconn11"))
}

fn search_threeconn() -> Option<(PlaneGraph, Vid)> {
    for t in sphere_triangulations(13) {
        for v in t.vertices() {
            let mut g = t.clone();
            let w = g.neighbors(v)[0];
            g.set_outer_dart(crate::embedding::Dart(v, w));
            g.delete_vertex(v);
            let (g, _) = g.compacted();
            if !chordless(&g) || !blocks_of(&g).cut_vertices.is_empty() {
                continue;
            }
            for x in g.outer_walk() {
                if need(&g, &[x]) != 3 {
                    continue;
                }
                if let Ok(two) = glue_at_apex(2, &g, x) {
                    if gamma(&two) == 6 {
                        return Some((g, x));
                    }
                }
            }
        }
    }
    None
}

/// A sphere triangulation with all degrees even and domination number
/// `n / 4`, with a face to chain copies through. Two chained copies must
/// keep the contract.
pub fn even_block() -> Result<&'static (PlaneGraph, [Vid; 3]), GenError> {
    static CELL: OnceLock<Option<(PlaneGraph, [Vid; 3])>> = OnceLock::new();
    CELL.get_or_init(search_even)
        .as_ref()
        .ok_or(GenError::SearchFailed("eulerian_quarter"))
}

fn search_even() -> Option<(PlaneGraph, [Vid; 3])> {
    for n in [8, 12] {
        for g in sphere_triangulations(n) {
            if g.vertices().any(|v| g.degree(v) % 2 == 1) || gamma(&g) != n / 4 {
                continue;
            }
            let tris = tris_of(&g);
            for &f in &tris {
                let two = chain(&tris, n, f, 2).ok()?;
                if gamma(&two) == n / 2 {
                    return Some((g, f));
                }
            }
        }
    }
    None
}
