//! Exhaustive corpora of small plane graphs, deduplicated by canonical code.

use std::collections::HashSet;
use std::sync::{Mutex, OnceLock};

use crate::embedding::{blocks_of, plane_code, sphere_code, Dart, PlaneGraph, Vid};

pub fn k4() -> PlaneGraph {
    PlaneGraph::from_faces(4, &[[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]).unwrap()
}

fn sphere_cache() -> &'static Mutex<Vec<Vec<PlaneGraph>>> {
    static CACHE: OnceLock<Mutex<Vec<Vec<PlaneGraph>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// All triangulations of the sphere with `n` vertices (`4 <= n <= 12`), up
/// to isomorphism, grown from K4 by vertex splits.
pub fn sphere_triangulations(n: usize) -> Vec<PlaneGraph> {
    assert!(
        (4..=13).contains(&n),
        "sphere enumeration supports 4..=13 vertices"
    );
    let mut cache = sphere_cache().lock().unwrap();
    if cache.is_empty() {
        cache.push(vec![k4()]);
    }
    while cache.len() <= n - 4 {
        let prev = cache.last().unwrap();
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in prev {
            for v in g.vertices() {
                let r = g.neighbors(v).to_vec();
                for i in 0..r.len() {
                    for j in i + 1..r.len() {
                        let mut h = g.clone();
                        h.split_vertex(v, r[i], r[j]);
                        let (h, _) = h.compacted();
                        if seen.insert(sphere_code(&h)) {
                            next.push(h);
                        }
                    }
                }
            }
        }
        cache.push(next);
    }
    cache[n - 4].clone()
}

/// Every face of `g` made the outer face in turn, deduplicated as plane graphs.
pub fn all_outer_faces(g: &PlaneGraph, seen: &mut HashSet<Vec<u32>>) -> Vec<PlaneGraph> {
    let mut out = Vec::new();
    for f in g.faces() {
        let mut h = g.clone();
        h.set_outer_dart(f[0]);
        if seen.insert(plane_code(&h)) {
            out.push(h);
        }
    }
    out
}

/// Plane triangulations on `n` vertices: each sphere triangulation with
/// each face as the outer face, up to plane isomorphism.
pub fn plane_triangulations(n: usize) -> Vec<PlaneGraph> {
    let mut seen = HashSet::new();
    sphere_triangulations(n)
        .iter()
        .flat_map(|g| all_outer_faces(g, &mut seen))
        .collect()
}

/// Near-triangulations on `n >= 3` vertices, obtained by deleting a vertex
/// of a triangulation with `n + 1` vertices.
pub fn near_triangulations(n: usize) -> Vec<PlaneGraph> {
    if n == 3 {
        return vec![triangle()];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in sphere_triangulations(n + 1) {
        for v in g.vertices() {
            let mut h = g.clone();
            let w = h.neighbors(v)[0];
            h.set_outer_dart(Dart(v, w));
            h.delete_vertex(v);
            let (h, _) = h.compacted();
            if seen.insert(plane_code(&h)) {
                out.push(h);
            }
        }
    }
    out
}

pub fn triangle() -> PlaneGraph {
    PlaneGraph::from_faces(3, &[[0, 1, 2]]).unwrap()
}

pub fn edge() -> PlaneGraph {
    PlaneGraph::from_rotations(vec![vec![1], vec![0]], None).unwrap()
}

/// All triangulations of the convex `n`-gon with vertices `0..n` in order.
pub fn polygon_triangulations(n: usize) -> Vec<PlaneGraph> {
    assert!(n >= 3);
    fn rec(lo: Vid, hi: Vid) -> Vec<Vec<[Vid; 3]>> {
        if hi - lo < 2 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in lo + 1..hi {
            let left = rec(lo, k);
            let right = rec(k, hi);
            for l in &left {
                for r in &right {
                    let mut t = vec![[lo, k, hi]];
                    t.extend_from_slice(l);
                    t.extend_from_slice(r);
                    out.push(t);
                }
            }
        }
        out
    }
    rec(0, n as Vid - 1)
        .into_iter()
        .map(|tris| PlaneGraph::from_faces(n, &tris).unwrap())
        .collect()
}

/// Connected plane graphs on at most `max_n` vertices whose bounded faces
/// are triangles, built by gluing blocks at outer corners. Degree-one
/// vertices are kept so that rooted corpora can use them; filter with
/// [`min_degree`] for skeletal graphs.
pub fn glued_graphs(max_n: usize) -> Vec<PlaneGraph> {
    assert!(max_n <= 11);
    let mut blocks: Vec<PlaneGraph> = vec![edge()];
    for k in 3..=max_n {
        blocks.extend(near_triangulations(k));
    }
    let mut seen = HashSet::new();
    let mut frontier: Vec<PlaneGraph> = Vec::new();
    for b in &blocks {
        if seen.insert(plane_code(b)) {
            frontier.push(b.clone());
        }
    }
    let mut all = frontier.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for hv in g.vertices().collect::<Vec<_>>() {
                let corners = g.outer_corners(hv);
                for corner in 0..corners {
                    for b in &blocks {
                        if g.n() + b.n() - 1 > max_n {
                            continue;
                        }
                        for pr in b.vertices() {
                            for mirror in [false, true] {
                                let mut h = g.clone();
                                if h.fuse_at(hv, corner, b, pr, mirror).is_err() {
                                    continue;
                                }
                                let (h, _) = h.compacted();
                                if seen.insert(plane_code(&h)) {
                                    next.push(h);
                                }
                            }
                        }
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

pub fn min_degree(g: &PlaneGraph) -> usize {
    g.vertices().map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Skeletal graphs with `3 <= n <= max_n`.
pub fn skeletal_graphs(max_n: usize) -> Vec<PlaneGraph> {
    glued_graphs(max_n)
        .into_iter()
        .filter(|g| g.n() >= 3 && min_degree(g) >= 2)
        .collect()
}

/// Vertex-rooted instances: skeletal graphs at every outer vertex, plus
/// graphs whose only degree-one vertex is the root.
pub fn vertex_rooted(max_n: usize) -> Vec<(PlaneGraph, Vid)> {
    let mut out = Vec::new();
    for g in glued_graphs(max_n) {
        if g.n() < 3 {
            continue;
        }
        let low: Vec<Vid> = g.vertices().filter(|&v| g.degree(v) < 2).collect();
        let on = g.boundary_flags();
        match low.len() {
            0 => out.extend(
                g.vertices()
                    .filter(|&v| on[v as usize])
                    .map(|v| (g.clone(), v)),
            ),
            1 => out.push((g.clone(), low[0])),
            _ => {}
        }
    }
    out
}

/// Edge-rooted instances: near-triangulations at every outer edge, both orders.
pub fn edge_rooted(max_n: usize) -> Vec<(PlaneGraph, Vid, Vid)> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for g in near_triangulations(n) {
            for d in g.outer_face() {
                out.push((g.clone(), d.0, d.1));
                out.push((g.clone(), d.1, d.0));
            }
        }
    }
    out
}

pub fn is_two_connected(g: &PlaneGraph) -> bool {
    blocks_of(g).cut_vertices.is_empty()
}
