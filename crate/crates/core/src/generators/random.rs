use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{Dart, PlaneGraph, Vid};

use super::enumerate::{polygon_triangulations, triangle};

/// Puts a new vertex inside the triangle left of `d`.
pub fn stack_into(g: &mut PlaneGraph, d: Dart) -> Vid {
    let (a, b) = (d.0, d.1);
    let c = g.succ(a, b);
    let x = g.add_vertex();
    g.add_edge(x, a, None, Some(b));
    g.add_edge(x, b, Some(a), Some(c));
    g.add_edge(x, c, Some(b), Some(a));
    x
}

/// A stacked triangulation on `n` vertices followed by `n²` random flips.
/// Same `(n, seed)`, same graph.
pub fn random_triangulation(n: usize, seed: u64) -> PlaneGraph {
    assert!(n >= 4, "random triangulations need at least 4 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = triangle();
    while g.n() < n {
        let faces = g.faces();
        let f = &faces[rng.gen_range(0..faces.len())];
        stack_into(&mut g, f[0]);
    }
    shuffle_flips(&mut g, n * n, &mut rng);
    g
}

pub fn shuffle_flips(g: &mut PlaneGraph, steps: usize, rng: &mut impl Rng) {
    let vs: Vec<Vid> = g.vertices().collect();
    for _ in 0..steps {
        let a = vs[rng.gen_range(0..vs.len())];
        let nb = g.neighbors(a);
        let b = nb[rng.gen_range(0..nb.len())];
        g.flip(a, b);
    }
}

/// A random triangulation of the `n`-gon with vertices `0..n` in order.
pub fn random_polygon_triangulation(n: usize, seed: u64) -> PlaneGraph {
    assert!(n >= 3);
    if n <= 8 {
        let all = polygon_triangulations(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        return all[rng.gen_range(0..all.len())].clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tris = Vec::new();
    let mut stack = vec![(0 as Vid, n as Vid - 1)];
    while let Some((lo, hi)) = stack.pop() {
        if hi - lo < 2 {
            continue;
        }
        let k = rng.gen_range(lo + 1..hi);
        tris.push([lo, k, hi]);
        stack.push((lo, k));
        stack.push((k, hi));
    }
    PlaneGraph::from_faces(n, &tris).unwrap()
}
