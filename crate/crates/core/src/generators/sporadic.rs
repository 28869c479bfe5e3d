//! The three skeletal triangulations that need one vertex more than the bound.

use std::sync::OnceLock;

use crate::embedding::{plane_code, CanonCode, PlaneGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sporadic {
    Octahedron,
    ThreeBifan,
    SpecialHeptagon,
}

impl Sporadic {
    pub const ALL: [Sporadic; 3] = [
        Sporadic::Octahedron,
        Sporadic::ThreeBifan,
        Sporadic::SpecialHeptagon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sporadic::Octahedron => "octahedron",
            Sporadic::ThreeBifan => "3-bifan",
            Sporadic::SpecialHeptagon => "special-heptagon",
        }
    }

    pub fn from_name(s: &str) -> Option<Sporadic> {
        Sporadic::ALL
            .into_iter()
            .find(|k| k.name() == s || (s == "heptagon" && *k == Sporadic::SpecialHeptagon))
    }
}

pub fn octahedron() -> PlaneGraph {
    PlaneGraph::from_faces(
        6,
        &[
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 1],
            [5, 2, 1],
            [5, 3, 2],
            [5, 4, 3],
            [5, 1, 4],
        ],
    )
    .unwrap()
}

/// Octahedron drawn with `0 1 2` outside, minus the outer edge `0 1`.
pub fn three_bifan() -> PlaneGraph {
    let mut g = octahedron();
    let tri = g.faces().into_iter().find(|f| {
        let mut vs: Vec<u32> = f.iter().map(|d| d.0).collect();
        vs.sort();
        vs == [0, 1, 2]
    });
    g.set_outer_dart(tri.unwrap()[0]);
    g.delete_edge(0, 1);
    g
}

/// Boundary `t u v w x y z` = `0..7` with degrees 4 3 4 3 4 3 4, interior
/// `p q r` = `7 8 9`, `r` adjacent to `t u w x z`.
pub fn special_heptagon() -> PlaneGraph {
    let (t, u, v, w, x, y, z, p, q, r) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
    let mut g = PlaneGraph::from_faces(
        10,
        &[
            [r, t, u],
            [r, u, p],
            [r, p, w],
            [r, w, x],
            [r, x, q],
            [r, q, z],
            [r, z, t],
            [u, v, p],
            [v, w, p],
            [x, y, q],
            [y, z, q],
        ],
    )
    .unwrap();
    let d = g.outer_face().into_iter().find(|d| d.0 == t).unwrap();
    g.set_outer_dart(d);
    g
}

pub fn sporadic(kind: Sporadic) -> PlaneGraph {
    match kind {
        Sporadic::Octahedron => octahedron(),
        Sporadic::ThreeBifan => three_bifan(),
        Sporadic::SpecialHeptagon => special_heptagon(),
    }
}

fn codes() -> &'static [(CanonCode, Sporadic)] {
    static CODES: OnceLock<Vec<(CanonCode, Sporadic)>> = OnceLock::new();
    CODES.get_or_init(|| {
        Sporadic::ALL
            .iter()
            .map(|&k| (plane_code(&sporadic(k)), k))
            .collect()
    })
}

/// Which sporadic example `g` is, up to plane isomorphism.
pub fn is_sporadic(g: &PlaneGraph) -> Option<Sporadic> {
    if !matches!(g.n(), 6 | 10) {
        return None;
    }
    let c = plane_code(g);
    codes().iter().find(|(k, _)| *k == c).map(|&(_, s)| s)
}
