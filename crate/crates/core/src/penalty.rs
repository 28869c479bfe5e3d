//! Penalty of a skeletal triangulation, counted in half-units.

use std::collections::{BTreeMap, HashSet};

use crate::embedding::{blocks_of, ordered, PlaneGraph, Roots, Vid};

/// Which hubs may carry a bad 5-wheel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WheelRule {
    /// Hub of degree exactly four, so the wheel is its closed neighbourhood.
    DegreeFourHub,
    /// Any hub whose neighbourhood contains the rim cycle.
    AnyHub,
}

pub const WHEEL_RULE: WheelRule = WheelRule::DegreeFourHub;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Config {
    /// Facial triangle with one degree-2 vertex, the tip.
    Ear { tip: Vid, tri: [Vid; 3] },
    /// Facial triangle with two degree-2 vertices.
    Pivoting { tri: [Vid; 3] },
    /// The whole graph is a triangle.
    Isolated { tri: [Vid; 3] },
    /// Degree-2 vertex whose neighbours are not adjacent.
    Deg2Cut(Vid),
    /// 5-wheel with at least one pair of adjacent degree-3 outer vertices on its rim.
    BadWheel {
        hub: Vid,
        rim: [Vid; 4],
        pairs: Vec<(Vid, Vid)>,
    },
}

#[derive(Clone, Debug)]
pub struct PenaltyReport {
    pub half_units: u64,
    pub n_term: usize,
    pub e_count: usize,
    pub f_count: usize,
    pub r_flag: bool,
    /// The configurations that were counted.
    pub configurations: Vec<Config>,
}

impl PenaltyReport {
    pub fn bound(&self) -> usize {
        bound(self.half_units)
    }
}

/// Largest `s` with `3.5 s <= half / 2`.
pub fn bound(half: u64) -> usize {
    (half / 7) as usize
}

/// Every low-degree problem and bad 5-wheel of the graph, regardless of roots.
pub fn configurations(g: &PlaneGraph, rule: WheelRule) -> Vec<Config> {
    let mut out = Vec::new();
    let mut seen_tri: HashSet<[Vid; 3]> = HashSet::new();
    for x in g.vertices() {
        if g.degree(x) != 2 {
            continue;
        }
        let (a, b) = (g.neighbors(x)[0], g.neighbors(x)[1]);
        if !g.adjacent(a, b) {
            out.push(Config::Deg2Cut(x));
            continue;
        }
        let mut tri = [x, a, b];
        tri.sort_unstable();
        if !seen_tri.insert(tri) {
            continue;
        }
        let low = tri.iter().filter(|&&y| g.degree(y) == 2).count();
        out.push(match low {
            1 => Config::Ear { tip: x, tri },
            2 => Config::Pivoting { tri },
            _ => Config::Isolated { tri },
        });
    }
    out.extend(bad_wheels(g, rule));
    out
}

/// Bad 5-wheels found from their 3-pairs.
pub fn bad_wheels(g: &PlaneGraph, rule: WheelRule) -> Vec<Config> {
    let mut wheels: BTreeMap<(Vid, [Vid; 4]), Vec<(Vid, Vid)>> = BTreeMap::new();
    let walk = g.outer_face();
    let mut pairs_seen = HashSet::new();
    for d in walk {
        let (a, b) = (d.0, d.1);
        if g.degree(a) != 3 || g.degree(b) != 3 || !pairs_seen.insert(ordered(a, b)) {
            continue;
        }
        for &h in g.neighbors(a) {
            if h == b || !g.neighbors(b).contains(&h) {
                continue;
            }
            if rule == WheelRule::DegreeFourHub && g.degree(h) != 4 {
                continue;
            }
            let Some(&c) = g.neighbors(b).iter().find(|&&y| y != a && y != h) else {
                continue;
            };
            let Some(&dd) = g.neighbors(a).iter().find(|&&y| y != b && y != h) else {
                continue;
            };
            if c == dd || !g.adjacent(c, dd) || !g.adjacent(h, c) || !g.adjacent(h, dd) {
                continue;
            }
            let mut rim = [a, b, c, dd];
            rim.sort_unstable();
            wheels.entry((h, rim)).or_default().push(ordered(a, b));
        }
    }
    wheels
        .into_iter()
        .map(|((hub, rim), pairs)| Config::BadWheel { hub, rim, pairs })
        .collect()
}

pub fn penalty(g: &PlaneGraph, roots: Roots) -> PenaltyReport {
    penalty_with(g, roots, WHEEL_RULE)
}

pub fn penalty_with(g: &PlaneGraph, roots: Roots, rule: WheelRule) -> PenaltyReport {
    let all = configurations(g, rule);
    let counted: Vec<Config> = all
        .into_iter()
        .filter(|c| match (roots, c) {
            (Roots::None, _) => true,
            (Roots::Vertex(u), Config::Ear { tip, .. }) => *tip != u,
            (Roots::Vertex(u), Config::Deg2Cut(x)) => *x != u,
            (Roots::Vertex(u), Config::BadWheel { pairs, .. }) => {
                pairs.iter().any(|p| p.0 != u && p.1 != u)
            }
            (Roots::Vertex(_), _) => true,
            (Roots::Edge(u, v), Config::BadWheel { pairs, .. }) => pairs
                .iter()
                .any(|p| ![u, v].contains(&p.0) && ![u, v].contains(&p.1)),
            (Roots::Edge(..), _) => true,
        })
        .collect();
    let (n_term, e_count, r_flag) = match roots {
        Roots::None => (
            g.n(),
            counted
                .iter()
                .filter(|c| !matches!(c, Config::BadWheel { .. }))
                .count(),
            false,
        ),
        Roots::Vertex(u) => (
            g.n() - 1,
            counted
                .iter()
                .filter(|c| !matches!(c, Config::BadWheel { .. }))
                .count(),
            g.degree(u) == 1,
        ),
        // every degree-2 vertex other than the roots counts once
        Roots::Edge(u, v) => (
            g.n() - 2,
            g.vertices()
                .filter(|&x| x != u && x != v && g.degree(x) == 2)
                .count(),
            false,
        ),
    };
    let f_count = counted
        .iter()
        .filter(|c| matches!(c, Config::BadWheel { .. }))
        .count();
    PenaltyReport {
        half_units: 2 * n_term as u64 + e_count as u64 + f_count as u64 + r_flag as u64,
        n_term,
        e_count,
        f_count,
        r_flag,
        configurations: counted,
    }
}

pub fn phi_half(g: &PlaneGraph) -> u64 {
    penalty(g, Roots::None).half_units
}

/// Well-founded order used to show that a reduction makes progress.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rank {
    pub interior: usize,
    pub bridges: usize,
    pub phi_half: u64,
    pub blocks: usize,
    pub n: usize,
    pub deg2: usize,
}

pub fn rank(g: &PlaneGraph) -> Rank {
    let on = g.boundary_flags();
    let bct = blocks_of(g);
    Rank {
        interior: g.vertices().filter(|&v| !on[v as usize]).count(),
        bridges: bct.bridges.len(),
        phi_half: phi_half(g),
        blocks: bct.blocks.len(),
        n: g.n(),
        deg2: g.vertices().filter(|&v| g.degree(v) == 2).count(),
    }
}

pub fn smaller_than(h: &PlaneGraph, g: &PlaneGraph) -> bool {
    rank(h) < rank(g)
}
