//! Small rooted graphs used to force, cover and replace. Each entry is
//! found by searching small rooted graphs for its signature and is
//! re-checked by [`verify_catalog`].

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{PlaneGraph, Roots, Vid};
use crate::error::EmbeddingError;
use crate::generators::{edge_rooted, near_triangulations, vertex_rooted};
use crate::oracle::{
    acts_as_edge, acts_as_vertex, min_size_under, DomConstraints, EdgeActs, VertexActs,
};
use crate::penalty::{penalty, phi_half};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    SmallAB,
    SmallLR,
    SmallNope,
    SmallAPlusB,
    SmallOr,
    SmallA,
    SmallB,
    SmallAnd,
    SmallLPlusR,
    SmallOcta,
    SmallLOrR,
    SmallL,
    SmallR,
    SmallNone,
}

/// What a gadget acts as, at its root or root edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Acts {
    Vertex(VertexActs),
    Edge(EdgeActs),
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 14] = [
        GadgetKind::SmallAB,
        GadgetKind::SmallLR,
        GadgetKind::SmallNope,
        GadgetKind::SmallAPlusB,
        GadgetKind::SmallOr,
        GadgetKind::SmallA,
        GadgetKind::SmallB,
        GadgetKind::SmallAnd,
        GadgetKind::SmallLPlusR,
        GadgetKind::SmallOcta,
        GadgetKind::SmallLOrR,
        GadgetKind::SmallL,
        GadgetKind::SmallR,
        GadgetKind::SmallNone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::SmallAB => "smallAB",
            GadgetKind::SmallLR => "smallLR",
            GadgetKind::SmallNope => "smallNope",
            GadgetKind::SmallAPlusB => "smallA+B",
            GadgetKind::SmallOr => "smallOR",
            GadgetKind::SmallA => "smallA",
            GadgetKind::SmallB => "smallB",
            GadgetKind::SmallAnd => "smallAND",
            GadgetKind::SmallLPlusR => "smallL+R",
            GadgetKind::SmallOcta => "smallOCTA",
            GadgetKind::SmallLOrR => "smallLORR",
            GadgetKind::SmallL => "smallL",
            GadgetKind::SmallR => "smallR",
            GadgetKind::SmallNone => "smallNone",
        }
    }

    pub fn is_vertex_rooted(self) -> bool {
        matches!(
            self,
            GadgetKind::SmallAB | GadgetKind::SmallLR | GadgetKind::SmallNope
        )
    }

    /// Target `(s, phi in half-units, acts-as)`.
    pub fn signature(self) -> (usize, u64, Acts) {
        use Acts::{Edge, Vertex};
        match self {
            GadgetKind::SmallAB => (1, 5, Vertex(VertexActs::AB)),
            GadgetKind::SmallLR => (1, 7, Vertex(VertexActs::LR)),
            GadgetKind::SmallNope => (1, 10, Vertex(VertexActs::Nope)),
            GadgetKind::SmallAPlusB => (2, 10, Edge(EdgeActs::APlusB)),
            GadgetKind::SmallOr => (1, 3, Edge(EdgeActs::Or)),
            GadgetKind::SmallA => (1, 5, Edge(EdgeActs::A)),
            GadgetKind::SmallB => (1, 5, Edge(EdgeActs::B)),
            GadgetKind::SmallAnd => (1, 7, Edge(EdgeActs::And)),
            GadgetKind::SmallLPlusR => (1, 7, Edge(EdgeActs::LPlusR)),
            GadgetKind::SmallOcta => (1, 8, Edge(EdgeActs::Octa)),
            GadgetKind::SmallLOrR => (1, 9, Edge(EdgeActs::LOrR)),
            GadgetKind::SmallL => (1, 9, Edge(EdgeActs::L)),
            GadgetKind::SmallR => (1, 9, Edge(EdgeActs::R)),
            GadgetKind::SmallNone => (1, 10, Edge(EdgeActs::None)),
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub graph: PlaneGraph,
    /// `Roots::Vertex` for the three vertex-rooted kinds, `Roots::Edge` otherwise.
    pub roots: Roots,
    pub s: usize,
    pub phi_half: u64,
    /// Base vertex forced into every neat set of a host (smallA, smallB).
    pub red: Option<Vid>,
}

/// Whether every neat dominating set of any host the gadget is attached
/// to contains `red`. Holds when some non-root vertex `t` sees only `red`
/// and vertices whose whole neighbourhood lies inside `N[red]`.
pub fn red_vertex_holds(g: &PlaneGraph, roots: Roots, red: Vid) -> bool {
    if !roots.contains(red) {
        return false;
    }
    let inside = |x: Vid| {
        !roots.contains(x)
            && g.neighbors(x)
                .iter()
                .all(|&y| y == red || g.adjacent(red, y))
            && g.adjacent(x, red)
    };
    g.vertices()
        .filter(|&t| !roots.contains(t))
        .any(|t| g.neighbors(t).iter().all(|&x| x == red || inside(x)) && inside(t))
}

fn matches(kind: GadgetKind, g: &PlaneGraph, roots: Roots) -> Option<Gadget> {
    let (s, phi, acts) = kind.signature();
    let ph = penalty(g, roots).half_units;
    if ph != phi {
        return None;
    }
    let (got_s, got_acts) = match roots {
        Roots::Vertex(u) => {
            let r = acts_as_vertex(g, u).ok()?;
            (r.s, Acts::Vertex(r.acts))
        }
        Roots::Edge(u, v) => {
            let r = acts_as_edge(g, u, v).ok()?;
            (r.s, Acts::Edge(r.acts))
        }
        Roots::None => return None,
    };
    if got_s != s || got_acts != acts {
        return None;
    }
    let red = match (kind, roots) {
        (GadgetKind::SmallA, Roots::Edge(u, _)) => Some(u),
        (GadgetKind::SmallB, Roots::Edge(_, v)) => Some(v),
        _ => None,
    };
    if let Some(r) = red {
        if !red_vertex_holds(g, roots, r) {
            return None;
        }
    }
    Some(Gadget {
        kind,
        graph: g.clone(),
        roots,
        s,
        phi_half: ph,
        red,
    })
}

const SEARCH_N: usize = 7;

/// Smallest rooted graph meeting the signature of `kind`, in enumeration order.
pub fn search(kind: GadgetKind) -> Option<Gadget> {
    if kind.is_vertex_rooted() {
        vertex_rooted(SEARCH_N)
            .into_iter()
            .find_map(|(g, u)| matches(kind, &g, Roots::Vertex(u)))
    } else {
        edge_rooted(SEARCH_N)
            .into_iter()
            .find_map(|(g, u, v)| matches(kind, &g, Roots::Edge(u, v)))
    }
}

fn catalog() -> &'static Vec<Gadget> {
    static CAT: OnceLock<Vec<Gadget>> = OnceLock::new();
    CAT.get_or_init(|| {
        GadgetKind::ALL
            .iter()
            .map(|&k| search(k).unwrap_or_else(|| panic!("no graph found for {k}")))
            .collect()
    })
}

pub fn gadget(kind: GadgetKind) -> &'static Gadget {
    &catalog()[GadgetKind::ALL.iter().position(|&k| k == kind).unwrap()]
}

pub fn all_gadgets() -> &'static [Gadget] {
    catalog()
}

#[derive(Clone, Debug, Default)]
pub struct CatalogReport {
    pub checked: usize,
    pub replacement_hosts: usize,
    pub mismatches: Vec<String>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.checked == GadgetKind::ALL.len()
    }
}

/// Re-derives every signature of `entries` with the oracle.
pub fn verify_entries(entries: &[Gadget]) -> CatalogReport {
    let mut rep = CatalogReport::default();
    for gd in entries {
        rep.checked += 1;
        let (s, phi, acts) = gd.kind.signature();
        let ph = penalty(&gd.graph, gd.roots).half_units;
        if ph != phi || gd.phi_half != phi {
            rep.mismatches.push(format!(
                "{}: phi {} half-units, expected {}",
                gd.kind, ph, phi
            ));
        }
        let got = match gd.roots {
            Roots::Vertex(u) => acts_as_vertex(&gd.graph, u).map(|r| (r.s, Acts::Vertex(r.acts))),
            Roots::Edge(u, v) => acts_as_edge(&gd.graph, u, v).map(|r| (r.s, Acts::Edge(r.acts))),
            Roots::None => {
                rep.mismatches.push(format!("{}: unrooted", gd.kind));
                continue;
            }
        };
        match got {
            Ok((gs, ga)) => {
                if gs != s || gd.s != s {
                    rep.mismatches
                        .push(format!("{}: s = {}, expected {}", gd.kind, gs, s));
                }
                if ga != acts {
                    rep.mismatches.push(format!(
                        "{}: acts as {:?}, expected {:?}",
                        gd.kind, ga, acts
                    ));
                }
            }
            Err(e) => rep
                .mismatches
                .push(format!("{}: oracle failed: {e}", gd.kind)),
        }
        let want_red = matches!(gd.kind, GadgetKind::SmallA | GadgetKind::SmallB);
        match gd.red {
            Some(r) if want_red => {
                if !red_vertex_holds(&gd.graph, gd.roots, r) {
                    rep.mismatches
                        .push(format!("{}: red vertex {r} is not forced", gd.kind));
                }
            }
            None if want_red => rep.mismatches.push(format!("{}: no red vertex", gd.kind)),
            Some(_) => rep
                .mismatches
                .push(format!("{}: unexpected red vertex", gd.kind)),
            None => {}
        }
    }
    rep
}

/// Second graph of the same edge kind, used as the other side of the
/// replacement check.
fn twin(kind: GadgetKind) -> Option<(PlaneGraph, Vid, Vid)> {
    let (_, _, acts) = kind.signature();
    let first = gadget(kind);
    let code = crate::embedding::plane_code(&first.graph);
    edge_rooted(SEARCH_N).into_iter().find(|(g, u, v)| {
        if crate::embedding::plane_code(g) == code && first.roots == Roots::Edge(*u, *v) {
            return false;
        }
        acts_as_edge(g, *u, *v)
            .map(|r| Acts::Edge(r.acts) == acts)
            .unwrap_or(false)
            && g.n() > 2
    })
}

/// Replacement check on `hosts` random small hosts: for two parts of the
/// same kind, the host sizes and penalties differ exactly as the parts do.
pub fn verify_replacement(hosts: usize, seed: u64) -> CatalogReport {
    let mut rep = CatalogReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<PlaneGraph> = (3..=7).flat_map(near_triangulations).collect();
    let kinds: Vec<GadgetKind> = GadgetKind::ALL
        .iter()
        .copied()
        .filter(|k| !k.is_vertex_rooted())
        .collect();
    let twins: Vec<Option<(PlaneGraph, Vid, Vid)>> = kinds.iter().map(|&k| twin(k)).collect();
    for i in 0..hosts {
        let host = &pool[rng.gen_range(0..pool.len())];
        let outer = host.outer_face();
        let d = outer[rng.gen_range(0..outer.len())];
        let ki = i % kinds.len();
        let kind = kinds[ki];
        let Some((tg, tu, tv)) = &twins[ki] else {
            rep.mismatches
                .push(format!("{kind}: no second part of the same kind"));
            continue;
        };
        let gd = gadget(kind);
        let Roots::Edge(gu, gv) = gd.roots else {
            continue;
        };
        let glue = |part: &PlaneGraph, pu: Vid, pv: Vid| -> Result<PlaneGraph, EmbeddingError> {
            let mut h = host.clone();
            h.attach(d.0, d.1, part, pu, pv)?;
            Ok(h)
        };
        let (Ok(h1), Ok(h2)) = (glue(&gd.graph, gu, gv), glue(tg, *tu, *tv)) else {
            rep.mismatches
                .push(format!("{kind}: attach failed on host {i}"));
            continue;
        };
        let s = |g: &PlaneGraph| min_size_under(g, &DomConstraints::default()).unwrap() as i64;
        let sr = |g: &PlaneGraph, u: Vid, v: Vid| {
            min_size_under(g, &DomConstraints::exempt(&[u, v])).unwrap() as i64
        };
        let ds = s(&h2) - s(&h1);
        let dps = sr(tg, *tu, *tv) - sr(&gd.graph, gu, gv);
        let dphi = phi_half(&h2) as i64 - phi_half(&h1) as i64;
        let dpp = penalty(tg, Roots::Edge(*tu, *tv)).half_units as i64 - gd.phi_half as i64;
        if ds != dps || dphi != dpp {
            rep.mismatches.push(format!(
                "{kind}: host {i} gives ds {ds} vs {dps}, dphi {dphi} vs {dpp}"
            ));
        }
        rep.replacement_hosts += 1;
    }
    rep
}

/// Full gate: signatures, red vertices and the replacement check on 140 hosts.
pub fn verify_catalog() -> CatalogReport {
    let mut rep = verify_entries(all_gadgets());
    let r = verify_replacement(140, 7);
    rep.replacement_hosts = r.replacement_hosts;
    rep.mismatches.extend(r.mismatches);
    rep
}

/// Where and how to insert a gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Insert {
    /// Fuse a vertex-rooted gadget at a boundary vertex.
    Fuse(GadgetKind, Vid),
    /// Attach an edge-rooted gadget on the boundary edge `u-v`, mapping
    /// the gadget's first root to `u`. For smallA the red vertex is `u`.
    Attach(GadgetKind, Vid, Vid),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tag {
    pub at: Insert,
    /// Vertices the gadget brought in, excluding the identified roots.
    pub added: Vec<Vid>,
    /// Host vertex every neat set must contain, if any.
    pub forced: Option<Vid>,
}

pub fn insert(g: &mut PlaneGraph, at: Insert) -> Result<Tag, EmbeddingError> {
    match at {
        Insert::Fuse(kind, v) => {
            let gd = gadget(kind);
            let Roots::Vertex(r) = gd.roots else {
                return Err(EmbeddingError::NotOnFace(v));
            };
            let map = g.fuse(v, &gd.graph, r, false)?;
            let added = gd
                .graph
                .vertices()
                .filter(|&x| x != r)
                .map(|x| map[x as usize].unwrap())
                .collect();
            let forced = (kind == GadgetKind::SmallAB).then_some(v);
            Ok(Tag { at, added, forced })
        }
        Insert::Attach(kind, u, v) => {
            let gd = gadget(kind);
            let Roots::Edge(a, b) = gd.roots else {
                return Err(EmbeddingError::NotBoundaryEdge(u, v));
            };
            // smallB is smallA read the other way round
            let (a, b) = if kind == GadgetKind::SmallB {
                (b, a)
            } else {
                (a, b)
            };
            let map = g.attach(u, v, &gd.graph, a, b)?;
            let added = gd
                .graph
                .vertices()
                .filter(|&x| x != a && x != b)
                .map(|x| map[x as usize].unwrap())
                .collect();
            let forced = matches!(kind, GadgetKind::SmallA | GadgetKind::SmallB).then_some(u);
            Ok(Tag { at, added, forced })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PullBackError {
    #[error("forced vertex {0} is missing from the set")]
    ForcedMissing(Vid),
    #[error("gadget at {0:?} has no vertex in the set")]
    EmptyCover(Insert),
}

/// Drops gadget vertices from a set of the tagged graph. Returns the set
/// and the fuse points of LR gadgets, which may now be undominated.
pub fn pull_back(tags: &[Tag], set: &[Vid]) -> Result<(Vec<Vid>, Vec<Vid>), PullBackError> {
    let mut inside: HashSet<Vid> = HashSet::new();
    let mut exposed = Vec::new();
    for t in tags {
        if let Some(f) = t.forced {
            if !set.contains(&f) {
                return Err(PullBackError::ForcedMissing(f));
            }
        }
        if let Insert::Fuse(GadgetKind::SmallLR, v) = t.at {
            if !t.added.iter().any(|x| set.contains(x)) {
                return Err(PullBackError::EmptyCover(t.at));
            }
            exposed.push(v);
        }
        inside.extend(t.added.iter().copied());
    }
    let out = set
        .iter()
        .copied()
        .filter(|x| !inside.contains(x))
        .collect();
    Ok((out, exposed))
}
