//! Recursive reduction that finds a dominating set of size at most
//! floor(Phi / 3.5) in a skeletal near-triangulation.
//!
//! Every reduction builds a smaller graph H, solves it and maps the set
//! back. Each candidate H is checked before recursing (skeletal, strictly
//! smaller, within budget) and each mapped-back set is checked after, so a
//! wrong plan falls through to the next one instead of returning a bad set.

mod fallback;
mod plan;
mod polygon;
mod rooted;
mod split;

use std::fmt;

use thiserror::Error;

use crate::embedding::{
    blocks_of, check_skeletal, validate, Kind, PlaneGraph, Roots, SkeletalView, ValidationError,
    Vid,
};
use crate::error::OracleError;
use crate::generators::is_sporadic;
use crate::oracle::{self, is_dominating, DomConstraints};
use crate::penalty::{bound, penalty, phi_half, rank, Config};

pub use plan::{CasePlan, Step};
pub use rooted::{guaranteed_rooted_set, RootedMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    Base,
    Sporadic,
    Outerplanar,
    BridgeForced,
    BridgeNope,
    BridgeDominating,
    CutNope,
    CutBothForced,
    CutSmallLr,
    CutLr,
    ChordOr,
    ChordAOrB,
    ChordLOrR,
    ChordLorR,
    SameRed,
    ConsecutiveRed,
    RedWithOr,
    RedNextToHigh,
    RedNextToLow,
    BadWheel,
    ConsecutiveOrs,
    Degree3Triple,
    OrNextToHigh,
    TwoOrsApart,
    OrOnTriangle,
    OrInteriorDeg3,
    AntipodalWheels,
    OctahedralPairs,
    OrNoInterior,
    SporadicPlusEdge,
    DeletableEdge,
    WheelPlusEdge,
    TriangularBoundary,
    InteriorOctahedron,
    DeletableK4,
    SharedInteriorVertex,
    ConsecutiveDeg3NoK4,
    ConsecutiveDeg3BothK4,
    ConsecutiveDeg3Special,
    Pattern5Plus4,
    Pattern444,
    Deg3InteriorOctahedron,
    Deg3InteriorK4,
    DeleteDeg3AndNeighbor,
    BigPolygonNoCut,
    BigPolygonWheel,
    Pentagon,
    Hexagon,
    SquarePolygon,
    FallbackEdge,
    FallbackCover,
    FallbackOracle,
    TriangulationWheelEdge,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Graphs up to this size go straight to the exact oracle.
    pub oracle_cutoff: usize,
    /// Last resort: exact search when no reduction applies.
    pub fallback_oracle: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            oracle_cutoff: 12,
            fallback_oracle: 22,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Recursive solve calls, including the top one.
    pub calls: usize,
    /// Plans rejected by a check before or after recursing.
    pub rejected: usize,
    /// Reductions that came from the fallback chain.
    pub fallbacks: usize,
    /// Plans abandoned because no reduction applied further down.
    pub backtracks: usize,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub set: Vec<Vid>,
    pub bound: usize,
    pub sporadic: bool,
    pub trace: Vec<CaseId>,
    pub stats: SolveStats,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("need more than 10 vertices, got {0}")]
    TooSmall(usize),
    #[error("mode {mode:?} needs phi below {limit} half-units, got {half} (s = {s})")]
    Precondition {
        mode: RootedMode,
        s: usize,
        half: u64,
        limit: i64,
    },
    #[error("roots {roots:?} do not fit mode {mode:?}")]
    WrongRoots { roots: Roots, mode: RootedMode },
    #[error("no reduction applies to a graph with {n} vertices (trace {trace:?})")]
    NoPlan { n: usize, trace: Vec<CaseId> },
    #[error("check failed after {case}: {msg} (trace {trace:?})")]
    Check {
        case: CaseId,
        msg: String,
        trace: Vec<CaseId>,
    },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rooting {
    Vertex,
    Edge,
}

/// Guessed behaviour of a rooted side, read off its penalty alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Guess {
    AB,
    LR,
    Nope,
    Or,
    AOrB,
    LOrR,
    LorR,
}

/// Splits `phi` (in half-units) into `s` and a guessed kind. The vertex
/// intervals are [7s-2, 7s) AB, [7s, 7s+3) LR, [7s+3, 7s+5) Nope. The
/// edge intervals are [7s-4, 7s-2) OR, [7s-2, 7s) A-or-B, [7s, 7s+1)
/// L-OR-R and [7s+1, 7s+3) L-or-R; the remaining [7s+3, 7s+5) would be
/// None and is read as OR with s+1, which is the same interval.
pub fn guess_acts_as(phi_half: u64, rooting: Rooting) -> (usize, Guess) {
    let q = (phi_half / 7) as usize;
    let r = phi_half % 7;
    match rooting {
        Rooting::Vertex => match r {
            0..=2 => (q, Guess::LR),
            3 | 4 => (q, Guess::Nope),
            _ => (q + 1, Guess::AB),
        },
        Rooting::Edge => match r {
            0 => (q, Guess::LOrR),
            1 | 2 => (q, Guess::LorR),
            3 | 4 => (q + 1, Guess::Or),
            _ => (q + 1, Guess::AOrB),
        },
    }
}

/// floor(Phi / 3.5) plus one for the three sporadic graphs.
pub(crate) fn effective_bound(g: &PlaneGraph) -> usize {
    bound(phi_half(g)) + is_sporadic(g).is_some() as usize
}

pub(crate) struct Solver<'c> {
    cfg: &'c SolverConfig,
    trace: Vec<CaseId>,
    stats: SolveStats,
    depth: usize,
    max_depth: usize,
}

impl<'c> Solver<'c> {
    pub(crate) fn new(cfg: &'c SolverConfig) -> Self {
        Solver {
            cfg,
            trace: Vec::new(),
            stats: SolveStats::default(),
            depth: 0,
            max_depth: 0,
        }
    }

    fn check_err(&self, case: CaseId, msg: impl Into<String>) -> SolveError {
        SolveError::Check {
            case,
            msg: msg.into(),
            trace: self.trace.clone(),
        }
    }

    fn last_case(&self) -> CaseId {
        self.trace.last().copied().unwrap_or(CaseId::Base)
    }

    /// A dominating set of `g` within its effective bound.
    pub(crate) fn solve(&mut self, g: &PlaneGraph) -> Result<Vec<Vid>, SolveError> {
        if self.depth == 0 {
            self.max_depth = 16 * g.capacity() + 256;
        }
        self.depth += 1;
        let r = stacker::maybe_grow(128 * 1024, 4 * 1024 * 1024, || self.solve_inner(g));
        self.depth -= 1;
        r
    }

    fn solve_inner(&mut self, g: &PlaneGraph) -> Result<Vec<Vid>, SolveError> {
        self.stats.calls += 1;
        if self.depth > self.max_depth {
            return Err(self.check_err(self.last_case(), "recursion does not terminate"));
        }
        if g.capacity() > 2 * g.n() + 32 {
            let (h, map) = g.compacted();
            let mut back = vec![0; h.n()];
            for (old, new) in map.iter().enumerate() {
                if let Some(nv) = new {
                    back[*nv as usize] = old as Vid;
                }
            }
            let set = self.solve_inner(&h)?;
            return Ok(set.into_iter().map(|x| back[x as usize]).collect());
        }
        let limit = effective_bound(g);
        let set = self.dispatch(g, limit)?;
        if !is_dominating(g, &set, &[]) {
            return Err(self.check_err(self.last_case(), "set does not dominate"));
        }
        if set.len() > limit {
            return Err(self.check_err(
                self.last_case(),
                format!("size {} above bound {limit}", set.len()),
            ));
        }
        Ok(set)
    }

    fn oracle(&mut self, g: &PlaneGraph, case: CaseId) -> Result<Vec<Vid>, SolveError> {
        self.trace.push(case);
        Ok(oracle::any_min_set(g, &DomConstraints::default(), 64)?)
    }

    fn dispatch(&mut self, g: &PlaneGraph, limit: usize) -> Result<Vec<Vid>, SolveError> {
        if is_sporadic(g).is_some() {
            return self.oracle(g, CaseId::Sporadic);
        }
        if g.n() <= self.cfg.oracle_cutoff {
            return self.oracle(g, CaseId::Base);
        }
        let bct = blocks_of(g);
        if let Some(&(u, v)) = bct.bridges.first() {
            if let Some(s) = split::bridge(self, g, u, v, limit)? {
                return Ok(s);
            }
        } else if let Some(&u) = bct.cut_vertices.first() {
            if let Some(s) = split::cut_vertex(self, g, u, limit)? {
                return Ok(s);
            }
        } else if oracle::outerplanar::applies(g) {
            self.trace.push(CaseId::Outerplanar);
            return Ok(oracle::outerplanar::min_dominating_set(
                g,
                &DomConstraints::default(),
            )?);
        } else {
            if let Some(s) = split::chord(self, g, limit)? {
                return Ok(s);
            }
            if let Some(s) = polygon::reduce(self, g, limit)? {
                return Ok(s);
            }
        }
        fallback::run(self, g, limit)
    }
}

pub fn solve(view: &SkeletalView) -> Result<SolveOutcome, SolveError> {
    solve_graph(&view.graph, &SolverConfig::default())
}

pub fn solve_with(view: &SkeletalView, cfg: &SolverConfig) -> Result<SolveOutcome, SolveError> {
    solve_graph(&view.graph, cfg)
}

/// Validates `g` as skeletal and solves it.
pub fn solve_graph(g: &PlaneGraph, cfg: &SolverConfig) -> Result<SolveOutcome, SolveError> {
    if !check_skeletal(g, None) {
        validate(g, Kind::Skeletal, Roots::None)?;
    }
    let mut sv = Solver::new(cfg);
    let mut set = sv.solve(g)?;
    set.sort_unstable();
    Ok(SolveOutcome {
        set,
        bound: bound(phi_half(g)),
        sporadic: is_sporadic(g).is_some(),
        trace: sv.trace,
        stats: sv.stats,
    })
}

/// Solves a triangulation (or 3-connected near-triangulation) with more
/// than 10 vertices. A bad 5-wheel is first broken by deleting the outer
/// edge between its two high-degree outer vertices.
pub fn solve_triangulation(
    view: &SkeletalView,
    cfg: &SolverConfig,
) -> Result<SolveOutcome, SolveError> {
    let g = &view.graph;
    if g.n() <= 10 {
        return Err(SolveError::TooSmall(g.n()));
    }
    let mut h = g.clone();
    let mut pre = None;
    let wheel = penalty(g, Roots::None)
        .configurations
        .into_iter()
        .find(|c| matches!(c, Config::BadWheel { .. }));
    if wheel.is_some() {
        let walk = g.outer_walk();
        let k = walk.len();
        for i in 0..k {
            let (a, b) = (walk[i], walk[(i + 1) % k]);
            if g.degree(a) < 4 || g.degree(b) < 4 {
                continue;
            }
            let mut t = g.clone();
            t.delete_edge(a, b);
            let gone = !penalty(&t, Roots::None)
                .configurations
                .iter()
                .any(|c| matches!(c, Config::BadWheel { .. }));
            if gone && check_skeletal(&t, None) {
                h = t;
                pre = Some(CaseId::TriangulationWheelEdge);
                break;
            }
        }
    }
    let mut out = solve_graph(&h, cfg)?;
    if let Some(c) = pre {
        out.trace.insert(0, c);
    }
    let limit = 2 * g.n() / 7;
    if !is_dominating(g, &out.set, &[]) || out.set.len() > limit {
        return Err(SolveError::Check {
            case: CaseId::TriangulationWheelEdge,
            msg: format!("size {} above {limit}", out.set.len()),
            trace: out.trace,
        });
    }
    out.bound = bound(phi_half(g));
    out.sporadic = false;
    Ok(out)
}

/// Rank of `g` in the well-founded order, kept with the bound for plans.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Ctx {
    pub limit: usize,
    pub rank: crate::penalty::Rank,
}

impl Ctx {
    pub(crate) fn of(g: &PlaneGraph, limit: usize) -> Self {
        Ctx {
            limit,
            rank: rank(g),
        }
    }
}
