use crate::embedding::{check_skeletal, PlaneGraph, Roots, Vid};
use crate::gadgets::{insert, GadgetKind, Insert};
use crate::oracle::{is_dominating, neatify, neatify_toward};
use crate::penalty::penalty;

use super::{SolveError, Solver, SolverConfig};

/// What a rooted set must achieve. "Rooted" means the roots themselves
/// need not be dominated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootedMode {
    /// Vertex root, phi < 3.5s: dominates everything and contains the root.
    ContainsRoot,
    /// Vertex root, phi < 3.5s + 1.5: dominates everything.
    Dominating,
    /// Vertex root, phi < 3.5s + 2.5: dominates all but the root.
    Rooted,
    /// Edge roots, phi < 3.5s - 1: dominates everything, contains the given root.
    ContainsGiven(Vid),
    /// Edge roots, phi < 3.5s: dominates everything, contains a root.
    ContainsEither,
    /// Edge roots, phi < 3.5s + 0.5: rooted, and dominates the given root.
    DominatesGiven(Vid),
    /// Edge roots, phi < 3.5s + 1.5: rooted, and dominates a root.
    DominatesEither,
    /// Edge roots, phi < 3.5(s + 1) - 2: rooted.
    EdgeRooted,
}

impl RootedMode {
    /// Strict upper limit on phi, in half-units.
    pub fn limit(self, s: usize) -> i64 {
        let b = 7 * s as i64;
        b + match self {
            RootedMode::ContainsRoot => 0,
            RootedMode::Dominating => 3,
            RootedMode::Rooted => 5,
            RootedMode::ContainsGiven(_) => -2,
            RootedMode::ContainsEither => 0,
            RootedMode::DominatesGiven(_) => 1,
            RootedMode::DominatesEither | RootedMode::EdgeRooted => 3,
        }
    }

    fn is_vertex(self) -> bool {
        matches!(
            self,
            RootedMode::ContainsRoot | RootedMode::Dominating | RootedMode::Rooted
        )
    }
}

/// Checks a set against the guarantee of `mode`.
pub fn meets(g: &PlaneGraph, roots: Roots, mode: RootedMode, s: usize, set: &[Vid]) -> bool {
    if set.len() > s || set.iter().any(|&x| !g.is_alive(x)) {
        return false;
    }
    let dom = |x: Vid| set.contains(&x) || g.neighbors(x).iter().any(|y| set.contains(y));
    let rl = roots.list();
    let rooted = is_dominating(g, set, &rl);
    match (mode, roots) {
        (RootedMode::ContainsRoot, Roots::Vertex(u)) => {
            set.contains(&u) && is_dominating(g, set, &[])
        }
        (RootedMode::Dominating, Roots::Vertex(_)) => is_dominating(g, set, &[]),
        (RootedMode::Rooted, Roots::Vertex(_)) => rooted,
        (RootedMode::ContainsGiven(r), Roots::Edge(..)) => {
            set.contains(&r) && is_dominating(g, set, &[])
        }
        (RootedMode::ContainsEither, Roots::Edge(u, v)) => {
            (set.contains(&u) || set.contains(&v)) && is_dominating(g, set, &[])
        }
        (RootedMode::DominatesGiven(r), Roots::Edge(..)) => rooted && dom(r),
        (RootedMode::DominatesEither, Roots::Edge(u, v)) => rooted && (dom(u) || dom(v)),
        (RootedMode::EdgeRooted, Roots::Edge(..)) => rooted,
        _ => false,
    }
}

/// A rooted set of size at most `s` with the guarantee of `mode`, built
/// from one recursive solve on a graph with a gadget inserted, or on a
/// reduced graph.
pub fn guaranteed_rooted_set(
    g: &PlaneGraph,
    roots: Roots,
    mode: RootedMode,
    s: usize,
    cfg: &SolverConfig,
) -> Result<Vec<Vid>, SolveError> {
    Solver::new(cfg).rooted(g, roots, mode, s)
}

fn with(g: &PlaneGraph, at: Insert) -> Option<PlaneGraph> {
    let mut h = g.clone();
    insert(&mut h, at).ok()?;
    Some(h)
}

fn host_part(g: &PlaneGraph, set: &[Vid]) -> Vec<Vid> {
    let cap = g.capacity() as Vid;
    set.iter()
        .copied()
        .filter(|&x| x < cap && g.is_alive(x))
        .collect()
}

impl Solver<'_> {
    pub(crate) fn rooted(
        &mut self,
        g: &PlaneGraph,
        roots: Roots,
        mode: RootedMode,
        s: usize,
    ) -> Result<Vec<Vid>, SolveError> {
        let fits = match roots {
            Roots::Vertex(_) => mode.is_vertex(),
            Roots::Edge(u, v) => {
                !mode.is_vertex()
                    && match mode {
                        RootedMode::ContainsGiven(r) | RootedMode::DominatesGiven(r) => {
                            r == u || r == v
                        }
                        _ => true,
                    }
            }
            Roots::None => false,
        };
        if !fits {
            return Err(SolveError::WrongRoots { roots, mode });
        }
        let half = penalty(g, roots).half_units;
        let limit = mode.limit(s);
        if half as i64 >= limit {
            return Err(SolveError::Precondition {
                mode,
                s,
                half,
                limit,
            });
        }
        let set = self.rooted_inner(g, roots, mode, s)?;
        let case = self.last_case();
        match set {
            Some(set) if meets(g, roots, mode, s, &set) => Ok(set),
            Some(set) => {
                Err(self.check_err(case, format!("{mode:?} with s = {s} returned {set:?}")))
            }
            None => Err(self.check_err(case, format!("{mode:?} with s = {s} found no set"))),
        }
    }

    fn forced_solve(&mut self, h: &PlaneGraph, forced: &[Vid]) -> Result<Vec<Vid>, SolveError> {
        let sh = self.solve(h)?;
        Ok(neatify_toward(h, &sh, forced))
    }

    fn rooted_inner(
        &mut self,
        g: &PlaneGraph,
        roots: Roots,
        mode: RootedMode,
        s: usize,
    ) -> Result<Option<Vec<Vid>>, SolveError> {
        match (mode, roots) {
            (RootedMode::ContainsRoot, Roots::Vertex(u)) => {
                let Some(x) = g.outer_face().iter().find(|d| d.0 == u).map(|d| d.1) else {
                    return Ok(None);
                };
                self.contains(g, u, x)
            }
            (RootedMode::Dominating, Roots::Vertex(u)) => {
                if g.degree(u) == 1 {
                    let w = g.neighbors(u)[0];
                    let mut h = g.clone();
                    h.delete_vertex(u);
                    return self
                        .rooted(&h, Roots::Vertex(w), RootedMode::ContainsRoot, s)
                        .map(Some);
                }
                self.solve(g).map(Some)
            }
            (RootedMode::Rooted, Roots::Vertex(u)) => self.covered(g, u),
            (RootedMode::ContainsGiven(r), Roots::Edge(a, b)) => {
                self.contains(g, r, if r == a { b } else { a })
            }
            (RootedMode::ContainsEither, Roots::Edge(a, b)) => {
                let Some(h) = with(g, Insert::Attach(GadgetKind::SmallOr, a, b)) else {
                    return Ok(None);
                };
                let sh = self.forced_solve(&h, &[])?;
                Ok((sh.contains(&a) || sh.contains(&b)).then(|| host_part(g, &sh)))
            }
            (RootedMode::DominatesGiven(r), Roots::Edge(a, b)) => {
                let o = if r == a { b } else { a };
                self.covered(g, o)
            }
            (RootedMode::DominatesEither | RootedMode::EdgeRooted, Roots::Edge(a, b)) => {
                self.either(g, a, b, s)
            }
            _ => Ok(None),
        }
    }

    /// Attach a small A with red vertex `u` on `u-x`; a neat set contains `u`.
    fn contains(&mut self, g: &PlaneGraph, u: Vid, x: Vid) -> Result<Option<Vec<Vid>>, SolveError> {
        let Some(h) = with(g, Insert::Attach(GadgetKind::SmallA, u, x)) else {
            return Ok(None);
        };
        let sh = self.forced_solve(&h, &[u])?;
        Ok(sh.contains(&u).then(|| host_part(g, &sh)))
    }

    /// Fuse a small LR at `u`; the set without the gadget dominates all but `u`.
    fn covered(&mut self, g: &PlaneGraph, u: Vid) -> Result<Option<Vec<Vid>>, SolveError> {
        let Some(h) = with(g, Insert::Fuse(GadgetKind::SmallLR, u)) else {
            return Ok(None);
        };
        let sh = self.solve(&h)?;
        Ok(Some(host_part(g, &sh)))
    }

    /// Rooted set dominating `a` or `b`. When rooting at one end costs
    /// exactly one unit more, cover at that end; otherwise contract the
    /// root edge and ask for a dominating set, which when neat avoids the
    /// merged vertex.
    fn either(
        &mut self,
        g: &PlaneGraph,
        a: Vid,
        b: Vid,
        s: usize,
    ) -> Result<Option<Vec<Vid>>, SolveError> {
        let h = penalty(g, Roots::Edge(a, b)).half_units;
        for x in [a, b] {
            if penalty(g, Roots::Vertex(x)).half_units == h + 2 {
                return self
                    .rooted(g, Roots::Vertex(x), RootedMode::Rooted, s)
                    .map(Some);
            }
        }
        let mut hc = g.clone();
        if hc.contract(a, b).is_ok() && check_skeletal(&hc, Some(a)) {
            let mark = self.trace.len();
            match self.rooted(&hc, Roots::Vertex(a), RootedMode::Dominating, s) {
                Ok(set) => {
                    let set = neatify(&hc, &set);
                    if !set.contains(&a) && set.len() <= s {
                        return Ok(Some(set));
                    }
                }
                Err(SolveError::Precondition { .. }) => {}
                Err(e) => return Err(e),
            }
            self.trace.truncate(mark);
        }
        // covering either end still gives a rooted set dominating the other
        for x in [a, b] {
            match self.rooted(g, Roots::Vertex(x), RootedMode::Rooted, s) {
                Ok(set) => return Ok(Some(set)),
                Err(SolveError::Precondition { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(None)
    }
}
