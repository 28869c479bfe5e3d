use std::collections::HashSet;

use crate::embedding::{check_skeletal, Dart, PlaneGraph, Vid};
use crate::gadgets::{insert, GadgetKind, Insert};
use crate::generators::is_sporadic;
use crate::oracle::{is_dominating, neatify_toward, strictly_covered};
use crate::penalty::{bound, rank};

use super::{CaseId, Ctx, SolveError, Solver};

const MAX_BACKTRACKS: usize = 1000;

/// One edit of a reduction, applied in order to a copy of G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    DeleteEdge(Vid, Vid),
    DeleteVertices(Vec<Vid>),
    /// New edge through the bounded face both ends share.
    AddEdge(Vid, Vid),
    /// Attach a small A whose red vertex is `red`, on the outer edge to
    /// `toward` when there is one, otherwise on any outer edge at `red`.
    Force {
        red: Vid,
        toward: Option<Vid>,
    },
    /// Fuse a small LR at every listed vertex still present.
    Cover(Vec<Vid>),
    /// Fuse a small LR at the outer neighbour of `of` other than `not`,
    /// or at `not` when there is no other.
    CoverOtherNeighbor {
        of: Vid,
        not: Vid,
    },
}

#[derive(Clone, Debug)]
pub struct CasePlan {
    pub case: CaseId,
    pub named: Vec<(&'static str, Vid)>,
    pub steps: Vec<Step>,
    /// Vertices added to the recursive set.
    pub add: Vec<Vid>,
    /// Solve G exactly instead of building H.
    pub terminal: bool,
}

impl CasePlan {
    pub fn new(case: CaseId, steps: Vec<Step>, add: Vec<Vid>) -> Self {
        CasePlan {
            case,
            named: Vec::new(),
            steps,
            add,
            terminal: false,
        }
    }

    pub fn terminal(case: CaseId) -> Self {
        CasePlan {
            case,
            named: Vec::new(),
            steps: Vec::new(),
            add: Vec::new(),
            terminal: true,
        }
    }

    pub fn named(mut self, names: &[(&'static str, Vid)]) -> Self {
        self.named = names.to_vec();
        self
    }
}

pub(super) fn del(vs: &[Vid]) -> Step {
    Step::DeleteVertices(vs.to_vec())
}

pub(super) fn force(red: Vid, toward: Vid) -> Step {
    Step::Force {
        red,
        toward: Some(toward),
    }
}

pub(super) fn cover(vs: &[Vid]) -> Step {
    Step::Cover(vs.to_vec())
}

pub(crate) struct Built {
    pub h: PlaneGraph,
    /// Vertices of G whose domination the recursive set does not carry over.
    pub needs: Vec<Vid>,
    pub forced: Vec<Vid>,
    pub covers: usize,
}

fn outer_edge_at(h: &PlaneGraph, red: Vid, toward: Option<Vid>) -> Option<Vid> {
    let outer = h.outer_face();
    if let Some(t) = toward {
        if outer
            .iter()
            .any(|d| *d == Dart(red, t) || *d == Dart(t, red))
        {
            return Some(t);
        }
    }
    outer.iter().find(|d| d.0 == red).map(|d| d.1)
}

fn face_with(h: &PlaneGraph, a: Vid, b: Vid) -> Option<Dart> {
    let outer: HashSet<Dart> = h.outer_face().into_iter().collect();
    h.neighbors(a).iter().map(|&y| Dart(a, y)).find(|&d| {
        let f = h.face_of(d);
        !outer.contains(&f[0]) && f.iter().any(|e| e.0 == b)
    })
}

pub(crate) fn build(g: &PlaneGraph, plan: &CasePlan) -> Option<Built> {
    let cap = g.capacity() as Vid;
    let mut h = g.clone();
    let mut needs = Vec::new();
    let mut forced = Vec::new();
    let mut covers = 0;
    let mut lr = |h: &mut PlaneGraph, v: Vid, needs: &mut Vec<Vid>| -> Option<()> {
        insert(h, Insert::Fuse(GadgetKind::SmallLR, v)).ok()?;
        needs.push(v);
        covers += 1;
        Some(())
    };
    for st in &plan.steps {
        match st {
            Step::DeleteEdge(a, b) => {
                if !h.is_alive(*a) || !h.is_alive(*b) || !h.adjacent(*a, *b) {
                    return None;
                }
                h.delete_edge(*a, *b);
            }
            Step::DeleteVertices(vs) => {
                let live: Vec<Vid> = vs.iter().copied().filter(|&v| h.is_alive(v)).collect();
                if live.len() != vs.iter().collect::<HashSet<_>>().len() || live.len() >= h.n() {
                    return None;
                }
                h.delete_vertices(&live);
                needs.extend(live);
            }
            Step::AddEdge(a, b) => {
                if !h.is_alive(*a) || !h.is_alive(*b) || a == b || h.adjacent(*a, *b) {
                    return None;
                }
                let d = face_with(&h, *a, *b)?;
                h.add_edge_in_face(*a, *b, d).ok()?;
                needs.extend([*a, *b]);
            }
            Step::Force { red, toward } => {
                if !h.is_alive(*red) {
                    return None;
                }
                let other = outer_edge_at(&h, *red, *toward)?;
                insert(&mut h, Insert::Attach(GadgetKind::SmallA, *red, other)).ok()?;
                forced.push(*red);
            }
            Step::Cover(vs) => {
                for &v in vs {
                    if v < cap && h.is_alive(v) {
                        lr(&mut h, v, &mut needs)?;
                    }
                }
            }
            Step::CoverOtherNeighbor { of, not } => {
                if !h.is_alive(*of) {
                    return None;
                }
                let mut nb = Vec::new();
                for d in h.outer_face() {
                    if d.0 == *of {
                        nb.push(d.1);
                    }
                    if d.1 == *of {
                        nb.push(d.0);
                    }
                }
                let t = nb.iter().copied().find(|&x| x != *not).unwrap_or(*not);
                if !h.is_alive(t) {
                    return None;
                }
                lr(&mut h, t, &mut needs)?;
            }
        }
    }
    needs.sort_unstable();
    needs.dedup();
    Some(Built {
        h,
        needs,
        forced,
        covers,
    })
}

/// Members of `N_H[t]` a neat set may contain.
fn eligible(h: &PlaneGraph, t: Vid) -> impl Iterator<Item = Vid> + '_ {
    std::iter::once(t)
        .chain(h.neighbors(t).iter().copied())
        .filter(move |&y| !h.neighbors(y).iter().any(|&z| strictly_covered(h, y, z)))
}

/// Sufficient condition for every vertex in `needs` to end up dominated
/// in G by the neat recursive set plus `add`.
pub(crate) fn domination_plausible(g: &PlaneGraph, b: &Built, add: &[Vid]) -> bool {
    let cap = g.capacity() as Vid;
    let h = &b.h;
    let in_g = |x: Vid, y: Vid| x == y || g.adjacent(x, y);
    b.needs.iter().all(|&x| {
        if add.iter().any(|&a| in_g(a, x)) {
            return true;
        }
        if b.forced.iter().any(|&r| r < cap && in_g(r, x)) {
            return true;
        }
        let near: Vec<Vid> = std::iter::once(x)
            .chain(g.neighbors(x).iter().copied())
            .filter(|&y| h.is_alive(y))
            .collect();
        let mut seen = HashSet::new();
        for &y in &near {
            for t in std::iter::once(y).chain(h.neighbors(y).iter().copied()) {
                if !seen.insert(t) {
                    continue;
                }
                let mut any = false;
                let ok = eligible(h, t).all(|e| {
                    any = true;
                    e < cap && in_g(e, x)
                });
                if ok && any {
                    return true;
                }
            }
        }
        false
    })
}

pub(crate) enum Verdict {
    Run(Built),
    /// Passes everything but the domination pre-check.
    Doubtful(Built),
    Reject,
}

pub(crate) fn assess(g: &PlaneGraph, ctx: &Ctx, plan: &CasePlan) -> Verdict {
    let Some(b) = build(g, plan) else {
        return Verdict::Reject;
    };
    if !check_skeletal(&b.h, None) {
        return Verdict::Reject;
    }
    let rh = rank(&b.h);
    if rh >= ctx.rank {
        return Verdict::Reject;
    }
    let spor = is_sporadic(&b.h).is_some() as usize;
    if bound(rh.phi_half) + spor + plan.add.len() > ctx.limit + b.covers {
        return Verdict::Reject;
    }
    if domination_plausible(g, &b, &plan.add) {
        Verdict::Run(b)
    } else {
        Verdict::Doubtful(b)
    }
}

impl Solver<'_> {
    /// Solves the built H and maps the set back to G, checking the result.
    pub(crate) fn run_built(
        &mut self,
        g: &PlaneGraph,
        ctx: &Ctx,
        plan: &CasePlan,
        b: &Built,
    ) -> Result<Option<Vec<Vid>>, SolveError> {
        let mark = self.trace.len();
        self.trace.push(plan.case);
        let sh = match self.solve(&b.h) {
            Ok(sh) => sh,
            // a dead end further down: try the next plan, within a budget
            Err(SolveError::NoPlan { .. }) if self.stats.backtracks < MAX_BACKTRACKS => {
                self.stats.backtracks += 1;
                self.trace.truncate(mark);
                return Ok(None);
            }
            Err(e) => return Err(e),
        };
        let sh = neatify_toward(&b.h, &sh, &b.forced);
        let cap = g.capacity() as Vid;
        let mut set: Vec<Vid> = sh
            .into_iter()
            .filter(|&x| x < cap && g.is_alive(x))
            .collect();
        set.extend(plan.add.iter().copied());
        set.sort_unstable();
        set.dedup();
        if set.len() <= ctx.limit && is_dominating(g, &set, &[]) {
            return Ok(Some(set));
        }
        self.trace.truncate(mark);
        self.stats.rejected += 1;
        Ok(None)
    }

    pub(crate) fn run_terminal(
        &mut self,
        g: &PlaneGraph,
        ctx: &Ctx,
        plan: &CasePlan,
    ) -> Result<Option<Vec<Vid>>, SolveError> {
        if g.n() > self.cfg.fallback_oracle {
            return Ok(None);
        }
        let set = self.oracle(g, plan.case)?;
        if set.len() <= ctx.limit {
            return Ok(Some(set));
        }
        self.trace.pop();
        Ok(None)
    }

    /// Tries the plans in order. Plans that fail only the domination
    /// pre-check are kept in `doubtful` for a later pass.
    pub(crate) fn try_plans(
        &mut self,
        g: &PlaneGraph,
        ctx: &Ctx,
        plans: Vec<CasePlan>,
        doubtful: &mut Vec<CasePlan>,
    ) -> Result<Option<Vec<Vid>>, SolveError> {
        for p in plans {
            if p.terminal {
                if let Some(s) = self.run_terminal(g, ctx, &p)? {
                    return Ok(Some(s));
                }
                continue;
            }
            match assess(g, ctx, &p) {
                Verdict::Run(b) => {
                    if let Some(s) = self.run_built(g, ctx, &p, &b)? {
                        return Ok(Some(s));
                    }
                }
                Verdict::Doubtful(_) => doubtful.push(p),
                Verdict::Reject => self.stats.rejected += 1,
            }
        }
        Ok(None)
    }

    /// Second pass over plans that failed the domination pre-check; the
    /// check after recursing still applies.
    pub(crate) fn try_doubtful(
        &mut self,
        g: &PlaneGraph,
        ctx: &Ctx,
        plans: Vec<CasePlan>,
    ) -> Result<Option<Vec<Vid>>, SolveError> {
        for p in plans {
            if let Verdict::Run(b) | Verdict::Doubtful(b) = assess(g, ctx, &p) {
                if let Some(s) = self.run_built(g, ctx, &p, &b)? {
                    return Ok(Some(s));
                }
            }
        }
        Ok(None)
    }
}
