//! Generic reductions tried when no specific case produced a checked set.

use std::collections::HashSet;

use crate::embedding::{PlaneGraph, Vid};

use super::plan::{cover, del, CasePlan};
use super::polygon::deletable_edges;
use super::{CaseId, Ctx, SolveError, Solver};

/// Take an outer vertex `w` into the set, delete it with some of its
/// neighbours and cover the rest.
fn cover_plans(g: &PlaneGraph) -> Vec<CasePlan> {
    let on = g.boundary_flags();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in g.outer_walk() {
        if !seen.insert(w) {
            continue;
        }
        let nb = g.neighbors(w).to_vec();
        let mut closed = nb.clone();
        closed.push(w);
        out.push(CasePlan::new(
            CaseId::FallbackCover,
            vec![del(&closed)],
            vec![w],
        ));
        for keep in [
            |_: &PlaneGraph, _: Vid, on: bool| on,
            |g: &PlaneGraph, y: Vid, _: bool| g.degree(y) > 3,
        ] {
            let mut gone = vec![w];
            let mut rest = Vec::new();
            for &y in &nb {
                if keep(g, y, on[y as usize]) {
                    rest.push(y);
                } else {
                    gone.push(y);
                }
            }
            out.push(CasePlan::new(
                CaseId::FallbackCover,
                vec![del(&gone), cover(&rest)],
                vec![w],
            ));
        }
    }
    out
}

pub(super) fn run(sv: &mut Solver, g: &PlaneGraph, limit: usize) -> Result<Vec<Vid>, SolveError> {
    sv.stats.fallbacks += 1;
    let ctx = Ctx::of(g, limit);
    let mut doubtful = Vec::new();
    let mut plans = deletable_edges(g, CaseId::FallbackEdge);
    plans.extend(cover_plans(g));
    if let Some(s) = sv.try_plans(g, &ctx, plans, &mut doubtful)? {
        return Ok(s);
    }
    if let Some(s) = sv.try_doubtful(g, &ctx, doubtful)? {
        return Ok(s);
    }
    if g.n() <= sv.cfg.fallback_oracle {
        return sv.oracle(g, CaseId::FallbackOracle);
    }
    Err(SolveError::NoPlan {
        n: g.n(),
        trace: sv.trace.clone(),
    })
}
