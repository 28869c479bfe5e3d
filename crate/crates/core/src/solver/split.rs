use crate::embedding::{check_skeletal, split, structure, PlaneGraph, Roots, SplitAt, Vid};
use crate::gadgets::{insert, GadgetKind, Insert};
use crate::generators::is_sporadic;
use crate::oracle::{is_dominating, min_dominating_set, neatify, neatify_toward, DomConstraints};
use crate::penalty::penalty;

use super::rooted::RootedMode;
use super::{effective_bound, guess_acts_as, CaseId, Guess, Rooting, SolveError, Solver};

fn union(mut a: Vec<Vid>, b: impl IntoIterator<Item = Vid>) -> Vec<Vid> {
    a.extend(b);
    a.sort_unstable();
    a.dedup();
    a
}

fn host_part(g: &PlaneGraph, set: &[Vid]) -> Vec<Vid> {
    let cap = g.capacity() as Vid;
    set.iter()
        .copied()
        .filter(|&x| x < cap && g.is_alive(x))
        .collect()
}

fn vertex_guess(g: &PlaneGraph, u: Vid) -> (usize, Guess) {
    guess_acts_as(penalty(g, Roots::Vertex(u)).half_units, Rooting::Vertex)
}

impl Solver<'_> {
    fn accept(
        &mut self,
        g: &PlaneGraph,
        limit: usize,
        mark: usize,
        set: Vec<Vid>,
    ) -> Option<Vec<Vid>> {
        if set.len() <= limit && is_dominating(g, &set, &[]) {
            return Some(set);
        }
        self.trace.truncate(mark);
        self.stats.rejected += 1;
        None
    }
}

pub(super) fn bridge(
    sv: &mut Solver,
    g: &PlaneGraph,
    u: Vid,
    v: Vid,
    limit: usize,
) -> Result<Option<Vec<Vid>>, SolveError> {
    let (g1, g2) = split(g, SplitAt::Bridge(u, v)).expect("bridge found by the block scan");
    let (s1, k1) = vertex_guess(&g1, u);
    let (s2, k2) = vertex_guess(&g2, v);
    let mark = sv.trace.len();
    let set = if k1 == Guess::AB || k2 == Guess::AB {
        sv.trace.push(CaseId::BridgeForced);
        let ((ga, ra, sa), (gb, rb, sb)) = if k1 == Guess::AB {
            ((&g1, u, s1), (&g2, v, s2))
        } else {
            ((&g2, v, s2), (&g1, u, s1))
        };
        let a = sv.rooted(ga, Roots::Vertex(ra), RootedMode::ContainsRoot, sa)?;
        union(a, sv.rooted(gb, Roots::Vertex(rb), RootedMode::Rooted, sb)?)
    } else if k1 == Guess::Nope || k2 == Guess::Nope {
        sv.trace.push(CaseId::BridgeNope);
        let a = sv.rooted(&g1, Roots::Vertex(u), RootedMode::Rooted, s1)?;
        let b = sv.rooted(&g2, Roots::Vertex(v), RootedMode::Rooted, s2)?;
        union(union(a, b), [u])
    } else {
        sv.trace.push(CaseId::BridgeDominating);
        let a = sv.rooted(&g1, Roots::Vertex(u), RootedMode::Dominating, s1)?;
        union(
            a,
            sv.rooted(&g2, Roots::Vertex(v), RootedMode::Dominating, s2)?,
        )
    };
    Ok(sv.accept(g, limit, mark, set))
}

/// The side is a diamond hanging from `u` at one of its degree-2 vertices.
fn small_lr_hub(side: &PlaneGraph, u: Vid) -> Option<Vid> {
    let is_diamond = side.n() == 4 && side.m() == 5 && side.degree(u) == 2;
    is_diamond.then(|| side.neighbors(u)[0])
}

pub(super) fn cut_vertex(
    sv: &mut Solver,
    g: &PlaneGraph,
    u: Vid,
    limit: usize,
) -> Result<Option<Vec<Vid>>, SolveError> {
    let (g1, g2) = split(g, SplitAt::CutVertex(u)).expect("cut vertex found by the block scan");
    let (s1, k1) = vertex_guess(&g1, u);
    let (s2, k2) = vertex_guess(&g2, u);
    let mark = sv.trace.len();
    // checked first: covering a side fuses exactly this diamond back on
    for (side, other) in [(&g1, &g2), (&g2, &g1)] {
        let Some(hub) = small_lr_hub(side, u) else {
            continue;
        };
        sv.trace.push(CaseId::CutSmallLr);
        // the hub dominates the diamond and u, so u may go too
        let mut rest = other.clone();
        rest.delete_vertex(u);
        let mut options = vec![(*other).clone()];
        if check_skeletal(&rest, None) {
            options.push(rest);
        }
        options.sort_by_key(effective_bound);
        for h in options {
            if effective_bound(&h) + 1 > limit {
                continue;
            }
            let m2 = sv.trace.len();
            let set = union(sv.solve(&h)?, [hub]);
            if let Some(s) = sv.accept(g, limit, m2, set) {
                return Ok(Some(s));
            }
        }
        sv.trace.truncate(mark);
    }
    if k1 == Guess::Nope || k2 == Guess::Nope {
        sv.trace.push(CaseId::CutNope);
        let ((ga, sa), gb) = if k1 == Guess::Nope {
            ((&g1, s1), &g2)
        } else {
            ((&g2, s2), &g1)
        };
        let a = sv.rooted(ga, Roots::Vertex(u), RootedMode::Rooted, sa)?;
        let set = union(a, sv.solve(gb)?);
        return Ok(sv.accept(g, limit, mark, set));
    }
    if k1 == Guess::AB && k2 == Guess::AB {
        sv.trace.push(CaseId::CutBothForced);
        let a = sv.rooted(&g1, Roots::Vertex(u), RootedMode::ContainsRoot, s1)?;
        let set = union(
            a,
            sv.rooted(&g2, Roots::Vertex(u), RootedMode::ContainsRoot, s2)?,
        );
        return Ok(sv.accept(g, limit, mark, set));
    }
    sv.trace.push(CaseId::CutLr);
    let ((gl, sl), (go, so)) = if k1 == Guess::LR {
        ((&g1, s1), (&g2, s2))
    } else {
        ((&g2, s2), (&g1, s1))
    };
    let a = sv.rooted(gl, Roots::Vertex(u), RootedMode::Dominating, sl)?;
    let set = union(a, sv.rooted(go, Roots::Vertex(u), RootedMode::Rooted, so)?);
    Ok(sv.accept(g, limit, mark, set))
}

/// A side is trivial when it is a single degree-2 vertex or an edge whose
/// ends have degrees 2 and 3.
fn trivial(g: &PlaneGraph, arc: &[Vid]) -> bool {
    match arc {
        [x] => g.degree(*x) == 2,
        [x, y] => {
            let mut d = [g.degree(*x), g.degree(*y)];
            d.sort_unstable();
            d == [2, 3]
        }
        _ => false,
    }
}

/// First chord with two non-trivial sides, as (kept side, replaced side).
fn find_chord(g: &PlaneGraph) -> Option<(Vid, Vid, PlaneGraph, PlaneGraph)> {
    let st = structure(g);
    let walk = &st.boundary;
    let k = walk.len();
    let mut pos = vec![usize::MAX; g.capacity()];
    for (i, &x) in walk.iter().enumerate() {
        pos[x as usize] = i;
    }
    let on = g.boundary_flags();
    let interior = |h: &PlaneGraph| h.vertices().filter(|&x| !on[x as usize]).count();
    for &(a, b) in &st.chords {
        let (i, j) = {
            let (p, q) = (pos[a as usize], pos[b as usize]);
            (p.min(q), p.max(q))
        };
        let arc1: Vec<Vid> = walk[i + 1..j].to_vec();
        let arc2: Vec<Vid> = walk[j + 1..]
            .iter()
            .chain(walk[..i].iter())
            .copied()
            .collect();
        if arc1.len() + arc2.len() + 2 != k || trivial(g, &arc1) || trivial(g, &arc2) {
            continue;
        }
        let (p1, p2) = split(g, SplitAt::Chord(a, b)).expect("chord separates");
        let (i1, i2) = (interior(&p1), interior(&p2));
        let (keep, rep) = match (i1 > 0, i2 > 0) {
            (true, true) if p1.n() >= p2.n() => (p1, p2),
            (true, true) => (p2, p1),
            (true, false) => (p1, p2),
            (false, true) => (p2, p1),
            (false, false) => continue,
        };
        return Some((a, b, keep, rep));
    }
    None
}

pub(super) fn chord(
    sv: &mut Solver,
    g: &PlaneGraph,
    limit: usize,
) -> Result<Option<Vec<Vid>>, SolveError> {
    let Some((a, b, g1, g2)) = find_chord(g) else {
        return Ok(None);
    };
    let roots = Roots::Edge(a, b);
    let (s, kind) = guess_acts_as(penalty(&g2, roots).half_units, Rooting::Edge);
    let mark = sv.trace.len();
    match kind {
        Guess::Or => {
            sv.trace.push(CaseId::ChordOr);
            let mut h = g1.clone();
            if insert(&mut h, Insert::Attach(GadgetKind::SmallOr, a, b)).is_err() {
                return Ok(None);
            }
            let sh = neatify(&h, &sv.solve(&h)?);
            let Some(r) = [a, b].into_iter().find(|x| sh.contains(x)) else {
                sv.trace.truncate(mark);
                return Ok(None);
            };
            let s2 = sv.rooted(&g2, roots, RootedMode::ContainsGiven(r), s)?;
            let set = union(host_part(&g1, &sh), s2);
            Ok(sv.accept(g, limit, mark, set))
        }
        Guess::AOrB => {
            sv.trace.push(CaseId::ChordAOrB);
            let s2 = sv.rooted(&g2, roots, RootedMode::ContainsEither, s)?;
            let (r, o) = if s2.contains(&a) { (a, b) } else { (b, a) };
            let mut h = g1.clone();
            if insert(&mut h, Insert::Attach(GadgetKind::SmallA, r, o)).is_err() {
                return Ok(None);
            }
            let sh = neatify_toward(&h, &sv.solve(&h)?, &[r]);
            let set = union(host_part(&g1, &sh), s2);
            Ok(sv.accept(g, limit, mark, set))
        }
        Guess::LOrR | Guess::LorR => {
            let case = if kind == Guess::LOrR {
                CaseId::ChordLOrR
            } else {
                CaseId::ChordLorR
            };
            sv.trace.push(case);
            if let Some(set) = deletion_side(sv, g, &g1, &g2, a, b, s, limit)? {
                return Ok(Some(set));
            }
            sv.trace.truncate(mark);
            Ok(None)
        }
        _ => Ok(None),
    }
}

/// G2 acts as one of the L/R kinds: solve G1 (or G1 minus a root) on its
/// own and add a rooted set of G2 that covers what G1 left out.
#[allow(clippy::too_many_arguments)]
fn deletion_side(
    sv: &mut Solver,
    g: &PlaneGraph,
    g1: &PlaneGraph,
    g2: &PlaneGraph,
    a: Vid,
    b: Vid,
    s: usize,
    limit: usize,
) -> Result<Option<Vec<Vid>>, SolveError> {
    let roots = Roots::Edge(a, b);
    let half = penalty(g2, roots).half_units as i64;
    let spor = is_sporadic(g1).is_some();
    if !spor && effective_bound(g1) + s <= limit && half < RootedMode::EdgeRooted.limit(s) {
        let mark = sv.trace.len();
        let s1 = sv.solve(g1)?;
        let s2 = sv.rooted(g2, roots, RootedMode::EdgeRooted, s)?;
        if let Some(set) = sv.accept(g, limit, mark, union(s1, s2)) {
            return Ok(Some(set));
        }
    }
    if half < RootedMode::DominatesGiven(a).limit(s) {
        for x in [a, b] {
            let mut h = g1.clone();
            h.delete_vertex(x);
            if !check_skeletal(&h, None) || effective_bound(&h) + s > limit {
                continue;
            }
            let mark = sv.trace.len();
            let s1 = sv.solve(&h)?;
            let s2 = sv.rooted(g2, roots, RootedMode::DominatesGiven(x), s)?;
            if let Some(set) = sv.accept(g, limit, mark, union(s1, s2)) {
                return Ok(Some(set));
            }
        }
    }
    if half < RootedMode::DominatesEither.limit(s) && (spor || g1.n() <= sv.cfg.fallback_oracle) {
        // G1 on its own may be sporadic; excuse the root G2 dominates
        let mark = sv.trace.len();
        let s2 = sv.rooted(g2, roots, RootedMode::DominatesEither, s)?;
        let dom = |x: Vid| s2.contains(&x) || g2.neighbors(x).iter().any(|y| s2.contains(y));
        let r = if dom(a) { a } else { b };
        if let Ok(s1) = min_dominating_set(g1, &DomConstraints::exempt(&[r])) {
            if let Some(set) = sv.accept(g, limit, mark, union(s1, s2)) {
                return Ok(Some(set));
            }
        }
    }
    Ok(None)
}
