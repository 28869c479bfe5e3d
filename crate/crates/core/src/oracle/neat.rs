use std::collections::BTreeSet;

use crate::embedding::{PlaneGraph, Vid};

/// `N[s]` is a proper subset of `N[v]`, for adjacent `s` and `v`.
pub(crate) fn strictly_covered(g: &PlaneGraph, s: Vid, v: Vid) -> bool {
    g.degree(v) > g.degree(s) && g.neighbors(s).iter().all(|&w| w == v || g.adjacent(v, w))
}

/// Rewrites a dominating set into a neat one: no member `s` has a
/// neighbour `v` with `N[s]` strictly inside `N[v]`. Each swap moves to the
/// neighbour with the largest closed neighbourhood, smallest id on ties; a
/// member whose replacement is already present is dropped, so a set that
/// was not minimum may shrink. The result dominates whatever the input did.
pub fn neatify(g: &PlaneGraph, set: &[Vid]) -> Vec<Vid> {
    let mut s: BTreeSet<Vid> = set.iter().copied().collect();
    loop {
        let mut changed = false;
        let members: Vec<Vid> = s.iter().copied().collect();
        for x in members {
            if !s.contains(&x) {
                continue;
            }
            let best = g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&v| strictly_covered(g, x, v))
                .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
            if let Some(v) = best {
                s.remove(&x);
                s.insert(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    s.into_iter().collect()
}

pub fn is_neat(g: &PlaneGraph, set: &[Vid]) -> bool {
    set.iter()
        .all(|&x| !g.neighbors(x).iter().any(|&v| strictly_covered(g, x, v)))
}

/// Like [`neatify`], then swaps each vertex of `forced` in for a member
/// whose closed neighbourhood lies inside its own. A forced vertex can tie
/// with a gadget vertex when it has no host neighbour besides the other
/// root, and plain neatify leaves such ties alone.
pub fn neatify_toward(g: &PlaneGraph, set: &[Vid], forced: &[Vid]) -> Vec<Vid> {
    let mut s: BTreeSet<Vid> = neatify(g, set).into_iter().collect();
    for &f in forced {
        if s.contains(&f) || !g.is_alive(f) {
            continue;
        }
        let inside =
            |y: Vid| g.adjacent(y, f) && g.neighbors(y).iter().all(|&w| w == f || g.adjacent(f, w));
        if let Some(y) = s.iter().copied().find(|&y| inside(y)) {
            s.remove(&y);
            s.insert(f);
        }
    }
    s.into_iter().collect()
}
