use crate::embedding::{PlaneGraph, Vid};
use crate::error::OracleError;

use super::outerplanar;

/// Largest graph the branch-and-bound search accepts by default.
pub const DEFAULT_CAP: usize = 26;

#[derive(Clone, Debug, Default)]
pub struct DomConstraints {
    /// Vertices that must be in the set.
    pub must: Vec<Vid>,
    /// Vertices that need not be dominated.
    pub exempt: Vec<Vid>,
    /// Vertices that may not be in the set.
    pub forbid: Vec<Vid>,
}

impl DomConstraints {
    pub fn exempt(v: &[Vid]) -> Self {
        DomConstraints {
            exempt: v.to_vec(),
            ..Default::default()
        }
    }

    pub fn must_exempt(must: &[Vid], exempt: &[Vid]) -> Self {
        DomConstraints {
            must: must.to_vec(),
            exempt: exempt.to_vec(),
            forbid: vec![],
        }
    }
}

pub fn is_dominating(g: &PlaneGraph, set: &[Vid], exempt: &[Vid]) -> bool {
    let mut dom = vec![false; g.capacity()];
    for &s in set {
        if !g.is_alive(s) {
            return false;
        }
        dom[s as usize] = true;
        for &w in g.neighbors(s) {
            dom[w as usize] = true;
        }
    }
    for &e in exempt {
        if (e as usize) < dom.len() {
            dom[e as usize] = true;
        }
    }
    g.vertices().all(|v| dom[v as usize])
}

/// Vertices not dominated by `set`.
pub fn undominated(g: &PlaneGraph, set: &[Vid]) -> Vec<Vid> {
    let mut dom = vec![false; g.capacity()];
    for &s in set {
        dom[s as usize] = true;
        for &w in g.neighbors(s) {
            dom[w as usize] = true;
        }
    }
    g.vertices().filter(|&v| !dom[v as usize]).collect()
}

struct Masks {
    ids: Vec<Vid>,
    closed: Vec<u64>,
    need: u64,
    must: u64,
    allowed: u64,
}

fn masks(g: &PlaneGraph, c: &DomConstraints) -> Masks {
    let ids: Vec<Vid> = g.vertices().collect();
    let mut idx = vec![usize::MAX; g.capacity()];
    for (i, &v) in ids.iter().enumerate() {
        idx[v as usize] = i;
    }
    let closed = ids
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << i, |m, &w| m | 1u64 << idx[w as usize])
        })
        .collect();
    let full = if ids.len() == 64 {
        u64::MAX
    } else {
        (1u64 << ids.len()) - 1
    };
    let bit = |vs: &[Vid]| {
        vs.iter()
            .filter(|v| g.is_alive(**v))
            .fold(0u64, |m, &v| m | 1u64 << idx[v as usize])
    };
    Masks {
        need: full & !bit(&c.exempt),
        must: bit(&c.must),
        allowed: full & !bit(&c.forbid),
        closed,
        ids,
    }
}

struct Search<'a> {
    closed: &'a [u64],
    best: usize,
    best_set: u64,
}

impl Search<'_> {
    fn run(&mut self, und: u64, chosen: u64, count: usize, allowed: u64) {
        if und == 0 {
            if count < self.best {
                self.best = count;
                self.best_set = chosen;
            }
            return;
        }
        if count + 1 >= self.best {
            return;
        }
        let mut max_cover = 0;
        let mut bits = allowed;
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            max_cover = max_cover.max((self.closed[y] & und).count_ones());
        }
        if max_cover == 0 {
            return;
        }
        let lb = und.count_ones().div_ceil(max_cover);
        if count + lb as usize >= self.best {
            return;
        }
        // branch on the undominated vertex with the fewest possible dominators
        let mut pick = usize::MAX;
        let mut pick_opts = u32::MAX;
        let mut bits = und;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let opts = (self.closed[x] & allowed).count_ones();
            if opts < pick_opts {
                pick_opts = opts;
                pick = x;
            }
        }
        if pick_opts == 0 {
            return;
        }
        let mut cands: Vec<usize> = Vec::with_capacity(pick_opts as usize);
        let mut bits = self.closed[pick] & allowed;
        while bits != 0 {
            cands.push(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        cands.sort_by_key(|&y| std::cmp::Reverse((self.closed[y] & und).count_ones()));
        let mut allowed = allowed;
        for y in cands {
            self.run(
                und & !self.closed[y],
                chosen | 1u64 << y,
                count + 1,
                allowed,
            );
            // later branches may assume y is out
            allowed &= !(1u64 << y);
        }
    }
}

fn covered(closed: &[u64], set: u64) -> u64 {
    let mut m = 0;
    let mut bits = set;
    while bits != 0 {
        m |= closed[bits.trailing_zeros() as usize];
        bits &= bits - 1;
    }
    m
}

/// Smallest size of a set containing `chosen`, drawn from `allowed`, that
/// dominates `need`; `None` if none has size below `limit`.
fn min_size(
    closed: &[u64],
    need: u64,
    chosen: u64,
    allowed: u64,
    limit: usize,
) -> Option<(usize, u64)> {
    let und = need & !covered(closed, chosen);
    let mut s = Search {
        closed,
        best: limit,
        best_set: 0,
    };
    s.run(und, chosen, chosen.count_ones() as usize, allowed);
    (s.best < limit).then_some((s.best, s.best_set))
}

/// Lexicographically smallest minimum dominating set under the constraints.
pub fn min_dominating_set(g: &PlaneGraph, c: &DomConstraints) -> Result<Vec<Vid>, OracleError> {
    min_dominating_set_capped(g, c, DEFAULT_CAP)
}

pub fn min_dominating_set_capped(
    g: &PlaneGraph,
    c: &DomConstraints,
    cap: usize,
) -> Result<Vec<Vid>, OracleError> {
    if g.n() > cap.min(64) {
        if outerplanar::applies(g) {
            return outerplanar::min_dominating_set(g, c);
        }
        return Err(OracleError::TooLarge { n: g.n(), cap });
    }
    let m = masks(g, c);
    if m.must & !m.allowed != 0 {
        return Err(OracleError::Infeasible);
    }
    let n = m.ids.len();
    let Some((k, _)) = min_size(&m.closed, m.need, m.must, m.allowed, n + 1) else {
        return Err(OracleError::Infeasible);
    };
    let mut chosen = m.must;
    let mut allowed = m.allowed;
    for i in 0..n {
        if chosen.count_ones() as usize == k {
            break;
        }
        if chosen >> i & 1 == 1 || allowed >> i & 1 == 0 {
            continue;
        }
        if min_size(&m.closed, m.need, chosen | 1u64 << i, allowed, k + 1).is_some() {
            chosen |= 1u64 << i;
        } else {
            allowed &= !(1u64 << i);
        }
    }
    debug_assert_eq!(m.need & !covered(&m.closed, chosen), 0);
    Ok((0..n)
        .filter(|&i| chosen >> i & 1 == 1)
        .map(|i| m.ids[i])
        .collect())
}

/// Size of a minimum set under the constraints, without the lexicographic pass.
pub fn min_size_under(g: &PlaneGraph, c: &DomConstraints) -> Result<usize, OracleError> {
    min_size_capped(g, c, DEFAULT_CAP)
}

pub fn min_size_capped(
    g: &PlaneGraph,
    c: &DomConstraints,
    cap: usize,
) -> Result<usize, OracleError> {
    if g.n() > cap.min(64) {
        if outerplanar::applies(g) {
            return outerplanar::min_dominating_set(g, c).map(|s| s.len());
        }
        return Err(OracleError::TooLarge { n: g.n(), cap });
    }
    let m = masks(g, c);
    if m.must & !m.allowed != 0 {
        return Err(OracleError::Infeasible);
    }
    min_size(&m.closed, m.need, m.must, m.allowed, m.ids.len() + 1)
        .map(|r| r.0)
        .ok_or(OracleError::Infeasible)
}

/// Any minimum set under the constraints (cheaper than the lexicographic one).
pub fn any_min_set(
    g: &PlaneGraph,
    c: &DomConstraints,
    cap: usize,
) -> Result<Vec<Vid>, OracleError> {
    if g.n() > cap.min(64) {
        if outerplanar::applies(g) {
            return outerplanar::min_dominating_set(g, c);
        }
        return Err(OracleError::TooLarge { n: g.n(), cap });
    }
    let m = masks(g, c);
    if m.must & !m.allowed != 0 {
        return Err(OracleError::Infeasible);
    }
    let n = m.ids.len();
    let (_, set) =
        min_size(&m.closed, m.need, m.must, m.allowed, n + 1).ok_or(OracleError::Infeasible)?;
    Ok((0..n)
        .filter(|&i| set >> i & 1 == 1)
        .map(|i| m.ids[i])
        .collect())
}

pub fn domination_number(g: &PlaneGraph) -> Result<usize, OracleError> {
    min_size_under(g, &DomConstraints::default())
}

/// Whether a dominating set of size at most `k` exists. Works past the
/// default cap, since a small `k` keeps the search shallow.
pub fn has_dominating_set_of_size(g: &PlaneGraph, k: usize, c: &DomConstraints) -> bool {
    assert!(g.n() <= 64);
    let m = masks(g, c);
    min_size(&m.closed, m.need, m.must, m.allowed, k + 1).is_some()
}
