//! Linear-time minimum dominating set for near-triangulations with every
//! vertex on the outer face, by dynamic programming over the dual tree.

use std::collections::HashMap;

use crate::embedding::{blocks_of, Dart, PlaneGraph, Vid};
use crate::error::OracleError;

use super::exact::DomConstraints;

const IN: usize = 0;
/// Not chosen, dominated from strictly inside the sub-polygon.
const DOM: usize = 1;
/// Not chosen, no requirement.
const NOT: usize = 2;
const INF: u32 = u32::MAX / 4;

type Table = [[u32; 3]; 3];

/// True for 2-connected graphs whose vertices all lie on the outer face
/// and whose bounded faces are triangles.
pub fn applies(g: &PlaneGraph) -> bool {
    if g.n() < 3 {
        return false;
    }
    let on = g.boundary_flags();
    if g.vertices().any(|v| !on[v as usize]) {
        return false;
    }
    if g.outer_face().len() != g.n() {
        return false;
    }
    // a Hamiltonian outer cycle with n-3 chords means all bounded faces are triangles
    g.m() == 2 * g.n() - 3 && blocks_of(g).cut_vertices.is_empty()
}

#[derive(Clone, Copy)]
enum Choice {
    Leaf,
    /// apex chosen, with the child states for a and b
    In {
        la: usize,
        rb: usize,
    },
    Out {
        la: usize,
        lc: usize,
        rc: usize,
        rb: usize,
    },
}

struct Node {
    a: Vid,
    b: Vid,
    apex: Option<Vid>,
    left: usize,
    right: usize,
    table: Table,
    choice: [[Choice; 3]; 3],
}

pub fn min_dominating_set(g: &PlaneGraph, c: &DomConstraints) -> Result<Vec<Vid>, OracleError> {
    if !applies(g) {
        return Err(OracleError::TooLarge { n: g.n(), cap: 0 });
    }
    let cap = g.capacity();
    let mut exempt = vec![false; cap];
    let mut must = vec![false; cap];
    let mut forbid = vec![false; cap];
    for &v in &c.exempt {
        exempt[v as usize] = true;
    }
    for &v in &c.must {
        must[v as usize] = true;
    }
    for &v in &c.forbid {
        forbid[v as usize] = true;
    }
    // apex of the bounded triangle on each side of an edge, keyed by the dart with that triangle on its left
    let outer = g.outer_face();
    let outer_set: std::collections::HashSet<Dart> = outer.iter().copied().collect();
    let mut apex: HashMap<(Vid, Vid), Vid> = HashMap::new();
    for v in g.vertices() {
        for &w in g.neighbors(v) {
            let d = Dart(v, w);
            if outer_set.contains(&d) {
                continue;
            }
            apex.insert((v, w), g.pred(w, v));
        }
    }
    let root = outer[0];
    // the root dart's bounded side is the reverse dart
    let mut nodes: Vec<Node> = Vec::with_capacity(2 * g.n());
    let mut stack = vec![(root.1, root.0, usize::MAX, false)];
    // build nodes in pre-order, then evaluate in reverse
    while let Some((a, b, parent, is_right)) = stack.pop() {
        let id = nodes.len();
        let ap = apex.get(&(a, b)).copied();
        nodes.push(Node {
            a,
            b,
            apex: ap,
            left: usize::MAX,
            right: usize::MAX,
            table: [[INF; 3]; 3],
            choice: [[Choice::Leaf; 3]; 3],
        });
        if parent != usize::MAX {
            if is_right {
                nodes[parent].right = id;
            } else {
                nodes[parent].left = id;
            }
        }
        if let Some(x) = ap {
            stack.push((a, x, id, false));
            stack.push((x, b, id, true));
        }
    }
    let allow_in = |v: Vid| !forbid[v as usize];
    let allow_out = |v: Vid| !must[v as usize];
    for i in (0..nodes.len()).rev() {
        let Some(x) = nodes[i].apex else {
            let mut t = [[INF; 3]; 3];
            for sa in [IN, NOT] {
                for sb in [IN, NOT] {
                    t[sa][sb] = 0;
                }
            }
            nodes[i].table = t;
            continue;
        };
        let l = nodes[nodes[i].left].table;
        let r = nodes[nodes[i].right].table;
        let mut t = [[INF; 3]; 3];
        let mut ch = [[Choice::Leaf; 3]; 3];
        for sa in 0..3 {
            for sb in 0..3 {
                if allow_in(x) {
                    let la = if sa == IN { IN } else { NOT };
                    let rb = if sb == IN { IN } else { NOT };
                    let cost = 1 + l[la][IN] + r[IN][rb];
                    if cost < t[sa][sb] {
                        t[sa][sb] = cost;
                        ch[sa][sb] = Choice::In { la, rb };
                    }
                }
                if allow_out(x) {
                    for lc in [DOM, NOT] {
                        for rc in [DOM, NOT] {
                            if !(exempt[x as usize]
                                || sa == IN
                                || sb == IN
                                || lc == DOM
                                || rc == DOM)
                            {
                                continue;
                            }
                            let cost = l[sa][lc] + r[rc][sb];
                            if cost < t[sa][sb] {
                                t[sa][sb] = cost;
                                ch[sa][sb] = Choice::Out {
                                    la: sa,
                                    lc,
                                    rc,
                                    rb: sb,
                                };
                            }
                        }
                    }
                }
            }
        }
        nodes[i].table = t;
        nodes[i].choice = ch;
    }
    let (ra, rb) = (nodes[0].a, nodes[0].b);
    let ok_state = |v: Vid, s: usize| if s == IN { allow_in(v) } else { allow_out(v) };
    let mut best = (INF, IN, IN);
    for sa in 0..3 {
        for sb in 0..3 {
            if !ok_state(ra, sa) || !ok_state(rb, sb) {
                continue;
            }
            let dom_a = exempt[ra as usize] || sa != NOT || sb == IN;
            let dom_b = exempt[rb as usize] || sb != NOT || sa == IN;
            if !dom_a || !dom_b {
                continue;
            }
            let cost = nodes[0].table[sa][sb] + (sa == IN) as u32 + (sb == IN) as u32;
            if cost < best.0 {
                best = (cost, sa, sb);
            }
        }
    }
    if best.0 >= INF {
        return Err(OracleError::Infeasible);
    }
    let mut out = Vec::new();
    if best.1 == IN {
        out.push(ra);
    }
    if best.2 == IN {
        out.push(rb);
    }
    let mut work = vec![(0usize, best.1, best.2)];
    while let Some((i, sa, sb)) = work.pop() {
        match nodes[i].choice[sa][sb] {
            Choice::Leaf => {}
            Choice::In { la, rb } => {
                out.push(nodes[i].apex.unwrap());
                work.push((nodes[i].left, la, IN));
                work.push((nodes[i].right, IN, rb));
            }
            Choice::Out { la, lc, rc, rb } => {
                work.push((nodes[i].left, la, lc));
                work.push((nodes[i].right, rc, rb));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}
