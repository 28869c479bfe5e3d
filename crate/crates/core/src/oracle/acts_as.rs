use crate::embedding::{PlaneGraph, Vid};
use crate::error::OracleError;

use super::exact::{min_size_under, DomConstraints};

/// How a vertex-rooted graph can be dominated at its rooted optimum `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexActs {
    /// Some optimum contains the root.
    AB,
    /// Some optimum dominates the root, none contains it.
    LR,
    /// Every optimum leaves the root undominated.
    Nope,
}

/// How an edge-rooted graph `(u, v)` can be dominated at its rooted optimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeActs {
    /// An optimum contains both roots.
    APlusB,
    /// Optima exist containing `u` and containing `v`.
    Or,
    A,
    B,
    /// One extra vertex buys both roots in the set; an optimum dominates both.
    And,
    LPlusR,
    /// Optima dominate either root, one extra buys both in.
    Octa,
    LOrR,
    L,
    R,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexRooted {
    pub s: usize,
    pub acts: VertexActs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeRooted {
    pub s: usize,
    pub acts: EdgeActs,
}

pub fn acts_as_vertex(g: &PlaneGraph, u: Vid) -> Result<VertexRooted, OracleError> {
    let s = min_size_under(g, &DomConstraints::exempt(&[u]))?;
    let acts = if min_size_under(g, &DomConstraints::must_exempt(&[u], &[u]))? == s {
        VertexActs::AB
    } else if min_size_under(g, &DomConstraints::default())? == s {
        VertexActs::LR
    } else {
        VertexActs::Nope
    };
    Ok(VertexRooted { s, acts })
}

pub fn acts_as_edge(g: &PlaneGraph, u: Vid, v: Vid) -> Result<EdgeRooted, OracleError> {
    let both = [u, v];
    let q = |c: DomConstraints| min_size_under(g, &c);
    let s = q(DomConstraints::exempt(&both))?;
    let both_in = q(DomConstraints::must_exempt(&both, &both))?;
    let u_in = q(DomConstraints::must_exempt(&[u], &both))?;
    let v_in = q(DomConstraints::must_exempt(&[v], &both))?;
    let full = q(DomConstraints::default())?;
    let dom_u = q(DomConstraints::exempt(&[v]))?;
    let dom_v = q(DomConstraints::exempt(&[u]))?;
    let acts = if both_in == s {
        EdgeActs::APlusB
    } else if u_in == s && v_in == s {
        EdgeActs::Or
    } else if u_in == s {
        EdgeActs::A
    } else if v_in == s {
        EdgeActs::B
    } else if full == s && both_in <= s + 1 {
        EdgeActs::And
    } else if full == s {
        EdgeActs::LPlusR
    } else if dom_u == s && dom_v == s && both_in <= s + 1 {
        EdgeActs::Octa
    } else if dom_u == s && dom_v == s {
        EdgeActs::LOrR
    } else if dom_u == s {
        EdgeActs::L
    } else if dom_v == s {
        EdgeActs::R
    } else {
        EdgeActs::None
    };
    Ok(EdgeRooted { s, acts })
}

/// Smallest rooted value `phi` (in half-units) that the classification allows.
pub fn vertex_floor_half(r: VertexRooted) -> i64 {
    let base = 7 * r.s as i64;
    base + match r.acts {
        VertexActs::AB => -2,
        VertexActs::LR => 0,
        VertexActs::Nope => 3,
    }
}

pub fn edge_floor_half(r: EdgeRooted) -> i64 {
    let base = 7 * r.s as i64;
    base + match r.acts {
        EdgeActs::APlusB | EdgeActs::Or => -4,
        EdgeActs::A | EdgeActs::B => -2,
        EdgeActs::And | EdgeActs::LPlusR | EdgeActs::Octa | EdgeActs::LOrR => 0,
        EdgeActs::L | EdgeActs::R => 1,
        EdgeActs::None => 3,
    }
}
