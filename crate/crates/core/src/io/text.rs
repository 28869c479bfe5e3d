//! Plain text: a line with `n`, one line `v: w1 w2 ...` per vertex giving
//! its counter-clockwise rotation, then `outer: ...` with the outer walk.
//! Several graphs may follow each other. `#` starts a comment.

use std::fmt::Write;

use crate::embedding::{PlaneGraph, Vid};
use crate::error::FormatError;

pub fn write_text(g: &PlaneGraph) -> String {
    let (c, _) = g.compacted();
    let mut s = format!("{}\n", c.n());
    for v in c.vertices() {
        let r: Vec<String> = c.neighbors(v).iter().map(|w| w.to_string()).collect();
        writeln!(s, "{v}: {}", r.join(" ")).unwrap();
    }
    let walk: Vec<String> = c.outer_walk().iter().map(|w| w.to_string()).collect();
    writeln!(s, "outer: {}", walk.join(" ")).unwrap();
    s
}

fn err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

fn ids(line: usize, s: &str) -> Result<Vec<Vid>, FormatError> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<Vid>()
                .map_err(|_| err(line, format!("bad vertex id {t:?}")))
        })
        .collect()
}

pub fn read_text(src: &str) -> Result<Vec<PlaneGraph>, FormatError> {
    let lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut out = Vec::new();
    let mut cur: Option<(usize, Vec<Option<(usize, Vec<Vid>)>>)> = None;
    let mut last = 0;
    for (no, l) in lines {
        last = no;
        let Some((n, rot)) = cur.as_mut() else {
            let n: usize = l
                .parse()
                .map_err(|_| err(no, format!("expected vertex count, got {l:?}")))?;
            if n < 2 {
                return Err(err(no, format!("need at least two vertices, got {n}")));
            }
            cur = Some((n, vec![None; n]));
            continue;
        };
        let (head, rest) = l
            .split_once(':')
            .ok_or_else(|| err(no, "expected `id: neighbours` or `outer: walk`"))?;
        let head = head.trim();
        if head == "outer" {
            let walk = ids(no, rest)?;
            let mut full = Vec::with_capacity(*n);
            for (v, r) in rot.iter().enumerate() {
                let (_, r) = r
                    .as_ref()
                    .ok_or_else(|| err(no, format!("vertex {v} has no rotation line")))?;
                full.push(r.clone());
            }
            for (v, r) in rot.iter().enumerate() {
                let (vl, r) = r.as_ref().unwrap();
                for &w in r {
                    if w as usize >= *n {
                        return Err(err(*vl, format!("vertex {w} out of range 0..{n}")));
                    }
                    if !full[w as usize].contains(&(v as Vid)) {
                        return Err(err(*vl, format!("{v} lists {w} but {w} does not list {v}")));
                    }
                }
            }
            let g = PlaneGraph::from_rotations(full, Some(&walk))
                .map_err(|e| err(no, e.to_string()))?;
            out.push(g);
            cur = None;
            continue;
        }
        let v: usize = head
            .parse()
            .map_err(|_| err(no, format!("bad vertex id {head:?}")))?;
        if v >= *n {
            return Err(err(no, format!("vertex {v} out of range 0..{n}")));
        }
        if rot[v].is_some() {
            return Err(err(no, format!("second rotation line for vertex {v}")));
        }
        rot[v] = Some((no, ids(no, rest)?));
    }
    if cur.is_some() {
        return Err(err(last, "missing `outer:` line"));
    }
    Ok(out)
}
