//! plantri's planar code: a header, then per graph one byte `n` and each
//! vertex's clockwise rotation as 1-based indices ended by a zero byte.

use crate::embedding::{Dart, PlaneGraph, Vid};
use crate::error::FormatError;

pub const HEADER: &[u8] = b">>planar_code<<";

/// Turns a rotation that starts at `h` between clockwise and
/// counter-clockwise order, keeping `h` first.
fn flip_keep_first(r: &[Vid]) -> Vec<Vid> {
    let mut out = Vec::with_capacity(r.len());
    if let Some((&h, rest)) = r.split_first() {
        out.push(h);
        out.extend(rest.iter().rev());
    }
    out
}

/// Picks the first traced face of maximum length as outer face.
pub(crate) fn first_longest_face(g: &mut PlaneGraph) {
    let faces = g.faces();
    let best = faces.iter().map(Vec::len).max().unwrap_or(0);
    if let Some(f) = faces.into_iter().find(|f| f.len() == best) {
        g.set_outer_dart(f[0]);
    }
}

/// Relabels so that the outer dart is `0 -> rot[0][0]`; decoding then
/// traces the outer face first and keeps it.
fn outer_first(g: &PlaneGraph) -> Vec<Vec<Vid>> {
    let (c, _) = g.compacted();
    let Dart(t, h) = c.outer_dart();
    let n = c.n() as Vid;
    let label = |v: Vid| {
        if v == t {
            0
        } else if v < t {
            v + 1
        } else {
            v
        }
    };
    let mut rot = vec![Vec::new(); n as usize];
    for v in 0..n {
        let mut r: Vec<Vid> = c.neighbors(v).to_vec();
        if v == t {
            let k = r.iter().position(|&x| x == h).unwrap();
            r.rotate_left(k);
        }
        rot[label(v) as usize] = r.into_iter().map(label).collect();
    }
    rot
}

pub fn encode_planar_code<'a>(
    graphs: impl IntoIterator<Item = &'a PlaneGraph>,
) -> Result<Vec<u8>, FormatError> {
    let mut out = HEADER.to_vec();
    for g in graphs {
        if g.n() > 255 {
            return Err(FormatError::TooLarge(g.n()));
        }
        let rot = outer_first(g);
        out.push(rot.len() as u8);
        for r in &rot {
            out.extend(flip_keep_first(r).iter().map(|&w| (w + 1) as u8));
            out.push(0);
        }
    }
    Ok(out)
}

pub fn decode_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, FormatError> {
    let body = bytes.strip_prefix(HEADER).ok_or(FormatError::BadHeader)?;
    let mut out = Vec::new();
    let mut i = 0;
    while i < body.len() {
        let n = body[i] as usize;
        i += 1;
        if n == 0 {
            return Err(FormatError::EmptyRecord);
        }
        let mut rot = Vec::with_capacity(n);
        for _ in 0..n {
            let mut r = Vec::new();
            loop {
                let &b = body.get(i).ok_or(FormatError::Truncated)?;
                i += 1;
                if b == 0 {
                    break;
                }
                if b as usize > n {
                    return Err(FormatError::IndexOutOfRange {
                        index: b as usize,
                        n,
                    });
                }
                r.push(b as Vid - 1);
            }
            rot.push(flip_keep_first(&r));
        }
        let mut g = PlaneGraph::from_rotations(rot, None)?;
        first_longest_face(&mut g);
        out.push(g);
    }
    Ok(out)
}
