//! File formats and drawing.

mod planar_code;
mod svg;
mod text;

use std::path::Path;

use crate::embedding::{Dart, PlaneGraph, Vid};
use crate::error::{EmbeddingError, FormatError};

pub use planar_code::{decode_planar_code, encode_planar_code, HEADER};
pub use svg::{export_svg, tutte_layout};
pub use text::{read_text, write_text};

/// Reads planar code or the text format, told apart by the header.
pub fn read_graphs(bytes: &[u8]) -> Result<Vec<PlaneGraph>, FormatError> {
    if bytes.starts_with(HEADER) {
        return decode_planar_code(bytes);
    }
    let src = std::str::from_utf8(bytes).map_err(|_| FormatError::BadHeader)?;
    read_text(src)
}

pub fn read_file(path: &Path) -> Result<Vec<PlaneGraph>, FormatError> {
    read_graphs(&std::fs::read(path)?)
}

/// Makes the face with vertex cycle `cycle` (either direction) the outer face.
pub fn set_outer_cycle(g: &mut PlaneGraph, cycle: &[Vid]) -> Result<(), EmbeddingError> {
    let k = cycle.len();
    for f in g.faces() {
        let walk: Vec<Vid> = f.iter().map(|d| d.0).collect();
        if walk.len() != k {
            continue;
        }
        let rev: Vec<Vid> = cycle.iter().rev().copied().collect();
        let hit = (0..k).any(|i| {
            (0..k).all(|j| walk[(i + j) % k] == cycle[j])
                || (0..k).all(|j| walk[(i + j) % k] == rev[j])
        });
        if hit {
            let d: Dart = f[0];
            g.set_outer_dart(d);
            return Ok(());
        }
    }
    Err(EmbeddingError::NoSuchFace)
}
