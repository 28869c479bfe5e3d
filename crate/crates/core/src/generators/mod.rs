mod enumerate;
mod families;
mod random;
mod sporadic;

pub use enumerate::{
    all_outer_faces, edge, edge_rooted, glued_graphs, is_two_connected, k4, min_degree,
    near_triangulations, plane_triangulations, polygon_triangulations, skeletal_graphs,
    sphere_triangulations, triangle, vertex_rooted,
};
pub use families::{
    deg2cut_gadget, even_block, family, gadget10_block, gadget7_block, search_edge_gadget,
    threeconn_block, EdgeBlock, FamilyKind, FamilySpec,
};
pub use random::{random_polygon_triangulation, random_triangulation, shuffle_flips, stack_into};
pub use sporadic::{is_sporadic, octahedron, special_heptagon, sporadic, three_bifan, Sporadic};

use std::path::Path;

use crate::embedding::PlaneGraph;
use crate::error::FormatError;

/// Every graph in a planar-code or text file.
pub fn load_corpus(path: &Path) -> Result<Vec<PlaneGraph>, FormatError> {
    crate::io::read_file(path)
}
