mod acts_as;
mod exact;
mod neat;
pub mod outerplanar;

pub use acts_as::{
    acts_as_edge, acts_as_vertex, edge_floor_half, vertex_floor_half, EdgeActs, EdgeRooted,
    VertexActs, VertexRooted,
};
pub use exact::{
    any_min_set, domination_number, has_dominating_set_of_size, is_dominating, min_dominating_set,
    min_dominating_set_capped, min_size_capped, min_size_under, undominated, DomConstraints,
    DEFAULT_CAP,
};
pub(crate) use neat::strictly_covered;
pub use neat::{is_neat, neatify, neatify_toward};
