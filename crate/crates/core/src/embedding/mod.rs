mod blocks;
mod canon;
mod graph;
mod view;

pub use blocks::{blocks_of, BlockCutTree};
pub use canon::{plane_code, sphere_code, CanonCode};
pub use graph::{ordered, Dart, PlaneGraph, Vid};
pub use view::{
    check_skeletal, components_without, split, structure, validate, Kind, Roots, SkeletalView,
    SplitAt, Structure, ValidationError, Violation,
};
