//! Embedded-manifold representation, reach validation, slabs, tubes, and the
//! Hausdorff metric engine.

mod distance;
mod grid;
mod hausdorff;
mod kdtree;
mod manifold;
mod point;
mod reach;
mod slab;

pub use distance::{discretize_manifold, distance_to_manifold, manifold_hausdorff, BoundedValue};
pub use grid::Grid;
pub use hausdorff::{directed_hausdorff, hausdorff_distance};
pub use kdtree::KdTree;
pub use manifold::{families, Chart, ParametricManifold};
pub use point::PointCloud;
pub use reach::{reach_validate, ReachReport};
pub use slab::{build_slab, slab_membership, Slab};
