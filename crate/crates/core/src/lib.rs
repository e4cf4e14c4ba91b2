//! Cheeger constants of convex polygons and the `(P, h, A)` diagram.
//!
//! The crate computes Cheeger constants exactly through inner parallel sets,
//! builds the standard shape families, samples uniform random convex polygons
//! and searches for the polygons that maximise the Cheeger constant at a given
//! perimeter.

pub mod cheeger;
pub mod diagram;
pub mod error;
pub mod families;
pub mod geom;
pub mod inner;
pub mod optimizer;
pub mod random;

pub use cheeger::{
    brooks_waksman_bound, cheeger, cheeger_regular_closed_form, lower_bound_convex, upper_bound_ngon,
    CheegerResult, ContactSegment,
};
pub use diagram::{band, classify, diagram_point, BandClass, BandSpec, Classification, DiagramPoint};
pub use error::{Error, Result};
pub use families::FamilyDescriptor;
pub use geom::{ConvexPolygon, HalfPlane, Point2};
pub use inner::{inner_parallel_profile, InnerParallelProfile};
pub use optimizer::{maximize_h, trace_upper_boundary, OptimizeResult, OptimizerOptions};
pub use random::{sample_batch, valtr_polygon, SamplerConfig};
