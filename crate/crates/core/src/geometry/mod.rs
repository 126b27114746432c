//! Points, the Jacobian criterion, projection from `P0`, and curve invariants.

mod curve;
mod jacobian;
mod point;
mod projection;

pub use curve::{curve_summary, genus, CurveSummary};
pub use jacobian::{
    is_nonsingular_at, is_smooth_projective_curve, jacobian, jacobian_rank_at, Smoothness, SmoothnessConfig,
};
pub use point::{point_on_variety, ProjectivePoint};
pub use projection::{fiber_over_coordinate_point, project_from_p0, FiberResult};
