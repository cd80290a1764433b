//! Jump residuals, the weighted lower estimators and their short-edge
//! parts, upper estimators, node classification, anisotropic paths, and
//! numerical checks of the identities the lower bounds rest on.

mod checks;
mod classify;
mod estimate;
mod jumps;
mod paths;
mod region;

pub use checks::{
    bubble_bound_check, jump_difference_at, jump_difference_check, path_jump, vertex_identity_residual,
    BubbleBounds, JumpDifference, NodeRatio, VertexIdentity,
};
pub use classify::{classify_nodes, ClassifyOptions, NodeClasses};
pub use estimate::{
    estimator_report, local_error, lower_estimator, short_edges, upper_estimator, EstimatorOptions,
    EstimatorReport, Indicators, LowerEstimate, UpperEstimate, UpperKind, VolumeSource,
};
pub use jumps::{edge_normal, edge_weight, jump_residuals, jumps_from_gradients, EdgeJumps, Weight};
pub use paths::{extract_paths, AnisoPath, PathOptions};
pub use region::Region;
