//! Boundary curves of the projections `S03`, `S12`, `S13`, `S23`, region
//! membership with signed slack, and boundary polylines.

mod curves;
mod region;
mod sample;

pub use curves::{
    delta_a, g_r, g_r_inverse, g_r_params, g_t, g_t_branch, g_t_prime, h_a, h_a3_inverse, h_b,
    h_b3_inverse, s03_alpha, s03_branches, s03_crossover, s03_upper, CurveParams, GtBranch,
};
pub use region::{
    membership, membership_all, membership_pair, Constraint, MembershipVerdict, RegionId, Status,
};
pub use sample::{sample_boundary, BoundaryPoint};

/// Default membership tolerance for limit objects.
pub const DEFAULT_TOL: f64 = 1e-9;
