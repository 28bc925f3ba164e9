//! Densities of the four 3-vertex graphs in finite graphs and step graphons.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised around the
//! four 2-dimensional projections `S03`, `S12`, `S13` and `S23` of the set of
//! achievable 3-vertex density profiles `(d0, d1, d2, d3)`, where `dk` is the
//! density of the 3-vertex graph with `k` edges:
//!
//! * [`graph`], [`census`] and [`graphon`] compute exact profiles of finite
//!   graphs (fast counting identities plus a brute-force oracle) and of step
//!   graphons (exact limit densities), and sample W-random graphs.
//! * [`boundary`] evaluates and inverts every boundary curve, decides region
//!   membership with a signed slack and samples the boundary polylines.
//! * [`constructions`] builds the extremal families both as step graphons and
//!   as finite graphs.
//! * [`optimizer`] solves the six-variable maximisation that certifies the
//!   concave part of the `S13` boundary, with an independent grid oracle.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boundary;
pub mod census;
pub mod constructions;
mod error;
pub mod graph;
pub mod graphon;
pub mod numeric;
pub mod optimizer;
pub mod rng;

pub use crate::boundary::{Constraint, MembershipVerdict, RegionId};
pub use crate::census::{DensityVector, TripleCensus};
pub use crate::error::{Error, Result};
pub use crate::graph::Graph;
pub use crate::graphon::StepGraphon;
