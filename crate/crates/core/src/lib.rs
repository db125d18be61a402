//! Geometry engine for forming triangular patterns with three mobile robots.
//!
//! Given initial robot positions `R` and a target pattern `P` (both triangles),
//! [`solver::solve`] computes the formation `Q` similar to `P` that minimizes the
//! maximum distance any robot travels, together with the optimal travel distance
//! `d*`, the robot-to-vertex assignment, and the focal point of the motion.
//!
//! Supporting pieces:
//!
//! - [`geometry`] — points, circles, validated triangles, vertex permutations.
//! - [`replication`] — rigidly similar copies of a pattern pinned to anchor
//!   points, and the circles traced by their free vertex.
//! - [`metric`] — the `tau` distance between triangle shapes (zero iff similar).
//! - [`oracle`] — an independent brute-force search over similarity transforms,
//!   used to cross-check the analytic solver.
//! - [`simulator`] — synchronous look-compute-move execution in bounded steps.
//! - [`instances`] — seeded random problem instances for verification runs.

pub mod error;
pub mod geometry;
pub mod instances;
pub mod metric;
pub mod oracle;
pub mod replication;
pub mod simulator;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{Circle, Orientation, Permutation3, Point, Triangle};
pub use solver::{FocalPoint, RigidSolution, Solution};
