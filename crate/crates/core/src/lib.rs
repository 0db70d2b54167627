//! Disk-link drawings: straight-line grid drawings in which every vertex is an
//! open disk of diameter one centred on an integer point and no edge passes
//! within distance 1/2 of a vertex it is not incident to.
//!
//! The crate is organised around a small pipeline:
//!
//! - [`graph`], [`plane`] and [`canonical`] hold the combinatorial side:
//!   simple graphs, rotation systems, planarity embedding, triangulation and
//!   canonical orderings with their Schnyder edge colouring.
//! - [`shift`] draws maximal planar graphs with the resolution-preserving
//!   variant of the shift method in `(3n-7) x ceil((3n-7)/2)`.
//! - [`construct`] holds the non-planar constructions: coordinate stretching,
//!   the bounded-bandwidth placement and the convex drawing of `K_n`.
//! - [`verify`] certifies drawings with exact integer arithmetic.
//! - [`generate`] builds the graph families used by tests and the CLI.

pub mod canonical;
pub mod construct;
pub mod drawing;
mod error;
pub mod generate;
pub mod graph;
mod lr;
pub mod plane;
pub mod rational;
pub mod shift;
pub mod verify;

pub use canonical::{
    canonical_order, is_canonical_order, validate_canonical_order, CanonicalOrder, EdgeColor,
    OrderViolation,
};
pub use drawing::{GridDrawing, Point};
pub use error::{Error, Result};
pub use graph::Graph;
pub use plane::{embed, triangulate, PlaneGraph};
pub use rational::Rational;
pub use shift::{draw_planar, draw_plane, shift_drawing, PlanarLayout};
pub use verify::{
    check_convex_position, check_disk_link, check_planar_drawing, point_segment_dist_sq,
    verify_drawing, VerificationReport,
};
