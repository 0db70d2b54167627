//! Constructions outside the planar pipeline.

mod bandwidth;
mod complete;
mod stretch;

pub use bandwidth::{
    bandwidth_base_drawing, bandwidth_of_ordering, draw_bandwidth, erdos_points,
    exact_bandwidth_small, is_prime, rcm_ordering, smallest_prime_gt, BandwidthOrdering,
    EXACT_BANDWIDTH_LIMIT,
};
pub use complete::{draw_complete_convex, polygon_resolution, CompleteParams};
pub use stretch::{edge_spans, min_stretch_factors, stretch, StretchFactors};
