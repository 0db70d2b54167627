//! Convex drawing of `K_n`: corners of a regular `n`-gon of radius `2n^2`,
//! rounded to the nearest grid points.

use crate::drawing::{GridDrawing, Point};
use crate::graph::Graph;
use crate::verify::{check_convex_position, check_disk_link};
use crate::{Error, Result};

/// Largest `n` for which the rounding is trusted to double precision.
pub const MAX_COMPLETE: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompleteParams {
    pub n: usize,
    /// `2 n^2`
    pub r: i64,
    pub start_angle: f64,
}

impl CompleteParams {
    pub fn new(n: usize) -> Self {
        CompleteParams {
            n,
            r: 2 * (n as i64) * (n as i64),
            start_angle: 0.0,
        }
    }
}

/// Distance between a corner of the unrounded polygon and the chord joining
/// its two neighbours: `r (1 - cos(2 pi / n))`.
pub fn polygon_resolution(n: usize) -> f64 {
    let r = CompleteParams::new(n).r as f64;
    r * (1.0 - (2.0 * std::f64::consts::PI / n as f64).cos())
}

/// Places vertex `i` at the grid point nearest to `r (cos(2 pi i/n),
/// sin(2 pi i/n))` (halves away from zero), translated to non-negative
/// coordinates. The result is checked for strict convexity and the
/// disk-link property before it is returned.
pub fn draw_complete_convex(n: usize) -> Result<GridDrawing> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if n > MAX_COMPLETE {
        return Err(Error::TooLarge {
            n,
            limit: MAX_COMPLETE,
        });
    }
    let params = CompleteParams::new(n);
    let r = params.r as f64;
    let pts: Vec<Point> = (0..n)
        .map(|i| {
            let a = params.start_angle + 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            Point::new((r * a.cos()).round() as i64, (r * a.sin()).round() as i64)
        })
        .collect();
    let mut sorted: Vec<(Point, usize)> = pts.iter().copied().zip(0..).collect();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::DegenerateRounding(
            w[0].1.min(w[1].1),
            w[0].1.max(w[1].1),
        ));
    }
    let d = GridDrawing::new(pts).normalized();

    if !check_convex_position(&d) {
        return Err(Error::CertificationFailed(
            "rounded polygon is not strictly convex".into(),
        ));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    let report = check_disk_link(&g, &d)?;
    if !report.is_disk_link {
        return Err(Error::CertificationFailed(format!(
            "rounded polygon has squared resolution {}",
            report
                .min_res_sq
                .map_or("none".to_string(), |r| r.to_string())
        )));
    }
    Ok(d)
}
