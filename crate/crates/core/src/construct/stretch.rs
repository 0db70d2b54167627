//! Coordinate stretching: scaling x by at least twice the largest y-span and
//! y by at least twice the largest x-span pushes every vertex to distance at
//! least 1 from every non-incident edge, provided no vertex started on one.

use crate::drawing::{GridDrawing, Point};
use crate::graph::Graph;
use crate::verify::{check_disk_link_with, CheckMode, Overlap, MAX_COORD};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StretchFactors {
    pub phi_x: i64,
    pub phi_y: i64,
}

/// Largest `|dx|` and largest `|dy|` over all edges.
pub fn edge_spans(d: &GridDrawing, g: &Graph) -> Result<(i64, i64)> {
    let pts = d.complete(g.n())?;
    Ok(g.edges().iter().fold((0, 0), |(sx, sy), &(u, v)| {
        (
            sx.max((pts[u].x - pts[v].x).abs()),
            sy.max((pts[u].y - pts[v].y).abs()),
        )
    }))
}

/// `(max(1, 2 sigma_y), max(1, 2 sigma_x))`.
pub fn min_stretch_factors(d: &GridDrawing, g: &Graph) -> Result<StretchFactors> {
    let (sx, sy) = edge_spans(d, g)?;
    Ok(StretchFactors {
        phi_x: (2 * sy).max(1),
        phi_y: (2 * sx).max(1),
    })
}

/// Maps `(x, y)` to `(x * phi_x, y * phi_y)` after checking the factors and
/// that no vertex lies on a non-incident edge.
pub fn stretch(d: &GridDrawing, g: &Graph, f: StretchFactors) -> Result<GridDrawing> {
    let need = min_stretch_factors(d, g)?;
    if f.phi_x < need.phi_x || f.phi_y < need.phi_y {
        return Err(Error::FactorsTooSmall {
            phi_x: f.phi_x,
            phi_y: f.phi_y,
            need_x: need.phi_x,
            need_y: need.phi_y,
        });
    }
    let report = check_disk_link_with(g, d, CheckMode::Bucketed)?;
    if let Some(&(u, v)) = report.duplicates.first() {
        return Err(Error::DuplicatePosition(u, v));
    }
    if let Some(Overlap::VertexOnEdge { vertex, edge }) = report.overlaps.first() {
        return Err(Error::VertexOnEdge {
            vertex: *vertex,
            u: edge.0,
            v: edge.1,
        });
    }
    let pts = d.complete(g.n())?;
    let mut out = Vec::with_capacity(pts.len());
    for p in pts {
        let (x, y) = (p.x as i128 * f.phi_x as i128, p.y as i128 * f.phi_y as i128);
        for c in [x, y] {
            if c.abs() > MAX_COORD as i128 {
                return Err(Error::CoordinateTooLarge(
                    c.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
                ));
            }
        }
        out.push(Point::new(x as i64, y as i64));
    }
    Ok(GridDrawing::new(out))
}
