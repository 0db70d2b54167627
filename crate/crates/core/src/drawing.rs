//! Integer grid drawings.

use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    #[inline]
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Vertex positions on the integer grid. A drawing read from a file may leave
/// vertices unplaced; everything produced by this crate is complete.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridDrawing {
    positions: Vec<Option<Point>>,
}

impl GridDrawing {
    pub fn new(points: Vec<Point>) -> Self {
        GridDrawing {
            positions: points.into_iter().map(Some).collect(),
        }
    }

    pub fn from_partial(positions: Vec<Option<Point>>) -> Self {
        GridDrawing { positions }
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Self {
        GridDrawing::new(coords.iter().map(|&c| c.into()).collect())
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn get(&self, v: usize) -> Option<Point> {
        self.positions.get(v).copied().flatten()
    }

    /// Position of `v`; panics when unplaced.
    pub fn point(&self, v: usize) -> Point {
        self.get(v)
            .unwrap_or_else(|| panic!("vertex {v} has no position"))
    }

    pub fn positions(&self) -> &[Option<Point>] {
        &self.positions
    }

    pub fn set(&mut self, v: usize, p: Point) {
        if v >= self.positions.len() {
            self.positions.resize(v + 1, None);
        }
        self.positions[v] = Some(p);
    }

    /// All positions, or the first unplaced vertex among `0..n`.
    pub fn complete(&self, n: usize) -> Result<Vec<Point>> {
        (0..n)
            .map(|v| self.get(v).ok_or(Error::MissingVertexPosition(v)))
            .collect()
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.positions.iter().flatten().copied()
    }

    /// `(min, max)` corners of the placed points.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let mut it = self.points();
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), p| {
            (
                Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                Point::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        }))
    }

    /// Grid size `W x H`: the bounding box has side lengths `W - 1` and `H - 1`.
    pub fn grid_size(&self) -> (u64, u64) {
        match self.bounding_box() {
            Some((lo, hi)) => ((hi.x - lo.x) as u64 + 1, (hi.y - lo.y) as u64 + 1),
            None => (0, 0),
        }
    }

    /// Translate so the minimum x and y are both zero.
    pub fn normalized(&self) -> GridDrawing {
        let Some((lo, _)) = self.bounding_box() else {
            return self.clone();
        };
        self.translated(-lo.x, -lo.y)
    }

    pub fn translated(&self, dx: i64, dy: i64) -> GridDrawing {
        GridDrawing {
            positions: self
                .positions
                .iter()
                .map(|p| p.map(|p| Point::new(p.x + dx, p.y + dy)))
                .collect(),
        }
    }

    pub fn scaled(&self, sx: i64, sy: i64) -> GridDrawing {
        GridDrawing {
            positions: self
                .positions
                .iter()
                .map(|p| p.map(|p| Point::new(p.x * sx, p.y * sy)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_size_counts_grid_lines() {
        let d = GridDrawing::from_coords(&[(0, 0), (4, 0), (2, 1), (2, 2)]);
        assert_eq!(d.grid_size(), (5, 3));
        let single = GridDrawing::from_coords(&[(7, -3)]);
        assert_eq!(single.grid_size(), (1, 1));
        assert_eq!(GridDrawing::default().grid_size(), (0, 0));
    }

    #[test]
    fn normalization() {
        let d = GridDrawing::from_coords(&[(-3, 5), (2, 7)]).normalized();
        assert_eq!(d.point(0), Point::new(0, 0));
        assert_eq!(d.point(1), Point::new(5, 2));
    }

    #[test]
    fn missing_positions() {
        let d = GridDrawing::from_partial(vec![Some(Point::new(0, 0)), None]);
        assert_eq!(d.complete(2), Err(Error::MissingVertexPosition(1)));
        assert_eq!(d.complete(3), Err(Error::MissingVertexPosition(1)));
    }
}
