//! Exhaustive search for the smallest grid holding a disk-link drawing of a
//! star. Only feasible for tiny stars; used as a test oracle.

use std::ops::ControlFlow;

use super::dist_sq;
use crate::drawing::{GridDrawing, Point};
use crate::graph::Graph;
use crate::rational::Frac;
use crate::{Error, Result};

pub const MAX_STAR: usize = 8;
pub const MAX_EXTENT: usize = 12;

/// Star with centre 0 and leaves `1..n`.
pub fn star_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("star edges are simple")
}

/// Enumerates star drawings box by box in order of increasing area `W * H`
/// (`W <= H`, both at most the extent). The centre ranges over one
/// representative cell per symmetry class of the box; leaves are unordered.
/// Every complete candidate is reported together with the search's own
/// accept/reject decision.
#[derive(Clone, Debug)]
pub struct StarSearch {
    n: usize,
    extent: usize,
}

impl StarSearch {
    pub fn new(n: usize, max_extent: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        if n > MAX_STAR {
            return Err(Error::TooLarge { n, limit: MAX_STAR });
        }
        if max_extent > MAX_EXTENT {
            return Err(Error::TooLarge {
                n: max_extent,
                limit: MAX_EXTENT,
            });
        }
        Ok(StarSearch {
            n,
            extent: max_extent,
        })
    }

    /// Boxes `(W, H)` in search order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut boxes: Vec<(usize, usize)> = (1..=self.extent)
            .flat_map(|w| (w..=self.extent).map(move |h| (w, h)))
            .filter(|&(w, h)| w * h >= self.n)
            .collect();
        boxes.sort_by_key(|&(w, h)| (w * h, w));
        boxes
    }

    /// Visits every candidate in every box. `visit` receives the positions
    /// (centre first), the box, and whether the search accepts the drawing;
    /// returning `Break` stops the enumeration.
    pub fn enumerate<B>(
        &self,
        mut visit: impl FnMut(&[Point], (usize, usize), bool) -> ControlFlow<B>,
    ) -> Option<B> {
        for (w, h) in self.boxes() {
            if let ControlFlow::Break(b) = self.enumerate_box(w, h, &mut visit) {
                return Some(b);
            }
        }
        None
    }

    pub fn enumerate_box<B>(
        &self,
        w: usize,
        h: usize,
        visit: &mut impl FnMut(&[Point], (usize, usize), bool) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let leaves = self.n - 1;
        let cells: Vec<Point> = (0..w as i64)
            .flat_map(|x| (0..h as i64).map(move |y| Point::new(x, y)))
            .collect();
        for &c in &cells {
            let (cx, cy) = (c.x as usize, c.y as usize);
            if 2 * cx > w - 1 || 2 * cy > h - 1 || (w == h && cx > cy) {
                continue;
            }
            let others: Vec<Point> = cells.iter().copied().filter(|&p| p != c).collect();
            let k = others.len();
            if k < leaves {
                continue;
            }
            // compat[i][j]: leaf j keeps clear of edge (c, leaf i) and vice versa
            let quarter = Frac::new(1, 4);
            let mut compat = vec![vec![false; k]; k];
            for i in 0..k {
                for j in i + 1..k {
                    let ok = dist_sq(others[j], c, others[i]) >= quarter
                        && dist_sq(others[i], c, others[j]) >= quarter;
                    compat[i][j] = ok;
                    compat[j][i] = ok;
                }
            }
            let mut chosen: Vec<usize> = Vec::with_capacity(leaves);
            let mut pos: Vec<Point> = Vec::with_capacity(self.n);
            pos.push(c);
            self.extend(&others, &compat, &mut chosen, &mut pos, (w, h), visit)?;
        }
        ControlFlow::Continue(())
    }

    fn extend<B>(
        &self,
        others: &[Point],
        compat: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        pos: &mut Vec<Point>,
        bx: (usize, usize),
        visit: &mut impl FnMut(&[Point], (usize, usize), bool) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let leaves = self.n - 1;
        let from = chosen.last().map_or(0, |&i| i + 1);
        let remaining = leaves - chosen.len();
        if remaining == 1 {
            // last leaf: report every option, compatible or not
            for i in from..others.len() {
                let ok = chosen.iter().all(|&j| compat[i][j]);
                pos.push(others[i]);
                let r = visit(pos, bx, ok);
                pos.pop();
                r?;
            }
            return ControlFlow::Continue(());
        }
        for i in from..=others.len().saturating_sub(remaining) {
            if !chosen.iter().all(|&j| compat[i][j]) {
                continue;
            }
            chosen.push(i);
            pos.push(others[i]);
            let r = self.extend(others, compat, chosen, pos, bx, visit);
            pos.pop();
            chosen.pop();
            r?;
        }
        ControlFlow::Continue(())
    }

    /// Smallest `W * H` over all disk-link drawings within the extent, with
    /// a witness drawing.
    pub fn minimum(&self) -> Result<(u64, GridDrawing)> {
        self.enumerate(|pos, (w, h), ok| {
            if ok {
                ControlFlow::Break(((w * h) as u64, GridDrawing::new(pos.to_vec())))
            } else {
                ControlFlow::Continue(())
            }
        })
        .ok_or(Error::NotFound)
    }
}

/// Minimum bounding-grid area of a disk-link drawing of the `n`-vertex star.
pub fn min_area_star_search(n: usize, max_extent: usize) -> Result<(u64, GridDrawing)> {
    StarSearch::new(n, max_extent)?.minimum()
}
