//! Shift-method drawing of maximal plane graphs with edge-vertex resolution
//! at least 1/2.
//!
//! Inserting `v_k` above `w_l..w_r` shifts the shift-set of each covered
//! contour vertex `w_i` right by `i - l`, and everything from `w_r` onwards by
//! `d_r`, where `d_r` is `r - l` or `r - l + 1`, whichever makes the Manhattan
//! distance between `w_l` and `w_r` even. `v_k` then sits on the slope `+1`
//! line through `w_l` and the slope `-1` line through `w_r`.
//!
//! Only relative x-coordinates are stored: each contour vertex keeps its
//! horizontal distance to its contour predecessor, and each covered vertex
//! its offset to the vertex that covered it. Shift-sets are the trees of
//! this forest, so a whole set moves when its root's contour distance
//! changes and every insertion costs `O(deg v_k)`.

use crate::canonical::{canonical_order, CanonicalOrder, EdgeColor};
use crate::drawing::{GridDrawing, Point};
use crate::graph::Graph;
use crate::plane::{embed, triangulate, PlaneGraph};
use crate::{Error, Result};

const NONE: usize = usize::MAX;

/// Contour of the current partial drawing as a linked list from `v1` to `v2`.
#[derive(Clone, Debug)]
pub struct ContourState {
    pub next: Vec<usize>,
    pub prev: Vec<usize>,
    /// horizontal distance to the contour predecessor
    pub dx: Vec<i64>,
    /// absolute y, final once placed
    pub y: Vec<i64>,
    pub first: usize,
    pub last: usize,
}

impl ContourState {
    /// Contour vertices left to right.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = vec![self.first];
        let mut v = self.first;
        while v != self.last {
            v = self.next[v];
            out.push(v);
        }
        out
    }

    /// Contour vertices with positions, taking `x(v1) = 0`.
    pub fn points(&self) -> Vec<(usize, Point)> {
        let mut x = 0;
        self.vertices()
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                if i > 0 {
                    x += self.dx[v];
                }
                (v, Point::new(x, self.y[v]))
            })
            .collect()
    }

    /// True if every contour edge has slope `+1` or `-1`.
    pub fn slopes_ok(&self) -> bool {
        self.points()
            .windows(2)
            .all(|w| (w[1].1.y - w[0].1.y).abs() == w[1].1.x - w[0].1.x)
    }
}

/// Covered vertices hang below the vertex that covered them, with a
/// horizontal offset `delta` relative to it.
#[derive(Clone, Debug)]
pub struct OffsetForest {
    pub parent: Vec<Option<usize>>,
    pub delta: Vec<i64>,
    first_child: Vec<usize>,
    next_sibling: Vec<usize>,
}

impl OffsetForest {
    pub fn new(n: usize) -> Self {
        OffsetForest {
            parent: vec![None; n],
            delta: vec![0; n],
            first_child: vec![NONE; n],
            next_sibling: vec![NONE; n],
        }
    }

    pub fn attach(&mut self, child: usize, parent: usize, delta: i64) {
        self.parent[child] = Some(parent);
        self.delta[child] = delta;
        self.next_sibling[child] = self.first_child[parent];
        self.first_child[parent] = child;
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut c = self.first_child[v];
        std::iter::from_fn(move || {
            if c == NONE {
                return None;
            }
            let out = c;
            c = self.next_sibling[c];
            Some(out)
        })
    }

    /// Absolute x for every vertex reachable from `roots`. Fails if some
    /// vertex is neither a root nor reached from one.
    pub fn resolve(&self, roots: &[(usize, i64)]) -> Result<Vec<i64>> {
        let n = self.parent.len();
        let mut x = vec![0i64; n];
        let mut done = vec![false; n];
        let mut stack = Vec::new();
        for &(r, xr) in roots {
            if self.parent[r].is_some() || done[r] {
                return Err(Error::CyclicForest);
            }
            x[r] = xr;
            done[r] = true;
            stack.push(r);
            while let Some(v) = stack.pop() {
                for c in self.children(v) {
                    if done[c] {
                        return Err(Error::CyclicForest);
                    }
                    x[c] = x[v] + self.delta[c];
                    done[c] = true;
                    stack.push(c);
                }
            }
        }
        if done.iter().all(|&d| d) {
            Ok(x)
        } else {
            Err(Error::CyclicForest)
        }
    }
}

/// Resolves the forest against absolute x of its roots and attaches `y`.
pub fn resolve_offsets(
    forest: &OffsetForest,
    roots: &[(usize, i64)],
    y: &[i64],
) -> Result<GridDrawing> {
    let x = forest.resolve(roots)?;
    Ok(GridDrawing::new(
        x.iter().zip(y).map(|(&x, &y)| Point::new(x, y)).collect(),
    ))
}

/// `d_r` for `r - l` contour steps, given the Manhattan distance between
/// `w_l` and `w_r` before shifting.
pub fn phase_two_shift(r_minus_l: i64, manhattan_before: i64) -> i64 {
    if (manhattan_before + r_minus_l) % 2 == 0 {
        r_minus_l
    } else {
        r_minus_l + 1
    }
}

/// Intersection of the slope `+1` line through `wl` and the slope `-1` line
/// through `wr`. `None` if it is not a grid point.
pub fn apex(wl: Point, wr: Point) -> Option<Point> {
    let sx = wl.x + wr.x + wr.y - wl.y;
    let sy = wr.x - wl.x + wl.y + wr.y;
    if sx % 2 != 0 || sy % 2 != 0 {
        return None;
    }
    Some(Point::new(sx / 2, sy / 2))
}

/// What one insertion did.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placement {
    /// shift applied to `S(w_r)` and everything right of it
    pub d_r: i64,
    /// number of covered contour vertices
    pub covered: usize,
    /// `x(v_k) - x(w_l)`
    pub dx_left: i64,
    pub y: i64,
}

/// Incremental shift-method state.
#[derive(Clone, Debug)]
pub struct ShiftBuilder {
    contour: ContourState,
    forest: OffsetForest,
    placed: Vec<bool>,
    checks: bool,
    covered: Vec<usize>,
}

impl ShiftBuilder {
    /// Places `v1 (0,0)`, `v2 (2,0)`, `v3 (1,1)`.
    pub fn start(n: usize, v1: usize, v2: usize, v3: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        let mut contour = ContourState {
            next: vec![NONE; n],
            prev: vec![NONE; n],
            dx: vec![0; n],
            y: vec![0; n],
            first: v1,
            last: v2,
        };
        contour.next[v1] = v3;
        contour.prev[v3] = v1;
        contour.next[v3] = v2;
        contour.prev[v2] = v3;
        contour.dx[v3] = 1;
        contour.dx[v2] = 1;
        contour.y[v3] = 1;
        let mut placed = vec![false; n];
        for v in [v1, v2, v3] {
            placed[v] = true;
        }
        Ok(ShiftBuilder {
            contour,
            forest: OffsetForest::new(n),
            placed,
            checks: false,
            covered: Vec::new(),
        })
    }

    /// Re-checks the whole contour after every insertion. Quadratic.
    pub fn with_checks(mut self, on: bool) -> Self {
        self.checks = on;
        self
    }

    pub fn contour(&self) -> &ContourState {
        &self.contour
    }

    pub fn forest(&self) -> &OffsetForest {
        &self.forest
    }

    /// Places `v` above the contour run `wl..wr`.
    pub fn insert_vertex(&mut self, v: usize, wl: usize, wr: usize) -> Result<Placement> {
        let c = &mut self.contour;
        if self.placed[v] || !self.placed[wl] || !self.placed[wr] {
            return Err(Error::Internal(format!(
                "bad insertion of {v} over {wl}..{wr}"
            )));
        }
        // walk w_{l+1} .. w_r, applying phase one as we go: the distance of
        // each w_i, l < i < r, to its predecessor grows by one.
        self.covered.clear();
        let mut w = c.next[wl];
        let mut span = 0i64;
        while w != wr {
            if w == NONE || w == c.last {
                return Err(Error::Internal(format!(
                    "{wr} does not follow {wl} on the contour"
                )));
            }
            self.covered.push(w);
            span += c.dx[w];
            w = c.next[w];
        }
        span += c.dx[wr];
        let t = self.covered.len() as i64 + 1;
        let dy = c.y[wr] - c.y[wl];
        let d_r = phase_two_shift(t, span + dy.abs());
        for &w in &self.covered {
            c.dx[w] += 1;
        }
        // phases two and three: w_r and everything right of it move by d_r,
        // which relative to w_{r-1} (already moved by t - 1) is d_r - t + 1
        c.dx[wr] += d_r - (t - 1);
        let width = span + d_r;
        if (width + dy) % 2 != 0 {
            return Err(Error::Internal(format!("odd Manhattan distance under {v}")));
        }
        let dx_left = (width + dy) / 2;
        let y = (width + c.y[wl] + c.y[wr]) / 2;

        let mut prefix = 0;
        for &w in &self.covered {
            prefix += c.dx[w];
            let delta = prefix - dx_left;
            // edges to covered vertices are at least as steep as 45 degrees
            if (y - c.y[w]) < delta.abs() {
                return Err(Error::Internal(format!(
                    "edge ({w}, {v}) flatter than slope 1"
                )));
            }
            self.forest.attach(w, v, delta);
        }
        c.next[wl] = v;
        c.prev[v] = wl;
        c.next[v] = wr;
        c.prev[wr] = v;
        c.dx[v] = dx_left;
        c.dx[wr] = width - dx_left;
        c.y[v] = y;
        self.placed[v] = true;

        if self.checks && !c.slopes_ok() {
            return Err(Error::Internal(format!(
                "contour condition broken after {v}"
            )));
        }
        Ok(Placement {
            d_r,
            covered: self.covered.len(),
            dx_left,
            y,
        })
    }

    /// Resolves all offsets into absolute coordinates with `x(v1) = 0`.
    pub fn finish(&self) -> Result<GridDrawing> {
        if let Some(v) = self.placed.iter().position(|&p| !p) {
            return Err(Error::MissingVertexPosition(v));
        }
        let roots: Vec<(usize, i64)> = self
            .contour
            .points()
            .into_iter()
            .map(|(v, p)| (v, p.x))
            .collect();
        resolve_offsets(&self.forest, &roots, &self.contour.y)
    }
}

/// Runs the shift method along a canonical order.
pub fn shift_drawing(co: &CanonicalOrder, checks: bool) -> Result<GridDrawing> {
    let n = co.n();
    // the builder runs on ranks so that its arrays are filled front to back
    let mut b = ShiftBuilder::start(n, 0, 1, 2)?.with_checks(checks);
    for (k, &v) in co.order.iter().enumerate().skip(3) {
        let (Some(wl), Some(wr)) = (co.left[v], co.right[v]) else {
            return Err(Error::Internal(format!(
                "vertex {v} has no contour endpoints"
            )));
        };
        b.insert_vertex(k, co.rank[wl], co.rank[wr])?;
    }
    let by_rank = b.finish()?;
    Ok(GridDrawing::new(co.rank.iter().map(|&k| by_rank.point(k)).collect()).normalized())
}

/// Output of the planar pipeline.
#[derive(Clone, Debug)]
pub struct PlanarLayout {
    pub drawing: GridDrawing,
    pub order: CanonicalOrder,
    /// the triangulated, oriented plane graph that was drawn
    pub plane: PlaneGraph,
}

/// Draws a connected planar graph: embed, triangulate, order, shift.
pub fn draw_planar(g: &Graph) -> Result<PlanarLayout> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    draw_plane(&embed(g)?)
}

/// Like [`draw_planar`] but keeps the given embedding.
pub fn draw_plane(pg: &PlaneGraph) -> Result<PlanarLayout> {
    let tri = triangulate(pg)?;
    let (plane, _, _, _) = crate::canonical::oriented_frame(&tri)?;
    let order = canonical_order(&plane)?;
    let drawing = shift_drawing(&order, false)?;
    Ok(PlanarLayout {
        drawing,
        order,
        plane,
    })
}

/// Edges whose direction falls outside the range of their colour: blue in
/// `(0, 45]` degrees, green in `[135, 180)`, red in `(45, 135)`. The
/// uncoloured edge `(v1, v2)` is skipped.
pub fn slope_violations(g: &Graph, co: &CanonicalOrder, d: &GridDrawing) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            let (p, q) = (d.point(u), d.point(v));
            // orient left to right; vertical edges get dx = 0
            let (a, b) = if (p.x, p.y) <= (q.x, q.y) {
                (p, q)
            } else {
                (q, p)
            };
            let (dx, dy) = (b.x - a.x, b.y - a.y);
            let ok = match co.color(u, v) {
                Some(EdgeColor::Blue) => dx > 0 && dy > 0 && dy <= dx,
                Some(EdgeColor::Green) => dx > 0 && dy < 0 && -dy <= dx,
                Some(EdgeColor::Red) => dy.abs() > dx,
                Some(EdgeColor::Uncolored) => true,
                None => false,
            };
            !ok
        })
        .collect()
}
