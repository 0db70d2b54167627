//! Exact certification of drawings.
//!
//! All predicates run on integers: squared distances are kept as unreduced
//! `u128` fractions and compared by continued-fraction expansion, so nothing
//! rounds. Coordinates are limited to `|c| <= 2^30`, which keeps every
//! intermediate product inside `i128`/`u128`.

mod star;

use std::cmp::Ordering;

use crate::drawing::{GridDrawing, Point};
use crate::graph::{norm, Graph};
use crate::rational::{Frac, Rational};
use crate::{Error, Result};

pub use star::{min_area_star_search, star_graph, StarSearch};

pub const MAX_COORD: i64 = 1 << 30;

/// Incidence or overlap between drawing elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Overlap {
    /// Two edges share a segment of positive length.
    Edges((usize, usize), (usize, usize)),
    /// A vertex lies on an edge it is not incident to.
    VertexOnEdge { vertex: usize, edge: (usize, usize) },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_disk_link: bool,
    /// Minimum squared distance between a vertex and a non-incident edge;
    /// `None` when there is no such pair.
    pub min_res_sq: Option<Rational>,
    /// Lexicographically smallest `(vertex, edge)` attaining the minimum.
    pub resolution_witness: Option<(usize, (usize, usize))>,
    pub crossings: Vec<((usize, usize), (usize, usize))>,
    pub overlaps: Vec<Overlap>,
    /// Pairs of vertices drawn at the same point.
    pub duplicates: Vec<(usize, usize)>,
    /// Whether `crossings` and edge overlaps were computed.
    pub planarity_checked: bool,
    pub grid: (u64, u64),
}

impl VerificationReport {
    /// `Some(true)` if checked and free of crossings and overlaps.
    pub fn is_planar(&self) -> Option<bool> {
        self.planarity_checked
            .then_some(self.crossings.is_empty() && self.overlaps.is_empty())
    }

    /// Disk-link, and planar when planarity was checked.
    pub fn is_valid(&self) -> bool {
        self.is_disk_link && self.is_planar().unwrap_or(true)
    }

    /// `min_res_sq >= bound`, treating "no pair" as satisfied.
    pub fn resolution_at_least(&self, bound: &Rational) -> bool {
        self.min_res_sq.as_ref().is_none_or(|r| r >= bound)
    }
}

/// Crossings and overlaps of a drawing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlanarityReport {
    pub crossings: Vec<((usize, usize), (usize, usize))>,
    pub overlaps: Vec<Overlap>,
}

impl PlanarityReport {
    pub fn is_planar(&self) -> bool {
        self.crossings.is_empty() && self.overlaps.is_empty()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CheckMode {
    /// Uniform-grid bucketing of vertices; near linear on spread-out drawings.
    #[default]
    Bucketed,
    /// Every vertex against every edge.
    BruteForce,
}

fn check_coords(points: &[Point]) -> Result<()> {
    for p in points {
        for c in [p.x, p.y] {
            if c.abs() > MAX_COORD {
                return Err(Error::CoordinateTooLarge(c));
            }
        }
    }
    Ok(())
}

/// Squared distance from `p` to the closed segment `ab`, `a != b`.
fn dist_sq(p: Point, a: Point, b: Point) -> Frac {
    let (dx, dy) = ((b.x - a.x) as i128, (b.y - a.y) as i128);
    let (wx, wy) = ((p.x - a.x) as i128, (p.y - a.y) as i128);
    let dot = wx * dx + wy * dy;
    let len = dx * dx + dy * dy;
    if dot <= 0 {
        Frac::new((wx * wx + wy * wy) as u128, 1)
    } else if dot >= len {
        let (ux, uy) = ((p.x - b.x) as i128, (p.y - b.y) as i128);
        Frac::new((ux * ux + uy * uy) as u128, 1)
    } else {
        let cross = (dx * wy - dy * wx).unsigned_abs();
        Frac::new(cross * cross, len as u128)
    }
}

/// Exact squared distance from `p` to the closed segment `ab`.
pub fn point_segment_dist_sq(p: Point, a: Point, b: Point) -> Result<Rational> {
    if a == b {
        return Err(Error::DegenerateSegment);
    }
    check_coords(&[p, a, b])?;
    Ok(dist_sq(p, a, b).to_rational())
}

#[inline]
fn orient(a: Point, b: Point, c: Point) -> i32 {
    let v = (b.x - a.x) as i128 * (c.y - a.y) as i128 - (b.y - a.y) as i128 * (c.x - a.x) as i128;
    v.signum() as i32
}

#[inline]
fn in_box(p: Point, a: Point, b: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Running minimum over `(vertex, edge)` pairs.
#[derive(Default)]
struct ResolutionAcc {
    best: Option<(Frac, usize, (usize, usize))>,
    on_edge: Vec<Overlap>,
}

impl ResolutionAcc {
    fn offer(&mut self, d: Frac, w: usize, e: (usize, usize)) {
        if d.num == 0 {
            self.on_edge
                .push(Overlap::VertexOnEdge { vertex: w, edge: e });
        }
        let better = match &self.best {
            None => true,
            Some((bd, bw, be)) => match d.cmp(bd) {
                Ordering::Less => true,
                Ordering::Equal => (w, e) < (*bw, *be),
                Ordering::Greater => false,
            },
        };
        if better {
            self.best = Some((d, w, e));
        }
    }
}

fn resolution_brute(g: &Graph, pts: &[Point]) -> ResolutionAcc {
    let mut acc = ResolutionAcc::default();
    for &(u, v) in g.edges() {
        let (a, b) = (pts[u], pts[v]);
        if a == b {
            continue;
        }
        for (w, &p) in pts.iter().enumerate() {
            if w != u && w != v {
                acc.offer(dist_sq(p, a, b), w, (u, v));
            }
        }
    }
    acc
}

/// Vertices bucketed into square cells of side `s`.
struct Buckets {
    lo: Point,
    s: i64,
    cols: i64,
    rows: i64,
    start: Vec<usize>,
    items: Vec<usize>,
}

impl Buckets {
    fn new(pts: &[Point], lo: Point, hi: Point) -> Self {
        let n = pts.len().max(1) as u128;
        let w = (hi.x - lo.x) as u128 + 1;
        let h = (hi.y - lo.y) as u128 + 1;
        let by_area = ((w * h / n) as f64).sqrt() as i64;
        let by_side = (w.max(h) / (2 * n)) as i64 + 1;
        let s = by_area.max(by_side).max(1);
        let cols = (hi.x - lo.x) / s + 1;
        let rows = (hi.y - lo.y) / s + 1;
        let cell = |p: Point| (((p.x - lo.x) / s) * rows + (p.y - lo.y) / s) as usize;
        let ncells = (cols * rows) as usize;
        let mut start = vec![0usize; ncells + 1];
        for &p in pts {
            start[cell(p) + 1] += 1;
        }
        for i in 0..ncells {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut items = vec![0; pts.len()];
        for (v, &p) in pts.iter().enumerate() {
            let c = cell(p);
            items[fill[c]] = v;
            fill[c] += 1;
        }
        Buckets {
            lo,
            s,
            cols,
            rows,
            start,
            items,
        }
    }

    /// Calls `f` on every vertex that could be within distance `r` of the
    /// segment `ab`, each at most once.
    fn near_segment(&self, a: Point, b: Point, r: i64, mut f: impl FnMut(usize)) {
        let (a, b) = if a.x <= b.x { (a, b) } else { (b, a) };
        let col_lo = ((a.x - r - self.lo.x).max(0)) / self.s;
        let col_hi = ((b.x + r - self.lo.x) / self.s).min(self.cols - 1);
        if b.x + r < self.lo.x {
            return;
        }
        for cx in col_lo..=col_hi {
            let x0 = self.lo.x + cx * self.s;
            let x1 = x0 + self.s - 1;
            let sx0 = a.x.max(x0 - r);
            let sx1 = b.x.min(x1 + r);
            if sx0 > sx1 {
                continue;
            }
            let (ylo, yhi) = if a.x == b.x {
                (a.y.min(b.y), a.y.max(b.y))
            } else {
                let y_at = |x: i64, up: bool| {
                    let num = (b.y - a.y) as i128 * (x - a.x) as i128;
                    let den = (b.x - a.x) as i128;
                    let q = num.div_euclid(den);
                    let exact = num.rem_euclid(den) == 0;
                    (a.y as i128 + if up && !exact { q + 1 } else { q }) as i64
                };
                let (y0, y1) = (y_at(sx0, false), y_at(sx1, false));
                let (z0, z1) = (y_at(sx0, true), y_at(sx1, true));
                (y0.min(y1), z0.max(z1))
            };
            let row_lo = ((ylo - r - self.lo.y).max(0)) / self.s;
            let row_hi = ((yhi + r - self.lo.y) / self.s).min(self.rows - 1);
            if yhi + r < self.lo.y {
                continue;
            }
            for cy in row_lo..=row_hi {
                let c = (cx * self.rows + cy) as usize;
                for &v in &self.items[self.start[c]..self.start[c + 1]] {
                    f(v);
                }
            }
        }
    }
}

fn resolution_bucketed(g: &Graph, pts: &[Point], lo: Point, hi: Point) -> ResolutionAcc {
    let buckets = Buckets::new(pts, lo, hi);
    let diag_sq = ((hi.x - lo.x) as u128).pow(2) + ((hi.y - lo.y) as u128).pow(2);
    let mut r: i64 = 1;
    loop {
        let limit = Frac::new((r as u128) * (r as u128), 1);
        let complete = (r as u128) * (r as u128) >= diag_sq;
        let mut acc = ResolutionAcc::default();
        for &(u, v) in g.edges() {
            let (a, b) = (pts[u], pts[v]);
            if a == b {
                continue;
            }
            buckets.near_segment(a, b, r, |w| {
                if w != u && w != v {
                    let d = dist_sq(pts[w], a, b);
                    if d <= limit {
                        acc.offer(d, w, (u, v));
                    }
                }
            });
        }
        if acc.best.is_some() || complete {
            return acc;
        }
        r *= 2;
    }
}

/// Checks the disk-link conditions exactly. Does not look for crossings.
pub fn check_disk_link(g: &Graph, d: &GridDrawing) -> Result<VerificationReport> {
    check_disk_link_with(g, d, CheckMode::Bucketed)
}

pub fn check_disk_link_with(
    g: &Graph,
    d: &GridDrawing,
    mode: CheckMode,
) -> Result<VerificationReport> {
    let pts = d.complete(g.n())?;
    check_coords(&pts)?;
    let drawing = GridDrawing::new(pts.clone());
    let grid = drawing.grid_size();

    let mut sorted: Vec<(Point, usize)> = pts.iter().copied().zip(0..).collect();
    sorted.sort_unstable();
    let mut duplicates = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j].0 == sorted[i].0 {
            j += 1;
        }
        for a in i..j {
            for b in a + 1..j {
                duplicates.push(norm(sorted[a].1, sorted[b].1));
            }
        }
        i = j;
    }
    duplicates.sort_unstable();

    let mut acc = match (mode, drawing.bounding_box()) {
        (CheckMode::Bucketed, Some((lo, hi))) => resolution_bucketed(g, &pts, lo, hi),
        _ => resolution_brute(g, &pts),
    };
    acc.on_edge.sort_unstable();
    let quarter = Frac::new(1, 4);
    let is_disk_link = duplicates.is_empty()
        && acc.on_edge.is_empty()
        && acc.best.as_ref().is_none_or(|(d, _, _)| *d >= quarter);
    Ok(VerificationReport {
        is_disk_link,
        min_res_sq: acc.best.as_ref().map(|(d, _, _)| d.to_rational()),
        resolution_witness: acc.best.map(|(_, w, e)| (w, e)),
        crossings: Vec::new(),
        overlaps: acc.on_edge,
        duplicates,
        planarity_checked: false,
        grid,
    })
}

/// Disk-link check plus, when `planar` is set, crossing detection.
pub fn verify_drawing(g: &Graph, d: &GridDrawing, planar: bool) -> Result<VerificationReport> {
    let mut report = check_disk_link(g, d)?;
    if planar {
        let pr = check_planar_drawing(g, d)?;
        report.crossings = pr.crossings;
        report.overlaps.extend(pr.overlaps);
        report.overlaps.sort_unstable();
        report.overlaps.dedup();
        report.planarity_checked = true;
    }
    Ok(report)
}

/// Finds all crossing and overlapping edge pairs. Edges are swept in order of
/// their left end, so pairs with disjoint x-ranges are never compared.
pub fn check_planar_drawing(g: &Graph, d: &GridDrawing) -> Result<PlanarityReport> {
    let pts = d.complete(g.n())?;
    check_coords(&pts)?;
    let mut edges: Vec<(i64, i64, usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| pts[u] != pts[v])
        .map(|&(u, v)| {
            let (a, b) = (pts[u].x, pts[v].x);
            (a.min(b), a.max(b), u, v)
        })
        .collect();
    edges.sort_unstable();
    let mut report = PlanarityReport::default();
    for i in 0..edges.len() {
        let (_, xmax, u1, v1) = edges[i];
        for &(xmin2, _, u2, v2) in &edges[i + 1..] {
            if xmin2 > xmax {
                break;
            }
            classify_pair(&pts, (u1, v1), (u2, v2), &mut report);
        }
    }
    report.crossings.sort_unstable();
    report.overlaps.sort_unstable();
    report.overlaps.dedup();
    Ok(report)
}

fn classify_pair(pts: &[Point], e: (usize, usize), f: (usize, usize), out: &mut PlanarityReport) {
    let (e, f) = if e <= f { (e, f) } else { (f, e) };
    let (a, b, c, dd) = (pts[e.0], pts[e.1], pts[f.0], pts[f.1]);
    if a.y.max(b.y) < c.y.min(dd.y) || c.y.max(dd.y) < a.y.min(b.y) {
        return;
    }
    let shared = [e.0, e.1].into_iter().find(|x| *x == f.0 || *x == f.1);
    if let Some(s) = shared {
        let p = if e.0 == s { e.1 } else { e.0 };
        let q = if f.0 == s { f.1 } else { f.0 };
        let (sp, pp, qp) = (pts[s], pts[p], pts[q]);
        let dot = (pp.x - sp.x) as i128 * (qp.x - sp.x) as i128
            + (pp.y - sp.y) as i128 * (qp.y - sp.y) as i128;
        if orient(sp, pp, qp) == 0 && dot > 0 {
            out.overlaps.push(Overlap::Edges(e, f));
        }
        return;
    }
    let (o1, o2) = (orient(a, b, c), orient(a, b, dd));
    let (o3, o4) = (orient(c, dd, a), orient(c, dd, b));
    if o1 == 0 && o2 == 0 {
        let (e0, e1) = (a.min(b), a.max(b));
        let (f0, f1) = (c.min(dd), c.max(dd));
        if e0.max(f0) < e1.min(f1) {
            out.overlaps.push(Overlap::Edges(e, f));
            return;
        }
    } else if o1 * o2 < 0 && o3 * o4 < 0 {
        out.crossings.push((e, f));
        return;
    }
    for (v, p, seg, (s0, s1)) in [
        (f.0, c, e, (a, b)),
        (f.1, dd, e, (a, b)),
        (e.0, a, f, (c, dd)),
        (e.1, b, f, (c, dd)),
    ] {
        if orient(s0, s1, p) == 0 && in_box(p, s0, s1) {
            out.overlaps.push(Overlap::VertexOnEdge {
                vertex: v,
                edge: seg,
            });
        }
    }
}

/// True iff all points are distinct corners of their convex hull, with no
/// point in the interior of a hull edge. Fewer than three points are never
/// in convex position.
pub fn check_convex_position(d: &GridDrawing) -> bool {
    let mut pts: Vec<Point> = d.points().collect();
    if pts.len() < 3 {
        return false;
    }
    pts.sort_unstable();
    if pts.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let base = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= base + 2
                && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull.len() == pts.len()
}

/// Area every disk-link drawing of the `n`-vertex star must have:
/// `(n - 1)^2 / (16 pi)`.
pub fn star_lower_bound(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let k = (n - 1) as f64;
    Ok(k * k / (16.0 * std::f64::consts::PI))
}
