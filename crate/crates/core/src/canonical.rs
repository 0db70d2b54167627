//! Canonical orderings of maximal plane graphs and the Schnyder colouring that
//! falls out of the insertion sequence.
//!
//! Conventions: the outer triangle is `v1, v2, vn` with `(v1, v2)` its
//! smallest edge by vertex id, and the embedding is oriented so that `v1, v2,
//! vn` runs counter-clockwise. The contour of `G_k` is the path from `v1` to
//! `v2` along the outer face other than the edge `(v1, v2)`.

use std::collections::HashMap;
use std::fmt;

use crate::graph::norm;
use crate::plane::PlaneGraph;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Blue,
    Green,
    Red,
    Uncolored,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalOrder {
    /// `order[k]` is `v_{k+1}`.
    pub order: Vec<usize>,
    /// Inverse of `order`.
    pub rank: Vec<usize>,
    /// `w_l` at the insertion of each vertex; `None` for `v1` and `v2`.
    pub left: Vec<Option<usize>>,
    /// `w_r` at the insertion of each vertex; `None` for `v1` and `v2`.
    pub right: Vec<Option<usize>>,
    colors: HashMap<(usize, usize), EdgeColor>,
}

impl CanonicalOrder {
    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn v1(&self) -> usize {
        self.order[0]
    }

    pub fn v2(&self) -> usize {
        self.order[1]
    }

    pub fn vn(&self) -> usize {
        self.order[self.order.len() - 1]
    }

    /// Colour of edge `(u, v)`; `None` if it is not an edge.
    pub fn color(&self, u: usize, v: usize) -> Option<EdgeColor> {
        self.colors.get(&norm(u, v)).copied()
    }

    /// Edges of one colour, sorted.
    pub fn edges_of(&self, color: EdgeColor) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .colors
            .iter()
            .filter(|&(_, &c)| c == color)
            .map(|(&e, _)| e)
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Builds an order from a bare permutation by replaying the insertions
    /// on `pg`. Colours and `w_l`, `w_r` are derived from the contour.
    pub fn from_permutation(pg: &PlaneGraph, order: Vec<usize>) -> Result<Self> {
        let trace = replay(pg, &order).map_err(|v| Error::Internal(v.to_string()))?;
        Ok(trace)
    }
}

/// Returns `(pg', v1, v2, vn)` where `pg'` is `pg` or its mirror image, chosen
/// so that the outer triangle runs `v1, v2, vn` counter-clockwise.
pub(crate) fn oriented_frame(pg: &PlaneGraph) -> Result<(PlaneGraph, usize, usize, usize)> {
    let n = pg.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if pg.m() != 3 * n - 6 {
        return Err(Error::NotMaximal {
            m: pg.m(),
            expected: 3 * n - 6,
        });
    }
    let outer = pg.outer_face();
    if outer.len() != 3 {
        return Err(Error::OuterFaceNotTriangle);
    }
    let mut tri = outer.clone();
    tri.sort_unstable();
    let (v1, v2, vn) = (tri[0], tri[1], tri[2]);
    // The outer face is traced clockwise, so it must contain the dart v2 -> v1.
    let i = outer.iter().position(|&v| v == v2).expect("on triangle");
    if outer[(i + 1) % 3] == v1 {
        Ok((pg.clone(), v1, v2, vn))
    } else {
        Ok((pg.mirrored(), v1, v2, vn))
    }
}

/// Computes a canonical ordering by peeling vertices off the outer face.
///
/// Linear time: a contour vertex may be removed once it has no chord, and
/// chord counters are updated only for vertices entering the contour.
pub fn canonical_order(pg: &PlaneGraph) -> Result<CanonicalOrder> {
    let (pg, v1, v2, vn) = oriented_frame(pg)?;
    let n = pg.n();
    const NONE: usize = usize::MAX;

    let mut next = vec![NONE; n];
    let mut prev = vec![NONE; n];
    let mut on_contour = vec![false; n];
    let mut removed = vec![false; n];
    let mut chords = vec![0usize; n];
    next[v1] = vn;
    prev[vn] = v1;
    next[vn] = v2;
    prev[v2] = vn;
    for v in [v1, v2, vn] {
        on_contour[v] = true;
    }

    let mut order = vec![NONE; n];
    let mut left = vec![None; n];
    let mut right = vec![None; n];
    let mut colors = HashMap::with_capacity(pg.m());
    let mut candidates = vec![vn];
    let is_outer_pair = |a: usize, b: usize| norm(a, b) == norm(v1, v2);

    for k in (2..n).rev() {
        let v = loop {
            let Some(c) = candidates.pop() else {
                return Err(Error::Internal(
                    "peeling stalled: no removable contour vertex".into(),
                ));
            };
            if on_contour[c] && !removed[c] && chords[c] == 0 && c != v1 && c != v2 {
                break c;
            }
        };
        let (p, q) = (prev[v], next[v]);
        order[k] = v;
        left[v] = Some(p);
        right[v] = Some(q);
        removed[v] = true;
        on_contour[v] = false;

        // neighbours of v in G_{k-1}: rot(v) forward from p to q
        let rot = pg.rotation(v);
        let d = rot.len();
        let start = rot.iter().position(|&w| w == p).expect("contour neighbour");
        let mut inner = Vec::new();
        let mut i = (start + 1) % d;
        while rot[i] != q {
            inner.push(rot[i]);
            i = (i + 1) % d;
            if i == start {
                return Err(Error::Internal(
                    "contour neighbour missing in rotation".into(),
                ));
            }
        }

        colors.insert(norm(p, v), EdgeColor::Blue);
        colors.insert(norm(v, q), EdgeColor::Green);
        for &u in &inner {
            colors.insert(norm(u, v), EdgeColor::Red);
        }

        if inner.is_empty() {
            next[p] = q;
            prev[q] = p;
            if !is_outer_pair(p, q) {
                chords[p] -= 1;
                chords[q] -= 1;
            }
        } else {
            let mut last = p;
            for &u in &inner {
                next[last] = u;
                prev[u] = last;
                last = u;
            }
            next[last] = q;
            prev[q] = last;
            for &u in &inner {
                on_contour[u] = true;
                for &w in pg.graph().neighbors(u) {
                    if !on_contour[w] || w == prev[u] || w == next[u] {
                        continue;
                    }
                    if is_outer_pair(u, w) {
                        continue;
                    }
                    chords[u] += 1;
                    chords[w] += 1;
                }
            }
        }
        for c in [p, q] {
            if chords[c] == 0 {
                candidates.push(c);
            }
        }
        for &u in inner.iter().rev() {
            if chords[u] == 0 {
                candidates.push(u);
            }
        }
    }

    order[0] = v1;
    order[1] = v2;
    colors.insert(norm(v1, v2), EdgeColor::Uncolored);
    let mut rank = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    Ok(CanonicalOrder {
        order,
        rank,
        left,
        right,
        colors,
    })
}

/// Why an ordering was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderViolation {
    /// The plane graph is not a maximal plane graph with a triangular outer face.
    BadInput(Error),
    NotPermutation,
    /// `v1, v2, vn` are not the outer triangle in the expected orientation.
    OuterTriangle,
    /// `G_k` is not biconnected.
    NotBiconnected {
        k: usize,
    },
    /// The earlier neighbours of `v_k` are not consecutive on the contour, or
    /// not in rotation order.
    NotConsecutive {
        k: usize,
    },
    /// `v_k` has no later neighbour.
    NoLaterNeighbor {
        k: usize,
    },
    /// Recorded `w_l`, `w_r` disagree with the contour.
    WrongEndpoints {
        k: usize,
    },
    /// An edge has the wrong colour.
    WrongColor {
        u: usize,
        v: usize,
    },
    /// A colour class is not the expected tree.
    NotATree(EdgeColor),
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderViolation::BadInput(e) => write!(f, "invalid input: {e}"),
            OrderViolation::NotPermutation => write!(f, "order is not a permutation"),
            OrderViolation::OuterTriangle => write!(f, "v1, v2, vn do not bound the outer face"),
            OrderViolation::NotBiconnected { k } => write!(f, "G_{k} is not biconnected"),
            OrderViolation::NotConsecutive { k } => {
                write!(
                    f,
                    "earlier neighbours of v_{k} are not consecutive on the contour"
                )
            }
            OrderViolation::NoLaterNeighbor { k } => write!(f, "v_{k} has no later neighbour"),
            OrderViolation::WrongEndpoints { k } => {
                write!(f, "recorded contour endpoints of v_{k} are wrong")
            }
            OrderViolation::WrongColor { u, v } => {
                write!(f, "edge ({u}, {v}) has the wrong colour")
            }
            OrderViolation::NotATree(c) => write!(f, "{c:?} edges do not form the expected tree"),
        }
    }
}

impl std::error::Error for OrderViolation {}

/// Replays the insertions of `order` on a plain contour list, checking that
/// every step is a legal canonical insertion, and derives the colouring.
fn replay(pg: &PlaneGraph, order: &[usize]) -> std::result::Result<CanonicalOrder, OrderViolation> {
    let (pg, v1, v2, vn) = oriented_frame(pg).map_err(OrderViolation::BadInput)?;
    let n = pg.n();
    if order.len() != n {
        return Err(OrderViolation::NotPermutation);
    }
    let mut rank = vec![usize::MAX; n];
    for (k, &v) in order.iter().enumerate() {
        if v >= n || rank[v] != usize::MAX {
            return Err(OrderViolation::NotPermutation);
        }
        rank[v] = k;
    }
    if order[0] != v1 || order[1] != v2 || order[n - 1] != vn {
        return Err(OrderViolation::OuterTriangle);
    }

    let mut contour = vec![v1, v2];
    let mut left = vec![None; n];
    let mut right = vec![None; n];
    let mut colors = HashMap::new();
    colors.insert(norm(v1, v2), EdgeColor::Uncolored);
    for (k, &v) in order.iter().enumerate().skip(2) {
        let step = k + 1;
        let mut earlier: Vec<usize> = pg
            .graph()
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| rank[w] < k)
            .collect();
        if earlier.len() < 2 {
            return Err(OrderViolation::NotConsecutive { k: step });
        }
        let mut pos = Vec::with_capacity(earlier.len());
        for &w in &earlier {
            match contour.iter().position(|&c| c == w) {
                Some(i) => pos.push(i),
                None => return Err(OrderViolation::NotConsecutive { k: step }),
            }
        }
        let lo = *pos.iter().min().unwrap();
        let hi = *pos.iter().max().unwrap();
        if hi - lo + 1 != earlier.len() {
            return Err(OrderViolation::NotConsecutive { k: step });
        }
        let run: Vec<usize> = contour[lo..=hi].to_vec();
        // the run must also be the rotation of v read forward from w_l
        let rot = pg.rotation(v);
        let start = rot.iter().position(|&w| w == run[0]).unwrap();
        for (j, &w) in run.iter().enumerate() {
            if rot[(start + j) % rot.len()] != w {
                return Err(OrderViolation::NotConsecutive { k: step });
            }
        }
        let (wl, wr) = (run[0], run[run.len() - 1]);
        left[v] = Some(wl);
        right[v] = Some(wr);
        colors.insert(norm(wl, v), EdgeColor::Blue);
        colors.insert(norm(v, wr), EdgeColor::Green);
        for &w in &run[1..run.len() - 1] {
            colors.insert(norm(w, v), EdgeColor::Red);
        }
        contour.splice(lo + 1..hi, [v]);
        earlier.clear();
    }
    let mut rank_out = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        rank_out[v] = k;
    }
    Ok(CanonicalOrder {
        order: order.to_vec(),
        rank: rank_out,
        left,
        right,
        colors,
    })
}

/// Checks P.1 to P.3, the recorded contour endpoints, the colouring and the
/// colour-class trees by direct simulation. Quadratic time.
pub fn validate_canonical_order(
    pg: &PlaneGraph,
    co: &CanonicalOrder,
) -> std::result::Result<(), OrderViolation> {
    let trace = replay(pg, &co.order)?;
    let (pg, v1, v2, vn) = oriented_frame(pg).map_err(OrderViolation::BadInput)?;
    let n = pg.n();
    let g = pg.graph();

    for k in 0..n - 1 {
        let v = co.order[k];
        if !g.neighbors(v).iter().any(|&w| trace.rank[w] > k) {
            return Err(OrderViolation::NoLaterNeighbor { k: k + 1 });
        }
    }
    let mut keep = vec![false; n];
    for (k, &v) in co.order.iter().enumerate() {
        keep[v] = true;
        if k >= 2 && !g.is_biconnected_induced(&keep) {
            return Err(OrderViolation::NotBiconnected { k: k + 1 });
        }
    }
    for (k, &v) in co.order.iter().enumerate() {
        if co.left[v] != trace.left[v] || co.right[v] != trace.right[v] {
            return Err(OrderViolation::WrongEndpoints { k: k + 1 });
        }
    }
    if co.rank != trace.rank {
        return Err(OrderViolation::NotPermutation);
    }
    for &(u, v) in g.edges() {
        if co.color(u, v) != trace.color(u, v) {
            return Err(OrderViolation::WrongColor { u, v });
        }
    }
    if co.colors.len() != g.m() {
        let stray = co
            .colors
            .keys()
            .find(|&&(u, v)| !g.has_edge(u, v))
            .copied()
            .unwrap_or((v1, v2));
        return Err(OrderViolation::WrongColor {
            u: stray.0,
            v: stray.1,
        });
    }
    check_color_trees(co, n, v1, v2, vn)
}

/// Without the outer edges, each colour class is a tree on `n - 2`
/// vertices: blue spans `v1, v3..v_{n-1}`, green spans `v2, v3..v_{n-1}`,
/// red spans `v3..vn`.
fn check_color_trees(
    co: &CanonicalOrder,
    n: usize,
    v1: usize,
    v2: usize,
    vn: usize,
) -> std::result::Result<(), OrderViolation> {
    let outer = [norm(v1, v2), norm(v1, vn), norm(v2, vn)];
    for (color, excluded) in [
        (EdgeColor::Blue, [v2, vn]),
        (EdgeColor::Green, [v1, vn]),
        (EdgeColor::Red, [v1, v2]),
    ] {
        let edges: Vec<_> = co
            .edges_of(color)
            .into_iter()
            .filter(|e| !outer.contains(e))
            .collect();
        let spanned: Vec<usize> = (0..n).filter(|v| !excluded.contains(v)).collect();
        if !is_spanning_tree(n, &spanned, &edges) {
            return Err(OrderViolation::NotATree(color));
        }
    }
    Ok(())
}

fn is_spanning_tree(n: usize, vertices: &[usize], edges: &[(usize, usize)]) -> bool {
    if vertices.is_empty() || edges.len() + 1 != vertices.len() {
        return false;
    }
    let mut inside = vec![false; n];
    for &v in vertices {
        inside[v] = true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in edges {
        if !inside[u] || !inside[v] {
            return false;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Convenience wrapper: `true` iff [`validate_canonical_order`] accepts.
pub fn is_canonical_order(pg: &PlaneGraph, co: &CanonicalOrder) -> bool {
    validate_canonical_order(pg, co).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::plane::{embed, triangulate};

    fn k(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn octahedron() -> Graph {
        Graph::from_edges(
            6,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (5, 1),
                (5, 2),
                (5, 3),
                (5, 4),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn triangle() {
        let pg = embed(&k(3)).unwrap();
        let co = canonical_order(&pg).unwrap();
        assert_eq!(co.order, vec![0, 1, 2]);
        assert_eq!(co.color(0, 2), Some(EdgeColor::Blue));
        assert_eq!(co.color(1, 2), Some(EdgeColor::Green));
        assert_eq!(co.color(0, 1), Some(EdgeColor::Uncolored));
        assert!(validate_canonical_order(&pg, &co).is_ok());
    }

    #[test]
    fn k4_inner_vertex_last() {
        let pg = embed(&k(4)).unwrap();
        let co = canonical_order(&pg).unwrap();
        assert_eq!(co.order, vec![0, 1, 2, 3]);
        let v4 = co.vn();
        let (wl, wr) = (co.left[v4].unwrap(), co.right[v4].unwrap());
        assert_eq!(co.color(wl, v4), Some(EdgeColor::Blue));
        assert_eq!(co.color(v4, wr), Some(EdgeColor::Green));
        assert_eq!(co.edges_of(EdgeColor::Red), vec![(co.order[2], v4)]);
        validate_canonical_order(&pg, &co).unwrap();
    }

    #[test]
    fn k4_bad_third_vertex() {
        let pg = embed(&k(4)).unwrap();
        let co = canonical_order(&pg).unwrap();
        let mut bad = co.clone();
        bad.order.swap(2, 3);
        assert!(!is_canonical_order(&pg, &bad));
    }

    #[test]
    fn octahedron_validates() {
        let pg = embed(&octahedron()).unwrap();
        let co = canonical_order(&pg).unwrap();
        validate_canonical_order(&pg, &co).unwrap();
        assert_eq!(co.edges_of(EdgeColor::Red).len(), 3);
    }

    #[test]
    fn rejects_non_maximal() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let pg = embed(&c4).unwrap();
        assert!(matches!(
            canonical_order(&pg),
            Err(Error::NotMaximal { .. })
        ));
        let tri = triangulate(&pg).unwrap();
        let co = canonical_order(&tri).unwrap();
        validate_canonical_order(&tri, &co).unwrap();
    }

    #[test]
    fn mirrored_embedding_gives_same_order_shape() {
        let pg = embed(&octahedron()).unwrap();
        let co = canonical_order(&pg).unwrap();
        let co_m = canonical_order(&pg.mirrored()).unwrap();
        assert_eq!(co.v1(), co_m.v1());
        assert_eq!(co.v2(), co_m.v2());
        validate_canonical_order(&pg.mirrored(), &co_m).unwrap();
    }

    #[test]
    fn from_permutation_matches() {
        let pg = embed(&octahedron()).unwrap();
        let co = canonical_order(&pg).unwrap();
        let replayed = CanonicalOrder::from_permutation(&pg, co.order.clone()).unwrap();
        assert_eq!(replayed, co);
    }
}
