#![allow(dead_code)]

use disklink::generate::gen_maximal_planar;
use disklink::{CanonicalOrder, Graph, GridDrawing, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Stacked triangulation with a random subset of edges removed, kept
/// connected.
pub fn random_planar(n: usize, seed: u64, keep: f64) -> Graph {
    let full = gen_maximal_planar(n, seed).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut edges = full.edges().to_vec();
    // shuffle, then add a spanning tree first so the result stays connected
    for i in (1..edges.len()).rev() {
        let j = rng.gen_range(0..=i);
        edges.swap(i, j);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut g = Graph::new(n);
    let mut rest = Vec::new();
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            g.add_edge(u, v).unwrap();
        } else {
            rest.push((u, v));
        }
    }
    for (u, v) in rest {
        if rng.gen_bool(keep) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Shift method with explicit coordinates and explicit shift-sets, written
/// straight from the three-phase description. Quadratic; used as a second
/// route to the same drawing.
pub struct NaiveShift {
    pub pos: Vec<Option<(i64, i64)>>,
    /// red edge -> displacement (head - tail) when it was created
    pub red_vectors: Vec<((usize, usize), (i64, i64))>,
    /// edges (w_i, v_k) with |dy| < |dx| at creation
    pub flat_edges: Vec<(usize, usize)>,
    /// insertions after which the contour left slopes +-1
    pub contour_breaks: Vec<usize>,
    /// insertions whose apex was not a grid point
    pub parity_breaks: Vec<usize>,
}

impl NaiveShift {
    pub fn run(co: &CanonicalOrder) -> NaiveShift {
        let n = co.order.len();
        let (v1, v2, v3) = (co.order[0], co.order[1], co.order[2]);
        let mut pos = vec![None; n];
        pos[v1] = Some((0, 0));
        pos[v2] = Some((2, 0));
        pos[v3] = Some((1, 1));
        let mut shift_set: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        let mut contour = vec![v1, v3, v2];
        let mut out = NaiveShift {
            pos: Vec::new(),
            red_vectors: Vec::new(),
            flat_edges: Vec::new(),
            contour_breaks: Vec::new(),
            parity_breaks: Vec::new(),
        };
        for &vk in &co.order[3..] {
            let (wl, wr) = (co.left[vk].unwrap(), co.right[vk].unwrap());
            let l = contour.iter().position(|&w| w == wl).unwrap();
            let r = contour.iter().position(|&w| w == wr).unwrap();
            let mv = |pos: &mut Vec<Option<(i64, i64)>>, set: &[usize], by: i64| {
                for &u in set {
                    let (x, y) = pos[u].unwrap();
                    pos[u] = Some((x + by, y));
                }
            };
            // phase 1
            for i in l + 1..r {
                mv(&mut pos, &shift_set[contour[i]], (i - l) as i64);
            }
            // phase 2: try r - l, bump by one if the distance is odd
            let mut d_r = (r - l) as i64;
            let (xl, yl) = pos[wl].unwrap();
            let (xr, yr) = pos[wr].unwrap();
            if ((xr + d_r - xl) + (yr - yl).abs()) % 2 != 0 {
                d_r += 1;
            }
            mv(&mut pos, &shift_set[wr], d_r);
            // phase 3
            for &w in &contour[r + 1..] {
                mv(&mut pos, &shift_set[w], d_r);
            }
            let (xl, yl) = pos[wl].unwrap();
            let (xr, yr) = pos[wr].unwrap();
            let (sx, sy) = (xl + xr + yr - yl, xr - xl + yl + yr);
            if sx % 2 != 0 || sy % 2 != 0 {
                out.parity_breaks.push(vk);
            }
            let p = (sx.div_euclid(2), sy.div_euclid(2));
            pos[vk] = Some(p);
            for &w in &contour[l..=r] {
                let (x, y) = pos[w].unwrap();
                if (p.1 - y).abs() < (p.0 - x).abs() {
                    out.flat_edges.push((w, vk));
                }
            }
            for &w in &contour[l + 1..r] {
                let (x, y) = pos[w].unwrap();
                out.red_vectors.push(((w, vk), (p.0 - x, p.1 - y)));
            }
            let mut merged = vec![vk];
            for &w in &contour[l + 1..r] {
                merged.extend_from_slice(&shift_set[w]);
            }
            shift_set[vk] = merged;
            contour.splice(l + 1..r, [vk]);
            let ok = contour.windows(2).all(|w| {
                let (a, b) = (pos[w[0]].unwrap(), pos[w[1]].unwrap());
                b.0 > a.0 && (b.1 - a.1).abs() == b.0 - a.0
            });
            if !ok {
                out.contour_breaks.push(vk);
            }
        }
        out.pos = pos;
        out
    }

    pub fn drawing(&self) -> GridDrawing {
        GridDrawing::new(
            self.pos
                .iter()
                .map(|p| {
                    let (x, y) = p.unwrap();
                    Point::new(x, y)
                })
                .collect(),
        )
        .normalized()
    }
}
