//! Drawings of bounded-bandwidth graphs on the points `(i, i^2 mod p)`.

use std::collections::{HashSet, VecDeque};

use super::stretch::{min_stretch_factors, stretch};
use crate::drawing::{GridDrawing, Point};
use crate::graph::Graph;
use crate::verify::check_disk_link;
use crate::{Error, Result};

/// Largest graph accepted by [`exact_bandwidth_small`].
pub const EXACT_BANDWIDTH_LIMIT: usize = 12;

/// A vertex ordering together with the largest position gap over its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandwidthOrdering {
    pub order: Vec<usize>,
    pub b: usize,
}

impl BandwidthOrdering {
    /// Measures `order` on `g`.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let b = bandwidth_of_ordering(g, &order)?;
        Ok(BandwidthOrdering { order, b })
    }
}

fn positions(n: usize, order: &[usize]) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(Error::NotPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::NotPermutation);
        }
        pos[v] = i;
    }
    Ok(pos)
}

/// Maximum `|pos(u) - pos(v)|` over the edges.
pub fn bandwidth_of_ordering(g: &Graph, order: &[usize]) -> Result<usize> {
    let pos = positions(g.n(), order)?;
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| pos[u].abs_diff(pos[v]))
        .max()
        .unwrap_or(0))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p > b`; at most `2b` for `b >= 1`.
pub fn smallest_prime_gt(b: u64) -> u64 {
    (b + 1..)
        .find(|&p| is_prime(p))
        .expect("primes are unbounded")
}

/// `(i, i^2 mod p)` for `i = 0..n`.
pub fn erdos_points(p: u64, n: usize) -> Result<Vec<Point>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok((0..n as u64)
        .map(|i| Point::new(i as i64, ((i % p) * (i % p) % p) as i64))
        .collect())
}

/// Places the `i`-th vertex of the ordering at `(i, i^2 mod p)` with `p` the
/// smallest prime above `max(b, 1)`. Returns the drawing and `p`.
pub fn bandwidth_base_drawing(g: &Graph, ord: &BandwidthOrdering) -> Result<(GridDrawing, u64)> {
    let pos = positions(g.n(), &ord.order)?;
    for &(u, v) in g.edges() {
        let span = pos[u].abs_diff(pos[v]);
        if span > ord.b {
            return Err(Error::InvalidOrdering {
                u,
                v,
                span,
                b: ord.b,
            });
        }
    }
    let p = smallest_prime_gt(ord.b.max(1) as u64);
    let pts = erdos_points(p, g.n())?;
    Ok((
        GridDrawing::new((0..g.n()).map(|v| pts[pos[v]]).collect()),
        p,
    ))
}

/// Disk-link drawing in `(2(p-1)(n-1)+1) x (2(p-1)^2+1)`: the base placement
/// stretched by the minimal factors, certified before it is returned.
pub fn draw_bandwidth(g: &Graph, ord: &BandwidthOrdering) -> Result<GridDrawing> {
    let (base, _) = bandwidth_base_drawing(g, ord)?;
    let f = min_stretch_factors(&base, g)?;
    let d = stretch(&base, g, f)?;
    let report = check_disk_link(g, &d)?;
    if !report.is_disk_link {
        return Err(Error::CertificationFailed(format!(
            "bandwidth drawing has squared resolution {:?}",
            report.min_res_sq.map(|r| r.to_string())
        )));
    }
    Ok(d)
}

/// Reverse Cuthill-McKee: breadth-first from a minimum-degree vertex of each
/// component, neighbours by increasing degree, then reversed.
pub fn rcm_ordering(g: &Graph) -> BandwidthOrdering {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    for &s in &by_degree {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut nb: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !seen[w])
                .collect();
            nb.sort_by_key(|&w| (g.degree(w), w));
            for w in nb {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order.reverse();
    let b = bandwidth_of_ordering(g, &order).expect("permutation");
    BandwidthOrdering { order, b }
}

/// Minimum-bandwidth ordering by branch and bound, for at most 12 vertices.
pub fn exact_bandwidth_small(g: &Graph) -> Result<BandwidthOrdering> {
    let n = g.n();
    if n > EXACT_BANDWIDTH_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: EXACT_BANDWIDTH_LIMIT,
        });
    }
    let rcm = rcm_ordering(g);
    if g.m() == 0 {
        return Ok(BandwidthOrdering {
            order: (0..n).collect(),
            b: 0,
        });
    }
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let lower = max_deg.div_ceil(2).max(1);
    for b in lower..rcm.b {
        let mut search = Search {
            g,
            b,
            order: Vec::with_capacity(n),
            pos: vec![usize::MAX; n],
            failed: HashSet::new(),
        };
        if search.run() {
            return Ok(BandwidthOrdering {
                order: search.order,
                b,
            });
        }
    }
    Ok(rcm)
}

struct Search<'a> {
    g: &'a Graph,
    b: usize,
    order: Vec<usize>,
    pos: Vec<usize>,
    /// (placed set, last b vertices) states known to fail
    failed: HashSet<(u32, Vec<u8>)>,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let n = self.g.n();
        let i = self.order.len();
        if i == n {
            return true;
        }
        let mask: u32 = self.order.iter().map(|&v| 1u32 << v).sum();
        let window: Vec<u8> = self.order[i.saturating_sub(self.b)..]
            .iter()
            .map(|&v| v as u8)
            .collect();
        let key = (mask, window);
        if self.failed.contains(&key) {
            return false;
        }
        for v in 0..n {
            if self.pos[v] != usize::MAX {
                continue;
            }
            // every placed neighbour must be within b positions
            if self
                .g
                .neighbors(v)
                .iter()
                .any(|&w| self.pos[w] != usize::MAX && i - self.pos[w] > self.b)
            {
                continue;
            }
            // the vertex leaving the window must have all neighbours placed
            if i >= self.b {
                let old = self.order[i - self.b];
                let open = self
                    .g
                    .neighbors(old)
                    .iter()
                    .any(|&w| w != v && self.pos[w] == usize::MAX);
                if open {
                    continue;
                }
            }
            self.pos[v] = i;
            self.order.push(v);
            if self.run() {
                return true;
            }
            self.order.pop();
            self.pos[v] = usize::MAX;
        }
        self.failed.insert(key);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    #[test]
    fn primes() {
        assert_eq!(smallest_prime_gt(1), 2);
        assert_eq!(smallest_prime_gt(4), 5);
        assert_eq!(smallest_prime_gt(13), 17);
        for b in 1..500 {
            assert!(smallest_prime_gt(b) <= 2 * b);
        }
    }

    #[test]
    fn erdos_examples() {
        let pts = |p, n| -> Vec<(i64, i64)> {
            erdos_points(p, n)
                .unwrap()
                .iter()
                .map(|q| (q.x, q.y))
                .collect()
        };
        assert_eq!(
            pts(5, 6),
            vec![(0, 0), (1, 1), (2, 4), (3, 4), (4, 1), (5, 0)]
        );
        assert_eq!(pts(2, 4), vec![(0, 0), (1, 1), (2, 0), (3, 1)]);
        assert_eq!(erdos_points(4, 3), Err(Error::NotPrime(4)));
    }

    #[test]
    fn path_drawing() {
        let g = path(4);
        let ord = BandwidthOrdering::new(&g, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(ord.b, 1);
        let d = draw_bandwidth(&g, &ord).unwrap();
        assert_eq!(
            d,
            GridDrawing::from_coords(&[(0, 0), (2, 2), (4, 0), (6, 2)])
        );
    }

    #[test]
    fn cycle_ordering() {
        let g = cycle(6);
        assert_eq!(bandwidth_of_ordering(&g, &[0, 1, 2, 3, 4, 5]).unwrap(), 5);
        assert_eq!(bandwidth_of_ordering(&g, &[0, 1, 5, 2, 4, 3]).unwrap(), 2);
        let ord = BandwidthOrdering::new(&g, vec![0, 1, 5, 2, 4, 3]).unwrap();
        let (_, p) = bandwidth_base_drawing(&g, &ord).unwrap();
        assert_eq!(p, 3);
        assert!(draw_bandwidth(&g, &ord).is_ok());
        assert_eq!(exact_bandwidth_small(&g).unwrap().b, 2);
        assert_eq!(exact_bandwidth_small(&path(7)).unwrap().b, 1);
    }

    #[test]
    fn ordering_errors() {
        let g = cycle(6);
        let bad = BandwidthOrdering {
            order: vec![0, 1, 2, 3, 4, 5],
            b: 2,
        };
        assert!(matches!(
            draw_bandwidth(&g, &bad),
            Err(Error::InvalidOrdering { .. })
        ));
        assert_eq!(
            bandwidth_of_ordering(&g, &[0, 1, 2, 3, 4, 4]),
            Err(Error::NotPermutation)
        );
        assert!(matches!(
            exact_bandwidth_small(&path(13)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn complete_graph_bandwidth() {
        let mut g = Graph::new(5);
        for u in 0..5 {
            for v in u + 1..5 {
                g.add_edge(u, v).unwrap();
            }
        }
        assert_eq!(bandwidth_of_ordering(&g, &[3, 1, 4, 0, 2]).unwrap(), 4);
        assert_eq!(exact_bandwidth_small(&g).unwrap().b, 4);
    }
}
