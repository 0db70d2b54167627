//! Graph families for tests and the command line.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::plane::PlaneGraph;
use crate::{Error, Result};

/// Star with centre 0 and leaves `1..n`.
pub fn gen_star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn gen_path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Random stacked triangulation: start from the triangle `0, 1, 2` and
/// repeatedly put a new vertex into a uniformly chosen inner face.
pub fn gen_maximal_planar(n: usize, seed: u64) -> Result<Graph> {
    Ok(gen_maximal_planar_embedded(n, seed)?.graph().clone())
}

/// [`gen_maximal_planar`] with its embedding; the outer face is `0, 1, 2`.
pub fn gen_maximal_planar_embedded(n: usize, seed: u64) -> Result<PlaneGraph> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    // ccw successor of w around u, keyed by dart (u, w)
    let mut succ: HashMap<(usize, usize), usize> = HashMap::with_capacity(6 * n);
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        succ.insert((a, b), c);
        succ.insert((a, c), b);
    }
    for (u, v) in [(0, 1), (1, 2), (0, 2)] {
        g.add_edge(u, v)?;
    }
    // inner faces as counter-clockwise triples
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        for (x, after, before) in [(a, b, c), (b, c, a), (c, a, b)] {
            g.add_edge(x, v)?;
            succ.insert((x, after), v);
            succ.insert((x, v), before);
        }
        succ.insert((v, a), b);
        succ.insert((v, b), c);
        succ.insert((v, c), a);
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    let rotation = (0..n)
        .map(|u| {
            let start = g.neighbors(u)[0];
            let mut rot = vec![start];
            let mut w = succ[&(u, start)];
            while w != start {
                rot.push(w);
                w = succ[&(u, w)];
            }
            rot
        })
        .collect();
    PlaneGraph::from_rotation(g, rotation, Some((1, 0)))
}
