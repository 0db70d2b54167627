//! Plane graphs: a graph with a rotation system and a designated outer face.
//!
//! Faces are traced with the left-hand rule: the dart following `u -> v` is
//! `v -> w`, where `w` precedes `u` in the rotation of `v`. With
//! counter-clockwise rotations this walks bounded faces counter-clockwise and
//! the outer face clockwise.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::{lr, Error, Result};

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    graph: Graph,
    /// darts of vertex `v` are `offsets[v]..offsets[v + 1]`, in rotation order
    offsets: Vec<usize>,
    targets: Vec<usize>,
    sources: Vec<usize>,
    twin: Vec<usize>,
    outer: usize,
}

impl PlaneGraph {
    /// Builds a plane graph from counter-clockwise neighbour lists. The outer
    /// face is the face to the left of `outer` when given, otherwise the face
    /// of the first dart of vertex 0.
    pub fn from_rotation(
        graph: Graph,
        rotation: Vec<Vec<usize>>,
        outer: Option<(usize, usize)>,
    ) -> Result<Self> {
        let n = graph.n();
        if rotation.len() != n {
            return Err(Error::InvalidRotation(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                n
            )));
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(2 * graph.m());
        let mut sources = Vec::with_capacity(2 * graph.m());
        offsets.push(0);
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            let mut adj = graph.neighbors(v).to_vec();
            adj.sort_unstable();
            if sorted != adj {
                return Err(Error::InvalidRotation(format!(
                    "rotation of vertex {v} is not a permutation of its neighbours"
                )));
            }
            targets.extend_from_slice(rot);
            sources.extend(std::iter::repeat_n(v, rot.len()));
            offsets.push(targets.len());
        }
        // twin lookup: sort darts by (min, max) endpoint pair
        let mut keyed: Vec<(usize, usize, usize)> = (0..targets.len())
            .map(|d| {
                let (a, b) = (sources[d], targets[d]);
                (a.min(b), a.max(b), d)
            })
            .collect();
        keyed.sort_unstable();
        let mut twin = vec![0; targets.len()];
        for pair in keyed.chunks(2) {
            twin[pair[0].2] = pair[1].2;
            twin[pair[1].2] = pair[0].2;
        }
        let mut pg = PlaneGraph {
            graph,
            offsets,
            targets,
            sources,
            twin,
            outer: 0,
        };
        if n >= 2 {
            let outer_dart = match outer {
                Some((u, v)) => pg.dart(u, v).ok_or_else(|| {
                    Error::InvalidRotation(format!("outer dart ({u}, {v}) is not an edge"))
                })?,
                None => pg.offsets[0],
            };
            pg.outer = outer_dart;
            let faces = pg.face_count();
            let expected = 2 + pg.graph.m() - n;
            if faces != expected {
                return Err(Error::InvalidRotation(format!(
                    "rotation traces {faces} faces, a planar embedding has {expected}"
                )));
            }
        }
        Ok(pg)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Counter-clockwise neighbour order of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.rotation(v).to_vec()).collect()
    }

    pub(crate) fn dart(&self, u: usize, v: usize) -> Option<usize> {
        (self.offsets[u]..self.offsets[u + 1]).find(|&d| self.targets[d] == v)
    }

    /// Dart following `d` on the face to its left.
    #[inline]
    pub(crate) fn face_next(&self, d: usize) -> usize {
        let t = self.twin[d];
        let v = self.sources[t];
        if t == self.offsets[v] {
            self.offsets[v + 1] - 1
        } else {
            t - 1
        }
    }

    fn walk_from(&self, start: usize) -> Vec<usize> {
        let mut walk = vec![self.sources[start]];
        let mut d = self.face_next(start);
        while d != start {
            walk.push(self.sources[d]);
            d = self.face_next(d);
        }
        walk
    }

    /// Vertex sequence of the face to the left of dart `u -> v`.
    pub fn face_of(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        self.dart(u, v).map(|d| self.walk_from(d))
    }

    /// All faces as vertex sequences, each starting at its lowest-numbered dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.targets.len()];
        let mut faces = Vec::new();
        for start in 0..self.targets.len() {
            if seen[start] {
                continue;
            }
            let mut d = start;
            let mut walk = Vec::new();
            loop {
                seen[d] = true;
                walk.push(self.sources[d]);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    pub fn outer_face(&self) -> Vec<usize> {
        if self.targets.is_empty() {
            return (0..self.n()).collect();
        }
        self.walk_from(self.outer)
    }

    /// A dart `(u, v)` whose left face is the outer face.
    pub fn outer_dart(&self) -> (usize, usize) {
        (self.sources[self.outer], self.targets[self.outer])
    }

    /// Same embedding with the outer face moved to the left face of `u -> v`.
    pub fn with_outer(&self, u: usize, v: usize) -> Result<Self> {
        let d = self
            .dart(u, v)
            .ok_or_else(|| Error::InvalidRotation(format!("({u}, {v}) is not an edge")))?;
        let mut pg = self.clone();
        pg.outer = d;
        Ok(pg)
    }

    /// Mirror image: every rotation reversed, same outer face.
    pub fn mirrored(&self) -> PlaneGraph {
        if self.targets.is_empty() {
            return self.clone();
        }
        let rotation = (0..self.n())
            .map(|v| self.rotation(v).iter().rev().copied().collect())
            .collect();
        let (u, v) = self.outer_dart();
        PlaneGraph::from_rotation(self.graph.clone(), rotation, Some((v, u)))
            .expect("mirror of a valid embedding")
    }

    pub fn is_maximal(&self) -> bool {
        self.n() >= 3 && self.m() == 3 * self.n() - 6
    }
}

/// Computes a planar embedding of a connected graph with at least three
/// vertices.
pub fn embed(g: &Graph) -> Result<PlaneGraph> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rotation = lr::planar_rotation(g).ok_or(Error::NotPlanar)?;
    // The LR embedding lists neighbours clockwise; reverse for ccw.
    let rotation = rotation
        .into_iter()
        .map(|mut r| {
            r.reverse();
            r
        })
        .collect();
    let pg = PlaneGraph::from_rotation(g.clone(), rotation, None)
        .map_err(|e| Error::Internal(format!("planarity embedding rejected: {e}")))?;
    // Outer face: of the two faces on the smallest edge, the one reaching the
    // larger vertex id. Makes small fixtures come out in id order.
    let &(a, b) = g.edges().iter().min().expect("connected with n >= 3");
    let left = pg.face_of(a, b).expect("edge");
    let right = pg.face_of(b, a).expect("edge");
    let top = |f: &[usize]| f.iter().copied().max().unwrap_or(0);
    if top(&right) > top(&left) {
        pg.with_outer(b, a)
    } else {
        pg.with_outer(a, b)
    }
}

/// Adds edges until every face is a triangle. The new outer face is the
/// triangle left of the old outer dart.
pub fn triangulate(pg: &PlaneGraph) -> Result<PlaneGraph> {
    let n = pg.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut graph = pg.graph().clone();
    let mut rot = pg.rotations();
    let mut work: Vec<VecDeque<usize>> = pg
        .faces()
        .into_iter()
        .filter(|f| f.len() > 3)
        .map(VecDeque::from)
        .collect();

    // insert `new` into rot(at) immediately after `after`
    fn insert_after(rot: &mut [Vec<usize>], at: usize, after: usize, new: usize) {
        let pos = rot[at]
            .iter()
            .position(|&w| w == after)
            .expect("corner neighbour");
        rot[at].insert(pos + 1, new);
    }

    while let Some(mut face) = work.pop() {
        let mut failures = 0;
        while face.len() > 3 {
            let len = face.len();
            let apex = face[0];
            let far = face[2];
            if apex != far && !graph.has_edge(apex, far) {
                graph.add_edge(apex, far)?;
                insert_after(&mut rot, apex, face[1], far);
                insert_after(&mut rot, far, face[3 % len], apex);
                face.remove(1);
                failures = 0;
            } else {
                // pivot: fan from the next corner instead
                face.rotate_left(1);
                failures += 1;
                if failures >= len {
                    let (i, j) = find_diagonal(&face, &graph).ok_or_else(|| {
                        Error::Internal("face without a valid diagonal".to_string())
                    })?;
                    let (a, b) = (face[i], face[j]);
                    graph.add_edge(a, b)?;
                    insert_after(&mut rot, a, face[(i + 1) % len], b);
                    insert_after(&mut rot, b, face[(j + 1) % len], a);
                    let first: VecDeque<usize> = (i..=j).map(|k| face[k]).collect();
                    let second: VecDeque<usize> = (j..len).chain(0..=i).map(|k| face[k]).collect();
                    work.push(first);
                    face = second;
                    failures = 0;
                }
            }
        }
    }

    let outer = pg.outer_dart();
    let tri = PlaneGraph::from_rotation(graph, rot, Some(outer))?;
    if !tri.is_maximal() {
        return Err(Error::Internal(format!(
            "triangulation produced {} edges on {} vertices",
            tri.m(),
            n
        )));
    }
    Ok(tri)
}

fn find_diagonal(face: &VecDeque<usize>, graph: &Graph) -> Option<(usize, usize)> {
    let len = face.len();
    for i in 0..len {
        for j in i + 2..len {
            if i == 0 && j == len - 1 {
                continue;
            }
            let (a, b) = (face[i], face[j]);
            if a != b && !graph.has_edge(a, b) {
                return Some((i, j));
            }
        }
    }
    None
}
