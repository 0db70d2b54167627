//! Left-right planarity test with embedding extraction (Brandes' formulation
//! of the de Fraysseix-Rosenstiehl criterion).

use std::collections::HashMap;

use crate::graph::{norm, Graph};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'g> {
    g: &'g Graph,
    /// (neighbour, edge id) per vertex
    adjs: Vec<Vec<(usize, usize)>>,
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    out: Vec<Vec<usize>>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    roots: Vec<usize>,
    refs: Vec<Option<usize>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    emb: HalfEdges,
}

/// Rotation under construction: cyclic cw/ccw links per half-edge.
#[derive(Default)]
struct HalfEdges {
    links: HashMap<(usize, usize), (usize, usize)>,
    first: Vec<usize>,
}

impl HalfEdges {
    fn new(n: usize) -> Self {
        HalfEdges {
            links: HashMap::new(),
            first: vec![NONE; n],
        }
    }

    fn add_cw(&mut self, start: usize, end: usize, reference: usize) {
        if reference == NONE {
            self.links.insert((start, end), (end, end));
            self.first[start] = end;
            return;
        }
        let cw_ref = self.links[&(start, reference)].0;
        self.links.get_mut(&(start, reference)).unwrap().0 = end;
        self.links.insert((start, end), (cw_ref, reference));
        self.links.get_mut(&(start, cw_ref)).unwrap().1 = end;
    }

    fn add_ccw(&mut self, start: usize, end: usize, reference: usize) {
        if reference == NONE {
            self.add_cw(start, end, NONE);
            return;
        }
        let ccw_ref = self.links[&(start, reference)].1;
        self.add_cw(start, end, ccw_ref);
        if reference == self.first[start] {
            self.first[start] = end;
        }
    }

    fn add_first(&mut self, start: usize, end: usize) {
        let reference = self.first[start];
        self.add_ccw(start, end, reference);
    }

    fn cw_order(&self, v: usize) -> Vec<usize> {
        let first = self.first[v];
        if first == NONE {
            return Vec::new();
        }
        let mut out = vec![first];
        let mut cur = self.links[&(v, first)].0;
        while cur != first {
            out.push(cur);
            cur = self.links[&(v, cur)].0;
        }
        out
    }
}

/// Returns a rotation system (one cyclic neighbour list per vertex, all in
/// the same orientation) if `g` is planar.
pub(crate) fn planar_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if n > 2 && g.m() > 3 * n - 6 {
        return None;
    }
    // Recursion depth is bounded by n; give deep inputs a larger stack.
    if n > 20_000 {
        let stack = 256 + n * 512;
        return std::thread::scope(|s| {
            std::thread::Builder::new()
                .stack_size(stack)
                .spawn_scoped(s, || run(g))
                .expect("spawn planarity worker")
                .join()
                .expect("planarity worker panicked")
        });
    }
    run(g)
}

fn run(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let mut st = LrState::new(g);
    st.orient();
    for v in 0..g.n() {
        let mut out = std::mem::take(&mut st.out[v]);
        out.sort_by_key(|&e| st.nesting[e]);
        st.out[v] = out;
    }
    for i in 0..st.roots.len() {
        let r = st.roots[i];
        if !st.testing(r) {
            return None;
        }
    }
    for e in 0..g.m() {
        let s = st.sign(e);
        st.nesting[e] *= s;
    }
    for v in 0..g.n() {
        let mut out = std::mem::take(&mut st.out[v]);
        out.sort_by_key(|&e| st.nesting[e]);
        let mut prev = NONE;
        for &e in &out {
            let w = st.dst[e];
            st.emb.add_cw(v, w, prev);
            prev = w;
        }
        st.out[v] = out;
    }
    for i in 0..st.roots.len() {
        let r = st.roots[i];
        st.embedding(r);
    }
    Some((0..g.n()).map(|v| st.emb.cw_order(v)).collect())
}

impl<'g> LrState<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let m = g.m();
        let mut ids = HashMap::with_capacity(m);
        for (i, &e) in g.edges().iter().enumerate() {
            ids.insert(e, i);
        }
        let adjs = (0..n)
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .map(|&w| (w, ids[&norm(v, w)]))
                    .collect()
            })
            .collect();
        LrState {
            g,
            adjs,
            src: vec![NONE; m],
            dst: vec![NONE; m],
            oriented: vec![false; m],
            out: vec![Vec::new(); n],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            roots: Vec::new(),
            refs: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![NONE; m],
            left_ref: vec![NONE; n],
            right_ref: vec![NONE; n],
            emb: HalfEdges::new(n),
        }
    }

    fn orient(&mut self) {
        for v in 0..self.g.n() {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.dfs_orientation(v);
            }
        }
    }

    fn dfs_orientation(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for i in 0..self.adjs[v].len() {
            let (w, vw) = self.adjs[v][i];
            if self.oriented[vw] {
                continue;
            }
            self.oriented[vw] = true;
            self.src[vw] = v;
            self.dst[vw] = w;
            self.out[v].push(vw);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.dfs_orientation(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < self.height[v] {
                // chordal
                self.nesting[vw] += 1;
            }
            if e != NONE {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) if !i.is_empty() => self.lowpt[h] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.unwrap()];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.unwrap()];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn testing(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let first = self.out[v].first().copied();
        for i in 0..self.out[v].len() {
            let ei = self.out[v][i];
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if ei == self.parent_edge[w] {
                if !self.testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                if Some(ei) == first {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.unwrap();
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.refs[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(l) = p.left.low {
                self.refs[l] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(l) = p.right.low {
                    self.refs[l] = p.left.low;
                    self.side[l] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.refs[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        let mut cur = e;
        while let Some(r) = self.refs[cur] {
            chain.push(r);
            cur = r;
        }
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.refs[a] = None;
        }
        self.side[e]
    }

    fn embedding(&mut self, v: usize) {
        for i in 0..self.out[v].len() {
            let ei = self.out[v][i];
            let w = self.dst[ei];
            if ei == self.parent_edge[w] {
                self.emb.add_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embedding(w);
            } else if self.side[ei] == 1 {
                let r = self.right_ref[w];
                self.emb.add_cw(w, v, r);
            } else {
                let l = self.left_ref[w];
                self.emb.add_ccw(w, v, l);
                self.left_ref[w] = v;
            }
        }
    }
}
