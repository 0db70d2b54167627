mod common;

use common::random_planar;
use disklink::generate::{gen_maximal_planar, gen_maximal_planar_embedded};
use disklink::{canonical_order, embed, triangulate, validate_canonical_order, EdgeColor, Graph};
use proptest::prelude::*;

/// Union-find check that `edges` form a tree on exactly `vertices`.
fn is_tree_on(n: usize, vertices: &[usize], edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let mut touched = vec![false; n];
    for &(u, v) in edges {
        touched[u] = true;
        touched[v] = true;
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    let mut expect = vec![false; n];
    for &v in vertices {
        expect[v] = true;
    }
    touched == expect && edges.len() + 1 == vertices.len()
}

fn cyclic_subsequence(sub: &[usize], full: &[usize]) -> bool {
    let filtered: Vec<usize> = full.iter().copied().filter(|w| sub.contains(w)).collect();
    if filtered.len() != sub.len() {
        return false;
    }
    let Some(start) = filtered.iter().position(|&w| w == sub[0]) else {
        return sub.is_empty();
    };
    (0..sub.len()).all(|i| filtered[(start + i) % sub.len()] == sub[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn orders_of_random_triangulations_validate(n in 3usize..150, seed in any::<u64>()) {
        let pg = gen_maximal_planar_embedded(n, seed).unwrap();
        let co = canonical_order(&pg).unwrap();
        prop_assert!(validate_canonical_order(&pg, &co).is_ok());

        // same graph, independently embedded
        let pg = triangulate(&embed(pg.graph()).unwrap()).unwrap();
        let co = canonical_order(&pg).unwrap();
        prop_assert_eq!(validate_canonical_order(&pg, &co), Ok(()));
    }

    #[test]
    fn color_classes(n in 4usize..120, seed in any::<u64>()) {
        let g = gen_maximal_planar(n, seed).unwrap();
        let pg = embed(&g).unwrap();
        let co = canonical_order(&pg).unwrap();
        let (v1, v2, vn) = (co.v1(), co.v2(), co.vn());
        let outer = |e: &(usize, usize)| {
            let mut t = [e.0, e.1];
            t.sort();
            [[v1.min(v2), v1.max(v2)], [v1.min(vn), v1.max(vn)], [v2.min(vn), v2.max(vn)]].contains(&t)
        };
        let inner_of = |c| -> Vec<(usize, usize)> {
            co.edges_of(c).into_iter().filter(|e| !outer(e)).collect()
        };
        let others = |skip: [usize; 2]| -> Vec<usize> {
            (0..n).filter(|v| !skip.contains(v)).collect()
        };
        prop_assert_eq!(co.edges_of(EdgeColor::Uncolored), vec![(v1.min(v2), v1.max(v2))]);
        prop_assert_eq!(co.edges_of(EdgeColor::Red).len(), n - 3);
        prop_assert!(is_tree_on(n, &others([v2, vn]), &inner_of(EdgeColor::Blue)));
        prop_assert!(is_tree_on(n, &others([v1, vn]), &inner_of(EdgeColor::Green)));
        prop_assert!(is_tree_on(n, &others([v1, v2]), &inner_of(EdgeColor::Red)));
    }

    #[test]
    fn triangulation_contract(n in 3usize..100, seed in any::<u64>(), keep in 0.0f64..1.0) {
        let g = random_planar(n, seed, keep);
        let pg = embed(&g).unwrap();
        let tri = triangulate(&pg).unwrap();
        prop_assert_eq!(tri.m(), 3 * n - 6);
        for &(u, v) in g.edges() {
            prop_assert!(tri.graph().has_edge(u, v));
        }
        prop_assert!(tri.faces().iter().all(|f| f.len() == 3));
        prop_assert_eq!(tri.faces().len(), 2 + tri.m() - n);
        for v in 0..n {
            prop_assert!(cyclic_subsequence(pg.rotation(v), tri.rotation(v)));
        }
        // the new outer face lies inside the old one
        let old = pg.outer_face();
        prop_assert!(tri.outer_face().iter().all(|v| old.contains(v)));
    }

    #[test]
    fn euler_for_embeddings(n in 3usize..100, seed in any::<u64>(), keep in 0.0f64..1.0) {
        let g = random_planar(n, seed, keep);
        let pg = embed(&g).unwrap();
        prop_assert_eq!(pg.faces().len(), 2 + g.m() - n);
        let outer = pg.outer_face();
        let is_rotation = |f: &Vec<usize>| {
            f.len() == outer.len() && (0..f.len()).any(|k| (0..f.len()).all(|i| f[(i + k) % f.len()] == outer[i]))
        };
        prop_assert!(pg.faces().iter().any(is_rotation));
    }
}

#[test]
fn bad_orders_are_rejected() {
    let g = gen_maximal_planar(30, 5).unwrap();
    let pg = embed(&g).unwrap();
    let co = canonical_order(&pg).unwrap();
    // reversing the interior part breaks P.2 or P.1 somewhere
    let mut bad = co.clone();
    bad.order[2..29].reverse();
    assert!(validate_canonical_order(&pg, &bad).is_err());
    // wrong contour endpoints
    let mut forged = disklink::CanonicalOrder::from_permutation(&pg, co.order.clone()).unwrap();
    assert_eq!(forged, co);
    forged.left[co.vn()] = co.right[co.vn()];
    assert!(validate_canonical_order(&pg, &forged).is_err());
    let mut bad = co.clone();
    bad.order.swap(0, 1);
    assert!(validate_canonical_order(&pg, &bad).is_err());
}

#[test]
fn non_maximal_is_rejected() {
    let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert!(canonical_order(&embed(&g).unwrap()).is_err());
}
