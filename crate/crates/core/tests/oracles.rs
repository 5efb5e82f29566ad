use std::collections::HashSet;

use forestgraph::corpus::enumerate_graphs;
use forestgraph::forest::{brute_force_maximal_forests, count_maximal_forests, maximal_forests};
use forestgraph::forest_graph::build_forest_graph;
use forestgraph::graph::is_isomorphic;
use forestgraph::roots::{find_roots, no_root_prune, RootBudget, RootSearch};
use forestgraph::Graph;
use num_bigint::BigUint;

/// Spanning trees by deletion and contraction on a multigraph; loops are dropped.
fn deletion_contraction(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            for (p, q) in [(a, b), (b, a)] {
                if p == x && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return 0;
    }
    let Some((&(u, v), rest)) = edges.split_first() else {
        return 1;
    };
    let deleted = deletion_contraction(n, rest);
    // merge v into u, renumbering the last vertex into v's slot
    let last = n - 1;
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x == last { v } else { x }
    };
    let contracted: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .filter(|&(a, b)| a != b)
        .collect();
    deleted + deletion_contraction(n - 1, &contracted)
}

#[test]
fn rook_torus_tree_count() {
    let c3 = Graph::cycle(3);
    let g = c3.cartesian_product(&c3);
    assert_eq!((g.vertex_count(), g.edge_count()), (9, 18));
    assert!((0..9).all(|v| g.degree(v) == 4));
    let oracle = deletion_contraction(9, g.edges());
    assert_eq!(oracle, 11664);
    assert_eq!(count_maximal_forests(&g), BigUint::from(oracle));
    assert_eq!(maximal_forests(&g, 1_000_000).unwrap().len() as u64, oracle);
}

#[test]
fn deletion_contraction_agrees_with_determinant() {
    let petersen = Graph::new(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap();
    assert_eq!(deletion_contraction(10, petersen.edges()), 2000);
    assert_eq!(count_maximal_forests(&petersen), BigUint::from(2000u32));
    for g in enumerate_graphs(5).unwrap().iter().filter(|g| g.is_connected()) {
        assert_eq!(
            count_maximal_forests(g),
            BigUint::from(deletion_contraction(5, g.edges())),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn cayley_formula() {
    for n in 2..=5usize {
        let g = Graph::complete(n);
        let expected = n.pow(n as u32 - 2);
        assert_eq!(brute_force_maximal_forests(&g).unwrap().len(), expected);
    }
    for n in 2..=30u32 {
        assert_eq!(count_maximal_forests(&Graph::complete(n as usize)), BigUint::from(n).pow(n - 2));
    }
}

/// Canonical representative as the minimum edge bitmask over all relabelings.
fn unlabeled_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    permutations(&mut p, 0, &mut perms);
    let tables: Vec<Vec<usize>> = perms
        .iter()
        .map(|perm| pairs.iter().map(|&(a, b)| index(perm[a], perm[b])).collect())
        .collect();
    let mut reps = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let best = tables
            .iter()
            .map(|t| {
                t.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .fold(0u32, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap();
        reps.insert(best);
    }
    reps.len()
}

fn permutations(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, out);
        p.swap(k, i);
    }
}

#[test]
fn corpus_sizes_match_brute_force() {
    for n in 1..=6 {
        let corpus = enumerate_graphs(n).unwrap();
        assert_eq!(corpus.len(), unlabeled_count(n), "n = {n}");
        for (i, g) in corpus.iter().enumerate() {
            for h in &corpus[i + 1..] {
                if g.edge_count() == h.edge_count() && n <= 5 {
                    assert!(!is_isomorphic(g, h).unwrap());
                }
            }
        }
    }
}

#[test]
fn corpus_size_seven() {
    // frozen after the brute-force oracle above agreed on n <= 6
    assert_eq!(enumerate_graphs(7).unwrap().len(), 1044);
}

#[test]
fn tree_graph_of_k4() {
    let fg = build_forest_graph(&Graph::complete(4), 1_000).unwrap();
    assert_eq!((fg.graph().vertex_count(), fg.graph().edge_count()), (16, 54));
}

#[test]
fn roots_are_sound() {
    let budget = RootBudget {
        max_vertices: 5,
        ..RootBudget::default()
    };
    for h in [Graph::cycle(4), Graph::cycle(5), Graph::bowtie(), Graph::complete(3)] {
        let g = build_forest_graph(&h, 1_000).unwrap().into_graph();
        let RootSearch::Found(roots) = find_roots(&g, budget).unwrap() else {
            panic!("F({}) has a root", h.describe());
        };
        assert!(roots.iter().any(|r| is_isomorphic(&r.graph, &h).unwrap()));
        for r in &roots {
            let fr = build_forest_graph(&r.graph, 1_000).unwrap();
            assert!(is_isomorphic(fr.graph(), &g).unwrap());
            assert!(fr.graph().edges().iter().all(|&(a, b)| g.has_edge(r.iso_map[a], r.iso_map[b])));
        }
    }
}

#[test]
fn pruning_certificates_verify() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            if let Some(cert) = no_root_prune(&g) {
                assert!(cert.is_proof());
                assert!(cert.verify(&g), "{cert} on {:?}", g.edges());
            }
        }
    }
    assert!(no_root_prune(&Graph::complete_bipartite(3, 3)).is_some());
}
