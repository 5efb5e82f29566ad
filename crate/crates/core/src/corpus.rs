//! Small-graph corpus: every simple graph on `n` vertices up to isomorphism.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, Edge, Graph};

pub const MAX_CORPUS_VERTICES: usize = 7;

/// All non-isomorphic graphs on exactly `n` vertices, in canonical labeling, ordered
/// by edge count and then by canonical edge list.
///
/// Graphs with `k + 1` edges are obtained by adding one edge to each graph with `k`
/// edges and deduplicating canonical forms; every graph arises this way since
/// deleting any of its edges lands in the previous layer.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CORPUS_VERTICES {
        return Err(Error::resource(format!(
            "graph enumeration is limited to {MAX_CORPUS_VERTICES} vertices (got {n})"
        )));
    }
    let all_pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut layer: BTreeSet<Vec<Edge>> = BTreeSet::from([Vec::new()]);
    let mut out: Vec<Graph> = Vec::new();
    loop {
        out.extend(layer.iter().map(|edges| Graph::from_sorted(n, edges.clone())));
        let mut next = BTreeSet::new();
        for edges in &layer {
            for &pair in &all_pairs {
                if edges.binary_search(&pair).is_ok() {
                    continue;
                }
                let g = Graph::new(n, edges.iter().copied().chain([pair]))?;
                next.insert(canonical_form(&g)?.edges);
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Ok(out)
}

/// Every graph on `1..=n` vertices.
pub fn enumerate_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for k in 1..=n {
        all.extend(enumerate_graphs(k)?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_graphs(1).unwrap(), vec![Graph::complete(1)]);
        assert_eq!(enumerate_graphs(2).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(3).unwrap().len(), 4);
        assert_eq!(enumerate_graphs(4).unwrap().len(), 11);
    }

    #[test]
    fn guard() {
        assert!(matches!(enumerate_graphs(8), Err(Error::Resource(_))));
    }

    #[test]
    fn deterministic_order() {
        let a = enumerate_graphs(4).unwrap();
        assert_eq!(a, enumerate_graphs(4).unwrap());
        assert!(a.windows(2).all(|w| w[0].edge_count() <= w[1].edge_count()));
        assert_eq!(a[0].edge_count(), 0);
        assert!(a.last().unwrap().is_complete());
    }
}
