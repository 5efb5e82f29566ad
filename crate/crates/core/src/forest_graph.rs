//! Construction of `F(G)` and its exchange metric.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::forest::{extend_in, maximal_forests, same_base, ForestFamily, MaximalForest, UnionFind};
use crate::graph::{EdgeSubset, Graph};

/// `F(G)`: vertex `i` of `graph` is `family.members()[i]`.
#[derive(Clone, Debug)]
pub struct ForestGraph {
    family: ForestFamily,
    graph: Graph,
}

impl ForestGraph {
    pub fn base(&self) -> &Arc<Graph> {
        self.family.base()
    }

    pub fn family(&self) -> &ForestFamily {
        &self.family
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn forest(&self, i: usize) -> &MaximalForest {
        &self.family.members()[i]
    }

    /// Graph distances from `source` by breadth-first search.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        bfs(&self.graph, source)
    }

    /// Sidecar mapping: one line per vertex, `index: edge indices`.
    pub fn mapping_lines(&self) -> String {
        let mut out = String::new();
        for (i, f) in self.family.members().iter().enumerate() {
            let idx: Vec<String> = f.edges().iter().map(|e| e.to_string()).collect();
            out.push_str(&format!("{i}: {}\n", idx.join(" ")));
        }
        out
    }
}

/// Builds `F(G)` after checking the forest count against `budget`.
///
/// Adjacency is found by bucketing: each forest emits one key per member edge (the
/// forest with that edge removed), and two forests are adjacent exactly when they
/// share a key.
pub fn build_forest_graph(g: &Graph, budget: u64) -> Result<ForestGraph> {
    let family = maximal_forests(g, budget)?;
    let graph = exchange_graph(&family);
    Ok(ForestGraph { family, graph })
}

fn exchange_graph(family: &ForestFamily) -> Graph {
    let mut buckets: HashMap<EdgeSubset, Vec<usize>> = HashMap::new();
    for (i, f) in family.members().iter().enumerate() {
        for e in f.edges().iter() {
            buckets.entry(f.edges().without(e)).or_default().push(i);
        }
    }
    let mut edges = Vec::new();
    for members in buckets.values() {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                debug_assert_eq!(
                    family.members()[i].edges().symmetric_difference_count(family.members()[j].edges()),
                    2
                );
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    edges.sort_unstable();
    // two maximal forests share at most one key, so no duplicates arise
    debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));
    Graph::from_sorted(family.len(), edges)
}

fn bfs(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("queued vertices have distances");
        for &(w, _) in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn check_same_base(f1: &MaximalForest, f2: &MaximalForest) -> Result<()> {
    if !same_base(f1.base(), f2.base()) {
        return Err(Error::input("forests belong to different base graphs"));
    }
    Ok(())
}

/// `|E(F1) \ E(F2)|`, which equals their distance in `F(G)`.
pub fn forest_distance(f1: &MaximalForest, f2: &MaximalForest) -> Result<usize> {
    check_same_base(f1, f2)?;
    Ok(f1.edges().difference_count(f2.edges()))
}

/// A shortest path `f1 = G_0, ..., G_d = f2` in `F(G)`.
///
/// Built backwards from `f2`: remove the lowest-indexed edge of the current forest
/// that `f1` lacks, then reconnect the two pieces with the lowest-indexed edge of `f1`
/// that crosses between them.
pub fn exchange_path(g: &Graph, f1: &MaximalForest, f2: &MaximalForest) -> Result<Vec<MaximalForest>> {
    check_same_base(f1, f2)?;
    if *f1.base().as_ref() != *g {
        return Err(Error::input("forests do not belong to the given graph"));
    }
    let mut current = f2.edges().clone();
    let mut reversed = vec![f2.clone()];
    while let Some(remove) = current.difference(f1.edges()).iter().next() {
        let side = side_of(g, &current, remove);
        let add = f1
            .edges()
            .difference(&current)
            .iter()
            .find(|&e| {
                let (u, v) = g.edge(e);
                side[u] != side[v]
            })
            .expect("some edge of the other forest reconnects the pieces");
        current.remove(remove);
        current.insert(add);
        reversed.push(MaximalForest::new_unchecked(Arc::clone(f1.base()), current.clone()));
    }
    reversed.reverse();
    Ok(reversed)
}

/// Marks the vertices on one side of the cut left by deleting `removed` from `forest`.
fn side_of(g: &Graph, forest: &EdgeSubset, removed: usize) -> Vec<bool> {
    let mut uf = UnionFind::new(g.vertex_count());
    for e in forest.iter().filter(|&e| e != removed) {
        let (u, v) = g.edge(e);
        uf.union(u, v);
    }
    let root = uf.find(g.edge(removed).0);
    (0..g.vertex_count()).map(|v| uf.find(v) == root).collect()
}

/// A maximal forest of `g` containing `partial`, sharing the forest graph's base.
pub fn extend_within(fg: &ForestGraph, partial: &EdgeSubset) -> Result<MaximalForest> {
    extend_in(Arc::clone(fg.base()), partial)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    /// `None` when disconnected.
    pub diameter: Option<usize>,
}

/// Builds `F(G)` and confirms it is connected by traversal, reporting the diameter.
pub fn finite_connectivity_check(g: &Graph, budget: u64) -> Result<ConnectivityReport> {
    let fg = build_forest_graph(g, budget)?;
    let h = fg.graph();
    let mut diameter = 0;
    let mut connected = true;
    for s in 0..h.vertex_count() {
        for d in bfs(h, s) {
            match d {
                Some(d) => diameter = diameter.max(d),
                None => connected = false,
            }
        }
        if !connected {
            break;
        }
    }
    Ok(ConnectivityReport {
        vertices: h.vertex_count(),
        edges: h.edge_count(),
        connected,
        diameter: connected.then_some(diameter),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn cycles_give_complete_graphs() {
        for n in 3..=7 {
            let fg = build_forest_graph(&Graph::cycle(n), 1000).unwrap();
            assert!(fg.graph().is_complete());
            assert_eq!(fg.graph().vertex_count(), n);
        }
    }

    #[test]
    fn bowtie_gives_rook_graph() {
        let fg = build_forest_graph(&Graph::bowtie(), 1000).unwrap();
        let c3 = Graph::cycle(3);
        assert!(is_isomorphic(fg.graph(), &c3.cartesian_product(&c3)).unwrap());
    }

    #[test]
    fn forests_give_single_vertex() {
        for g in [Graph::path(5), Graph::empty(3), Graph::empty(0)] {
            let fg = build_forest_graph(&g, 10).unwrap();
            assert_eq!(fg.graph().vertex_count(), 1);
            assert_eq!(fg.graph().edge_count(), 0);
        }
    }

    #[test]
    fn distance_examples() {
        let k4 = Graph::complete(4);
        let fg = build_forest_graph(&k4, 100).unwrap();
        let f0 = fg.forest(0);
        assert_eq!(forest_distance(f0, f0).unwrap(), 0);
        let star = EdgeSubset::from_indices(6, [0, 1, 2]); // 01 02 03
        let path = EdgeSubset::from_indices(
            6,
            [k4.edge_index(0, 1).unwrap(), k4.edge_index(1, 2).unwrap(), k4.edge_index(2, 3).unwrap()],
        );
        let a = fg.family().index_of(&star).unwrap();
        let b = fg.family().index_of(&path).unwrap();
        assert_eq!(forest_distance(fg.forest(a), fg.forest(b)).unwrap(), 2);
        assert_eq!(fg.bfs_distances(a)[b], Some(2));

        let p = exchange_path(&k4, fg.forest(a), fg.forest(b)).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p[0], *fg.forest(a));
        assert_eq!(p[2], *fg.forest(b));
        for w in p.windows(2) {
            assert_eq!(w[0].edges().symmetric_difference_count(w[1].edges()), 2);
        }
    }

    #[test]
    fn trivial_paths() {
        let k3 = Graph::complete(3);
        let fg = build_forest_graph(&k3, 10).unwrap();
        assert_eq!(exchange_path(&k3, fg.forest(0), fg.forest(0)).unwrap().len(), 1);
        let p = exchange_path(&k3, fg.forest(0), fg.forest(1)).unwrap();
        assert_eq!(p, vec![fg.forest(0).clone(), fg.forest(1).clone()]);
    }

    #[test]
    fn different_bases_rejected() {
        let a = build_forest_graph(&Graph::complete(3), 10).unwrap();
        let b = build_forest_graph(&Graph::cycle(4), 10).unwrap();
        assert!(matches!(forest_distance(a.forest(0), b.forest(0)), Err(Error::Input(_))));
    }

    #[test]
    fn connectivity_examples() {
        let r = finite_connectivity_check(&Graph::complete(4), 100).unwrap();
        assert!(r.connected);
        assert_eq!(r.vertices, 16);
        assert!(r.diameter.unwrap() <= 3);
        let r = finite_connectivity_check(&Graph::bowtie(), 100).unwrap();
        assert_eq!(r.diameter, Some(2));
        let r = finite_connectivity_check(&Graph::path(4), 100).unwrap();
        assert_eq!((r.vertices, r.connected, r.diameter), (1, true, Some(0)));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(build_forest_graph(&Graph::complete(5), 100), Err(Error::Budget { .. })));
    }
}
