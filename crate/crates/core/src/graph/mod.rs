//! Labeled simple undirected graphs and the structural queries the rest of the crate needs.
//!
//! A [`Graph`] keeps its edge table sorted lexicographically on normalized `(min, max)`
//! endpoint pairs. Every [`EdgeSubset`] bit position, and therefore every forest, is keyed
//! off that order.

mod clique;
mod cycle;
mod hamilton;
mod iso;
mod structure;
mod subset;

use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

pub use clique::{max_clique, MAX_CLIQUE_VERTICES};
pub use cycle::{Cycle, CycleEnumeration, DEFAULT_CYCLE_LIMIT};
pub use hamilton::{hamiltonian_cycle, DEFAULT_HAMILTON_BUDGET};
pub use iso::{canonical_form, find_isomorphism, is_isomorphic, CanonicalForm, MAX_ISO_VERTICES};
pub use structure::Bipartition;
pub use subset::EdgeSubset;

/// A normalized edge `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

#[derive(Clone, Debug)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    names: Option<Vec<String>>,
    /// `(neighbor, edge index)` per vertex, neighbors ascending.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vertex_count.hash(state);
        self.edges.hash(state);
    }
}

impl Graph {
    /// Builds a graph from raw endpoint pairs. Pairs are normalized, sorted and
    /// deduplicated; loops and out-of-range endpoints are rejected.
    pub fn new(vertex_count: usize, raw_edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (u, v) in raw_edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted(vertex_count, edges))
    }

    pub(crate) fn from_sorted(vertex_count: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, i));
            adjacency[v].push((u, i));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            vertex_count,
            edges,
            names: None,
            adjacency,
        }
    }

    /// Attaches external vertex labels.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.vertex_count {
            return Err(Error::input(format!(
                "{} names for {} vertices",
                names.len(),
                self.vertex_count
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edge_index(u, v).is_some()
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn vertex_name(&self, v: usize) -> String {
        match &self.names {
            Some(n) => n[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn edge_name(&self, i: usize) -> String {
        let (u, v) = self.edges[i];
        format!("{}-{}", self.vertex_name(u), self.vertex_name(v))
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.edge_count())
    }

    /// The spanning subgraph on the edges of `subset`.
    pub fn spanning_subgraph(&self, subset: &EdgeSubset) -> Graph {
        let edges = subset.iter().map(|i| self.edges[i]).collect();
        Graph::from_sorted(self.vertex_count, edges)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count;
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.vertex_count).any(|v| self.degree(v) == 0)
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_sorted(n, edges)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    /// `C_n` on vertices `0..n` in cyclic order. Panics for `n < 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Two triangles sharing vertex 0.
    pub fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("valid bowtie")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("valid")
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(shift + other.vertex_count, edges).expect("union of valid graphs")
    }

    /// Cartesian product: `(a, b)` is vertex `a * |h| + b`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let k = h.vertex_count;
        let mut edges = Vec::with_capacity(self.edge_count() * k + h.edge_count() * self.vertex_count);
        for &(a, a2) in &self.edges {
            for b in 0..k {
                edges.push((a * k + b, a2 * k + b));
            }
        }
        for a in 0..self.vertex_count {
            for &(b, b2) in &h.edges {
                edges.push((a * k + b, a * k + b2));
            }
        }
        Graph::new(self.vertex_count * k, edges).expect("product of valid graphs")
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count);
        let g = Graph::new(
            self.vertex_count,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("permutation of a valid graph");
        match &self.names {
            Some(names) => {
                let mut renamed = vec![String::new(); names.len()];
                for (v, name) in names.iter().enumerate() {
                    renamed[perm[v]] = name.clone();
                }
                g.with_names(renamed).expect("same vertex count")
            }
            None => g,
        }
    }

    /// Short human description: recognizes `K_n`, `C_n`, `P_n` and edgeless graphs up to
    /// isomorphism, otherwise lists the edges (only the counts past 40 edges).
    pub fn describe(&self) -> String {
        let n = self.vertex_count;
        let m = self.edge_count();
        if self.is_complete() {
            return format!("K_{n}");
        }
        if m == 0 {
            return format!("{n}K_1");
        }
        let connected = self.component_count() == 1;
        if connected && n >= 3 && m == n && (0..n).all(|v| self.degree(v) == 2) {
            return format!("C_{n}");
        }
        if connected && m + 1 == n && (0..n).all(|v| self.degree(v) <= 2) {
            return format!("P_{n}");
        }
        if m > DESCRIBE_EDGES {
            return format!("graph on {n} vertices and {m} edges");
        }
        let list: Vec<String> = (0..m).map(|i| self.edge_name(i)).collect();
        format!("graph on {n} vertices [{}]", list.join(" "))
    }
}

const DESCRIBE_EDGES: usize = 40;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(g.is_complete());
    }

    #[test]
    fn duplicates_merge() {
        let g = Graph::new(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.vertex_count(), 4);
    }

    #[test]
    fn loop_rejected() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::Input(_))));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::Input(_))));
    }

    #[test]
    fn product_identities() {
        let k1 = Graph::complete(1);
        let c5 = Graph::cycle(5);
        assert_eq!(k1.cartesian_product(&c5), c5);

        let k2 = Graph::complete(2);
        let sq = k2.cartesian_product(&k2);
        assert!(is_isomorphic(&sq, &Graph::cycle(4)).unwrap());

        let c3 = Graph::cycle(3);
        let rook = c3.cartesian_product(&c3);
        assert_eq!(rook.vertex_count(), 9);
        assert_eq!(rook.edge_count(), 18);
        assert!((0..9).all(|v| rook.degree(v) == 4));
    }

    #[test]
    fn describe_families() {
        assert_eq!(Graph::complete(4).describe(), "K_4");
        assert_eq!(Graph::cycle(4).describe(), "C_4");
        assert_eq!(Graph::path(3).describe(), "P_3");
        assert_eq!(Graph::empty(2).describe(), "2K_1");
    }
}
