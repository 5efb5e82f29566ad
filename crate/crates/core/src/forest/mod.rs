//! Maximal forests: enumeration, exact counting and a brute-force subset oracle.

mod count;

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, ForestCount, Result};
use crate::graph::{EdgeSubset, Graph};

pub use count::{
    count_maximal_forests, forest_count, forest_count_exceeds, forest_count_lower_bound, spanning_tree_lower_bound,
    EXACT_COUNT_VERTICES,
};

pub const DEFAULT_FOREST_BUDGET: u64 = 1_000_000;
pub const BRUTE_FORCE_MAX_EDGES: usize = 20;

/// An acyclic edge subset containing a spanning tree of every component of its base.
#[derive(Clone, Debug)]
pub struct MaximalForest {
    base: Arc<Graph>,
    edges: EdgeSubset,
}

impl PartialEq for MaximalForest {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges && same_base(&self.base, &other.base)
    }
}

impl Eq for MaximalForest {}

pub(crate) fn same_base(a: &Arc<Graph>, b: &Arc<Graph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl MaximalForest {
    /// Checks acyclicity and maximality.
    pub fn new(base: Arc<Graph>, edges: EdgeSubset) -> Result<Self> {
        if edges.universe() != base.edge_count() {
            return Err(Error::input(format!(
                "edge subset over {} edges for a graph with {}",
                edges.universe(),
                base.edge_count()
            )));
        }
        if !is_maximal_forest(&base, &edges) {
            return Err(Error::input(format!("{edges:?} is not a maximal forest")));
        }
        Ok(MaximalForest { base, edges })
    }

    pub(crate) fn new_unchecked(base: Arc<Graph>, edges: EdgeSubset) -> Self {
        debug_assert!(is_maximal_forest(&base, &edges));
        MaximalForest { base, edges }
    }

    pub fn base(&self) -> &Arc<Graph> {
        &self.base
    }

    pub fn edges(&self) -> &EdgeSubset {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count()
    }

    pub fn into_edges(self) -> EdgeSubset {
        self.edges
    }
}

/// All maximal forests of a base graph, in ascending order of their edge index lists.
#[derive(Clone, Debug)]
pub struct ForestFamily {
    base: Arc<Graph>,
    members: Vec<MaximalForest>,
    index: HashMap<EdgeSubset, usize>,
}

impl ForestFamily {
    fn from_sorted(base: Arc<Graph>, mut sets: Vec<EdgeSubset>) -> Self {
        sets.sort_unstable();
        let index = sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let members = sets
            .into_iter()
            .map(|s| MaximalForest::new_unchecked(Arc::clone(&base), s))
            .collect();
        ForestFamily { base, members, index }
    }

    pub fn base(&self) -> &Arc<Graph> {
        &self.base
    }

    pub fn members(&self) -> &[MaximalForest] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&MaximalForest> {
        self.members.get(i)
    }

    pub fn index_of(&self, edges: &EdgeSubset) -> Option<usize> {
        self.index.get(edges).copied()
    }

    /// One forest per line, as ascending edge indices.
    pub fn to_index_lines(&self) -> String {
        let mut out = String::new();
        for f in &self.members {
            let idx: Vec<String> = f.edges.iter().map(|e| e.to_string()).collect();
            out.push_str(&idx.join(" "));
            out.push('\n');
        }
        out
    }

    /// One forest per line, edges written as `u-v` with external vertex names.
    pub fn to_named_lines(&self) -> String {
        let mut out = String::new();
        for f in &self.members {
            let names: Vec<String> = f.edges.iter().map(|e| self.base.edge_name(e)).collect();
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Acyclic, and every edge outside closes a cycle.
pub fn is_maximal_forest(g: &Graph, edges: &EdgeSubset) -> bool {
    let mut uf = UnionFind::new(g.vertex_count());
    for e in edges.iter() {
        let (u, v) = g.edge(e);
        if !uf.union(u, v) {
            return false;
        }
    }
    (0..g.edge_count())
        .filter(|&e| !edges.contains(e))
        .all(|e| {
            let (u, v) = g.edge(e);
            uf.find(u) == uf.find(v)
        })
}

/// Enumerates every maximal forest, refusing up front when the exact count exceeds
/// `budget`.
pub fn maximal_forests(g: &Graph, budget: u64) -> Result<ForestFamily> {
    check_budget(g, budget)?;
    let base = Arc::new(g.clone());
    let mut acc = vec![EdgeSubset::empty(g.edge_count())];
    for block in g.components() {
        let trees = spanning_trees(g, &block);
        if trees.len() == 1 {
            for a in &mut acc {
                *a = a.union(&trees[0]);
            }
            continue;
        }
        acc = acc
            .iter()
            .flat_map(|a| trees.iter().map(move |t| a.union(t)))
            .collect();
    }
    Ok(ForestFamily::from_sorted(base, acc))
}

/// Errors with the count when it exceeds `budget`; returns the exact count otherwise.
pub(crate) fn check_budget(g: &Graph, budget: u64) -> Result<BigUint> {
    let count = forest_count(g);
    if count.value() > &BigUint::from(budget) {
        return Err(Error::Budget {
            count,
            budget,
            step: None,
        });
    }
    Ok(match count {
        ForestCount::Exact(c) => c,
        // the bound fit the budget, so pay for the exact determinant
        ForestCount::AtLeast(_) => count_maximal_forests(g),
    })
}

/// Spanning trees of one component by include/exclude branching over its edges in
/// index order. An edge that would close a cycle is excluded, an edge that is a
/// bridge of the remaining graph is forced in, anything else branches include-first.
fn spanning_trees(g: &Graph, block: &[usize]) -> Vec<EdgeSubset> {
    let m = g.edge_count();
    if block.len() <= 1 {
        return vec![EdgeSubset::empty(m)];
    }
    let in_block = {
        let mut mark = vec![false; g.vertex_count()];
        for &v in block {
            mark[v] = true;
        }
        mark
    };
    let edges: Vec<usize> = (0..m).filter(|&e| in_block[g.edge(e).0]).collect();
    let mut search = TreeSearch {
        g,
        edges: &edges,
        status: vec![Status::Open; m],
        chosen: 0,
        target: block.len() - 1,
        out: Vec::new(),
    };
    search.run(0);
    search.out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    In,
    Out,
}

struct TreeSearch<'a> {
    g: &'a Graph,
    edges: &'a [usize],
    status: Vec<Status>,
    chosen: usize,
    target: usize,
    out: Vec<EdgeSubset>,
}

impl TreeSearch<'_> {
    fn run(&mut self, pos: usize) {
        if self.chosen == self.target {
            let tree = self.edges.iter().copied().filter(|&e| self.status[e] == Status::In);
            self.out.push(EdgeSubset::from_indices(self.g.edge_count(), tree));
            return;
        }
        let e = self.edges[pos];
        let (u, v) = self.g.edge(e);
        let closes_cycle = self.connected(u, v, e, |s| s == Status::In);
        if closes_cycle {
            self.branch(pos, e, Status::Out);
            return;
        }
        let is_bridge = !self.connected(u, v, e, |s| s != Status::Out);
        self.branch(pos, e, Status::In);
        if !is_bridge {
            self.branch(pos, e, Status::Out);
        }
    }

    fn branch(&mut self, pos: usize, e: usize, status: Status) {
        self.status[e] = status;
        if status == Status::In {
            self.chosen += 1;
        }
        self.run(pos + 1);
        if status == Status::In {
            self.chosen -= 1;
        }
        self.status[e] = Status::Open;
    }

    /// Whether `u` reaches `v` through edges other than `skip` whose status passes `usable`.
    fn connected(&self, u: usize, v: usize, skip: usize, usable: impl Fn(Status) -> bool) -> bool {
        let mut seen = vec![false; self.g.vertex_count()];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for &(w, e) in self.g.neighbors(x) {
                if e != skip && !seen[w] && usable(self.status[e]) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
}

/// Greedily extends an acyclic `partial` over the edge order to a maximal forest.
pub fn extend_to_maximal(g: &Graph, partial: &EdgeSubset) -> Result<MaximalForest> {
    extend_in(Arc::new(g.clone()), partial)
}

pub(crate) fn extend_in(base: Arc<Graph>, partial: &EdgeSubset) -> Result<MaximalForest> {
    let g = &*base;
    if partial.universe() != g.edge_count() {
        return Err(Error::input("edge subset does not match the graph's edge table"));
    }
    let mut uf = UnionFind::new(g.vertex_count());
    for e in partial.iter() {
        let (u, v) = g.edge(e);
        if !uf.union(u, v) {
            return Err(Error::input(format!("partial forest contains a cycle through edge {e}")));
        }
    }
    let mut edges = partial.clone();
    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        if uf.union(u, v) {
            edges.insert(e);
        }
    }
    Ok(MaximalForest::new_unchecked(base, edges))
}

/// Oracle: tests every one of the `2^m` edge subsets for being a maximal forest.
pub fn brute_force_maximal_forests(g: &Graph) -> Result<ForestFamily> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::resource(format!(
            "brute force is limited to {BRUTE_FORCE_MAX_EDGES} edges (got {m})"
        )));
    }
    let mut found = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let subset = EdgeSubset::from_indices(m, (0..m).filter(|&e| mask & (1 << e) != 0));
        if is_maximal_forest(g, &subset) {
            found.push(subset);
        }
    }
    Ok(ForestFamily::from_sorted(Arc::new(g.clone()), found))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(f: &ForestFamily) -> Vec<Vec<usize>> {
        f.members().iter().map(|m| m.edges().to_vec()).collect()
    }

    #[test]
    fn triangle_forests() {
        let fam = maximal_forests(&Graph::complete(3), 100).unwrap();
        assert_eq!(fam.len(), 3);
        assert!(fam.members().iter().all(|f| f.edge_count() == 2));
        assert_eq!(sets(&fam), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn k4_and_bowtie() {
        assert_eq!(maximal_forests(&Graph::complete(4), 100).unwrap().len(), 16);
        let bowtie = Graph::bowtie();
        let fam = maximal_forests(&bowtie, 100).unwrap();
        assert_eq!(fam.len(), 9);
        assert_eq!(sets(&fam), sets(&brute_force_maximal_forests(&bowtie).unwrap()));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_maximal_forests(&Graph::complete(3)).unwrap().len(), 3);
        assert_eq!(brute_force_maximal_forests(&Graph::complete(4)).unwrap().len(), 16);
        let two = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_eq!(brute_force_maximal_forests(&two).unwrap().len(), 9);
        assert!(matches!(
            brute_force_maximal_forests(&Graph::complete(7)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn budget_refusal_carries_count() {
        match maximal_forests(&Graph::complete(6), 1000) {
            Err(Error::Budget { count, budget, .. }) => {
                assert_eq!(count, ForestCount::Exact(BigUint::from(1296u32)));
                assert_eq!(budget, 1000);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn extension_examples() {
        let k3 = Graph::complete(3);
        let f = extend_to_maximal(&k3, &EdgeSubset::empty(3)).unwrap();
        assert_eq!(f.edges().to_vec(), vec![0, 1]);

        let c4 = Graph::cycle(4);
        let one = EdgeSubset::from_indices(4, [3]);
        let f = extend_to_maximal(&c4, &one).unwrap();
        assert_eq!(f.edge_count(), 3);
        assert!(f.edges().contains(3));

        // C_5 minus its first edge, inside a larger graph
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 5), (1, 4)]).unwrap();
        let path: Vec<usize> = [(1, 2), (2, 3), (3, 4), (4, 0)]
            .iter()
            .map(|&(u, v)| g.edge_index(u, v).unwrap())
            .collect();
        let partial = EdgeSubset::from_indices(g.edge_count(), path.iter().copied());
        let f = extend_to_maximal(&g, &partial).unwrap();
        assert!(partial.is_subset(f.edges()));
        assert_eq!(f.edge_count(), 5);
    }

    #[test]
    fn extension_rejects_cycles() {
        let k3 = Graph::complete(3);
        assert!(matches!(extend_to_maximal(&k3, &k3.all_edges()), Err(Error::Input(_))));
    }

    #[test]
    fn validated_construction() {
        let k3 = Arc::new(Graph::complete(3));
        assert!(MaximalForest::new(Arc::clone(&k3), EdgeSubset::from_indices(3, [0])).is_err());
        assert!(MaximalForest::new(Arc::clone(&k3), EdgeSubset::from_indices(3, [0, 2])).is_ok());
    }

    #[test]
    fn named_export() {
        let g = Graph::path(3).with_names(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let fam = maximal_forests(&g, 10).unwrap();
        assert_eq!(fam.to_named_lines(), "a-b b-c\n");
        assert_eq!(fam.to_index_lines(), "0 1\n");
    }
}
