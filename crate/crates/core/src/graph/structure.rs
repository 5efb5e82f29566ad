use std::collections::VecDeque;

use super::{Cycle, EdgeSubset, Graph};

/// Outcome of a bipartiteness test, always carrying a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// `side[v]` is the color of `v`; every edge joins opposite colors.
    TwoColoring(Vec<bool>),
    OddCycle(Cycle),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::TwoColoring(_))
    }
}

impl Graph {
    /// Component id per vertex (ids ordered by smallest member) and the component count.
    pub fn component_ids(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut id = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if id[s] != usize::MAX {
                continue;
            }
            id[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in self.neighbors(u) {
                    if id[w] == usize::MAX {
                        id[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (id, count)
    }

    /// Vertex partition into connected components, blocks ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (id, count) = self.component_ids();
        let mut blocks = vec![Vec::new(); count];
        for (v, &c) in id.iter().enumerate() {
            blocks[c].push(v);
        }
        blocks
    }

    pub fn component_count(&self) -> usize {
        self.component_ids().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// `m - n + c`.
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// Edges lying on no cycle, found with one lowpoint pass.
    pub fn bridges(&self) -> EdgeSubset {
        let n = self.vertex_count();
        let mut out = EdgeSubset::empty(self.edge_count());
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        // (vertex, edge used to enter, next neighbor position)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(top) = stack.last_mut() {
                let (u, via, pos) = *top;
                if pos < self.neighbors(u).len() {
                    top.2 += 1;
                    let (w, e) = self.neighbors(u)[pos];
                    if e == via {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] > disc[parent] {
                            out.insert(via);
                        }
                    }
                }
            }
        }
        out
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let base = self.component_count();
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) >= 2 && self.without_vertex_component_count(v) > base)
            .collect()
    }

    /// Component count of `self - v`, where `v` is removed outright.
    pub(crate) fn without_vertex_component_count(&self, v: usize) -> usize {
        self.components_avoiding(&[v]).len()
    }

    /// Components of the graph with `removed` deleted, as vertex lists.
    pub(crate) fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let mut blocks = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut block = vec![s];
            let mut i = 0;
            while i < block.len() {
                let u = block[i];
                i += 1;
                for &(w, _) in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        block.push(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    /// The unique cycle when the cyclomatic number is exactly one.
    pub fn unique_cycle(&self) -> Option<Cycle> {
        if self.cyclomatic_number() != 1 {
            return None;
        }
        let bridges = self.bridges();
        let on_cycle: Vec<usize> = (0..self.edge_count()).filter(|&e| !bridges.contains(e)).collect();
        let start = self.edge(on_cycle[0]).0;
        let mut order = vec![start];
        let mut prev_edge = usize::MAX;
        let mut cur = start;
        loop {
            let &(next, e) = self
                .neighbors(cur)
                .iter()
                .find(|&&(_, e)| e != prev_edge && !bridges.contains(e))
                .expect("cycle vertices have two cycle edges");
            if next == start {
                break;
            }
            order.push(next);
            prev_edge = e;
            cur = next;
        }
        Some(Cycle::from_vertices(self, &order).expect("walk along non-bridges is a cycle").normalized(self))
    }

    /// Two-coloring or an odd cycle.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.vertex_count();
        let mut depth = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if depth[s] != usize::MAX {
                continue;
            }
            depth[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in self.neighbors(u) {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if depth[w] % 2 == depth[u] % 2 {
                        return Bipartition::OddCycle(self.odd_cycle_through(u, w, &depth, &parent));
                    }
                }
            }
        }
        Bipartition::TwoColoring(depth.iter().map(|d| d % 2 == 1).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    fn odd_cycle_through(&self, u: usize, w: usize, depth: &[usize], parent: &[usize]) -> Cycle {
        let (mut a, mut b) = (u, w);
        let mut left = vec![a];
        let mut right = vec![b];
        while depth[a] > depth[b] {
            a = parent[a];
            left.push(a);
        }
        while depth[b] > depth[a] {
            b = parent[b];
            right.push(b);
        }
        while a != b {
            a = parent[a];
            b = parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop();
        right.reverse();
        left.extend(right);
        Cycle::from_vertices(self, &left).expect("tree paths plus a closing edge").normalized(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn triangle_with_pendant() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::complete(3).components(), vec![vec![0, 1, 2]]);
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::empty(3).components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn cyclomatic_examples() {
        assert_eq!(Graph::complete(3).cyclomatic_number(), 1);
        assert_eq!(Graph::bowtie().cyclomatic_number(), 2);
        assert_eq!(Graph::path(6).cyclomatic_number(), 0);
        assert_eq!(Graph::empty(4).cyclomatic_number(), 0);
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(Graph::path(3).bridges().to_vec(), vec![0, 1]);
        assert!(Graph::cycle(4).bridges().is_empty());
        let g = triangle_with_pendant();
        let pendant = g.edge_index(2, 3).unwrap();
        assert_eq!(g.bridges().to_vec(), vec![pendant]);
    }

    #[test]
    fn unique_cycle_examples() {
        let c5 = Graph::cycle(5).unique_cycle().unwrap();
        assert_eq!(c5.len(), 5);
        assert!(Graph::path(4).unique_cycle().is_none());
        assert!(Graph::bowtie().unique_cycle().is_none());
        let t = triangle_with_pendant().unique_cycle().unwrap();
        assert_eq!(t.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn bipartite_examples() {
        assert!(Graph::cycle(4).is_bipartite());
        match Graph::complete(3).bipartition() {
            Bipartition::OddCycle(c) => assert_eq!(c.len(), 3),
            other => panic!("expected odd cycle, got {other:?}"),
        }
        let c3 = Graph::cycle(3);
        assert!(!c3.cartesian_product(&c3).is_bipartite());
        match Graph::cycle(7).bipartition() {
            Bipartition::OddCycle(c) => assert_eq!(c.len(), 7),
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn coloring_is_proper() {
        let g = Graph::complete_bipartite(3, 3);
        let Bipartition::TwoColoring(side) = g.bipartition() else {
            panic!("K33 is bipartite");
        };
        assert!(g.edges().iter().all(|&(u, v)| side[u] != side[v]));
    }

    #[test]
    fn cut_vertices_of_bowtie() {
        assert_eq!(Graph::bowtie().cut_vertices(), vec![0]);
        assert!(Graph::cycle(5).cut_vertices().is_empty());
    }
}
