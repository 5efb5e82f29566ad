use crate::error::{Error, Result};

use super::{Cycle, Graph};

/// Default number of search nodes before giving up.
pub const DEFAULT_HAMILTON_BUDGET: u64 = 50_000_000;

/// Backtracking Hamiltonian cycle search with degree pruning.
///
/// `Ok(None)` means the search space was exhausted and no Hamiltonian cycle exists;
/// running out of `budget` search nodes is a resource error instead.
pub fn hamiltonian_cycle(g: &Graph, budget: u64) -> Result<Option<Cycle>> {
    let n = g.vertex_count();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Ok(None);
    }
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n >= 3");
    let mut state = State {
        g,
        start,
        visited: vec![false; n],
        path: vec![start],
        nodes: 0,
        budget,
    };
    state.visited[start] = true;
    match state.extend()? {
        true => {
            let cycle = Cycle::from_vertices(g, &state.path).expect("search closes the cycle");
            Ok(Some(cycle.normalized(g)))
        }
        false => Ok(None),
    }
}

struct State<'a> {
    g: &'a Graph,
    start: usize,
    visited: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl State<'_> {
    fn extend(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::resource(format!(
                "hamiltonian search exceeded {} nodes on a {}-vertex graph",
                self.budget,
                self.g.vertex_count()
            )));
        }
        let tail = *self.path.last().expect("non-empty path");
        if self.path.len() == self.g.vertex_count() {
            return Ok(self.g.has_edge(tail, self.start));
        }
        if !self.feasible(tail) {
            return Ok(false);
        }
        let mut next: Vec<(usize, usize)> = self
            .g
            .neighbors(tail)
            .iter()
            .filter(|&&(w, _)| !self.visited[w])
            .map(|&(w, _)| (self.free_degree(w), w))
            .collect();
        next.sort_unstable();
        for (_, w) in next {
            self.visited[w] = true;
            self.path.push(w);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.visited[w] = false;
        }
        Ok(false)
    }

    fn free_degree(&self, v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&(w, _)| !self.visited[w]).count()
    }

    /// Every unvisited vertex still needs two usable neighbors (unvisited, the tail, or
    /// the start), and the start needs an unvisited neighbor to close through.
    fn feasible(&self, tail: usize) -> bool {
        let g = self.g;
        if !g.neighbors(self.start).iter().any(|&(w, _)| !self.visited[w]) {
            return false;
        }
        (0..g.vertex_count()).filter(|&v| !self.visited[v]).all(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&(w, _)| !self.visited[w] || w == tail || w == self.start)
                .take(2)
                .count()
                == 2
        })
    }
}
