use crate::error::{Error, Result};

use super::Graph;

/// Size guard for the exact search.
pub const MAX_CLIQUE_VERTICES: usize = 200;

/// Exact maximum clique by branch and bound with a greedy-coloring bound.
///
/// Returns the clique vertices in ascending order.
pub fn max_clique(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n > MAX_CLIQUE_VERTICES {
        return Err(Error::resource(format!(
            "max_clique is exact only up to {MAX_CLIQUE_VERTICES} vertices (got {n}); \
             use a constructive clique witness instead"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| {
            let mut row = vec![false; n];
            for &(w, _) in g.neighbors(u) {
                row[w] = true;
            }
            row
        })
        .collect();

    // initial order: non-increasing degree
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut search = Search {
        adj: &adj,
        best: vec![order[0]],
        current: Vec::new(),
    };
    search.expand(order);
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

struct Search<'a> {
    adj: &'a [Vec<bool>],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, candidates: Vec<usize>) {
        let (mut order, colors) = self.color_sort(&candidates);
        while let Some(v) = order.pop() {
            let bound = colors[order.len()];
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next: Vec<usize> = order.iter().copied().filter(|&w| self.adj[v][w]).collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
        }
    }

    /// Greedy sequential coloring; returns vertices sorted by color and the running
    /// color number, so `colors[i]` bounds the clique size within `order[..=i]`.
    fn color_sort(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes.iter_mut().find(|c| c.iter().all(|&w| !self.adj[v][w])) {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(candidates.len());
        let mut colors = Vec::with_capacity(candidates.len());
        for (k, class) in classes.into_iter().enumerate() {
            for v in class {
                order.push(v);
                colors.push(k + 1);
            }
        }
        (order, colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_clique_number(g: &Graph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|u| {
                    (u + 1..n).all(|v| mask & (1 << u) == 0 || mask & (1 << v) == 0 || g.has_edge(u, v))
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn is_clique(g: &Graph, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    #[test]
    fn examples() {
        assert_eq!(max_clique(&Graph::complete(5)).unwrap().len(), 5);
        assert_eq!(max_clique(&Graph::cycle(6)).unwrap().len(), 2);
        let c3 = Graph::cycle(3);
        let rook = c3.cartesian_product(&c3);
        let q = max_clique(&rook).unwrap();
        assert_eq!(q.len(), 3);
        assert_eq!(brute_force_clique_number(&rook), 3);
    }

    #[test]
    fn agrees_with_brute_force() {
        let graphs = [
            Graph::complete_bipartite(3, 4),
            Graph::bowtie(),
            Graph::new(7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6), (3, 5)]).unwrap(),
            Graph::empty(4),
        ];
        for g in &graphs {
            let q = max_clique(g).unwrap();
            assert!(is_clique(g, &q));
            assert_eq!(q.len(), brute_force_clique_number(g));
        }
    }

    #[test]
    fn size_guard() {
        assert!(matches!(max_clique(&Graph::empty(MAX_CLIQUE_VERTICES + 1)), Err(Error::Resource(_))));
    }
}
