//! Canonical labeling by color refinement plus individualization backtracking.
//!
//! Intended for small graphs; complete and edgeless graphs are recognized directly at
//! any size.

use crate::error::{Error, Result};

use super::{Edge, Graph};

/// Largest vertex count handled by the generic search.
pub const MAX_ISO_VERTICES: usize = 12;

/// Canonical edge list together with the labeling that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    /// Sorted normalized edges under the canonical labeling.
    pub edges: Vec<Edge>,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    /// The labeling-free part; equal keys mean isomorphic graphs.
    pub fn key(&self) -> (usize, &[Edge]) {
        (self.vertex_count, &self.edges)
    }

    pub fn graph(&self) -> Graph {
        Graph::from_sorted(self.vertex_count, self.edges.clone())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    if g.is_complete() || g.edge_count() == 0 {
        return Ok(CanonicalForm {
            vertex_count: n,
            edges: g.edges().to_vec(),
            labeling: (0..n).collect(),
        });
    }
    if n > MAX_ISO_VERTICES {
        return Err(Error::resource(format!(
            "generic isomorphism is limited to {MAX_ISO_VERTICES} vertices (got {n})"
        )));
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&(w, _)| w).collect())
        .collect();
    let mut search = Search {
        g,
        adj: &adj,
        best: None,
    };
    search.descend(vec![0; n]);
    let (edges, labeling) = search.best.expect("search reaches at least one leaf");
    Ok(CanonicalForm {
        vertex_count: n,
        edges,
        labeling,
    })
}

/// A vertex bijection `map` with `map[v]` in `h` for each `v` in `g`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..x.vertex_count()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Ok(None);
    }
    let cg = canonical_form(g)?;
    let ch = canonical_form(h)?;
    if cg.edges != ch.edges {
        return Ok(None);
    }
    let mut from_canon = vec![0; h.vertex_count()];
    for (v, &pos) in ch.labeling.iter().enumerate() {
        from_canon[pos] = v;
    }
    Ok(Some(cg.labeling.iter().map(|&pos| from_canon[pos]).collect()))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

type Leaf = (Vec<Edge>, Vec<usize>);

struct Search<'a> {
    g: &'a Graph,
    adj: &'a [Vec<usize>],
    best: Option<Leaf>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<usize>) {
        let cells = self.refine(cells);
        let n = cells.len();
        let count = cells.iter().max().map_or(0, |m| m + 1);
        if count == n {
            self.leaf(cells);
            return;
        }
        let mut sizes = vec![0usize; count];
        for &c in &cells {
            sizes[c] += 1;
        }
        let target = (0..count).find(|&c| sizes[c] > 1).expect("non-discrete partition");
        let members: Vec<usize> = (0..n).filter(|&v| cells[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            self.descend(individualize(&cells, v));
        }
    }

    fn leaf(&mut self, cells: Vec<usize>) {
        let mut edges: Vec<Edge> = self
            .g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (cells[u], cells[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if self.best.as_ref().is_none_or(|(b, _)| edges < *b) {
            self.best = Some((edges, cells));
        }
    }

    /// Equal neighborhoods apart from each other; swapping twins is an automorphism.
    fn twins(&self, u: usize, v: usize) -> bool {
        let strip = |x: usize, other: usize| self.adj[x].iter().copied().filter(move |&w| w != other);
        strip(u, v).eq(strip(v, u))
    }

    /// Iterated degree refinement; cell numbers stay invariant under relabeling.
    fn refine(&self, mut cells: Vec<usize>) -> Vec<usize> {
        let n = cells.len();
        let mut count = cells.iter().max().map_or(0, |m| m + 1);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = self.adj[v].iter().map(|&w| cells[w]).collect();
                    nb.sort_unstable();
                    (cells[v], nb)
                })
                .collect();
            let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            distinct.sort();
            distinct.dedup();
            let next: Vec<usize> = sigs
                .iter()
                .map(|s| distinct.binary_search(&s).expect("present"))
                .collect();
            let next_count = distinct.len();
            cells = next;
            if next_count == count {
                return cells;
            }
            count = next_count;
        }
    }
}

fn individualize(cells: &[usize], v: usize) -> Vec<usize> {
    // v gets its own cell just before the rest of its old cell
    cells
        .iter()
        .enumerate()
        .map(|(u, &c)| if c > cells[v] || (c == cells[v] && u != v) { c + 1 } else { c })
        .collect()
}
