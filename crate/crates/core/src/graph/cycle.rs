use crate::error::{Error, Result};

use super::{EdgeSubset, Graph};

pub const DEFAULT_CYCLE_LIMIT: usize = 1_000_000;

/// A simple cycle given by its vertex sequence; `edges()[i]` joins `vertices()[i]` and
/// `vertices()[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Cycle {
    /// Validates that `vertices` is a closed walk without repeated vertices in `g`.
    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Result<Cycle> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::input(format!("a cycle needs at least 3 vertices, got {k}")));
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in vertices {
            if v >= g.vertex_count() {
                return Err(Error::input(format!("vertex {v} is not in the graph")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::input(format!("vertex {v} repeats in the cycle")));
            }
        }
        let edges = (0..k)
            .map(|i| {
                let (u, v) = (vertices[i], vertices[(i + 1) % k]);
                g.edge_index(u, v)
                    .ok_or_else(|| Error::input(format!("{u} and {v} are not adjacent")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Cycle {
            vertices: vertices.to_vec(),
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn edge_set(&self, g: &Graph) -> EdgeSubset {
        EdgeSubset::from_indices(g.edge_count(), self.edges.iter().copied())
    }

    /// Rotated to start at the smallest vertex, oriented toward the smaller neighbor.
    pub fn normalized(&self, g: &Graph) -> Cycle {
        let k = self.len();
        let start = (0..k).min_by_key(|&i| self.vertices[i]).unwrap_or(0);
        let fwd = self.vertices[(start + 1) % k];
        let back = self.vertices[(start + k - 1) % k];
        let order: Vec<usize> = if fwd <= back {
            (0..k).map(|i| self.vertices[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| self.vertices[(start + k - i) % k]).collect()
        };
        Cycle::from_vertices(g, &order).expect("rotation of a valid cycle")
    }

    /// Checks the cycle against `g` again; used when a cycle comes from elsewhere.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        Cycle::from_vertices(g, &self.vertices).is_ok_and(|c| c.edges == self.edges)
    }

    pub fn edge_disjoint(&self, other: &Cycle) -> bool {
        self.edges.iter().all(|e| !other.edges.contains(e))
    }
}

/// Result of a bounded simple-cycle enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleEnumeration {
    pub cycles: Vec<Cycle>,
    /// Set when more cycles exist beyond the limit.
    pub truncated: bool,
}

impl Graph {
    /// All simple cycles, each reported once, up to `limit` of them.
    ///
    /// Cycles are rooted at their smallest vertex and listed by root, then in
    /// depth-first order with ascending neighbors.
    pub fn enumerate_cycles(&self, limit: usize) -> CycleEnumeration {
        let mut out = CycleEnumeration {
            cycles: Vec::new(),
            truncated: false,
        };
        let mut on_path = vec![false; self.vertex_count()];
        for root in 0..self.vertex_count() {
            let mut path = vec![root];
            on_path[root] = true;
            if !self.extend_cycles(root, &mut path, &mut on_path, limit, &mut out) {
                break;
            }
            on_path[root] = false;
        }
        out
    }

    fn extend_cycles(
        &self,
        root: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        limit: usize,
        out: &mut CycleEnumeration,
    ) -> bool {
        let tail = *path.last().expect("path starts at root");
        for &(w, _) in self.neighbors(tail) {
            if w == root {
                // each cycle is seen in two directions; keep the one with path[1] < last
                if path.len() >= 3 && path[1] < tail {
                    if out.cycles.len() == limit {
                        out.truncated = true;
                        return false;
                    }
                    out.cycles.push(Cycle::from_vertices(self, path).expect("dfs path closes"));
                }
            } else if w > root && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                let keep_going = self.extend_cycles(root, path, on_path, limit, out);
                path.pop();
                on_path[w] = false;
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force cycle count: for every vertex subset, count Hamiltonian cycles of the
    /// induced subgraph by trying all orders that start at its smallest vertex.
    fn brute_force_cycle_count(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut total = 0;
        for mask in 0u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            if vs.len() < 3 {
                continue;
            }
            let mut rest = vs[1..].to_vec();
            let mut count = 0;
            permute(&mut rest, 0, &mut |order| {
                let mut cyc = vec![vs[0]];
                cyc.extend_from_slice(order);
                let closes = (0..cyc.len()).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
                if closes {
                    count += 1;
                }
            });
            total += count / 2;
        }
        total
    }

    fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(Graph::complete(3).enumerate_cycles(10).cycles.len(), 1);
        assert_eq!(brute_force_cycle_count(&Graph::complete(4)), 7);
        let k4 = Graph::complete(4).enumerate_cycles(100);
        assert_eq!(k4.cycles.len(), 7);
        assert_eq!(k4.cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(k4.cycles.iter().filter(|c| c.len() == 4).count(), 3);
        assert_eq!(Graph::bowtie().enumerate_cycles(100).cycles.len(), 2);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let c3 = Graph::cycle(3);
        let graphs = [
            Graph::complete(5),
            Graph::complete_bipartite(2, 3),
            Graph::complete(3).cartesian_product(&Graph::complete(2)),
            Graph::bowtie(),
        ];
        for g in graphs.iter().chain(std::iter::once(&c3)) {
            let found = g.enumerate_cycles(DEFAULT_CYCLE_LIMIT);
            assert!(!found.truncated);
            assert_eq!(found.cycles.len(), brute_force_cycle_count(g));
        }
    }

    #[test]
    fn truncation_flag() {
        let r = Graph::complete(5).enumerate_cycles(5);
        assert_eq!(r.cycles.len(), 5);
        assert!(r.truncated);
        assert!(!Graph::complete(5).enumerate_cycles(37).truncated);
    }

    #[test]
    fn invalid_cycles_rejected() {
        let g = Graph::path(4);
        assert!(Cycle::from_vertices(&g, &[0, 1, 2, 3]).is_err());
        assert!(Cycle::from_vertices(&g, &[0, 1]).is_err());
        let k4 = Graph::complete(4);
        assert!(Cycle::from_vertices(&k4, &[0, 1, 0]).is_err());
    }

    #[test]
    fn normalization() {
        let g = Graph::cycle(5);
        let c = Cycle::from_vertices(&g, &[3, 2, 1, 0, 4]).unwrap().normalized(&g);
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4]);
    }
}
