//! Whitney 2-operations. Each keeps every edge's identity, so the families of
//! maximal-forest edge sets before and after can be compared label by label.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::forest::{maximal_forests, UnionFind};
use crate::graph::Graph;

/// A graph produced by a Whitney operation; `edge_origin[i]` is the index, in the
/// original graph, of the new graph's edge `i`.
#[derive(Clone, Debug)]
pub struct Relabeled {
    pub graph: Graph,
    pub edge_origin: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WhitneyOp {
    /// Identify each `(v, w)`, applied in order; the pair must lie in components that
    /// are still distinct at that point. Indices refer to the original graph.
    Identify(Vec<(usize, usize)>),
    /// Split cut vertex `vertex`, moving the edges toward `side` onto a new copy.
    Split { vertex: usize, side: Vec<usize> },
    /// Swap the roles of `u` and `v` for the edges incident to `side`.
    Twist { u: usize, v: usize, side: Vec<usize> },
}

impl WhitneyOp {
    pub fn apply(&self, g: &Graph) -> Result<Relabeled> {
        match self {
            WhitneyOp::Identify(pairs) => whitney_identify(g, pairs),
            WhitneyOp::Split { vertex, side } => whitney_split(g, *vertex, side),
            WhitneyOp::Twist { u, v, side } => whitney_twist(g, *u, *v, side),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            WhitneyOp::Identify(_) => "identify",
            WhitneyOp::Split { .. } => "split",
            WhitneyOp::Twist { .. } => "twist",
        }
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(Error::input(format!("vertex {v} is not in the graph")));
    }
    Ok(())
}

/// Rebuilds a graph from per-edge new endpoints, recording where each edge came from.
fn rebuild(g: &Graph, vertex_count: usize, endpoints: Vec<(usize, usize)>, names: Option<Vec<String>>) -> Result<Relabeled> {
    let mut tagged: Vec<((usize, usize), usize)> = endpoints
        .into_iter()
        .enumerate()
        .map(|(old, (a, b))| ((a.min(b), a.max(b)), old))
        .collect();
    tagged.sort_unstable();
    if tagged.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::input("operation would merge two edges"));
    }
    let graph = Graph::new(vertex_count, tagged.iter().map(|&(e, _)| e))?;
    debug_assert_eq!(graph.edge_count(), g.edge_count());
    let graph = match names {
        Some(n) => graph.with_names(n)?,
        None => graph,
    };
    Ok(Relabeled {
        graph,
        edge_origin: tagged.into_iter().map(|(_, old)| old).collect(),
    })
}

pub fn whitney_identify(g: &Graph, pairs: &[(usize, usize)]) -> Result<Relabeled> {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    // joins whole components, to detect pairs that are already connected
    let mut components = UnionFind::new(n);
    for &(u, v) in g.edges() {
        components.union(u, v);
    }
    for &(v, w) in pairs {
        check_vertex(g, v)?;
        check_vertex(g, w)?;
        if !components.union(v, w) {
            return Err(Error::input(format!("{v} and {w} are already in the same component")));
        }
        uf.union(v, w);
    }
    let mut class = vec![usize::MAX; n];
    let mut next = 0;
    let mut reps = Vec::new();
    for v in 0..n {
        let r = uf.find(v);
        if class[r] == usize::MAX {
            class[r] = next;
            reps.push(v);
            next += 1;
        }
        class[v] = class[r];
    }
    let endpoints = g.edges().iter().map(|&(a, b)| (class[a], class[b])).collect();
    let names = g.names().map(|names| reps.iter().map(|&v| names[v].clone()).collect());
    rebuild(g, next, endpoints, names)
}

/// Components of `g - v` that contain a neighbor of `v`.
pub fn pieces_at(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    g.components_avoiding(&[v])
        .into_iter()
        .filter(|block| g.neighbors(v).iter().any(|(w, _)| block.binary_search(w).is_ok()))
        .collect()
}

fn is_union_of(side: &BTreeSet<usize>, blocks: &[Vec<usize>]) -> Option<usize> {
    let mut covered = 0;
    let mut used = 0;
    for block in blocks {
        let inside = block.iter().filter(|v| side.contains(v)).count();
        if inside == block.len() {
            covered += inside;
            used += 1;
        } else if inside != 0 {
            return None;
        }
    }
    (covered == side.len()).then_some(used)
}

pub fn whitney_split(g: &Graph, v: usize, side: &[usize]) -> Result<Relabeled> {
    check_vertex(g, v)?;
    let pieces = pieces_at(g, v);
    if pieces.len() < 2 {
        return Err(Error::input(format!("{v} is not a cut vertex")));
    }
    let side: BTreeSet<usize> = side.iter().copied().collect();
    match is_union_of(&side, &pieces) {
        Some(used) if used > 0 && used < pieces.len() => {}
        _ => {
            return Err(Error::input(
                "side must be a non-empty proper union of the pieces hanging at the cut vertex",
            ))
        }
    }
    let copy = g.vertex_count();
    let endpoints = g
        .edges()
        .iter()
        .map(|&(a, b)| match (a == v && side.contains(&b), b == v && side.contains(&a)) {
            (true, _) => (copy, b),
            (_, true) => (a, copy),
            _ => (a, b),
        })
        .collect();
    let names = g.names().map(|names| {
        let mut n = names.to_vec();
        n.push(format!("{}'", names[v]));
        n
    });
    rebuild(g, copy + 1, endpoints, names)
}

pub fn whitney_twist(g: &Graph, u: usize, v: usize, side: &[usize]) -> Result<Relabeled> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(Error::input("a twist needs two distinct vertices"));
    }
    let blocks = g.components_avoiding(&[u, v]);
    let side: BTreeSet<usize> = side.iter().copied().filter(|&x| x != u && x != v).collect();
    match is_union_of(&side, &blocks) {
        Some(used) if used > 0 && used < blocks.len() => {}
        _ => {
            return Err(Error::input(format!(
                "{{{u}, {v}}} does not separate the given side from the rest of the graph"
            )))
        }
    }
    let swap = |x: usize| if x == u { v } else if x == v { u } else { x };
    let endpoints = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            if side.contains(&a) || side.contains(&b) {
                (swap(a), swap(b))
            } else {
                (a, b)
            }
        })
        .collect();
    rebuild(g, g.vertex_count(), endpoints, g.names().map(<[String]>::to_vec))
}

/// Maximal forests as sorted lists of edge labels; labels are the graph's own edge
/// indices, or the original indices given by `origin`.
pub fn forest_label_family(g: &Graph, origin: Option<&[usize]>, budget: u64) -> Result<BTreeSet<Vec<usize>>> {
    let family = maximal_forests(g, budget)?;
    Ok(family
        .members()
        .iter()
        .map(|f| {
            let mut labels: Vec<usize> = f.edges().iter().map(|e| origin.map_or(e, |o| o[e])).collect();
            labels.sort_unstable();
            labels
        })
        .collect())
}

/// Whether the operation kept the maximal-forest edge-label family unchanged.
pub fn preserves_forest_family(g: &Graph, result: &Relabeled, budget: u64) -> Result<bool> {
    Ok(forest_label_family(g, None, budget)?
        == forest_label_family(&result.graph, Some(&result.edge_origin), budget)?)
}

/// Picks a random applicable Whitney operation, or `None` if none applies.
pub fn random_op<R: Rng>(g: &Graph, rng: &mut R) -> Option<WhitneyOp> {
    let mut options: Vec<WhitneyOp> = Vec::new();

    let components = g.components();
    if components.len() >= 2 {
        let mut order: Vec<usize> = (0..components.len()).collect();
        order.shuffle(rng);
        let pairs = order
            .windows(2)
            .take(rng.gen_range(1..components.len()))
            .map(|w| {
                let a = components[w[0]].choose(rng).copied().expect("non-empty");
                let b = components[w[1]].choose(rng).copied().expect("non-empty");
                (a, b)
            })
            .collect();
        options.push(WhitneyOp::Identify(pairs));
    }

    let cuts = g.cut_vertices();
    if let Some(&vertex) = cuts.choose(rng) {
        let pieces = pieces_at(g, vertex);
        let side = random_proper_union(&pieces, rng);
        options.push(WhitneyOp::Split { vertex, side });
    }

    let pairs = separation_pairs(g);
    if let Some(&(u, v)) = pairs.choose(rng) {
        let blocks = g.components_avoiding(&[u, v]);
        let side = random_proper_union(&blocks, rng);
        options.push(WhitneyOp::Twist { u, v, side });
    }

    options.choose(rng).cloned()
}

fn random_proper_union<R: Rng>(blocks: &[Vec<usize>], rng: &mut R) -> Vec<usize> {
    let k = blocks.len();
    let mask = rng.gen_range(1..(1u64 << k.min(63)) - 1);
    let mut side: Vec<usize> = blocks
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .flat_map(|(_, b)| b.iter().copied())
        .collect();
    side.sort_unstable();
    side
}

/// Vertex pairs whose removal leaves at least two components.
pub fn separation_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| g.components_avoiding(&[u, v]).len() >= 2)
        .collect()
}
