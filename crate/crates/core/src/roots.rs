//! Forest-graph roots: proof-grade pruning, bounded search and depth certificates.

use std::fmt;

use num_bigint::BigUint;

use crate::corpus::{enumerate_graphs, MAX_CORPUS_VERTICES};
use crate::error::{Error, Result};
use crate::forest::count_maximal_forests;
use crate::forest_graph::build_forest_graph;
use crate::graph::{find_isomorphism, is_isomorphic, Bipartition, Graph};

/// Why a graph has no root. Every reason except `ExhaustedBudget` is a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoRootReason {
    Bipartite { coloring: Vec<bool> },
    Isthmus { edge: usize },
    IsolatedVertex { vertex: usize },
    Disconnected { components: Vec<Vec<usize>> },
    /// No graph has exactly this many maximal forests.
    OrderMismatch { vertices: usize },
    /// The bounded search found nothing; this is an honest "unknown".
    ExhaustedBudget {
        max_vertices: usize,
        max_edges: usize,
        candidates_tested: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoRootCertificate {
    pub reason: NoRootReason,
}

impl NoRootCertificate {
    fn new(reason: NoRootReason) -> Self {
        NoRootCertificate { reason }
    }

    pub fn is_proof(&self) -> bool {
        !matches!(self.reason, NoRootReason::ExhaustedBudget { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self.reason {
            NoRootReason::Bipartite { .. } => "bipartite",
            NoRootReason::Isthmus { .. } | NoRootReason::IsolatedVertex { .. } => "isthmus-or-isolated",
            NoRootReason::Disconnected { .. } => "disconnected",
            NoRootReason::OrderMismatch { .. } => "order-mismatch",
            NoRootReason::ExhaustedBudget { .. } => "exhausted-budget",
        }
    }

    /// Re-checks the witness against `g` without reusing the pruning code path.
    pub fn verify(&self, g: &Graph) -> bool {
        match &self.reason {
            NoRootReason::Bipartite { coloring } => {
                coloring.len() == g.vertex_count()
                    && g.vertex_count() >= 2
                    && g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
            }
            NoRootReason::Isthmus { edge } => {
                // deleting it must increase the component count
                *edge < g.edge_count() && {
                    let rest = g.all_edges().without(*edge);
                    g.spanning_subgraph(&rest).component_count() > g.component_count()
                }
            }
            NoRootReason::IsolatedVertex { vertex } => g.vertex_count() >= 2 && g.degree(*vertex) == 0,
            NoRootReason::Disconnected { components } => components.len() >= 2 && g.components() == *components,
            NoRootReason::OrderMismatch { vertices } => *vertices == g.vertex_count() && matches!(vertices, 0 | 2),
            NoRootReason::ExhaustedBudget { .. } => false,
        }
    }
}

impl fmt::Display for NoRootCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            NoRootReason::Bipartite { .. } => write!(f, "no root: bipartite"),
            NoRootReason::Isthmus { edge } => write!(f, "no root: isthmus (edge {edge})"),
            NoRootReason::IsolatedVertex { vertex } => write!(f, "no root: isolated vertex {vertex}"),
            NoRootReason::Disconnected { components } => {
                write!(f, "no root: disconnected ({} components)", components.len())
            }
            NoRootReason::OrderMismatch { vertices } => {
                write!(f, "no root: no graph has exactly {vertices} maximal forests")
            }
            NoRootReason::ExhaustedBudget {
                max_vertices,
                max_edges,
                candidates_tested,
            } => write!(
                f,
                "no root found among candidates with <= {max_vertices} vertices and <= {max_edges} edges \
                 ({candidates_tested} tested); unknown beyond that"
            ),
        }
    }
}

/// Proof that `g` is not a forest graph, when one of the cheap criteria applies.
///
/// `K_1` is its own root and never pruned.
pub fn no_root_prune(g: &Graph) -> Option<NoRootCertificate> {
    let n = g.vertex_count();
    if n == 1 {
        return None;
    }
    if n == 0 || n == 2 {
        // every graph has at least one maximal forest, and a simple graph with a cycle
        // has at least three
        return Some(NoRootCertificate::new(NoRootReason::OrderMismatch { vertices: n }));
    }
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) == 0) {
        return Some(NoRootCertificate::new(NoRootReason::IsolatedVertex { vertex }));
    }
    if let Some(edge) = g.bridges().iter().next() {
        return Some(NoRootCertificate::new(NoRootReason::Isthmus { edge }));
    }
    let components = g.components();
    if components.len() > 1 {
        return Some(NoRootCertificate::new(NoRootReason::Disconnected { components }));
    }
    if let Bipartition::TwoColoring(coloring) = g.bipartition() {
        return Some(NoRootCertificate::new(NoRootReason::Bipartite { coloring }));
    }
    None
}

/// A root `H` with `F(H) ≅ g`; `iso_map[i]` sends forest `i` of `H` to a vertex of `g`.
#[derive(Clone, Debug)]
pub struct Root {
    pub graph: Graph,
    pub iso_map: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum RootSearch {
    Found(Vec<Root>),
    None(NoRootCertificate),
}

/// Connected, isthmus-free candidates on at most `max_vertices` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Forest budget when building `F(H)` for a candidate.
    pub forests: u64,
}

impl Default for RootBudget {
    fn default() -> Self {
        RootBudget {
            max_vertices: 6,
            max_edges: 15,
            forests: crate::forest::DEFAULT_FOREST_BUDGET,
        }
    }
}

/// All roots of `g` up to isomorphism among connected, isthmus-free graphs within the
/// budget. Candidates are filtered by size, connectivity, isthmus-freeness and forest
/// count before the full `F(H) ≅ g` test.
pub fn find_roots(g: &Graph, budget: RootBudget) -> Result<RootSearch> {
    if let Some(cert) = no_root_prune(g) {
        return Ok(RootSearch::None(cert));
    }
    if budget.max_vertices > MAX_CORPUS_VERTICES {
        return Err(Error::resource(format!(
            "root candidates are enumerated up to {MAX_CORPUS_VERTICES} vertices (asked for {})",
            budget.max_vertices
        )));
    }
    let target = BigUint::from(g.vertex_count());
    let mut roots = Vec::new();
    let mut tested = 0;
    for n in 1..=budget.max_vertices {
        for h in enumerate_graphs(n)? {
            if h.edge_count() > budget.max_edges
                || !h.is_connected()
                || (n > 1 && h.has_isolated_vertex())
                || !h.bridges().is_empty()
            {
                continue;
            }
            tested += 1;
            if count_maximal_forests(&h) != target {
                continue;
            }
            let fh = build_forest_graph(&h, budget.forests)?;
            if let Some(iso_map) = find_isomorphism(fh.graph(), g)? {
                roots.push(Root { graph: h, iso_map });
            }
        }
    }
    if roots.is_empty() {
        return Ok(RootSearch::None(NoRootCertificate::new(NoRootReason::ExhaustedBudget {
            max_vertices: budget.max_vertices,
            max_edges: budget.max_edges,
            candidates_tested: tested,
        })));
    }
    Ok(RootSearch::Found(roots))
}

/// Chain `[H_k, ..., H_1, G]` with `F(H_i) ≅ H_{i-1}` and `H_0 = G`.
#[derive(Clone, Debug)]
pub struct RootCertificate {
    pub chain: Vec<Graph>,
    /// `iso_maps[i]` maps the forests of `chain[i]` onto the vertices of `chain[i + 1]`.
    pub iso_maps: Vec<Vec<usize>>,
}

impl RootCertificate {
    pub fn depth(&self) -> usize {
        self.chain.len() - 1
    }

    /// Recomputes every link with a fresh forest graph and checks the stored map.
    pub fn verify(&self, budget: u64) -> Result<bool> {
        for (i, map) in self.iso_maps.iter().enumerate() {
            let fh = build_forest_graph(&self.chain[i], budget)?;
            let target = &self.chain[i + 1];
            if map.len() != fh.graph().vertex_count() || map.len() != target.vertex_count() {
                return Ok(false);
            }
            let mapped = fh.graph().edges().iter().all(|&(a, b)| target.has_edge(map[a], map[b]));
            if !mapped || fh.graph().edge_count() != target.edge_count() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Consecutive edge-list blocks separated by explicit `map` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, g) in self.chain.iter().enumerate() {
            out.push_str(&format!("graph {i}\n"));
            out.push_str(&crate::io::write_edge_list(g));
            if let Some(map) = self.iso_maps.get(i) {
                let pairs: Vec<String> = map.iter().enumerate().map(|(a, b)| format!("{a}:{b}")).collect();
                out.push_str(&format!("map {}\n", pairs.join(" ")));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub enum DepthTermination {
    /// `g` is `K_1` or `K_3`, which are their own forest graphs; depth is unbounded.
    Stable,
    /// The deepest graph provably has no root.
    Proven(NoRootCertificate),
    /// The search for a deeper root found nothing within budget.
    Unknown(NoRootCertificate),
}

#[derive(Clone, Debug)]
pub struct DepthReport {
    pub certificate: RootCertificate,
    pub termination: DepthTermination,
}

impl DepthReport {
    /// The certified depth lower bound.
    pub fn depth(&self) -> usize {
        self.certificate.depth()
    }

    /// Exact when the chain ends in a proof and the longest chain was followed.
    pub fn is_exact(&self) -> bool {
        matches!(self.termination, DepthTermination::Proven(_))
    }
}

/// Follows roots backwards as far as the budget allows, keeping the longest chain.
pub fn depth_lower_bound(g: &Graph, budget: RootBudget) -> Result<DepthReport> {
    let single = RootCertificate {
        chain: vec![g.clone()],
        iso_maps: Vec::new(),
    };
    if g.vertex_count() == 1 || (g.vertex_count() == 3 && is_isomorphic(g, &Graph::complete(3))?) {
        return Ok(DepthReport {
            certificate: single,
            termination: DepthTermination::Stable,
        });
    }
    longest_chain(g, budget, 0)
}

const MAX_CHAIN: usize = 16;

fn longest_chain(g: &Graph, budget: RootBudget, depth: usize) -> Result<DepthReport> {
    let leaf = |cert: NoRootCertificate| {
        let termination = if cert.is_proof() {
            DepthTermination::Proven(cert)
        } else {
            DepthTermination::Unknown(cert)
        };
        DepthReport {
            certificate: RootCertificate {
                chain: vec![g.clone()],
                iso_maps: Vec::new(),
            },
            termination,
        }
    };
    if depth >= MAX_CHAIN {
        return Ok(leaf(NoRootCertificate::new(NoRootReason::ExhaustedBudget {
            max_vertices: budget.max_vertices,
            max_edges: budget.max_edges,
            candidates_tested: 0,
        })));
    }
    let roots = match find_roots(g, budget)? {
        RootSearch::None(cert) => return Ok(leaf(cert)),
        RootSearch::Found(roots) => roots,
    };
    let mut best: Option<DepthReport> = None;
    for root in roots {
        let mut sub = longest_chain(&root.graph, budget, depth + 1)?;
        sub.certificate.chain.push(g.clone());
        sub.certificate.iso_maps.push(root.iso_map);
        let better = match &best {
            None => true,
            Some(b) => {
                sub.depth() > b.depth() || (sub.depth() == b.depth() && sub.is_exact() && !b.is_exact())
            }
        };
        if better {
            best = Some(sub);
        }
    }
    Ok(best.expect("at least one root"))
}
