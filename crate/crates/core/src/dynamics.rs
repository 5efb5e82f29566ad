//! Iterating `F`, classifying convergence and exhibiting growing cliques.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::forest::{extend_in, is_maximal_forest, MaximalForest};
use crate::forest_graph::{build_forest_graph, ForestGraph};
use crate::graph::{
    hamiltonian_cycle, is_isomorphic, max_clique, Cycle, EdgeSubset, Graph, DEFAULT_CYCLE_LIMIT,
    MAX_CLIQUE_VERTICES,
};

/// Per-step forest budget used by iteration unless overridden.
pub const DEFAULT_ITERATION_BUDGET: u64 = 1_000_000;

/// Applies `F` `steps` times.
pub fn iterate_f(g: &Graph, steps: usize, budget: u64) -> Result<Graph> {
    let mut current = g.clone();
    for step in 1..=steps {
        current = build_forest_graph(&current, budget)
            .map_err(|e| e.at_step(step))?
            .into_graph();
    }
    Ok(current)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Limit {
    K1,
    K3,
}

impl Limit {
    pub fn graph(self) -> Graph {
        match self {
            Limit::K1 => Graph::complete(1),
            Limit::K3 => Graph::complete(3),
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Limit::K1 => "K1",
            Limit::K3 => "K3",
        })
    }
}

/// Evidence that the orbit of `F` is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivergenceWitness {
    /// A cycle of length at least 4.
    LongCycle(Cycle),
    TwoTriangles(Cycle, Cycle),
}

impl DivergenceWitness {
    pub fn kind(&self) -> &'static str {
        match self {
            DivergenceWitness::LongCycle(_) => "long-cycle",
            DivergenceWitness::TwoTriangles(..) => "two-edge-disjoint-triangles",
        }
    }

    pub fn edges(&self) -> Vec<usize> {
        match self {
            DivergenceWitness::LongCycle(c) => c.edges().to_vec(),
            DivergenceWitness::TwoTriangles(a, b) => a.edges().iter().chain(b.edges()).copied().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Convergent { limit: Limit, steps_to_limit: usize },
    Divergent { witness: DivergenceWitness },
}

impl Verdict {
    pub fn is_convergent(&self) -> bool {
        matches!(self, Verdict::Convergent { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Convergent { .. } => "Convergent",
            Verdict::Divergent { .. } => "Divergent",
        }
    }

    /// Stable `key=value` lines: status, limit, steps, witness_kind, witness_edges.
    pub fn to_key_values(&self, g: &Graph) -> String {
        match self {
            Verdict::Convergent { limit, steps_to_limit } => {
                format!("status=Convergent\nlimit={limit}\nsteps={steps_to_limit}\n")
            }
            Verdict::Divergent { witness } => {
                let edges: Vec<String> = witness.edges().iter().map(|&e| g.edge_name(e)).collect();
                format!(
                    "status=Divergent\nwitness_kind={}\nwitness_edges={}\n",
                    witness.kind(),
                    edges.join(",")
                )
            }
        }
    }

    pub fn human(&self, g: &Graph) -> String {
        match self {
            Verdict::Convergent { limit, steps_to_limit } => {
                format!("Convergent; limit: {limit}; steps: {steps_to_limit}")
            }
            Verdict::Divergent { witness } => match witness {
                DivergenceWitness::LongCycle(c) => {
                    let vs: Vec<String> = c.vertices().iter().map(|&v| g.vertex_name(v)).collect();
                    format!("Divergent; witness: {}-cycle ({})", c.len(), vs.join(" "))
                }
                DivergenceWitness::TwoTriangles(..) => "Divergent; witness: two edge-disjoint triangles".into(),
            },
        }
    }
}

/// Convergent exactly for acyclic graphs (limit `K1`) and graphs whose only cycle is a
/// triangle (limit `K3`); the number of steps to reach the limit is measured by
/// isomorphism tests at steps 0, 1 and 2.
pub fn classify(g: &Graph) -> Verdict {
    let beta = g.cyclomatic_number();
    let limit = match beta {
        0 => Some(Limit::K1),
        1 if g.unique_cycle().is_some_and(|c| c.len() == 3) => Some(Limit::K3),
        _ => None,
    };
    match limit {
        Some(limit) => Verdict::Convergent {
            limit,
            steps_to_limit: steps_to_limit(g, limit),
        },
        None => Verdict::Divergent {
            witness: divergence_witness(g).expect("a graph with two cycles or a long cycle has a witness"),
        },
    }
}

fn steps_to_limit(g: &Graph, limit: Limit) -> usize {
    let target = limit.graph();
    let mut current = g.clone();
    for step in 0..=2 {
        if is_isomorphic(&current, &target).expect("comparison against a complete graph") {
            return step;
        }
        // convergent graphs have one or three maximal forests
        current = build_forest_graph(&current, 3).expect("convergent graphs stay tiny").into_graph();
    }
    unreachable!("convergent graphs reach their limit within two steps")
}

/// A cycle of length at least 4 (the longest found), else two edge-disjoint triangles.
pub fn divergence_witness(g: &Graph) -> Option<DivergenceWitness> {
    let cycles = g.enumerate_cycles(DEFAULT_CYCLE_LIMIT).cycles;
    if let Some(long) = cycles
        .iter()
        .filter(|c| c.len() >= 4)
        .fold(None::<&Cycle>, |best, c| match best {
            Some(b) if b.len() >= c.len() => Some(b),
            _ => Some(c),
        })
    {
        return Some(DivergenceWitness::LongCycle(long.clone()));
    }
    two_edge_disjoint_triangles(&cycles).map(|(a, b)| DivergenceWitness::TwoTriangles(a, b))
}

fn two_edge_disjoint_triangles(cycles: &[Cycle]) -> Option<(Cycle, Cycle)> {
    let triangles: Vec<&Cycle> = cycles.iter().filter(|c| c.len() == 3).collect();
    triangles.iter().enumerate().find_map(|(i, a)| {
        triangles[i + 1..]
            .iter()
            .find(|b| a.edge_disjoint(b))
            .map(|b| ((*a).clone(), (*b).clone()))
    })
}

/// `F(g) ≅ g`.
pub fn is_stable(g: &Graph, budget: u64) -> Result<bool> {
    let count = crate::forest::forest_count(g);
    if !count.is_exact() || count.value() != &num_bigint::BigUint::from(g.vertex_count()) {
        return Ok(false);
    }
    let fg = build_forest_graph(g, budget)?;
    is_isomorphic(fg.graph(), g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// `n` forests from an `n`-cycle, rotating which cycle edge is left out.
    FromCycle,
    /// `⌊n²/4⌋` forests from a Hamiltonian path through a `K_n`, swapping its middle edge.
    FromCompletePath,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::FromCycle => "from-cycle",
            Construction::FromCompletePath => "from-Kn-path",
        })
    }
}

/// Maximal forests of one graph that are pairwise one exchange apart, so they span a
/// complete subgraph of its forest graph.
#[derive(Clone, Debug)]
pub struct CliqueWitness {
    pub forests: Vec<MaximalForest>,
    pub construction: Construction,
}

impl CliqueWitness {
    pub fn size(&self) -> usize {
        self.forests.len()
    }

    /// Every member is a maximal forest of the base and every pair has symmetric
    /// difference exactly 2.
    pub fn verify(&self) -> bool {
        let Some(first) = self.forests.first() else {
            return true;
        };
        let base = first.base();
        self.forests
            .iter()
            .all(|f| crate::forest::same_base(f.base(), base) && is_maximal_forest(base, f.edges()))
            && pairwise_symdiff(&self.forests, |d| d == 2)
    }

    /// Positions of the witness forests in `fg`'s vertex numbering.
    pub fn indices_in(&self, fg: &ForestGraph) -> Option<Vec<usize>> {
        self.forests.iter().map(|f| fg.family().index_of(f.edges())).collect()
    }
}

fn pairwise_symdiff(forests: &[MaximalForest], ok: impl Fn(usize) -> bool) -> bool {
    forests.iter().enumerate().all(|(i, a)| {
        forests[i + 1..]
            .iter()
            .all(|b| ok(a.edges().symmetric_difference_count(b.edges())))
    })
}

/// `K_n` witness in `F(g)` from an `n`-cycle of `g`.
pub fn clique_witness_from_cycle(g: &Graph, c: &Cycle) -> Result<CliqueWitness> {
    if !c.is_cycle_of(g) {
        return Err(Error::input("the given vertex sequence is not a cycle of the graph"));
    }
    let base = Arc::new(g.clone());
    let cycle_edges = c.edge_set(g);
    let paths: Vec<EdgeSubset> = c.edges().iter().map(|&e| cycle_edges.without(e)).collect();
    let first = extend_in(Arc::clone(&base), &paths[0])?;
    let outside = first.edges().difference(&paths[0]);
    let forests = paths
        .iter()
        .map(|p| MaximalForest::new_unchecked(Arc::clone(&base), outside.union(p)))
        .collect();
    Ok(CliqueWitness {
        forests,
        construction: Construction::FromCycle,
    })
}

/// `K_{⌊n²/4⌋}` witness in `F(g)` from a complete subgraph on `clique` (taken in the
/// given order as a Hamiltonian path).
pub fn clique_witness_from_complete(g: &Graph, clique: &[usize]) -> Result<CliqueWitness> {
    let n = clique.len();
    if n < 2 {
        return Err(Error::input("a complete subgraph needs at least 2 vertices"));
    }
    let edge = |a: usize, b: usize| -> Result<usize> {
        g.edge_index(clique[a], clique[b])
            .filter(|_| clique[a] != clique[b])
            .ok_or_else(|| Error::input(format!("{} and {} are not adjacent", clique[a], clique[b])))
    };
    for a in 0..n {
        for b in a + 1..n {
            edge(a, b)?;
        }
    }
    let base = Arc::new(g.clone());
    let path = EdgeSubset::from_indices(g.edge_count(), (1..n).map(|i| edge(i - 1, i).expect("checked")));
    let forest = extend_in(Arc::clone(&base), &path)?;
    let mid = n / 2;
    let without_middle = forest.edges().without(edge(mid - 1, mid)?);
    let mut forests = Vec::with_capacity(mid * (n - mid));
    for i in 0..mid {
        for j in mid..n {
            let swapped = without_middle.with(edge(i, j)?);
            forests.push(MaximalForest::new_unchecked(Arc::clone(&base), swapped));
        }
    }
    Ok(CliqueWitness {
        forests,
        construction: Construction::FromCompletePath,
    })
}

/// The nine maximal forests obtained from two edge-disjoint triangles, one for each
/// choice of an edge to drop from each triangle. Row-major: `forests[3 * i + j]` drops
/// edge `i` of the first triangle and edge `j` of the second.
#[derive(Clone, Debug)]
pub struct TriangleProduct {
    pub forests: Vec<MaximalForest>,
}

impl TriangleProduct {
    /// A Hamiltonian cycle of `C_3 □ C_3` through the nine forests.
    pub const NINE_CYCLE: [usize; 9] = [0, 1, 2, 5, 3, 4, 7, 8, 6];

    /// Forests sharing a row or a column differ by one exchange, all others by two.
    pub fn verify(&self) -> bool {
        if self.forests.len() != 9 {
            return false;
        }
        (0..9).all(|a| {
            (a + 1..9).all(|b| {
                let same_line = a / 3 == b / 3 || a % 3 == b % 3;
                let d = self.forests[a].edges().symmetric_difference_count(self.forests[b].edges());
                d == if same_line { 2 } else { 4 }
            })
        })
    }

    pub fn nine_cycle(&self) -> Vec<&MaximalForest> {
        Self::NINE_CYCLE.iter().map(|&i| &self.forests[i]).collect()
    }
}

pub fn clique_witness_from_two_triangles(g: &Graph, t1: &Cycle, t2: &Cycle) -> Result<TriangleProduct> {
    for t in [t1, t2] {
        if t.len() != 3 || !t.is_cycle_of(g) {
            return Err(Error::input("expected a triangle of the graph"));
        }
    }
    if !t1.edge_disjoint(t2) {
        return Err(Error::input("the triangles share an edge"));
    }
    let base = Arc::new(g.clone());
    let m = g.edge_count();
    let union = t1.edge_set(g).union(&t2.edge_set(g));
    let local = |i: usize, j: usize| union.without(t1.edges()[i]).without(t2.edges()[j]);
    let first = extend_in(Arc::clone(&base), &local(0, 0))?;
    let outside = first.edges().difference(&local(0, 0));
    debug_assert_eq!(outside.universe(), m);
    let forests = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| MaximalForest::new_unchecked(Arc::clone(&base), outside.union(&local(i, j))))
        .collect();
    Ok(TriangleProduct { forests })
}

/// One level of [`verify_clique_growth`].
#[derive(Clone, Debug)]
pub struct GrowthStep {
    /// The witness lives in `F^level(g)`.
    pub level: usize,
    pub witness: CliqueWitness,
    pub verified: bool,
}

impl GrowthStep {
    pub fn size(&self) -> usize {
        self.witness.size()
    }

    /// Divergent graphs have `K_{k²}` in `F^k`.
    pub fn meets_square_bound(&self) -> bool {
        self.size() >= self.level * self.level
    }
}

#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub steps: Vec<GrowthStep>,
    /// Set when a forest graph needed for the next level exceeded the budget.
    pub stopped: Option<Error>,
}

impl GrowthReport {
    pub fn all_verified(&self) -> bool {
        self.steps.iter().all(|s| s.verified)
    }
}

/// Known structure in one iterate `F^k(g)`.
struct Level {
    graph: Graph,
    clique: Option<Vec<usize>>,
    cycle: Option<Cycle>,
    triangles: Option<(Cycle, Cycle)>,
}

/// Exhibits clique witnesses in `F(g), ..., F^m(g)`, chaining the constructions: a
/// cycle of length `n` gives `K_n` one level up, `K_n` gives `K_{⌊n²/4⌋}`, two
/// edge-disjoint triangles give a 9-cycle, and a `K_4` or `K_5` gives a cycle through
/// all its spanning trees. Each witness is checked pairwise, not by clique search.
pub fn verify_clique_growth(g: &Graph, m: usize, budget: u64) -> Result<GrowthReport> {
    if classify(g).is_convergent() {
        return Err(Error::input("clique growth needs a divergent graph"));
    }
    let cycles = g.enumerate_cycles(DEFAULT_CYCLE_LIMIT / 10).cycles;
    let mut level = Level {
        clique: (g.vertex_count() <= MAX_CLIQUE_VERTICES)
            .then(|| max_clique(g).ok())
            .flatten()
            .filter(|q| q.len() >= 2),
        cycle: cycles.iter().max_by_key(|c| (c.len(), std::cmp::Reverse(c.vertices().to_vec()))).cloned(),
        triangles: two_edge_disjoint_triangles(&cycles),
        graph: g.clone(),
    };
    let mut report = GrowthReport {
        steps: Vec::new(),
        stopped: None,
    };
    for k in 1..=m {
        let witness = best_witness(&level)?;
        report.steps.push(GrowthStep {
            level: k,
            verified: witness.verify(),
            witness: witness.clone(),
        });
        if k == m {
            break;
        }
        let fg = match build_forest_graph(&level.graph, budget) {
            Ok(fg) => fg,
            Err(e @ Error::Budget { .. }) => {
                report.stopped = Some(e.at_step(k));
                break;
            }
            Err(e) => return Err(e),
        };
        level = next_level(&level, &fg, &witness)?;
    }
    Ok(report)
}

fn best_witness(level: &Level) -> Result<CliqueWitness> {
    let from_cycle = level.cycle.as_ref().map(|c| c.len()).unwrap_or(0);
    let from_clique = level.clique.as_ref().map(|q| q.len() * q.len() / 4).unwrap_or(0);
    if from_cycle >= from_clique && from_cycle > 0 {
        clique_witness_from_cycle(&level.graph, level.cycle.as_ref().expect("present"))
    } else if let Some(q) = &level.clique {
        clique_witness_from_complete(&level.graph, q)
    } else {
        // a single edge; divergent graphs always have a cycle
        Err(Error::input("no cycle or edge to build a witness from"))
    }
}

fn next_level(prev: &Level, fg: &ForestGraph, witness: &CliqueWitness) -> Result<Level> {
    let h = fg.graph();
    let clique = witness
        .indices_in(fg)
        .ok_or_else(|| Error::input("witness forests missing from the forest graph"))?;
    let mut cycles: Vec<Cycle> = Vec::new();
    if clique.len() >= 3 {
        cycles.push(Cycle::from_vertices(h, &clique)?);
    }
    if let Some((t1, t2)) = &prev.triangles {
        let product = clique_witness_from_two_triangles(&prev.graph, t1, t2)?;
        let order: Option<Vec<usize>> = product
            .nine_cycle()
            .iter()
            .map(|f| fg.family().index_of(f.edges()))
            .collect();
        if let Some(order) = order {
            cycles.push(Cycle::from_vertices(h, &order)?);
        }
    }
    if let Some(q) = prev.clique.as_ref().filter(|q| (4..=5).contains(&q.len())) {
        if let Some(c) = lift_tree_graph_cycle(&prev.graph, q, fg)? {
            cycles.push(c);
        }
    }
    let cycle = cycles.into_iter().max_by_key(|c| c.len());
    Ok(Level {
        graph: h.clone(),
        clique: Some(clique),
        cycle,
        triangles: None,
    })
}

/// Lifts a Hamiltonian cycle of `F(K_q)` to a cycle of `F(g)` through forests that
/// agree outside the complete subgraph on `clique`. `None` when the search budget runs
/// out.
fn lift_tree_graph_cycle(g: &Graph, clique: &[usize], fg: &ForestGraph) -> Result<Option<Cycle>> {
    const LIFT_SEARCH_BUDGET: u64 = 2_000_000;
    let q = clique.len();
    let kq = Graph::complete(q);
    let trees = build_forest_graph(&kq, u64::MAX)?;
    let Ok(Some(ham)) = hamiltonian_cycle(trees.graph(), LIFT_SEARCH_BUDGET) else {
        return Ok(None);
    };
    let to_g = |local: &EdgeSubset| -> EdgeSubset {
        EdgeSubset::from_indices(
            g.edge_count(),
            local.iter().map(|e| {
                let (a, b) = kq.edge(e);
                g.edge_index(clique[a], clique[b]).expect("clique edges exist")
            }),
        )
    };
    let first_tree = to_g(trees.forest(0).edges());
    let anchor = extend_in(Arc::clone(fg.base()), &first_tree)?;
    let outside = anchor.edges().difference(&first_tree);
    let order: Option<Vec<usize>> = ham
        .vertices()
        .iter()
        .map(|&t| fg.family().index_of(&outside.union(&to_g(trees.forest(t).edges()))))
        .collect();
    match order {
        Some(order) => Ok(Some(Cycle::from_vertices(fg.graph(), &order)?)),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_with_pendants() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (0, 5)]).unwrap()
    }

    #[test]
    fn iterate_examples() {
        let forest = Graph::path(4);
        assert_eq!(iterate_f(&forest, 2, 100).unwrap(), Graph::complete(1));
        assert!(iterate_f(&triangle_with_pendants(), 2, 100).unwrap().is_complete());
        assert_eq!(iterate_f(&triangle_with_pendants(), 2, 100).unwrap().vertex_count(), 3);
        assert!(iterate_f(&Graph::cycle(4), 1, 100).unwrap().is_complete());
        assert_eq!(iterate_f(&Graph::cycle(4), 2, 100).unwrap().vertex_count(), 16);
    }

    #[test]
    fn iterate_budget_reports_step() {
        match iterate_f(&Graph::cycle(4), 3, 1_000_000) {
            Err(Error::Budget { step, count, .. }) => {
                assert_eq!(step, Some(3));
                assert!(count.is_exact());
                assert!(count.value() > &num_bigint::BigUint::from(1_000_000u32));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&Graph::complete(3)),
            Verdict::Convergent { limit: Limit::K3, steps_to_limit: 0 }
        );
        assert_eq!(
            classify(&triangle_with_pendants()),
            Verdict::Convergent { limit: Limit::K3, steps_to_limit: 1 }
        );
        assert_eq!(
            classify(&Graph::complete(1)),
            Verdict::Convergent { limit: Limit::K1, steps_to_limit: 0 }
        );
        assert_eq!(
            classify(&Graph::path(3)),
            Verdict::Convergent { limit: Limit::K1, steps_to_limit: 1 }
        );
        match classify(&Graph::cycle(5)) {
            Verdict::Divergent { witness: DivergenceWitness::LongCycle(c) } => assert_eq!(c.len(), 5),
            other => panic!("unexpected {other:?}"),
        }
        match classify(&Graph::bowtie()) {
            Verdict::Divergent { witness: DivergenceWitness::TwoTriangles(a, b) } => {
                assert!(a.edge_disjoint(&b));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn stability_examples() {
        assert!(is_stable(&Graph::complete(1), 10).unwrap());
        assert!(is_stable(&Graph::complete(3), 10).unwrap());
        assert!(!is_stable(&Graph::complete(4), 100).unwrap());
        assert!(!is_stable(&Graph::cycle(4), 100).unwrap());
    }

    #[test]
    fn witness_from_cycle_examples() {
        let k3 = Graph::complete(3);
        let tri = Cycle::from_vertices(&k3, &[0, 1, 2]).unwrap();
        let w = clique_witness_from_cycle(&k3, &tri).unwrap();
        assert_eq!(w.size(), 3);
        assert!(w.verify());

        let c4 = Graph::cycle(4);
        let c = c4.unique_cycle().unwrap();
        let w = clique_witness_from_cycle(&c4, &c).unwrap();
        assert_eq!(w.size(), 4);
        assert!(w.verify());

        let other = Graph::cycle(5);
        let bogus = Cycle::from_vertices(&other, &[0, 1, 2, 3, 4]).unwrap();
        assert!(matches!(clique_witness_from_cycle(&c4, &bogus), Err(Error::Input(_))));
    }

    #[test]
    fn witness_from_complete_sizes() {
        for (n, expected) in [(2, 1), (3, 2), (4, 4), (5, 6)] {
            let k = Graph::complete(n);
            let vs: Vec<usize> = (0..n).collect();
            let w = clique_witness_from_complete(&k, &vs).unwrap();
            assert_eq!(w.size(), expected);
            assert!(w.verify());
        }
        assert!(clique_witness_from_complete(&Graph::cycle(4), &[0, 1, 2]).is_err());
    }

    #[test]
    fn triangle_product() {
        let g = Graph::bowtie();
        let t1 = Cycle::from_vertices(&g, &[0, 1, 2]).unwrap();
        let t2 = Cycle::from_vertices(&g, &[0, 3, 4]).unwrap();
        let p = clique_witness_from_two_triangles(&g, &t1, &t2).unwrap();
        assert!(p.verify());
        assert!(clique_witness_from_two_triangles(&g, &t1, &t1).is_err());
    }

    #[test]
    fn growth_examples() {
        let r = verify_clique_growth(&Graph::cycle(4), 1, 1000).unwrap();
        assert_eq!(r.steps[0].size(), 4);
        let r = verify_clique_growth(&Graph::bowtie(), 2, 1000).unwrap();
        assert_eq!(r.steps[1].size(), 9);
        assert!(r.all_verified());
        let r = verify_clique_growth(&Graph::cycle(5), 2, 1000).unwrap();
        assert_eq!(r.steps[1].size(), 6);
        assert!(r.all_verified());
    }

    #[test]
    fn growth_through_tree_graph_lift() {
        let r = verify_clique_growth(&Graph::complete(4), 2, 1000).unwrap();
        assert_eq!(r.steps[1].size(), 16);
        assert!(r.all_verified());
    }

    #[test]
    fn key_values_are_stable() {
        let g = Graph::bowtie();
        let kv = classify(&g).to_key_values(&g);
        assert!(kv.starts_with("status=Divergent\nwitness_kind=two-edge-disjoint-triangles\n"));
        let k3 = Graph::complete(3);
        assert_eq!(classify(&k3).to_key_values(&k3), "status=Convergent\nlimit=K3\nsteps=0\n");
    }
}
