//! Self-check suite over the small-graph corpus, run by `forestgraph verify`.

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::enumerate_graphs;
use crate::dynamics::{
    classify, clique_witness_from_complete, clique_witness_from_two_triangles, is_stable, iterate_f,
    verify_clique_growth, Verdict,
};
use crate::error::Result;
use crate::forest::{brute_force_maximal_forests, count_maximal_forests, forest_count_exceeds, maximal_forests};
use crate::forest_graph::{build_forest_graph, exchange_path, forest_distance};
use crate::graph::{canonical_form, hamiltonian_cycle, is_isomorphic, max_clique, Cycle, Graph, DEFAULT_HAMILTON_BUDGET};
use crate::roots::{find_roots, no_root_prune, RootBudget, RootSearch};
use crate::whitney::{preserves_forest_family, random_op};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Counts on success, the first counterexample on failure.
    pub detail: String,
    pub millis: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Largest corpus order for the exhaustive checks.
    pub max_vertices: usize,
    pub budget: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            max_vertices: 6,
            budget: crate::forest::DEFAULT_FOREST_BUDGET,
        }
    }
}

type Outcome = std::result::Result<String, String>;
type Check = fn(&VerifyOptions) -> Result<Outcome>;

/// Runs every check; errors inside a check count as failures.
pub fn run_all(opts: VerifyOptions) -> Vec<CheckResult> {
    let checks: Vec<(&'static str, Check)> = vec![
        ("Cayley count", cayley),
        ("forest enumeration", enumeration),
        ("cyclomatic number", cyclomatic),
        ("isthmus membership", isthmuses),
        ("canonical form", canonical),
        ("exchange metric", metric),
        ("forest graph order", fg_order),
        ("forest graph degree", degree_formula),
        ("cycle to complete graph", cycles_to_complete),
        ("two triangles", two_triangles),
        ("tree graph of K4", k4_tree_graph),
        ("complete subgraph clique", complete_clique),
        ("convergence classification", classification),
        ("stability", stability),
        ("roots of K4", roots_of_k4),
        ("no-root certificates", no_root_certificates),
        ("Whitney invariance", whitney),
    ];
    checks
        .into_iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let (passed, detail) = match check(&opts) {
                Ok(Ok(d)) => (true, d),
                Ok(Err(d)) => (false, d),
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult {
                name,
                passed,
                detail,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect()
}

fn corpus(opts: &VerifyOptions) -> Result<Vec<Graph>> {
    crate::corpus::enumerate_graphs_up_to(opts.max_vertices)
}

fn fail(g: &Graph, what: impl std::fmt::Display) -> Outcome {
    Err(format!("{what} on {:?}", g.edges()))
}

fn cayley(_: &VerifyOptions) -> Result<Outcome> {
    for n in 2..=8u32 {
        let expected = BigUint::from(n).pow(n - 2);
        if count_maximal_forests(&Graph::complete(n as usize)) != expected {
            return Ok(Err(format!("K{n} count differs from {expected}")));
        }
    }
    Ok(Ok("K2..K8".into()))
}

fn enumeration(opts: &VerifyOptions) -> Result<Outcome> {
    let graphs = corpus(opts)?;
    for g in &graphs {
        let family = maximal_forests(g, opts.budget)?;
        if BigUint::from(family.len()) != count_maximal_forests(g) {
            return Ok(fail(g, "enumeration size differs from count"));
        }
        if family.members().iter().any(|f| !crate::forest::is_maximal_forest(g, f.edges())) {
            return Ok(fail(g, "non-maximal member"));
        }
        if g.edge_count() <= 16 {
            let brute: BTreeSet<_> = brute_force_maximal_forests(g)?
                .members()
                .iter()
                .map(|f| f.edges().clone())
                .collect();
            let fast: BTreeSet<_> = family.members().iter().map(|f| f.edges().clone()).collect();
            if brute != fast {
                return Ok(fail(g, "enumeration differs from brute force"));
            }
        }
    }
    Ok(Ok(format!("{} graphs", graphs.len())))
}

fn cyclomatic(opts: &VerifyOptions) -> Result<Outcome> {
    let graphs = corpus(opts)?;
    for g in &graphs {
        let beta = g.cyclomatic_number();
        if maximal_forests(g, opts.budget)?
            .members()
            .iter()
            .any(|f| g.edge_count() - f.edge_count() != beta)
        {
            return Ok(fail(g, "forest complement size differs from cyclomatic number"));
        }
        if g.unique_cycle().is_some() != (beta == 1) {
            return Ok(fail(g, "unique cycle disagrees with cyclomatic number"));
        }
    }
    Ok(Ok(format!("{} graphs", graphs.len())))
}

fn isthmuses(opts: &VerifyOptions) -> Result<Outcome> {
    let graphs = corpus(opts)?;
    for g in &graphs {
        let family = maximal_forests(g, opts.budget)?;
        let mut common = g.all_edges();
        for f in family.members() {
            common = common.intersection(f.edges());
        }
        let bridges = g.bridges();
        if family.len() >= 2 && common != bridges {
            return Ok(fail(g, "bridges differ from edges common to all forests"));
        }
        let mut on_cycle = crate::graph::EdgeSubset::empty(g.edge_count());
        for c in g.enumerate_cycles(crate::graph::DEFAULT_CYCLE_LIMIT).cycles {
            on_cycle = on_cycle.union(&c.edge_set(g));
        }
        if on_cycle.complement() != bridges {
            return Ok(fail(g, "bridges differ from edges on no cycle"));
        }
    }
    Ok(Ok(format!("{} graphs", graphs.len())))
}

fn canonical(opts: &VerifyOptions) -> Result<Outcome> {
    let limit = opts.max_vertices.min(5);
    let mut total = 0;
    for n in 1..=limit {
        let graphs = enumerate_graphs(n)?;
        let mut seen = HashSet::new();
        let mut perm: Vec<usize> = (0..n).collect();
        for g in &graphs {
            let canon = canonical_form(g)?.edges;
            if !seen.insert(canon.clone()) {
                return Ok(fail(g, "two corpus graphs share a canonical form"));
            }
            // every relabeling by Heap's algorithm
            let mut c = vec![0; n];
            let mut i = 0;
            while i < n {
                if c[i] < i {
                    perm.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
                    if canonical_form(&g.permuted(&perm))?.edges != canon {
                        return Ok(fail(g, format!("relabeling {perm:?} changes the canonical form")));
                    }
                    c[i] += 1;
                    i = 0;
                } else {
                    c[i] = 0;
                    i += 1;
                }
            }
            total += 1;
        }
    }
    Ok(Ok(format!("{total} graphs, all relabelings")))
}

fn metric(opts: &VerifyOptions) -> Result<Outcome> {
    let mut graphs = 0;
    let mut pairs = 0u64;
    for g in corpus(opts)? {
        if count_maximal_forests(&g) > BigUint::from(500u32) {
            continue;
        }
        let fg = build_forest_graph(&g, opts.budget)?;
        let k = fg.family().len();
        for i in 0..k {
            let bfs = fg.bfs_distances(i);
            for (j, d) in bfs.iter().enumerate() {
                let exact = forest_distance(fg.forest(i), fg.forest(j))?;
                if forest_distance(fg.forest(j), fg.forest(i))? != exact || *d != Some(exact) {
                    return Ok(fail(&g, format!("distance mismatch between forests {i} and {j}")));
                }
                if i < j {
                    let path = exchange_path(&g, fg.forest(i), fg.forest(j))?;
                    let steps_ok = path
                        .windows(2)
                        .all(|w| w[0].edges().symmetric_difference_count(w[1].edges()) == 2);
                    let valid = path.iter().all(|f| crate::forest::is_maximal_forest(&g, f.edges()));
                    if path.len() != exact + 1 || !steps_ok || !valid {
                        return Ok(fail(&g, format!("bad exchange path between forests {i} and {j}")));
                    }
                }
                pairs += 1;
            }
        }
        graphs += 1;
    }
    Ok(Ok(format!("{graphs} graphs, {pairs} ordered pairs")))
}

fn fg_order(opts: &VerifyOptions) -> Result<Outcome> {
    let graphs = corpus(opts)?;
    for g in &graphs {
        let fg = build_forest_graph(g, opts.budget)?;
        let h = fg.graph();
        if h.vertex_count() > 1 && (h.min_degree() < 2 || !h.bridges().is_empty()) {
            return Ok(fail(g, "forest graph has an isthmus or a vertex of degree < 2"));
        }
    }
    Ok(Ok(format!("{} graphs", graphs.len())))
}

/// Number of forest edges on the path joining the ends of each non-forest edge.
fn exchange_degree(g: &Graph, forest: &crate::graph::EdgeSubset) -> usize {
    let tree = g.spanning_subgraph(forest);
    forest
        .complement()
        .iter()
        .map(|e| {
            let (u, v) = g.edge(e);
            let mut dist = vec![usize::MAX; g.vertex_count()];
            dist[u] = 0;
            let mut stack = vec![u];
            while let Some(x) = stack.pop() {
                for &(y, _) in tree.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        stack.push(y);
                    }
                }
            }
            dist[v]
        })
        .sum()
}

fn degree_formula(opts: &VerifyOptions) -> Result<Outcome> {
    let graphs = corpus(opts)?;
    for g in &graphs {
        let fg = build_forest_graph(g, opts.budget)?;
        for (i, f) in fg.family().members().iter().enumerate() {
            if fg.graph().degree(i) != exchange_degree(g, f.edges()) {
                return Ok(fail(g, format!("degree of forest {i} differs from its exchange count")));
            }
        }
    }
    Ok(Ok(format!("{} graphs", graphs.len())))
}

fn cycles_to_complete(opts: &VerifyOptions) -> Result<Outcome> {
    for n in 3..=7 {
        let fg = build_forest_graph(&Graph::cycle(n), opts.budget)?;
        if !is_isomorphic(fg.graph(), &Graph::complete(n))? {
            return Ok(Err(format!("F(C{n}) is not K{n}")));
        }
    }
    Ok(Ok("C3..C7".into()))
}

fn two_triangles(opts: &VerifyOptions) -> Result<Outcome> {
    let g = Graph::bowtie();
    let fg = build_forest_graph(&g, opts.budget)?;
    let c3 = Graph::cycle(3);
    if !is_isomorphic(fg.graph(), &c3.cartesian_product(&c3))? {
        return Ok(Err("F(bowtie) is not C3 x C3".into()));
    }
    let t1 = Cycle::from_vertices(&g, &[0, 1, 2])?;
    let t2 = Cycle::from_vertices(&g, &[0, 3, 4])?;
    let product = clique_witness_from_two_triangles(&g, &t1, &t2)?;
    let order: Option<Vec<usize>> = product
        .nine_cycle()
        .iter()
        .map(|f| fg.family().index_of(f.edges()))
        .collect();
    let Some(order) = order else {
        return Ok(Err("triangle product forests missing from F(bowtie)".into()));
    };
    let nine = Cycle::from_vertices(fg.graph(), &order)?;
    let witness = crate::dynamics::clique_witness_from_cycle(fg.graph(), &nine)?;
    if !product.verify() || witness.size() != 9 || !witness.verify() {
        return Ok(Err("9-clique witness in F^2(bowtie) fails verification".into()));
    }
    Ok(Ok("9 vertices, 18 edges, K9 in F^2".into()))
}

fn k4_tree_graph(opts: &VerifyOptions) -> Result<Outcome> {
    let fg = build_forest_graph(&Graph::complete(4), opts.budget)?;
    let h = fg.graph();
    let ok = h.vertex_count() == 16 && h.is_connected() && h.bridges().is_empty() && h.min_degree() >= 2;
    if !ok {
        return Ok(Err("F(K4) shape".into()));
    }
    match hamiltonian_cycle(h, DEFAULT_HAMILTON_BUDGET)? {
        Some(c) if c.len() == 16 && c.is_cycle_of(h) => Ok(Ok("16 vertices, Hamiltonian".into())),
        _ => Ok(Err("no Hamiltonian cycle in F(K4)".into())),
    }
}

fn complete_clique(_: &VerifyOptions) -> Result<Outcome> {
    for n in 2..=5 {
        let vs: Vec<usize> = (0..n).collect();
        let w = clique_witness_from_complete(&Graph::complete(n), &vs)?;
        if w.size() != n * n / 4 || !w.verify() {
            return Ok(Err(format!("K{n} witness")));
        }
    }
    Ok(Ok("K2..K5".into()))
}

fn classification(opts: &VerifyOptions) -> Result<Outcome> {
    let graphs = corpus(opts)?;
    let (mut convergent, mut divergent) = (0, 0);
    for g in &graphs {
        match classify(g) {
            Verdict::Convergent { limit, steps_to_limit } => {
                let target = limit.graph();
                let reached = iterate_f(g, steps_to_limit, opts.budget)?;
                let fixed = build_forest_graph(&target, opts.budget)?;
                if steps_to_limit > 2 || !is_isomorphic(&reached, &target)? || !is_isomorphic(fixed.graph(), &target)? {
                    return Ok(fail(g, "convergent graph misses its limit"));
                }
                convergent += 1;
            }
            Verdict::Divergent { .. } => {
                let fg = build_forest_graph(g, opts.budget)?;
                if !forest_count_exceeds(fg.graph(), &count_maximal_forests(g)) {
                    return Ok(fail(g, "forest count does not grow"));
                }
                let report = verify_clique_growth(g, 2, opts.budget)?;
                let base = max_clique(g)?.len();
                let grown = report.steps.get(1).map_or(0, |s| s.size());
                if !report.all_verified() || grown <= base {
                    return Ok(fail(g, "no larger clique witness in F^2"));
                }
                divergent += 1;
            }
        }
    }
    Ok(Ok(format!("{convergent} convergent, {divergent} divergent")))
}

fn stability(opts: &VerifyOptions) -> Result<Outcome> {
    let graphs = corpus(opts)?;
    let mut stable = Vec::new();
    for g in &graphs {
        if is_stable(g, opts.budget)? {
            stable.push(g.describe());
        }
    }
    if stable == ["K_1", "K_3"] {
        Ok(Ok(format!("{} graphs, stable: K_1, K_3", graphs.len())))
    } else {
        Ok(Err(format!("stable graphs: {stable:?}")))
    }
}

fn roots_of_k4(opts: &VerifyOptions) -> Result<Outcome> {
    let budget = RootBudget {
        forests: opts.budget,
        ..RootBudget::default()
    };
    match find_roots(&Graph::complete(4), budget)? {
        RootSearch::Found(roots) if roots.len() == 1 && is_isomorphic(&roots[0].graph, &Graph::cycle(4))? => {
            let fh = build_forest_graph(&roots[0].graph, opts.budget)?;
            if is_isomorphic(fh.graph(), &Graph::complete(4))? {
                Ok(Ok("exactly C_4".into()))
            } else {
                Ok(Err("root fails recomputation".into()))
            }
        }
        other => Ok(Err(format!("unexpected root search result {other:?}"))),
    }
}

fn no_root_certificates(opts: &VerifyOptions) -> Result<Outcome> {
    let graphs = corpus(opts)?;
    let mut proofs = 0;
    for g in &graphs {
        if let Some(cert) = no_root_prune(g) {
            if !cert.is_proof() || !cert.verify(g) {
                return Ok(fail(g, format!("certificate {cert} does not re-verify")));
            }
            proofs += 1;
        }
    }
    Ok(Ok(format!("{proofs} certificates re-verified")))
}

fn whitney(opts: &VerifyOptions) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut graphs: Vec<Graph> = crate::corpus::enumerate_graphs_up_to(opts.max_vertices.max(5))?
        .into_iter()
        .filter(|g| g.edge_count() > 0)
        .collect();
    graphs.shuffle(&mut rng);
    let mut applied = 0;
    for g in graphs.iter().cycle().take(graphs.len() * 20) {
        let Some(op) = random_op(g, &mut rng) else {
            continue;
        };
        let result = op.apply(g)?;
        if !preserves_forest_family(g, &result, opts.budget)? {
            return Ok(fail(g, format!("{} changes the forest family", op.name())));
        }
        applied += 1;
        if applied >= 100 {
            break;
        }
    }
    if applied < 100 {
        return Ok(Err(format!("only {applied} applicable operations")));
    }
    Ok(Ok(format!("{applied} operations, seed {}", opts.seed)))
}
