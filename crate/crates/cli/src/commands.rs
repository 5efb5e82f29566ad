use std::fmt::Write as _;

use forestgraph::corpus::enumerate_graphs;
use forestgraph::dynamics::{classify, clique_witness_from_cycle, is_stable, iterate_f};
use forestgraph::forest::{count_maximal_forests, maximal_forests};
use forestgraph::forest_graph::{build_forest_graph, exchange_path, forest_distance, ForestGraph};
use forestgraph::io::{forest_graph_to_dot, to_dot, write_edge_list, write_named_edge_list};
use forestgraph::roots::{depth_lower_bound, find_roots, DepthReport, DepthTermination, RootBudget, RootSearch};
use forestgraph::verify::{run_all, VerifyOptions};
use forestgraph::whitney::{forest_label_family, preserves_forest_family, random_op, WhitneyOp};
use forestgraph::{Cycle, Graph};
use rand::SeedableRng;

use crate::input::{input_error, load, named, vertex, vertex_list};
use crate::{Cli, Command, Failure, Format, InputArg, Options, PairArgs, WhitneyKind};

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, code: 0 }
    }
}

type Outcome = Result<Output, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let o = &cli.opts;
    match &cli.command {
        Command::Forests(i) => forests(o, i),
        Command::Count(i) => count(o, i),
        Command::Fgraph {
            input,
            mapping,
            witness_cycle,
        } => fgraph(o, input, mapping.as_deref(), witness_cycle.as_deref()),
        Command::Distance(p) => distance(o, p),
        Command::Path(p) => path(o, p),
        Command::Iterate { input, steps } => iterate(o, input, *steps),
        Command::Classify(i) => classify_cmd(o, i),
        Command::Stable(i) => stable(o, i),
        Command::Roots(i) => roots(o, i),
        Command::Depth(i) => depth(o, i),
        Command::Whitney {
            input,
            op,
            pairs,
            vertex,
            other,
            side,
        } => whitney(o, input, *op, pairs.as_deref(), vertex.as_deref(), other.as_deref(), side.as_deref()),
        Command::Verify => verify(o),
        Command::Gen { vertices } => gen(o, *vertices),
    }
}

fn no_dot(o: &Options, command: &str) -> Result<(), Failure> {
    if o.format == Format::Dot {
        return Err(input_error(format!("--format dot is not available for {command}")));
    }
    Ok(())
}

fn root_budget(o: &Options) -> RootBudget {
    RootBudget {
        max_vertices: o.max_vertices as usize,
        max_edges: o.max_edges as usize,
        forests: o.budget,
    }
}

fn forests(o: &Options, i: &InputArg) -> Outcome {
    no_dot(o, "forests")?;
    let g = load(o, i)?;
    let family = maximal_forests(&g, o.budget)?;
    let mut out = String::new();
    match o.format {
        Format::Structured => {
            writeln!(out, "count={}", family.len()).unwrap();
            for (k, line) in family.to_index_lines().lines().enumerate() {
                writeln!(out, "forest.{k}={line}").unwrap();
            }
        }
        _ => {
            writeln!(out, "{} maximal forests", family.len()).unwrap();
            for (k, line) in family.to_named_lines().lines().enumerate() {
                writeln!(out, "{k}: {line}").unwrap();
            }
        }
    }
    Ok(out.into())
}

fn count(o: &Options, i: &InputArg) -> Outcome {
    no_dot(o, "count")?;
    let g = load(o, i)?;
    let n = count_maximal_forests(&g);
    Ok(match o.format {
        Format::Structured => format!("count={n}\n"),
        _ => format!("{n}\n"),
    }
    .into())
}

fn fgraph(o: &Options, i: &InputArg, mapping: Option<&std::path::Path>, witness: Option<&str>) -> Outcome {
    let g = load(o, i)?;
    let fg = build_forest_graph(&g, o.budget)?;
    if let Some(path) = mapping {
        std::fs::write(path, fg.mapping_lines())
            .map_err(|e| input_error(format!("writing {}: {e}", path.display())))?;
    }
    let mut out = match o.format {
        Format::Human => {
            let h = fg.graph();
            format!(
                "F(G): {} vertices, {} edges ({})\n",
                h.vertex_count(),
                h.edge_count(),
                h.describe()
            )
        }
        Format::Structured => write_edge_list(fg.graph()),
        Format::Dot => forest_graph_to_dot(&fg),
    };
    if let Some(text) = witness {
        out.push_str(&witness_report(&g, &fg, text, o.format)?);
    }
    Ok(out.into())
}

fn witness_report(g: &Graph, fg: &ForestGraph, text: &str, format: Format) -> Result<String, Failure> {
    let vs = vertex_list(g, text)?;
    let cycle = Cycle::from_vertices(g, &vs)?;
    let witness = clique_witness_from_cycle(g, &cycle)?;
    let indices = witness
        .indices_in(fg)
        .ok_or_else(|| input_error("witness forests are missing from the forest graph"))?;
    let verified = witness.verify() && indices.iter().enumerate().all(|(a, &x)| indices[a + 1..].iter().all(|&y| fg.graph().has_edge(x, y)));
    let list: Vec<String> = indices.iter().map(usize::to_string).collect();
    Ok(match format {
        Format::Human => format!(
            "clique of size {} from a {}-cycle: {} ({})\n",
            indices.len(),
            cycle.len(),
            list.join(" "),
            if verified { "verified" } else { "NOT verified" }
        ),
        _ => format!("# witness_clique={} verified={verified}\n", list.join(" ")),
    })
}

fn forest_pair(o: &Options, p: &PairArgs) -> Result<(Graph, ForestGraph), Failure> {
    let g = load(o, &p.input)?;
    let fg = build_forest_graph(&g, o.budget)?;
    let k = fg.family().len();
    for idx in [p.from, p.to] {
        if idx >= k {
            return Err(input_error(format!("forest index {idx} out of range (0..{k})")));
        }
    }
    Ok((g, fg))
}

fn distance(o: &Options, p: &PairArgs) -> Outcome {
    no_dot(o, "distance")?;
    let (_, fg) = forest_pair(o, p)?;
    let d = forest_distance(fg.forest(p.from), fg.forest(p.to))?;
    Ok(match o.format {
        Format::Structured => {
            let bfs = fg.bfs_distances(p.from)[p.to].expect("forest graphs are connected");
            format!("distance={d}\nbfs_distance={bfs}\n")
        }
        _ => format!("{d}\n"),
    }
    .into())
}

fn path(o: &Options, p: &PairArgs) -> Outcome {
    no_dot(o, "path")?;
    let (g, fg) = forest_pair(o, p)?;
    let steps = exchange_path(&g, fg.forest(p.from), fg.forest(p.to))?;
    let mut out = String::new();
    for (k, f) in steps.iter().enumerate() {
        let idx = fg.family().index_of(f.edges()).expect("path stays in the family");
        match o.format {
            Format::Structured => {
                let edges: Vec<String> = f.edges().iter().map(|e| e.to_string()).collect();
                writeln!(out, "step.{k}={idx}: {}", edges.join(" ")).unwrap();
            }
            _ => {
                let edges: Vec<String> = f.edges().iter().map(|e| g.edge_name(e)).collect();
                writeln!(out, "{k}: forest {idx}: {}", edges.join(" ")).unwrap();
            }
        }
    }
    Ok(out.into())
}

fn iterate(o: &Options, i: &InputArg, steps: usize) -> Outcome {
    let g = load(o, i)?;
    let h = iterate_f(&g, steps, o.budget)?;
    Ok(match o.format {
        Format::Human => format!(
            "F^{steps}(G): {} vertices, {} edges ({})\n",
            h.vertex_count(),
            h.edge_count(),
            h.describe()
        ),
        Format::Structured => write_edge_list(&h),
        Format::Dot => to_dot(&h),
    }
    .into())
}

fn classify_cmd(o: &Options, i: &InputArg) -> Outcome {
    no_dot(o, "classify")?;
    let g = load(o, i)?;
    let verdict = classify(&g);
    Ok(match o.format {
        Format::Structured => verdict.to_key_values(&g),
        _ => format!("{}\n", verdict.human(&g)),
    }
    .into())
}

fn stable(o: &Options, i: &InputArg) -> Outcome {
    no_dot(o, "stable")?;
    let g = load(o, i)?;
    let s = is_stable(&g, o.budget)?;
    Ok(match o.format {
        Format::Structured => format!("stable={s}\n"),
        _ => format!("{}\n", if s { "stable" } else { "not stable" }),
    }
    .into())
}

fn termination_text(r: &DepthReport) -> String {
    match &r.termination {
        DepthTermination::Stable => "stable, depth unbounded".into(),
        DepthTermination::Proven(c) => format!("chain stops ({})", c.kind()),
        DepthTermination::Unknown(_) => "chain unknown beyond the candidate budget".into(),
    }
}

fn termination_key(r: &DepthReport) -> &'static str {
    match &r.termination {
        DepthTermination::Stable => "stable",
        DepthTermination::Proven(c) => c.kind(),
        DepthTermination::Unknown(_) => "exhausted-budget",
    }
}

fn roots(o: &Options, i: &InputArg) -> Outcome {
    no_dot(o, "roots")?;
    let g = load(o, i)?;
    let budget = root_budget(o);
    let found = match find_roots(&g, budget)? {
        RootSearch::None(cert) => {
            return Ok(match o.format {
                Format::Structured => format!("roots=0\nreason={}\nproof={}\n", cert.kind(), cert.is_proof()),
                _ => format!("{cert}\n"),
            }
            .into())
        }
        RootSearch::Found(roots) => roots,
    };
    let report = depth_lower_bound(&g, budget)?;
    let mut out = String::new();
    match o.format {
        Format::Structured => {
            writeln!(out, "roots={}", found.len()).unwrap();
            for (k, r) in found.iter().enumerate() {
                let edges: Vec<String> = r.graph.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                writeln!(out, "root.{k}={}", edges.join(",")).unwrap();
            }
            writeln!(out, "depth={}", report.depth()).unwrap();
            writeln!(out, "termination={}", termination_key(&report)).unwrap();
        }
        _ => {
            let names: Vec<String> = found.iter().map(|r| r.graph.describe()).collect();
            let noun = if found.len() == 1 { "root" } else { "roots" };
            writeln!(
                out,
                "{} {noun}: {}; depth ≥ {}; {}",
                found.len(),
                names.join(", "),
                report.depth(),
                termination_text(&report)
            )
            .unwrap();
        }
    }
    Ok(out.into())
}

fn depth(o: &Options, i: &InputArg) -> Outcome {
    no_dot(o, "depth")?;
    let g = load(o, i)?;
    let report = depth_lower_bound(&g, root_budget(o))?;
    Ok(match o.format {
        Format::Structured => format!(
            "depth={}\nexact={}\ntermination={}\n{}",
            report.depth(),
            report.is_exact(),
            termination_key(&report),
            report.certificate.to_text()
        ),
        _ => format!("depth ≥ {}; {}\n", report.depth(), termination_text(&report)),
    }
    .into())
}

#[allow(clippy::too_many_arguments)]
fn whitney(
    o: &Options,
    i: &InputArg,
    kind: WhitneyKind,
    pairs: Option<&str>,
    v: Option<&str>,
    other: Option<&str>,
    side: Option<&str>,
) -> Outcome {
    let g = load(o, i)?;
    let op = match kind {
        WhitneyKind::Identify => {
            let mut list = Vec::new();
            for pair in need(pairs, kind, "pairs")?.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let (a, b) = pair
                    .split_once(':')
                    .ok_or_else(|| input_error(format!("pair {pair:?} is not of the form v:w")))?;
                list.push((vertex(&g, a.trim())?, vertex(&g, b.trim())?));
            }
            WhitneyOp::Identify(list)
        }
        WhitneyKind::Split => WhitneyOp::Split {
            vertex: vertex(&g, need(v, kind, "vertex")?)?,
            side: vertex_list(&g, need(side, kind, "side")?)?,
        },
        WhitneyKind::Twist => WhitneyOp::Twist {
            u: vertex(&g, need(v, kind, "vertex")?)?,
            v: vertex(&g, need(other, kind, "other")?)?,
            side: vertex_list(&g, need(side, kind, "side")?)?,
        },
        WhitneyKind::Random => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(o.seed);
            random_op(&g, &mut rng).ok_or_else(|| input_error("no Whitney operation applies to this graph"))?
        }
    };
    let result = op.apply(&g)?;
    let preserved = preserves_forest_family(&g, &result, o.budget)?;
    let forests = forest_label_family(&g, None, o.budget)?.len();
    let mut out = match o.format {
        Format::Human => format!(
            "{}: forest family {} ({forests} forests)\n{}",
            op.name(),
            if preserved { "preserved" } else { "CHANGED" },
            write_named_edge_list(&result.graph)
        ),
        Format::Structured => {
            let origin: Vec<String> = result.edge_origin.iter().map(usize::to_string).collect();
            format!(
                "op={}\npreserved={preserved}\nforests={forests}\nedge_origin={}\n{}",
                op.name(),
                origin.join(" "),
                write_edge_list(&result.graph)
            )
        }
        Format::Dot => to_dot(&result.graph),
    };
    if !preserved {
        out.push_str("forest family changed\n");
        return Ok(Output { text: out, code: 1 });
    }
    Ok(out.into())
}

fn need<'a>(x: Option<&'a str>, kind: WhitneyKind, flag: &str) -> Result<&'a str, Failure> {
    x.ok_or_else(|| input_error(format!("{kind:?} needs --{flag}")))
}

fn verify(o: &Options) -> Outcome {
    no_dot(o, "verify")?;
    let results = run_all(VerifyOptions {
        seed: o.seed,
        max_vertices: o.max_vertices as usize,
        budget: o.budget,
    });
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in &results {
        match o.format {
            Format::Structured => writeln!(out, "{}={} # {}", r.name.replace(' ', "_"), r.passed, r.detail).unwrap(),
            _ => writeln!(
                out,
                "{}  {:width$}  {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.detail
            )
            .unwrap(),
        }
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    if failed.is_empty() {
        Ok(out.into())
    } else {
        writeln!(out, "failed: {}", failed.join(", ")).unwrap();
        Ok(Output { text: out, code: 1 })
    }
}

fn gen(o: &Options, vertices: Option<usize>) -> Outcome {
    let graphs = match (vertices, &o.named) {
        (Some(n), None) => enumerate_graphs(n)?,
        (None, Some(name)) => vec![named(name)?],
        _ => return Err(input_error("gen needs exactly one of --vertices or --named")),
    };
    let mut out = String::new();
    for (k, g) in graphs.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        match o.format {
            Format::Dot => out.push_str(&to_dot(g)),
            _ => {
                writeln!(out, "# graph {k}: {}", g.describe()).unwrap();
                out.push_str(&write_edge_list(g));
            }
        }
    }
    Ok(out.into())
}
