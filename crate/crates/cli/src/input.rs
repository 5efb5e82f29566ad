use std::io::Read;

use forestgraph::io::parse_graph;
use forestgraph::Graph;

use crate::{Failure, InputArg, Options};

pub fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Resolves the graph from `--edges`, `--named`, a file path or standard input.
pub fn load(opts: &Options, arg: &InputArg) -> Result<Graph, Failure> {
    let sources = [opts.edges.is_some(), opts.named.is_some(), arg.input.is_some()];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(input_error("give exactly one input: a file, `-`, --edges or --named"));
    }
    if let Some(inline) = &opts.edges {
        let text: String = inline.replace([',', ';'], "\n");
        return Ok(parse_graph(&text)?);
    }
    if let Some(name) = &opts.named {
        return named(name);
    }
    let path = arg.input.as_deref().expect("counted above");
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_error(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| input_error(format!("reading {path}: {e}")))?
    };
    Ok(parse_graph(&text)?)
}

/// `K5`, `K_5`, `C4`, `P3`, `E2` (edgeless), `K3,3`, `K_{3,3}` and `bowtie`.
pub fn named(name: &str) -> Result<Graph, Failure> {
    let bad = || input_error(format!("unknown graph name {name:?}"));
    if name.eq_ignore_ascii_case("bowtie") {
        return Ok(Graph::bowtie());
    }
    let mut chars = name.chars();
    let kind = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    let rest: String = chars.filter(|c| !matches!(c, '_' | '{' | '}')).collect();
    if kind == 'K' {
        if let Some((a, b)) = rest.split_once(',') {
            let a = a.parse().map_err(|_| bad())?;
            let b = b.parse().map_err(|_| bad())?;
            return Ok(Graph::complete_bipartite(a, b));
        }
    }
    let n: usize = rest.parse().map_err(|_| bad())?;
    match kind {
        'K' => Ok(Graph::complete(n)),
        'C' if n >= 3 => Ok(Graph::cycle(n)),
        'P' if n >= 1 => Ok(Graph::path(n)),
        'E' => Ok(Graph::empty(n)),
        _ => Err(bad()),
    }
}

/// A vertex given by name when the graph has names, by index otherwise.
pub fn vertex(g: &Graph, token: &str) -> Result<usize, Failure> {
    let found = match g.names() {
        Some(names) => names.iter().position(|n| n == token),
        None => token.parse::<usize>().ok().filter(|&v| v < g.vertex_count()),
    };
    found.ok_or_else(|| input_error(format!("no vertex {token:?} in the graph")))
}

pub fn vertex_list(g: &Graph, text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| vertex(g, t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(named("K5").unwrap(), Graph::complete(5));
        assert_eq!(named("K_{3,3}").unwrap(), Graph::complete_bipartite(3, 3));
        assert_eq!(named("c_4").unwrap(), Graph::cycle(4));
        assert_eq!(named("E2").unwrap(), Graph::empty(2));
        assert!(named("C2").is_err());
        assert!(named("Q3").is_err());
    }
}
