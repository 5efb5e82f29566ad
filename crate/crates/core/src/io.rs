//! Edge-list and DOT input, edge-list and DOT output.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::forest_graph::ForestGraph;
use crate::graph::Graph;

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone)]
struct Token {
    text: String,
    line: usize,
    column: usize,
}

/// Collects vertex tokens into dense indices and rejects loops with a position.
#[derive(Default)]
struct Builder {
    ends: Vec<(Token, Token)>,
    declared: Vec<Token>,
    vertices: Option<usize>,
}

impl Builder {
    fn finish(self, numeric_allowed: bool) -> Result<Graph> {
        let tokens = || self.ends.iter().flat_map(|(a, b)| [a, b]).chain(self.declared.iter());
        let numeric = numeric_allowed && tokens().all(|t| t.text.parse::<usize>().is_ok());
        for (a, b) in &self.ends {
            if a.text == b.text {
                return Err(parse_error(b.line, b.column, format!("loop at vertex {}", a.text)));
            }
        }
        if numeric {
            let max = tokens().map(|t| t.text.parse::<usize>().expect("checked numeric")).max();
            let n = match (self.vertices, max) {
                (Some(n), Some(m)) if m >= n => {
                    let t = tokens().find(|t| t.text.parse::<usize>().ok() == Some(m)).expect("max exists");
                    return Err(parse_error(
                        t.line,
                        t.column,
                        format!("vertex {m} is out of range for {n} declared vertices"),
                    ));
                }
                (Some(n), _) => n,
                (None, Some(m)) => m + 1,
                (None, None) => 0,
            };
            let edges = self.ends.iter().map(|(a, b)| {
                (
                    a.text.parse::<usize>().expect("checked numeric"),
                    b.text.parse::<usize>().expect("checked numeric"),
                )
            });
            return Graph::new(n, edges);
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        let mut edges = Vec::new();
        fn id<'t>(index: &mut HashMap<&'t str, usize>, names: &mut Vec<String>, t: &'t Token) -> usize {
            *index.entry(t.text.as_str()).or_insert_with(|| {
                names.push(t.text.clone());
                names.len() - 1
            })
        }
        // DOT node statements come in source order with edges; first-seen order is kept
        // by sorting on position
        let mut ordered: Vec<(&Token, Option<&Token>)> =
            self.ends.iter().map(|(a, b)| (a, Some(b))).collect();
        ordered.extend(self.declared.iter().map(|t| (t, None)));
        ordered.sort_by_key(|(t, _)| (t.line, t.column));
        for (a, b) in ordered {
            let u = id(&mut index, &mut names, a);
            if let Some(b) = b {
                let v = id(&mut index, &mut names, b);
                edges.push((u, v));
            }
        }
        if let Some(n) = self.vertices {
            if n < names.len() {
                return Err(parse_error(
                    1,
                    1,
                    format!("{} distinct vertices but only {n} declared", names.len()),
                ));
            }
            let mut k = 0;
            while names.len() < n {
                let candidate = format!("_{k}");
                if !index.contains_key(candidate.as_str()) {
                    names.push(candidate);
                }
                k += 1;
            }
        }
        Graph::new(names.len(), edges)?.with_names(names)
    }
}

/// Parses the edge-list format: one edge per line as two whitespace-separated vertex
/// tokens, `#` comments, and an optional `vertices N` header.
///
/// When every token is a non-negative integer the tokens are used as indices directly;
/// otherwise tokens become named vertices in first-seen order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut b = Builder::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<Token> = tokens_with_columns(content, line).collect();
        match tokens.as_slice() {
            [] => {}
            [kw, n] if kw.text == "vertices" => {
                if b.vertices.is_some() {
                    return Err(parse_error(line, kw.column, "duplicate vertices header"));
                }
                let count = n
                    .text
                    .parse::<usize>()
                    .map_err(|_| parse_error(line, n.column, format!("invalid vertex count {:?}", n.text)))?;
                b.vertices = Some(count);
            }
            [_, _] => {
                let mut it = tokens.into_iter();
                let a = it.next().expect("two tokens");
                let c = it.next().expect("two tokens");
                b.ends.push((a, c));
            }
            [only] => return Err(parse_error(line, only.column + only.text.len(), "expected a second vertex")),
            [_, _, extra, ..] => return Err(parse_error(line, extra.column, "expected two vertices per line")),
        }
    }
    b.finish(true)
}

fn tokens_with_columns(content: &str, line: usize) -> impl Iterator<Item = Token> + '_ {
    let mut rest = content;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = Token {
            text: trimmed[..end].to_string(),
            line,
            column: content[..offset].chars().count() + 1,
        };
        rest = &trimmed[end..];
        offset += end;
        Some(tok)
    })
}

/// Writes `vertices N` followed by one `u v` line per edge, by index.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Like [`write_edge_list`] but with vertex names where the graph has them.
pub fn write_named_edge_list(g: &Graph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.vertex_name(u), g.vertex_name(v)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum DotTok<'a> {
    Id(std::borrow::Cow<'a, str>),
    Punct(&'a str),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_char()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) -> Result<()> {
        loop {
            let rest = &self.src[self.pos..];
            if rest.starts_with("//") || (rest.starts_with('#') && self.column == 1) {
                while self.peek_char().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if rest.starts_with("/*") {
                let (line, column) = (self.line, self.column);
                self.bump();
                self.bump();
                loop {
                    if self.src[self.pos..].starts_with("*/") {
                        self.bump();
                        self.bump();
                        break;
                    }
                    if self.bump().is_none() {
                        return Err(parse_error(line, column, "unterminated comment"));
                    }
                }
            } else if self.peek_char().is_some_and(char::is_whitespace) {
                self.bump();
            } else {
                return Ok(());
            }
        }
    }

    fn next(&mut self) -> Result<Option<(DotTok<'a>, usize, usize)>> {
        self.skip_trivia()?;
        let (line, column) = (self.line, self.column);
        let Some(c) = self.peek_char() else {
            return Ok(None);
        };
        let start = self.pos;
        let tok = if self.src[start..].starts_with("--") || self.src[start..].starts_with("->") {
            self.bump();
            self.bump();
            DotTok::Punct(&self.src[start..self.pos])
        } else if "{}[];=,:".contains(c) {
            self.bump();
            DotTok::Punct(&self.src[start..self.pos])
        } else if c == '"' {
            self.bump();
            let mut value = String::new();
            loop {
                match self.bump() {
                    None => return Err(parse_error(line, column, "unterminated string")),
                    Some('"') => break,
                    Some('\\') if self.peek_char() == Some('"') => {
                        self.bump();
                        value.push('"');
                    }
                    Some(ch) => value.push(ch),
                }
            }
            DotTok::Id(value.into())
        } else if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' {
            while self
                .peek_char()
                .is_some_and(|ch| ch.is_alphanumeric() || ch == '_' || ch == '.' || (ch == '-' && !self.src[self.pos..].starts_with("--") && !self.src[self.pos..].starts_with("->")))
            {
                self.bump();
            }
            DotTok::Id(self.src[start..self.pos].into())
        } else {
            return Err(parse_error(line, column, format!("unexpected character {c:?}")));
        };
        Ok(Some((tok, line, column)))
    }
}

/// Parses an undirected DOT subset: `[strict] graph [name] { a -- b -- c; d; }`.
///
/// Identifiers become named vertices in first-seen order; attribute lists and
/// `key = value` statements are ignored.
pub fn parse_dot(text: &str) -> Result<Graph> {
    let mut lx = Lexer {
        src: text,
        pos: 0,
        line: 1,
        column: 1,
    };
    let mut toks = Vec::new();
    while let Some(t) = lx.next()? {
        toks.push(t);
    }
    let end = (lx.line, lx.column);
    let mut p = DotParser { toks, at: 0, end };
    p.header()?;
    let names = p.body()?;
    if let Some((_, line, column)) = p.toks.get(p.at) {
        return Err(parse_error(*line, *column, "unexpected content after graph body"));
    }
    names.finish(false)
}

struct DotParser<'a> {
    toks: Vec<(DotTok<'a>, usize, usize)>,
    at: usize,
    end: (usize, usize),
}

impl<'a> DotParser<'a> {
    fn pos(&self) -> (usize, usize) {
        self.toks.get(self.at).map(|t| (t.1, t.2)).unwrap_or(self.end)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.pos();
        parse_error(line, column, message)
    }

    fn peek(&self) -> Option<&DotTok<'a>> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(DotTok::Punct(q)) if *q == p)
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(DotTok::Id(s)) if s.eq_ignore_ascii_case(kw))
    }

    fn expect_punct(&mut self, p: &str) -> Result<()> {
        if self.is_punct(p) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{p}'")))
        }
    }

    fn header(&mut self) -> Result<()> {
        if self.is_keyword("strict") {
            self.at += 1;
        }
        if self.is_keyword("digraph") {
            return Err(self.err("directed graphs are not supported"));
        }
        if !self.is_keyword("graph") {
            return Err(self.err("expected 'graph'"));
        }
        self.at += 1;
        if matches!(self.peek(), Some(DotTok::Id(_))) {
            self.at += 1;
        }
        self.expect_punct("{")
    }

    fn skip_attributes(&mut self) -> Result<()> {
        while self.is_punct("[") {
            self.at += 1;
            loop {
                match self.peek() {
                    None => return Err(self.err("unterminated attribute list")),
                    Some(DotTok::Punct("]")) => {
                        self.at += 1;
                        break;
                    }
                    Some(DotTok::Punct("{")) | Some(DotTok::Punct("}")) => {
                        return Err(self.err("unexpected brace in attribute list"))
                    }
                    _ => self.at += 1,
                }
            }
        }
        Ok(())
    }

    fn vertex(&mut self) -> Result<Token> {
        let (line, column) = self.pos();
        match self.peek().cloned() {
            Some(DotTok::Id(s)) => {
                self.at += 1;
                if self.is_punct(":") {
                    return Err(self.err("ports are not supported"));
                }
                Ok(Token {
                    text: s.into_owned(),
                    line,
                    column,
                })
            }
            _ => Err(self.err("expected a vertex identifier")),
        }
    }

    fn body(&mut self) -> Result<Builder> {
        let mut b = Builder::default();
        loop {
            if self.is_punct("}") {
                self.at += 1;
                return Ok(b);
            }
            if self.peek().is_none() {
                return Err(self.err("expected '}'"));
            }
            if self.is_punct(";") {
                self.at += 1;
                continue;
            }
            if self.is_punct("{") || self.is_keyword("subgraph") {
                return Err(self.err("subgraphs are not supported"));
            }
            if ["node", "edge", "graph"].iter().any(|k| self.is_keyword(k))
                && matches!(self.toks.get(self.at + 1), Some((DotTok::Punct("["), _, _)))
            {
                self.at += 1;
                self.skip_attributes()?;
                continue;
            }
            let first = self.vertex()?;
            if self.is_punct("=") {
                // graph attribute statement
                self.at += 1;
                self.vertex()?;
                continue;
            }
            if self.is_punct("->") {
                return Err(self.err("directed edges are not supported"));
            }
            if !self.is_punct("--") {
                self.skip_attributes()?;
                b.declared.push(first);
                continue;
            }
            let mut prev = first;
            while self.is_punct("--") {
                self.at += 1;
                let next = self.vertex()?;
                let left = std::mem::replace(&mut prev, next.clone());
                b.ends.push((left, next));
            }
            if self.is_punct("->") {
                return Err(self.err("directed edges are not supported"));
            }
            self.skip_attributes()?;
        }
    }
}

/// Parses DOT if the text looks like DOT, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("//"))
        .unwrap_or("");
    let word = first.split(|c: char| c.is_whitespace() || c == '{').next().unwrap_or("");
    if ["graph", "strict", "digraph"].iter().any(|k| word.eq_ignore_ascii_case(k)) && first.contains(['{'])
        || text.contains('{')
    {
        parse_dot(text)
    } else {
        parse_edge_list(text)
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// DOT rendering of a graph, using vertex names where present.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {};\n", dot_quote(&g.vertex_name(v))));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            dot_quote(&g.vertex_name(u)),
            dot_quote(&g.vertex_name(v))
        ));
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of `F(G)` with each vertex labelled by its forest's edges.
pub fn forest_graph_to_dot(fg: &ForestGraph) -> String {
    let base = fg.base();
    let mut out = String::from("graph F {\n");
    for (i, f) in fg.family().members().iter().enumerate() {
        let label: Vec<String> = f.edges().iter().map(|e| base.edge_name(e)).collect();
        out.push_str(&format!("  {i} [label={}];\n", dot_quote(&format!("{{{}}}", label.join(", ")))));
    }
    for &(u, v) in fg.graph().edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest_graph::build_forest_graph;

    #[test]
    fn numeric_edge_list() {
        let g = parse_edge_list("# triangle\nvertices 4\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(g.names().is_none());
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn named_edge_list() {
        let g = parse_edge_list("b a\na c\n").unwrap();
        assert_eq!(g.names().unwrap(), &["b", "a", "c"]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        let g = parse_edge_list("vertices 4\nx y\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
    }

    #[test]
    fn edge_list_errors() {
        match parse_edge_list("0 1\n 2 2\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("{other:?}"),
        }
        match parse_edge_list("0 1 2\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_edge_list("vertices 2\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("vertices x\n"), Err(Error::Parse { line: 1, column: 10, .. })));
    }

    #[test]
    fn dot_subset() {
        let g = parse_dot(
            "// comment\nstrict graph bowtie {\n  node [shape=circle];\n  rankdir = LR;\n  a -- b -- c -- a [color=red]\n  a -- \"d\" -- e -- a; /* x */ f;\n}\n",
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.names().unwrap(), &["a", "b", "c", "d", "e", "f"]);
        assert!(parse_dot("digraph { a -> b }").is_err());
        match parse_dot("graph {\n a -- a;\n}") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_dot("graph { a -- ; }"), Err(Error::Parse { .. })));
    }

    #[test]
    fn dispatch() {
        assert_eq!(parse_graph("graph { 0 -- 1 }").unwrap().edge_count(), 1);
        assert_eq!(parse_graph("0 1\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn dot_export() {
        let fg = build_forest_graph(&Graph::complete(3), 10).unwrap();
        let dot = forest_graph_to_dot(&fg);
        assert!(dot.contains("label=\"{0-1, 0-2}\""));
        assert_eq!(dot.matches(" -- ").count(), 3);
        let back = parse_dot(&to_dot(&Graph::cycle(4))).unwrap();
        assert_eq!(back.edge_count(), 4);
    }
}
