//! DIMACS-like text formats.
//!
//! Digraphs: `p digraph <n> <m>` followed by `m` lines `a <u> <v>`.
//! Undirected graphs: `p graph <n> <m>` followed by `m` lines `e <u> <v>`.
//! Endpoints are 1-indexed, `c` lines are comments, blank lines are ignored.

use std::collections::HashSet;
use std::fmt::Write;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::orient::UndirectedGraph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses `(n, pairs)` where each pair is 0-based, checking header,
/// counts, loops, range and duplicates (`unordered` treats `{u,v}` as one).
fn parse_pairs(text: &str, word: &str, tag: &str, unordered: bool) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first() {
            None => continue,
            Some(&"c") => continue,
            Some(&"p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second header line"));
                }
                if toks.len() != 4 || toks[1] != word {
                    return Err(parse_err(
                        line,
                        format!("malformed header, expected 'p {word} <n> <m>'"),
                    ));
                }
                let n = toks[2]
                    .parse::<usize>()
                    .map_err(|_| parse_err(line, format!("bad vertex count '{}'", toks[2])))?;
                let m = toks[3]
                    .parse::<usize>()
                    .map_err(|_| parse_err(line, format!("bad {tag}-line count '{}'", toks[3])))?;
                if n == 0 {
                    return Err(parse_err(line, "vertex count must be at least 1"));
                }
                header = Some((n, m));
            }
            Some(t) if *t == tag => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge line before header"))?;
                if toks.len() != 3 {
                    return Err(parse_err(line, format!("expected '{tag} <u> <v>'")));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&toks[1..]) {
                    let v = tok
                        .parse::<usize>()
                        .map_err(|_| parse_err(line, format!("bad vertex '{tok}'")))?;
                    if v == 0 || v > n {
                        return Err(parse_err(line, format!("vertex {v} out of range 1..{n}")));
                    }
                    *slot = v - 1;
                }
                let [u, v] = ends;
                if u == v {
                    return Err(parse_err(line, format!("loop at vertex {}", u + 1)));
                }
                let key = if unordered { (u.min(v), u.max(v)) } else { (u, v) };
                if !seen.insert(key) {
                    return Err(parse_err(line, format!("duplicate {} {} {}", tag, u + 1, v + 1)));
                }
                pairs.push((u, v));
            }
            Some(t) => return Err(parse_err(line, format!("unknown line type '{t}'"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(last_line.max(1), "missing header"))?;
    if pairs.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("header declares {m} lines but {} were given", pairs.len()),
        ));
    }
    Ok((n, pairs))
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let (n, arcs) = parse_pairs(text, "digraph", "a", false)?;
    Digraph::new(n, arcs)
}

/// Canonical form: header then arcs sorted by `(u, v)`.
pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = format!("p digraph {} {}\n", d.order(), d.arc_count());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "a {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_graph(text: &str) -> Result<UndirectedGraph> {
    let (n, edges) = parse_pairs(text, "graph", "e", true)?;
    UndirectedGraph::new(n, edges)
}

/// Canonical form: edges as `low high`, sorted.
pub fn serialize_graph(g: &UndirectedGraph) -> String {
    let mut out = format!("p graph {} {}\n", g.order(), g.edges().len());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
