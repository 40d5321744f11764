//! The `sg` / `sgm` text formats.
//!
//! ```text
//! sg 1
//! n 4
//! e 0 1 +
//! e 0 3 -
//! ```
//!
//! `#` starts a comment. Tokens may be separated by any whitespace. A stream
//! holds several graphs, each starting at its magic line (conventionally
//! separated by blank lines). Output is canonical: sorted edges, single
//! spaces, LF line endings.

use std::fmt::Write as _;

use super::{Sign, SignedGraph, SignedMultiGraph, Vertex};
use crate::error::{Error, Result};

/// A parsed graph of either flavour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphText {
    Simple(SignedGraph),
    Multi(SignedMultiGraph),
}

impl GraphText {
    pub fn into_multi(self) -> SignedMultiGraph {
        match self {
            GraphText::Simple(g) => SignedMultiGraph::from(&g),
            GraphText::Multi(g) => g,
        }
    }

    pub fn into_simple(self) -> Result<SignedGraph> {
        match self {
            GraphText::Simple(g) => Ok(g),
            GraphText::Multi(g) => g.to_simple().ok_or_else(|| Error::Parse {
                line: 1,
                msg: "expected a simple graph (sg), got a multigraph with parallel edges".into(),
            }),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            GraphText::Simple(g) => g.to_sg(),
            GraphText::Multi(g) => g.to_sgm(),
        }
    }
}

struct Block {
    multi: bool,
    first_line: usize,
    lines: Vec<(usize, Vec<String>)>,
}

fn tokenize(text: &str) -> Result<Vec<Block>> {
    let mut blocks: Vec<Block> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<String> = content.split_whitespace().map(str::to_owned).collect();
        if toks.is_empty() {
            continue;
        }
        if toks[0] == "sg" || toks[0] == "sgm" {
            if toks.len() != 2 || toks[1] != "1" {
                return Err(Error::Parse { line, msg: format!("unsupported header `{}`", toks.join(" ")) });
            }
            blocks.push(Block { multi: toks[0] == "sgm", first_line: line, lines: Vec::new() });
            continue;
        }
        match blocks.last_mut() {
            Some(b) => b.lines.push((line, toks)),
            None => return Err(Error::Parse { line, msg: "missing `sg 1` or `sgm 1` header".into() }),
        }
    }
    Ok(blocks)
}

fn parse_vertex(tok: &str, line: usize) -> Result<Vertex> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("bad vertex id `{tok}`") })
}

fn parse_block(block: &Block) -> Result<GraphText> {
    let mut n = None;
    let mut edges = Vec::new();
    for (line, toks) in &block.lines {
        let line = *line;
        match toks[0].as_str() {
            "n" if toks.len() == 2 => {
                if n.is_some() {
                    return Err(Error::Parse { line, msg: "repeated `n` line".into() });
                }
                n = Some(toks[1].parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex count `{}`", toks[1]),
                })?);
            }
            "e" if toks.len() == 4 => {
                if n.is_none() {
                    return Err(Error::Parse { line, msg: "edge before `n` line".into() });
                }
                let u = parse_vertex(&toks[1], line)?;
                let v = parse_vertex(&toks[2], line)?;
                let s = match toks[3].as_str() {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(Error::Parse { line, msg: format!("bad sign `{other}`") }),
                };
                edges.push((u, v, s));
            }
            _ => return Err(Error::Parse { line, msg: format!("unrecognised line `{}`", toks.join(" ")) }),
        }
    }
    let n = n.ok_or(Error::Parse { line: block.first_line, msg: "missing `n` line".into() })?;
    let wrap = |e: Error| match e {
        Error::Parse { .. } => e,
        other => Error::Parse { line: block.first_line, msg: other.to_string() },
    };
    if block.multi {
        SignedMultiGraph::new(n, edges).map(GraphText::Multi).map_err(wrap)
    } else {
        SignedGraph::new(n, edges).map(GraphText::Simple).map_err(wrap)
    }
}

/// Parses every graph of a stream, in order.
pub fn parse_sg_stream(text: &str) -> Result<Vec<GraphText>> {
    tokenize(text)?.iter().map(parse_block).collect()
}

fn parse_single(text: &str) -> Result<GraphText> {
    let blocks = tokenize(text)?;
    match blocks.len() {
        1 => parse_block(&blocks[0]),
        0 => Err(Error::Parse { line: 1, msg: "no graph found".into() }),
        k => Err(Error::Parse { line: blocks[1].first_line, msg: format!("expected one graph, found {k}") }),
    }
}

/// Parses exactly one graph in `sg` (or parallel-free `sgm`) format.
pub fn parse_sg(text: &str) -> Result<SignedGraph> {
    parse_single(text)?.into_simple()
}

/// Parses exactly one graph in `sgm` format; `sg` input is accepted too.
pub fn parse_sgm(text: &str) -> Result<SignedMultiGraph> {
    Ok(parse_single(text)?.into_multi())
}

fn write_text(magic: &str, n: usize, edges: &[super::Edge]) -> String {
    let mut out = String::with_capacity(16 + edges.len() * 10);
    let _ = writeln!(out, "{magic} 1");
    let _ = writeln!(out, "n {n}");
    for e in edges {
        let _ = writeln!(out, "e {} {} {}", e.u, e.v, e.sign);
    }
    out
}

impl SignedGraph {
    pub fn to_sg(&self) -> String {
        write_text("sg", self.n(), self.edges())
    }
}

impl SignedMultiGraph {
    pub fn to_sgm(&self) -> String {
        write_text("sgm", self.n(), self.edges())
    }
}
