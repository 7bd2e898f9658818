//! Graph text format.
//!
//! ```text
//! # comment
//! n 4
//! e 1 2        # one edge
//! e 2 3 2      # two parallel edges; repeated lines accumulate
//! w 1 0        # optional vertex weights, one per vertex
//! p 1 4 2      # optional marked pair and its order
//! ```
//!
//! Vertices are one-based in the text and zero-based once parsed.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::Multigraph;
use crate::error::{Error, Result};

/// A parsed graph file, including the optional marking lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Multigraph,
    pub weights: Option<Vec<BigInt>>,
    /// `(i, j, h)`, zero-based.
    pub pair: Option<(usize, usize, BigInt)>,
}

fn vertex(tok: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let t = tok.ok_or_else(|| Error::parse(line, "missing vertex index"))?;
    let v: usize = t.parse().map_err(|_| Error::parse(line, format!("bad vertex index `{t}`")))?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn end(mut toks: std::str::SplitWhitespace<'_>, line: usize) -> Result<()> {
    match toks.next() {
        Some(t) => Err(Error::parse(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap().trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hl, header) = lines.next().ok_or(Error::EmptyInput)?;
        let mut toks = header.split_whitespace();
        if toks.next() != Some("n") {
            return Err(Error::parse(hl, "expected header `n <count>`"));
        }
        let n: usize = toks
            .next()
            .ok_or_else(|| Error::parse(hl, "missing vertex count"))?
            .parse()
            .map_err(|_| Error::parse(hl, "bad vertex count"))?;
        end(toks, hl)?;
        if n == 0 {
            return Err(Error::parse(hl, "a graph needs at least one vertex"));
        }

        let mut graph = Multigraph::new(n);
        let mut weights: Vec<Option<BigInt>> = vec![None; n];
        let mut any_weight = false;
        let mut pair = None;

        for (ln, line) in lines {
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("e") => {
                    let i = vertex(toks.next(), n, ln)?;
                    let j = vertex(toks.next(), n, ln)?;
                    if i == j {
                        return Err(Error::parse(ln, "loops are not allowed"));
                    }
                    let c: u32 = match toks.next() {
                        Some(t) => t.parse().map_err(|_| Error::parse(ln, format!("bad multiplicity `{t}`")))?,
                        None => 1,
                    };
                    end(toks, ln)?;
                    graph.add_edges(i, j, c).map_err(|e| Error::parse(ln, e.to_string()))?;
                }
                Some("w") => {
                    let i = vertex(toks.next(), n, ln)?;
                    let t = toks.next().ok_or_else(|| Error::parse(ln, "missing weight"))?;
                    let w: BigInt = t.parse().map_err(|_| Error::parse(ln, format!("bad weight `{t}`")))?;
                    end(toks, ln)?;
                    if weights[i].replace(w).is_some() {
                        return Err(Error::parse(ln, format!("weight of vertex {} given twice", i + 1)));
                    }
                    any_weight = true;
                }
                Some("p") => {
                    let i = vertex(toks.next(), n, ln)?;
                    let j = vertex(toks.next(), n, ln)?;
                    let t = toks.next().ok_or_else(|| Error::parse(ln, "missing order"))?;
                    let h: BigInt = t.parse().map_err(|_| Error::parse(ln, format!("bad order `{t}`")))?;
                    end(toks, ln)?;
                    if pair.replace((i, j, h)).is_some() {
                        return Err(Error::parse(ln, "marked pair given twice"));
                    }
                }
                Some(other) => return Err(Error::parse(ln, format!("unknown directive `{other}`"))),
                None => unreachable!("blank lines are filtered"),
            }
        }

        let weights = if any_weight {
            let mut out = Vec::with_capacity(n);
            for (v, w) in weights.into_iter().enumerate() {
                out.push(w.ok_or_else(|| Error::parse(0, format!("vertex {} has no weight", v + 1)))?);
            }
            Some(out)
        } else {
            None
        };
        Ok(GraphDocument { graph, weights, pair })
    }

    pub fn to_text(&self) -> String {
        write_document(&self.graph, self.weights.as_deref(), self.pair.as_ref().map(|(i, j, h)| (*i, *j, h)))
    }
}

pub(super) fn write_graph(g: &Multigraph, weights: Option<&[BigInt]>) -> String {
    write_document(g, weights, None)
}

pub(crate) fn write_document(
    g: &Multigraph,
    weights: Option<&[BigInt]>,
    pair: Option<(usize, usize, &BigInt)>,
) -> String {
    let mut s = format!("n {}\n", g.vertex_count());
    for (i, j, c) in g.edge_bundles() {
        if c == 1 {
            writeln!(s, "e {} {}", i + 1, j + 1).unwrap();
        } else {
            writeln!(s, "e {} {} {}", i + 1, j + 1, c).unwrap();
        }
    }
    if let Some(ws) = weights {
        for (v, w) in ws.iter().enumerate() {
            writeln!(s, "w {} {}", v + 1, w).unwrap();
        }
    }
    if let Some((i, j, h)) = pair {
        writeln!(s, "p {} {} {}", i + 1, j + 1, h).unwrap();
    }
    s
}
