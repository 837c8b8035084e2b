//! Plain-text edge list format.
//!
//! First line `n m`, then one `u v` pair per line with u < v, 0-indexed,
//! sorted lexicographically. Output is deterministic so files can be diffed.

use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_edge_list<W: Write>(g: &Graph, w: W) -> Result<()> {
    let mut w = BufWriter::new(w);
    writeln!(w, "{} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_edge_list_file<P: AsRef<Path>>(g: &Graph, path: P) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_edge_list(g, file)
}

/// Parses the canonical format; rejects malformed headers, out-of-order or
/// non-canonical (u >= v) edges, and edge-count mismatches.
pub fn read_edge_list<R: Read>(r: R) -> Result<Graph> {
    let reader = BufReader::new(r);
    let mut lines = reader.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))??;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .ok_or_else(|| Error::Parse("missing n".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad n: {e}")))?;
    let m: usize = it
        .next()
        .ok_or_else(|| Error::Parse("missing m".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad m: {e}")))?;
    if it.next().is_some() {
        return Err(Error::Parse("trailing tokens in header".into()));
    }

    let mut edges = Vec::with_capacity(m);
    let mut prev: Option<(usize, usize)> = None;
    for (idx, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .ok_or_else(|| Error::Parse(format!("line {}: missing u", idx + 2)))?
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", idx + 2)))?;
        let v: usize = it
            .next()
            .ok_or_else(|| Error::Parse(format!("line {}: missing v", idx + 2)))?
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", idx + 2)))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("line {}: trailing tokens", idx + 2)));
        }
        if u >= v {
            return Err(Error::Parse(format!(
                "line {}: edge ({u},{v}) not in canonical u < v form",
                idx + 2
            )));
        }
        if let Some(p) = prev {
            if (u, v) <= p {
                return Err(Error::Parse(format!(
                    "line {}: edges not sorted lexicographically",
                    idx + 2
                )));
            }
        }
        prev = Some((u, v));
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges)
}

pub fn read_edge_list_file<P: AsRef<Path>>(path: P) -> Result<Graph> {
    let file = std::fs::File::open(path)?;
    read_edge_list(file)
}
