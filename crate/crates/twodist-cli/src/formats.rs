//! On-disk formats. Everything is UTF-8 with LF line endings and no
//! trailing whitespace, and every writer is byte-deterministic for a
//! given graph so repeated runs reproduce files exactly.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};
use twodist_core::cnf::CnfInstance;
use twodist_core::graph::TwoDistGraph;
use twodist_core::search::CanonicalColoring;

use crate::CliError;

/// Write via a temp file in the same directory plus rename, so failures
/// leave no partial file behind.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    let write = || -> std::io::Result<()> {
        if let Some(d) = dir {
            fs::create_dir_all(d)?;
        }
        fs::write(&tmp, bytes)?;
        fs::rename(&tmp, path)
    };
    write().map_err(|e| {
        let _ = fs::remove_file(&tmp);
        CliError::io_ctx(path, e)
    })
}

fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        let _ = write!(out, "{b:02x}");
    }
    out
}

/// Canonical serialization a graph digest is computed over: the general
/// vertex form followed by the edge list.
pub fn canonical_graph_text(g: &TwoDistGraph) -> String {
    let mut text = vertices_general(g);
    text.push_str(&edges_text(g));
    text
}

pub fn graph_digest_raw(g: &TwoDistGraph) -> [u8; 32] {
    Sha256::digest(canonical_graph_text(g).as_bytes()).into()
}

pub fn graph_digest(g: &TwoDistGraph) -> String {
    format!("sha256:{}", sha256_hex(canonical_graph_text(g).as_bytes()))
}

/// One vertex per line, `a b c d`, meaning
/// (a√3/12 + b√11/12, c/12 + d√33/12). Fails when some vertex does not
/// lie on the 1/12 lattice.
pub fn vertices_lattice(g: &TwoDistGraph) -> Result<String, CliError> {
    let mut out = String::new();
    for p in g.vertices() {
        let q = p.as_quad().ok_or_else(|| {
            CliError::Usage(format!(
                "vertex {p} has no lattice form; use the general format"
            ))
        })?;
        let _ = writeln!(out, "{} {} {} {}", q.a, q.b, q.c, q.d);
    }
    Ok(out)
}

/// One vertex per line, `xa xb yc yd` as reduced fractions `p/q`.
pub fn vertices_general(g: &TwoDistGraph) -> String {
    let mut out = String::new();
    for p in g.vertices() {
        let _ = writeln!(
            out,
            "{}/{} {}/{} {}/{} {}/{}",
            p.xa.numer(),
            p.xa.denom(),
            p.xb.numer(),
            p.xb.denom(),
            p.yc.numer(),
            p.yc.denom(),
            p.yd.numer(),
            p.yd.denom()
        );
    }
    out
}

/// Header `n m1 m2`, then `u v w` per edge with 0-based indices and
/// w ∈ {1,2}.
pub fn edges_text(g: &TwoDistGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", g.n(), g.m1(), g.m2());
    for &(u, v) in g.edges1() {
        let _ = writeln!(out, "{u} {v} 1");
    }
    for &(u, v) in g.edges2() {
        let _ = writeln!(out, "{u} {v} 2");
    }
    out
}

/// Header `n k count`, then one line of n space-separated colors per
/// coloring.
pub fn colorings_text(n: usize, k: u8, colorings: &[CanonicalColoring]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", n, k, colorings.len());
    for c in colorings {
        let row: Vec<String> = c.classes.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn parse_colorings(text: &str) -> Result<(usize, u8, Vec<Vec<u8>>), CliError> {
    let bad = |m: &str| CliError::Usage(format!("coloring file: {m}"));
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty"))?;
    let mut parts = header.split_ascii_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("bad header"))?;
    let k: u8 = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("bad header"))?;
    let count: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("bad header"))?;
    let mut rows = Vec::with_capacity(count);
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let row: Option<Vec<u8>> = line
            .split_ascii_whitespace()
            .map(|t| t.parse().ok())
            .collect();
        let row = row.ok_or_else(|| bad("bad color token"))?;
        if row.len() != n {
            return Err(bad("row length mismatch"));
        }
        rows.push(row);
    }
    if rows.len() != count {
        return Err(bad("row count mismatch"));
    }
    Ok((n, k, rows))
}

/// DIMACS text with self-describing comment lines.
pub fn dimacs_text(name: &str, g: &TwoDistGraph, k: u8, cnf: &CnfInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "c graph={} vertices={} edges1={} edges2={} colors={}",
        name,
        g.n(),
        g.m1(),
        g.m2(),
        k
    );
    let _ = writeln!(out, "c vars: vertex v color c -> v*{k} + c + 1");
    let _ = writeln!(out, "c {}", graph_digest(g));
    let _ = writeln!(out, "p cnf {} {}", cnf.num_vars, cnf.clauses.len());
    for clause in &cnf.clauses {
        let lits: Vec<String> = clause.iter().map(|l| l.to_string()).collect();
        let _ = writeln!(out, "{} 0", lits.join(" "));
    }
    out
}

/// Solver model text: whitespace-separated signed integers, optionally
/// wrapped in `v` lines; `c` comment and `s` status lines are skipped.
pub fn parse_model_literals(text: &str) -> Result<Vec<i32>, CliError> {
    let mut lits = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim_start();
        if trimmed.starts_with('c') || trimmed.starts_with('s') {
            continue;
        }
        for tok in trimmed.split_ascii_whitespace() {
            if tok == "v" || tok == "V" {
                continue;
            }
            let lit: i32 = tok
                .parse()
                .map_err(|_| CliError::Usage(format!("model: bad literal token {tok:?}")))?;
            lits.push(lit);
        }
    }
    Ok(lits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use twodist_core::exact::QuadCoord;

    fn tiny() -> TwoDistGraph {
        TwoDistGraph::from_points(
            [[0, 0, 0, 0], [-2, 0, 0, -2], [-4, 0, 0, -4]]
                .into_iter()
                .map(|v| QuadCoord::from(v).to_point())
                .collect(),
        )
    }

    #[test]
    fn edge_and_vertex_text_shape() {
        let g = tiny();
        assert_eq!(edges_text(&g), "3 2 1\n0 1 1\n1 2 1\n0 2 2\n");
        let lat = vertices_lattice(&g).unwrap();
        assert_eq!(lat.lines().count(), 3);
        assert!(lat.starts_with("0 0 0 0\n"));
        let gen = vertices_general(&g);
        assert!(gen.starts_with("0/1 0/1 0/1 0/1\n"));
        assert!(gen.contains("-1/6 0/1 0/1 -1/6"));
    }

    #[test]
    fn colorings_roundtrip() {
        let cols = vec![
            CanonicalColoring { classes: vec![0, 1, 2] },
            CanonicalColoring { classes: vec![0, 1, 0] },
        ];
        let text = colorings_text(3, 5, &cols);
        let (n, k, rows) = parse_colorings(&text).unwrap();
        assert_eq!((n, k), (3, 5));
        assert_eq!(rows, vec![vec![0, 1, 2], vec![0, 1, 0]]);
    }

    #[test]
    fn model_text_variants() {
        let lits = parse_model_literals("c comment\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n").unwrap();
        assert_eq!(lits, vec![1, -2, 3, -4, 0]);
        let lits = parse_model_literals("1 -2 3 -4").unwrap();
        assert_eq!(lits, vec![1, -2, 3, -4]);
        assert!(parse_model_literals("1 x 2").is_err());
    }

    #[test]
    fn digest_is_stable_across_rebuilds() {
        assert_eq!(graph_digest(&tiny()), graph_digest(&tiny()));
    }
}
