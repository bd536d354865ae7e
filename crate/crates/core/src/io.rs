//! Plain-text file formats for the mathematical objects, and JSON for run
//! reports. Math files are line-oriented, human-diffable, and versioned by a
//! header token; `#` starts a comment anywhere on a line.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num::Signed;

use crate::cocycle::{PmMatrix, UniformHypergraph};
use crate::error::{Error, Result};
use crate::families::{SetFamily, Subset};
use crate::geom::{Disc, PointSet};
use crate::graph::Graph;
use crate::rational::{format_rational, parse_rational, Rational};

fn perr(path: &str, line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        line,
        msg: msg.into(),
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn data_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| {
            let l = match l.find('#') {
                Some(p) => &l[..p],
                None => l,
            };
            (i + 1, l.trim())
        })
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn header<'a>(
    path: &str,
    lines: &'a [(usize, &'a str)],
    tag: &str,
    fields: usize,
) -> Result<(usize, Vec<usize>)> {
    let Some(&(ln, first)) = lines.first() else {
        return Err(perr(path, 1, "empty file"));
    };
    let toks: Vec<&str> = first.split_whitespace().collect();
    if toks.len() != fields + 2 || toks[0] != tag || toks[1] != "v1" {
        return Err(perr(
            path,
            ln,
            format!("expected header `{tag} v1` with {fields} count field(s)"),
        ));
    }
    let mut counts = Vec::with_capacity(fields);
    for t in &toks[2..] {
        counts.push(
            t.parse::<usize>()
                .map_err(|e| perr(path, ln, format!("bad count `{t}`: {e}")))?,
        );
    }
    Ok((ln, counts))
}

pub fn parse_points(path: &str, text: &str) -> Result<PointSet> {
    let lines = data_lines(text);
    let (_, counts) = header(path, &lines, "points", 2)?;
    let (n, d) = (counts[0], counts[1]);
    let body = &lines[1..];
    if body.len() != n {
        return Err(perr(
            path,
            lines.first().map(|x| x.0).unwrap_or(1),
            format!("expected {n} point lines, found {}", body.len()),
        ));
    }
    let mut points = Vec::with_capacity(n);
    for &(ln, l) in body {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != d {
            return Err(perr(path, ln, format!("expected {d} coordinates")));
        }
        let mut row = Vec::with_capacity(d);
        for t in toks {
            row.push(parse_rational(t).map_err(|e| perr(path, ln, e))?);
        }
        points.push(row);
    }
    PointSet::new(d, points)
}

pub fn write_points(ps: &PointSet) -> String {
    let mut out = String::new();
    if let Some(l) = ps.label() {
        let _ = writeln!(out, "# {l}");
    }
    let _ = writeln!(out, "points v1 {} {}", ps.len(), ps.dim());
    for p in ps.points() {
        let row: Vec<String> = p.iter().map(format_rational).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn parse_graph(path: &str, text: &str) -> Result<Graph> {
    let lines = data_lines(text);
    let (_, counts) = header(path, &lines, "graph", 2)?;
    let (n, m) = (counts[0], counts[1]);
    let body = &lines[1..];
    if body.len() != m {
        return Err(perr(path, 1, format!("expected {m} edge lines")));
    }
    let mut g = Graph::new(n);
    for &(ln, l) in body {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(perr(path, ln, "expected `u v`"));
        }
        let u: usize = toks[0].parse().map_err(|e| perr(path, ln, format!("{e}")))?;
        let v: usize = toks[1].parse().map_err(|e| perr(path, ln, format!("{e}")))?;
        if u >= v || v >= n {
            return Err(perr(path, ln, format!("edge needs 0 <= u < v < {n}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    let _ = writeln!(out, "graph v1 {} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_discs(path: &str, text: &str) -> Result<Vec<Disc>> {
    let lines = data_lines(text);
    let (_, counts) = header(path, &lines, "discs", 2)?;
    let (n, d) = (counts[0], counts[1]);
    let body = &lines[1..];
    if body.len() != n {
        return Err(perr(path, 1, format!("expected {n} disc lines")));
    }
    let mut discs = Vec::with_capacity(n);
    for &(ln, l) in body {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != d + 1 {
            return Err(perr(path, ln, format!("expected {} rationals", d + 1)));
        }
        let mut vals: Vec<Rational> = Vec::with_capacity(d + 1);
        for t in toks {
            vals.push(parse_rational(t).map_err(|e| perr(path, ln, e))?);
        }
        let radius = vals.pop().expect("d+1 values");
        if !radius.is_positive() {
            return Err(perr(path, ln, "radius must be positive"));
        }
        discs.push(Disc {
            center: vals,
            radius,
        });
    }
    Ok(discs)
}

pub fn write_discs(discs: &[Disc]) -> String {
    let mut out = String::new();
    let d = discs.first().map(|x| x.center.len()).unwrap_or(0);
    let _ = writeln!(out, "discs v1 {} {}", discs.len(), d);
    for disc in discs {
        let mut row: Vec<String> = disc.center.iter().map(format_rational).collect();
        row.push(format_rational(&disc.radius));
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn parse_family(path: &str, text: &str) -> Result<SetFamily> {
    let lines = data_lines(text);
    let (_, counts) = header(path, &lines, "family", 2)?;
    let (n, m) = (counts[0], counts[1]);
    let body = &lines[1..];
    if body.len() != m {
        return Err(perr(path, 1, format!("expected {m} member lines")));
    }
    let mut members = Vec::with_capacity(m);
    for &(ln, l) in body {
        let mut mask = 0u64;
        if l != "-" {
            // `-` denotes the empty set (a bare blank line would be dropped)
            let mut prev = 0usize;
            for t in l.split_whitespace() {
                let e: usize = t.parse().map_err(|e| perr(path, ln, format!("{e}")))?;
                if e < 1 || e > n {
                    return Err(perr(path, ln, format!("element {e} outside [1,{n}]")));
                }
                if e <= prev {
                    return Err(perr(path, ln, "elements must be strictly increasing"));
                }
                prev = e;
                mask |= 1 << (e - 1);
            }
        }
        members.push(Subset(mask));
    }
    SetFamily::new(n, members)
}

pub fn write_family(f: &SetFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family v1 {} {}", f.n(), f.len());
    for m in f.members() {
        if m.size() == 0 {
            let _ = writeln!(out, "-");
        } else {
            let els: Vec<String> = m.elements().iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "{}", els.join(" "));
        }
    }
    out
}

pub fn parse_hypergraph(path: &str, text: &str) -> Result<UniformHypergraph> {
    let lines = data_lines(text);
    let (_, counts) = header(path, &lines, "hypergraph", 3)?;
    let (n, k, m) = (counts[0], counts[1], counts[2]);
    let body = &lines[1..];
    if body.len() != m {
        return Err(perr(path, 1, format!("expected {m} edge lines")));
    }
    let mut edges = Vec::with_capacity(m);
    for &(ln, l) in body {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != k {
            return Err(perr(path, ln, format!("expected {k} vertices")));
        }
        let mut mask = 0u64;
        let mut prev: Option<usize> = None;
        for t in toks {
            let v: usize = t.parse().map_err(|e| perr(path, ln, format!("{e}")))?;
            if v >= n {
                return Err(perr(path, ln, format!("vertex {v} outside [0,{n})")));
            }
            if prev.is_some_and(|p| v <= p) {
                return Err(perr(path, ln, "vertices must be strictly increasing"));
            }
            prev = Some(v);
            mask |= 1 << v;
        }
        edges.push(mask);
    }
    UniformHypergraph::new(n, k, edges)
}

pub fn write_hypergraph(h: &UniformHypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "hypergraph v1 {} {} {}",
        h.n(),
        h.k(),
        h.edge_count()
    );
    for &e in h.edges() {
        let vs: Vec<String> = crate::combin::mask_elements(e)
            .iter()
            .map(|v| v.to_string())
            .collect();
        let _ = writeln!(out, "{}", vs.join(" "));
    }
    out
}

pub fn parse_pmmatrix(path: &str, text: &str) -> Result<PmMatrix> {
    let lines = data_lines(text);
    let (_, counts) = header(path, &lines, "pmmatrix", 1)?;
    let m = counts[0];
    let body = &lines[1..];
    if body.len() != m {
        return Err(perr(path, 1, format!("expected {m} rows")));
    }
    let mut entries = Vec::with_capacity(m);
    for &(ln, l) in body {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != m {
            return Err(perr(path, ln, format!("expected {m} entries")));
        }
        let mut row = Vec::with_capacity(m);
        for t in toks {
            row.push(match t {
                "+1" | "+" | "1" => 1i8,
                "-1" | "-" => -1i8,
                _ => return Err(perr(path, ln, format!("entry `{t}` must be +1 or -1"))),
            });
        }
        entries.push(row);
    }
    PmMatrix::new(entries)
}

pub fn write_pmmatrix(m: &PmMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "pmmatrix v1 {}", m.m);
    for row in &m.entries {
        let cells: Vec<&str> = row.iter().map(|&e| if e == 1 { "+1" } else { "-1" }).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })
}

/// Dispatch on the header token of an already-read file.
pub fn sniff_kind(text: &str) -> Option<&'static str> {
    let lines = data_lines(text);
    let first = lines.first()?.1;
    let tag = first.split_whitespace().next()?;
    match tag {
        "points" => Some("points"),
        "graph" => Some("graph"),
        "discs" => Some("discs"),
        "family" => Some("family"),
        "hypergraph" => Some("hypergraph"),
        "pmmatrix" => Some("pmmatrix"),
        _ => None,
    }
}
