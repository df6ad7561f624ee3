//! Plain-text file formats shared by the CLI and the tests.
//!
//! Points: one per line, whitespace-separated decimals, `#` comments, 2 or
//! 3 columns. Graphs: a header `undirected|directed|mixed|polar <n> <m>`
//! followed by m edge lines — `u v w` for undirected/directed, `u v -- w`
//! or `u v -> w` for mixed, `u pu v pv w` for polar.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geom::{Point2, Point3};
use crate::graph::{MixedGraph, WeightedDigraph, WeightedMultigraph};
use crate::polar::PolarGraph;

#[derive(Debug, Error, PartialEq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Content lines with their 1-based numbers; comments and blanks skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = match raw.find('#') {
            Some(h) => &raw[..h],
            None => raw,
        }
        .trim();
        if stripped.is_empty() {
            None
        } else {
            Some((i + 1, stripped))
        }
    })
}

fn parse_rows(text: &str, columns: usize) -> Result<Vec<Vec<f64>>, ParseError> {
    let mut rows = Vec::new();
    for (line, content) in content_lines(text) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != columns {
            return err(line, format!("expected {columns} columns, found {}", fields.len()));
        }
        let mut row = Vec::with_capacity(columns);
        for f in fields {
            match f.parse::<f64>() {
                Ok(v) if v.is_finite() => row.push(v),
                _ => return err(line, format!("bad number {f:?}")),
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return err(0, "no points in file");
    }
    Ok(rows)
}

pub fn parse_points2(text: &str) -> Result<Vec<Point2<f64>>, ParseError> {
    Ok(parse_rows(text, 2)?.into_iter().map(|r| Point2::new(r[0], r[1])).collect())
}

pub fn parse_points3(text: &str) -> Result<Vec<Point3<f64>>, ParseError> {
    Ok(parse_rows(text, 3)?.into_iter().map(|r| Point3::new(r[0], r[1], r[2])).collect())
}

pub fn write_points2(points: &[Point2<f64>]) -> String {
    let mut s = String::new();
    for p in points {
        writeln!(s, "{} {}", p.x, p.y).unwrap();
    }
    s
}

pub fn write_points3(points: &[Point3<f64>]) -> String {
    let mut s = String::new();
    for p in points {
        writeln!(s, "{} {} {}", p.x, p.y, p.z).unwrap();
    }
    s
}

#[derive(Clone, Debug)]
pub enum ParsedGraph {
    Undirected(WeightedMultigraph<f64>),
    Directed(WeightedDigraph<f64>),
    Mixed(MixedGraph<f64>),
    Polar(PolarGraph<f64>),
}

impl ParsedGraph {
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedGraph::Undirected(_) => "undirected",
            ParsedGraph::Directed(_) => "directed",
            ParsedGraph::Mixed(_) => "mixed",
            ParsedGraph::Polar(_) => "polar",
        }
    }
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = match lines.next() {
        Some(x) => x,
        None => return err(0, "empty graph file"),
    };
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 3 {
        return err(hline, "header must be `<kind> <n> <m>`");
    }
    let kind = head[0];
    let n: usize = match head[1].parse() {
        Ok(v) => v,
        Err(_) => return err(hline, format!("bad vertex count {:?}", head[1])),
    };
    let m: usize = match head[2].parse() {
        Ok(v) => v,
        Err(_) => return err(hline, format!("bad edge count {:?}", head[2])),
    };

    let vertex = |line: usize, f: &str| -> Result<u32, ParseError> {
        match f.parse::<u32>() {
            Ok(v) if (v as usize) < n => Ok(v),
            Ok(v) => err(line, format!("vertex {v} out of range for {n} vertices")),
            Err(_) => err(line, format!("bad vertex {f:?}")),
        }
    };
    let weight = |line: usize, f: &str| -> Result<f64, ParseError> {
        match f.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => err(line, format!("bad weight {f:?}")),
        }
    };

    let mut parsed = 0usize;
    let mut und = WeightedMultigraph::new(n.max(1));
    let mut dig = WeightedDigraph::new(n.max(1));
    let mut mix = MixedGraph::new(n.max(1));
    let mut pol = PolarGraph::new(n.max(1));
    let mut last_line = hline;
    for (line, content) in lines {
        last_line = line;
        if parsed == m {
            return err(line, format!("more than {m} edge lines"));
        }
        let f: Vec<&str> = content.split_whitespace().collect();
        match kind {
            "undirected" | "directed" => {
                if f.len() != 3 {
                    return err(line, "expected `u v w`");
                }
                let (u, v) = (vertex(line, f[0])?, vertex(line, f[1])?);
                let w = weight(line, f[2])?;
                if kind == "undirected" {
                    und.add_edge(u, v, w);
                } else {
                    dig.add_edge(u, v, w);
                }
            }
            "mixed" => {
                if f.len() != 4 {
                    return err(line, "expected `u v -- w` or `u v -> w`");
                }
                let (u, v) = (vertex(line, f[0])?, vertex(line, f[1])?);
                let w = weight(line, f[3])?;
                match f[2] {
                    "--" => {
                        if u == v {
                            return err(line, "undirected self-loop");
                        }
                        mix.add_undirected(u, v, w);
                    }
                    "->" => {
                        mix.add_directed(u, v, w);
                    }
                    other => return err(line, format!("bad edge marker {other:?}")),
                }
            }
            "polar" => {
                if f.len() != 5 {
                    return err(line, "expected `u pu v pv w`");
                }
                let u = vertex(line, f[0])?;
                let v = vertex(line, f[2])?;
                let pole = |s: &str| -> Result<u8, ParseError> {
                    match s {
                        "0" => Ok(0),
                        "1" => Ok(1),
                        other => err(line, format!("pole must be 0 or 1, found {other:?}")),
                    }
                };
                let (pu, pv) = (pole(f[1])?, pole(f[3])?);
                let w = weight(line, f[4])?;
                pol.add_edge(u, pu, v, pv, w);
            }
            other => return err(hline, format!("unknown graph kind {other:?}")),
        }
        parsed += 1;
    }
    if parsed != m {
        return err(last_line, format!("expected {m} edge lines, found {parsed}"));
    }
    if n == 0 {
        return err(hline, "graph must have at least one vertex");
    }
    Ok(match kind {
        "undirected" => ParsedGraph::Undirected(und),
        "directed" => ParsedGraph::Directed(dig),
        "mixed" => ParsedGraph::Mixed(mix),
        _ => ParsedGraph::Polar(pol),
    })
}

pub fn write_graph(g: &ParsedGraph) -> String {
    let mut s = String::new();
    match g {
        ParsedGraph::Undirected(g) => {
            writeln!(s, "undirected {} {}", g.vertex_count(), g.edge_count()).unwrap();
            for e in &g.edges {
                writeln!(s, "{} {} {}", e.u, e.v, e.weight).unwrap();
            }
        }
        ParsedGraph::Directed(g) => {
            writeln!(s, "directed {} {}", g.vertex_count(), g.edge_count()).unwrap();
            for e in &g.edges {
                writeln!(s, "{} {} {}", e.tail, e.head, e.weight).unwrap();
            }
        }
        ParsedGraph::Mixed(g) => {
            writeln!(s, "mixed {} {}", g.vertex_count(), g.edge_count()).unwrap();
            for &(u, v, w) in &g.undirected {
                writeln!(s, "{u} {v} -- {w}").unwrap();
            }
            for &(t, h, w) in &g.directed {
                writeln!(s, "{t} {h} -> {w}").unwrap();
            }
        }
        ParsedGraph::Polar(g) => {
            writeln!(s, "polar {} {}", g.vertex_count(), g.edge_count()).unwrap();
            for e in &g.edges {
                writeln!(s, "{} {} {} {} {}", e.u, e.pu, e.v, e.pv, e.weight).unwrap();
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_is_an_error() {
        assert!(parse_points2("").is_err());
        assert!(parse_points2("# only a comment\n").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn triangle_graph_parses() {
        let text = "undirected 3 3\n0 1 1.5\n1 2 2.5\n2 0 3.5\n";
        match parse_graph(text).unwrap() {
            ParsedGraph::Undirected(g) => {
                assert_eq!(g.vertex_count(), 3);
                assert_eq!(g.edge_count(), 3);
                assert_eq!(g.edges[1].weight, 2.5);
            }
            other => panic!("wrong kind {}", other.kind()),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "undirected 3 2\n0 1 1.0\n0 nine 2.0\n";
        let e = parse_graph(text).unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_points2("1 2\n3\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_graph("polar 2 1\n0 2 1 0 1.0\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn mixed_markers() {
        let text = "mixed 3 3\n0 1 -- 1.0\n1 2 -> 2.0\n2 0 -> 3.0\n";
        match parse_graph(text).unwrap() {
            ParsedGraph::Mixed(g) => {
                assert_eq!(g.undirected.len(), 1);
                assert_eq!(g.directed.len(), 2);
            }
            other => panic!("wrong kind {}", other.kind()),
        }
    }

    #[test]
    fn edge_count_must_match() {
        assert!(parse_graph("directed 2 2\n0 1 1.0\n").is_err());
        assert!(parse_graph("directed 2 1\n0 1 1.0\n1 0 2.0\n").is_err());
    }

    #[test]
    fn graphs_round_trip() {
        for seed in 0..10u64 {
            let graphs = [
                ParsedGraph::Undirected(crate::gen::random_multigraph(5, 8, None, seed)),
                ParsedGraph::Directed(crate::gen::random_digraph(5, 8, None, seed)),
                ParsedGraph::Mixed(crate::gen::random_mixed(5, 8, seed)),
                ParsedGraph::Polar(crate::gen::random_polar(5, 8, seed)),
            ];
            for g in graphs {
                let text = write_graph(&g);
                let back = parse_graph(&text).unwrap();
                assert_eq!(write_graph(&back), text);
            }
        }
    }

    #[test]
    fn points_round_trip() {
        let pts = crate::gen::random_points3(20, 3);
        let back = parse_points3(&write_points3(&pts)).unwrap();
        assert_eq!(back, pts);
    }
}
