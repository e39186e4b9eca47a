//! The graph text format used by the CLI and test fixtures.
//!
//! ```text
//! n 4
//! 2 3
//! ```
//!
//! First line `n <count>`, then one `u v` edge per line with 1-based vertex
//! labels. Alternatively a single `mask <hex>` line carries the raw edge
//! bitmask in the canonical bit order (pairs `(u, v)`, `u < v`, row-major).
//! Blank lines are ignored.

use std::collections::HashSet;
use std::fmt;

use lapsep_core::LabeledGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number the error was found on; 0 when the input ended early.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "graph file: {}", self.message)
        } else {
            write!(f, "graph file line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or_else(|| err(0, "empty input"))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse()
            .map_err(|_| err(line_no, format!("bad vertex count {count:?}")))?,
        _ => return Err(err(line_no, "expected header line \"n <count>\"")),
    };
    if !(2..=lapsep_core::MAX_VERTICES).contains(&n) {
        return Err(err(
            line_no,
            format!("vertex count must be in 2..={}, got {n}", lapsep_core::MAX_VERTICES),
        ));
    }

    let body: Vec<(usize, &str)> = lines.collect();
    if let Some(&(mask_line, content)) = body.iter().find(|(_, l)| l.starts_with("mask")) {
        if body.len() != 1 {
            return Err(err(mask_line, "a mask line must be the only line after the header"));
        }
        let hex = match content.split_whitespace().collect::<Vec<_>>()[..] {
            ["mask", hex] => hex,
            _ => return Err(err(mask_line, "expected \"mask <hex>\"")),
        };
        let digits = hex.strip_prefix("0x").or_else(|| hex.strip_prefix("0X")).unwrap_or(hex);
        let mask = u128::from_str_radix(digits, 16)
            .map_err(|_| err(mask_line, format!("bad hex mask {hex:?}")))?;
        return LabeledGraph::from_mask(n, mask).map_err(|e| err(mask_line, e.to_string()));
    }

    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(body.len());
    for (line_no, content) in body {
        let pair: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = pair[..] else {
            return Err(err(line_no, format!("expected an edge line \"u v\", got {content:?}")));
        };
        let u: usize = u.parse().map_err(|_| err(line_no, format!("bad vertex {u:?}")))?;
        let v: usize = v.parse().map_err(|_| err(line_no, format!("bad vertex {v:?}")))?;
        for w in [u, v] {
            if w < 1 || w > n {
                return Err(err(line_no, format!("vertex {w} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(err(line_no, format!("self-loop at vertex {u}")));
        }
        let pair = (u.min(v) - 1, u.max(v) - 1);
        if !seen.insert(pair) {
            return Err(err(line_no, format!("duplicate edge {} {}", pair.0 + 1, pair.1 + 1)));
        }
        edges.push(pair);
    }
    Ok(LabeledGraph::from_edges(n, &edges).expect("edges validated above"))
}

/// Renders a graph in the edge-list form of the format, 1-based labels.
pub fn write(g: &LabeledGraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_edges_and_round_trips() {
        let g = parse("n 4\n2 3\n").unwrap();
        assert_eq!(g, LabeledGraph::from_edges(4, &[(1, 2)]).unwrap());
        assert_eq!(parse(&write(&g)).unwrap(), g);
        // blank lines and unordered endpoints are fine
        let g2 = parse("n 4\n\n3 2\n1 4\n").unwrap();
        assert_eq!(g2, LabeledGraph::from_edges(4, &[(0, 3), (1, 2)]).unwrap());
    }

    #[test]
    fn parses_mask_form() {
        let g = parse("n 3\nmask 0x7\n").unwrap();
        assert_eq!(g.mask(), 0b111);
        assert_eq!(parse("n 3\nmask 7\n").unwrap().mask(), 0b111);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse("").is_err());
        assert!(parse("graph 4\n").is_err());
        assert!(parse("n 1\n").is_err());
        assert!(parse("n 4\n1 1\n").is_err());
        assert!(parse("n 4\n1 5\n").is_err());
        assert!(parse("n 4\n0 2\n").is_err());
        assert!(parse("n 4\n1 2\n2 1\n").is_err());
        assert!(parse("n 4\nmask 0x1\n1 2\n").is_err());
        assert!(parse("n 3\nmask 0xff\n").is_err());
        assert!(parse("n 4\n1 2 3\n").is_err());
    }

    #[test]
    fn empty_graph_parses_at_this_layer() {
        // rejection of the empty graph is a classification concern
        let g = parse("n 5\n").unwrap();
        assert!(g.is_empty());
    }
}
