//! Reading and writing graphs as plain edge lists and DIMACS files.
//!
//! Edge lists hold one `u v` pair per line; further columns (weights,
//! timestamps) are ignored, as are blank lines and lines starting with `#` or
//! `%`. Ids are 1-based when the smallest id in the file is at least 1 and
//! 0-based otherwise. A `#! n=<count> base=<0|1>` line, as written by
//! [`write_edge_list`], overrides both guesses so isolated vertices survive a
//! round trip. Files opening with a `%%MatrixMarket` banner are read as
//! coordinate matrices: the first data line gives the size, the rest are
//! 1-based entries.
//!
//! DIMACS files use `c` comment lines, one `p edge <n> <m>` header and
//! 1-based `e <u> <v>` lines.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use log::warn;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
    /// DIMACS for `.clq`, `.col` and `.dimacs` files or text whose first
    /// meaningful line starts with `p`, `c` or `e`; edge list otherwise.
    #[default]
    Auto,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "edges" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            "auto" => Ok(Format::Auto),
            other => Err(format!("unknown graph format `{other}` (expected edge-list, dimacs or auto)")),
        }
    }
}

pub fn parse_graph(path: impl AsRef<Path>, format: Format) -> Result<Graph, ParseError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let format = match format {
        Format::Auto => {
            let ext = path
                .extension()
                .and_then(|e| e.to_str())
                .map(str::to_ascii_lowercase);
            match ext.as_deref() {
                Some("clq" | "col" | "dimacs") => Format::Dimacs,
                _ => sniff(&text),
            }
        }
        f => f,
    };
    parse_str(&text, format)
}

pub fn parse_str(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
        Format::Auto => parse_str(text, sniff(text)),
    }
}

fn sniff(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('%'));
    match first.and_then(|l| l.split_whitespace().next()) {
        Some("p" | "c" | "e") => Format::Dimacs,
        _ => Format::EdgeList,
    }
}

fn parse_id(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("`{token}` is not a vertex id")))
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared_n = None;
    let mut declared_base = None;
    let mut raw: Vec<(usize, usize)> = Vec::new();
    let mut expect_size_line = text.starts_with("%%MatrixMarket");
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.trim();
        if let Some(directive) = line.strip_prefix("#!") {
            for field in directive.split_whitespace() {
                match field.split_once('=') {
                    Some(("n", v)) => declared_n = Some(parse_id(v, lineno)?),
                    Some(("base", v)) => declared_base = Some(parse_id(v, lineno)?),
                    _ => {}
                }
            }
            continue;
        }
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(syntax(lineno, "expected two vertex ids"));
        };
        if expect_size_line {
            expect_size_line = false;
            let (rows, cols) = (parse_id(a, lineno)?, parse_id(b, lineno)?);
            declared_n = Some(rows.max(cols));
            declared_base = Some(1);
            continue;
        }
        raw.push((parse_id(a, lineno)?, parse_id(b, lineno)?));
    }
    let min = raw.iter().map(|&(u, v)| u.min(v)).min();
    let base = declared_base.unwrap_or(match min {
        Some(m) if m >= 1 => 1,
        _ => 0,
    });
    if base > 1 {
        return Err(syntax(0, format!("unsupported id base {base}")));
    }
    if base == 1 && min == Some(0) {
        return Err(syntax(0, "id 0 in a 1-based edge list"));
    }
    let max = raw.iter().map(|&(u, v)| u.max(v)).max();
    let n = declared_n.unwrap_or(max.map_or(0, |m| m + 1 - base));
    Ok(Graph::from_edges(n, raw.into_iter().map(|(u, v)| (u - base, v - base)))?)
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Vec<(usize, usize)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some(t) if t.starts_with('c') || t.starts_with('%') || t.starts_with('#') => {}
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(lineno, "second problem line"));
                }
                let _kind = tokens.next();
                let (Some(n), Some(m)) = (tokens.next(), tokens.next()) else {
                    return Err(syntax(lineno, "expected `p edge <n> <m>`"));
                };
                header = Some((parse_id(n, lineno)?, parse_id(m, lineno)?));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(syntax(lineno, "edge before the problem line"));
                };
                let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
                    return Err(syntax(lineno, "expected `e <u> <v>`"));
                };
                let (u, v) = (parse_id(a, lineno)?, parse_id(b, lineno)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(syntax(lineno, format!("edge ({u}, {v}) outside 1..={n}")));
                }
                raw.push((u - 1, v - 1));
            }
            Some(t) => return Err(syntax(lineno, format!("unexpected line type `{t}`"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(syntax(0, "missing `p edge <n> <m>` line"));
    };
    let g = Graph::from_edges(n, raw.iter().copied())?;
    if raw.len() != m && g.m() != m {
        warn!("DIMACS header declares {m} edges, file has {} lines and {} distinct edges", raw.len(), g.m());
    }
    Ok(g)
}

/// Writes `g` as a 0-based edge list with a size directive.
pub fn write_edge_list(g: &Graph, mut out: impl Write) -> io::Result<()> {
    let mut buf = String::new();
    let _ = writeln!(buf, "#! n={} base=0", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(buf, "{u} {v}");
    }
    out.write_all(buf.as_bytes())
}

pub fn write_dimacs(g: &Graph, mut out: impl Write) -> io::Result<()> {
    let mut buf = String::new();
    let _ = writeln!(buf, "p edge {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(buf, "e {} {}", u + 1, v + 1);
    }
    out.write_all(buf.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_edge_list() {
        let g = parse_str("1 2\n2 3\n", Format::EdgeList).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn zero_based_with_comments_and_extra_columns() {
        let text = "# a comment\n% another\n0 1 0.5\n\n1 2 17 x\n";
        let g = parse_str(text, Format::Auto).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
    }

    #[test]
    fn dimacs_matches_edge_list() {
        let d = parse_str("c hi\np edge 3 2\ne 1 2\ne 2 3\n", Format::Auto).unwrap();
        assert_eq!(d, parse_str("1 2\n2 3\n", Format::EdgeList).unwrap());
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_str("1 2\n2 1\n1 2\n2 3\n", Format::EdgeList).unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn dimacs_count_mismatch_still_parses() {
        let g = parse_str("p edge 4 9\ne 1 2\n", Format::Dimacs).unwrap();
        assert_eq!((g.n(), g.m()), (4, 1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_str("1 2\n3\n", Format::EdgeList).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");
        let err = parse_str("1 2\n3 x\n", Format::EdgeList).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");
        let err = parse_str("p edge 2 1\ne 1 3\n", Format::Dimacs).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");
        let err = parse_str("e 1 2\n", Format::Dimacs).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }), "{err}");
    }

    #[test]
    fn writers_round_trip_isolated_vertices() {
        let g = Graph::from_edges(6, [(1, 2), (2, 4)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        assert_eq!(parse_str(std::str::from_utf8(&buf).unwrap(), Format::Auto).unwrap(), g);
        let mut buf = Vec::new();
        write_dimacs(&g, &mut buf).unwrap();
        assert_eq!(parse_str(std::str::from_utf8(&buf).unwrap(), Format::Auto).unwrap(), g);
    }

    #[test]
    fn matrix_market_coordinates() {
        let text = "%%MatrixMarket matrix coordinate pattern symmetric\n% comment\n5 5 2\n2 1\n3 2\n";
        let g = parse_str(text, Format::Auto).unwrap();
        assert_eq!((g.n(), g.m()), (5, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let err = parse_graph("/nonexistent/graph.edges", Format::Auto).unwrap_err();
        assert!(matches!(err, ParseError::Io { .. }));
    }
}
