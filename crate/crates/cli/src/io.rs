//! Edge-list files.
//!
//! ```text
//! # comment lines start with '#', blank lines are ignored
//! 4 4        <- "n m"
//! 0 1        <- m lines "u v", 0-based endpoints
//! 1 2
//! 2 3
//! 0 3
//! ```
//!
//! Anywhere a path is accepted, `builtin:<name>` names one of the standard
//! graphs in [`BUILTINS`].

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use cvejoin::graph::{complete, complete_bipartite, cycle, petersen};
use cvejoin::{Graph, GraphError};
use thiserror::Error;

pub const BUILTIN_PREFIX: &str = "builtin:";

/// Names accepted after `builtin:`.
pub const BUILTINS: [&str; 9] = ["c3", "c4", "c5", "c6", "k2", "k3", "k4", "k33", "petersen"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header \"n m\"")]
    MissingHeader,
    #[error("expected two non-negative integers, found {0:?}")]
    Malformed(String),
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A syntax or validity error, tagged with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("unknown builtin graph {0:?} (known: {known})", known = BUILTINS.join(", "))]
    UnknownBuiltin(String),
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let malformed = || ParseError {
        line,
        kind: ParseErrorKind::Malformed(text.to_string()),
    };
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(malformed()),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let (n, m) = pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen: HashMap<(usize, usize), usize> = HashMap::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = pair(line, text)?;
        let err = |e: GraphError| ParseError {
            line,
            kind: e.into(),
        };
        if u >= n || v >= n {
            return Err(err(GraphError::EndpointOutOfRange { u, v, n }));
        }
        if u == v {
            return Err(err(GraphError::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key, line).is_some() {
            return Err(err(GraphError::DuplicateEdge(key.0, key.1)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError {
            line: header_line,
            kind: ParseErrorKind::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            },
        });
    }
    Ok(Graph::new(n, &edges).expect("edges validated line by line"))
}

/// Serializes `g` with optional leading comment lines. Edges are written in
/// the graph's canonical order, so parsing the output gives back `g`.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn builtin(name: &str) -> Option<Graph> {
    let g = match name {
        "c3" => cycle(3),
        "c4" => cycle(4),
        "c5" => cycle(5),
        "c6" => cycle(6),
        "k2" => complete(2),
        "k3" => complete(3),
        "k4" => complete(4),
        "k33" => complete_bipartite(3, 3),
        "petersen" => Ok(petersen()),
        _ => return None,
    };
    Some(g.expect("builtin sizes are valid"))
}

/// Reads a graph from a file path or a `builtin:` name.
pub fn load_graph(source: &str) -> Result<Graph, InputError> {
    if let Some(name) = source.strip_prefix(BUILTIN_PREFIX) {
        return builtin(name).ok_or_else(|| InputError::UnknownBuiltin(name.to_string()));
    }
    let path = Path::new(source);
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(&text).map_err(|source| InputError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let g = parse_edge_list("# square\n\n4 4\n0 1\n# mid\n1 2\n2 3\n\n3 0\n").unwrap();
        assert_eq!(g, cycle(4).unwrap());
    }

    #[test]
    fn self_loop_names_line() {
        let e = parse_edge_list("2 1\n0 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::Graph(GraphError::SelfLoop(0)));
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(
            parse_edge_list("").unwrap_err().kind,
            ParseErrorKind::MissingHeader
        );
        assert_eq!(parse_edge_list("3 1\n0 1 2\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 x\n").unwrap_err().line, 1);
        let e = parse_edge_list("3 2\n0 1\n# c\n1 0\n").unwrap_err();
        assert_eq!(
            (e.line, e.kind),
            (4, ParseErrorKind::Graph(GraphError::DuplicateEdge(0, 1)))
        );
        let e = parse_edge_list("#\n3 2\n0 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(
            e.kind,
            ParseErrorKind::EdgeCountMismatch {
                declared: 2,
                found: 1
            }
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n").unwrap_err().kind,
            ParseErrorKind::Graph(GraphError::EndpointOutOfRange { .. })
        ));
    }

    #[test]
    fn builtins_resolve() {
        for name in BUILTINS {
            assert!(load_graph(&format!("builtin:{name}")).is_ok(), "{name}");
        }
        assert!(matches!(
            load_graph("builtin:k5"),
            Err(InputError::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn round_trip_with_comments() {
        let g = petersen();
        let text = write_edge_list(&g, &["a\nb".to_string()]);
        assert!(text.starts_with("# a\n# b\n10 15\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
