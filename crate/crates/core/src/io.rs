//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines anywhere
//! n m
//! u v c      (m lines, c is -1 or 1)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Sign};

pub fn parse_edge_list(text: &str) -> Result<ColoredGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let nums = parse_ints(header_line, header, 2)?;
    let (n, m) = (to_count(header_line, nums[0])?, to_count(header_line, nums[1])?);

    let mut triples = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, body) in lines.by_ref() {
        if triples.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the {m} declared edges"),
            });
        }
        let nums = parse_ints(line, body, 3)?;
        let (u, v) = (to_count(line, nums[0])?, to_count(line, nums[1])?);
        let sign = Sign::from_value(nums[2]).ok_or_else(|| Error::Parse {
            line,
            message: format!("colour {} is not -1 or 1", nums[2]),
        })?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("vertex out of range 0..{n}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("loop at vertex {u}"),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {u} {v}"),
            });
        }
        triples.push((u, v, sign));
    }
    if triples.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("declared {m} edges, found {}", triples.len()),
        });
    }
    ColoredGraph::new(n, triples)
}

fn parse_ints(line: usize, body: &str, expected: usize) -> Result<Vec<i64>> {
    let nums = body
        .split_whitespace()
        .map(|t| {
            t.parse::<i64>().map_err(|_| Error::Parse {
                line,
                message: format!("`{t}` is not an integer"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if nums.len() != expected {
        return Err(Error::Parse {
            line,
            message: format!("expected {expected} integers, found {}", nums.len()),
        });
    }
    Ok(nums)
}

fn to_count(line: usize, x: i64) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::Parse {
        line,
        message: format!("{x} is negative"),
    })
}

/// Serialises in canonical edge order with optional leading comment lines.
pub fn write_edge_list(g: &ColoredGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (e, s) in g.edges().iter().zip(g.signs()) {
        let _ = writeln!(out, "{} {} {}", e.u(), e.v(), s.value());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1 -1\n# mid\n1 2 1\n2 0 1\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.census().e_minus, 1);
        assert_eq!(write_edge_list(&g, &[]), "3 3\n0 1 -1\n0 2 1\n1 2 1\n");
    }

    #[test]
    fn reports_line_numbers() {
        let cases = [
            ("2 1\n0 1 0\n", 2),
            ("3 2\n0 1 1\n1 1 1\n", 3),
            ("3 2\n0 1 1\n1 0 -1\n", 3),
            ("3 1\n0 5 1\n", 2),
            ("3 1\n0 x 1\n", 2),
            ("3 1\n0 1\n", 2),
        ];
        for (text, line) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(parse_edge_list("3 2\n0 1 1\n").is_err());
        assert!(parse_edge_list("").is_err());
    }
}
