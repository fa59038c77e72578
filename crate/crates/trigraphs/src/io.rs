//! The `.tri` text format.
//!
//! Header line `trigraph <n>`, then one line per pair `u v s` with
//! `s ∈ {+, 0, -}`. Pairs omitted default to `-`. `#` starts a comment.
//! Vertices are 0-indexed. Writers emit all pairs with `s ≠ -`, in colex
//! order.

use crate::error::{Error, Result};
use crate::trigraph::{AdjValue, Trigraph, MAX_VERTICES};

pub fn parse_tri(input: &str) -> Result<Trigraph> {
    let mut g: Option<Trigraph> = None;
    let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match &mut g {
            None => {
                if tokens.len() != 2 || tokens[0] != "trigraph" {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected header `trigraph <n>`".into(),
                    });
                }
                let n: usize = tokens[1].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex count `{}`", tokens[1]),
                })?;
                if n > MAX_VERTICES {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("vertex count {n} exceeds the supported maximum {MAX_VERTICES}"),
                    });
                }
                g = Some(Trigraph::new(n));
            }
            Some(g) => {
                if tokens.len() != 3 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected pair line `u v s`".into(),
                    });
                }
                let u: usize = tokens[0].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex `{}`", tokens[0]),
                })?;
                let v: usize = tokens[1].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex `{}`", tokens[1]),
                })?;
                if u >= g.vertex_count() || v >= g.vertex_count() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("vertex out of range in pair {u} {v}"),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("self-pair {u} {u}"),
                    });
                }
                let sym = tokens[2];
                let value = sym
                    .chars()
                    .next()
                    .filter(|_| sym.len() == 1)
                    .and_then(AdjValue::from_symbol)
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        msg: format!("bad adjacency symbol `{sym}` (want +, 0, or -)"),
                    })?;
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("duplicate pair {} {}", key.0, key.1),
                    });
                }
                g.set(u, v, value);
            }
        }
    }
    g.ok_or(Error::Parse { line: 0, msg: "empty input: missing `trigraph <n>` header".into() })
}

pub fn write_tri(g: &Trigraph) -> String {
    let mut out = format!("trigraph {}\n", g.vertex_count());
    for (u, v) in g.pairs() {
        let t = g.theta(u, v);
        if t != AdjValue::StronglyAntiAdjacent {
            out.push_str(&format!("{u} {v} {}\n", t.symbol()));
        }
    }
    out
}

pub fn read_tri_file(path: &str) -> Result<Trigraph> {
    let text = std::fs::read_to_string(path)?;
    parse_tri(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basics() {
        let g = parse_tri("# comment\ntrigraph 3\n0 1 +\n1 2 0 # trailing\n").unwrap();
        assert!(g.strongly_adjacent(0, 1));
        assert!(g.semi_adjacent(1, 2));
        assert!(g.strongly_anti_adjacent(0, 2));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_tri("").is_err());
        assert!(parse_tri("trigraph x\n").is_err());
        assert!(parse_tri("trigraph 2\n0 0 +\n").is_err());
        assert!(parse_tri("trigraph 2\n0 3 +\n").is_err());
        assert!(parse_tri("trigraph 2\n0 1 *\n").is_err());
        assert!(parse_tri("trigraph 2\n0 1 +\n1 0 -\n").is_err());
        assert!(parse_tri("0 1 +\n").is_err());
    }

    #[test]
    fn round_trip() {
        let g = parse_tri("trigraph 4\n0 1 +\n2 3 0\n").unwrap();
        let text = write_tri(&g);
        assert_eq!(parse_tri(&text).unwrap(), g);
    }
}
