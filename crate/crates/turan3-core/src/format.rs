//! The text graph format.
//!
//! First line `n m`, then `m` lines `a b c` with 0-based ascending vertex
//! indices. Anything from `#` to end of line is a comment; blank lines are
//! ignored. Emission is bit-exact: edges in slot order, single spaces,
//! trailing newline.

use crate::hypergraph::Hypergraph3;
use thiserror::Error;

#[derive(Debug, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<Hypergraph3, ParseError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    });

    let (header_line, header) = lines.next().ok_or_else(|| err(0, "empty input"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .ok_or_else(|| err(header_line, "missing vertex count"))?
        .parse()
        .map_err(|_| err(header_line, "vertex count is not a number"))?;
    let m: usize = it
        .next()
        .ok_or_else(|| err(header_line, "missing edge count"))?
        .parse()
        .map_err(|_| err(header_line, "edge count is not a number"))?;
    if it.next().is_some() {
        return Err(err(header_line, "trailing tokens after \"n m\""));
    }

    let mut g = Hypergraph3::empty(n).map_err(|e| err(header_line, e.to_string()))?;
    let mut edges_read = 0usize;
    for (line, body) in lines {
        let mut v = [0u8; 3];
        let mut it = body.split_whitespace();
        for slot in &mut v {
            *slot = it
                .next()
                .ok_or_else(|| err(line, "edge line needs three vertex indices"))?
                .parse()
                .map_err(|_| err(line, "vertex index is not a number"))?;
        }
        if it.next().is_some() {
            return Err(err(line, "trailing tokens after triple"));
        }
        if !(v[0] < v[1] && v[1] < v[2]) {
            return Err(err(
                line,
                format!(
                    "vertices must be strictly ascending: {} {} {}",
                    v[0], v[1], v[2]
                ),
            ));
        }
        g.add_edge(v[0], v[1], v[2])
            .map_err(|e| err(line, e.to_string()))?;
        edges_read += 1;
    }
    if edges_read != m {
        return Err(err(
            0,
            format!("header announced {m} edges, found {edges_read}"),
        ));
    }
    Ok(g)
}

pub fn emit(g: &Hypergraph3) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (a, b, c) in g.edges() {
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Hypergraph3::new(5, &[[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4]]).unwrap();
        let text = emit(&g);
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blanks() {
        let text = "# a comment\n5 2\n\n0 1 2  # inline\n1 2 3\n";
        let g = parse(text).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 2));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse("4 1\n0 0 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse("4 1\n2 1 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("ascending"));
        let e = parse("4 2\n0 1 2\n").unwrap_err();
        assert!(e.msg.contains("announced"));
        let e = parse("x 1\n").unwrap_err();
        assert_eq!(e.line, 1);
    }
}
