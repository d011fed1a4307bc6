//! Edge-list text: a header line `n m`, then `m` lines `u v` (0-based).
//! Tokens are whitespace separated and `#` starts a comment.

use super::Graph;
use crate::error::ParseError;
use std::fmt::Write;

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::at_line(1, "missing 'n m' header"))?;
    let (n, m) = pair(hline, header)?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (lineno, line) in lines {
        let (u, v) = pair(lineno, line)?;
        if u >= n || v >= n {
            return Err(ParseError::at_line(
                lineno,
                format!("endpoint out of range for order {n}"),
            ));
        }
        if u == v {
            return Err(ParseError::at_line(lineno, "self-loop"));
        }
        if g.has_edge(u, v) {
            return Err(ParseError::at_line(
                lineno,
                format!("repeated edge {u} {v}"),
            ));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(ParseError::at_line(
            hline,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

fn pair(lineno: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let mut toks = line.split_whitespace();
    let mut next = || {
        toks.next()
            .ok_or_else(|| ParseError::at_line(lineno, "expected two integers"))?
            .parse::<usize>()
            .map_err(|e| ParseError::at_line(lineno, e.to_string()))
    };
    let a = next()?;
    let b = next()?;
    if toks.next().is_some() {
        return Err(ParseError::at_line(lineno, "trailing tokens"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    #[test]
    fn round_trip_with_comments() {
        let g = build_family(&FamilySpec::petersen()).unwrap();
        let text = format!("# petersen\n{}", write_edge_list(&g));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        let odd = "3 2 # header\n0 1\n\n  1   2 # trailing\n";
        assert_eq!(parse_edge_list(odd).unwrap().edge_count(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_edge_list("3 1\n0 3\n").unwrap_err().position, 2);
        assert_eq!(parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err().position, 3);
        assert_eq!(parse_edge_list("3 2\n0 1\n").unwrap_err().position, 1);
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
        assert!(parse_edge_list("# only comments\n").is_err());
    }
}
