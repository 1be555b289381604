//! Whitespace edge-list format: a header line `n m`, then `m` lines `u v`
//! with 0-indexed endpoints. Blank lines and `#` comments are ignored.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        reason: reason.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let [n, m] = two_numbers(hline, header)?;
    if n == 0 {
        return Err(err(hline, "graphs need at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(err(
            hline,
            format!("n = {n} exceeds the limit of {MAX_VERTICES}"),
        ));
    }
    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (line, body) in lines {
        let [u, v] = two_numbers(line, body)?;
        if u >= n || v >= n {
            return Err(err(line, format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line, "self-loop"));
        }
        if g.has_edge(u, v) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(err(
            hline,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

fn two_numbers(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(
            line,
            format!("expected two integers, found {:?}", body),
        ));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| err(line, format!("`{s}` is not a nonnegative integer")))
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
