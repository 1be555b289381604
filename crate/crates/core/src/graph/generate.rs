//! Random graphs and named fixtures.
//!
//! `random_graph` draws from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha),
//! visiting unordered pairs in the order `(0,1), (0,2), ..., (0,n-1), (1,2), ...`
//! and keeping a pair iff a uniform `f64` in `[0, 1)` is below `p`. ChaCha8
//! output and the `seed_from_u64` expansion are fixed by their crates, so the
//! same `(n, p, seed)` yields the same graph on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("random graph needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Shrikhande graph: Cayley graph of Z4 x Z4 with connection set
/// `{±(1,0), ±(0,1), ±(1,1)}`. Vertex `(a, b)` has index `4a + b`.
pub fn shrikhande_graph() -> Graph {
    let gens = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    let mut g = Graph::empty(16);
    for a in 0..4 {
        for b in 0..4 {
            for &(da, db) in &gens {
                let (c, d) = ((a + da) % 4, (b + db) % 4);
                let (u, v) = (4 * a + b, 4 * c + d);
                if u < v {
                    g.add_edge(u, v);
                }
            }
        }
    }
    g
}

/// Rook's graph `K_m □ K_m`: cells of an `m x m` board, adjacent when they
/// share a row or a column. Cell `(a, b)` has index `m*a + b`.
pub fn rook_graph(m: usize) -> Graph {
    let mut g = Graph::empty(m * m);
    for u in 0..m * m {
        for v in u + 1..m * m {
            if (u / m == v / m) != (u % m == v % m) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn petersen_graph() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

pub const FIXTURE_NAMES: &[&str] = &[
    "shrikhande",
    "rook44",
    "petersen",
    "kN",
    "pathN",
    "cycleN",
    "emptyN",
];

/// Named fixture: `shrikhande`, `rook44`, `petersen`, or `kN` / `pathN` /
/// `cycleN` / `emptyN` for a positive integer `N`.
pub fn fixture(name: &str) -> Result<Graph> {
    match name {
        "shrikhande" => return Ok(shrikhande_graph()),
        "rook44" => return Ok(rook_graph(4)),
        "petersen" => return Ok(petersen_graph()),
        _ => {}
    }
    let sized: [(&str, fn(usize) -> Graph); 4] = [
        ("k", Graph::complete),
        ("path", Graph::path),
        ("cycle", Graph::cycle),
        ("empty", Graph::empty),
    ];
    for (prefix, build) in sized {
        if let Some(n) = name
            .strip_prefix(prefix)
            .and_then(|s| s.parse::<usize>().ok())
        {
            if n == 0 || n > super::MAX_VERTICES {
                return Err(Error::InvalidArgument(format!(
                    "fixture size {n} out of range"
                )));
            }
            return Ok(build(n));
        }
    }
    Err(Error::InvalidArgument(format!(
        "unknown fixture `{name}` (known: {})",
        FIXTURE_NAMES.join(", ")
    )))
}
