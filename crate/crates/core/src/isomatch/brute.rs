use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};

use super::verify_isomorphism;

pub const BRUTE_FORCE_LIMIT: usize = 10;

/// First permutation, in lexicographic order of `(p(0), p(1), ...)`, that
/// maps `g1` onto `g2`. Images with the wrong degree are skipped.
pub fn brute_force_isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Permutation>> {
    let n = g1.n().max(g2.n());
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if g1.n() != g2.n() {
        return Ok(None);
    }
    let (d1, d2) = (g1.degrees(), g2.degrees());
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(extend(g1, g2, &d1, &d2, &mut map, &mut used))
}

fn extend(
    g1: &Graph,
    g2: &Graph,
    d1: &[usize],
    d2: &[usize],
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<Permutation> {
    let i = map.len();
    if i == g1.n() {
        let p = Permutation::new(map.clone()).expect("distinct images");
        return verify_isomorphism(g1, g2, &p).unwrap_or(false).then_some(p);
    }
    for w in 0..g2.n() {
        if used[w] || d1[i] != d2[w] {
            continue;
        }
        used[w] = true;
        map.push(w);
        if let Some(p) = extend(g1, g2, d1, d2, map, used) {
            return Some(p);
        }
        map.pop();
        used[w] = false;
    }
    None
}
