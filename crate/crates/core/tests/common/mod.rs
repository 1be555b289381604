//! Oracles and corpora shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use closedwalk::graph::{apply_permutation, is_connected};
use closedwalk::{Graph, Permutation};

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Every labeled graph on `n` vertices; bit `b` of the mask is pair `b`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    (0u64..1 << ps.len()).map(move |mask| from_mask(n, &ps, mask))
}

fn from_mask(n: usize, ps: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for (b, &(i, j)) in ps.iter().enumerate() {
        if mask >> b & 1 == 1 {
            g.add_edge(i, j);
        }
    }
    g
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest edge mask over all relabelings; equal iff isomorphic.
pub fn canonical_mask(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let ps = pairs(g.n());
    perms
        .iter()
        .map(|p| {
            ps.iter()
                .enumerate()
                .filter(|(_, &(i, j))| g.has_edge(p[i], p[j]))
                .fold(0u64, |m, (b, _)| m | 1 << b)
        })
        .min()
        .unwrap_or(0)
}

/// One representative per isomorphism class on `n` vertices, ordered by
/// canonical mask.
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    let perms = all_permutations(n);
    let ps = pairs(n);
    let mut reps = BTreeMap::new();
    for mask in 0u64..1 << ps.len() {
        let g = from_mask(n, &ps, mask);
        reps.entry(canonical_mask(&g, &perms)).or_insert(g);
    }
    reps.into_values().collect()
}

pub fn connected_classes(n: usize) -> Vec<Graph> {
    isomorphism_classes(n)
        .into_iter()
        .filter(is_connected)
        .collect()
}

pub fn relabel(g: &Graph, p: &Permutation) -> Graph {
    apply_permutation(g, p).expect("sizes match")
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn random_prime_61<R: rand::Rng>(rng: &mut R) -> u64 {
    loop {
        let c = rng.random_range(1u64 << 60..1u64 << 61) | 1;
        if is_prime(c) {
            return c;
        }
    }
}

/// Random tree by attaching each vertex to an earlier one.
pub fn random_tree<R: rand::Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(rng.random_range(0..v), v);
    }
    g
}
