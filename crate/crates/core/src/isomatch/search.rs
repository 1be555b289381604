use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};
use std::time::Instant;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};
use crate::invariants::{
    certificate, compare_certificates, neighbor_sum_refinement, walk_diagonal_table_mod,
    CertificateComparison, InvariantTable,
};
use crate::matrix::WalkPowers;

use super::{verify_isomorphism, IsoResult, SearchStats, Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Highest walk length used for invariants; defaults to `n`.
    pub kmax: Option<usize>,
    /// Neighbor-sum refinement rounds applied to the walk vectors.
    pub rounds: usize,
    /// Maximum number of backtracking nodes before giving up.
    pub budget: u64,
    /// If set, compare residue certificates before the exact ones.
    pub modulus: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            kmax: None,
            rounds: 2,
            budget: 10_000_000,
            modulus: None,
        }
    }
}

/// Class labels shared by two graphs: vertices of either graph get the same
/// label iff their refined invariants agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClasses {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub count: usize,
}

impl VertexClasses {
    /// Same number of vertices in every class on both sides.
    pub fn balanced(&self) -> bool {
        let mut tally = vec![0i64; self.count];
        for &c in &self.first {
            tally[c] += 1;
        }
        for &c in &self.second {
            tally[c] -= 1;
        }
        tally.iter().all(|&t| t == 0)
    }
}

/// Diagonal table plus, per vertex, the sorted fingerprints of its
/// off-diagonal walk tuples. Fingerprints can only merge classes, never
/// split them, so the search stays complete.
fn walk_signatures(g: &Graph, kmax: usize) -> (InvariantTable<BigUint>, Vec<Vec<u64>>) {
    let n = g.n();
    let mut diag = Vec::with_capacity(kmax);
    let mut prints = vec![0u64; n * n];
    for m in WalkPowers::<BigUint>::new(g).take(kmax) {
        diag.push((0..n).map(|i| m[i * n + i].clone()).collect());
        for i in 0..n {
            for j in i + 1..n {
                let mut h = DefaultHasher::new();
                prints[i * n + j].hash(&mut h);
                m[i * n + j].hash(&mut h);
                prints[i * n + j] = h.finish();
            }
        }
    }
    let tuples = (0..n)
        .map(|i| {
            let mut t: Vec<u64> = (0..n)
                .filter(|&j| j != i)
                .map(|j| prints[i.min(j) * n + i.max(j)])
                .collect();
            t.sort_unstable();
            t
        })
        .collect();
    let table = InvariantTable::from_rows(n, diag).expect("rows have length n");
    (table, tuples)
}

type ClassKey = (Vec<BigUint>, Vec<u64>);

fn class_keys(
    g: &Graph,
    table: &InvariantTable<BigUint>,
    tuples: Vec<Vec<u64>>,
    rounds: usize,
) -> Result<Vec<ClassKey>> {
    let refined = neighbor_sum_refinement(g, &table.vertex_vectors(), rounds)?;
    Ok(refined.into_iter().zip(tuples).collect())
}

fn joint_classes(k1: Vec<ClassKey>, k2: Vec<ClassKey>) -> VertexClasses {
    let mut ids: BTreeMap<&ClassKey, usize> = k1.iter().chain(&k2).map(|k| (k, 0)).collect();
    for (id, v) in ids.values_mut().enumerate() {
        *v = id;
    }
    VertexClasses {
        first: k1.iter().map(|k| ids[k]).collect(),
        second: k2.iter().map(|k| ids[k]).collect(),
        count: ids.len(),
    }
}

/// Refined vertex classes for a pair of equal-size graphs.
pub fn vertex_classes(g1: &Graph, g2: &Graph, kmax: usize, rounds: usize) -> Result<VertexClasses> {
    if kmax == 0 {
        return Err(Error::InvalidArgument("kmax must be at least 1".into()));
    }
    let (t1, p1) = walk_signatures(g1, kmax);
    let (t2, p2) = walk_signatures(g2, kmax);
    Ok(joint_classes(
        class_keys(g1, &t1, p1, rounds)?,
        class_keys(g2, &t2, p2, rounds)?,
    ))
}

/// Decides whether `g1` and `g2` are isomorphic. A returned permutation maps
/// each vertex of `g1` to its image in `g2` and has been verified.
pub fn find_isomorphism(g1: &Graph, g2: &Graph, cfg: &SearchConfig) -> Result<IsoResult> {
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let verdict = decide(g1, g2, cfg, &mut stats)?;
    stats.elapsed = start.elapsed();
    Ok(IsoResult { verdict, stats })
}

fn decide(g1: &Graph, g2: &Graph, cfg: &SearchConfig, stats: &mut SearchStats) -> Result<Verdict> {
    let n = g1.n();
    let kmax = cfg.kmax.unwrap_or(n.max(1));
    if kmax == 0 {
        return Err(Error::InvalidArgument("kmax must be at least 1".into()));
    }
    if let Some(m) = cfg.modulus {
        let c1 = certificate(walk_diagonal_table_mod(g1, kmax, m)?.table());
        let c2 = certificate(walk_diagonal_table_mod(g2, kmax, m)?.table());
        if let CertificateComparison::Distinct(difference) = compare_certificates(&c1, &c2) {
            return Ok(Verdict::NotIsomorphic(Witness::ModularCertificate {
                modulus: m.to_string(),
                difference,
            }));
        }
    }
    let (t1, p1) = walk_signatures(g1, kmax);
    let (t2, p2) = walk_signatures(g2, kmax);
    let (c1, c2) = (certificate(&t1), certificate(&t2));
    if let CertificateComparison::Distinct(difference) = compare_certificates(&c1, &c2) {
        return Ok(Verdict::NotIsomorphic(Witness::Certificate { difference }));
    }
    if n == 0 {
        return Ok(Verdict::Isomorphic(Permutation::identity(0)));
    }

    let classes = joint_classes(
        class_keys(g1, &t1, p1, cfg.rounds)?,
        class_keys(g2, &t2, p2, cfg.rounds)?,
    );
    stats.classes = classes.count;
    if !classes.balanced() {
        return Ok(Verdict::NotIsomorphic(Witness::ClassMismatch));
    }

    // Components are paired greedily: any isomorphic partner works, since
    // isomorphism is an equivalence.
    let comps1 = keyed_components(g1, &t1);
    let comps2 = keyed_components(g2, &t2);
    let mut keys1: Vec<_> = comps1.iter().map(|c| &c.0).collect();
    let mut keys2: Vec<_> = comps2.iter().map(|c| &c.0).collect();
    keys1.sort();
    keys2.sort();
    if keys1 != keys2 {
        return Ok(Verdict::NotIsomorphic(Witness::ComponentMismatch));
    }

    let mut rank = vec![0; n];
    for (pos, &v) in c1.order().as_slice().iter().enumerate() {
        rank[v] = pos;
    }
    let mut image = vec![usize::MAX; n];
    let mut taken = vec![false; comps2.len()];
    let mut budget = Budget {
        left: cfg.budget,
        used: 0,
    };
    for (key, verts1) in &comps1 {
        let mut matched = false;
        for (idx, (key2, verts2)) in comps2.iter().enumerate() {
            if taken[idx] || key2 != key {
                continue;
            }
            let outcome = match_component(g1, g2, verts1, verts2, &classes, &rank, &mut budget);
            stats.nodes = budget.used;
            match outcome {
                Outcome::Found(local) => {
                    for (a, b) in local {
                        image[verts1[a]] = verts2[b];
                    }
                    taken[idx] = true;
                    matched = true;
                    break;
                }
                Outcome::Exhausted => {}
                Outcome::OutOfBudget => return Ok(Verdict::Inconclusive),
            }
        }
        if !matched {
            return Ok(Verdict::NotIsomorphic(Witness::ExhaustedSearch));
        }
    }
    let p = Permutation::new(image)?;
    if !verify_isomorphism(g1, g2, &p)? {
        return Err(Error::Integrity(
            "search produced a map that is not an isomorphism".into(),
        ));
    }
    Ok(Verdict::Isomorphic(p))
}

type ComponentKey = (usize, Vec<Vec<BigUint>>);

/// Components with their size and sorted walk vectors. Walks never leave a
/// component, so these equal the component's own certificate rows.
fn keyed_components(g: &Graph, t: &InvariantTable<BigUint>) -> Vec<(ComponentKey, Vec<usize>)> {
    g.connected_components()
        .into_iter()
        .map(|verts| {
            let mut rows: Vec<_> = verts.iter().map(|&v| t.vertex_vector(v)).collect();
            rows.sort();
            ((verts.len(), rows), verts)
        })
        .collect()
}

struct Budget {
    left: u64,
    used: u64,
}

enum Outcome {
    Found(Vec<(usize, usize)>),
    Exhausted,
    OutOfBudget,
}

fn match_component(
    g1: &Graph,
    g2: &Graph,
    verts1: &[usize],
    verts2: &[usize],
    classes: &VertexClasses,
    rank: &[usize],
    budget: &mut Budget,
) -> Outcome {
    let h1 = g1.induced_subgraph(verts1);
    let h2 = g2.induced_subgraph(verts2);
    let cls1: Vec<usize> = verts1.iter().map(|&v| classes.first[v]).collect();
    let cls2: Vec<usize> = verts2.iter().map(|&v| classes.second[v]).collect();
    let rank1: Vec<usize> = verts1.iter().map(|&v| rank[v]).collect();
    let m = h1.n();

    let mut size = vec![0usize; classes.count];
    for &c in &cls1 {
        size[c] += 1;
    }
    let order = search_order(&h1, &cls1, &size, &rank1);
    let mut depth_of = vec![0; m];
    for (d, &v) in order.iter().enumerate() {
        depth_of[v] = d;
    }
    // earliest placed neighbor, used to restrict candidates
    let anchor: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(d, &v)| {
            h1.neighbors(v)
                .filter(|&u| depth_of[u] < d)
                .min_by_key(|&u| depth_of[u])
        })
        .collect();

    let mut img = vec![usize::MAX; m];
    let mut used = vec![false; m];
    let candidates = |d: usize, img: &[usize], used: &[bool]| -> Vec<usize> {
        let v = order[d];
        let pool: Vec<usize> = match anchor[d] {
            Some(a) => h2.neighbors(img[a]).collect(),
            None => (0..m).collect(),
        };
        pool.into_iter()
            .filter(|&w| !used[w] && cls2[w] == cls1[v])
            .collect()
    };
    let consistent = |d: usize, w: usize, img: &[usize]| -> bool {
        let v = order[d];
        order[..d]
            .iter()
            .all(|&u| h1.has_edge(v, u) == h2.has_edge(w, img[u]))
    };

    let mut stack = vec![(candidates(0, &img, &used), 0usize)];
    loop {
        let d = stack.len() - 1;
        let (cands, pos) = stack.last_mut().expect("non-empty stack");
        if *pos < cands.len() {
            let w = cands[*pos];
            *pos += 1;
            if budget.used >= budget.left {
                return Outcome::OutOfBudget;
            }
            budget.used += 1;
            if consistent(d, w, &img) {
                img[order[d]] = w;
                used[w] = true;
                if d + 1 == m {
                    return Outcome::Found((0..m).map(|v| (v, img[v])).collect());
                }
                let next = candidates(d + 1, &img, &used);
                stack.push((next, 0));
            }
        } else {
            stack.pop();
            if stack.is_empty() {
                return Outcome::Exhausted;
            }
            let prev = order[d - 1];
            used[img[prev]] = false;
            img[prev] = usize::MAX;
        }
    }
}

/// Smallest class first, then grow through neighbors of placed vertices,
/// preferring small classes and many placed neighbors.
fn search_order(g: &Graph, cls: &[usize], size: &[usize], rank: &[usize]) -> Vec<usize> {
    let m = g.n();
    let mut placed = vec![false; m];
    let mut links = vec![0usize; m];
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let frontier = (0..m).filter(|&v| !placed[v] && links[v] > 0);
        let next = frontier
            .min_by_key(|&v| (size[cls[v]], std::cmp::Reverse(links[v]), rank[v]))
            .or_else(|| {
                (0..m)
                    .filter(|&v| !placed[v])
                    .min_by_key(|&v| (size[cls[v]], rank[v]))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for u in g.neighbors(next) {
            links[u] += 1;
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{apply_permutation, random_graph, rook_graph, shrikhande_graph};
    use crate::invariants::Difference;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn run(g1: &Graph, g2: &Graph) -> IsoResult {
        find_isomorphism(g1, g2, &SearchConfig::default()).unwrap()
    }

    #[test]
    fn relabeled_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for seed in 0..40 {
            let n = 5 + (seed as usize % 20);
            let g = random_graph(n, 0.3, seed).unwrap();
            let p = Permutation::random(n, &mut rng);
            let h = apply_permutation(&g, &p).unwrap();
            match run(&g, &h).verdict {
                Verdict::Isomorphic(q) => assert!(verify_isomorphism(&g, &h, &q).unwrap()),
                other => panic!("seed {seed}: {other:?}"),
            }
        }
    }

    #[test]
    fn cospectral_strongly_regular_pair_needs_search() {
        let r = run(&shrikhande_graph(), &rook_graph(4));
        assert_eq!(r.verdict, Verdict::NotIsomorphic(Witness::ExhaustedSearch));
        assert!(r.stats.nodes > 0);
        assert_eq!(r.stats.classes, 1);
        let s = shrikhande_graph();
        let p = Permutation::new((0..16).rev().collect()).unwrap();
        assert!(run(&s, &apply_permutation(&s, &p).unwrap()).is_isomorphic());
    }

    #[test]
    fn certificate_rejects() {
        let r = run(&Graph::path(4), &Graph::cycle(4));
        assert!(matches!(
            r.verdict,
            Verdict::NotIsomorphic(Witness::Certificate { .. })
        ));
        let r = run(&Graph::path(4), &Graph::path(5));
        assert_eq!(
            r.verdict,
            Verdict::NotIsomorphic(Witness::Certificate {
                difference: Difference::Shape
            })
        );
        let cfg = SearchConfig {
            modulus: Some(97),
            ..SearchConfig::default()
        };
        let r = find_isomorphism(&Graph::path(4), &Graph::cycle(4), &cfg).unwrap();
        assert!(matches!(
            r.verdict,
            Verdict::NotIsomorphic(Witness::ModularCertificate { .. })
        ));
    }

    #[test]
    fn disconnected_graphs() {
        let two_c3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let swapped =
            Graph::from_edges(6, &[(5, 1), (1, 3), (5, 3), (0, 4), (4, 2), (0, 2)]).unwrap();
        let r = run(&two_c3, &swapped);
        assert!(r.is_isomorphic());

        // both 2-regular and triangle-free; length-4 walks separate them
        let c4c4 = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
            ],
        )
        .unwrap();
        assert!(!run(&c4c4, &Graph::cycle(8)).is_isomorphic());

        let e = Graph::empty(30);
        assert!(run(&e, &e).is_isomorphic());
        assert!(run(&Graph::empty(0), &Graph::empty(0)).is_isomorphic());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let cfg = SearchConfig {
            budget: 3,
            ..SearchConfig::default()
        };
        let r = find_isomorphism(&shrikhande_graph(), &rook_graph(4), &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert_eq!(r.stats.nodes, 3);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for seed in 0..150u64 {
            let g = random_graph(7, 0.5, seed).unwrap();
            let h = random_graph(7, 0.5, seed + 1000).unwrap();
            let fast = run(&g, &h).is_isomorphic();
            let slow = super::super::brute_force_isomorphism(&g, &h)
                .unwrap()
                .is_some();
            assert_eq!(fast, slow, "seed {seed}");
        }
    }

    #[test]
    fn classes_are_joint() {
        let g = Graph::path(3);
        let c = vertex_classes(&g, &g, 3, 1).unwrap();
        assert_eq!(c.first, c.second);
        assert_eq!(c.count, 2);
        assert!(c.balanced());
    }
}
