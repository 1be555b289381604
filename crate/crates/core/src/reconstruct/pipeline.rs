use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use super::signs::assign_signs_filtered;
use super::vandermonde::SolveError;
use super::{
    solve_v_squares, spectrum_from_polynomial, ReconstructionResult, ReconstructionStatus,
    Tolerances,
};
use crate::charpoly::{charpoly_from_traces, power_traces, TraceSequence};
use crate::error::{Error, Result};
use crate::invariants::{walk_diagonal_table, InvariantTable};
use crate::scalar::Real;

/// Traces, then Newton's identities, then exact roots, then one Vandermonde
/// solve per vertex, then the sign search. A graph is only reported when its
/// exact walk table equals `t`.
pub fn reconstruct_adjacency<T: Real>(
    t: &InvariantTable<BigUint>,
    tol: &Tolerances,
) -> Result<ReconstructionResult<T>> {
    let n = t.n();
    if n == 0 {
        return Err(Error::InvalidArgument("empty table".into()));
    }
    if t.kmax() < n {
        return Err(Error::InsufficientPowers {
            required: n,
            available: t.kmax(),
        });
    }
    use ReconstructionStatus::*;

    let traces: TraceSequence<BigInt> = power_traces(t);
    let p = match charpoly_from_traces(&traces, n) {
        Ok(p) => p,
        Err(e) => return Ok(ReconstructionResult::failed(Failure, e.to_string())),
    };
    let spec = match spectrum_from_polynomial::<T>(&p, tol.gap) {
        Ok(s) => s,
        Err(e) => {
            return Ok(ReconstructionResult::failed(
                Failure,
                format!("eigenvalues: {e}"),
            ))
        }
    };
    if spec.is_degenerate() {
        let note = if spec.is_empty() {
            "characteristic polynomial has a repeated root"
        } else {
            "eigenvalue gap below tolerance"
        };
        return Ok(ReconstructionResult::failed(NonGenericSpectrum, note).with_spectrum(&spec));
    }

    let mut vsq = Vec::with_capacity(n);
    let mut worst: Option<f64> = None;
    for i in 0..n {
        let walks: Vec<T> = t
            .vertex_vector(i)
            .iter()
            .map(|x| T::of_f64(ToPrimitive::to_f64(x).unwrap_or(f64::INFINITY)))
            .collect();
        match solve_v_squares(&spec, &walks, tol) {
            Ok(s) => {
                if let Some(r) = s.residual {
                    worst = Some(worst.map_or(r, |w| w.max(r)));
                }
                vsq.push(s.weights);
            }
            Err(SolveError::NonGeneric) => {
                return Ok(
                    ReconstructionResult::failed(NonGenericSpectrum, "repeated eigenvalue")
                        .with_spectrum(&spec),
                )
            }
            Err(e) => {
                return Ok(
                    ReconstructionResult::failed(Failure, format!("vertex {i}: {e:?}"))
                        .with_spectrum(&spec),
                )
            }
        }
    }

    let exact = |g: &crate::graph::Graph| {
        walk_diagonal_table::<BigUint>(g, t.kmax()).is_ok_and(|mine| &mine == t)
    };
    let mut result = assign_signs_filtered(&vsq, &spec, tol, exact);
    result.residuals.vandermonde = worst;

    if let (Success, Some(g)) = (result.status, &result.adj) {
        if n > 1 {
            if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
                result.status = Failure;
                result.note = Some(format!(
                    "vertex {v} is isolated: input graph is disconnected"
                ));
                result.adj = None;
                result.v = None;
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_connected, petersen_graph, random_graph, write_graph6, Graph};
    use crate::WalkTable;

    fn run(g: &Graph) -> ReconstructionResult<f64> {
        let t: WalkTable = walk_diagonal_table(g, g.n()).unwrap();
        reconstruct_adjacency(&t, &Tolerances::default()).unwrap()
    }

    #[test]
    fn small_examples() {
        let r = run(&Graph::complete(2));
        assert_eq!(r.status, ReconstructionStatus::Success);
        assert_eq!(r.adj, Some(Graph::complete(2)));

        let r = run(&Graph::path(3));
        assert_eq!(r.status, ReconstructionStatus::Success);
        assert_eq!(write_graph6(r.adj.as_ref().unwrap()), "Bg");

        for g in [
            Graph::complete(3),
            Graph::complete(4),
            Graph::cycle(4),
            petersen_graph(),
        ] {
            assert_eq!(
                run(&g).status,
                ReconstructionStatus::NonGenericSpectrum,
                "{g:?}"
            );
        }
    }

    fn has_twin_vectors(g: &Graph) -> bool {
        let t: WalkTable = walk_diagonal_table(g, g.n()).unwrap();
        let mut v = t.vertex_vectors();
        v.sort();
        v.windows(2).any(|w| w[0] == w[1])
    }

    #[test]
    fn random_graphs_rebuild_exactly() {
        let mut success = 0;
        for seed in 0..80 {
            let g = random_graph(7, 0.5, 3000 + seed).unwrap();
            if !is_connected(&g) {
                continue;
            }
            let r = run(&g);
            match r.status {
                ReconstructionStatus::Success => {
                    success += 1;
                    assert_eq!(r.adj.unwrap(), g);
                }
                ReconstructionStatus::NonGenericSpectrum => {}
                ReconstructionStatus::SignAmbiguity => {
                    // only possible when two vertices cannot be told apart
                    assert!(has_twin_vectors(&g), "seed {seed}");
                    assert!(r.alternatives.contains(&g));
                    assert!(r.adj.is_none());
                }
                ReconstructionStatus::Failure => panic!("seed {seed}: {:?}", r.note),
            }
        }
        assert!(success > 20);
    }

    #[test]
    fn distinct_vectors_always_succeed() {
        let mut checked = 0;
        for seed in 0..300 {
            let g = random_graph(7, 0.5, seed).unwrap();
            if !is_connected(&g) || has_twin_vectors(&g) {
                continue;
            }
            let r = run(&g);
            if r.status == ReconstructionStatus::NonGenericSpectrum {
                continue;
            }
            checked += 1;
            assert_eq!(r.status, ReconstructionStatus::Success, "seed {seed}");
            assert_eq!(r.adj.unwrap(), g);
            assert!(r.residuals.orthogonality.unwrap() < 1e-6);
        }
        assert!(checked > 50);
    }

    #[test]
    fn insufficient_powers() {
        let t: WalkTable = walk_diagonal_table(&Graph::path(4), 3).unwrap();
        assert!(reconstruct_adjacency::<f64>(&t, &Tolerances::default()).is_err());
    }

    #[test]
    fn disconnected_with_simple_spectrum() {
        // K2 + P3: eigenvalues ±1, ±√2, 0, all distinct
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let r = run(&g);
        assert_ne!(r.status, ReconstructionStatus::NonGenericSpectrum);
        if r.status == ReconstructionStatus::Success {
            assert_eq!(r.adj, Some(g));
        }
    }

    #[test]
    fn isolated_vertex_reported() {
        // P3 + K1: spectrum √2, 0, 0, -√2 repeats 0
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(run(&g).status, ReconstructionStatus::NonGenericSpectrum);
    }
}
