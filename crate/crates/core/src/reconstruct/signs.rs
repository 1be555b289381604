//! Sign recovery for the eigenvector matrix.
//!
//! Flipping an eigenvector leaves `U Λ U^T` unchanged, so in each column the
//! first row with a nonzero entry (the anchor) is taken positive. The other
//! signs are searched row by row: for every earlier row `l`, the pair
//! `(Σ_j U_ij U_lj, Σ_j U_ij U_lj λ_j)` must land on `(0, 0)` or `(0, 1)`.
//! Partial sums are pruned against the total magnitude still undecided.

use super::{ReconstructionResult, ReconstructionStatus, Residuals, Spectrum, Tolerances};
use crate::graph::Graph;
use crate::scalar::Real;

struct Accepted<T> {
    u: Vec<Vec<T>>,
    graph: Graph,
    orthogonality: f64,
    rounding: f64,
}

struct Search<'a, T, F> {
    n: usize,
    mags: Vec<Vec<T>>,
    lambda: &'a [T],
    anchor: Vec<usize>,
    free: Vec<Vec<usize>>,
    u: Vec<Vec<T>>,
    tol: &'a Tolerances,
    accept: F,
    nodes: u64,
    exhausted_budget: bool,
    found: Vec<Accepted<T>>,
}

enum Flow {
    Continue,
    Stop,
}

impl<T: Real, F: Fn(&Graph) -> bool> Search<'_, T, F> {
    fn feasible(&self, o: &[T], a: &[T], ro: &[T], ra: &[T], complete: bool) -> bool {
        let otol = T::of_f64(self.tol.orthogonality);
        let rtol = T::of_f64(self.tol.rounding);
        (0..o.len()).all(|l| {
            let (slack_o, slack_a) = if complete {
                (otol, rtol)
            } else {
                (ro[l] + otol, ra[l] + rtol)
            };
            o[l].abs() <= slack_o && (a[l].abs() <= slack_a || (a[l] - T::one()).abs() <= slack_a)
        })
    }

    fn row(&mut self, i: usize) -> Flow {
        if i == self.n {
            self.leaf();
            return if self.found.len() >= self.tol.max_alternatives.max(2) {
                Flow::Stop
            } else {
                Flow::Continue
            };
        }
        let mut o = vec![T::zero(); i];
        let mut a = vec![T::zero(); i];
        let mut ro = vec![T::zero(); i];
        let mut ra = vec![T::zero(); i];
        for j in 0..self.n {
            let m = self.mags[i][j];
            if self.anchor[j] == i {
                self.u[i][j] = m;
            } else {
                self.u[i][j] = T::zero();
            }
            for l in 0..i {
                let p = m * self.u[l][j];
                if self.anchor[j] == i {
                    o[l] += p;
                    a[l] += p * self.lambda[j];
                } else {
                    ro[l] += p.abs();
                    ra[l] += (p * self.lambda[j]).abs();
                }
            }
        }
        self.position(i, 0, o, a, ro, ra)
    }

    fn position(
        &mut self,
        i: usize,
        p: usize,
        o: Vec<T>,
        a: Vec<T>,
        ro: Vec<T>,
        ra: Vec<T>,
    ) -> Flow {
        self.nodes += 1;
        if self.nodes > self.tol.sign_budget {
            self.exhausted_budget = true;
            return Flow::Stop;
        }
        let complete = p == self.free[i].len();
        if !self.feasible(&o, &a, &ro, &ra, complete) {
            return Flow::Continue;
        }
        if complete {
            return self.row(i + 1);
        }
        let j = self.free[i][p];
        let m = self.mags[i][j];
        for sign in [T::one(), -T::one()] {
            let v = sign * m;
            self.u[i][j] = v;
            let (mut o2, mut a2, mut ro2, mut ra2) = (o.clone(), a.clone(), ro.clone(), ra.clone());
            for l in 0..i {
                let prod = v * self.u[l][j];
                o2[l] += prod;
                a2[l] += prod * self.lambda[j];
                ro2[l] -= prod.abs();
                ra2[l] -= (prod * self.lambda[j]).abs();
            }
            if let Flow::Stop = self.position(i, p + 1, o2, a2, ro2, ra2) {
                return Flow::Stop;
            }
        }
        self.u[i][j] = T::zero();
        Flow::Continue
    }

    fn leaf(&mut self) {
        let n = self.n;
        let u = &self.u;
        let mut orth = 0.0f64;
        for j in 0..n {
            for k in 0..n {
                let dot: f64 = (0..n).map(|i| u[i][j].as_f64() * u[i][k].as_f64()).sum();
                let target = if j == k { 1.0 } else { 0.0 };
                orth = orth.max((dot - target).abs());
            }
        }
        if orth >= self.tol.orthogonality {
            return;
        }
        let mut g = Graph::empty(n);
        let mut rounding = 0.0f64;
        for i in 0..n {
            for l in i..n {
                let x: f64 = (0..n)
                    .map(|j| u[i][j].as_f64() * u[l][j].as_f64() * self.lambda[j].as_f64())
                    .sum();
                let r = x.round();
                rounding = rounding.max((x - r).abs());
                let allowed = if i == l {
                    r == 0.0
                } else {
                    r == 0.0 || r == 1.0
                };
                if !allowed || (x - r).abs() > self.tol.rounding {
                    return;
                }
                if i != l && r == 1.0 {
                    g.add_edge(i, l);
                }
            }
        }
        if self.found.iter().any(|s| s.graph == g) || !(self.accept)(&g) {
            return;
        }
        self.found.push(Accepted {
            u: self.u.clone(),
            graph: g,
            orthogonality: orth,
            rounding,
        });
    }
}

/// Searches sign patterns for `U` given the squared entries
/// `vsq[i][j] = U_ij^2` and the eigenvalues they belong to.
pub fn assign_signs<T: Real>(
    vsq: &[Vec<T>],
    spec: &Spectrum<T>,
    tol: &Tolerances,
) -> ReconstructionResult<T> {
    assign_signs_filtered(vsq, spec, tol, |_| true)
}

/// Like [`assign_signs`], but assignments whose rebuilt graph fails `accept`
/// are discarded as if they had never satisfied the numeric checks.
pub(crate) fn assign_signs_filtered<T: Real>(
    vsq: &[Vec<T>],
    spec: &Spectrum<T>,
    tol: &Tolerances,
    accept: impl Fn(&Graph) -> bool,
) -> ReconstructionResult<T> {
    let n = spec.len();
    let base = |status, note: &str| {
        let mut r = ReconstructionResult::failed(status, note).with_spectrum(spec);
        r.vsq = Some(vsq.to_vec());
        r
    };
    if vsq.len() != n || vsq.iter().any(|row| row.len() != n) {
        return base(
            ReconstructionStatus::Failure,
            "squared-entry matrix does not match the spectrum",
        );
    }
    if spec.is_degenerate() {
        return base(
            ReconstructionStatus::NonGenericSpectrum,
            "repeated eigenvalue",
        );
    }
    let zero = T::of_f64(tol.zero_entry);
    let mags: Vec<Vec<T>> = vsq
        .iter()
        .map(|row| {
            row.iter()
                .map(|&w| if w > zero { w.sqrt() } else { T::zero() })
                .collect()
        })
        .collect();
    let mut anchor = vec![usize::MAX; n];
    for (j, a) in anchor.iter_mut().enumerate() {
        match (0..n).find(|&i| mags[i][j] > T::zero()) {
            Some(i) => *a = i,
            None => {
                return base(
                    ReconstructionStatus::Failure,
                    &format!("eigenvector {j} has no nonzero entry"),
                )
            }
        }
    }
    let free = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| mags[i][j] > T::zero() && anchor[j] != i)
                .collect()
        })
        .collect();

    let mut search = Search {
        n,
        mags,
        lambda: spec.eigenvalues(),
        anchor,
        free,
        u: vec![vec![T::zero(); n]; n],
        tol,
        accept,
        nodes: 0,
        exhausted_budget: false,
        found: Vec::new(),
    };
    search.row(0);

    match search.found.len() {
        0 => base(
            ReconstructionStatus::Failure,
            if search.exhausted_budget {
                "sign search budget exhausted"
            } else {
                "no sign assignment yields an orthogonal 0/1 reconstruction"
            },
        ),
        1 => {
            let s = search.found.pop().expect("one solution");
            let mut r = base(ReconstructionStatus::Success, "");
            r.note = search
                .exhausted_budget
                .then(|| "sign search budget exhausted after the first solution; uniqueness not established".into());
            r.residuals = Residuals {
                vandermonde: None,
                orthogonality: Some(s.orthogonality),
                rounding: Some(s.rounding),
            };
            r.v = Some(s.u);
            r.adj = Some(s.graph);
            r
        }
        _ => {
            let mut r = base(
                ReconstructionStatus::SignAmbiguity,
                "two sign assignments give different 0/1 matrices",
            );
            r.alternatives = search.found.into_iter().map(|s| s.graph).collect();
            r
        }
    }
}
