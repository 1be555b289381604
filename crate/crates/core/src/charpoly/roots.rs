//! Exact real-root isolation for real-rooted integer polynomials.
//!
//! If `p` has `d` distinct real roots then `p'` has `d - 1` distinct real
//! roots, one strictly inside each gap. Recursing on derivatives therefore
//! gives brackets with a sign change around every root of `p`, and bisection
//! with exact evaluation at dyadic points `m / 2^bits` pins each root down to
//! an interval of width `2^-bits`.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("polynomial has repeated roots")]
    Repeated,
    #[error("polynomial is not real-rooted (found {found} of {degree} real roots)")]
    NotRealRooted { found: usize, degree: usize },
    #[error("zero polynomial")]
    Zero,
}

/// Remainder of `a` by `b` over the rationals.
fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let q = &r[dr] / lead;
        for (k, bk) in b.iter().enumerate() {
            let idx = dr - db + k;
            r[idx] = &r[idx] - &q * bk;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// True iff `gcd(p, p')` is constant, i.e. `p` has no repeated root.
pub fn is_squarefree(p: &Polynomial<BigInt>) -> bool {
    if p.degree().is_none_or(|d| d == 0) {
        return true;
    }
    let q = |v: &Polynomial<BigInt>| -> Vec<BigRational> {
        v.coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    };
    let mut a = q(p);
    let mut b = q(&p.derivative());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() == 1
}

fn sign_at(c: &[BigInt], m: &BigInt, bits: usize) -> Sign {
    // p(m / 2^bits) * 2^(bits * deg) by Horner
    let deg = c.len() - 1;
    let mut h = c[deg].clone();
    for k in (0..deg).rev() {
        h = h * m + (&c[k] << (bits * (deg - k)));
    }
    h.sign()
}

/// Sorted numerators `m` with a root of `c` in `[m, m + 1] / 2^bits`.
fn isolate(c: &[BigInt], bits: usize) -> Result<Vec<BigInt>, RootError> {
    let deg = c.len() - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg == 1 {
        let num = -(&c[0] << bits);
        return Ok(vec![floor_div(&num, &c[1])]);
    }
    let dc: Vec<BigInt> = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, x)| x * BigInt::from(k))
        .collect();
    let crit = isolate(&dc, bits)?;

    // Cauchy bound 1 + max |c_k / c_deg|, rounded up
    let lead = c[deg].abs();
    let bound = c[..deg]
        .iter()
        .map(|x| (x.abs() + &lead - 1u32) / &lead)
        .max()
        .unwrap_or_default()
        + 1u32;
    let edge = (bound << bits) + 1u32;
    let mut points = Vec::with_capacity(deg + 1);
    points.push(-edge.clone());
    points.extend(crit);
    points.push(edge);

    let mut roots = Vec::with_capacity(deg);
    for w in points.windows(2) {
        let (mut lo, mut hi) = (w[0].clone(), w[1].clone());
        let slo = sign_at(c, &lo, bits);
        if slo == Sign::NoSign {
            roots.push(lo);
            continue;
        }
        let shi = sign_at(c, &hi, bits);
        if shi == slo {
            continue;
        }
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            match sign_at(c, &mid, bits) {
                Sign::NoSign => {
                    lo = mid;
                    break;
                }
                s if s == slo => lo = mid,
                _ => hi = mid,
            }
        }
        roots.push(lo);
    }
    roots.dedup();
    if roots.len() != deg {
        return Err(RootError::NotRealRooted {
            found: roots.len(),
            degree: deg,
        });
    }
    Ok(roots)
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.div_floor(b)
}

/// All roots of a squarefree real-rooted integer polynomial, ascending, each
/// within `2^-bits` of the true value.
pub fn real_roots(p: &Polynomial<BigInt>, bits: usize) -> Result<Vec<f64>, RootError> {
    let Some(deg) = p.degree() else {
        return Err(RootError::Zero);
    };
    if deg > 1 && !is_squarefree(p) {
        return Err(RootError::Repeated);
    }
    let scale = (bits as i32).min(1000);
    Ok(isolate(p.coeffs(), bits)?
        .into_iter()
        .map(|m| {
            // midpoint of [m, m + 1] / 2^bits
            let twice = (m << 1u32) + 1u32;
            twice.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-scale - 1)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn squarefree_detection() {
        assert!(!is_squarefree(&poly(&[-2, -3, 0, 1]))); // (x-2)(x+1)^2
        assert!(is_squarefree(&poly(&[0, -2, 0, 1])));
        assert!(is_squarefree(&poly(&[-1, 0, 1])));
        assert!(!is_squarefree(&poly(&[1, -2, 1])));
        assert!(is_squarefree(&poly(&[5])));
    }

    #[test]
    fn roots_of_small_polys() {
        let r = real_roots(&poly(&[0, -2, 0, 1]), 60).unwrap();
        let s = 2f64.sqrt();
        for (got, want) in r.iter().zip([-s, 0.0, s]) {
            assert!((got - want).abs() < 1e-15, "{got} vs {want}");
        }
        let r = real_roots(&poly(&[-1, 0, 1]), 60).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0] + 1.0).abs() < 1e-15 && (r[1] - 1.0).abs() < 1e-15);
        assert_eq!(
            real_roots(&poly(&[-2, -3, 0, 1]), 60),
            Err(RootError::Repeated)
        );
        assert!(matches!(
            real_roots(&poly(&[1, 0, 1]), 60),
            Err(RootError::NotRealRooted { .. })
        ));
    }

    #[test]
    fn roots_of_wide_polynomial() {
        // (x-1)(x-2)...(x-8)
        let mut c = vec![BigInt::one()];
        for r in 1..=8i64 {
            let mut next = vec![BigInt::zero(); c.len() + 1];
            for (k, x) in c.iter().enumerate() {
                next[k + 1] += x;
                next[k] -= x * BigInt::from(r);
            }
            c = next;
        }
        let roots = real_roots(&Polynomial::new(c), 70).unwrap();
        for (k, x) in roots.iter().enumerate() {
            assert!((x - (k + 1) as f64).abs() < 1e-12);
        }
    }
}
