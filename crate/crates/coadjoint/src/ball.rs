//! Points of the half lattice ½Λ inside a ball, and random half-lattice
//! points.

use coadjoint_core::{rat, Rational, RootDatum, WeightVec};
use rand::Rng;

use crate::oracle::to_f64;

fn half_basis(datum: &RootDatum) -> Vec<WeightVec> {
    datum.lattice_basis().iter().map(|b| b.scale(rat(1, 2))).collect()
}

fn combine(basis: &[WeightVec], dim: usize, coeffs: &[i64]) -> WeightVec {
    let mut v = WeightVec::zeros(dim);
    for (c, b) in coeffs.iter().zip(basis) {
        if *c != 0 {
            v.axpy(Rational::from_integer(*c as i128), b);
        }
    }
    v
}

/// All `v ∈ ½Λ` with `‖v‖² ≤ radius_sq`, in lexicographic order of their
/// coordinates.
///
/// Fincke-Pohst enumeration on a floating Cholesky factor with a small
/// slack; the norm test on each candidate is exact.
pub fn half_lattice_ball(datum: &RootDatum, radius_sq: Rational) -> Vec<WeightVec> {
    let basis = half_basis(datum);
    let n = basis.len();
    if n == 0 {
        return vec![WeightVec::zeros(0)];
    }
    let gram: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| to_f64(&datum.inner(&basis[i], &basis[j]))).collect())
        .collect();
    // upper-triangular r with gram = rᵀ r
    let mut r = vec![vec![0.0; n]; n];
    for j in 0..n {
        let mut s = gram[j][j];
        for k in 0..j {
            s -= r[k][j] * r[k][j];
        }
        r[j][j] = s.sqrt();
        for i in j + 1..n {
            let mut t = gram[j][i];
            for k in 0..j {
                t -= r[k][j] * r[k][i];
            }
            r[j][i] = t / r[j][j];
        }
    }
    let bound = to_f64(&radius_sq);
    let slack = 1e-7 * (1.0 + bound);
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    search(&r, n - 1, bound + slack, &mut x, &mut |coeffs| {
        let v = combine(&basis, datum.dim(), coeffs);
        if datum.inner_sq(&v) <= radius_sq {
            out.push(v);
        }
    });
    out.sort();
    out
}

fn search(r: &[Vec<f64>], k: usize, remaining: f64, x: &mut [i64], emit: &mut dyn FnMut(&[i64])) {
    let n = r.len();
    let mut offset = 0.0;
    for j in k + 1..n {
        offset += r[k][j] * x[j] as f64;
    }
    let centre = -offset / r[k][k];
    let half_width = (remaining.max(0.0)).sqrt() / r[k][k];
    let lo = (centre - half_width).ceil() as i64;
    let hi = (centre + half_width).floor() as i64;
    for v in lo..=hi {
        x[k] = v;
        let t = r[k][k] * (v as f64 - centre);
        let rest = remaining - t * t;
        if rest < 0.0 {
            continue;
        }
        if k == 0 {
            emit(x);
        } else {
            search(r, k - 1, rest, x, emit);
        }
    }
    x[k] = 0;
}

/// Dominant points of [`half_lattice_ball`].
pub fn dominant_half_lattice_ball(datum: &RootDatum, radius_sq: Rational) -> Vec<WeightVec> {
    half_lattice_ball(datum, radius_sq)
        .into_iter()
        .filter(|v| datum.is_dominant(v))
        .collect()
}

/// A random point of ½Λ with lattice coefficients in `[−bound, bound]`.
pub fn random_half_lattice<R: Rng>(rng: &mut R, datum: &RootDatum, bound: i64) -> WeightVec {
    let basis = half_basis(datum);
    let coeffs: Vec<i64> = (0..basis.len()).map(|_| rng.random_range(-bound..=bound)).collect();
    combine(&basis, datum.dim(), &coeffs)
}
