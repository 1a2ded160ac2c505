//! Brute-force verifiers: Weyl orbits by enumeration, Weyl-quotient
//! characters and Atiyah-Bott fixed-point sums in floating point.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use coadjoint_core::{Orbit, Rational, RootDatum, WeightVec};
use num_complex::Complex64;
use num_traits::Zero;
use rand::Rng;

/// Default semisimple-rank cap for orbit enumeration.
pub const RANK_CAP: usize = 6;
/// Smallest admissible denominator magnitude.
pub const DENOMINATOR_GUARD: f64 = 1e-6;
/// Relative tolerance for character comparisons.
pub const REL_TOL: f64 = 1e-9;
/// Random elements of t have coordinates `k / 2^16`.
pub const X_DENOMINATOR: i128 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("semisimple rank {rank} exceeds the oracle cap {cap}")]
    RankCap { rank: usize, cap: usize },
    #[error("denominator vanishes at X")]
    DenominatorVanishes,
    #[error("label {0} is not regular dominant")]
    BadLabel(String),
}

fn check_rank(datum: &RootDatum, cap: usize) -> Result<(), OracleError> {
    let rank = datum.semisimple_rank();
    if rank > cap {
        Err(OracleError::RankCap { rank, cap })
    } else {
        Ok(())
    }
}

/// Full W-orbit of `v` by breadth-first search over simple reflections,
/// each point tagged with the parity of its BFS depth.
fn orbit_with_parity(datum: &RootDatum, v: &WeightVec) -> BTreeMap<WeightVec, usize> {
    let mut seen = BTreeMap::from([(v.clone(), 0usize)]);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(x) = queue.pop_front() {
        let depth = seen[&x];
        for i in 0..datum.semisimple_rank() {
            let y = datum.reflect(&x, i);
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), depth + 1);
                queue.push_back(y);
            }
        }
    }
    seen
}

/// The W-orbit of `v`.
pub fn weyl_orbit(datum: &RootDatum, v: &WeightVec) -> Result<BTreeSet<WeightVec>, OracleError> {
    weyl_orbit_capped(datum, v, RANK_CAP)
}

pub fn weyl_orbit_capped(datum: &RootDatum, v: &WeightVec, cap: usize) -> Result<BTreeSet<WeightVec>, OracleError> {
    check_rank(datum, cap)?;
    Ok(orbit_with_parity(datum, v).into_keys().collect())
}

/// Every element of W as a permutation of root indices.
pub fn weyl_root_permutations(datum: &RootDatum) -> Result<Vec<Vec<usize>>, OracleError> {
    check_rank(datum, RANK_CAP)?;
    let id: Vec<usize> = (0..datum.roots().len()).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for i in 0..datum.semisimple_rank() {
            let s = datum.reflection_perm(i);
            let q: Vec<usize> = p.iter().map(|&k| s[k]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `min_w ‖rep₁ − w·rep₂‖²` over the full orbit of `rep₂`.
///
/// The orbit is enumerated in scaled integer fundamental coordinates
/// `c_j = D⟨rep₂, H_j⟩`, where `s_i` acts by `c_j −= c_i ⟨α_i, H_j⟩`. The
/// part of `rep₂` killed by every coroot is W-fixed and enters as a constant.
pub fn distance_bruteforce(datum: &RootDatum, o1: &Orbit, o2: &Orbit) -> Result<Rational, OracleError> {
    check_rank(datum, RANK_CAP)?;
    let r = datum.semisimple_rank();
    let (a, b) = (o1.rep(), o2.rep());
    let pairings: Vec<Rational> = (0..r).map(|j| datum.pairing_idx(b, j)).collect();
    let mut fixed = b.clone();
    for (c, w) in pairings.iter().zip(datum.fundamental_weights()) {
        fixed.axpy(-*c, w);
    }
    let scale = pairings.iter().fold(1, |l, c| lcm(l, *c.denom()));
    let start: Vec<i128> = pairings.iter().map(|c| *(c * scale).numer()).collect();
    // (a, ω_j) over a common denominator
    let weights: Vec<Rational> = datum.fundamental_weights().iter().map(|w| datum.inner(a, w)).collect();
    let wscale = weights.iter().fold(1, |l, c| lcm(l, *c.denom()));
    let e: Vec<i128> = weights.iter().map(|c| *(c * wscale).numer()).collect();
    let cartan: Vec<Vec<i128>> = (0..r)
        .map(|i| (0..r).map(|j| *datum.pairing_idx(datum.root(i), j).numer()).collect())
        .collect();

    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut best = i128::MIN;
    while let Some(c) = queue.pop_front() {
        best = best.max(c.iter().zip(&e).map(|(x, y)| x * y).sum());
        for i in 0..r {
            if c[i] == 0 {
                continue;
            }
            let next: Vec<i128> = (0..r).map(|j| c[j] - c[i] * cartan[i][j]).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let cross = Rational::new(best, scale * wscale) + datum.inner(a, &fixed);
    Ok(datum.inner_sq(a) + datum.inner_sq(b) - cross * Rational::from_integer(2))
}

fn lcm(a: i128, b: i128) -> i128 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// A random element of t, coordinates uniform on [−1, 1] with
/// denominator 2^16.
pub fn random_x<R: Rng>(rng: &mut R, dim: usize) -> Vec<Rational> {
    (0..dim)
        .map(|_| Rational::new(rng.random_range(-X_DENOMINATOR..=X_DENOMINATOR), X_DENOMINATOR))
        .collect()
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn angle(v: &WeightVec, x: &[Rational]) -> f64 {
    to_f64(&v.dot(x))
}

/// `e^{iθ/2} − e^{−iθ/2}`.
fn half_difference(theta: f64) -> Complex64 {
    Complex64::new(0.0, 2.0 * (theta / 2.0).sin())
}

/// Weyl's formula `Σ_w ε(w) e^{i⟨wλ,X⟩} / Π_{α>0} (e^{i⟨α,X⟩/2} − e^{−i⟨α,X⟩/2})`
/// for a regular dominant label λ.
pub fn character_eval(datum: &RootDatum, label: &WeightVec, x: &[Rational]) -> Result<Complex64, OracleError> {
    check_rank(datum, RANK_CAP)?;
    if !datum.is_dominant(label) || !datum.is_regular(label) {
        return Err(OracleError::BadLabel(label.to_string()));
    }
    let denominator: Complex64 = (0..datum.num_positive_roots())
        .map(|k| half_difference(angle(datum.root(k), x)))
        .product();
    if denominator.norm() <= DENOMINATOR_GUARD {
        return Err(OracleError::DenominatorVanishes);
    }
    let numerator: Complex64 = orbit_with_parity(datum, label)
        .iter()
        .map(|(w, &depth)| {
            let s = if depth % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::from_polar(s, angle(w, x))
        })
        .sum();
    Ok(numerator / denominator)
}

/// A floating evaluation together with the total magnitude of its terms,
/// the scale against which rounding is measured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub mass: f64,
}

/// Fixed-point sum `Σ_{ν ∈ Kμ ∩ t*} e^{i⟨ν,X⟩} / Π_{β : (β,ν)>0} (e^{i⟨β,X⟩/2} − e^{−i⟨β,X⟩/2})`.
pub fn fixedpoint_eval(datum: &RootDatum, orbit: &Orbit, x: &[Rational]) -> Result<Evaluation, OracleError> {
    let points = weyl_orbit(datum, orbit.rep())?;
    let mut value = Complex64::zero();
    let mut mass = 0.0;
    for nu in &points {
        let mut denominator = Complex64::new(1.0, 0.0);
        for (k, beta) in datum.roots().iter().enumerate() {
            if datum.inner_root(nu, k) > Rational::zero() {
                denominator *= half_difference(angle(beta, x));
            }
        }
        if denominator.norm() <= DENOMINATOR_GUARD {
            return Err(OracleError::DenominatorVanishes);
        }
        let term = Complex64::from_polar(1.0, angle(nu, x)) / denominator;
        mass += term.norm();
        value += term;
    }
    Ok(Evaluation { value, mass })
}

/// `|got − expected| ≤ REL_TOL · max(1, |expected|, mass)`.
pub fn close(got: Complex64, expected: Complex64, mass: f64) -> bool {
    (got - expected).norm() <= REL_TOL * 1f64.max(expected.norm()).max(mass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use coadjoint_core::{build_root_datum, int, orbits, rat};

    fn datum(s: &str) -> RootDatum {
        build_root_datum(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn orbit_sizes() {
        let d = datum("SU(3)");
        assert_eq!(weyl_orbit(&d, d.rho()).unwrap().len(), 6);
        assert_eq!(weyl_orbit(&d, &WeightVec::from_ints(&[1, 0])).unwrap().len(), 3);
        assert_eq!(weyl_orbit(&d, &WeightVec::zeros(2)).unwrap().len(), 1);
        assert!(matches!(
            weyl_orbit(&datum("SU(8)"), &WeightVec::zeros(7)),
            Err(OracleError::RankCap { rank: 7, cap: 6 })
        ));
        assert_eq!(weyl_root_permutations(&datum("G2")).unwrap().len(), 12);
    }

    #[test]
    fn bruteforce_distance() {
        let d = datum("SU(3)");
        let o = |c: Vec<Rational>| orbits::orbit_from_point(&d, &WeightVec::new(c)).unwrap();
        let rho = o(vec![int(1), int(1)]);
        assert_eq!(distance_bruteforce(&d, &rho, &o(vec![rat(3, 2), int(0)])).unwrap(), rat(1, 2));
        assert_eq!(distance_bruteforce(&d, &rho, &rho).unwrap(), int(0));
        let d2 = datum("SU(2)");
        let a = orbits::orbit_from_point(&d2, d2.rho()).unwrap();
        let z = orbits::orbit_from_point(&d2, &WeightVec::zeros(1)).unwrap();
        assert_eq!(distance_bruteforce(&d2, &a, &z).unwrap(), rat(1, 2));
    }

    #[test]
    fn integer_orbit_matches_rational_orbit() {
        for g in ["SU(3)", "G2", "U(3)", "Sp(2)", "SU(2)xT1"] {
            let d = datum(g);
            let pts = crate::ball::half_lattice_ball(&d, int(3));
            for a in pts.iter().step_by(7) {
                for b in pts.iter().step_by(5) {
                    let (o1, o2) = (orbits::orbit_from_point(&d, a).unwrap(), orbits::orbit_from_point(&d, b).unwrap());
                    let direct = weyl_orbit(&d, b).unwrap().iter().map(|y| d.inner_sq(&(a - y))).min().unwrap();
                    assert_eq!(distance_bruteforce(&d, &o1, &o2).unwrap(), direct, "{g} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn characters() {
        let d = datum("SU(3)");
        let x = vec![rat(3, 10), rat(-7, 10)];
        let one = character_eval(&d, d.rho(), &x).unwrap();
        assert!((one - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        // small enough for the dimension, large enough for the denominator guard
        let small = vec![rat(1, 100), rat(3, 100)];
        let std3 = character_eval(&d, &WeightVec::from_ints(&[2, 1]), &small).unwrap();
        assert!((std3 - Complex64::new(3.0, 0.0)).norm() < 1e-2);
        let d2 = datum("SU(2)");
        let two = character_eval(&d2, &WeightVec::from_ints(&[2]), &[rat(1, 1000)]).unwrap();
        assert!((two - Complex64::new(2.0, 0.0)).norm() < 1e-3);
        assert_eq!(
            character_eval(&d, d.rho(), &[int(0), int(0)]),
            Err(OracleError::DenominatorVanishes)
        );
    }

    #[test]
    fn fixed_points() {
        let d = datum("SU(3)");
        let x = vec![rat(3, 10), rat(-7, 10)];
        let o = |c: Vec<Rational>| orbits::orbit_from_point(&d, &WeightVec::new(c)).unwrap();
        let e = fixedpoint_eval(&d, &o(vec![rat(1, 2), int(0)]), &x).unwrap();
        assert!(close(e.value, Complex64::zero(), e.mass));
        let e = fixedpoint_eval(&d, &o(vec![rat(3, 2), int(0)]), &x).unwrap();
        assert!(close(e.value, Complex64::new(1.0, 0.0), e.mass));
        let d2 = datum("SU(2)");
        let rho = orbits::orbit_from_point(&d2, d2.rho()).unwrap();
        let e = fixedpoint_eval(&d2, &rho, &[rat(1, 3)]).unwrap();
        assert!(close(e.value, character_eval(&d2, d2.rho(), &[rat(1, 3)]).unwrap(), e.mass));
    }
}
