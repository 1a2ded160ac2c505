//! Orbit-level calculus: integrality, admissibility, shifts, distances,
//! the magical inequality and ancestors.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::chamber::{self, Face, Sheet};
use crate::error::Error;
use crate::rootsys::RootDatum;
use crate::weight::{int, Rational, Sign, WeightVec};

/// A coadjoint orbit, stored as its dominant representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit {
    rep: WeightVec,
    face: Face,
}

impl Orbit {
    pub fn rep(&self) -> &WeightVec {
        &self.rep
    }

    pub fn face(&self) -> &Face {
        &self.face
    }

    pub fn is_regular(&self) -> bool {
        self.face.is_open()
    }
}

/// Orbit through `v`.
pub fn orbit_from_point(datum: &RootDatum, v: &WeightVec) -> Result<Orbit, Error> {
    datum.check_dim(v)?;
    let (_, rep, _) = chamber::dominantize(datum, v);
    let face = Face::new(datum, chamber::zero_mask(datum, &rep));
    Ok(Orbit { rep, face })
}

pub fn is_integral(datum: &RootDatum, orbit: &Orbit) -> bool {
    datum.in_lattice(&orbit.rep)
}

/// `ξ − ρ(ξ) ∈ Λ` for a point of t*.
pub fn is_admissible_point(datum: &RootDatum, v: &WeightVec) -> bool {
    datum.in_lattice(&(v - &chamber::rho_of_point(datum, v)))
}

pub fn is_admissible(datum: &RootDatum, orbit: &Orbit) -> bool {
    is_admissible_point(datum, &orbit.rep)
}

/// `rep + ρ^{K_σ}`, before dominantization.
pub fn shift_point(datum: &RootDatum, orbit: &Orbit) -> WeightVec {
    &orbit.rep + &chamber::rho_levi(datum, &orbit.face)
}

/// The shift `s(P)`.
pub fn shift(datum: &RootDatum, orbit: &Orbit) -> Orbit {
    orbit_from_point(datum, &shift_point(datum, orbit)).expect("dimension already checked")
}

/// Squared distance between two orbits, from their dominant representatives.
pub fn orbit_distance_sq(datum: &RootDatum, o1: &Orbit, o2: &Orbit) -> Rational {
    datum.inner_sq(&(&o1.rep - &o2.rep))
}

/// `⟨λ, H_α⟩ ≥ 1` on every simple root.
pub fn in_shifted_chamber(datum: &RootDatum, lambda: &WeightVec) -> bool {
    (0..datum.semisimple_rank()).all(|i| datum.pairing_idx(lambda, i) >= int(1))
}

pub fn is_very_regular(datum: &RootDatum, orbit: &Orbit) -> bool {
    orbit.is_regular() && in_shifted_chamber(datum, &orbit.rep)
}

/// Very regularity of an arbitrary point: `λ` regular and
/// `λ − ρ(λ) ∈ C_λ`.
pub fn is_very_regular_point(datum: &RootDatum, lambda: &WeightVec) -> bool {
    if !datum.is_regular(lambda) {
        return false;
    }
    let d = lambda - &chamber::rho_of_point(datum, lambda);
    (0..datum.num_positive_roots()).all(|k| {
        let s = datum.pairing_idx(lambda, k);
        let t = datum.pairing_idx(&d, k);
        t.is_zero() || t.signum() == s.signum()
    })
}

/// Equality witness of the magical inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagicalWitness {
    pub mu_dominant: bool,
    /// Face of μ when μ is dominant.
    pub face: Option<Face>,
    /// `λ = μ + ρ^{K_μ}`.
    pub shift_matches: bool,
    /// `λ − ρ(λ) = μ − ρ(μ)`.
    pub rho_shift_matches: bool,
}

impl MagicalWitness {
    pub fn holds(&self) -> bool {
        self.mu_dominant && self.face.is_some() && self.shift_matches && self.rho_shift_matches
    }
}

/// The three terms of the magical inequality and its equality analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagicalReport {
    /// `‖λ − μ‖²`
    pub lhs: Rational,
    /// `½ Σ_{α>0, (α,μ)=0} (λ, α)`
    pub mid: Rational,
    /// `‖ρ^{K_μ}‖²`
    pub rhs: Rational,
    /// `lhs = rhs`; then both inequalities are equalities.
    pub equality: bool,
    pub witness: Option<MagicalWitness>,
}

impl MagicalReport {
    pub fn chain_holds(&self) -> bool {
        self.lhs >= self.mid && self.mid >= self.rhs
    }

    /// `lhs = mid`; by the theorem this forces `lhs = rhs`.
    pub fn first_equal(&self) -> bool {
        self.lhs == self.mid
    }

    /// `mid = rhs`. This alone forces nothing: for SU(3), `λ = ρ` and
    /// `μ = t ω₁` give `mid = rhs = 1/2` for every `t`.
    pub fn second_equal(&self) -> bool {
        self.mid == self.rhs
    }

    /// Chain holds, `lhs = mid` forces `lhs = rhs`, and every witness
    /// clause is true on equality.
    pub fn consistent(&self) -> bool {
        self.chain_holds()
            && (!self.first_equal() || self.equality)
            && self.equality == self.witness.is_some()
            && self.witness.as_ref().map_or(true, MagicalWitness::holds)
    }
}

/// Evaluates the magical inequality for `λ` in the shifted chamber.
///
/// The report carries flags instead of asserting, so callers can test each
/// clause separately.
pub fn magical_check(datum: &RootDatum, lambda: &WeightVec, mu: &WeightVec) -> Result<MagicalReport, Error> {
    datum.check_dim(lambda)?;
    datum.check_dim(mu)?;
    if !in_shifted_chamber(datum, lambda) {
        return Err(Error::OutsideShiftedChamber(format!("{lambda}")));
    }
    let stab = chamber::stabilizer_roots(datum, mu);
    let lhs = datum.inner_sq(&(lambda - mu));
    let mid = stab
        .iter()
        .map(|&k| datum.inner_root(lambda, k))
        .fold(Rational::zero(), |a, b| a + b)
        / int(2);
    let rho_mu = datum.half_sum(stab.iter().copied());
    let rhs = datum.inner_sq(&rho_mu);
    let equality = lhs == rhs;
    let witness = equality.then(|| {
        let mu_dominant = datum.is_dominant(mu);
        let face = mu_dominant.then(|| Face::new(datum, chamber::zero_mask(datum, mu)));
        MagicalWitness {
            mu_dominant,
            shift_matches: *lambda == mu + &rho_mu,
            rho_shift_matches: lambda - &chamber::rho_of_point(datum, lambda)
                == mu - &chamber::rho_of_point(datum, mu),
            face,
        }
    });
    Ok(MagicalReport {
        lhs,
        mid,
        rhs,
        equality,
        witness,
    })
}

/// `nTr_{k_μ}|b| = Σ_{α>0, (α,μ)=0} |(α, b)|`.
pub fn normalized_trace(datum: &RootDatum, mu: &WeightVec, b: &WeightVec) -> Rational {
    chamber::stabilizer_roots(datum, mu)
        .into_iter()
        .map(|k| datum.inner_root(b, k).abs())
        .fold(Rational::zero(), |a, x| a + x)
}

/// Outcome of the trace form of the inequality, `‖β‖² ≥ ½ nTr_{k_μ}|b|`
/// with `β = μ − λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub norm_sq: Rational,
    pub half_trace: Rational,
    pub equality: bool,
    /// On equality: `μ ∈ C_λ`.
    pub mu_in_chamber: Option<bool>,
    /// On equality: `λ − ρ(λ) = μ − ρ(μ)`.
    pub rho_shift_matches: Option<bool>,
    /// On equality: `s(Kμ) = Kλ`.
    pub shift_matches: Option<bool>,
}

impl TraceReport {
    pub fn consistent(&self) -> bool {
        self.norm_sq >= self.half_trace
            && (!self.equality
                || (self.mu_in_chamber == Some(true)
                    && self.rho_shift_matches == Some(true)
                    && self.shift_matches == Some(true)))
    }
}

pub fn trace_inequality_check(datum: &RootDatum, lambda: &WeightVec, mu: &WeightVec) -> Result<TraceReport, Error> {
    datum.check_dim(lambda)?;
    datum.check_dim(mu)?;
    if !is_very_regular_point(datum, lambda) {
        return Err(Error::NotVeryRegular(format!("{lambda}")));
    }
    let beta = mu - lambda;
    let norm_sq = datum.inner_sq(&beta);
    let half_trace = normalized_trace(datum, mu, &beta) / int(2);
    let equality = norm_sq == half_trace;
    let (mut mu_in_chamber, mut rho_shift_matches, mut shift_matches) = (None, None, None);
    if equality {
        mu_in_chamber = Some((0..datum.num_positive_roots()).all(|k| {
            let s = Sign::of(&datum.pairing_idx(lambda, k)).expect("λ is regular");
            let t = datum.pairing_idx(mu, k);
            t.is_zero() || Sign::of(&t) == Some(s)
        }));
        rho_shift_matches = Some(
            lambda - &chamber::rho_of_point(datum, lambda) == mu - &chamber::rho_of_point(datum, mu),
        );
        let p = orbit_from_point(datum, mu)?;
        shift_matches = Some(shift(datum, &p) == orbit_from_point(datum, lambda)?);
    }
    Ok(TraceReport {
        norm_sq,
        half_trace,
        equality,
        mu_in_chamber,
        rho_shift_matches,
        shift_matches,
    })
}

/// Whether `v` lies in the relative interior of `face`.
pub fn in_face(datum: &RootDatum, v: &WeightVec, face: &Face) -> bool {
    (0..datum.semisimple_rank()).all(|i| {
        let p = datum.pairing_idx(v, i);
        if face.contains_simple(i) {
            p.is_zero()
        } else {
            p.is_positive()
        }
    })
}

/// Ancestors of a regular admissible orbit: for each face σ (of `sheet`
/// if given) the orbit of `rep − ρ^{K_σ}` when that point lies in σ.
pub fn ancestors(datum: &RootDatum, regular: &Orbit, sheet: Option<&Sheet>) -> Result<Vec<Orbit>, Error> {
    if !regular.is_regular() || !is_admissible(datum, regular) {
        return Err(Error::NotRegularAdmissible(format!("{}", regular.rep)));
    }
    let candidates: Vec<Face> = match sheet {
        Some(s) => s.faces.clone(),
        None => chamber::faces(datum),
    };
    let mut out = Vec::new();
    for face in candidates {
        let rho_s = chamber::rho_levi(datum, &face);
        let mu = &regular.rep - &rho_s;
        if !in_face(datum, &mu, &face) {
            continue;
        }
        let p = Orbit { rep: mu, face };
        if shift(datum, &p) != *regular
            || !is_admissible(datum, &p)
            || orbit_distance_sq(datum, &p, regular) != datum.inner_sq(&rho_s)
        {
            return Err(Error::InvariantViolation(format!(
                "ancestor {} of {} fails shift, admissibility or distance",
                p.rep, regular.rep
            )));
        }
        out.push(p);
    }
    Ok(out)
}

/// The orbit `−P`.
pub fn dual_orbit(datum: &RootDatum, orbit: &Orbit) -> Orbit {
    orbit_from_point(datum, &-&orbit.rep).expect("dimension already checked")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_datum;
    use crate::weight::rat;
    use alloc::vec;

    fn datum(s: &str) -> RootDatum {
        build_root_datum(&s.parse().unwrap()).unwrap()
    }

    fn w(c: &[Rational]) -> WeightVec {
        WeightVec::new(c.to_vec())
    }

    #[test]
    fn su3_subregular() {
        let d = datum("SU(3)");
        let o = orbit_from_point(&d, &w(&[rat(3, 2), int(0)])).unwrap();
        assert!(is_admissible(&d, &o));
        assert!(!is_integral(&d, &o));
        let half = orbit_from_point(&d, &w(&[rat(1, 2), int(0)])).unwrap();
        assert_eq!(shift(&d, &half).rep(), &WeightVec::from_ints(&[0, 1]));
        let zero = orbit_from_point(&d, &WeightVec::zeros(2)).unwrap();
        assert_eq!(shift(&d, &zero).rep(), d.rho());
        let rho = orbit_from_point(&d, d.rho()).unwrap();
        assert_eq!(orbit_distance_sq(&d, &rho, &o), rat(1, 2));
        assert_eq!(orbit_distance_sq(&d, &rho, &zero), int(2));
        assert_eq!(dual_orbit(&d, &o).rep(), &w(&[int(0), rat(3, 2)]));
    }

    #[test]
    fn su3_ancestors() {
        let d = datum("SU(3)");
        let rho = orbit_from_point(&d, d.rho()).unwrap();
        let anc = ancestors(&d, &rho, None).unwrap();
        let reps: Vec<_> = anc.iter().map(|o| o.rep().clone()).collect();
        assert_eq!(
            reps,
            vec![
                d.rho().clone(),
                w(&[int(0), rat(3, 2)]),
                w(&[rat(3, 2), int(0)]),
                WeightVec::zeros(2)
            ]
        );
        // 2ω₁ + ω₂ sits on a wall of the shifted chamber
        let wall = orbit_from_point(&d, &WeightVec::from_ints(&[2, 1])).unwrap();
        let reps: Vec<_> = ancestors(&d, &wall, None).unwrap().into_iter().map(|o| o.rep().clone()).collect();
        assert_eq!(reps, vec![WeightVec::from_ints(&[2, 1]), w(&[rat(5, 2), int(0)])]);
        let generic = orbit_from_point(&d, &WeightVec::from_ints(&[2, 2])).unwrap();
        assert_eq!(ancestors(&d, &generic, None).unwrap(), vec![generic.clone()]);
        let singular = orbit_from_point(&d, &WeightVec::from_ints(&[1, 0])).unwrap();
        assert!(ancestors(&d, &singular, None).is_err());
    }

    #[test]
    fn u7_example() {
        let d = datum("U(7)");
        let mu = orbit_from_point(&d, &WeightVec::from_ints(&[1, 0, 0, 0, 0, 0, -1])).unwrap();
        assert!(is_admissible(&d, &mu));
        let sp = shift_point(&d, &mu);
        assert_eq!(sp, WeightVec::from_ints(&[1, 2, 1, 0, -1, -2, -1]));
        assert!(!d.is_regular(&sp) && !d.is_dominant(&sp) && !is_admissible_point(&d, &sp));
        let b = WeightVec::from_ints(&[0, 1, -1, 0, 0, 0, 0]);
        assert_eq!(normalized_trace(&d, mu.rep(), &b), int(8));
    }

    #[test]
    fn magical_examples() {
        let d = datum("SU(2)");
        let r = magical_check(&d, d.rho(), &WeightVec::zeros(1)).unwrap();
        assert_eq!((r.lhs, r.mid, r.rhs), (rat(1, 2), rat(1, 2), rat(1, 2)));
        assert!(r.equality && r.consistent());
        let d = datum("SU(3)");
        let r = magical_check(&d, d.rho(), &w(&[rat(3, 2), int(0)])).unwrap();
        assert_eq!((r.lhs, r.rhs), (rat(1, 2), rat(1, 2)));
        assert!(r.witness.as_ref().unwrap().holds());
        let r = magical_check(&d, d.rho(), &WeightVec::from_ints(&[-1, 0])).unwrap();
        assert_eq!((r.lhs, r.mid, r.rhs), (rat(14, 3), rat(1, 2), rat(1, 2)));
        assert!(!r.equality && r.second_equal() && r.consistent());
        let r = magical_check(&d, d.rho(), &WeightVec::from_ints(&[-1, 1])).unwrap();
        assert!(r.lhs > r.mid && r.mid > r.rhs && r.consistent());
        assert!(magical_check(&d, &WeightVec::from_ints(&[1, 0]), &WeightVec::zeros(2)).is_err());
    }

    #[test]
    fn trace_examples() {
        let d = datum("SU(2)");
        let t = trace_inequality_check(&d, d.rho(), &WeightVec::zeros(1)).unwrap();
        assert!(t.equality && t.consistent());
        let d = datum("SU(3)");
        let t = trace_inequality_check(&d, d.rho(), &w(&[rat(3, 2), int(0)])).unwrap();
        assert!(t.equality && t.shift_matches == Some(true));
        let t = trace_inequality_check(&d, &d.rho().scale(int(2)), &WeightVec::zeros(2)).unwrap();
        assert_eq!((t.norm_sq, t.half_trace), (int(8), int(4)));
        assert!(!t.equality);
        assert!(trace_inequality_check(&d, &w(&[int(1), rat(1, 2)]), &WeightVec::zeros(2)).is_err());
    }

    #[test]
    fn very_regular() {
        let d = datum("SU(3)");
        let rho = orbit_from_point(&d, d.rho()).unwrap();
        assert!(is_very_regular(&d, &rho));
        let o = orbit_from_point(&d, &w(&[int(1), rat(1, 2)])).unwrap();
        assert!(!is_very_regular(&d, &o));
        assert!(is_very_regular_point(&d, &-d.rho()));
    }
}
