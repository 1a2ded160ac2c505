//! Spin quantization of admissible orbits and holomorphic induction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::chamber::{self, Face};
use crate::error::Error;
use crate::linalg;
use crate::orbits::{self, Orbit};
use crate::rootsys::RootDatum;
use crate::weight::{Rational, Sign, WeightVec};

/// Default cap on the number of components enumerated for one face.
pub const COMPONENT_CAP: usize = 100_000;

/// Zero, or `±π_λ` for a regular dominant label λ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SignedIrrep {
    Zero,
    Irrep { sign: Sign, label: WeightVec },
}

impl SignedIrrep {
    pub fn is_zero(&self) -> bool {
        matches!(self, SignedIrrep::Zero)
    }

    pub fn label(&self) -> Option<&WeightVec> {
        match self {
            SignedIrrep::Zero => None,
            SignedIrrep::Irrep { label, .. } => Some(label),
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            SignedIrrep::Zero => None,
            SignedIrrep::Irrep { sign, .. } => Some(*sign),
        }
    }

    /// Multiplies by a sign; zero stays zero.
    pub fn times(self, s: Sign) -> SignedIrrep {
        match self {
            SignedIrrep::Zero => SignedIrrep::Zero,
            SignedIrrep::Irrep { sign, label } => SignedIrrep::Irrep { sign: sign * s, label },
        }
    }

    /// The contragredient: label `−w₀λ`, same sign.
    pub fn dual(&self, datum: &RootDatum) -> SignedIrrep {
        match self {
            SignedIrrep::Zero => SignedIrrep::Zero,
            SignedIrrep::Irrep { sign, label } => SignedIrrep::Irrep {
                sign: *sign,
                label: chamber::dominantize(datum, &-label).1,
            },
        }
    }
}

/// Bott antisymmetrization: zero on singular `ν`, else `(ε(w), wν)` with
/// `wν` dominant.
pub fn bott_dominantize(datum: &RootDatum, nu: &WeightVec) -> Result<SignedIrrep, Error> {
    datum.check_dim(nu)?;
    if !datum.in_lattice(&(nu - datum.rho())) {
        return Err(Error::NotInShiftedLattice(format!("{nu}")));
    }
    if !datum.is_regular(nu) {
        return Ok(SignedIrrep::Zero);
    }
    let (sign, label, _) = chamber::dominantize(datum, nu);
    Ok(SignedIrrep::Irrep { sign, label })
}

/// `Q^spin_K(P)` for an admissible orbit, by the closed form: zero when the
/// shift is singular, otherwise the shift itself with sign +1.
pub fn qspin(datum: &RootDatum, orbit: &Orbit) -> Result<SignedIrrep, Error> {
    if !orbits::is_admissible(datum, orbit) {
        return Err(Error::NotAdmissible(format!("{}", orbit.rep())));
    }
    let lambda = orbits::shift_point(datum, orbit);
    if !datum.is_regular(&lambda) {
        return Ok(SignedIrrep::Zero);
    }
    if !datum.is_dominant(&lambda) || !orbits::is_admissible_point(datum, &lambda) {
        return Err(Error::InvariantViolation(format!(
            "regular shift {lambda} of {} is not dominant admissible",
            orbit.rep()
        )));
    }
    Ok(SignedIrrep::Irrep {
        sign: Sign::Plus,
        label: lambda,
    })
}

/// `Q^spin_K(P*)`, checked against the dual of `Q^spin_K(P)`.
pub fn qspin_dual(datum: &RootDatum, orbit: &Orbit) -> Result<SignedIrrep, Error> {
    let direct = qspin(datum, orbit)?;
    let dual_orbit = orbits::dual_orbit(datum, orbit);
    let q = qspin(datum, &dual_orbit)?;
    if q != direct.dual(datum) {
        return Err(Error::InvariantViolation(format!(
            "qspin of the dual of {} is not the dual representation",
            orbit.rep()
        )));
    }
    Ok(q)
}

/// A connected component of the regular set of the centre `z*` of the
/// Levi subalgebra, given by the signs of the non-Levi positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    face: u64,
    roots: Vec<usize>,
    signs: Vec<Sign>,
    rho_c: WeightVec,
}

impl Component {
    /// Zero set of the face whose Levi this component belongs to.
    pub fn face_mask(&self) -> u64 {
        self.face
    }

    /// Non-Levi positive roots, as root indices.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign_of(&self, k: usize) -> Option<Sign> {
        self.roots.iter().position(|&r| r == k).map(|p| self.signs[p])
    }

    /// `ρ_C = ½ Σ sign(α) α` over the non-Levi positive roots.
    pub fn rho_c(&self) -> &WeightVec {
        &self.rho_c
    }

    /// Number of `−` signs.
    pub fn flips(&self) -> usize {
        self.signs.iter().filter(|s| **s == Sign::Minus).count()
    }

    /// Signs as a string of `+` and `-`, in root order.
    pub fn pattern(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }
}

fn non_levi_roots(datum: &RootDatum, face: &Face) -> Vec<usize> {
    (0..datum.num_positive_roots())
        .filter(|&k| !face.is_levi_root(k))
        .collect()
}

/// Scales a row so its first nonzero entry is ±1, keeping the direction.
fn normalize(row: &mut [Rational]) {
    if let Some(p) = row.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
        for x in row.iter_mut() {
            *x /= p;
        }
    }
}

/// Whether `a·t > 0` for every row has a solution, by Fourier-Motzkin
/// elimination.
pub fn strictly_feasible(rows: &[Vec<Rational>]) -> bool {
    let nvars = rows.first().map_or(0, Vec::len);
    let mut cur: Vec<Vec<Rational>> = rows.to_vec();
    for var in 0..nvars {
        cur.iter_mut().for_each(|r| normalize(r));
        cur.sort();
        cur.dedup();
        if cur.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return false;
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in cur {
            if r[var].is_positive() {
                pos.push(r);
            } else if r[var].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        if !pos.is_empty() && !neg.is_empty() {
            for p in &pos {
                for n in &neg {
                    let (a, b) = (p[var], -n[var]);
                    rest.push(p.iter().zip(n).map(|(x, y)| *x / a + *y / b).collect());
                }
            }
        }
        cur = rest;
    }
    cur.is_empty()
}

/// Components for the Levi of `face`: all sign patterns on the non-Levi
/// positive roots realized by a point of `z* = span(σ)`. The dominant
/// pattern comes first.
pub fn components(datum: &RootDatum, face: &Face) -> Result<Vec<Component>, Error> {
    components_capped(datum, face, COMPONENT_CAP)
}

pub fn components_capped(datum: &RootDatum, face: &Face, cap: usize) -> Result<Vec<Component>, Error> {
    let roots = non_levi_roots(datum, face);
    let eqs: linalg::Matrix = face
        .zero_set_indices()
        .into_iter()
        .map(|i| datum.coroot(i).to_vec())
        .collect();
    let z = linalg::nullspace(&eqs, datum.dim());

    // group roots by the direction of their restriction to z*
    let mut classes: Vec<Vec<Rational>> = Vec::new();
    let mut class_index: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
    let mut membership: Vec<(usize, Sign)> = Vec::with_capacity(roots.len());
    for &k in &roots {
        let mut f: Vec<Rational> = z.iter().map(|zj| WeightVec::new(zj.clone()).dot(datum.coroot(k))).collect();
        let lead = f.iter().find(|x| !x.is_zero()).copied().ok_or_else(|| {
            Error::InvariantViolation(format!("non-Levi root {} vanishes on the face", datum.root(k)))
        })?;
        let orient = if lead.is_positive() { Sign::Plus } else { Sign::Minus };
        let scale = lead.abs() * orient.as_rational();
        f.iter_mut().for_each(|x| *x /= scale);
        let id = *class_index.entry(f.clone()).or_insert_with(|| {
            classes.push(f);
            classes.len() - 1
        });
        membership.push((id, orient));
    }

    // every non-Levi root is positive on σ, so the dominant orientation of
    // a class is the orientation of any of its roots
    let mut out = Vec::new();
    let mut chosen: Vec<Sign> = Vec::with_capacity(classes.len());
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(classes.len());
    let mut dominant = vec![Sign::Plus; classes.len()];
    for &(c, o) in &membership {
        dominant[c] = o;
    }
    enumerate_classes(&classes, &dominant, &mut chosen, &mut rows, &mut |signs: &[Sign]| {
        if out.len() >= cap {
            return Err(Error::SearchLimit { visited: out.len() });
        }
        let root_signs: Vec<Sign> = membership.iter().map(|&(c, o)| signs[c] * o).collect();
        let mut rho_c = WeightVec::zeros(datum.dim());
        for (&k, s) in roots.iter().zip(&root_signs) {
            match s {
                Sign::Plus => rho_c += datum.root(k),
                Sign::Minus => rho_c -= datum.root(k),
            }
        }
        out.push(Component {
            face: face.zero_set(),
            roots: roots.clone(),
            signs: root_signs,
            rho_c: rho_c.scale(Rational::new(1, 2)),
        });
        Ok(())
    })?;
    Ok(out)
}

/// Depth-first search over class orientations, trying the dominant one
/// first and pruning infeasible prefixes.
fn enumerate_classes(
    classes: &[Vec<Rational>],
    dominant: &[Sign],
    chosen: &mut Vec<Sign>,
    rows: &mut Vec<Vec<Rational>>,
    emit: &mut dyn FnMut(&[Sign]) -> Result<(), Error>,
) -> Result<(), Error> {
    let depth = chosen.len();
    if depth == classes.len() {
        return emit(chosen);
    }
    for s in [dominant[depth], dominant[depth].flip()] {
        let row: Vec<Rational> = classes[depth].iter().map(|x| *x * s.as_rational()).collect();
        rows.push(row);
        if strictly_feasible(rows) {
            chosen.push(s);
            enumerate_classes(classes, dominant, chosen, rows, emit)?;
            chosen.pop();
        }
        rows.pop();
    }
    Ok(())
}

/// Checks that `μ` is dominant and admissible for the Levi of `face`.
fn check_levi_input(datum: &RootDatum, face: &Face, mu: &WeightVec) -> Result<(), Error> {
    datum.check_dim(mu)?;
    if face
        .zero_set_indices()
        .into_iter()
        .any(|i| datum.pairing_idx(mu, i).is_negative())
    {
        return Err(Error::NotLeviDominant(format!("{mu}")));
    }
    let rho_h = datum.half_sum(
        face.levi_positive_roots()
            .iter()
            .copied()
            .filter(|&k| datum.pairing_idx(mu, k).is_positive()),
    );
    if !datum.in_lattice(&(mu - &rho_h)) {
        return Err(Error::NotLeviAdmissible(format!("{mu}")));
    }
    Ok(())
}

fn check_component(face: &Face, c: &Component) -> Result<(), Error> {
    if c.face != face.zero_set() {
        return Err(Error::InvalidSpec(format!(
            "component {} belongs to another face than {face}",
            c.pattern()
        )));
    }
    Ok(())
}

/// `Hol_H^K(Q^spin_H(Hμ))` for the Levi `H = K_σ` and component `C`, by the
/// closed form: zero unless `μ' = μ + ρ_C` is regular on the non-Levi
/// roots, otherwise `ε Q^spin_K(Kμ')` with ε the parity of the non-Levi
/// roots whose sign on μ' differs from C.
pub fn hol_induce(datum: &RootDatum, face: &Face, c: &Component, mu: &WeightVec) -> Result<SignedIrrep, Error> {
    check_component(face, c)?;
    check_levi_input(datum, face, mu)?;
    let mu1 = mu + c.rho_c();
    let mut flips = 0;
    for (&k, s) in c.roots.iter().zip(&c.signs) {
        match Sign::of(&datum.pairing_idx(&mu1, k)) {
            None => return Ok(SignedIrrep::Zero),
            Some(t) if t != *s => flips += 1,
            Some(_) => {}
        }
    }
    let orbit = orbits::orbit_from_point(datum, &mu1)?;
    if !orbits::is_admissible(datum, &orbit) {
        return Err(Error::InvariantViolation(format!("μ + ρ_C = {mu1} is not admissible")));
    }
    Ok(qspin(datum, &orbit)?.times(Sign::from_parity(flips)))
}

/// Independent route through the torus: regularize μ inside the Levi to
/// `μ̃ = μ + ρ^{H_μ}`, then antisymmetrize `μ̃ + ρ_C` over W, with the sign
/// of C relative to the component of the open chamber.
pub fn hol_induce_oracle(
    datum: &RootDatum,
    face: &Face,
    c: &Component,
    mu: &WeightVec,
) -> Result<SignedIrrep, Error> {
    check_component(face, c)?;
    check_levi_input(datum, face, mu)?;
    let stab: Vec<usize> = face
        .levi_positive_roots()
        .iter()
        .copied()
        .filter(|&k| datum.pairing_idx(mu, k).is_zero())
        .collect();
    let mu_t = mu + &datum.half_sum(stab);
    if face
        .levi_positive_roots()
        .iter()
        .any(|&k| datum.pairing_idx(&mu_t, k).is_zero())
    {
        return Ok(SignedIrrep::Zero);
    }
    let nu = &mu_t + c.rho_c();
    bott_dominantize(datum, &nu).map(|r| r.times(Sign::from_parity(c.flips())))
}
