//! Weyl chamber geometry: dominantization, faces, Levi subsystems, sheets.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::rootsys::RootDatum;
use crate::weight::{Rational, Sign, WeightVec};

/// Default cap on visited states in Levi conjugacy searches.
pub const SEARCH_CAP: usize = 10_000_000;

/// Relative interior of a face of the positive Weyl chamber, given by the
/// simple roots vanishing on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    zero_set: u64,
    levi: Vec<usize>,
}

impl Face {
    /// Face whose zero set is the bitmask `zero_set` of simple-root indices.
    pub fn new(datum: &RootDatum, zero_set: u64) -> Self {
        let r = datum.semisimple_rank();
        let mask = if r >= 64 { u64::MAX } else { (1u64 << r) - 1 };
        let zero_set = zero_set & mask;
        let levi = (0..datum.num_positive_roots())
            .filter(|&k| {
                datum
                    .root_coeffs(k)
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || zero_set >> i & 1 == 1)
            })
            .collect();
        Face { zero_set, levi }
    }

    pub fn from_indices(datum: &RootDatum, indices: &[usize]) -> Result<Self, Error> {
        let mut mask = 0u64;
        for &i in indices {
            if i >= datum.semisimple_rank() {
                return Err(Error::Parse(alloc::format!(
                    "simple root index {} out of range 1..={}",
                    i + 1,
                    datum.semisimple_rank()
                )));
            }
            mask |= 1 << i;
        }
        Ok(Face::new(datum, mask))
    }

    pub fn zero_set(&self) -> u64 {
        self.zero_set
    }

    pub fn zero_set_indices(&self) -> Vec<usize> {
        (0..64).filter(|i| self.zero_set >> i & 1 == 1).collect()
    }

    pub fn contains_simple(&self, i: usize) -> bool {
        self.zero_set >> i & 1 == 1
    }

    /// Positive roots of the Levi subgroup K_σ, as root indices.
    pub fn levi_positive_roots(&self) -> &[usize] {
        &self.levi
    }

    pub fn is_levi_root(&self, k: usize) -> bool {
        self.levi.binary_search(&k).is_ok()
    }

    /// Semisimple rank of the Levi subgroup.
    pub fn levi_rank(&self) -> usize {
        self.zero_set.count_ones() as usize
    }

    /// True for the open chamber, whose Levi is the torus.
    pub fn is_open(&self) -> bool {
        self.zero_set == 0
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.zero_set_indices().into_iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

/// A Dixmier sheet: faces whose Levi subsystems are W-conjugate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sheet {
    pub faces: Vec<Face>,
    /// `‖ρ^H‖²`, the same for every member face.
    pub rho_levi_sq: Rational,
    /// Rank of `[h, h]`.
    pub semisimple_rank: usize,
}

impl Sheet {
    pub fn contains(&self, face: &Face) -> bool {
        self.faces.iter().any(|f| f.zero_set == face.zero_set)
    }
}

/// Dominant W-translate of `v`, with `ε(w)` and the length of the word used.
///
/// Reflects at the lowest-index simple root with negative pairing until
/// none is left.
pub fn dominantize(datum: &RootDatum, v: &WeightVec) -> (Sign, WeightVec, usize) {
    let mut w = v.clone();
    let mut length = 0;
    while let Some(i) = (0..datum.semisimple_rank()).find(|&i| datum.pairing_idx(&w, i).is_negative()) {
        w = datum.reflect(&w, i);
        length += 1;
    }
    (Sign::from_parity(length), w, length)
}

pub fn rho(datum: &RootDatum) -> WeightVec {
    datum.rho().clone()
}

/// Mask of simple roots vanishing on `v`.
pub fn zero_mask(datum: &RootDatum, v: &WeightVec) -> u64 {
    (0..datum.semisimple_rank())
        .filter(|&i| datum.pairing_idx(v, i).is_zero())
        .fold(0, |m, i| m | 1 << i)
}

/// The face containing the dominant vector `v` in its relative interior.
pub fn face_of(datum: &RootDatum, v: &WeightVec) -> Result<Face, Error> {
    datum.check_dim(v)?;
    if !datum.is_dominant(v) {
        return Err(Error::NotDominant(alloc::format!("{v}")));
    }
    Ok(Face::new(datum, zero_mask(datum, v)))
}

/// `ρ^{K_σ}`, the half-sum of the Levi positive roots.
pub fn rho_levi(datum: &RootDatum, face: &Face) -> WeightVec {
    datum.half_sum(face.levi.iter().copied())
}

/// Positive roots orthogonal to `v`.
pub fn stabilizer_roots(datum: &RootDatum, v: &WeightVec) -> Vec<usize> {
    (0..datum.num_positive_roots())
        .filter(|&k| datum.pairing_idx(v, k).is_zero())
        .collect()
}

/// `ρ(v)`: half the sum of the roots positive on `v`.
pub fn rho_of_point(datum: &RootDatum, v: &WeightVec) -> WeightVec {
    let mut out = WeightVec::zeros(datum.dim());
    for k in 0..datum.num_positive_roots() {
        match Sign::of(&datum.pairing_idx(v, k)) {
            Some(Sign::Plus) => out += datum.root(k),
            Some(Sign::Minus) => out -= datum.root(k),
            None => {}
        }
    }
    out.scale(Rational::new(1, 2))
}

/// All `2^r` faces, ordered by zero-set bitmask.
pub fn faces(datum: &RootDatum) -> Vec<Face> {
    let r = datum.semisimple_rank();
    assert!(r < 32, "face lattice of rank {r} is too large to list");
    (0..1u64 << r).map(|m| Face::new(datum, m)).collect()
}

type RootSet = Vec<u64>;

fn levi_root_set(datum: &RootDatum, face: &Face) -> RootSet {
    let total = 2 * datum.num_positive_roots();
    let mut bits = vec![0u64; total.div_ceil(64).max(1)];
    for &k in &face.levi {
        for j in [k, datum.negate_index(k)] {
            bits[j / 64] |= 1 << (j % 64);
        }
    }
    bits
}

fn apply_reflection(datum: &RootDatum, i: usize, set: &RootSet) -> RootSet {
    let perm = datum.reflection_perm(i);
    let mut out = vec![0u64; set.len()];
    for (word, &bits) in set.iter().enumerate() {
        let mut b = bits;
        while b != 0 {
            let j = word * 64 + b.trailing_zeros() as usize;
            b &= b - 1;
            let t = perm[j];
            out[t / 64] |= 1 << (t % 64);
        }
    }
    out
}

/// Breadth-first W-orbit of a root set, stopping early once `target` is
/// reached.
fn root_set_orbit(
    datum: &RootDatum,
    start: RootSet,
    target: Option<&RootSet>,
    cap: usize,
) -> Result<(BTreeSet<RootSet>, bool), Error> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(set) = queue.pop_front() {
        if target == Some(&set) {
            return Ok((seen, true));
        }
        for i in 0..datum.semisimple_rank() {
            let img = apply_reflection(datum, i, &set);
            if !seen.contains(&img) {
                if seen.len() >= cap {
                    return Err(Error::SearchLimit { visited: seen.len() });
                }
                seen.insert(img.clone());
                queue.push_back(img);
            }
        }
    }
    Ok((seen, false))
}

/// Whether the Levi root subsystems of two faces are W-conjugate.
pub fn levi_conjugate(datum: &RootDatum, f1: &Face, f2: &Face) -> Result<bool, Error> {
    levi_conjugate_capped(datum, f1, f2, SEARCH_CAP)
}

pub fn levi_conjugate_capped(datum: &RootDatum, f1: &Face, f2: &Face, cap: usize) -> Result<bool, Error> {
    if f1.levi.len() != f2.levi.len() || f1.levi_rank() != f2.levi_rank() {
        return Ok(false);
    }
    let target = levi_root_set(datum, f2);
    root_set_orbit(datum, levi_root_set(datum, f1), Some(&target), cap).map(|(_, found)| found)
}

/// Partition of the faces into Levi conjugacy classes. Sheet 0 is the
/// regular sheet (open chamber); the order follows the smallest zero-set
/// mask in each class.
pub fn sheets(datum: &RootDatum) -> Result<Vec<Sheet>, Error> {
    sheets_capped(datum, SEARCH_CAP)
}

pub fn sheets_capped(datum: &RootDatum, cap: usize) -> Result<Vec<Sheet>, Error> {
    let all = faces(datum);
    let sets: Vec<RootSet> = all.iter().map(|f| levi_root_set(datum, f)).collect();
    let mut by_set: BTreeMap<&RootSet, Vec<usize>> = BTreeMap::new();
    for (n, s) in sets.iter().enumerate() {
        by_set.entry(s).or_default().push(n);
    }
    let mut assigned = vec![false; all.len()];
    let mut out = Vec::new();
    for n in 0..all.len() {
        if assigned[n] {
            continue;
        }
        let (orbit, _) = root_set_orbit(datum, sets[n].clone(), None, cap)?;
        let mut members: Vec<usize> = orbit
            .iter()
            .filter_map(|s| by_set.get(s))
            .flatten()
            .copied()
            .collect();
        members.sort_unstable();
        for &m in &members {
            assigned[m] = true;
        }
        let face = &all[n];
        out.push(Sheet {
            rho_levi_sq: datum.inner_sq(&rho_levi(datum, face)),
            semisimple_rank: face.levi_rank(),
            faces: members.into_iter().map(|m| all[m].clone()).collect(),
        });
    }
    Ok(out)
}

/// Index of the sheet containing `face`.
pub fn sheet_index(sheets: &[Sheet], face: &Face) -> Option<usize> {
    sheets.iter().position(|s| s.contains(face))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_datum;
    use crate::weight::{int, rat};

    fn datum(s: &str) -> RootDatum {
        build_root_datum(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn dominantize_examples() {
        let d = datum("SU(2)");
        let (s, v, l) = dominantize(&d, &-d.rho());
        assert_eq!((s, &v, l), (Sign::Minus, d.rho(), 1));
        let d = datum("U(7)");
        let (_, v, _) = dominantize(&d, &WeightVec::from_ints(&[1, 2, 1, 0, -1, -2, 0]));
        assert_eq!(v, WeightVec::from_ints(&[2, 1, 1, 0, 0, -1, -2]));
        let d = datum("SU(3)");
        assert_eq!(dominantize(&d, d.rho()), (Sign::Plus, d.rho().clone(), 0));
    }

    #[test]
    fn u7_face_and_levi_rho() {
        let d = datum("U(7)");
        let mu = WeightVec::from_ints(&[1, 0, 0, 0, 0, 0, -1]);
        let f = face_of(&d, &mu).unwrap();
        assert_eq!(f.zero_set_indices(), vec![1, 2, 3, 4]);
        assert_eq!(rho_levi(&d, &f), WeightVec::from_ints(&[0, 2, 1, 0, -1, -2, 0]));
        assert_eq!(rho_of_point(&d, &mu), WeightVec::from_ints(&[3, 0, 0, 0, 0, 0, -3]));
        assert!(face_of(&d, &-mu).is_err());
    }

    #[test]
    fn u5_levi_rho() {
        let d = datum("U(5)");
        let f = Face::from_indices(&d, &[0, 3]).unwrap();
        let h = rat(1, 2);
        assert_eq!(rho_levi(&d, &f), WeightVec::new(vec![h, -h, int(0), h, -h]));
    }

    #[test]
    fn sheet_counts() {
        assert_eq!(sheets(&datum("SU(3)")).unwrap().len(), 3);
        assert_eq!(sheets(&datum("SU(2)")).unwrap().len(), 2);
        assert_eq!(sheets(&datum("U(4)")).unwrap().len(), 5);
        assert_eq!(faces(&datum("U(5)")).len(), 16);
    }

    #[test]
    fn conjugate_levis() {
        let d = datum("SU(3)");
        let f1 = Face::new(&d, 0b01);
        let f2 = Face::new(&d, 0b10);
        assert!(levi_conjugate(&d, &f1, &f2).unwrap());
        let d = datum("U(4)");
        assert!(levi_conjugate(&d, &Face::new(&d, 0b001), &Face::new(&d, 0b100)).unwrap());
        assert!(!levi_conjugate(&d, &Face::new(&d, 0b101), &Face::new(&d, 0b011)).unwrap());
    }

    #[test]
    fn search_cap_is_reported() {
        let d = datum("SU(5)");
        let f = Face::new(&d, 0b0001);
        let g = Face::new(&d, 0b1000);
        assert!(matches!(levi_conjugate_capped(&d, &f, &g, 2), Err(Error::SearchLimit { .. })));
    }
}
