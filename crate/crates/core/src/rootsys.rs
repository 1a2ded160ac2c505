//! Exact root data for products of simple factors and central tori.
//!
//! Native coordinates of t*, factor by factor:
//!
//! * simple factors and `SO(2n+1)`: fundamental-weight coordinates, so the
//!   simple root α_i is row i of the Cartan matrix;
//! * `U(n)`: ambient coordinates e_1..e_n with the standard product;
//! * `T1`: one coordinate.
//!
//! Roots are indexed `0..N` (positive, sorted by height, simple roots
//! first) and `N..2N` (the negatives, in the same order).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::cartan::CartanType;
use crate::error::Error;
use crate::linalg::{self, Matrix};
use crate::spec::{Factor, FactorKind, GroupSpec};
use crate::weight::{int, Rational, WeightVec};

/// Placement of one factor inside the global coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub factor: Factor,
    /// First native coordinate of the factor.
    pub offset: usize,
    pub dim: usize,
    /// Index of the factor's first simple root.
    pub simple_offset: usize,
    pub rank: usize,
    /// Index of the factor's central direction among all central ones.
    pub central_index: Option<usize>,
}

/// Immutable root datum of a compact connected group with a chosen maximal
/// torus, positive system, invariant product and character lattice.
#[derive(Clone, Debug)]
pub struct RootDatum {
    spec: GroupSpec,
    blocks: Vec<Block>,
    dim: usize,
    rank: usize,
    gram: Matrix,
    cartan: Vec<Vec<i64>>,
    /// All 2N roots.
    roots: Vec<WeightVec>,
    /// Simple-root coefficients of all 2N roots.
    coeffs: Vec<Vec<i64>>,
    /// Covectors h with ⟨v, H_α⟩ = v·h.
    coroots: Vec<Vec<Rational>>,
    norms: Vec<Rational>,
    index: BTreeMap<WeightVec, usize>,
    reflections: Vec<Vec<usize>>,
    lattice: Vec<WeightVec>,
    lattice_inv: Matrix,
    fundamental_weights: Vec<WeightVec>,
    central_basis: Vec<WeightVec>,
    fundamental_inv: Matrix,
    rho: WeightVec,
}

/// Builds the root datum of `spec`.
pub fn build_root_datum(spec: &GroupSpec) -> Result<RootDatum, Error> {
    RootDatum::new(spec)
}

impl RootDatum {
    pub fn new(spec: &GroupSpec) -> Result<Self, Error> {
        spec.validate()?;
        let dim = spec.dim();
        let rank = spec.semisimple_rank();

        let mut blocks = Vec::with_capacity(spec.factors.len());
        let (mut offset, mut simple_offset, mut central) = (0, 0, 0);
        for factor in &spec.factors {
            let central_index = (factor.central_rank() == 1).then(|| {
                central += 1;
                central - 1
            });
            blocks.push(Block {
                factor: factor.clone(),
                offset,
                dim: factor.dim(),
                simple_offset,
                rank: factor.semisimple_rank(),
                central_index,
            });
            offset += factor.dim();
            simple_offset += factor.semisimple_rank();
        }

        let mut gram = vec![vec![Rational::zero(); dim]; dim];
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut simple_roots = Vec::with_capacity(rank);
        let mut lattice = Vec::with_capacity(dim);
        let mut central_basis = Vec::new();
        for block in &blocks {
            fill_block(block, dim, &mut gram, &mut cartan, &mut simple_roots, &mut lattice, &mut central_basis);
        }

        let pos_coeffs = positive_root_coeffs(&cartan);
        let n_pos = pos_coeffs.len();
        let mut coeffs = pos_coeffs.clone();
        coeffs.extend(pos_coeffs.iter().map(|c| c.iter().map(|x| -x).collect()));

        let roots: Vec<WeightVec> = coeffs
            .iter()
            .map(|c| {
                let mut v = WeightVec::zeros(dim);
                for (i, &k) in c.iter().enumerate() {
                    if k != 0 {
                        v.axpy(int(k as i128), &simple_roots[i]);
                    }
                }
                v
            })
            .collect();

        let norms: Vec<Rational> = roots.iter().map(|r| quad(&gram, r.coords(), r.coords())).collect();
        let coroots: Vec<Vec<Rational>> = roots
            .iter()
            .zip(&norms)
            .map(|(r, n)| {
                let s = int(2) / *n;
                linalg::times_col(&gram, r.coords()).into_iter().map(|x| x * s).collect()
            })
            .collect();

        let index: BTreeMap<WeightVec, usize> =
            roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let coeff_index: BTreeMap<&[i64], usize> =
            coeffs.iter().enumerate().map(|(k, c)| (c.as_slice(), k)).collect();
        let reflections: Vec<Vec<usize>> = (0..rank)
            .map(|i| {
                coeffs
                    .iter()
                    .map(|c| {
                        let p: i64 = (0..rank).map(|k| c[k] * cartan[k][i]).sum();
                        let mut img = c.clone();
                        img[i] -= p;
                        coeff_index[img.as_slice()]
                    })
                    .collect()
            })
            .collect();

        let mut rho = WeightVec::zeros(dim);
        for r in &roots[..n_pos] {
            rho += r;
        }
        rho = rho.scale(Rational::new(1, 2));

        let cartan_q: Matrix = cartan
            .iter()
            .map(|row| row.iter().map(|&x| int(x as i128)).collect())
            .collect();
        let cartan_inv = linalg::inverse(&cartan_q).expect("Cartan matrix is invertible");
        let fundamental_weights: Vec<WeightVec> = cartan_inv
            .iter()
            .map(|row| {
                let mut w = WeightVec::zeros(dim);
                for (k, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        w.axpy(*c, &simple_roots[k]);
                    }
                }
                w
            })
            .collect();
        let fundamental: Matrix = fundamental_weights
            .iter()
            .chain(&central_basis)
            .map(|w| w.coords().to_vec())
            .collect();
        let fundamental_inv = linalg::inverse(&fundamental).expect("fundamental basis spans t*");

        let mut datum = RootDatum {
            spec: spec.clone(),
            blocks,
            dim,
            rank,
            gram,
            cartan,
            roots,
            coeffs,
            coroots,
            norms,
            index,
            reflections,
            lattice_inv: Vec::new(),
            lattice: Vec::new(),
            fundamental_weights,
            central_basis,
            fundamental_inv,
            rho,
        };
        match &spec.lattice_basis {
            Some(basis) => datum.set_lattice(basis.clone())?,
            None => datum.set_lattice(lattice)?,
        }
        Ok(datum)
    }

    /// Same group with the character lattice replaced by `basis` (native
    /// coordinates), validated.
    pub fn with_lattice(&self, basis: Vec<WeightVec>) -> Result<Self, Error> {
        let mut d = self.clone();
        d.set_lattice(basis.clone())?;
        d.spec.lattice_basis = Some(basis);
        Ok(d)
    }

    fn set_lattice(&mut self, basis: Vec<WeightVec>) -> Result<(), Error> {
        if basis.len() != self.dim {
            return Err(Error::LatticeBasis(format!(
                "expected {} basis vectors, got {}",
                self.dim,
                basis.len()
            )));
        }
        if let Some(v) = basis.iter().find(|v| v.dim() != self.dim) {
            return Err(Error::LatticeBasis(format!(
                "basis vector {v} has {} coordinates, expected {}",
                v.dim(),
                self.dim
            )));
        }
        let m: Matrix = basis.iter().map(|v| v.coords().to_vec()).collect();
        let inv = linalg::inverse(&m)
            .ok_or_else(|| Error::LatticeBasis("basis is not of full rank".into()))?;
        let n = self.num_positive_roots();
        for k in 0..n {
            let c = linalg::row_times(self.roots[k].coords(), &inv);
            if c.iter().any(|x| !x.is_integer()) {
                return Err(Error::LatticeBasis(format!(
                    "lattice does not contain the root {}",
                    self.roots[k]
                )));
            }
            for v in &basis {
                let p = v.dot(&self.coroots[k]);
                if !p.is_integer() {
                    return Err(Error::LatticeBasis(format!(
                        "basis vector {v} pairs to {p} with the coroot of {}",
                        self.roots[k]
                    )));
                }
            }
        }
        self.lattice = basis;
        self.lattice_inv = inv;
        Ok(())
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Dimension of t*.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn semisimple_rank(&self) -> usize {
        self.rank
    }

    pub fn central_rank(&self) -> usize {
        self.central_basis.len()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Cartan matrix `C_ij = ⟨α_i, H_{α_j}⟩` of the semisimple part.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn simple_roots(&self) -> &[WeightVec] {
        &self.roots[..self.rank]
    }

    pub fn positive_roots(&self) -> &[WeightVec] {
        &self.roots[..self.num_positive_roots()]
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> &[WeightVec] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &WeightVec {
        &self.roots[k]
    }

    /// Coefficients of root `k` in the simple roots.
    pub fn root_coeffs(&self, k: usize) -> &[i64] {
        &self.coeffs[k]
    }

    /// Covector of the coroot `H_α` for root `k`.
    pub fn coroot(&self, k: usize) -> &[Rational] {
        &self.coroots[k]
    }

    pub fn root_norm_sq(&self, k: usize) -> Rational {
        self.norms[k]
    }

    pub fn root_index(&self, alpha: &WeightVec) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    /// Index of `-α` for root index `k`.
    pub fn negate_index(&self, k: usize) -> usize {
        let n = self.num_positive_roots();
        if k < n {
            k + n
        } else {
            k - n
        }
    }

    /// Action of the simple reflection `s_i` on root indices.
    pub fn reflection_perm(&self, i: usize) -> &[usize] {
        &self.reflections[i]
    }

    pub fn lattice_basis(&self) -> &[WeightVec] {
        &self.lattice
    }

    pub fn fundamental_weights(&self) -> &[WeightVec] {
        &self.fundamental_weights
    }

    /// Basis of the center of t*: `(1,..,1)` per `U(n)` and `1` per `T1`.
    pub fn central_basis(&self) -> &[WeightVec] {
        &self.central_basis
    }

    /// ρ^K, the half-sum of the positive roots.
    pub fn rho(&self) -> &WeightVec {
        &self.rho
    }

    /// Order of W, from the tabulated factor orders.
    pub fn weyl_order(&self) -> u128 {
        self.spec
            .factors
            .iter()
            .filter_map(Factor::cartan)
            .map(CartanType::weyl_order)
            .product()
    }

    pub fn check_dim(&self, v: &WeightVec) -> Result<(), Error> {
        if v.dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            })
        }
    }

    /// The invariant product `(v, w)`.
    pub fn inner(&self, v: &WeightVec, w: &WeightVec) -> Rational {
        quad(&self.gram, v.coords(), w.coords())
    }

    /// `‖v‖²`.
    pub fn inner_sq(&self, v: &WeightVec) -> Rational {
        self.inner(v, v)
    }

    /// `⟨v, H_α⟩` for an arbitrary root α.
    pub fn pairing(&self, v: &WeightVec, alpha: &WeightVec) -> Result<Rational, Error> {
        let k = self
            .root_index(alpha)
            .ok_or_else(|| Error::NotARoot(format!("{alpha}")))?;
        Ok(self.pairing_idx(v, k))
    }

    /// `⟨v, H_α⟩` for root index `k`.
    pub fn pairing_idx(&self, v: &WeightVec, k: usize) -> Rational {
        v.dot(&self.coroots[k])
    }

    /// `(v, α)` for root index `k`.
    pub fn inner_root(&self, v: &WeightVec, k: usize) -> Rational {
        self.pairing_idx(v, k) * self.norms[k] / int(2)
    }

    /// `s_i v = v − ⟨v, H_{α_i}⟩ α_i`.
    pub fn reflect(&self, v: &WeightVec, i: usize) -> WeightVec {
        let p = self.pairing_idx(v, i);
        let mut out = v.clone();
        if !p.is_zero() {
            out.axpy(-p, &self.roots[i]);
        }
        out
    }

    /// Coordinates of `v` in the lattice basis.
    pub fn lattice_coords(&self, v: &WeightVec) -> Vec<Rational> {
        linalg::row_times(v.coords(), &self.lattice_inv)
    }

    pub fn in_lattice(&self, v: &WeightVec) -> bool {
        self.lattice_coords(v).iter().all(|c| c.is_integer())
    }

    /// Coordinates in the basis `ω_1..ω_r, central_1..central_z`.
    pub fn fundamental_coords(&self, v: &WeightVec) -> Vec<Rational> {
        linalg::row_times(v.coords(), &self.fundamental_inv)
    }

    pub fn from_fundamental_coords(&self, c: &[Rational]) -> WeightVec {
        let mut v = WeightVec::zeros(self.dim);
        for (x, w) in c.iter().zip(self.fundamental_weights.iter().chain(&self.central_basis)) {
            if !x.is_zero() {
                v.axpy(*x, w);
            }
        }
        v
    }

    pub fn is_dominant(&self, v: &WeightVec) -> bool {
        (0..self.rank).all(|i| !self.pairing_idx(v, i).is_negative())
    }

    /// No root is orthogonal to `v`.
    pub fn is_regular(&self, v: &WeightVec) -> bool {
        (0..self.num_positive_roots()).all(|k| !self.pairing_idx(v, k).is_zero())
    }

    /// Half-sum of the given positive root indices.
    pub fn half_sum(&self, indices: impl IntoIterator<Item = usize>) -> WeightVec {
        let mut v = WeightVec::zeros(self.dim);
        for k in indices {
            v += &self.roots[k];
        }
        v.scale(Rational::new(1, 2))
    }
}

fn quad(g: &Matrix, v: &[Rational], w: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, wj) in w.iter().enumerate() {
            let gij = &g[i][j];
            if !gij.is_zero() && !wj.is_zero() {
                acc += *vi * *gij * *wj;
            }
        }
    }
    acc
}

fn fill_block(
    block: &Block,
    dim: usize,
    gram: &mut Matrix,
    cartan: &mut [Vec<i64>],
    simple_roots: &mut Vec<WeightVec>,
    lattice: &mut Vec<WeightVec>,
    central_basis: &mut Vec<WeightVec>,
) {
    let (o, s, scale) = (block.offset, block.simple_offset, block.factor.scale);
    let form = block.factor.cartan().map(CartanType::simple_root_form);
    if let Some(b) = &form {
        for i in 0..block.rank {
            for j in 0..block.rank {
                cartan[s + i][s + j] = (2 * b[i][j] / b[j][j]) as i64;
            }
        }
    }
    match block.factor.kind {
        FactorKind::Unitary(n) => {
            for i in 0..n {
                gram[o + i][o + i] = scale;
                lattice.push(WeightVec::unit(dim, o + i));
            }
            for i in 0..n - 1 {
                simple_roots.push(&WeightVec::unit(dim, o + i) - &WeightVec::unit(dim, o + i + 1));
            }
            let mut z = WeightVec::zeros(dim).into_coords();
            for x in &mut z[o..o + n] {
                *x = Rational::one();
            }
            central_basis.push(z.into());
        }
        FactorKind::Torus => {
            gram[o][o] = scale;
            lattice.push(WeightVec::unit(dim, o));
            central_basis.push(WeightVec::unit(dim, o));
        }
        FactorKind::Simple(_) | FactorKind::OddOrthogonal(_) => {
            let r = block.rank;
            let b = form.expect("semisimple factor");
            let c: Matrix = (0..r)
                .map(|i| (0..r).map(|j| int(cartan[s + i][s + j] as i128)).collect())
                .collect();
            let c_inv = linalg::inverse(&c).expect("Cartan matrix is invertible");
            let bq: Matrix = b
                .iter()
                .map(|row| row.iter().map(|&x| int(x) * scale).collect())
                .collect();
            let g = linalg::mul(&linalg::mul(&c_inv, &bq), &linalg::transpose(&c_inv));
            for i in 0..r {
                for j in 0..r {
                    gram[o + i][o + j] = g[i][j];
                }
                let mut a = WeightVec::zeros(dim).into_coords();
                for j in 0..r {
                    a[o + j] = c[i][j];
                }
                simple_roots.push(a.into());
            }
            for i in 0..r {
                let mut w = WeightVec::unit(dim, o + i);
                let doubled = match block.factor.kind {
                    FactorKind::OddOrthogonal(_) => i + 1 == r,
                    _ => false,
                };
                if doubled {
                    w = w.scale(int(2));
                }
                lattice.push(w);
            }
        }
    }
}

/// Positive roots as simple-root coefficient vectors, by root-string
/// closure in height order.
fn positive_root_coeffs(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            e
        })
        .collect();
    let mut known: BTreeMap<Vec<i64>, ()> = roots.iter().cloned().map(|c| (c, ())).collect();
    let mut next = 0;
    while next < roots.len() {
        let beta = roots[next].clone();
        next += 1;
        for i in 0..r {
            let pair: i64 = (0..r).map(|k| beta[k] * cartan[k][i]).sum();
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if known.contains_key(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            if p - pair > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if !known.contains_key(&up) {
                    known.insert(up.clone(), ());
                    roots.push(up);
                }
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::rat;

    fn datum(s: &str) -> RootDatum {
        build_root_datum(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn positive_root_counts_match_tables() {
        for (s, t) in [
            ("SU(5)", CartanType::A(4)),
            ("Spin(7)", CartanType::B(3)),
            ("Sp(3)", CartanType::C(3)),
            ("Spin(10)", CartanType::D(5)),
            ("G2", CartanType::G2),
            ("F4", CartanType::F4),
            ("E6", CartanType::E6),
            ("E7", CartanType::E7),
            ("E8", CartanType::E8),
        ] {
            assert_eq!(datum(s).num_positive_roots(), t.num_positive_roots(), "{s}");
        }
    }

    #[test]
    fn u7_rho() {
        let d = datum("U(7)");
        assert_eq!(d.rho(), &WeightVec::from_ints(&[3, 2, 1, 0, -1, -2, -3]));
        assert_eq!(d.inner_sq(d.rho()), int(28));
        let e17 = WeightVec::from_ints(&[1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(d.pairing(&e17, &e17).unwrap(), int(2));
    }

    #[test]
    fn su2_and_su3_norms() {
        let d = datum("SU(2)");
        assert_eq!(d.num_positive_roots(), 1);
        assert_eq!(d.inner_sq(d.rho()), rat(1, 2));
        let d = datum("SU(3)");
        assert_eq!(d.inner_sq(d.rho()), int(2));
        assert_eq!(d.pairing(d.rho(), &d.simple_roots()[0].clone()).unwrap(), int(1));
        assert!(d.pairing(d.rho(), &WeightVec::from_ints(&[1, 0])).is_err());
    }

    #[test]
    fn lattices() {
        let d = datum("U(5)");
        assert!(d.in_lattice(&WeightVec::from_ints(&[-1, -1, 0, 1, 1])));
        assert!(!d.in_lattice(&WeightVec::new(vec![rat(1, 2), int(0), int(0), int(0), int(0)])));
        let d = datum("SU(3)");
        assert!(d.in_lattice(&WeightVec::from_ints(&[1, 0])));
        let d = datum("SO(3)");
        assert!(!d.in_lattice(d.rho()));
        let d = datum("SO(7)");
        assert!(d.in_lattice(&WeightVec::from_ints(&[1, 0, 0])));
        assert!(!d.in_lattice(&WeightVec::from_ints(&[0, 0, 1])));
    }

    #[test]
    fn custom_lattice_validation_names_violator() {
        let d = datum("SU(3)");
        let bad = d.with_lattice(vec![WeightVec::from_ints(&[2, 0]), WeightVec::from_ints(&[0, 2])]);
        assert!(matches!(bad, Err(Error::LatticeBasis(m)) if m.contains("root")));
        let bad = d.with_lattice(vec![
            WeightVec::new(vec![rat(1, 2), int(0)]),
            WeightVec::from_ints(&[0, 1]),
        ]);
        assert!(matches!(bad, Err(Error::LatticeBasis(m)) if m.contains("coroot")));
        let root_lattice = d.with_lattice(d.simple_roots().to_vec()).unwrap();
        assert!(!root_lattice.in_lattice(&WeightVec::from_ints(&[1, 0])));
    }

    #[test]
    fn fundamental_coords_round_trip() {
        let d = datum("U(3)xG2");
        let v = WeightVec::new(vec![rat(1, 2), int(3), int(-1), int(1), rat(2, 3)]);
        let c = d.fundamental_coords(&v);
        assert_eq!(d.from_fundamental_coords(&c), v);
        assert_eq!(d.fundamental_weights().len(), 4);
        for (i, w) in d.fundamental_weights().iter().enumerate() {
            for j in 0..d.semisimple_rank() {
                let expect = if i == j { int(1) } else { int(0) };
                assert_eq!(d.pairing_idx(w, j), expect);
            }
        }
    }

    #[test]
    fn g2_weyl_order_and_reflections() {
        let d = datum("G2");
        assert_eq!(d.weyl_order(), 12);
        for i in 0..2 {
            let perm = d.reflection_perm(i);
            assert_eq!(perm[i], d.negate_index(i));
            for (k, &img) in perm.iter().enumerate() {
                assert_eq!(&d.reflect(d.root(k), i), d.root(img));
            }
        }
    }
}
