use std::collections::{BTreeSet, VecDeque};

use coadjoint_core::chamber::{self, Face};
use coadjoint_core::orbits;
use coadjoint_core::{build_root_datum, int, rat, Rational, RootDatum, WeightVec};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const GROUPS: &[&str] = &[
    "SU(2)", "SU(3)", "SU(4)", "Sp(2)", "G2", "Spin(7)", "U(4)", "SO(3)", "SO(5)", "Sp(3)", "Spin(8)",
    "F4", "SU(2)xU(2)", "SU(3)xT1",
];

fn datum(s: &str) -> RootDatum {
    build_root_datum(&s.parse().unwrap()).unwrap()
}

fn weyl_orbit(d: &RootDatum, v: &WeightVec) -> BTreeSet<WeightVec> {
    let mut seen = BTreeSet::from([v.clone()]);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..d.semisimple_rank() {
            let y = d.reflect(&x, i);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Orthogonal projection onto the span of the face: remove the component
/// in the span of the zero-set simple roots.
fn project_onto_face(d: &RootDatum, v: &WeightVec, face: &Face) -> WeightVec {
    let idx = face.zero_set_indices();
    let n = idx.len();
    let mut a: Vec<Vec<Rational>> = idx
        .iter()
        .map(|&i| {
            let mut row: Vec<Rational> = idx.iter().map(|&j| d.inner(d.root(i), d.root(j))).collect();
            row.push(d.inner(v, d.root(i)));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).unwrap();
        a.swap(c, p);
        let inv = Rational::from_integer(1) / a[c][c];
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                for k in 0..=n {
                    let t = a[c][k];
                    a[r][k] -= f * t;
                }
            }
        }
    }
    let mut out = v.clone();
    for (r, &i) in idx.iter().enumerate() {
        out.axpy(-a[r][n], d.root(i));
    }
    out
}

#[test]
fn root_string_closure() {
    for g in GROUPS {
        let d = datum(g);
        let n = d.roots().len();
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let k = d.pairing_idx(d.root(b), a);
                assert!(k.is_integer(), "{g}");
                if k.is_positive() {
                    let diff = d.root(b) - d.root(a);
                    assert!(d.root_index(&diff).is_some(), "{g}: β−α not a root");
                }
            }
            assert_eq!(d.pairing_idx(d.root(a), a), int(2), "{g}");
        }
    }
}

#[test]
fn positive_root_counts_and_weyl_orders() {
    let expect = [
        ("SU(4)", 6, 24u128),
        ("Sp(3)", 9, 48),
        ("Spin(8)", 12, 192),
        ("G2", 6, 12),
        ("F4", 24, 1152),
        ("E6", 36, 51840),
        ("E7", 63, 2903040),
        ("E8", 120, 696729600),
    ];
    for (g, n, w) in expect {
        let d = datum(g);
        assert_eq!(d.num_positive_roots(), n, "{g}");
        assert_eq!(d.weyl_order(), w, "{g}");
    }
}

#[test]
fn rho_pairs_to_one_exactly_on_simple_roots() {
    for g in GROUPS {
        let d = datum(g);
        for k in 0..d.num_positive_roots() {
            let p = d.pairing_idx(d.rho(), k);
            assert_eq!(p == int(1), k < d.semisimple_rank(), "{g} root {k}");
        }
        for i in 0..d.semisimple_rank() {
            for j in 0..d.semisimple_rank() {
                if i != j {
                    assert!(!d.inner(d.root(i), d.root(j)).is_positive(), "{g}");
                }
            }
        }
    }
}

#[test]
fn lattice_contains_roots_and_pairs_integrally() {
    for g in GROUPS {
        let d = datum(g);
        for k in 0..d.roots().len() {
            assert!(d.in_lattice(d.root(k)), "{g}");
            for b in d.lattice_basis() {
                assert!(d.pairing_idx(b, k).is_integer(), "{g}");
            }
        }
    }
}

#[test]
fn rho_decomposition_per_face() {
    for g in GROUPS {
        let d = datum(g);
        let rho = d.rho().clone();
        let r = d.semisimple_rank();
        let all = chamber::faces(&d);
        assert_eq!(all.len(), 1 << r, "{g}");
        for f in &all {
            let rl = chamber::rho_levi(&d, f);
            let rest = &rho - &rl;
            assert!(d.inner(&rest, &rl).is_zero(), "{g} {f}");
            assert!(orbits::in_face(&d, &rest, f), "{g} {f}");
            assert_eq!(chamber::rho_of_point(&d, &rest), rest, "{g} {f}");
            let full = f.zero_set().count_ones() as usize == r;
            let (a, b) = (d.inner_sq(&rho), d.inner_sq(&rl));
            assert!(a >= b);
            assert_eq!(a == b, full, "{g} {f}");
        }
    }
}

#[test]
fn dominant_representative_is_unique() {
    for g in ["SU(2)", "SU(3)", "SU(4)", "Sp(2)", "G2", "Spin(7)", "U(3)"] {
        let d = datum(g);
        let v = WeightVec::new((0..d.dim()).map(|i| rat(2 * i as i128 - 3, 2)).collect());
        let (_, dom, _) = chamber::dominantize(&d, &v);
        let doms: Vec<_> = weyl_orbit(&d, &v).into_iter().filter(|x| d.is_dominant(x)).collect();
        assert_eq!(doms, vec![dom.clone()], "{g}");
        assert_eq!(chamber::dominantize(&d, &dom), (coadjoint_core::Sign::Plus, dom, 0));
    }
}

fn group_index() -> impl Strategy<Value = usize> {
    0..GROUPS.len()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-12i128..=12, prop::sample::select(vec![1i128, 2, 3])).prop_map(|(n, q)| rat(n, q))
}

fn vector(dim: usize) -> impl Strategy<Value = WeightVec> {
    prop::collection::vec(rational(), dim).prop_map(WeightVec::new)
}

fn group_and_vectors() -> impl Strategy<Value = (usize, WeightVec, WeightVec)> {
    group_index().prop_flat_map(|g| {
        let dim = datum(GROUPS[g]).dim();
        (Just(g), vector(dim), vector(dim))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weyl_invariance_of_product((g, v, w) in group_and_vectors()) {
        let d = datum(GROUPS[g]);
        for i in 0..d.semisimple_rank() {
            prop_assert_eq!(d.inner(&d.reflect(&v, i), &d.reflect(&w, i)), d.inner(&v, &w));
        }
    }

    #[test]
    fn dominantize_idempotent_and_signed((g, v, _w) in group_and_vectors()) {
        let d = datum(GROUPS[g]);
        let (s, dom, len) = chamber::dominantize(&d, &v);
        prop_assert!(d.is_dominant(&dom));
        prop_assert_eq!(s, coadjoint_core::Sign::from_parity(len));
        prop_assert_eq!(d.inner_sq(&dom), d.inner_sq(&v));
        let again = chamber::dominantize(&d, &dom);
        prop_assert_eq!(again.1, dom);
        prop_assert_eq!(again.2, 0);
    }

    #[test]
    fn projection_lands_in_face((g, v, _w) in group_and_vectors(), mask in any::<u64>()) {
        let d = datum(GROUPS[g]);
        // regular dominant ξ from the positive part of v
        let coords: Vec<Rational> = d.fundamental_coords(&v).into_iter().enumerate().map(|(i, c)| {
            if i < d.semisimple_rank() { c.abs() + rat(1, 7) } else { c }
        }).collect();
        let xi = d.from_fundamental_coords(&coords);
        prop_assert!(d.is_regular(&xi) || d.semisimple_rank() == 0);
        let face = Face::new(&d, mask & ((1u64 << d.semisimple_rank()) - 1));
        let p = project_onto_face(&d, &xi, &face);
        prop_assert!(orbits::in_face(&d, &p, &face));
    }

    #[test]
    fn dual_is_involution_commuting_with_shift((g, v, _w) in group_and_vectors()) {
        let d = datum(GROUPS[g]);
        let o = orbits::orbit_from_point(&d, &v).unwrap();
        let dual = orbits::dual_orbit(&d, &o);
        prop_assert_eq!(&orbits::dual_orbit(&d, &dual), &o);
        prop_assert_eq!(orbits::shift(&d, &dual), orbits::dual_orbit(&d, &orbits::shift(&d, &o)));
        prop_assert_eq!(orbits::is_admissible(&d, &dual), orbits::is_admissible(&d, &o));
    }

    #[test]
    fn distance_matches_weyl_orbit_minimum((g, v, w) in group_and_vectors()) {
        let d = datum(GROUPS[g]);
        prop_assume!(d.weyl_order() <= 192);
        let o1 = orbits::orbit_from_point(&d, &v).unwrap();
        let o2 = orbits::orbit_from_point(&d, &w).unwrap();
        let brute = weyl_orbit(&d, &w).iter().map(|x| d.inner_sq(&(o1.rep() - x))).min().unwrap();
        prop_assert_eq!(orbits::orbit_distance_sq(&d, &o1, &o2), brute);
    }

    #[test]
    fn scale_covariance((g, v, w) in group_and_vectors()) {
        let name = GROUPS[g];
        let scaled: String = name.split('x').map(|f| format!("{f}@scale=5/3")).collect::<Vec<_>>().join("x");
        let d = datum(name);
        let ds = datum(&scaled);
        let s = rat(5, 3);
        prop_assert_eq!(ds.inner(&v, &w), d.inner(&v, &w) * s);
        let o = orbits::orbit_from_point(&d, &v).unwrap();
        let os = orbits::orbit_from_point(&ds, &v).unwrap();
        prop_assert_eq!(&o, &os);
        prop_assert_eq!(orbits::is_admissible(&d, &o), orbits::is_admissible(&ds, &os));
        prop_assert_eq!(orbits::shift(&d, &o), orbits::shift(&ds, &os));
        let lambda = d.rho() + o.rep();
        let r = orbits::magical_check(&d, &lambda, &w).unwrap();
        let rs = orbits::magical_check(&ds, &lambda, &w).unwrap();
        prop_assert_eq!(rs.lhs, r.lhs * s);
        prop_assert_eq!(rs.mid, r.mid * s);
        prop_assert_eq!(rs.rhs, r.rhs * s);
        prop_assert_eq!(rs.equality, r.equality);
        prop_assert!(r.consistent() && rs.consistent());
    }
}
