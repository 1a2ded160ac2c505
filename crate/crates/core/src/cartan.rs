//! Cartan types of the simple compact Lie algebras.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Cartan type of a simple factor, with Bourbaki numbering of simple roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    pub fn validate(self) -> Result<(), Error> {
        let ok = match self {
            CartanType::A(n) => n >= 1,
            CartanType::B(n) | CartanType::C(n) => n >= 2,
            CartanType::D(n) => n >= 3,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(alloc::format!("rank too small for type {self}")))
        }
    }

    /// Tabulated number of positive roots.
    pub fn num_positive_roots(self) -> usize {
        match self {
            CartanType::A(n) => n * (n + 1) / 2,
            CartanType::B(n) | CartanType::C(n) => n * n,
            CartanType::D(n) => n * (n - 1),
            CartanType::E6 => 36,
            CartanType::E7 => 63,
            CartanType::E8 => 120,
            CartanType::F4 => 24,
            CartanType::G2 => 6,
        }
    }

    /// Tabulated order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u128 << n) * fact(n),
            CartanType::D(n) => (1u128 << (n - 1)) * fact(n),
            CartanType::E6 => 51_840,
            CartanType::E7 => 2_903_040,
            CartanType::E8 => 696_729_600,
            CartanType::F4 => 1_152,
            CartanType::G2 => 12,
        }
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots, normalized so that
    /// short roots have squared length 2.
    pub fn simple_root_form(self) -> Vec<Vec<i128>> {
        let n = self.rank();
        let mut b = vec![vec![0i128; n]; n];
        let link = |b: &mut Vec<Vec<i128>>, i: usize, j: usize, v: i128| {
            b[i][j] = v;
            b[j][i] = v;
        };
        match self {
            CartanType::A(_) => {
                for i in 0..n {
                    b[i][i] = 2;
                }
                for i in 0..n.saturating_sub(1) {
                    link(&mut b, i, i + 1, -1);
                }
            }
            CartanType::B(_) => {
                // α_1..α_{n-1} long, α_n short
                for i in 0..n {
                    b[i][i] = if i + 1 == n { 2 } else { 4 };
                }
                for i in 0..n - 1 {
                    link(&mut b, i, i + 1, -2);
                }
            }
            CartanType::C(_) => {
                // α_1..α_{n-1} short, α_n long
                for i in 0..n {
                    b[i][i] = if i + 1 == n { 4 } else { 2 };
                }
                for i in 0..n - 2 {
                    link(&mut b, i, i + 1, -1);
                }
                link(&mut b, n - 2, n - 1, -2);
            }
            CartanType::D(_) => {
                for i in 0..n {
                    b[i][i] = 2;
                }
                for i in 0..n - 2 {
                    link(&mut b, i, i + 1, -1);
                }
                link(&mut b, n - 3, n - 1, -1);
            }
            CartanType::E6 | CartanType::E7 | CartanType::E8 => {
                for i in 0..n {
                    b[i][i] = 2;
                }
                // 1-3-4-5-6-(7-(8)) with 2 attached to 4
                link(&mut b, 0, 2, -1);
                link(&mut b, 1, 3, -1);
                for i in 2..n - 1 {
                    link(&mut b, i, i + 1, -1);
                }
            }
            CartanType::F4 => {
                b[0][0] = 4;
                b[1][1] = 4;
                b[2][2] = 2;
                b[3][3] = 2;
                link(&mut b, 0, 1, -2);
                link(&mut b, 1, 2, -2);
                link(&mut b, 2, 3, -1);
            }
            CartanType::G2 => {
                b[0][0] = 2;
                b[1][1] = 6;
                link(&mut b, 0, 1, -3);
            }
        }
        b
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E6 => f.write_str("E6"),
            CartanType::E7 => f.write_str("E7"),
            CartanType::E8 => f.write_str("E8"),
            CartanType::F4 => f.write_str("F4"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}
