//! Conversions between native, fundamental-weight and ambient coordinates.
//!
//! Ambient coordinates exist for `SU(n)`, `U(n)` and `T1` factors only:
//! `SU(n)` is read in e_1..e_n with coordinates summing to zero.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::cartan::CartanType;
use crate::error::Error;
use crate::rootsys::RootDatum;
use crate::spec::FactorKind;
use crate::weight::{Rational, WeightVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// The datum's own coordinates.
    Native,
    /// `ω_1..ω_r` followed by the central directions.
    Fundamental,
    /// e_1..e_n per unitary factor.
    Ambient,
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "native" => Ok(Basis::Native),
            "fundamental" => Ok(Basis::Fundamental),
            "ambient" => Ok(Basis::Ambient),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Native => "native",
            Basis::Fundamental => "fundamental",
            Basis::Ambient => "ambient",
        })
    }
}

fn special_unitary(kind: FactorKind) -> Option<usize> {
    match kind {
        FactorKind::Simple(CartanType::A(n)) => Some(n + 1),
        _ => None,
    }
}

pub fn supports_ambient(datum: &RootDatum) -> bool {
    datum.blocks().iter().all(|b| {
        matches!(b.factor.kind, FactorKind::Unitary(_) | FactorKind::Torus)
            || special_unitary(b.factor.kind).is_some()
    })
}

/// Ambient when every factor has one, fundamental otherwise.
pub fn default_basis(datum: &RootDatum) -> Basis {
    if supports_ambient(datum) {
        Basis::Ambient
    } else {
        Basis::Fundamental
    }
}

pub fn basis_dim(datum: &RootDatum, basis: Basis) -> usize {
    match basis {
        Basis::Ambient => datum
            .blocks()
            .iter()
            .map(|b| special_unitary(b.factor.kind).unwrap_or(b.dim))
            .sum(),
        _ => datum.dim(),
    }
}

fn unsupported(datum: &RootDatum) -> Error {
    Error::UnsupportedBasis(format!(
        "ambient coordinates are not available for {}",
        datum.spec()
    ))
}

/// Reads coordinates given in `basis` as a native vector.
pub fn to_native(datum: &RootDatum, coords: &[Rational], basis: Basis) -> Result<WeightVec, Error> {
    let expected = match basis {
        Basis::Ambient if !supports_ambient(datum) => return Err(unsupported(datum)),
        b => basis_dim(datum, b),
    };
    if coords.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            got: coords.len(),
        });
    }
    match basis {
        Basis::Native => Ok(WeightVec::new(coords.to_vec())),
        Basis::Fundamental => Ok(datum.from_fundamental_coords(coords)),
        Basis::Ambient => {
            let mut out = Vec::with_capacity(datum.dim());
            let mut at = 0;
            for b in datum.blocks() {
                match special_unitary(b.factor.kind) {
                    Some(n) => {
                        let v = &coords[at..at + n];
                        let sum: Rational = v.iter().copied().sum();
                        if !sum.is_zero() {
                            return Err(Error::Parse(format!(
                                "ambient coordinates of SU({n}) must sum to 0, got {sum}"
                            )));
                        }
                        out.extend(v.windows(2).map(|w| w[0] - w[1]));
                        at += n;
                    }
                    None => {
                        out.extend_from_slice(&coords[at..at + b.dim]);
                        at += b.dim;
                    }
                }
            }
            Ok(WeightVec::new(out))
        }
    }
}

/// Writes a native vector in `basis`.
pub fn from_native(datum: &RootDatum, v: &WeightVec, basis: Basis) -> Result<Vec<Rational>, Error> {
    datum.check_dim(v)?;
    match basis {
        Basis::Native => Ok(v.coords().to_vec()),
        Basis::Fundamental => Ok(datum.fundamental_coords(v)),
        Basis::Ambient => {
            if !supports_ambient(datum) {
                return Err(unsupported(datum));
            }
            let mut out = Vec::with_capacity(basis_dim(datum, basis));
            for b in datum.blocks() {
                let c = &v.coords()[b.offset..b.offset + b.dim];
                match special_unitary(b.factor.kind) {
                    Some(n) => {
                        // Σ c_i ω_i with ω_i = (1^i, 0^{n-i}) - (i/n)(1,..,1)
                        let nn = Rational::from_integer(n as i128);
                        let shift: Rational = c
                            .iter()
                            .enumerate()
                            .map(|(i, ci)| *ci * Rational::from_integer(i as i128 + 1) / nn)
                            .sum();
                        let mut tail = Rational::zero();
                        let mut amb = Vec::with_capacity(n);
                        for i in (0..n).rev() {
                            if i < n - 1 {
                                tail += c[i];
                            }
                            amb.push(tail - shift);
                        }
                        amb.reverse();
                        out.extend(amb);
                    }
                    None => out.extend_from_slice(c),
                }
            }
            Ok(out)
        }
    }
}
