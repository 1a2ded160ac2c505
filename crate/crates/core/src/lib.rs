//! Exact combinatorics of coadjoint orbits of compact connected Lie groups.
//!
//! Everything is computed over the rationals: root data and character
//! lattices ([`rootsys`]), the face lattice of the positive Weyl chamber and
//! its Levi classes ([`chamber`]), admissibility, shifts, distances and
//! ancestors of orbits ([`orbits`]), and spin quantization with holomorphic
//! induction ([`quant`]).
//!
//! ```
//! use coadjoint_core::{build_root_datum, orbits, quant, GroupSpec, WeightVec};
//!
//! let spec: GroupSpec = "SU(3)".parse().unwrap();
//! let datum = build_root_datum(&spec).unwrap();
//! // 3/2 ω₁ in fundamental-weight coordinates
//! let mu = WeightVec::new(vec![coadjoint_core::rat(3, 2), coadjoint_core::int(0)]);
//! let orbit = orbits::orbit_from_point(&datum, &mu).unwrap();
//! assert!(orbits::is_admissible(&datum, &orbit));
//! assert!(!orbits::is_integral(&datum, &orbit));
//! let q = quant::qspin(&datum, &orbit).unwrap();
//! assert_eq!(q.label(), Some(datum.rho()));
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cartan;
pub mod chamber;
pub mod coords;
pub mod error;
pub mod linalg;
pub mod orbits;
pub mod quant;
pub mod rootsys;
pub mod spec;
pub mod weight;

pub use cartan::CartanType;
pub use chamber::{Face, Sheet};
pub use coords::Basis;
pub use error::Error;
pub use orbits::{MagicalReport, Orbit, TraceReport};
pub use quant::{Component, SignedIrrep};
pub use rootsys::{build_root_datum, RootDatum};
pub use spec::{Factor, FactorKind, GroupSpec};
pub use weight::{int, rat, Rational, Sign, WeightVec};
