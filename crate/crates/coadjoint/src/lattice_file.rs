//! Custom character lattices read from JSON:
//! `{ "basis": [[...], ...], "coordinates": "ambient" | "fundamental" | "native" }`.
//!
//! Entries are integers or `"p/q"` strings. Without `coordinates` the
//! datum's default basis is used.

use std::path::Path;

use coadjoint_core::coords::{self, Basis};
use coadjoint_core::spec::parse_rational;
use coadjoint_core::{Error, Rational, RootDatum, WeightVec};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub basis: Vec<Vec<serde_json::Value>>,
    #[serde(default)]
    pub coordinates: Option<String>,
}

fn entry(v: &serde_json::Value) -> Result<Rational, Error> {
    match v {
        serde_json::Value::String(s) => parse_rational(s),
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i as i128))
            .ok_or_else(|| Error::Parse(format!("lattice entries must be integers or \"p/q\" strings, got {n}"))),
        other => Err(Error::Parse(format!("bad lattice entry {other}"))),
    }
}

impl LatticeFile {
    pub fn parse(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("lattice file: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The basis vectors in native coordinates of `datum`.
    pub fn vectors(&self, datum: &RootDatum) -> Result<Vec<WeightVec>, Error> {
        let basis = match &self.coordinates {
            Some(s) => s.parse::<Basis>()?,
            None => coords::default_basis(datum),
        };
        self.basis
            .iter()
            .map(|row| {
                let c = row.iter().map(entry).collect::<Result<Vec<_>, _>>()?;
                coords::to_native(datum, &c, basis)
            })
            .collect()
    }

    /// `datum` with its character lattice replaced and validated.
    pub fn apply(&self, datum: &RootDatum) -> Result<RootDatum, Error> {
        datum.with_lattice(self.vectors(datum)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use coadjoint_core::{build_root_datum, orbits};

    #[test]
    fn so3_by_file() {
        let d = build_root_datum(&"SU(2)".parse().unwrap()).unwrap();
        let so3 = LatticeFile::parse(r#"{"basis": [[2]], "coordinates": "fundamental"}"#)
            .unwrap()
            .apply(&d)
            .unwrap();
        let rho = orbits::orbit_from_point(&so3, so3.rho()).unwrap();
        assert!(!orbits::is_integral(&so3, &rho));
        assert!(orbits::is_admissible(&so3, &rho));
    }

    #[test]
    fn rejects_bad_lattices() {
        let d = build_root_datum(&"SU(3)".parse().unwrap()).unwrap();
        // a finer lattice than the weight lattice fails coroot integrality
        let fine = LatticeFile::parse(r#"{"basis": [["1/2",0],[0,1]], "coordinates": "fundamental"}"#).unwrap();
        assert!(matches!(fine.apply(&d), Err(Error::LatticeBasis(_))));
        assert!(LatticeFile::parse(r#"{"basis": [[1.5]]}"#).unwrap().apply(&d).is_err());
        assert!(LatticeFile::parse(r#"{"rows": []}"#).is_err());
        // ambient rows of SU(3) must sum to zero
        let ambient = LatticeFile::parse(r#"{"basis": [[1,-1,0],[0,1,-1]]}"#).unwrap();
        assert!(ambient.apply(&d).is_ok());
    }
}
