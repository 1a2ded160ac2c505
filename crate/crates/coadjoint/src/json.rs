//! JSON encodings of exact data. Rationals are strings `p/q`, vectors are
//! comma-separated strings, maps have sorted keys.

use coadjoint_core::coords::{self, Basis};
use coadjoint_core::{Error, MagicalReport, Rational, RootDatum, SignedIrrep, WeightVec};
use serde_json::{json, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn coords(c: &[Rational]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// `v` written in `basis`.
pub fn vector(datum: &RootDatum, v: &WeightVec, basis: Basis) -> Result<Value, Error> {
    Ok(Value::String(coords(&coords::from_native(datum, v, basis)?)))
}

/// `"zero"`, or sign and label with the label in fundamental-weight
/// coordinates.
pub fn irrep(datum: &RootDatum, q: &SignedIrrep) -> Result<Value, Error> {
    Ok(match q {
        SignedIrrep::Zero => Value::String("zero".into()),
        SignedIrrep::Irrep { sign, label } => json!({
            "sign": sign.value(),
            "label": vector(datum, label, Basis::Fundamental)?,
        }),
    })
}

pub fn magical(r: &MagicalReport) -> Value {
    let witness = match &r.witness {
        None => Value::Null,
        Some(w) => json!({
            "mu_dominant": w.mu_dominant,
            "face": w.face.as_ref().map(|f| f.to_string()),
            "shift_matches": w.shift_matches,
            "rho_shift_matches": w.rho_shift_matches,
            "holds": w.holds(),
        }),
    };
    json!({
        "lhs": rational(&r.lhs),
        "mid": rational(&r.mid),
        "rhs": rational(&r.rhs),
        "equality": r.equality,
        "chain_holds": r.chain_holds(),
        "first_equal": r.first_equal(),
        "second_equal": r.second_equal(),
        "consistent": r.consistent(),
        "witness": witness,
    })
}

/// Error object for mathematical precondition failures.
pub fn error(e: &Error) -> Value {
    let kind = format!("{e:?}");
    let kind = kind.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
    json!({ "error": { "kind": kind, "message": e.to_string() } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use coadjoint_core::{build_root_datum, rat, Sign};

    #[test]
    fn encodings() {
        let d = build_root_datum(&"SU(3)".parse().unwrap()).unwrap();
        assert_eq!(rational(&rat(3, 2)), json!("3/2"));
        let q = SignedIrrep::Irrep { sign: Sign::Plus, label: d.rho().clone() };
        assert_eq!(irrep(&d, &q).unwrap(), json!({"label": "1,1", "sign": 1}));
        assert_eq!(irrep(&d, &SignedIrrep::Zero).unwrap(), json!("zero"));
        assert_eq!(
            error(&Error::NotAdmissible("1,0".into())),
            json!({"error": {"kind": "NotAdmissible", "message": "orbit of 1,0 is not admissible"}})
        );
        assert_eq!(serde_json::to_string(&json!({"b": 1, "a": 2})).unwrap(), r#"{"a":2,"b":1}"#);
    }
}
