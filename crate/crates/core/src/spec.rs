//! Group specifications and the `FACTOR ("x" FACTOR)*` grammar.
//!
//! A factor is one of `SU(n)`, `U(n)`, `Spin(n)`, `Sp(n)`, `SO(2n+1)`,
//! `G2`, `F4`, `E6`, `E7`, `E8`, `T1`, or a bare Cartan label such as `B3`
//! (simply connected), optionally followed by `@scale=p/q`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Signed};

use crate::cartan::CartanType;
use crate::error::Error;
use crate::weight::{Rational, WeightVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// Simply connected simple group of the given type.
    Simple(CartanType),
    /// `U(n)`: type A_{n-1} plus a one-dimensional center, in ambient
    /// coordinates `e_1..e_n`.
    Unitary(usize),
    /// `SO(2n+1)`; `SO(3)` when `n == 1`.
    OddOrthogonal(usize),
    /// A circle factor `T1`.
    Torus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub kind: FactorKind,
    /// Positive multiplier of the invariant product on this factor.
    pub scale: Rational,
}

impl Factor {
    pub fn new(kind: FactorKind) -> Self {
        Factor {
            kind,
            scale: Rational::one(),
        }
    }

    pub fn with_scale(mut self, scale: Rational) -> Self {
        self.scale = scale;
        self
    }

    /// Cartan type of the semisimple part, if any.
    pub fn cartan(&self) -> Option<CartanType> {
        match self.kind {
            FactorKind::Simple(t) => Some(t),
            FactorKind::Unitary(n) if n >= 2 => Some(CartanType::A(n - 1)),
            FactorKind::Unitary(_) | FactorKind::Torus => None,
            FactorKind::OddOrthogonal(1) => Some(CartanType::A(1)),
            FactorKind::OddOrthogonal(n) => Some(CartanType::B(n)),
        }
    }

    pub fn semisimple_rank(&self) -> usize {
        self.cartan().map_or(0, CartanType::rank)
    }

    pub fn central_rank(&self) -> usize {
        match self.kind {
            FactorKind::Unitary(_) | FactorKind::Torus => 1,
            _ => 0,
        }
    }

    /// Number of native coordinates this factor contributes.
    pub fn dim(&self) -> usize {
        match self.kind {
            FactorKind::Unitary(n) => n,
            FactorKind::Torus => 1,
            _ => self.semisimple_rank(),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        if !self.scale.is_positive() {
            return Err(Error::InvalidSpec(format!("scale must be positive in {self}")));
        }
        match self.kind {
            FactorKind::Simple(t) => t.validate(),
            FactorKind::Unitary(n) | FactorKind::OddOrthogonal(n) if n == 0 => {
                Err(Error::InvalidSpec(format!("empty factor {self}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::Simple(CartanType::A(n)) => write!(f, "SU({})", n + 1)?,
            FactorKind::Simple(CartanType::B(n)) => write!(f, "Spin({})", 2 * n + 1)?,
            FactorKind::Simple(CartanType::C(n)) => write!(f, "Sp({n})")?,
            FactorKind::Simple(CartanType::D(n)) => write!(f, "Spin({})", 2 * n)?,
            FactorKind::Simple(t) => write!(f, "{t}")?,
            FactorKind::Unitary(n) => write!(f, "U({n})")?,
            FactorKind::OddOrthogonal(n) => write!(f, "SO({})", 2 * n + 1)?,
            FactorKind::Torus => f.write_str("T1")?,
        }
        if !self.scale.is_one() {
            write!(f, "@scale={}", self.scale)?;
        }
        Ok(())
    }
}

/// A compact connected group given as a product of factors, with an
/// optional explicit character lattice overriding the factor defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
    /// Basis of Λ in native coordinates.
    pub lattice_basis: Option<Vec<WeightVec>>,
}

impl GroupSpec {
    pub fn new(factors: Vec<Factor>) -> Self {
        GroupSpec {
            factors,
            lattice_basis: None,
        }
    }

    pub fn with_lattice(mut self, basis: Vec<WeightVec>) -> Self {
        self.lattice_basis = Some(basis);
        self
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(Factor::semisimple_rank).sum()
    }

    pub fn central_torus_rank(&self) -> usize {
        self.factors.iter().map(Factor::central_rank).sum()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).sum()
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.factors.is_empty() {
            return Err(Error::InvalidSpec("no factors".into()));
        }
        self.factors.iter().try_for_each(Factor::validate)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let factors = s
            .split('x')
            .map(|part| parse_factor(part.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        let spec = GroupSpec::new(factors);
        spec.validate()?;
        Ok(spec)
    }
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: i128 = p.trim().parse().map_err(|_| bad_number(t))?;
        let q: i128 = q.trim().parse().map_err(|_| bad_number(t))?;
        if q == 0 {
            return Err(Error::Parse(format!("zero denominator in {t:?}")));
        }
        Ok(Rational::new(p, q))
    } else {
        t.parse::<i128>()
            .map(Rational::from_integer)
            .map_err(|_| bad_number(t))
    }
}

/// Parses a comma-separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

fn bad_number(s: &str) -> Error {
    Error::Parse(format!("not a rational number: {s:?}"))
}

fn parse_factor(s: &str) -> Result<Factor, Error> {
    let (name, scale) = match s.split_once('@') {
        Some((name, opt)) => {
            let value = opt
                .trim()
                .strip_prefix("scale=")
                .ok_or_else(|| Error::Parse(format!("unknown factor option {opt:?}")))?;
            (name.trim(), parse_rational(value)?)
        }
        None => (s, Rational::one()),
    };
    Ok(Factor::new(parse_factor_name(name)?).with_scale(scale))
}

fn parse_factor_name(name: &str) -> Result<FactorKind, Error> {
    let unknown = || Error::Parse(format!("unknown factor {name:?}"));
    if let Some(open) = name.find('(') {
        let inner = name[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
        let n: usize = inner.trim().parse().map_err(|_| unknown())?;
        let invalid = |why: &str| Error::InvalidSpec(format!("{name}: {why}"));
        return match &name[..open] {
            "SU" if n >= 2 => Ok(FactorKind::Simple(CartanType::A(n - 1))),
            "SU" => Err(invalid("need n >= 2")),
            "U" if n >= 1 => Ok(FactorKind::Unitary(n)),
            "U" => Err(invalid("need n >= 1")),
            "Sp" if n == 1 => Ok(FactorKind::Simple(CartanType::A(1))),
            "Sp" if n >= 2 => Ok(FactorKind::Simple(CartanType::C(n))),
            "Sp" => Err(invalid("need n >= 1")),
            "Spin" if n >= 5 && n % 2 == 1 => Ok(FactorKind::Simple(CartanType::B(n / 2))),
            "Spin" if n >= 6 => Ok(FactorKind::Simple(CartanType::D(n / 2))),
            "Spin" => Err(invalid("need n >= 5 (use SU(2), SU(2)xSU(2) for low ranks)")),
            "SO" if n >= 3 && n % 2 == 1 => Ok(FactorKind::OddOrthogonal(n / 2)),
            "SO" => Err(invalid("only odd SO(2n+1) is available")),
            _ => Err(unknown()),
        };
    }
    let cartan = match name {
        "T1" => return Ok(FactorKind::Torus),
        "G2" => CartanType::G2,
        "F4" => CartanType::F4,
        "E6" => CartanType::E6,
        "E7" => CartanType::E7,
        "E8" => CartanType::E8,
        _ => {
            let (letter, digits) = name.split_at(1.min(name.len()));
            let n: usize = digits.parse().map_err(|_| unknown())?;
            match letter {
                "A" => CartanType::A(n),
                "B" => CartanType::B(n),
                "C" => CartanType::C(n),
                "D" => CartanType::D(n),
                _ => return Err(unknown()),
            }
        }
    };
    Ok(FactorKind::Simple(cartan))
}

impl GroupSpec {
    /// Canonical string form, re-parseable by [`FromStr`].
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::rat;

    #[test]
    fn parses_products_and_scales() {
        let g: GroupSpec = "SU(3)xU(2)@scale=3/2xT1".parse().unwrap();
        assert_eq!(g.factors.len(), 3);
        assert_eq!(g.factors[0].kind, FactorKind::Simple(CartanType::A(2)));
        assert_eq!(g.factors[1].kind, FactorKind::Unitary(2));
        assert_eq!(g.factors[1].scale, rat(3, 2));
        assert_eq!(g.semisimple_rank(), 3);
        assert_eq!(g.central_torus_rank(), 2);
        assert_eq!(g.dim(), 5);
        assert_eq!(g.canonical(), "SU(3)xU(2)@scale=3/2xT1");
    }

    #[test]
    fn named_families() {
        let kind = |s: &str| s.parse::<GroupSpec>().unwrap().factors[0].kind;
        assert_eq!(kind("Spin(7)"), FactorKind::Simple(CartanType::B(3)));
        assert_eq!(kind("Spin(8)"), FactorKind::Simple(CartanType::D(4)));
        assert_eq!(kind("Sp(2)"), FactorKind::Simple(CartanType::C(2)));
        assert_eq!(kind("SO(3)"), FactorKind::OddOrthogonal(1));
        assert_eq!(kind("G2"), FactorKind::Simple(CartanType::G2));
        assert_eq!(kind("B3"), FactorKind::Simple(CartanType::B(3)));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "SU(1)", "Spin(4)", "SO(4)", "Q7", "SU(3)@scale=0", "SU(3)@scale=-1", "SU(x)", "B1"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 4 ").unwrap(), rat(4, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert_eq!(parse_rational_list("1,0,-1/2").unwrap().len(), 3);
    }
}
