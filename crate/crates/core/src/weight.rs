//! Exact rationals, weight vectors and signs.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = Ratio<i128>;

/// Shorthand for the rational `n / d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

/// A vector of t* in the native coordinates of a root datum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(Vec<Rational>);

impl WeightVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightVec(coords)
    }

    pub fn from_ints(coords: &[i128]) -> Self {
        WeightVec(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        WeightVec(alloc::vec![Rational::zero(); dim])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: Rational) -> Self {
        WeightVec(self.0.iter().map(|c| *c * s).collect())
    }

    /// Euclidean dot product of coordinates (not the invariant product).
    pub fn dot(&self, other: &[Rational]) -> Rational {
        debug_assert_eq!(self.0.len(), other.len());
        self.0
            .iter()
            .zip(other)
            .fold(Rational::zero(), |acc, (a, b)| acc + *a * *b)
    }

    /// Adds `s * other` in place.
    pub fn axpy(&mut self, s: Rational, other: &WeightVec) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += s * *b;
        }
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl From<Vec<Rational>> for WeightVec {
    fn from(v: Vec<Rational>) -> Self {
        WeightVec(v)
    }
}

impl Add<&WeightVec> for &WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: &WeightVec) -> WeightVec {
        debug_assert_eq!(self.dim(), rhs.dim());
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| *a + *b).collect())
    }
}

impl Add for WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: WeightVec) -> WeightVec {
        &self + &rhs
    }
}

impl Sub<&WeightVec> for &WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: &WeightVec) -> WeightVec {
        debug_assert_eq!(self.dim(), rhs.dim());
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| *a - *b).collect())
    }
}

impl Sub for WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: WeightVec) -> WeightVec {
        &self - &rhs
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec(self.0.iter().map(|a| -*a).collect())
    }
}

impl Neg for WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        -&self
    }
}

impl AddAssign<&WeightVec> for WeightVec {
    fn add_assign(&mut self, rhs: &WeightVec) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += *b;
        }
    }
}

impl SubAssign<&WeightVec> for WeightVec {
    fn sub_assign(&mut self, rhs: &WeightVec) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= *b;
        }
    }
}

/// A sign in {+1, -1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^n`.
    pub fn from_parity(n: usize) -> Sign {
        if n % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Sign of a nonzero rational; `None` for zero.
    pub fn of(x: &Rational) -> Option<Sign> {
        if x.is_positive() {
            Some(Sign::Plus)
        } else if x.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_rational(self) -> Rational {
        int(self.value() as i128)
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_uses_p_over_q() {
        let v = WeightVec::new(alloc::vec![rat(3, 2), int(0), rat(-1, 3)]);
        assert_eq!(v.to_string(), "3/2,0,-1/3");
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::from_parity(3), Sign::Minus);
        assert_eq!(Sign::of(&rat(-1, 2)), Some(Sign::Minus));
        assert_eq!(Sign::of(&int(0)), None);
    }

    #[test]
    fn axpy_and_arith() {
        let mut a = WeightVec::from_ints(&[1, 2]);
        let b = WeightVec::from_ints(&[1, -1]);
        a.axpy(rat(1, 2), &b);
        assert_eq!(a, WeightVec::new(alloc::vec![rat(3, 2), rat(3, 2)]));
        assert_eq!(&a - &a, WeightVec::zeros(2));
        assert_eq!(-(&b), WeightVec::from_ints(&[-1, 1]));
    }
}
