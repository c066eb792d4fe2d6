use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ExactRat;

/// An element `a + b*sqrt(6)` of the quadratic field `Q(sqrt 6)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt6 {
    pub a: ExactRat,
    pub b: ExactRat,
}

impl QSqrt6 {
    pub fn new(a: ExactRat, b: ExactRat) -> Self {
        Self { a, b }
    }

    pub fn rational(a: ExactRat) -> Self {
        Self { a, b: ExactRat::zero() }
    }

    /// `sqrt(6)`.
    pub fn sqrt6() -> Self {
        Self { a: ExactRat::zero(), b: ExactRat::one() }
    }

    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a^2 - 6 b^2`.
    pub fn norm(&self) -> ExactRat {
        &self.a * &self.a - ExactRat::from_integer(6.into()) * &self.b * &self.b
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self { a: &self.a / &n, b: -&self.b / &n })
    }

    pub fn scale(&self, k: &ExactRat) -> Self {
        Self { a: &self.a * k, b: &self.b * k }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Zero for QSqrt6 {
    fn zero() -> Self {
        Self::rational(ExactRat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt6 {
    fn one() -> Self {
        Self::rational(ExactRat::one())
    }
}

impl Add for &QSqrt6 {
    type Output = QSqrt6;
    fn add(self, rhs: &QSqrt6) -> QSqrt6 {
        QSqrt6 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &QSqrt6 {
    type Output = QSqrt6;
    fn sub(self, rhs: &QSqrt6) -> QSqrt6 {
        QSqrt6 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &QSqrt6 {
    type Output = QSqrt6;
    fn mul(self, rhs: &QSqrt6) -> QSqrt6 {
        let six = ExactRat::from_integer(6.into());
        QSqrt6 {
            a: &self.a * &rhs.a + six * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Add for QSqrt6 {
    type Output = QSqrt6;
    fn add(self, rhs: QSqrt6) -> QSqrt6 {
        &self + &rhs
    }
}

impl Sub for QSqrt6 {
    type Output = QSqrt6;
    fn sub(self, rhs: QSqrt6) -> QSqrt6 {
        &self - &rhs
    }
}

impl Mul for QSqrt6 {
    type Output = QSqrt6;
    fn mul(self, rhs: QSqrt6) -> QSqrt6 {
        &self * &rhs
    }
}

impl Neg for QSqrt6 {
    type Output = QSqrt6;
    fn neg(self) -> QSqrt6 {
        QSqrt6 { a: -self.a, b: -self.b }
    }
}

impl fmt::Display for QSqrt6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt6", self.b),
            (false, false) => write!(f, "{} + {}*sqrt6", self.a, self.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> QSqrt6 {
        QSqrt6::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    fn arb() -> impl Strategy<Value = QSqrt6> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, c, b, d)| q((a, c), (b, d)))
    }

    #[test]
    fn sqrt6_squared_is_six() {
        assert_eq!(&QSqrt6::sqrt6() * &QSqrt6::sqrt6(), QSqrt6::rational(rat(6, 1)));
        let x = q((1, 1), (0, 1)).scale(&rat(1, 6));
        assert_eq!(x.a, rat(1, 6));
    }

    #[test]
    fn inverse_of_sqrt6() {
        let inv = QSqrt6::sqrt6().inv().unwrap();
        assert_eq!(inv, q((0, 1), (1, 6)));
        assert!(QSqrt6::zero().inv().is_none());
    }

    proptest! {
        #[test]
        fn multiplication_is_commutative_and_associative(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn conjugate_product_is_norm(x in arb()) {
            prop_assert_eq!(&x * &x.conj(), QSqrt6::rational(x.norm()));
        }

        #[test]
        fn inverse_round_trip(x in arb()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inv().unwrap(), QSqrt6::one());
        }
    }
}
