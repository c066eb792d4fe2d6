use std::fmt;
use std::ops::{Div, Mul};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{factorial, rat, rat_int, BigFloat, ExactRat};
use crate::error::{Error, Result};

/// A value `q * 2^(a/2) * pi^(b/2)` with rational `q` and integer `a`, `b`.
///
/// The stored triple is kept as produced by arithmetic; equality compares
/// canonical forms, where even powers of `sqrt 2` are folded into `q` so
/// that `a` is 0 or 1, and zero is `(0, 0, 0)`.
#[derive(Clone, Debug)]
pub struct ExactRadical {
    pub q: ExactRat,
    /// Exponent of `2^(1/2)`.
    pub a: i64,
    /// Exponent of `pi^(1/2)`.
    pub b: i64,
}

impl ExactRadical {
    pub fn new(q: ExactRat, a: i64, b: i64) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Self { q, a, b }
        }
    }

    pub fn rational(q: ExactRat) -> Self {
        Self::new(q, 0, 0)
    }

    pub fn zero() -> Self {
        Self { q: ExactRat::zero(), a: 0, b: 0 }
    }

    pub fn one() -> Self {
        Self::rational(ExactRat::one())
    }

    /// `2^(k/2)`.
    pub fn sqrt2_pow(k: i64) -> Self {
        Self::new(ExactRat::one(), k, 0)
    }

    /// `pi^(k/2)`.
    pub fn sqrt_pi_pow(k: i64) -> Self {
        Self::new(ExactRat::one(), 0, k)
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// Canonical representative: `a` in {0, 1}, `q = 0` forces `a = b = 0`.
    pub fn canonical(&self) -> Self {
        if self.q.is_zero() {
            return Self::zero();
        }
        let (half, rem) = self.a.div_mod_floor(&2);
        let q = &self.q * super::rat_powi(&rat(2, 1), half);
        Self { q, a: rem, b: self.b }
    }

    /// Rational value when no radical factor survives canonicalization.
    pub fn as_rational(&self) -> Option<ExactRat> {
        let c = self.canonical();
        (c.a == 0 && c.b == 0).then_some(c.q)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero radical".into()));
        }
        Ok(Self::new(self.q.recip(), -self.a, -self.b))
    }

    /// Numerical value at `prec` bits (about 4 ulp worst case; constants
    /// are evaluated with 64 guard bits).
    pub fn to_float(&self, prec: usize) -> BigFloat {
        let c = self.canonical();
        let work = prec + 64;
        let mut v = BigFloat::from_rat(&c.q, work);
        if c.a == 1 {
            v = v * BigFloat::from_u64(2, work).sqrt();
        }
        if c.b != 0 {
            let (whole, half) = c.b.div_mod_floor(&2);
            let pi = BigFloat::pi(work);
            if whole != 0 {
                v = v * pi.powi(whole);
            }
            if half == 1 {
                v = v * pi.sqrt();
            }
        }
        v.with_precision(prec)
    }
}

impl PartialEq for ExactRadical {
    fn eq(&self, other: &Self) -> bool {
        let (x, y) = (self.canonical(), other.canonical());
        x.q == y.q && x.a == y.a && x.b == y.b
    }
}

impl Eq for ExactRadical {}

impl Mul for &ExactRadical {
    type Output = ExactRadical;
    fn mul(self, rhs: &ExactRadical) -> ExactRadical {
        ExactRadical::new(&self.q * &rhs.q, self.a + rhs.a, self.b + rhs.b)
    }
}

impl Mul for ExactRadical {
    type Output = ExactRadical;
    fn mul(self, rhs: ExactRadical) -> ExactRadical {
        &self * &rhs
    }
}

impl Div for &ExactRadical {
    type Output = ExactRadical;
    fn div(self, rhs: &ExactRadical) -> ExactRadical {
        self * &rhs.recip().expect("division by zero radical")
    }
}

impl Div for ExactRadical {
    type Output = ExactRadical;
    fn div(self, rhs: ExactRadical) -> ExactRadical {
        &self / &rhs
    }
}

impl fmt::Display for ExactRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        write!(f, "{}", c.q)?;
        if c.a != 0 {
            write!(f, "*2^({}/2)", c.a)?;
        }
        if c.b != 0 {
            write!(f, "*pi^({}/2)", c.b)?;
        }
        Ok(())
    }
}

/// `Gamma(m/2)` exactly, for `m >= 1` and for negative odd `m`.
///
/// Even `m` gives `(m/2 - 1)!`. Odd `m` starts from `Gamma(1/2) = sqrt(pi)`
/// and steps with `Gamma(z + 1) = z Gamma(z)`, downwards for negative `m`.
/// Non-positive even `m` are poles.
pub fn gamma_half(m: i64) -> Result<ExactRadical> {
    if m <= 0 && m % 2 == 0 {
        return Err(Error::Domain(format!("Gamma({m}/2) is a pole")));
    }
    if m % 2 == 0 {
        return Ok(ExactRadical::rational(rat_int(factorial((m / 2 - 1) as u64))));
    }
    // Odd: Gamma(m/2) = q * sqrt(pi).
    let mut q = ExactRat::one();
    if m > 0 {
        // Gamma(1/2 + j) = prod_{i=0}^{j-1} (1/2 + i) * sqrt(pi)
        let j = (m - 1) / 2;
        for i in 0..j {
            q *= rat(2 * i + 1, 2);
        }
    } else {
        // Gamma(z) = Gamma(z + 1) / z for z = -1/2, -3/2, ...
        let mut z = -1;
        while z >= m {
            q /= rat(z, 2);
            z -= 2;
        }
    }
    Ok(ExactRadical::new(q, 0, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(q: ExactRat, a: i64, b: i64) -> ExactRadical {
        ExactRadical::new(q, a, b)
    }

    #[test]
    fn gamma_half_examples() {
        assert_eq!(gamma_half(2).unwrap(), ExactRadical::one());
        assert_eq!(gamma_half(5).unwrap(), r(rat(3, 4), 0, 1));
        assert_eq!(gamma_half(8).unwrap(), ExactRadical::rational(rat(6, 1)));
        assert_eq!(gamma_half(1).unwrap(), r(rat(1, 1), 0, 1));
        assert_eq!(gamma_half(-1).unwrap(), r(rat(-2, 1), 0, 1));
        assert_eq!(gamma_half(-3).unwrap(), r(rat(4, 3), 0, 1));
        assert!(gamma_half(0).is_err());
        assert!(gamma_half(-2).is_err());
    }

    #[test]
    fn gamma_half_functional_equation() {
        for m in 1..=100 {
            let lhs = gamma_half(m + 2).unwrap();
            let rhs = &ExactRadical::rational(rat(m, 2)) * &gamma_half(m).unwrap();
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn multiplication_examples() {
        let s2 = r(rat(1, 1), 1, 0);
        assert_eq!(&s2 * &s2, r(rat(2, 1), 0, 0));
        assert_eq!(&s2 * &s2, r(rat(1, 1), 2, 0));
        let sp = r(rat(1, 1), 0, 1);
        assert_eq!((&sp * &sp).to_float(64).to_sci_string(10), "3.141592654e0");
        assert_eq!(&r(rat(3, 4), 0, 1) * &r(rat(2, 1), 0, -1), r(rat(3, 2), 0, 0));
    }

    #[test]
    fn canonical_form_folds_sqrt2_powers() {
        let x = r(rat(1, 2), -1, 1).canonical();
        assert_eq!((x.q, x.a, x.b), (rat(1, 4), 1, 1));
        assert_eq!(ExactRadical::new(rat(0, 1), 3, 5).canonical().a, 0);
        assert_ne!(r(rat(1, 1), 0, 1), r(rat(1, 1), 0, 0));
    }

    #[test]
    fn to_float_examples() {
        assert_eq!(ExactRadical::one().to_float(64).to_sci_string(5), "1.0000e0");
        assert_eq!(
            r(rat(1, 1), -1, 1).to_float(128).to_sci_string(14),
            "1.2533141373155e0"
        );
        assert_eq!(
            ExactRadical::rational(rat(1, 24)).to_float(64).to_sci_string(6),
            "4.16667e-2"
        );
    }
}
