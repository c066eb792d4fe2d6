//! Arbitrary-precision numeric foundation.
//!
//! Integers and rationals come from `num-bigint`/`num-rational`; rationals are
//! kept in lowest terms with a positive denominator after every operation.
//! On top of those sit [`BigFloat`] (binary floating point with an explicit
//! precision carried by every value), [`ExactRadical`] for values of the form
//! `q * 2^(a/2) * pi^(b/2)` and [`QSqrt6`] for the quadratic field `Q(sqrt 6)`.

mod float;
mod qsqrt6;
mod radical;

pub use float::BigFloat;
pub use qsqrt6::QSqrt6;
pub use radical::{gamma_half, ExactRadical};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Signed arbitrary-precision integer.
pub type ExactInt = BigInt;

/// Normalized arbitrary-precision rational.
pub type ExactRat = BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> ExactRat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn rat_int(n: impl Into<BigInt>) -> ExactRat {
    BigRational::from_integer(n.into())
}

/// Parses `"p/q"`, `"p"` or a terminating decimal such as `"0.02"`.
pub fn parse_rat(s: &str) -> Result<ExactRat> {
    let s = s.trim();
    let bad = || Error::Domain(format!("cannot parse `{s}` as a rational number"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Domain(format!("zero denominator in `{s}`")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let frac_int: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = BigRational::new(whole * &scale + frac_int, scale);
        return Ok(if negative { -mag } else { mag });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> ExactInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `base^exp` for a non-negative exponent.
pub fn int_pow(base: impl Into<BigInt>, exp: u64) -> ExactInt {
    num_traits::pow(base.into(), exp as usize)
}

/// Exact rational power with a signed exponent.
pub fn rat_powi(base: &ExactRat, exp: i64) -> ExactRat {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// The integer value of `x` if its denominator is one.
pub fn as_integer(x: &ExactRat) -> Option<ExactInt> {
    x.is_integer().then(|| x.numer().clone())
}

/// Exact square root of a non-negative rational that is a perfect square.
pub fn rat_sqrt_exact(x: &ExactRat) -> Option<ExactRat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

/// True when `x` is in lowest terms with a positive denominator.
pub fn is_normalized(x: &ExactRat) -> bool {
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rat("1/50").unwrap(), rat(1, 50));
        assert_eq!(parse_rat("0.02").unwrap(), rat(1, 50));
        assert_eq!(parse_rat("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("-.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("7").unwrap(), rat(7, 1));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.").is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(rat_sqrt_exact(&rat(49, 4)), Some(rat(7, 2)));
        assert_eq!(rat_sqrt_exact(&rat(2, 1)), None);
        assert_eq!(rat_sqrt_exact(&rat(-1, 1)), None);
    }

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(rat_powi(&rat(2, 3), -2), rat(9, 4));
    }
}
