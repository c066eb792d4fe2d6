use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{ExactInt, ExactRat};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Binary floating-point value with an explicit precision in bits.
///
/// Every value carries its own precision; binary operations round to the
/// larger of the two operand precisions. Rounding is to nearest, ties to
/// even.
#[derive(Clone, Debug)]
pub struct BigFloat {
    value: astro_float::BigFloat,
    prec: usize,
}

impl BigFloat {
    fn wrap(value: astro_float::BigFloat, prec: usize) -> Self {
        debug_assert!(!value.is_nan(), "BigFloat operation produced NaN");
        Self { value, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Self::wrap(astro_float::BigFloat::new(prec), prec)
    }

    pub fn from_u64(n: u64, prec: usize) -> Self {
        Self::wrap(astro_float::BigFloat::from_u64(n, prec), prec)
    }

    pub fn from_i64(n: i64, prec: usize) -> Self {
        Self::wrap(astro_float::BigFloat::from_i64(n, prec), prec)
    }

    pub fn from_f64(x: f64, prec: usize) -> Self {
        Self::wrap(astro_float::BigFloat::from_f64(x, prec), prec)
    }

    fn exact_int(n: &BigInt) -> astro_float::BigFloat {
        if n.is_zero() {
            return astro_float::BigFloat::new(64);
        }
        let words = n.magnitude().to_u64_digits();
        let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
        let e = i32::try_from(64 * words.len()).expect("integer too large for BigFloat");
        astro_float::BigFloat::from_words(&words, sign, e)
    }

    /// `n` rounded to `prec` bits.
    pub fn from_int(n: &ExactInt, prec: usize) -> Self {
        let mut v = Self::exact_int(n);
        v.set_precision(prec, RM).expect("precision change");
        Self::wrap(v, prec)
    }

    /// `x` correctly rounded to `prec` bits (numerator and denominator are
    /// converted exactly, then divided once).
    pub fn from_rat(x: &ExactRat, prec: usize) -> Self {
        let n = Self::exact_int(x.numer());
        let d = Self::exact_int(x.denom());
        Self::wrap(n.div(&d, prec, RM), prec)
    }

    pub fn pi(prec: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(prec, RM)), prec)
    }

    /// Euler's number.
    pub fn e(prec: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.e(prec, RM)), prec)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// Rounds (or widens) to `prec` bits.
    pub fn with_precision(&self, prec: usize) -> Self {
        let mut v = self.value.clone();
        v.set_precision(prec, RM).expect("precision change");
        Self::wrap(v, prec)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt(self.prec, RM), self.prec)
    }

    pub fn exp(&self) -> Self {
        let v = with_consts(|cc| self.value.exp(self.prec, RM, cc));
        Self::wrap(v, self.prec)
    }

    pub fn ln(&self) -> Self {
        let v = with_consts(|cc| self.value.ln(self.prec, RM, cc));
        Self::wrap(v, self.prec)
    }

    /// Integer power with a signed exponent.
    pub fn powi(&self, n: i64) -> Self {
        let p = Self::wrap(
            self.value.powi(n.unsigned_abs() as usize, self.prec, RM),
            self.prec,
        );
        if n < 0 {
            p.recip()
        } else {
            p
        }
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.reciprocal(self.prec, RM), self.prec)
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.prec)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    /// Binary exponent `e` such that `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            self.value.exponent().map(i64::from)
        }
    }

    /// Unit in the last place at this value's precision.
    pub fn ulp(&self) -> Self {
        let e = self.exponent().unwrap_or(0);
        Self::from_u64(1, 64).mul_pow2(e - self.prec as i64).with_precision(self.prec)
    }

    /// Multiplies by `2^k` exactly.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = self.value.clone();
        let e = v.exponent().expect("finite value") as i64 + k;
        v.set_exponent(i32::try_from(e).expect("exponent overflow"));
        Self::wrap(v, self.prec)
    }

    /// The exact binary value as a rational number.
    pub fn to_rat(&self) -> ExactRat {
        let Some((words, _bits, sign, e, _)) = self.value.as_raw_parts() else {
            panic!("non-finite BigFloat");
        };
        if self.is_zero() {
            return ExactRat::zero();
        }
        let mantissa = BigInt::from(BigUint::new(
            words
                .iter()
                .flat_map(|w| [*w as u32, (*w >> 32) as u32])
                .collect(),
        ));
        let shift = e as i64 - 64 * words.len() as i64;
        let mag = if shift >= 0 {
            BigRational::from_integer(mantissa << shift as usize)
        } else {
            BigRational::new(mantissa, BigInt::from(1) << (-shift) as usize)
        };
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    pub fn to_f64(&self) -> f64 {
        let Some((words, _, sign, e, _)) = self.value.as_raw_parts() else {
            return f64::NAN;
        };
        if self.is_zero() {
            return 0.0;
        }
        let top = *words.last().expect("non-empty mantissa") as f64;
        let mag = top * 2f64.powi(e - 64);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Scientific notation with `digits` significant decimal digits,
    /// rounded from the exact binary value.
    pub fn to_sci_string(&self, digits: usize) -> String {
        rat_to_sci(&self.to_rat(), digits)
    }

    fn bin(
        &self,
        rhs: &Self,
        op: impl FnOnce(&astro_float::BigFloat, &astro_float::BigFloat, usize) -> astro_float::BigFloat,
    ) -> Self {
        let p = self.prec.max(rhs.prec);
        Self::wrap(op(&self.value, &rhs.value, p), p)
    }
}

/// Formats a rational in scientific notation with `digits` significant
/// digits (round half away from zero).
pub(crate) fn rat_to_sci(x: &ExactRat, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return format!("0.{}e0", "0".repeat(digits - 1));
    }
    let neg = x.is_negative();
    let mag = x.abs();
    let ten = BigRational::from_integer(BigInt::from(10));
    // Decimal exponent estimate from bit lengths, then corrected exactly.
    let bits = mag.numer().bits() as f64 - mag.denom().bits() as f64;
    let mut exp10 = (bits * std::f64::consts::LOG10_2).floor() as i64;
    let pow = |k: i64| super::rat_powi(&ten, k);
    while mag >= pow(exp10 + 1) {
        exp10 += 1;
    }
    while mag < pow(exp10) {
        exp10 -= 1;
    }
    let scaled = &mag * pow(digits as i64 - 1 - exp10);
    let mut int = scaled.round().to_integer();
    if int >= num_traits::pow(BigInt::from(10), digits) {
        int /= 10;
        exp10 += 1;
    }
    let s = int.to_string();
    let (head, tail) = s.split_at(1);
    let sign = if neg { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{exp10}")
    } else {
        format!("{sign}{head}.{tail}e{exp10}")
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or(((self.prec as f64) * std::f64::consts::LOG10_2) as usize);
        f.write_str(&self.to_sci_string(digits))
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.value.cmp(&other.value) == Some(0)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                self.bin(rhs, |a, b, p| a.$method(b, p, RM))
            }
        }
        impl $trait<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat::wrap(astro_float::BigFloat::neg(&self.value), self.prec)
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat::wrap(astro_float::BigFloat::neg(&self.value), self.prec)
    }
}
