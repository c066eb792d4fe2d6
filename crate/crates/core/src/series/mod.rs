//! Truncated formal power series with exact coefficients.
//!
//! A [`PowerSeries`] of order `N` holds the coefficients of `z^0 .. z^(N-1)`
//! and stands for the class of the series modulo `z^N`. Binary operations
//! require equal orders; the product of two order-`N` series has order `N`,
//! so callers that need more terms must allocate more up front.

mod laurent;
mod painleve;

pub use laurent::LaurentSeries;
pub use painleve::{
    u_from_alpha, verify_painleve_y, verify_u_ode, PainleveReport, UOdeReport,
};

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_sqrt_exact, ExactRat, QSqrt6};

/// Coefficient ring for [`PowerSeries`].
pub trait Coefficient: Clone + Debug + PartialEq + Zero + One + Neg<Output = Self> {
    const RING: &'static str;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn from_rat(q: ExactRat) -> Self;
    fn inverse(&self) -> Option<Self>;
    /// A square root inside the ring, when one is available.
    fn sqrt_exact(&self) -> Option<Self>;
}

macro_rules! ref_arith {
    () => {
        fn add_ref(&self, other: &Self) -> Self {
            self + other
        }
        fn sub_ref(&self, other: &Self) -> Self {
            self - other
        }
        fn mul_ref(&self, other: &Self) -> Self {
            self * other
        }
    };
}

impl Coefficient for ExactRat {
    const RING: &'static str = "rational";
    ref_arith!();
    fn from_rat(q: ExactRat) -> Self {
        q
    }
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn sqrt_exact(&self) -> Option<Self> {
        rat_sqrt_exact(self)
    }
}

impl Coefficient for QSqrt6 {
    const RING: &'static str = "qsqrt6";
    ref_arith!();
    fn from_rat(q: ExactRat) -> Self {
        QSqrt6::rational(q)
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if self.b.is_zero() {
            rat_sqrt_exact(&self.a).map(QSqrt6::rational)
        } else {
            None
        }
    }
}

/// What the series variable stands for at a given call site.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesVar {
    /// The ordinary variable `x` of a generating function.
    X,
    /// `v = 1/t` for expansions at `t = infinity`.
    InvT,
    /// `w = 1/s` where `x = s^2`.
    InvS,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<C: Coefficient>
{
    coeffs: Vec<C>,
    var: SeriesVar,
}

impl<C: Coefficient> PowerSeries<C>
{
    /// Series with the given coefficients; the order is their count.
    pub fn from_coeffs(coeffs: Vec<C>, var: SeriesVar) -> Self {
        Self { coeffs, var }
    }

    pub fn zero(order: usize, var: SeriesVar) -> Self {
        Self { coeffs: vec![C::zero(); order], var }
    }

    pub fn constant(c: C, order: usize, var: SeriesVar) -> Self {
        let mut s = Self::zero(order, var);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// `c z^k` truncated at `order`.
    pub fn monomial(c: C, k: usize, order: usize, var: SeriesVar) -> Self {
        let mut s = Self::zero(order, var);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds `sum c_i z^i` from rational coefficients.
    pub fn from_rats(coeffs: &[ExactRat], order: usize, var: SeriesVar) -> Self {
        let mut s = Self::zero(order, var);
        for (dst, c) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = C::from_rat(c.clone());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn var(&self) -> SeriesVar {
        self.var
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    fn check_compatible(&self, other: &Self, op: &str) {
        assert_eq!(
            self.var, other.var,
            "{op}: series in different variables ({:?} vs {:?})",
            self.var, other.var
        );
        assert_eq!(
            self.order(),
            other.order(),
            "{op}: truncation orders differ ({} vs {}) over the {} ring",
            self.order(),
            other.order(),
            C::RING
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other, "ps_add");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_ref(b)).collect();
        Self { coeffs, var: self.var }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_compatible(other, "ps_sub");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub_ref(b)).collect();
        Self { coeffs, var: self.var }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().cloned().map(|c| -c).collect(), var: self.var }
    }

    pub fn scale(&self, k: &C) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.mul_ref(k)).collect(), var: self.var }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other, "ps_mul");
        let n = self.order();
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self { coeffs: out, var: self.var }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(C::one(), self.order(), self.var);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `d/dz`; the result has order `N - 1` since the top coefficient of the
    /// derivative is not determined by an order-`N` input.
    pub fn diff(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul_ref(&C::from_rat(ExactRat::from_integer(k.into()))))
            .collect();
        Self { coeffs, var: self.var }
    }

    /// Euler operator `z d/dz`: coefficient `k` becomes `k c_k`; order kept.
    pub fn theta(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.mul_ref(&C::from_rat(ExactRat::from_integer(k.into()))))
            .collect();
        Self { coeffs, var: self.var }
    }

    /// Division by `z` of a series with zero constant term; order `N - 1`.
    pub fn shift_down(&self) -> Result<Self> {
        match self.coeffs.first() {
            Some(c) if !c.is_zero() => Err(Error::Domain(
                "shift_down needs a zero constant term".into(),
            )),
            _ => Ok(Self { coeffs: self.coeffs.iter().skip(1).cloned().collect(), var: self.var }),
        }
    }

    /// Multiplication by `z`; order `N + 1`.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(C::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs, var: self.var }
    }

    /// Keeps the first `order` coefficients (padding with zeros is refused).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self { coeffs: self.coeffs[..order].to_vec(), var: self.var }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inv(&self) -> Result<Self> {
        let n = self.order();
        let c0 = self.coeffs.first().ok_or_else(|| Error::Domain("empty series".into()))?;
        let c0_inv = c0
            .inverse()
            .ok_or_else(|| Error::Domain("ps_inv: constant term is not invertible".into()))?;
        let mut out: Vec<C> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            let mut s = C::zero();
            for j in 1..=k {
                s = s.add_ref(&self.coeffs[j].mul_ref(&out[k - j]));
            }
            out.push(-s.mul_ref(&c0_inv));
        }
        Ok(Self { coeffs: out, var: self.var })
    }

    /// Square root with positive constant-term branch, by the coefficient
    /// recurrence `2 r_0 r_n = s_n - sum_{i=1}^{n-1} r_i r_{n-i}`.
    pub fn sqrt(&self) -> Result<Self> {
        let n = self.order();
        let c0 = self.coeffs.first().ok_or_else(|| Error::Domain("empty series".into()))?;
        let r0 = c0
            .sqrt_exact()
            .filter(|r| !r.is_zero())
            .ok_or_else(|| Error::Domain("ps_sqrt: constant term is not a nonzero square".into()))?;
        let two_r0_inv = r0.add_ref(&r0).inverse().expect("nonzero");
        let mut out: Vec<C> = Vec::with_capacity(n);
        out.push(r0);
        for k in 1..n {
            let mut s = self.coeffs[k].clone();
            for i in 1..k {
                s = s.sub_ref(&out[i].mul_ref(&out[k - i]));
            }
            out.push(s.mul_ref(&two_r0_inv));
        }
        Ok(Self { coeffs: out, var: self.var })
    }
}
