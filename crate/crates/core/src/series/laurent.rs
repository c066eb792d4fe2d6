use num_traits::Zero;

use super::{Coefficient, PowerSeries, SeriesVar};
use crate::exact::ExactRat;

/// A truncated Laurent series in `s` expanded downwards from `s^lead`:
/// `s^lead * sum_i body[i] s^-i`.
///
/// Coefficients are known for exponents `lead` down to `lead - order + 1`
/// (the "floor"); anything below is truncated away.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<C: Coefficient> {
    pub lead: i64,
    body: PowerSeries<C>,
}

impl<C: Coefficient> LaurentSeries<C> {
    pub fn new(lead: i64, body: PowerSeries<C>) -> Self {
        Self { lead, body }
    }

    /// `c s^exp`, known exactly down to exponent `floor`.
    pub fn monomial(c: C, exp: i64, floor: i64) -> Self {
        assert!(floor <= exp, "monomial below its own floor");
        let order = (exp - floor + 1) as usize;
        Self { lead: exp, body: PowerSeries::monomial(c, 0, order, SeriesVar::InvS) }
    }

    /// Lowest exponent whose coefficient is determined.
    pub fn floor(&self) -> i64 {
        self.lead - self.body.order() as i64 + 1
    }

    /// Coefficient of `s^exp`; `None` below the truncation floor.
    pub fn coeff(&self, exp: i64) -> Option<C> {
        if exp > self.lead {
            Some(C::zero())
        } else if exp < self.floor() {
            None
        } else {
            Some(self.body.coeff((self.lead - exp) as usize).clone())
        }
    }

    /// `(exponent, coefficient)` for every determined exponent, highest first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        let lead = self.lead;
        self.body.coeffs().iter().enumerate().map(move |(i, c)| (lead - i as i64, c))
    }

    fn rebase(&self, lead: i64, floor: i64) -> PowerSeries<C> {
        let order = (lead - floor + 1) as usize;
        let coeffs = (0..order)
            .map(|i| self.coeff(lead - i as i64).expect("rebased within known range"))
            .collect();
        PowerSeries::from_coeffs(coeffs, SeriesVar::InvS)
    }

    /// Sum, known down to the higher of the two floors.
    pub fn add(&self, other: &Self) -> Self {
        let lead = self.lead.max(other.lead);
        let floor = self.floor().max(other.floor());
        Self { lead, body: self.rebase(lead, floor).add(&other.rebase(lead, floor)) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    /// Product; relative truncation order is the smaller of the two.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.body.order().min(other.body.order());
        let a = self.body.truncate(order);
        let b = other.body.truncate(order);
        Self { lead: self.lead + other.lead, body: a.mul(&b) }
    }

    pub fn scale(&self, k: &C) -> Self {
        Self { lead: self.lead, body: self.body.scale(k) }
    }

    /// Multiplication by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { lead: self.lead + k, body: self.body.clone() }
    }

    /// `d/ds`.
    pub fn diff_s(&self) -> Self {
        let coeffs = self
            .terms()
            .map(|(e, c)| c.mul_ref(&C::from_rat(ExactRat::from_integer(e.into()))))
            .collect();
        Self { lead: self.lead - 1, body: PowerSeries::from_coeffs(coeffs, SeriesVar::InvS) }
    }

    /// `d/dx` under `x = s^2`, i.e. `(2s)^-1 d/ds`.
    pub fn diff_x(&self) -> Self {
        let half = C::from_rat(ExactRat::new(1.into(), 2.into()));
        self.diff_s().shift(-1).scale(&half)
    }

    pub fn is_zero(&self) -> bool {
        self.body.coeffs().iter().all(Zero::is_zero)
    }
}
