//! Coefficient-level verification of the two differential equations tied to
//! the `alpha` recurrence.
//!
//! With `u(t) = sum_{k>=1} alpha_k t^-k`, the recurrence is equivalent to
//! `t^2 u'' + t u' - (t + 2 alpha_1) u + t u^2 + alpha_1 = 0`. Under
//! `u = 1/2 - 1/2 (x/6)^(-1/2) y` and `t = 8 sqrt(6)/25 x^(5/2)` this becomes
//! `y'' = 6 y^2 + (50 alpha_1 - 1) y / (4 x^2) - x`, which is Painleve I
//! exactly when `alpha_1 = 1/50`. The formal solution is
//! `y = -(2/sqrt 6) sum_{k>=0} alpha_k (25/(8 sqrt 6))^k x^(-(5k-1)/2)` with
//! `alpha_0 = -1/2`; substituting `x = s^2` makes every exponent an integer.

use num_traits::{One, Zero};

use super::{LaurentSeries, PowerSeries, SeriesVar};
use crate::error::{Error, Result};
use crate::exact::{rat, ExactRat, QSqrt6};
use crate::recurrences::alpha_seq;

/// `u = sum_{k=1}^{order-1} alpha_k v^k` in `v = 1/t`; `alpha[k-1]` is `alpha_k`.
pub fn u_from_alpha(alpha: &[ExactRat], order: usize) -> Result<PowerSeries<ExactRat>> {
    if order > 0 && alpha.len() + 1 < order {
        return Err(Error::Domain(format!(
            "u_from_alpha: order {order} needs {} alpha terms, got {}",
            order - 1,
            alpha.len()
        )));
    }
    let mut coeffs = vec![ExactRat::zero(); order];
    for k in 1..order {
        coeffs[k] = alpha[k - 1].clone();
    }
    Ok(PowerSeries::from_coeffs(coeffs, SeriesVar::InvT))
}

/// Coefficients of `v^0 .. v^(order-1)` of the left side of the `u` equation.
#[derive(Clone, Debug, PartialEq)]
pub struct UOdeReport {
    pub alpha1: ExactRat,
    pub order: usize,
    pub residual: Vec<ExactRat>,
}

impl UOdeReport {
    pub fn is_zero(&self) -> bool {
        self.residual.iter().all(Zero::is_zero)
    }
}

/// Assembles `t^2 u'' + t u' - (t + 2 alpha_1) u + t u^2 + alpha_1` term by
/// term from series operations and returns its first `order` coefficients.
///
/// In `v = 1/t`: `t d/dt = -v d/dv`, so `t u' = -theta u` and
/// `t^2 u'' = theta^2 u + theta u`; multiplication by `t` is a downward shift.
pub fn verify_u_ode(alpha1: &ExactRat, order: usize) -> Result<UOdeReport> {
    if order < 3 {
        return Err(Error::Domain(format!("verify_u_ode needs order >= 3, got {order}")));
    }
    let alpha = alpha_seq(order, alpha1)?;
    // One extra term so that t*u and t*u^2 are still known to `order`.
    let u = u_from_alpha(&alpha, order + 1)?;
    let theta_u = u.theta();
    let t2_u2 = theta_u.theta().add(&theta_u).truncate(order);
    let t_u1 = theta_u.neg().truncate(order);
    let t_u = u.shift_down()?;
    let t_usq = u.mul(&u).shift_down()?;
    let two_a1 = alpha1 * ExactRat::from_integer(2.into());
    let lhs = t2_u2
        .add(&t_u1)
        .sub(&t_u)
        .sub(&u.truncate(order).scale(&two_a1))
        .add(&t_usq)
        .add(&PowerSeries::constant(alpha1.clone(), order, SeriesVar::InvT));
    Ok(UOdeReport { alpha1: alpha1.clone(), order, residual: lhs.into_coeffs() })
}

/// Residuals of the transformed `y` equation over `Q(sqrt 6)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PainleveReport {
    pub alpha1: ExactRat,
    /// Number of `y`-series terms used.
    pub order: usize,
    /// `(50 alpha_1 - 1)/4`, the coefficient of `y/x^2` in the transformed equation.
    pub gate: ExactRat,
    /// Coefficients `Y_k` of `s^(1-5k)` in `y`.
    pub y_coeffs: Vec<QSqrt6>,
    /// `y'' - 6y^2 + x` per determined exponent of `s`, highest first.
    pub painleve_residual: Vec<(i64, QSqrt6)>,
    /// `y'' - 6y^2 - gate*y/x^2 + x`, same exponents.
    pub full_residual: Vec<(i64, QSqrt6)>,
}

impl PainleveReport {
    /// True when the formal series solves Painleve I `y'' = 6y^2 - x`.
    pub fn painleve_holds(&self) -> bool {
        self.painleve_residual.iter().all(|(_, c)| c.is_zero())
    }

    /// True when the series solves the general transformed equation.
    pub fn full_holds(&self) -> bool {
        self.full_residual.iter().all(|(_, c)| c.is_zero())
    }
}

/// Builds the `y` series from `alpha_0 = -1/2, alpha_1, ..., alpha_(order-1)`
/// and checks it against the transformed equation coefficient by coefficient.
///
/// Residuals are reported for every exponent from `s^2` down to
/// `s^(7 - 5*order)`, the lowest exponent fully determined by `order` terms.
pub fn verify_painleve_y(alpha1: &ExactRat, order: usize) -> Result<PainleveReport> {
    if order < 2 {
        return Err(Error::Domain(format!("verify_painleve_y needs order >= 2, got {order}")));
    }
    let mut alpha = vec![rat(-1, 2)];
    alpha.extend(alpha_seq(order - 1, alpha1)?);

    // -2/sqrt6 = -sqrt6/3 and 25/(8 sqrt6) = 25 sqrt6/48.
    let prefactor = QSqrt6::new(ExactRat::zero(), rat(-1, 3));
    let c = QSqrt6::new(ExactRat::zero(), rat(25, 48));
    let mut c_pow = QSqrt6::one();
    let mut y_coeffs = Vec::with_capacity(order);
    for a in &alpha {
        y_coeffs.push((&prefactor * &c_pow).scale(a));
        c_pow = &c_pow * &c;
    }

    let body_len = 5 * (order - 1) + 1;
    let mut body = vec![QSqrt6::zero(); body_len];
    for (k, yk) in y_coeffs.iter().enumerate() {
        body[5 * k] = yk.clone();
    }
    let y = LaurentSeries::new(1, PowerSeries::from_coeffs(body, SeriesVar::InvS));

    let y_xx = y.diff_x().diff_x();
    let six_y2 = y.mul(&y).scale(&QSqrt6::rational(rat(6, 1)));
    let floor = six_y2.floor();
    let x = LaurentSeries::monomial(QSqrt6::one(), 2, floor);
    let pi_res = y_xx.sub(&six_y2).add(&x);

    let gate = (alpha1 * ExactRat::from_integer(50.into()) - ExactRat::one()) / ExactRat::from_integer(4.into());
    let gate_term = y.shift(-4).scale(&QSqrt6::rational(gate.clone()));
    let full_res = pi_res.sub(&gate_term);

    let collect = |r: &LaurentSeries<QSqrt6>| {
        (floor..=2)
            .rev()
            .map(|e| (e, r.coeff(e).expect("exponent within the determined range")))
            .collect::<Vec<_>>()
    };
    Ok(PainleveReport {
        alpha1: alpha1.clone(),
        order,
        gate,
        y_coeffs,
        painleve_residual: collect(&pi_res),
        full_residual: collect(&full_res),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_series_from_alpha() {
        let u = u_from_alpha(&[rat(1, 50), rat(49, 2500)], 3).unwrap();
        assert_eq!(u.coeffs(), &[rat(0, 1), rat(1, 50), rat(49, 2500)]);
        assert!(u_from_alpha(&[], 1).unwrap().coeffs().iter().all(Zero::is_zero));
        assert!(u_from_alpha(&[rat(1, 2)], 4).is_err());
    }

    #[test]
    fn u_square_matches_brute_force_convolution() {
        let alpha = alpha_seq(12, &rat(1, 50)).unwrap();
        let u = u_from_alpha(&alpha, 13).unwrap();
        let sq = u.mul(&u);
        for k in 0..13 {
            let mut direct = ExactRat::zero();
            for j in 1..k {
                direct += &alpha[j - 1] * &alpha[k - j - 1];
            }
            assert_eq!(*sq.coeff(k), direct, "k = {k}");
        }
    }

    #[test]
    fn u_ode_residuals_vanish() {
        for a1 in [rat(1, 50), rat(1, 2)] {
            let r = verify_u_ode(&a1, 50).unwrap();
            assert_eq!(r.residual.len(), 50);
            assert!(r.is_zero(), "alpha1 = {a1}");
        }
        let r = verify_u_ode(&rat(1, 50), 3).unwrap();
        assert!(r.residual[0].is_zero());
        assert!(verify_u_ode(&rat(1, 50), 2).is_err());
        assert!(verify_u_ode(&rat(2, 1), 5).is_err());
    }

    #[test]
    fn y_series_leading_term() {
        let r = verify_painleve_y(&rat(1, 50), 2).unwrap();
        assert_eq!(r.y_coeffs[0], QSqrt6::new(rat(0, 1), rat(1, 6)));
        // 6 y^2 contributes s^2 from the leading term, cancelling -x.
        assert_eq!(r.painleve_residual[0], (2, QSqrt6::zero()));
        assert!(r.painleve_holds());
    }

    #[test]
    fn painleve_holds_at_one_fiftieth() {
        let r = verify_painleve_y(&rat(1, 50), 10).unwrap();
        assert!(r.gate.is_zero());
        assert!(r.painleve_holds());
        assert!(r.full_holds());
        assert_eq!(r.painleve_residual.last().unwrap().0, 7 - 50);
    }

    #[test]
    fn gate_channel_for_other_alpha1() {
        let r = verify_painleve_y(&rat(1, 2), 10).unwrap();
        assert_eq!(r.gate, rat(6, 1));
        assert!(r.full_holds());
        assert!(!r.painleve_holds());
        let g = QSqrt6::rational(r.gate.clone());
        for (e, c) in &r.painleve_residual {
            let expected = if (2 - e) % 5 == 0 && *e < 2 {
                let k = ((2 - e) / 5) as usize;
                &g * &r.y_coeffs[k - 1]
            } else {
                QSqrt6::zero()
            };
            assert_eq!(*c, expected, "exponent {e}");
        }
    }
}
