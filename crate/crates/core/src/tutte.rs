//! Rooted maps on orientable surfaces of genus 0, 1 and 2.
//!
//! Each generating function is a rational function of `r = sqrt(1 - 12x)`;
//! the expressions are assembled as written, with every factor carried to
//! the same truncation order, and the coefficients are then required to be
//! nonnegative integers.

use num_traits::Signed;

use crate::asymptotics::{richardson_with, AsymptoticEstimate, CorrectionModel};
use crate::error::{Error, Result};
use crate::exact::{as_integer, gamma_half, int_pow, rat, BigFloat, ExactInt, ExactRadical, ExactRat};
use crate::recurrences::b_seq;
use crate::series::{PowerSeries, SeriesVar};

/// `T_g(n)` for `n = 0 .. order-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCountSeries {
    pub genus: usize,
    pub coeffs: Vec<ExactInt>,
}

type Series = PowerSeries<ExactRat>;

fn constant(c: i64, order: usize) -> Series {
    Series::constant(rat(c, 1), order, SeriesVar::X)
}

fn affine(r: &Series, shift: i64) -> Series {
    r.add(&constant(shift, r.order()))
}

fn scaled(s: &Series, k: i64) -> Series {
    s.scale(&rat(k, 1))
}

/// Rational generating function of genus `g` truncated to `order` terms.
pub fn t_series_rational(g: usize, order: usize) -> Result<Series> {
    if order == 0 {
        return Err(Error::Domain("t_series needs order >= 1".into()));
    }
    let one_minus_12x = Series::from_rats(&[rat(1, 1), rat(-12, 1)], order, SeriesVar::X);
    // Inverses below all have a nonzero constant term, so they keep `order`.
    let r = one_minus_12x.sqrt()?;
    match g {
        0 => {
            let num = scaled(&affine(&scaled(&r, 2), 1), 4);
            let den = scaled(&affine(&r, 1).pow(2), 3);
            Ok(num.mul(&den.inv()?))
        }
        1 => {
            let num = affine(&r, -1).pow(2);
            let den = scaled(&r.pow(2).mul(&affine(&r, 2)), 12);
            Ok(num.mul(&den.inv()?))
        }
        2 => {
            let big_r = scaled(&r.pow(4), 49)
                .add(&scaled(&r.pow(3), 122))
                .add(&scaled(&r.pow(2), 225))
                .add(&scaled(&r, 248))
                .add(&constant(112, order));
            let num = affine(&r, -1).pow(4).mul(&affine(&r, 1).pow(2)).mul(&big_r);
            let den = scaled(&r.pow(7).mul(&affine(&r, 2).pow(4)), 2304);
            Ok(num.mul(&den.inv()?))
        }
        _ => Err(Error::Domain(format!("t_series covers genus 0, 1, 2; got {g}"))),
    }
}

/// Rooted map counts `T_g(0..order)`, checked to be nonnegative integers.
pub fn t_series(g: usize, order: usize) -> Result<MapCountSeries> {
    let s = t_series_rational(g, order)?;
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| match as_integer(c) {
            Some(v) if !v.is_negative() => Ok(v),
            _ => Err(Error::Consistency(format!(
                "T_{g}({n}) = {c} is not a nonnegative integer"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MapCountSeries { genus: g, coeffs })
}

/// `-b_g / (2^(g-2) Gamma((5g-1)/2))` for a known `b_g`.
pub fn tau_from_b(g: usize, b_g: &ExactRat) -> Result<ExactRadical> {
    let g = g as i64;
    let num = ExactRadical::new(-b_g.clone(), -2 * (g - 2), 0);
    Ok(&num / &gamma_half(5 * g - 1)?)
}

/// Leading constant of `T_g(n) ~ tau_g n^(5(g-1)/2) 12^n`.
pub fn tau(g: usize) -> Result<ExactRadical> {
    let b = b_seq(g);
    tau_from_b(g, &b[g])
}

/// Correction model used by [`tau_convergence`] for genus `g`.
pub fn tau_model(g: usize) -> CorrectionModel {
    if g == 0 {
        CorrectionModel::InversePowers
    } else {
        CorrectionModel::InverseSqrtPowers
    }
}

/// Default tableau depth for [`tau_convergence`].
pub fn tau_levels(points: usize) -> usize {
    (points / 4).clamp(1, 30)
}

/// Extrapolates `T_g(n) / (n^(5(g-1)/2) 12^n)` over `n` up to `n_max`.
pub fn tau_convergence(g: usize, n_max: usize, prec: usize) -> Result<AsymptoticEstimate> {
    if g > 2 {
        return Err(Error::Domain(format!("tau_convergence covers genus 0, 1, 2; got {g}")));
    }
    if n_max < 10 {
        return Err(Error::Domain(format!("tau_convergence needs n_max >= 10, got {n_max}")));
    }
    let counts = t_series(g, n_max + 1)?.coeffs;
    let work = prec + 64;
    let start = 2 * g.max(1);
    let half_steps = 5 * (g as i64 - 1);
    let mut values = Vec::with_capacity(n_max);
    for n in start..=n_max {
        let ratio = ExactRat::new(counts[n].clone(), int_pow(12, n as u64));
        let nf = BigFloat::from_u64(n as u64, work);
        // n^(half_steps/2) = n^floor(half_steps/2) * (sqrt n or 1)
        let mut den = nf.powi(half_steps.div_euclid(2));
        if half_steps.rem_euclid(2) == 1 {
            den = den * nf.sqrt();
        }
        let v = BigFloat::from_rat(&ratio, work) / den;
        values.push((n as u64, v.with_precision(prec)));
    }
    richardson_with(&values, tau_levels(values.len()), tau_model(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().map(|&x| ExactInt::from(x)).collect()
    }

    #[test]
    fn genus_zero_expansion() {
        let t = t_series(0, 11).unwrap();
        assert_eq!(
            t.coeffs,
            ints(&[1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772, 165297834])
        );
    }

    #[test]
    fn genus_one_expansion() {
        let t = t_series(1, 11).unwrap();
        assert_eq!(
            t.coeffs,
            ints(&[0, 0, 1, 20, 307, 4280, 56914, 736568, 9370183, 117822512, 1469283166])
        );
    }

    #[test]
    fn genus_two_expansion() {
        let t = t_series(2, 11).unwrap();
        assert_eq!(
            t.coeffs,
            ints(&[0, 0, 0, 0, 21, 966, 27954, 650076, 13271982, 248371380, 4366441128])
        );
    }

    #[test]
    fn tau_closed_forms() {
        assert_eq!(tau(0).unwrap(), ExactRadical::new(rat(2, 1), 0, -1));
        assert_eq!(tau(1).unwrap(), ExactRadical::rational(rat(1, 24)));
        assert_eq!(tau(2).unwrap(), ExactRadical::new(rat(7, 4320), 0, -1));
    }

    #[test]
    fn unsupported_genus() {
        assert!(t_series(3, 5).is_err());
        assert!(t_series(0, 0).is_err());
        assert!(tau_convergence(0, 5, 128).is_err());
    }

    #[test]
    fn raw_ratio_trends_toward_tau0() {
        let est = tau_convergence(0, 10, 256).unwrap();
        let target = tau(0).unwrap().to_float(256).to_f64();
        let raw: Vec<f64> = est.raw.iter().map(|(_, v)| v.to_f64()).collect();
        assert!((raw.last().unwrap() - target).abs() / target < 0.3);
        assert!(raw.windows(2).all(|w| (w[1] - target).abs() <= (w[0] - target).abs()));
    }
}
