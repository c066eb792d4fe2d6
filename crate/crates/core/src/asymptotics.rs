//! Convergence acceleration and extraction of asymptotic constants.
//!
//! Sequences are computed exactly where feasible, converted to [`BigFloat`]
//! once, and handed to a Neville-style Richardson tableau that eliminates
//! successive powers of an assumed correction variable (`1/n` or
//! `n^(-1/2)`) and evaluates the interpolant at zero.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{factorial, gamma_half, int_pow, rat_int, BigFloat, ExactRat};
use crate::recurrences::{alpha_seq, b_seq, w_float};

/// Assumed form of the corrections to the limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorrectionModel {
    /// `L + c1/n + c2/n^2 + ...`
    InversePowers,
    /// `L + c1/n^(1/2) + c2/n + c3/n^(3/2) + ...`
    InverseSqrtPowers,
}

impl CorrectionModel {
    pub fn describe(&self) -> &'static str {
        match self {
            Self::InversePowers => "powers of 1/n",
            Self::InverseSqrtPowers => "powers of n^(-1/2)",
        }
    }

    fn step(&self, n: u64, prec: usize) -> BigFloat {
        let inv = BigFloat::from_u64(n, prec).recip();
        match self {
            Self::InversePowers => inv,
            Self::InverseSqrtPowers => inv.sqrt(),
        }
    }
}

/// Raw values, the extrapolation tableau and the resulting limit estimate.
#[derive(Clone, Debug)]
pub struct AsymptoticEstimate {
    pub raw: Vec<(u64, BigFloat)>,
    /// `tableau[i][j]` extrapolates from `raw[i-j..=i]`.
    pub tableau: Vec<Vec<BigFloat>>,
    pub limit: BigFloat,
    /// `|tableau[last][L] - tableau[last][L-1]|` for the top level `L`.
    pub error_estimate: BigFloat,
    pub model: String,
    pub precision: usize,
}

impl AsymptoticEstimate {
    /// Count of significant decimal digits covered by ten times the error
    /// estimate.
    pub fn reliable_digits(&self) -> usize {
        if self.limit.is_zero() {
            return 0;
        }
        if self.error_estimate.is_zero() {
            return (self.precision as f64 * std::f64::consts::LOG10_2) as usize;
        }
        let rel = (&self.error_estimate * &BigFloat::from_u64(10, 64)) / self.limit.abs();
        let log = log10_abs(&rel);
        if log >= 0.0 {
            0
        } else {
            (-log).floor() as usize
        }
    }

    /// The limit formatted to its reliable digits (at least one).
    pub fn limit_display(&self) -> String {
        self.limit.to_sci_string(self.reliable_digits().max(1))
    }

    /// The top-level tableau column, one entry per row that reaches it.
    pub fn apex_column(&self) -> Vec<&BigFloat> {
        let top = self.tableau.last().map_or(0, |r| r.len() - 1);
        self.tableau.iter().filter_map(|r| r.get(top)).collect()
    }
}

/// `log10 |x|` for a nonzero value, without converting through `f64`
/// (which would under- or overflow for extreme exponents).
pub(crate) fn log10_abs(x: &BigFloat) -> f64 {
    let e = x.exponent().expect("nonzero");
    let m = x.abs().mul_pow2(-e).to_f64();
    (m.log2() + e as f64) * std::f64::consts::LOG10_2
}

/// Richardson extrapolation in `1/n` over consecutive indices.
pub fn richardson(values: &[(u64, BigFloat)], levels: usize) -> Result<AsymptoticEstimate> {
    richardson_with(values, levels, CorrectionModel::InversePowers)
}

/// Richardson extrapolation with an explicit correction model.
///
/// `T[i][0] = v_i`, and with `h_i` the model step at index `n_i`,
/// `T[i][j] = T[i][j-1] + h_i (T[i][j-1] - T[i-1][j-1]) / (h_{i-j} - h_i)`,
/// which is the value at `h = 0` of the polynomial through the last `j+1`
/// points.
pub fn richardson_with(
    values: &[(u64, BigFloat)],
    levels: usize,
    model: CorrectionModel,
) -> Result<AsymptoticEstimate> {
    if values.len() < 2 {
        return Err(Error::Domain(format!(
            "richardson needs at least 2 points, got {}",
            values.len()
        )));
    }
    if levels == 0 || levels > values.len() - 1 {
        return Err(Error::Domain(format!(
            "richardson levels must lie in 1..={}, got {levels}",
            values.len() - 1
        )));
    }
    if values.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::Domain("richardson needs consecutive integer indices".into()));
    }
    let prec = values.iter().map(|(_, v)| v.precision()).max().expect("non-empty");
    let h: Vec<BigFloat> = values.iter().map(|(n, _)| model.step(*n, prec)).collect();
    let mut tableau: Vec<Vec<BigFloat>> = Vec::with_capacity(values.len());
    for (i, (_, v)) in values.iter().enumerate() {
        let mut row = vec![v.clone()];
        for j in 1..=i.min(levels) {
            let cur = &row[j - 1];
            let prev = &tableau[i - 1][j - 1];
            let step = &h[i] * &(cur - prev) / (&h[i - j] - &h[i]);
            row.push(cur + &step);
        }
        tableau.push(row);
    }
    let last = tableau.last().expect("non-empty");
    let limit = last[levels].clone();
    let error_estimate = (&last[levels] - &last[levels - 1]).abs();
    Ok(AsymptoticEstimate {
        raw: values.to_vec(),
        tableau,
        limit,
        error_estimate,
        model: model.describe().to_string(),
        precision: prec,
    })
}

fn check_alpha1(alpha1: &ExactRat) -> Result<()> {
    // alpha_seq carries the hypothesis check and its message.
    alpha_seq(1, alpha1).map(|_| ())
}

/// Default tableau depth for [`c_limit`] at a given `n_max`.
pub fn c_limit_levels(n_max: usize) -> usize {
    (n_max / 4).clamp(1, 40)
}

/// `lim alpha_n / ((n-1)!)^2` for the generalized `alpha` sequence.
///
/// The ratios are formed exactly and converted once at precision `prec`.
pub fn c_limit(alpha1: &ExactRat, n_max: usize, prec: usize) -> Result<AsymptoticEstimate> {
    check_alpha1(alpha1)?;
    if n_max < 20 {
        return Err(Error::Domain(format!("c_limit needs n_max >= 20, got {n_max}")));
    }
    let alpha = alpha_seq(n_max, alpha1)?;
    let mut fact = BigInt::one();
    let mut values = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        if n >= 2 {
            fact *= n - 1;
        }
        let ratio = &alpha[n - 1] / rat_int(&fact * &fact);
        values.push((n as u64, BigFloat::from_rat(&ratio, prec)));
    }
    richardson_with(&values, c_limit_levels(n_max), CorrectionModel::InversePowers)
}

/// Growth constant `sigma` in `w_n ~ 6 sigma^(-n-1) n`, plus the prefactor
/// check `w_n sigma^(n+1) / (6n) -> 1`.
#[derive(Clone, Debug)]
pub struct WGrowth {
    pub sigma: AsymptoticEstimate,
    pub prefactor: AsymptoticEstimate,
}

/// Default tableau depth for [`w_growth`].
pub const W_GROWTH_LEVELS: usize = 40;

pub fn w_growth(n_max: usize, prec: usize) -> Result<WGrowth> {
    if n_max < 100 {
        return Err(Error::Domain(format!("w_growth needs n_max >= 100, got {n_max}")));
    }
    let min_prec = 64 + 2 * (usize::BITS - n_max.leading_zeros()) as usize;
    if prec < min_prec {
        return Err(Error::Domain(format!(
            "w_growth needs precision >= 64 + 2 log2(n_max) = {min_prec} bits, got {prec}"
        )));
    }
    let w = w_float(n_max + 1, prec);
    let levels = W_GROWTH_LEVELS;
    let window = 4 * levels;
    let start = (n_max - window).max(1);
    let sigma_values: Vec<_> = (start..=n_max)
        .map(|n| {
            let s = (&w[n] / &w[n + 1]) * BigFloat::from_u64((n + 1) as u64, prec)
                / BigFloat::from_u64(n as u64, prec);
            (n as u64, s)
        })
        .collect();
    let sigma = richardson_with(&sigma_values, levels, CorrectionModel::InversePowers)?;

    let s = &sigma.limit;
    let mut s_pow = s.powi(start as i64 + 1);
    let mut pref_values = Vec::with_capacity(window + 1);
    for n in start..=n_max {
        let six_n = BigFloat::from_u64(6 * n as u64, prec);
        pref_values.push((n as u64, &w[n] * &s_pow / six_n));
        s_pow = &s_pow * s;
    }
    let prefactor = richardson_with(&pref_values, levels, CorrectionModel::InversePowers)?;
    Ok(WGrowth { sigma, prefactor })
}

/// Sequences with a closed-form leading asymptotic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeadingTarget {
    /// `alpha_n ~ (1/2pi) sqrt(6/(5pi)) (1/4)^n Gamma(2n - 1/2)`
    Alpha,
    /// `b_n ~ -(1/pi) sqrt(6/(5pi)) (25/192)^n Gamma(2n - 1/2)`
    B,
    /// `tau_n ~ (5/pi) sqrt(6/(5pi)) (e/(1440 n))^(n/2)`
    Tau,
}

impl std::str::FromStr for LeadingTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(Self::Alpha),
            "b" => Ok(Self::B),
            "tau" => Ok(Self::Tau),
            other => Err(Error::Domain(format!(
                "unknown asymptotic target `{other}` (expected alpha, b or tau)"
            ))),
        }
    }
}

/// Default tableau depth for [`check_leading_asymptotics`].
pub fn leading_levels(n_max: usize) -> usize {
    (n_max / 4).clamp(1, 30)
}

/// `sqrt(6/(5 pi))` at `prec` bits.
fn shared_constant(prec: usize) -> BigFloat {
    let pi = BigFloat::pi(prec);
    (BigFloat::from_u64(6, prec) / (BigFloat::from_u64(5, prec) * pi)).sqrt()
}

/// Ratio of the exact sequence to its displayed asymptotic form,
/// extrapolated in `1/n`; the limit should be 1.
pub fn check_leading_asymptotics(target: LeadingTarget, n_max: usize, prec: usize) -> Result<AsymptoticEstimate> {
    if n_max < 20 {
        return Err(Error::Domain(format!("check_leading_asymptotics needs n_max >= 20, got {n_max}")));
    }
    let work = prec + 64;
    let pi = BigFloat::pi(work);
    let k = shared_constant(work);
    let sqrt_pi = pi.sqrt();
    let mut values = Vec::with_capacity(n_max);
    match target {
        LeadingTarget::Alpha | LeadingTarget::B => {
            let seq: Vec<ExactRat> = match target {
                LeadingTarget::Alpha => alpha_seq(n_max, &crate::exact::rat(1, 50))?,
                _ => b_seq(n_max).into_iter().skip(1).collect(),
            };
            for n in 1..=n_max {
                // Gamma(2n - 1/2) = g * sqrt(pi)
                let g = gamma_half(4 * n as i64 - 1)?.q;
                let (scale, front) = match target {
                    LeadingTarget::Alpha => (
                        ExactRat::new(1.into(), int_pow(4, n as u64)),
                        &k / &(&pi * &BigFloat::from_u64(2, work)),
                    ),
                    _ => (
                        ExactRat::new(int_pow(25, n as u64), int_pow(192, n as u64)),
                        -(&k / &pi),
                    ),
                };
                let ratio_exact = &seq[n - 1] / (scale * g);
                let ratio = BigFloat::from_rat(&ratio_exact, work) / (front * &sqrt_pi);
                values.push((n as u64, ratio.with_precision(prec)));
            }
        }
        LeadingTarget::Tau => {
            let b = b_seq(n_max);
            let e = BigFloat::e(work);
            let front = BigFloat::from_u64(5, work) * &k / &pi;
            for n in 1..=n_max {
                let tau = crate::tutte::tau_from_b(n, &b[n])?;
                let tau_f = tau.to_float(work);
                // (e/(1440 n))^(n/2)
                let base = &e / &BigFloat::from_u64(1440 * n as u64, work);
                let mut form = base.powi((n / 2) as i64);
                if n % 2 == 1 {
                    form = form * base.sqrt();
                }
                let ratio = tau_f / (&front * &form);
                values.push((n as u64, ratio.with_precision(prec)));
            }
        }
    }
    richardson_with(&values, leading_levels(n_max), CorrectionModel::InversePowers)
}

/// `(1/4)^n Gamma(2n - 1/2) / ((n-1)!)^2` at `prec` bits; tends to
/// `1/(2 sqrt(2 pi))`.
pub fn gamma_ratio(n: usize, prec: usize) -> Result<BigFloat> {
    let g = gamma_half(4 * n as i64 - 1)?;
    let f = factorial(n as u64 - 1);
    let q = &g.q / rat_int(int_pow(4, n as u64) * &f * &f);
    Ok(crate::exact::ExactRadical::new(q, 0, g.b).to_float(prec))
}

/// The closed form `sqrt(15)/(20 pi^2)` at `prec` bits.
pub fn closed_form_c(prec: usize) -> BigFloat {
    let work = prec + 32;
    let pi = BigFloat::pi(work);
    let v = BigFloat::from_u64(15, work).sqrt() / (BigFloat::from_u64(20, work) * &pi * &pi);
    v.with_precision(prec)
}

/// `50 C` and `2 sqrt(pi) C`, the two alternative renderings of `C`.
pub fn c_renderings(prec: usize) -> (BigFloat, BigFloat) {
    let c = closed_form_c(prec + 32);
    let fifty = &c * &BigFloat::from_u64(50, prec + 32);
    let two_sqrt_pi = &c * &(BigFloat::pi(prec + 32).sqrt() * BigFloat::from_u64(2, prec + 32));
    (fifty.with_precision(prec), two_sqrt_pi.with_precision(prec))
}

/// `(1/(2 pi)) sqrt(6/(5 pi)) / (2 sqrt(2 pi))`, which equals the closed form
/// of `C` by the duplication formula.
pub fn duplication_form_c(prec: usize) -> BigFloat {
    let work = prec + 32;
    let pi = BigFloat::pi(work);
    let two_pi = &pi * &BigFloat::from_u64(2, work);
    let v = shared_constant(work) / &two_pi / (BigFloat::from_u64(2, work) * two_pi.sqrt());
    v.with_precision(prec)
}

/// Absolute difference `|a - b|`.
pub fn abs_diff(a: &BigFloat, b: &BigFloat) -> BigFloat {
    (a - b).abs()
}

/// True when `|a - b| <= tol`.
pub fn within(a: &BigFloat, b: &BigFloat, tol: f64) -> bool {
    let d = abs_diff(a, b);
    d.is_zero() || d <= BigFloat::from_f64(tol, 64).with_precision(d.precision())
}
