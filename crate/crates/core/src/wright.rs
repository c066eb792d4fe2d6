//! Connected labeled simple graphs with few more edges than vertices.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{Signed, Zero};

use crate::asymptotics::{richardson_with, AsymptoticEstimate, CorrectionModel};
use crate::error::{Error, Result};
use crate::exact::{gamma_half, int_pow, BigFloat, ExactInt, ExactRadical};
use crate::recurrences::a_table;

/// Number of connected labeled graphs on `n` vertices with `e` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCount {
    pub n: usize,
    pub e: usize,
    pub value: ExactInt,
}

/// `sum_{k=1}^{n-1} C(n,k) k^k (n-k)^(n-k)`.
pub fn h(n: usize) -> Result<ExactInt> {
    if n < 2 {
        return Err(Error::Domain(format!("h(n) needs n >= 2, got {n}")));
    }
    let nb = BigInt::from(n);
    Ok((1..n)
        .map(|k| binomial(nb.clone(), BigInt::from(k)) * int_pow(k, k as u64) * int_pow(n - k, (n - k) as u64))
        .sum())
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Numerator and divisor of the closed form for `f(n, n+m)`.
pub fn wright_bracket(n: usize, m: usize) -> Result<(ExactInt, ExactInt)> {
    if m > 2 {
        return Err(Error::Domain(format!("closed form only for m in 0..=2, got {m}")));
    }
    let hn = h(n)?;
    let ni = n as i64;
    let trees = int_pow(n, n as u64 - 2) * big(ni - 1);
    Ok(match m {
        0 => {
            let (q, r) = hn.div_rem(&big(ni));
            if !r.is_zero() {
                return Err(Error::Consistency(format!("h({n}) not divisible by {n}")));
            }
            (q - trees, big(2))
        }
        1 => (trees * big(5 * ni * ni + 3 * ni + 2) - big(14) * hn, big(24)),
        _ => (
            big(45 * ni * ni + 386 * ni + 312) * hn
                - big(4) * trees * big(55 * ni * ni * ni + 36 * ni * ni + 18 * ni + 12),
            big(1152),
        ),
    })
}

/// Closed form for `f(n, n+m)`, `m` in `0..=2`, checked for exact division.
pub fn f_wright(n: usize, m: usize) -> Result<ExactInt> {
    if n < 2 {
        return Err(Error::Domain(format!("f_wright needs n >= 2, got {n}")));
    }
    let (num, div) = wright_bracket(n, m)?;
    let (q, r) = num.div_rem(&div);
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Consistency(format!(
            "f_wright({n}, {m}): bracket {num} is not a nonnegative multiple of {div}"
        )));
    }
    Ok(q)
}

/// Largest vertex count accepted by [`f_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 8;

/// Counts connected graphs by enumerating every `e`-subset of the edge slots.
pub fn f_bruteforce(n: usize, e: usize) -> Result<ExactInt> {
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::Domain(format!(
            "f_bruteforce refuses n = {n} (limit {BRUTEFORCE_MAX_N})"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("f_bruteforce needs n >= 1".into()));
    }
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = slots.len();
    if e > total {
        return Err(Error::Domain(format!("f_bruteforce: e = {e} exceeds C({n},2) = {total}")));
    }
    if e == 0 {
        return Ok(BigInt::from(u8::from(n == 1)));
    }
    let full: u32 = if n == 1 { 1 } else { (1u32 << n) - 1 };
    let mut count: u64 = 0;
    let mut mask: u32 = (1u32 << e) - 1;
    let limit: u32 = (1u32 << total) - 1;
    loop {
        if connected(mask, &slots, full) {
            count += 1;
        }
        if e == total {
            break;
        }
        // Gosper's hack: next integer with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        let next = (((r ^ mask) >> 2) / c) | r;
        if next > limit {
            break;
        }
        mask = next;
    }
    Ok(BigInt::from(count))
}

fn connected(mask: u32, slots: &[(usize, usize)], full: u32) -> bool {
    let mut adj = [0u32; BRUTEFORCE_MAX_N];
    let mut bits = mask;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        let (i, j) = slots[s];
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
        bits &= bits - 1;
    }
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == full
}

/// `sqrt(pi) a_{k,0} / (2^((7k-4)/2) Gamma((3k-1)/2))` with `k = m + 1`.
pub fn rho(m: usize) -> Result<ExactRadical> {
    let k = m + 1;
    let table = a_table(k, 0);
    let a = table.get(k, 0).clone();
    let num = ExactRadical::new(a, -(7 * k as i64 - 4), 1);
    Ok(&num / &gamma_half(3 * k as i64 - 1)?)
}

/// Extrapolates `f(n, n+m) / n^(n + (3m-1)/2)` over `n = 3..=n_max`.
pub fn rho_convergence(m: usize, n_max: usize, prec: usize) -> Result<AsymptoticEstimate> {
    if m > 2 {
        return Err(Error::Domain(format!("rho_convergence needs m in 0..=2, got {m}")));
    }
    if n_max < 10 {
        return Err(Error::Domain(format!("rho_convergence needs n_max >= 10, got {n_max}")));
    }
    let work = prec + 64;
    let mut values = Vec::new();
    for n in 3..=n_max {
        let f = BigFloat::from_int(&f_wright(n, m)?, work);
        // n^n exactly, then n^((3m-1)/2) as an integer power and a square root.
        let half_steps = 3 * m as i64 - 1;
        let mut den = BigFloat::from_int(&int_pow(n, n as u64), work);
        let nf = BigFloat::from_u64(n as u64, work);
        den = den * nf.powi(half_steps.div_euclid(2));
        if half_steps.rem_euclid(2) == 1 {
            den = den * nf.sqrt();
        }
        values.push((n as u64, (f / den).with_precision(prec)));
    }
    let levels = rho_levels(values.len());
    richardson_with(&values, levels, CorrectionModel::InverseSqrtPowers)
}

/// Default tableau depth for [`rho_convergence`] given the number of points.
pub fn rho_levels(points: usize) -> usize {
    (points / 3).clamp(1, 12)
}
