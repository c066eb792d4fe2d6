//! The convolution recurrences and the exact joint moments built on them.
//!
//! * `a(k,l)`: the two-index table
//!   `a(k,l) = 2(3k+5l-4) a(k-1,l) + 2(3k+5l-6)(3k+5l-4) a(k,l-1)
//!            + sum_{0<i+j<k+l} a(i,j) a(k-i,l-j)`
//!   with `a(0,0) = -1/2`, `a(1,0) = a(0,1) = 1` and zero outside the quadrant.
//! * `alpha(n) = 50^-n a(0,n)`, generalized to any first term in `(0,1)`.
//! * `b(g)` and its rescaling `beta(g) = -1/2 (25/48)^-g b(g)`.
//! * `w(n)`: `w(0) = 1`, `w(n+1) = (n+1)^-2 sum_{k=0}^{n} w(k) w(n-k)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    factorial, gamma_half, rat, rat_int, rat_powi, BigFloat, ExactRadical, ExactRat,
};

/// Dense table of `a(k,l)` for `0 <= k <= max_k`, `0 <= l <= max_l`.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceTable {
    pub max_k: usize,
    pub max_l: usize,
    entries: Vec<Vec<ExactRat>>,
}

impl RecurrenceTable {
    /// `a(k,l)`, panicking outside the computed range.
    pub fn get(&self, k: usize, l: usize) -> &ExactRat {
        &self.entries[k][l]
    }

    /// `a(k,l)` with the convention that negative indices give zero.
    pub fn value(&self, k: i64, l: i64) -> ExactRat {
        if k < 0 || l < 0 {
            ExactRat::zero()
        } else {
            self.get(k as usize, l as usize).clone()
        }
    }

    /// Row `k` as a slice indexed by `l`.
    pub fn row(&self, k: usize) -> &[ExactRat] {
        &self.entries[k]
    }

    /// Iterates `((k, l), value)` over every entry.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &ExactRat)> {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(k, row)| row.iter().enumerate().map(move |(l, v)| ((k, l), v)))
    }
}

/// Fills the `a(k,l)` table by increasing anti-diagonal `k + l`.
///
/// Every term on the right-hand side lies on an earlier anti-diagonal, so
/// each diagonal only reads completed ones.
pub fn a_table(max_k: usize, max_l: usize) -> RecurrenceTable {
    let mut entries = vec![vec![ExactRat::zero(); max_l + 1]; max_k + 1];
    entries[0][0] = rat(-1, 2);
    for s in 1..=(max_k + max_l) {
        for k in s.saturating_sub(max_l)..=s.min(max_k) {
            let l = s - k;
            entries[k][l] = match (k, l) {
                (1, 0) | (0, 1) => ExactRat::one(),
                _ => a_entry(&entries, k, l),
            };
        }
    }
    RecurrenceTable { max_k, max_l, entries }
}

fn a_entry(e: &[Vec<ExactRat>], k: usize, l: usize) -> ExactRat {
    let w = 3 * k as i64 + 5 * l as i64;
    let mut acc = ExactRat::zero();
    if k >= 1 {
        acc += &e[k - 1][l] * BigInt::from(2 * (w - 4));
    }
    if l >= 1 {
        acc += &e[k][l - 1] * BigInt::from(2 * (w - 6) * (w - 4));
    }
    let s = k + l;
    for i in 0..=k {
        for j in 0..=l {
            let t = i + j;
            if t > 0 && t < s {
                acc += &e[i][j] * &e[k - i][l - j];
            }
        }
    }
    acc
}

/// `a(0,l)` for `l <= n` from the single-index specialization
/// `a(0,l) = 2(5l-6)(5l-4) a(0,l-1) + sum_{j=1}^{l-1} a(0,j) a(0,l-j)`.
pub fn a_boundary_row(n: usize) -> Vec<ExactRat> {
    let mut a = vec![rat(-1, 2)];
    for l in 1..=n {
        if l == 1 {
            a.push(ExactRat::one());
            continue;
        }
        let li = l as i64;
        let mut v = &a[l - 1] * BigInt::from(2 * (5 * li - 6) * (5 * li - 4));
        for j in 1..l {
            v += &a[j] * &a[l - j];
        }
        a.push(v);
    }
    a
}

fn check_alpha1(alpha1: &ExactRat) -> Result<()> {
    if alpha1.is_positive() && *alpha1 < ExactRat::one() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "alpha1 = {alpha1} violates the precondition 0 < alpha1 < 1"
        )))
    }
}

/// `alpha(1..=n_max)` with `alpha(1) = alpha1`, `alpha(2) = alpha1 (1 - alpha1)`
/// and `alpha(n+1) = n^2 alpha(n) + sum_{j=2}^{n-1} alpha(j) alpha(n+1-j)`.
///
/// The returned vector is indexed from zero, so `result[n - 1]` is `alpha(n)`.
pub fn alpha_seq(n_max: usize, alpha1: &ExactRat) -> Result<Vec<ExactRat>> {
    check_alpha1(alpha1)?;
    if n_max == 0 {
        return Err(Error::Domain("alpha_seq needs n_max >= 1".into()));
    }
    // Index by n directly; slot 0 is unused.
    let mut a = vec![ExactRat::zero(), alpha1.clone()];
    if n_max >= 2 {
        a.push(alpha1 * (ExactRat::one() - alpha1));
    }
    for n in 2..n_max {
        let mut v = &a[n] * BigInt::from(n * n);
        for j in 2..n {
            v += &a[j] * &a[n + 1 - j];
        }
        a.push(v);
    }
    a.remove(0);
    Ok(a)
}

/// `b(0..=g_max)`: `b(0) = 1`,
/// `b(g+1) = (25g^2 - 1)/48 b(g) - 1/2 sum_{m=1}^{g} b(m) b(g+1-m)`.
pub fn b_seq(g_max: usize) -> Vec<ExactRat> {
    let mut b = vec![ExactRat::one()];
    for g in 0..g_max {
        let gi = g as i64;
        let mut v = &b[g] * rat(25 * gi * gi - 1, 48);
        let mut conv = ExactRat::zero();
        for m in 1..=g {
            conv += &b[m] * &b[g + 1 - m];
        }
        v -= conv / BigInt::from(2);
        b.push(v);
    }
    b
}

/// `beta(1..=g_max)` from `b`; `result[g - 1]` is `beta(g)`.
pub fn beta_seq(g_max: usize) -> Result<Vec<ExactRat>> {
    if g_max == 0 {
        return Err(Error::Domain("beta_seq needs g_max >= 1".into()));
    }
    let b = b_seq(g_max);
    let ratio = rat(25, 48);
    Ok((1..=g_max)
        .map(|g| rat(-1, 2) * rat_powi(&ratio, -(g as i64)) * &b[g])
        .collect())
}

/// Evaluation mode for [`w_seq`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WMode {
    Exact,
    /// Binary floating point at the given precision in bits (at least 64).
    Float(usize),
}

/// Output of [`w_seq`].
#[derive(Clone, Debug)]
pub enum WValues {
    Exact(Vec<ExactRat>),
    Float(Vec<BigFloat>),
}

/// `w(0..=n_max)`.
///
/// Float mode accumulates each convolution with 64 guard bits and rounds the
/// stored value once, which keeps the relative error of `w(n)` within
/// `n * 2^-p` (all terms are positive).
pub fn w_seq(n_max: usize, mode: WMode) -> Result<WValues> {
    match mode {
        WMode::Exact => Ok(WValues::Exact(w_exact(n_max))),
        WMode::Float(p) if p < 64 => Err(Error::Domain(format!(
            "w_seq float mode needs precision >= 64 bits, got {p}"
        ))),
        WMode::Float(p) => Ok(WValues::Float(w_float(n_max, p))),
    }
}

pub(crate) fn w_exact(n_max: usize) -> Vec<ExactRat> {
    let mut w = vec![ExactRat::one()];
    for n in 0..n_max {
        let mut s = ExactRat::zero();
        for k in 0..=n {
            s += &w[k] * &w[n - k];
        }
        w.push(s / BigInt::from((n + 1) * (n + 1)));
    }
    w
}

pub(crate) fn w_float(n_max: usize, p: usize) -> Vec<BigFloat> {
    let work = p + 64;
    let mut w = vec![BigFloat::from_u64(1, p)];
    for n in 0..n_max {
        // Symmetric convolution: pair k with n - k.
        let mut s = BigFloat::zero(work);
        for k in 0..(n + 1) / 2 {
            s = s + w[k].with_precision(work) * &w[n - k];
        }
        s = s.mul_pow2(1);
        if n % 2 == 0 {
            let h = n / 2;
            s = s + w[h].with_precision(work) * &w[h];
        }
        let d = BigFloat::from_u64(((n + 1) * (n + 1)) as u64, work);
        w.push((s / d).with_precision(p));
    }
    w
}

/// Exact joint moment `E(xi^k eta^l)` of the limiting path-length pair.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentValue {
    pub k: usize,
    pub l: usize,
    pub value: ExactRadical,
    /// False for `(0,0)`, where the formula is evaluated through
    /// `Gamma(-1/2)` and sits outside the moment interpretation.
    pub is_moment: bool,
}

/// `E(xi^k eta^l) = k! l! sqrt(pi) / (2^((5k+7l-4)/2) Gamma((3k+5l-1)/2)) a(k,l)`.
pub fn moment(k: usize, l: usize) -> Result<MomentValue> {
    let table = a_table(k, l);
    moment_from_table(&table, k, l)
}

pub(crate) fn moment_from_table(table: &RecurrenceTable, k: usize, l: usize) -> Result<MomentValue> {
    let (ki, li) = (k as i64, l as i64);
    let gamma = gamma_half(3 * ki + 5 * li - 1)?;
    let q = rat_int(factorial(k as u64) * factorial(l as u64)) * table.get(k, l);
    let numer = ExactRadical::new(q, -(5 * ki + 7 * li - 4), 1);
    Ok(MomentValue {
        k,
        l,
        value: &numer / &gamma,
        is_moment: (k, l) != (0, 0),
    })
}
