//! Quick invariant checks grouped by the library module a command touches.

use faltung::asymptotics::{closed_form_c, richardson, duplication_form_c, within};
use faltung::exact::{gamma_half, int_pow, rat, BigFloat, ExactRadical};
use faltung::recurrences::{a_boundary_row, a_table, alpha_seq, beta_seq, w_seq, WMode, WValues};
use faltung::series::{verify_painleve_y, verify_u_ode};
use faltung::{tutte, wright};
use num_traits::Signed;

use crate::report::SeedCheck;
use crate::Command;

type Check = (&'static str, fn() -> bool);

const RECURRENCES: &[Check] = &[
    ("a seeds", || {
        let t = a_table(2, 2);
        *t.get(0, 0) == rat(-1, 2) && *t.get(1, 0) == rat(1, 1) && *t.get(0, 2) == rat(49, 1) && *t.get(2, 0) == rat(5, 1)
    }),
    ("a integrality to 8x8", || {
        a_table(8, 8).iter().all(|((k, l), v)| (k, l) == (0, 0) || (v.is_integer() && v.is_positive()))
    }),
    ("boundary row matches table", || a_boundary_row(10) == a_table(0, 10).row(0)),
    ("alpha equals beta to 40", || alpha_seq(40, &rat(1, 50)).ok() == beta_seq(40).ok()),
    ("w exact seeds", || match w_seq(3, WMode::Exact) {
        Ok(WValues::Exact(w)) => w == [rat(1, 1), rat(1, 1), rat(1, 2), rat(2, 9)],
        _ => false,
    }),
];

const SERIES: &[Check] = &[
    ("u equation at order 40", || verify_u_ode(&rat(1, 50), 40).is_ok_and(|r| r.is_zero())),
    ("Painleve I at order 8", || verify_painleve_y(&rat(1, 50), 8).is_ok_and(|r| r.painleve_holds())),
    ("transformed equation at 1/2", || verify_painleve_y(&rat(1, 2), 8).is_ok_and(|r| r.full_holds())),
];

const WRIGHT: &[Check] = &[
    ("closed forms match enumeration for n <= 6", || {
        (3..=6usize).all(|n| {
            (0..=2).all(|m| {
                let closed = wright::f_wright(n, m).ok();
                let brute = if n + m > n * (n - 1) / 2 { Some(0.into()) } else { wright::f_bruteforce(n, n + m).ok() };
                closed.is_some() && closed == brute
            })
        })
    }),
    ("Cayley trees for n <= 6", || {
        (2..=6usize).all(|n| wright::f_bruteforce(n, n - 1).ok() == Some(int_pow(n, n as u64 - 2)))
    }),
    ("rho closed forms", || {
        wright::rho(0).ok() == Some(ExactRadical::new(rat(1, 2), -1, 1))
            && wright::rho(1).ok() == Some(ExactRadical::rational(rat(5, 24)))
    }),
];

const TUTTE: &[Check] = &[
    ("sphere counts", || {
        tutte::t_series(0, 4).is_ok_and(|t| t.coeffs == [1, 2, 9, 54].map(Into::into))
    }),
    ("torus counts", || tutte::t_series(1, 4).is_ok_and(|t| t.coeffs == [0, 0, 1, 20].map(Into::into))),
    ("integrality to 60", || (0..=2).all(|g| tutte::t_series(g, 60).is_ok())),
    ("tau closed forms", || {
        tutte::tau(0).ok() == Some(ExactRadical::new(rat(2, 1), 0, -1))
            && tutte::tau(1).ok() == Some(ExactRadical::rational(rat(1, 24)))
    }),
];

const ASYMPTOTICS: &[Check] = &[
    ("richardson recovers e", || {
        let p = 256;
        let v: Vec<_> = (10..=30u64)
            .map(|n| (n, BigFloat::from_rat(&rat(n as i64 + 1, n as i64), p).powi(n as i64)))
            .collect();
        richardson(&v, 8).is_ok_and(|est| within(&est.limit, &BigFloat::e(p), 1e-9))
    }),
    ("duplication identity for C", || within(&closed_form_c(256), &duplication_form_c(256), 1e-60)),
    ("Gamma at half integers", || {
        (1..40).all(|m| {
            let lhs = gamma_half(m + 2).unwrap();
            let rhs = &ExactRadical::rational(rat(m, 2)) * &gamma_half(m).unwrap();
            lhs == rhs
        })
    }),
];

fn checks_for(cmd: &Command) -> &'static [Check] {
    match cmd {
        Command::ATable { .. }
        | Command::Alpha { .. }
        | Command::BSeq { .. }
        | Command::VerifyIdentity { .. }
        | Command::W { .. }
        | Command::Moment { .. } => RECURRENCES,
        Command::VerifyUOde { .. } | Command::VerifyPainleve { .. } => SERIES,
        Command::Wright { .. } | Command::WrightOracle { .. } | Command::Rho { .. } => WRIGHT,
        Command::Tutte { .. } | Command::Tau { .. } => TUTTE,
        Command::CLimit { .. } | Command::WGrowth { .. } | Command::CheckAsymptotics { .. } => ASYMPTOTICS,
    }
}

pub fn run_for(cmd: &Command) -> Vec<SeedCheck> {
    checks_for(cmd)
        .iter()
        .map(|(name, check)| SeedCheck { name: name.to_string(), passed: check() })
        .collect()
}
