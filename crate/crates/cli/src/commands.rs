use faltung::asymptotics::{c_limit, check_leading_asymptotics, closed_form_c, w_growth, LeadingTarget};
use faltung::exact::{rat, BigFloat, ExactRat};
use faltung::recurrences::{a_table, alpha_seq, b_seq, beta_seq, moment, w_seq, WMode, WValues};
use faltung::series::{verify_painleve_y, verify_u_ode};
use faltung::{tutte, wright, Result};
use serde_json::{json, Value};

use crate::report::{self, Outcome, Table, Tag};
use crate::Command;

pub struct Options {
    pub prec: usize,
    pub digits: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum WModeArg {
    Exact,
    Float,
}

fn table(header: &[&str], rows: Vec<Vec<String>>) -> Option<Table> {
    Some(Table { header: header.iter().map(|h| h.to_string()).collect(), rows })
}

fn indexed<T: ToString>(start: usize, values: impl IntoIterator<Item = T>) -> Vec<Vec<String>> {
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| vec![(start + i).to_string(), v.to_string()])
        .collect()
}

fn compare(out: &mut Outcome, key: &str, estimate: &BigFloat, target: &BigFloat, digits: usize) {
    let diff = (estimate - target).abs();
    out.float(
        key,
        json!({ "value": report::float(target, digits), "abs_diff": diff.to_sci_string(3) }),
        Tag::float(target.precision(), None),
    );
}

pub fn execute(cmd: &Command, opts: &Options) -> Result<Outcome> {
    let mut out = Outcome::default();
    let digits = opts.digits;
    match cmd {
        Command::ATable { max_k, max_l } => {
            out.input("max_k", max_k).input("max_l", max_l);
            let t = a_table(*max_k, *max_l);
            let rows: Vec<Value> = (0..=*max_k).map(|k| report::rats(t.row(k))).collect();
            out.exact("a", Value::Array(rows));
            out.table = table(
                &["k", "l", "a"],
                t.iter().map(|((k, l), v)| vec![k.to_string(), l.to_string(), v.to_string()]).collect(),
            );
        }
        Command::Alpha { n, alpha1 } => {
            out.input("n", n).input("alpha1", alpha1);
            let a = alpha_seq(*n, alpha1)?;
            out.exact("alpha", report::rats(&a));
            out.table = table(&["n", "alpha"], indexed(1, &a));
        }
        Command::BSeq { g } => {
            out.input("g", g);
            let b = b_seq(*g);
            out.exact("b", report::rats(&b));
            out.table = table(&["g", "b"], indexed(0, &b));
        }
        Command::VerifyIdentity { g } => {
            out.input("g", g);
            let a = alpha_seq(*g, &rat(1, 50))?;
            let b = beta_seq(*g)?;
            let first_mismatch = a.iter().zip(&b).position(|(x, y)| x != y).map(|i| i + 1);
            out.exact("identical", json!(first_mismatch.is_none()));
            out.exact("terms", json!(g));
            if let Some(i) = first_mismatch {
                out.violation = Some(format!("alpha and beta differ at index {i}"));
            }
        }
        Command::W { n, mode } => {
            out.input("n", n).input("mode", format!("{mode:?}").to_lowercase());
            let wmode = match mode {
                WModeArg::Exact => WMode::Exact,
                WModeArg::Float => WMode::Float(opts.prec),
            };
            match w_seq(*n, wmode)? {
                WValues::Exact(w) => {
                    out.exact("w", report::rats(&w));
                    out.table = table(&["n", "w"], indexed(0, &w));
                }
                WValues::Float(w) => {
                    let shown: Vec<String> = w.iter().map(|x| report::float(x, digits)).collect();
                    out.input("prec", opts.prec);
                    out.float("w", json!(shown), Tag::float(opts.prec, None));
                    out.table = table(&["n", "w"], indexed(0, shown));
                }
            }
        }
        Command::Moment { k, l } => {
            out.input("k", k).input("l", l);
            let m = moment(*k, *l)?;
            out.exact("value", report::radical(&m.value, digits));
            out.exact("is_moment", json!(m.is_moment));
        }
        Command::VerifyUOde { alpha1, order } => {
            out.input("alpha1", alpha1).input("order", order);
            let r = verify_u_ode(alpha1, *order)?;
            let nonzero: Vec<usize> =
                r.residual.iter().enumerate().filter(|(_, c)| !is_zero(c)).map(|(i, _)| i).collect();
            out.exact("residual_zero", json!(nonzero.is_empty()));
            out.exact("coefficients_checked", json!(r.residual.len()));
            if let Some(i) = nonzero.first() {
                out.violation = Some(format!("coefficient of t^-{i} is {}", r.residual[*i]));
            }
        }
        Command::VerifyPainleve { order, alpha1 } => {
            out.input("order", order).input("alpha1", alpha1);
            let r = verify_painleve_y(alpha1, *order)?;
            out.exact("painleve_holds", json!(r.painleve_holds()));
            out.exact("transformed_equation_holds", json!(r.full_holds()));
            out.exact("gate", report::rat(&r.gate));
            out.exact("coefficients_checked", json!(r.painleve_residual.len()));
            if !r.full_holds() {
                out.violation = Some("transformed equation has a nonzero residual".into());
            } else if r.gate == rat(0, 1) && !r.painleve_holds() {
                out.violation = Some("Painleve I residual nonzero with vanishing gate".into());
            }
        }
        Command::Wright { n, m } => {
            out.input("n", n).input("m", m);
            out.exact("count", report::int(&wright::f_wright(*n, *m)?));
        }
        Command::WrightOracle { n, e } => {
            out.input("n", n).input("e", e);
            out.exact("count", report::int(&wright::f_bruteforce(*n, *e)?));
        }
        Command::Rho { m, converge, n_max } => {
            out.input("m", m);
            let r = wright::rho(*m)?;
            out.exact("rho", report::radical(&r, digits));
            if *converge {
                out.input("n_max", n_max).input("prec", opts.prec);
                let est = wright::rho_convergence(*m, *n_max, opts.prec)?;
                out.estimate("estimate", &est, digits);
                compare(&mut out, "target", &est.limit, &r.to_float(opts.prec), digits);
            }
        }
        Command::Tutte { genus, order } => {
            out.input("genus", genus).input("order", order);
            let t = tutte::t_series(*genus, *order)?;
            out.exact("T", Value::Array(t.coeffs.iter().map(report::int).collect()));
            out.table = table(&["n", "T"], indexed(0, &t.coeffs));
        }
        Command::Tau { g, converge, n_max } => {
            out.input("g", g);
            let t = tutte::tau(*g)?;
            out.exact("tau", report::radical(&t, digits));
            if *converge {
                out.input("n_max", n_max).input("prec", opts.prec);
                let est = tutte::tau_convergence(*g, *n_max, opts.prec)?;
                out.estimate("estimate", &est, digits);
                compare(&mut out, "target", &est.limit, &t.to_float(opts.prec), digits);
            }
        }
        Command::CLimit { alpha1, n_max } => {
            out.input("alpha1", alpha1).input("n_max", n_max).input("prec", opts.prec);
            let est = c_limit(alpha1, *n_max, opts.prec)?;
            out.estimate("estimate", &est, digits);
            if *alpha1 == rat(1, 50) {
                compare(&mut out, "closed_form", &est.limit, &closed_form_c(opts.prec), digits);
            }
        }
        Command::WGrowth { n_max } => {
            out.input("n_max", n_max).input("prec", opts.prec);
            let w = w_growth(*n_max, opts.prec)?;
            out.estimate("sigma", &w.sigma, digits);
            out.estimate("prefactor", &w.prefactor, digits);
        }
        Command::CheckAsymptotics { target, n_max } => {
            out.input("target", target).input("n_max", n_max).input("prec", opts.prec);
            let t: LeadingTarget = target.parse()?;
            let est = check_leading_asymptotics(t, *n_max, opts.prec)?;
            out.estimate("ratio", &est, digits);
        }
    }
    Ok(out)
}

fn is_zero(q: &ExactRat) -> bool {
    *q == rat(0, 1)
}
