//! End-to-end acceptance checks, one line of output per criterion.
//!
//! Run with `cargo test -p faltung --test acceptance -- --nocapture` to see
//! the report.

use std::panic::{catch_unwind, AssertUnwindSafe};

use faltung::asymptotics::{
    c_limit, check_leading_asymptotics, gamma_ratio, richardson, w_growth, AsymptoticEstimate, LeadingTarget,
};
use faltung::exact::{int_pow, parse_rat, rat, BigFloat, ExactRadical, ExactRat, QSqrt6};
use faltung::recurrences::{a_boundary_row, a_table, alpha_seq, beta_seq, moment};
use faltung::series::{verify_painleve_y, verify_u_ode};
use faltung::{tutte, wright};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn diff(a: &BigFloat, b: &BigFloat) -> f64 {
    (a - b).abs().to_f64()
}

fn decimal(s: &str, prec: usize) -> BigFloat {
    BigFloat::from_rat(&parse_rat(s).unwrap(), prec)
}

/// sqrt(15) / (20 pi^2), assembled here independently of the library helper.
fn c_closed_form(prec: usize) -> BigFloat {
    let pi = BigFloat::pi(prec);
    BigFloat::from_u64(15, prec).sqrt() / BigFloat::from_u64(20, prec) / &pi / &pi
}

fn check_estimate(est: &AsymptoticEstimate, target: &BigFloat, tol: f64) -> Outcome {
    let d = diff(&est.limit, target);
    ensure(d <= tol, format!("|limit - target| = {d:.3e} > {tol:.0e}"))?;
    Ok(format!("limit {}, |diff| {d:.2e}, error estimate {}", est.limit.to_sci_string(15), est.error_estimate.to_sci_string(2)))
}

fn c1_seeds() -> Outcome {
    let t = a_table(3, 3);
    let expect = [((0, 0), rat(-1, 2)), ((1, 0), rat(1, 1)), ((0, 1), rat(1, 1)), ((0, 2), rat(49, 1)), ((2, 0), rat(5, 1)), ((3, 0), rat(60, 1)), ((0, 3), rat(9800, 1))];
    for ((k, l), v) in &expect {
        ensure(t.get(*k, *l) == v, format!("a({k},{l}) = {} expected {v}", t.get(*k, *l)))?;
    }
    // The single-index recurrence along l is an independent route to a(0,3).
    let row = a_boundary_row(3);
    ensure(row[3] == rat(9800, 1), format!("boundary row gives a(0,3) = {}", row[3]))?;
    Ok("seven seeds exact; a(0,3) = 9800 by both recurrences".into())
}

fn c2_integrality() -> Outcome {
    let t = a_table(12, 12);
    for ((k, l), v) in t.iter() {
        if (k, l) == (0, 0) {
            continue;
        }
        ensure(v.is_integer() && v.is_positive(), format!("a({k},{l}) = {v}"))?;
    }
    Ok("168 entries are positive integers".into())
}

fn c3_alpha_beta() -> Outcome {
    let a = alpha_seq(100, &rat(1, 50)).map_err(|e| e.to_string())?;
    let b = beta_seq(100).map_err(|e| e.to_string())?;
    ensure(a == b, "alpha and beta differ")?;
    Ok("100 terms identical".into())
}

fn c4_u_ode() -> Outcome {
    for a1 in [rat(1, 50), rat(1, 2), rat(1, 3)] {
        let r = verify_u_ode(&a1, 200).map_err(|e| e.to_string())?;
        ensure(r.residual.len() == 200 && r.is_zero(), format!("nonzero residual at alpha1 = {a1}"))?;
    }
    Ok("200 coefficients vanish for alpha1 = 1/50, 1/2, 1/3".into())
}

fn c5_painleve() -> Outcome {
    let r = verify_painleve_y(&rat(1, 50), 50).map_err(|e| e.to_string())?;
    ensure(r.painleve_holds(), "Painleve residual nonzero at alpha1 = 1/50")?;
    ensure(r.painleve_residual.iter().all(|(_, c)| *c == QSqrt6::zero()), "residual check")?;
    let other = verify_painleve_y(&rat(1, 2), 50).map_err(|e| e.to_string())?;
    ensure(!other.gate.is_zero(), "gate vanishes at alpha1 = 1/2")?;
    ensure(other.full_holds(), "transformed equation fails at alpha1 = 1/2")?;
    Ok(format!(
        "{} residual coefficients vanish over Q(sqrt 6); gate at 1/2 is {}",
        r.painleve_residual.len(),
        other.gate
    ))
}

fn c6_c_constant() -> Outcome {
    let est = c_limit(&rat(1, 50), 160, 1024).map_err(|e| e.to_string())?;
    ensure(est.reliable_digits() >= 8, format!("only {} reliable digits", est.reliable_digits()))?;
    check_estimate(&est, &c_closed_form(1024), 5e-10)
}

fn c7_c_half() -> Outcome {
    let est = c_limit(&rat(1, 2), 160, 1024).map_err(|e| e.to_string())?;
    ensure(est.reliable_digits() >= 10, format!("only {} reliable digits", est.reliable_digits()))?;
    let target = decimal("0.25338404774059570625310093001580807965353268866793", 1024);
    check_estimate(&est, &target, 1e-11)
}

fn c8_w_growth() -> Outcome {
    let w = w_growth(2000, 768).map_err(|e| e.to_string())?;
    ensure(w.sigma.reliable_digits() >= 10, format!("only {} reliable digits", w.sigma.reliable_digits()))?;
    let target = decimal("3.14085756720293695160", 768);
    let d = diff(&w.sigma.limit, &target);
    ensure(d < 1e-10, format!("sigma off by {d:.3e}"))?;
    let p = diff(&w.prefactor.limit, &BigFloat::from_u64(1, 768));
    ensure(p < 1e-6, format!("prefactor off by {p:.3e}"))?;
    Ok(format!("sigma {}, prefactor |diff| {p:.2e}", w.sigma.limit.to_sci_string(21)))
}

fn c9_wright_oracle() -> Outcome {
    for n in 3..=7usize {
        for m in 0..=2usize {
            let closed = wright::f_wright(n, m).map_err(|e| e.to_string())?;
            let max_e = n * (n - 1) / 2;
            let brute = if n + m > max_e {
                BigInt::zero()
            } else {
                wright::f_bruteforce(n, n + m).map_err(|e| e.to_string())?
            };
            ensure(closed == brute, format!("f({n},{}) closed {closed} vs enumerated {brute}", n + m))?;
        }
    }
    for (n, e, v) in [(3, 3, 1), (4, 4, 15), (4, 5, 6), (4, 6, 1)] {
        ensure(wright::f_wright(n, e - n).unwrap() == BigInt::from(v), format!("f({n},{e})"))?;
    }
    for n in 2..=7usize {
        let trees = wright::f_bruteforce(n, n - 1).map_err(|e| e.to_string())?;
        ensure(trees == int_pow(n, n as u64 - 2), format!("Cayley fails at n = {n}"))?;
    }
    Ok("15 closed forms match enumeration; Cayley holds for n <= 7".into())
}

fn c10_rho() -> Outcome {
    let expect = [
        ExactRadical::new(rat(1, 2), -1, 1),
        ExactRadical::rational(rat(5, 24)),
        ExactRadical::new(rat(5, 128), -1, 1),
    ];
    let mut worst: f64 = 0.0;
    for (m, e) in expect.iter().enumerate() {
        let r = wright::rho(m).map_err(|e| e.to_string())?;
        ensure(&r == e, format!("rho({m}) = {r}"))?;
        let est = wright::rho_convergence(m, 40, 512).map_err(|e| e.to_string())?;
        let d = diff(&est.limit, &e.to_float(512));
        ensure(d < 1e-3, format!("rho_convergence({m}) off by {d:.3e}"))?;
        worst = worst.max(d);
    }
    Ok(format!("exact radicals match; worst extrapolation |diff| {worst:.2e}"))
}

const T0: [i64; 11] = [1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772, 165297834];
const T1: [i64; 11] = [0, 0, 1, 20, 307, 4280, 56914, 736568, 9370183, 117822512, 1469283166];
const T2: [i64; 11] = [0, 0, 0, 0, 21, 966, 27954, 650076, 13271982, 248371380, 4366441128];

fn c11_tutte_series() -> Outcome {
    for (g, expect) in [T0, T1, T2].iter().enumerate() {
        let t = tutte::t_series(g, 11).map_err(|e| e.to_string())?;
        let want: Vec<BigInt> = expect.iter().map(|&v| BigInt::from(v)).collect();
        ensure(t.coeffs == want, format!("T_{g} mismatch"))?;
    }
    for g in 0..=2 {
        // t_series itself refuses non-integral or negative coefficients.
        let t = tutte::t_series(g, 201).map_err(|e| e.to_string())?;
        ensure(t.coeffs.len() == 201, "length")?;
    }
    Ok("three expansions match through x^10; integral through n = 200".into())
}

fn c12_tau() -> Outcome {
    let expect = [
        ExactRadical::new(rat(2, 1), 0, -1),
        ExactRadical::rational(rat(1, 24)),
        ExactRadical::new(rat(7, 4320), 0, -1),
    ];
    let tols = [1e-4, 1e-4, 1e-3];
    let mut worst: f64 = 0.0;
    for g in 0..=2 {
        let t = tutte::tau(g).map_err(|e| e.to_string())?;
        ensure(t == expect[g], format!("tau({g}) = {t}"))?;
        let est = tutte::tau_convergence(g, 200, 512).map_err(|e| e.to_string())?;
        let d = diff(&est.limit, &expect[g].to_float(512));
        ensure(d < tols[g], format!("tau_convergence({g}) off by {d:.3e}"))?;
        worst = worst.max(d);
    }
    Ok(format!("exact radicals match; worst extrapolation |diff| {worst:.2e}"))
}

fn c13_moments() -> Outcome {
    let m1 = moment(1, 0).map_err(|e| e.to_string())?;
    ensure(m1.value == ExactRadical::new(ExactRat::one(), -1, 1), format!("moment(1,0) = {}", m1.value))?;
    let m2 = moment(2, 0).map_err(|e| e.to_string())?;
    ensure(m2.value == ExactRadical::rational(rat(5, 3)), format!("moment(2,0) = {}", m2.value))?;
    // Float cross-check of the radical against sqrt(pi/2) computed directly.
    let direct = (BigFloat::pi(256) / BigFloat::from_u64(2, 256)).sqrt();
    ensure(diff(&m1.value.to_float(256), &direct) < 1e-70, "float value of moment(1,0)")?;
    Ok("moment(1,0) = sqrt(pi/2), moment(2,0) = 5/3".into())
}

fn c14_leading_asymptotics() -> Outcome {
    let one = BigFloat::from_u64(1, 1024);
    let mut parts = Vec::new();
    for (target, tol) in [(LeadingTarget::Alpha, 1e-6), (LeadingTarget::B, 1e-6), (LeadingTarget::Tau, 1e-3)] {
        let est = check_leading_asymptotics(target, 120, 1024).map_err(|e| e.to_string())?;
        let d = diff(&est.limit, &one);
        ensure(d < tol, format!("{target:?} ratio off by {d:.3e}"))?;
        parts.push(format!("{target:?} {d:.1e}"));
    }
    // Duplication-formula consistency, built from scratch at 256 bits.
    let p = 256;
    let pi = BigFloat::pi(p);
    let two_pi = BigFloat::from_u64(2, p) * &pi;
    let k = (BigFloat::from_u64(6, p) / (BigFloat::from_u64(5, p) * &pi)).sqrt();
    let lhs = k / &two_pi / (BigFloat::from_u64(2, p) * two_pi.sqrt());
    let rhs = c_closed_form(p);
    let rel = diff(&lhs, &rhs) / rhs.to_f64();
    ensure(rel < 1e-30, format!("consistency identity off by {rel:.3e}"))?;
    // And the Gamma ratio does approach 1/(2 sqrt(2 pi)).
    let g = gamma_ratio(2000, p).map_err(|e| e.to_string())?;
    let lim = (BigFloat::from_u64(8, p) * &pi).sqrt().recip();
    ensure(diff(&g, &lim) < 1e-4, "gamma ratio limit")?;
    Ok(format!("{}; identity rel. diff {rel:.1e}", parts.join(", ")))
}

fn c15_richardson_e() -> Outcome {
    let p = 256;
    let values: Vec<_> = (10..=30u64)
        .map(|n| (n, BigFloat::from_rat(&rat(n as i64 + 1, n as i64), p).powi(n as i64)))
        .collect();
    let est = richardson(&values, 8).map_err(|e| e.to_string())?;
    check_estimate(&est, &BigFloat::e(p), 1e-9)
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 15] = [
        ("exact seeds and small values", c1_seeds),
        ("integrality of a(k,l) for k,l <= 12", c2_integrality),
        ("alpha = beta through 100", c3_alpha_beta),
        ("u-equation residuals at order 200", c4_u_ode),
        ("Painleve I residuals at order 50", c5_painleve),
        ("constant C", c6_c_constant),
        ("constant c(1/2)", c7_c_half),
        ("w growth constant and prefactor", c8_w_growth),
        ("Wright closed forms vs enumeration", c9_wright_oracle),
        ("Wright constants", c10_rho),
        ("rooted map expansions", c11_tutte_series),
        ("rooted map constants", c12_tau),
        ("moments", c13_moments),
        ("leading asymptotics and consistency identity", c14_leading_asymptotics),
        ("extrapolation sanity on (1+1/n)^n", c15_richardson_e),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
