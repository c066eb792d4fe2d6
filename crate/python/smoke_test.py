"""Smoke test for the pyfaltung extension module.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`
or `pip install` the wheel produced by `maturin build`.
"""

from fractions import Fraction
import math

import pyfaltung as pf


def main():
    assert pf.alpha_seq(2) == [Fraction(1, 50), Fraction(49, 2500)]
    assert pf.alpha_seq(100) == pf.beta_seq(100)
    assert pf.a_table(3, 3)[0][3] == 9800
    assert pf.b_seq(2) == [1, Fraction(-1, 48), Fraction(-49, 4608)]
    assert pf.w_seq(3) == [1, 1, Fraction(1, 2), Fraction(2, 9)]

    m = pf.moment(1, 0)
    assert (m.q, m.half_pow_2, m.half_pow_pi) == (Fraction(1, 2), 1, 1)
    assert math.isclose(float(m), math.sqrt(math.pi / 2), rel_tol=1e-15)

    assert pf.verify_u_ode("1/3", 40)
    holds, full, gate = pf.verify_painleve(10)
    assert holds and full and gate == 0
    holds, full, gate = pf.verify_painleve(10, "1/2")
    assert not holds and full and gate == 6

    assert [pf.f_wright(4, m) for m in range(3)] == [15, 6, 1]
    assert pf.f_bruteforce(4, 5) == 6
    assert pf.t_series(0, 5) == [1, 2, 9, 54, 378]
    assert pf.tau(1).q == Fraction(1, 24)
    assert math.isclose(float(pf.rho(0)), 0.5 * math.sqrt(math.pi / 2), rel_tol=1e-15)

    est = pf.c_limit("1/50", 80, 512)
    c = math.sqrt(15) / (20 * math.pi ** 2)
    assert abs(float(est) - c) < 1e-15, est
    assert est.reliable_digits >= 15

    e_est = pf.richardson([(n, f"{(n + 1) ** n}/{n ** n}") for n in range(10, 31)], 8)
    assert abs(float(e_est) - math.e) < 1e-9

    try:
        pf.alpha_seq(3, "3/2")
    except ValueError as err:
        assert "0 < alpha1 < 1" in str(err)
    else:
        raise AssertionError("expected ValueError")

    print("pyfaltung", pf.__version__, "smoke test passed")
    print("  C ~", est.limit_display(), "+-", f"{est.error_estimate:.1e}")


if __name__ == "__main__":
    main()
