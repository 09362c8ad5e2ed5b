"""Smoke test for the scatter_entangle extension module.

Build and install first:

    pip install maturin
    maturin develop -m crates/python/Cargo.toml

then run `python python/smoke_test.py`.
"""

import math

import scatter_entangle as se


def close(a, b, tol=1e-12):
    return abs(a - b) < tol


def main():
    # amplitudes
    assert close(se.mandelstam_t(math.pi / 2, 1.0, 2.0), -6.0)
    assert close(se.mandelstam_u(math.pi / 3, 0.0, 1.0), -3.0)
    direct, exchange = se.coulomb_amplitudes(math.pi / 3, 0.0, 1.0)
    f_plus, f_minus = se.normalize(direct, exchange)
    assert close(f_plus.real, 3 / math.sqrt(10)) and close(f_minus.real, 1 / math.sqrt(10))
    assert all(close(x, y) for x, y in zip(se.coulomb_f_pm(math.pi / 3), (0.9**0.5, 0.1**0.5)))

    # spin states
    p, m = se.coulomb_f_pm(math.pi / 2)
    state = se.outgoing_state(p, m)
    singlet = se.TwoSpinState.singlet()
    assert all(abs(a - b) < 1e-12 for a, b in zip(state.coefficients, singlet.coefficients))
    rho = state.reduced_density_matrix(1)
    assert close(rho[0][0].real, 0.5) and close(rho[1][1].real, 0.5)
    boson = se.outgoing_state(p, m, "boson")
    assert boson.coefficients[2] == -state.coefficients[2]
    c_s, c_minus_s = se.slater_decomposition(p, m)
    assert se.slater_rank(c_s, c_minus_s) == 2
    assert se.distinguishable_outgoing_state(p, m).entropy() == 0.0

    # entanglement
    assert close(se.coulomb_entropy(math.pi / 2), 1.0)
    assert close(se.coulomb_entropy(math.pi / 3), 0.468996, 1e-6)
    assert close(se.eoe_symmetrized([c_s, c_minus_s]) - se.eoe_label_fixed([c_s, c_minus_s]), 1.0)

    # bell
    p3, m3 = se.coulomb_f_pm(math.pi / 3)
    assert close(se.bell_f(p3, m3), 0.8)
    assert se.is_violated(p3, m3)
    a, b, c = se.standard_geometry()
    s3 = se.outgoing_state(p3, m3)
    assert close(s3.correlator(b, c), se.correlator_closed_form(b, c, p3, m3))
    theta_c = se.critical_angle("coulomb")
    assert abs(theta_c - math.pi / 4) < 1e-9
    assert se.critical_angle("constant:1") is None

    # scans
    rows = se.scan(steps=50)
    assert len(rows) == 50 and close(rows[-1]["F"], 0.5)
    csv = se.scan_csv(steps=3)
    assert csv.splitlines()[0] == "theta,f_plus,f_minus,entropy,F,violated,slater_rank"
    row = se.point(math.pi / 8)
    assert row["violated"] is False

    try:
        se.point(0.0)
    except ValueError:
        pass
    else:
        raise AssertionError("theta = 0 must be rejected")

    print(f"ok: theta_c = {theta_c:.12f} rad")


if __name__ == "__main__":
    main()
