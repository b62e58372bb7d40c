"""Acceptance gate: every quantitative claim at its stated tolerance.

Each criterion prints one PASS/FAIL line (run with `pytest -s` to see them
while green; failing lines surface in the captured output regardless).
Criterion 6 is marked as a strict expected failure: the claimed sqrt
profile of the potential-derivative probe above the Cauchy horizon is
contradicted by the finite-difference-of-quadrature oracle (the
sqrt-order terms cancel identically; see README, Known deviations).
"""

import math

import numpy as np
import pytest

import shocklab as sl
from shocklab import Point, SolutionVariant
from shocklab.characteristics import BoundaryCurve
from shocklab.verification import HolderTarget

POL = sl.NumericPolicy()
W, CL = SolutionVariant.WEAK, SolutionVariant.CLASSICAL


def report(criterion: str, passed: bool, detail: str) -> None:
    print(f"[acceptance] {'PASS' if passed else 'FAIL'} {criterion}: {detail}")


def log_spaced(n=50, lo=1.001, hi=100.0):
    return np.exp(np.linspace(math.log(lo), math.log(hi), n))


class TestAcceptance:
    def test_c01_rankine_hugoniot(self):
        worst = max(sl.rh_residual(float(t), POL) for t in log_spaced())
        report("C01 rankine-hugoniot", worst <= 1e-11, f"max residual {worst:.3e} <= 1e-11")
        assert worst <= 1e-11

    def test_c02_lax_entropy(self):
        dev, min_gap = 0.0, math.inf
        for t in log_spaced():
            lo, up = sl.lax_gaps(float(t), POL)
            expected = math.atan(sl.shock_feet(float(t), POL)[1])
            dev = max(dev, abs(lo - expected), abs(up - expected))
            min_gap = min(min_gap, lo, up)
        near = max(sl.lax_gaps(1.0 + 1e-6, POL))
        ok = min_gap > 0.0 and dev <= 1e-10 and near < 2e-3
        report("C02 lax-entropy", ok,
               f"min gap {min_gap:.3e} > 0, foot deviation {dev:.3e} <= 1e-10, "
               f"crease value {near:.3e} < 2e-3")
        assert ok

    def test_c03_oleinik(self):
        worst = max(
            sl.oleinik_scan(t, (-10.0, 10.0), 400).max_quotient
            for t in (0.5, 1.0, 2.0, 5.0)
        )
        report("C03 oleinik", worst <= 1e-10, f"max forward quotient {worst:.3e} <= 1e-10")
        assert worst <= 1e-10

    def test_c04_weak_form(self):
        from shocklab.verification import standard_test_functions, weak_form_residual, TestFunction
        residuals = [abs(weak_form_residual(W, tf, POL)) for tf in standard_test_functions()]
        control = abs(weak_form_residual(
            W, TestFunction(Point(2.0, 4.0), (0.4, 0.8)), POL, shock_shift=0.05))
        ok = max(residuals) <= 1e-6 and control >= 1e-3
        report("C04 weak-form", ok,
               f"max |residual| {max(residuals):.3e} <= 1e-6 over 10 test functions, "
               f"negative control {control:.3e} >= 1e-3")
        assert ok

    def test_c05_holder_crease_and_boundary(self):
        crease = sl.holder_fit(HolderTarget.CREASE_SPATIAL, Point(1.0, 2.0),
                               sl.dyadic_offsets(1e-3, 11), POL)
        ok = abs(crease.exponent - 1.0 / 3.0) <= 0.02
        ok = ok and abs(crease.coefficient / 3.0 ** (1.0 / 3.0) - 1.0) <= 0.05
        detail = [f"crease ({crease.exponent:.4f}, {crease.coefficient:.4f})"]
        for t_bar in (1.5, 2.0, 5.0):
            fit = sl.holder_fit(HolderTarget.SINGULAR_BOUNDARY_SPATIAL, t_bar,
                                sl.dyadic_offsets(1e-4, 11), POL)
            pred = abs(sl.expansion_near_B(t_bar).leading_coefficient)
            ok = ok and abs(fit.exponent - 0.5) <= 0.02
            ok = ok and abs(fit.coefficient / pred - 1.0) <= 0.05
            detail.append(f"B(t={t_bar}) ({fit.exponent:.4f}, {fit.coefficient:.4f})")
        report("C05 holder-exponents", ok, "; ".join(detail))
        assert ok

    @pytest.mark.xfail(
        strict=True,
        reason="stated sqrt profile with coefficient sqrt(6) contradicts the "
        "finite-difference-of-quadrature oracle: the shock-crossing log term "
        "and the crossing-motion term cancel at sqrt order, so the probe "
        "decays linearly (measured exponent ~1.0); see README, Known deviations",
    )
    def test_c06_horizon_roughness(self):
        oks, details = [], []
        for x in (-2.0, 0.0, 1.0):
            fit = sl.holder_fit(HolderTarget.HORIZON_JUMP, x, sl.dyadic_offsets(1e-2, 11), POL)
            ok = abs(fit.exponent - 0.5) <= 0.02
            ok = ok and abs(fit.coefficient / math.sqrt(6.0) - 1.0) <= 0.05
            oks.append(ok)
            details.append(f"x={x} ({fit.exponent:.4f}, {fit.coefficient:.4f})")
        report("C06 horizon-roughness", all(oks),
               "; ".join(details) + " vs stated (0.5, 2.4495)")
        assert all(oks)

    def test_c07_nullness_and_tangency(self):
        psis = np.linspace(-math.pi / 2 + 1e-9, math.pi / 2 - 1e-9, 10_000)
        s = (4.0 + psis) ** 2
        gtt, gtx, gxx = -8.0 * (2.0 + psis) / s, -2.0 * psis / s, 4.0 / s
        gLL = np.abs(gtt + 2.0 * gtx * (2.0 + psis) + gxx * (2.0 + psis) ** 2)
        gBB = np.abs(gtt - 4.0 * gtx + 4.0 * gxx)
        null_worst = float(max(gLL.max(), gBB.max()))
        tang_worst = max(sl.tangency_residual_B(float(t)) for t in log_spaced())
        tangent_exact = sl.boundary_x_deriv(BoundaryCurve.CAUCHY_HORIZON, 2.0) == -2.0
        ok = null_worst <= 1e-13 and tang_worst <= 1e-10 and tangent_exact
        report("C07 nullness-tangency", ok,
               f"frame norms {null_worst:.3e} <= 1e-13, boundary tangency "
               f"{tang_worst:.3e} <= 1e-10, horizon tangent exactly (1, -2)")
        assert ok

    def test_c08_shock_causal_character(self):
        from shocklab.geometry import CausalClass
        ok = True
        for t in log_spaced():
            right, left = sl.shock_tangent_norms(float(t), POL)
            ok = ok and right > 0.0 and left < 0.0
            rc, lc = sl.shock_character(float(t), POL)
            ok = ok and rc is CausalClass.SPACELIKE and lc is CausalClass.TIMELIKE
        # reference values at t = 4/pi from the tangent-norm formula
        # -16 psi/(4+psi)^2 at psi = -/+ pi/4: +1.2160614 and -0.5487490
        right, left = sl.shock_tangent_norms(4.0 / math.pi, POL)
        exp_right = -16.0 * (-math.pi / 4.0) / (4.0 - math.pi / 4.0) ** 2
        exp_left = -16.0 * (math.pi / 4.0) / (4.0 + math.pi / 4.0) ** 2
        dev = max(abs(right - exp_right), abs(left - exp_left))
        ok = ok and dev <= 1e-3
        report("C08 shock-causal-character", ok,
               f"signs correct on 50 samples; t=4/pi norms ({right:.6f}, {left:.6f}) "
               f"within {dev:.1e} of ({exp_right:.6f}, {exp_left:.6f})")
        assert ok

    def test_c09_causal_bubbles(self):
        from shocklab.geometry import PastQuery
        ok = True
        for z in (0.25, 0.5, 1.0, 2.0, 4.0):
            apex, _ = sl.psi_boundary_extension(z)
            q = sl.bubble_witness(apex, POL)
            ok = ok and sl.causal_past_contains(PastQuery(apex, q), POL)
            ok = ok and not sl.timelike_past_contains(PastQuery(apex, q, "Timelike"), POL)
        apex = Point(2.0, 5.0 - math.pi / 2)
        target = Point(1.0, 2.1)
        in_causal = sl.causal_past_contains(PastQuery(apex, target), POL)
        in_timelike = sl.timelike_past_contains(PastQuery(apex, target, "Timelike"), POL)
        ok = ok and in_causal and not in_timelike
        report("C09 causal-bubbles", ok,
               f"witnesses causal-not-timelike at 5 apexes; explicit pair causal={in_causal}, "
               f"timelike={in_timelike}")
        assert ok

    def test_c10_nonunique_backward_curves(self):
        apex = Point(2.0, 5.0 - math.pi / 2)
        gb, gi, (rb, ri) = sl.backward_L_curves(apex, 0.95, 10_000, POL)
        k = int(np.argmin(np.abs(gb[:, 0] - 1.5)))
        gap = abs(gi[k, 1] - gb[k, 1])
        ok = rb <= 1e-4 and ri <= 1e-4 and gap >= 0.03
        report("C10 backward-curves", ok,
               f"residuals ({rb:.2e}, {ri:.2e}) <= 1e-4 at 10^4 nodes, "
               f"separation {gap:.4f} >= 0.03 at t=1.5")
        assert ok

    def test_c11_agreement_disagreement(self):
        rep = sl.agreement_disagreement_scan(1000, POL, seed=0)
        ok = (rep.max_gap_omega_a <= 1e-11 and rep.min_wedge_gap > 0.0
              and abs(rep.phi_gap_at_probe) >= 1e-4)
        report("C11 agreement-disagreement", ok,
               f"agreement gap {rep.max_gap_omega_a:.3e} <= 1e-11 on 1000 points, "
               f"min wedge gap {rep.min_wedge_gap:.3e} > 0 on 1000 points, "
               f"potential gap {abs(rep.phi_gap_at_probe):.3e} >= 1e-4")
        assert ok

    def test_c12_first_order_system(self):
        from shocklab.verification import _suite_pde
        checks = _suite_pde(POL, seed=0)
        by_name = {c.name: c for c in checks}
        res, order = by_name["pde_residual"], by_name["pde_fd_order"]
        # the stated example points at the stated step size
        examples = max(
            sl.pde_residual_classical(Point(0.5, 1.0), 1e-4, POL),
            sl.pde_residual_classical(Point(0.2, -5.0), 1e-4, POL),
        )
        ok = res.passed and order.passed and examples <= 1e-6
        report("C12 first-order-system", ok,
               f"max residual {res.measured:.3e} <= 1e-6 at 200 points, "
               f"min FD order {order.measured:.3f} >= 1.9 on 10 points, "
               f"example points {examples:.3e} <= 1e-6")
        assert ok

    def test_c13_godunov_oracle(self):
        from shocklab import godunov as fv
        s4 = fv.solve(2.0, fv.initial_state(4000))
        e4 = fv.l1_error(s4)
        s8 = fv.solve(2.0, fv.initial_state(8000))
        e8 = fv.l1_error(s8)
        sw = fv.solve(1.27, fv.initial_state(8000))
        i = int(np.argmin(np.abs(sw.cell_centers - 2.5)))
        u = float(sw.cell_averages[i])
        pw = sl.psi_weak(Point(1.27, 2.5), POL)
        pc = sl.psi_classical(Point(1.27, 2.5), POL)
        ok = (e4 <= 1e-2 and e8 / e4 <= 0.75
              and abs(u - pw) <= 0.05 and abs(u - pc) >= 0.5)
        report("C13 godunov-oracle", ok,
               f"L1(n=4000) {e4:.4e} <= 1e-2, ratio {e8 / e4:.3f} <= 0.75, "
               f"wedge cell {u:.4f} within 0.05 of entropy {pw:.4f} and "
               f">= 0.5 from classical {pc:.4f}")
        assert ok

    def test_c14_crease_location(self):
        at_crease = [sl.boundary_x(kind, 1.0) for kind in BoundaryCurve]
        near = [sl.boundary_x(kind, 1.0 + 1e-12) for kind in BoundaryCurve]
        pt, v = sl.psi_boundary_extension(0.0)
        ok = (all(x == 2.0 for x in at_crease)
              and all(abs(x - 2.0) <= 1e-5 for x in near)
              and (pt.t, pt.x, v) == (1.0, 2.0, 0.0))
        report("C14 crease-location", ok,
               f"all three curves reach x=2 at t=1; boundary map at parameter 0 "
               f"is exactly ((1, 2), 0)")
        assert ok
