"""Wave potential along ingoing characteristics and its first derivatives.

The potential of either Burgers field is the half-integral of the field
along the ingoing line of slope -2 through the point, back to the initial
slice:

    Phi(t, x) = 1/2 * integral_{y=x}^{x+2t} psi(t + (x - y)/2, y) dy,

so Phi(0, .) = 0 and the ingoing derivative d_t(Phi) - 2 d_x(Phi)
recovers the field exactly.  The integration path crosses the line x = 2s
at most once, at y = t + x/2 (crossing time t/2 + x/4); when that crossing
time exceeds 1 the weak integrand jumps there, and quadrature panels are
split at the crossing.

The spatial derivative has a closed form.  Differentiating the integral in
x translates the path, which (i) turns the integrand derivative into an
exact log-derivative along the path and (ii) moves the shock-crossing
location, so

    d_x(Phi) = log((4 + psi(0, x+2t)) / (4 + psi(t, x)))
             + [ log((4 + psi_left)/(4 + psi_right))
                 - (psi_left - psi_right)/4 ]           (jump, weak only)

with the one-sided shock values taken at the crossing time.  Both terms of
the bracket vanish like sqrt of the height above the Cauchy horizon and
cancel at that order, so d_x(Phi) of the weak potential is differentiable
across the horizon; the formula is verified against finite differences of
the quadrature in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_POLICY,
    DomainError,
    NumericPolicy,
    OnShockError,
    OutsideDomain,
    Point,
    SolutionVariant,
    adaptive_quad,
    psi0,
)
from .characteristics import RegionTag, classify
from .burgers import (
    psi_classical,
    psi_classical_array,
    psi_weak,
    psi_weak_array,
    shock_trace,
)

__all__ = [
    "QuadPlan",
    "build_quad_plan",
    "phi",
    "dphidx_closed",
    "dphidt_closed",
    "lbar_derivative",
    "horizon_jump_probe",
    "pde_residual_classical",
]


@dataclass(frozen=True)
class QuadPlan:
    """Ordered panel edges (in the integration variable y) for one potential evaluation."""

    breakpoints: tuple[float, ...]
    nodes_per_panel: int = 15

    def __post_init__(self):
        if any(b >= a for a, b in zip(self.breakpoints[1:], self.breakpoints[:-1])):
            raise DomainError("breakpoints must be strictly increasing")


def _crossing_y(t: float, x: float) -> float | None:
    """Path point where the ingoing line meets x = 2s, if inside the span."""
    y_star = t + 0.5 * x
    if x < y_star < x + 2.0 * t:
        return y_star
    return None


def build_quad_plan(p: Point, variant: SolutionVariant) -> QuadPlan:
    """Panel edges for the ingoing integral from p: split at the shock-line
    crossing and at the crease-time passage, where the integrand loses
    smoothness."""
    t, x = p.t, p.x
    inner: set[float] = set()
    y_star = _crossing_y(t, x)
    if y_star is not None:
        inner.add(y_star)
    if t > 1.0:
        y_crease = x + 2.0 * (t - 1.0)  # path time passes 1 here
        if x < y_crease < x + 2.0 * t:
            inner.add(y_crease)
    edges = (x, *sorted(inner), x + 2.0 * t)
    return QuadPlan(breakpoints=edges)


def phi(p: Point, variant: SolutionVariant, policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """Wave potential of the requested field variant at p; zero on the initial slice."""
    t, x = p.t, p.x
    if t == 0.0:
        return 0.0
    if variant is SolutionVariant.CLASSICAL:
        if classify(p, policy) is RegionTag.WEAK_ONLY:
            raise OutsideDomain(f"classical potential undefined at ({t}, {x})")

        def integrand(y: np.ndarray) -> np.ndarray:
            return 0.5 * psi_classical_array(t + 0.5 * (x - y), y, policy)
    else:

        def integrand(y: np.ndarray) -> np.ndarray:
            return 0.5 * psi_weak_array(t + 0.5 * (x - y), y)

    plan = build_quad_plan(p, variant)
    return adaptive_quad(
        integrand, x, x + 2.0 * t, policy.quad_tol, breakpoints=plan.breakpoints[1:-1]
    )


def _field_value(p: Point, variant: SolutionVariant, policy: NumericPolicy) -> float:
    if variant is SolutionVariant.CLASSICAL:
        return psi_classical(p, policy)
    return psi_weak(p, policy)


def dphidx_closed(p: Point, variant: SolutionVariant, policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """Closed-form spatial derivative of the potential (see module docstring).

    For the weak variant on the shock the field value is two-sided and an
    OnShockError is raised; the classical variant is smooth there.
    """
    t, x = p.t, p.x
    psi_here = _field_value(p, variant, policy)
    value = math.log((4.0 + float(psi0(x + 2.0 * t))) / (4.0 + psi_here))
    if variant is SolutionVariant.WEAK:
        t_cross = 0.5 * t + 0.25 * x
        if _crossing_y(t, x) is not None and t_cross > 1.0:
            trace = shock_trace(t_cross, policy)
            value += math.log((4.0 + trace.left_value) / (4.0 + trace.right_value))
            value -= 0.25 * (trace.left_value - trace.right_value)
    return value


def dphidt_closed(p: Point, variant: SolutionVariant, policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """Time derivative via the exact ingoing identity d_t Phi = psi + 2 d_x Phi."""
    return _field_value(p, variant, policy) + 2.0 * dphidx_closed(p, variant, policy)


def lbar_derivative(
    p: Point,
    variant: SolutionVariant,
    policy: NumericPolicy = DEFAULT_POLICY,
    h: float | None = None,
) -> float:
    """Ingoing derivative d_t(Phi) - 2 d_x(Phi) by symmetric differencing along (1, -2).

    Contract: equals the field value at p (off the shock) up to the
    finite-difference and quadrature tolerance.
    """
    t, x = p.t, p.x
    if h is None:
        h = 1e-5 * max(1.0, abs(t), abs(x))
    if t - h < 0.0:
        raise DomainError(f"stencil leaves t >= 0 at t = {t} with step {h}")
    if variant is SolutionVariant.WEAK and t > 1.0 and abs(x - 2.0 * t) <= policy.geom_tol:
        raise OnShockError(f"({t}, {x}) is on the shock")
    up = phi(Point(t + h, x - 2.0 * h), variant, policy)
    dn = phi(Point(t - h, x + 2.0 * h), variant, policy)
    return (up - dn) / (2.0 * h)


def horizon_jump_probe(x: float, eps: float, policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """Change of the weak d_x(Phi) a height eps above the Cauchy horizon at fixed x < 2.

    The shock-crossing terms individually scale like sqrt(eps) but cancel
    at that order, so the probe decays linearly in eps (continuity and
    differentiability of d_x(Phi) across the horizon).
    """
    if not (x < 2.0):
        raise DomainError(f"horizon probe requires x < 2, got {x}")
    if not (0.0 < eps <= 0.05):
        raise DomainError(f"probe offset must lie in (0, 0.05], got {eps}")
    t0 = 2.0 - 0.5 * x
    above = dphidx_closed(Point(t0 + eps, x), SolutionVariant.WEAK, policy)
    base = dphidx_closed(Point(t0, x), SolutionVariant.WEAK, policy)
    return above - base


def pde_residual_classical(p: Point, h: float, policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """First-order-system residual of the classical pair (psi, Phi) at p.

    Returns the larger of the transport residual |L psi| (differenced
    along the local characteristic direction (1, 2 + psi)) and the
    ingoing-derivative residual |Lbar Phi - psi|.  Requires the stencil to
    stay inside the classical domain; expected size O(h^2) plus
    quadrature noise divided by h.
    """
    t, x = p.t, p.x
    if h <= 0.0:
        raise DomainError(f"step must be positive, got {h}")
    if t - h < 0.0:
        raise DomainError(f"stencil leaves t >= 0 at t = {t} with step {h}")
    tag = classify(p, policy)
    if tag not in (RegionTag.OMEGA_A, RegionTag.WEDGE, RegionTag.ON_SHOCK):
        raise OutsideDomain(f"residual point must be interior, got {tag.value}")
    psi_here = psi_classical(p, policy)
    slope = 2.0 + psi_here
    transport = abs(
        psi_classical(Point(t + h, x + h * slope), policy)
        - psi_classical(Point(t - h, x - h * slope), policy)
    ) / (2.0 * h)
    ingoing = abs(lbar_derivative(p, SolutionVariant.CLASSICAL, policy, h=h) - psi_here)
    return max(transport, ingoing)
