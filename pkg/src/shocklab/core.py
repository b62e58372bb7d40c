"""Domain types, the fixed initial datum, and shared numeric kernels.

The model is the Cauchy problem for a 1+1-dimensional quasilinear wave
equation whose ingoing-derivative field ``psi = d_t(Phi) - 2 d_x(Phi)``
satisfies a decoupled Burgers equation with flux ``(2 + psi)^2 / 2`` and
initial profile ``psi0(x) = -arctan(x)``.  Everything downstream (foot
maps, boundary curves, wave potentials, acoustic geometry) reduces to
closed-form expressions in this datum plus scalar root finding and
segmented Gauss-Legendre quadrature, which live here.

All computation is 64-bit floating point; the artifact is restricted to
times t >= 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "Point",
    "Vec2",
    "SolutionVariant",
    "NumericPolicy",
    "DEFAULT_POLICY",
    "ShockLabError",
    "DomainError",
    "OutsideDomain",
    "OnShockError",
    "NoSignChange",
    "MaxIterExceeded",
    "NearSingular",
    "DegenerateMetric",
    "ZeroVector",
    "ApexNotOnBoundary",
    "QuadFailure",
    "InvariantViolation",
    "PoorFit",
    "psi0",
    "psi0_prime",
    "psi0_second",
    "find_root",
    "solve_monotone_array",
    "gauss_panel",
    "adaptive_quad",
]


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

class ShockLabError(Exception):
    """Base class for all library errors."""


class DomainError(ShockLabError):
    """Argument outside the mathematical domain of an operation."""


class OutsideDomain(DomainError):
    """Point lies outside the classical solution's closed domain."""


class OnShockError(DomainError):
    """Point lies on the shock curve; the weak field is two-valued there."""


class NoSignChange(ShockLabError):
    """Root bracket does not straddle a sign change."""


class MaxIterExceeded(ShockLabError):
    """Iteration cap hit before meeting the requested tolerance."""


class NearSingular(ShockLabError):
    """Derivative evaluation requested within the blowup tolerance band."""


class DegenerateMetric(DomainError):
    """Metric requested at a field value where it fails to be Lorentzian."""


class ZeroVector(DomainError):
    """Causal classification of the zero vector is undefined."""


class ApexNotOnBoundary(DomainError):
    """Causal-past query apex does not lie on the singular boundary."""


class QuadFailure(ShockLabError):
    """Adaptive quadrature could not meet the requested tolerance."""


class InvariantViolation(ShockLabError):
    """A scheme invariant (range bound, total variation) was broken."""


class PoorFit(ShockLabError):
    """Power-law fit quality below the acceptance threshold."""


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Point:
    """Spacetime event (t, x); the artifact restricts to t >= 0."""

    t: float
    x: float

    def __post_init__(self):
        if not (math.isfinite(self.t) and math.isfinite(self.x)):
            raise DomainError(f"non-finite point ({self.t}, {self.x})")
        if self.t < 0.0:
            raise DomainError(f"t = {self.t} < 0; only t >= 0 is modelled")


@dataclass(frozen=True)
class Vec2:
    """Tangent vector with time component dt and space component dx."""

    dt: float
    dx: float

    def __post_init__(self):
        if not (math.isfinite(self.dt) and math.isfinite(self.dx)):
            raise DomainError(f"non-finite vector ({self.dt}, {self.dx})")

    @property
    def is_zero(self) -> bool:
        return self.dt == 0.0 and self.dx == 0.0


class SolutionVariant(enum.Enum):
    """Which Burgers solution backs a field evaluation.

    CLASSICAL is valid on the closure of the maximal classical domain;
    WEAK (the entropy solution) is valid for all t >= 0.
    """

    CLASSICAL = "classical"
    WEAK = "weak"


@dataclass(frozen=True)
class NumericPolicy:
    """Shared tolerances and iteration caps.

    root_tol bounds |f(root)| for scalar root finds, quad_tol is the
    absolute adaptive-quadrature target, geom_tol is the band half-width
    for on-curve membership tests.
    """

    root_tol: float = 1e-12
    quad_tol: float = 1e-10
    geom_tol: float = 1e-10
    max_iter: int = 100

    def __post_init__(self):
        for name in ("root_tol", "quad_tol", "geom_tol"):
            v = getattr(self, name)
            if not (v > 0.0 and math.isfinite(v)):
                raise DomainError(f"{name} must be strictly positive, got {v}")
        if self.max_iter < 1:
            raise DomainError("max_iter must be >= 1")


DEFAULT_POLICY = NumericPolicy()


# ---------------------------------------------------------------------------
# Initial datum
# ---------------------------------------------------------------------------

def psi0(x):
    """Initial profile -arctan(x); strictly decreasing, range (-pi/2, pi/2)."""
    return -np.arctan(x)


def psi0_prime(x):
    """First derivative -1/(1+x^2); always in [-1, 0)."""
    x = np.asarray(x, dtype=float) if not np.isscalar(x) else x
    return -1.0 / (1.0 + x * x)


def psi0_second(x):
    """Second derivative 2x/(1+x^2)^2; same sign as x."""
    s = 1.0 + x * x
    return 2.0 * x / (s * s)


# ---------------------------------------------------------------------------
# Scalar root finding: bisection-safeguarded Newton
# ---------------------------------------------------------------------------

def find_root(
    f: Callable[[float], float],
    bracket: tuple[float, float],
    policy: NumericPolicy = DEFAULT_POLICY,
    dfdx: Callable[[float], float] | None = None,
) -> float:
    """Root of f inside a sign-change bracket.

    Newton steps (analytic derivative when supplied, secant otherwise) are
    taken whenever they stay inside the shrinking bracket; bisection is the
    fallback, so convergence is guaranteed for continuous f.  Returns r with
    |f(r)| <= policy.root_tol, polished until floating point stagnates.

    Raises NoSignChange if f has the same strict sign at both ends and
    MaxIterExceeded if the cap is hit first.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise NoSignChange(f"f({lo}) = {flo} and f({hi}) = {fhi} share sign")

    x, fx = (lo, flo) if abs(flo) < abs(fhi) else (hi, fhi)
    x_prev, f_prev = (hi, fhi) if x == lo else (lo, flo)
    best_x, best_f = x, abs(fx)

    for _ in range(policy.max_iter):
        # Newton (or secant) candidate
        if dfdx is not None:
            d = dfdx(x)
        else:
            d = (fx - f_prev) / (x - x_prev) if x != x_prev else 0.0
        if d != 0.0 and math.isfinite(d):
            cand = x - fx / d
        else:
            cand = math.nan
        if not (lo < cand < hi) or not math.isfinite(cand):
            cand = 0.5 * (lo + hi)

        x_prev, f_prev = x, fx
        x = cand
        fx = f(x)
        if abs(fx) < best_f:
            best_x, best_f = x, abs(fx)
        if fx == 0.0:
            return x
        if (fx > 0.0) == (fhi > 0.0):
            hi, fhi = x, fx
        else:
            lo, flo = x, fx

        # stop once within tolerance and no further progress is possible
        if best_f <= policy.root_tol and (hi - lo) <= 4.0 * np.finfo(float).eps * (abs(lo) + abs(hi) + 1.0):
            return best_x

    if best_f <= policy.root_tol:
        return best_x
    raise MaxIterExceeded(
        f"no root to |f| <= {policy.root_tol} in {policy.max_iter} iterations (best |f| = {best_f})"
    )


def solve_monotone_array(
    p_func: Callable[[np.ndarray], np.ndarray],
    dp_func: Callable[[np.ndarray], np.ndarray],
    lo: np.ndarray,
    hi: np.ndarray,
    tol: float,
    max_iter: int = 160,
) -> np.ndarray:
    """Vectorized safeguarded Newton for a batch of bracketed scalar roots.

    Each bracket [lo_i, hi_i] must contain exactly one sign change of the
    residual p_func (negative at lo, positive at hi).  Used by the foot maps
    on bulk samples, where per-point Python root finds would dominate the
    runtime.
    """
    lo = np.array(lo, dtype=float, copy=True)
    hi = np.array(hi, dtype=float, copy=True)
    u = 0.5 * (lo + hi)
    for _ in range(max_iter):
        r = p_func(u)
        if np.all(np.abs(r) <= tol):
            # one extra Newton polish pass, clipped to the bracket
            d = dp_func(u)
            step = np.where(d != 0.0, r / np.where(d != 0.0, d, 1.0), 0.0)
            un = u - step
            ok = (un >= lo) & (un <= hi) & np.isfinite(un)
            return np.where(ok, un, u)
        neg = r < 0.0
        lo = np.where(neg, u, lo)
        hi = np.where(neg, hi, u)
        d = dp_func(u)
        with np.errstate(divide="ignore", invalid="ignore"):
            un = u - r / d
        bad = ~np.isfinite(un) | (un <= lo) | (un >= hi)
        u = np.where(bad, 0.5 * (lo + hi), un)
    raise MaxIterExceeded(f"batched root solve did not reach |r| <= {tol}")


# ---------------------------------------------------------------------------
# Quadrature kernels: 15-point Gauss-Legendre panels with adaptive bisection
# ---------------------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(15)


def gauss_panel(a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the 15-point Gauss-Legendre rule on [a, b]."""
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return mid + half * _GL_NODES, half * _GL_WEIGHTS


def _panel_integral(f_vec, a: float, b: float) -> float:
    nodes, weights = gauss_panel(a, b)
    return float(np.dot(weights, f_vec(nodes)))


def adaptive_quad(
    f_vec: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: float,
    breakpoints: Sequence[float] = (),
    max_depth: int = 48,
) -> float:
    """Integral of f over [a, b] to absolute tolerance tol.

    f_vec must accept a node array and return values elementwise.  The
    interval is pre-split at the supplied breakpoints (known kinks or
    jumps); each segment is then bisected recursively, accepting the
    two-half estimate once it agrees with the parent panel to the
    segment's share of the tolerance.  Raises QuadFailure when bisection
    depth is exhausted before convergence.
    """
    if b <= a:
        if b == a:
            return 0.0
        return -adaptive_quad(f_vec, b, a, tol, breakpoints, max_depth)

    cuts = [a] + sorted(c for c in set(breakpoints) if a < c < b) + [b]
    total_len = b - a
    total = 0.0
    for seg_a, seg_b in zip(cuts[:-1], cuts[1:]):
        seg_tol = max(tol * (seg_b - seg_a) / total_len, 1e-3 * tol)
        total += _adaptive_segment(f_vec, seg_a, seg_b, seg_tol, max_depth)
    return total


def _adaptive_segment(f_vec, a, b, tol, max_depth) -> float:
    whole = _panel_integral(f_vec, a, b)
    stack = [(a, b, whole, tol, 0)]
    acc = 0.0
    while stack:
        a0, b0, coarse, tol0, depth = stack.pop()
        m = 0.5 * (a0 + b0)
        left = _panel_integral(f_vec, a0, m)
        right = _panel_integral(f_vec, m, b0)
        fine = left + right
        if abs(fine - coarse) <= max(tol0, 1e-16 * (1.0 + abs(fine))):
            acc += fine
        elif depth >= max_depth:
            raise QuadFailure(
                f"segment [{a0}, {b0}] not converged at depth {max_depth} "
                f"(estimate gap {abs(fine - coarse):.3e}, tol {tol0:.3e})"
            )
        else:
            half_tol = 0.5 * tol0
            stack.append((a0, m, left, half_tol, depth + 1))
            stack.append((m, b0, right, half_tol, depth + 1))
    return acc
