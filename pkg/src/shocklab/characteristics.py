"""Outgoing characteristics, foot maps, boundary curves, and the region map.

Straight characteristics emanate from the initial slice: the curve with
foot x0 is (t, x0 + t*(2 + psi0(x0))).  Characteristics from x0 > 0 focus
and blow up at t = 1 + x0^2 along the singular boundary B, those from
x0 <= 0 run into the null line C: x = 4 - 2t (the Cauchy horizon), and in
the entropy solution the ones from +x0 and -x0 annihilate pairwise on the
shock K: x = 2t.  All three curves meet at the crease (1, 2).

Inverting a characteristic through a point (t, x) means solving

    u - t*arctan(u) = x - 2t

for the foot u.  The residual is monotone on each half-axis and, past the
focusing time, on each branch |u| >= sqrt(t-1), so every foot map below is
a bracketed scalar root find.  The classical and weak foot maps share one
branch solver so that they agree bit-for-bit wherever both are defined.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .core import (
    DEFAULT_POLICY,
    DomainError,
    NumericPolicy,
    OnShockError,
    OutsideDomain,
    Point,
    ShockLabError,
    find_root,
    psi0,
    solve_monotone_array,
)

__all__ = [
    "RegionTag",
    "BoundaryCurve",
    "outgoing_char",
    "blowup_time",
    "shock_arrival_time",
    "foot_classical",
    "foot_weak",
    "foot_weak_array",
    "foot_classical_array",
    "shock_feet",
    "boundary_x",
    "boundary_x_deriv",
    "classify",
]

_HALF_PI = math.pi / 2.0


class RegionTag(enum.Enum):
    """Where an event sits relative to the solution domains and boundaries."""

    OMEGA_A = "OmegaA"                    # both solutions defined and equal
    WEDGE = "Wedge"                       # both defined, weak > classical
    WEAK_ONLY = "WeakOnly"                # beyond the classical domain
    ON_SHOCK = "OnShock"
    ON_SINGULAR_BOUNDARY = "OnSingularBoundary"
    ON_CAUCHY_HORIZON = "OnCauchyHorizon"
    ON_CREASE = "OnCrease"
    INITIAL_SLICE = "InitialSlice"


class BoundaryCurve(enum.Enum):
    SINGULAR_BOUNDARY = "B"
    CAUCHY_HORIZON = "C"
    SHOCK = "K"


# ---------------------------------------------------------------------------
# Forward map and termination times
# ---------------------------------------------------------------------------

def outgoing_char(x0: float, t: float) -> Point:
    """Point reached at time t by the characteristic with foot x0."""
    return Point(t, x0 + t * (2.0 + float(psi0(x0))))


def blowup_time(x0: float) -> float:
    """Focusing time 1 + x0^2 of the characteristic from x0 > 0.

    Only feet x0 > 0 reach the singular boundary; characteristics from
    x0 <= 0 leave the classical domain through the Cauchy horizon first.
    """
    if x0 <= 0.0:
        raise DomainError(f"blowup time defined for x0 > 0, got {x0}")
    return 1.0 + x0 * x0


def shock_arrival_time(x0: float) -> float:
    """Time x0/arctan(x0) at which the characteristic from x0 != 0 meets the shock.

    Even in x0 and always > 1; the x0 = 0 characteristic instead terminates
    at the crease at t = 1.
    """
    if x0 == 0.0:
        raise DomainError("the x0 = 0 characteristic terminates at the crease")
    return x0 / math.atan(x0)


# ---------------------------------------------------------------------------
# Boundary curves
# ---------------------------------------------------------------------------

def boundary_x(kind: BoundaryCurve, t: float) -> float:
    """Space coordinate of the boundary curve `kind` at time t >= 1."""
    if t < 1.0:
        raise DomainError(f"boundary curves are defined for t >= 1, got t = {t}")
    if kind is BoundaryCurve.CAUCHY_HORIZON:
        return 4.0 - 2.0 * t
    if kind is BoundaryCurve.SHOCK:
        return 2.0 * t
    z = math.sqrt(t - 1.0)
    return (2.0 - math.atan(z)) * t + z


def boundary_x_deriv(kind: BoundaryCurve, t: float) -> float:
    """Analytic slope dx/dt of the boundary curve at time t > 1."""
    if t < 1.0:
        raise DomainError(f"boundary curves are defined for t >= 1, got t = {t}")
    if kind is BoundaryCurve.CAUCHY_HORIZON:
        return -2.0
    if kind is BoundaryCurve.SHOCK:
        return 2.0
    return 2.0 - math.atan(math.sqrt(t - 1.0))


# ---------------------------------------------------------------------------
# Region classification
# ---------------------------------------------------------------------------

def classify(p: Point, policy: NumericPolicy = DEFAULT_POLICY) -> RegionTag:
    """Unique region tag of p; on-curve tags win within geom_tol."""
    t, x = p.t, p.x
    tol = policy.geom_tol
    if t <= tol:
        return RegionTag.INITIAL_SLICE
    if abs(t - 1.0) <= tol and abs(x - 2.0) <= tol:
        return RegionTag.ON_CREASE
    if t > 1.0:
        xb = boundary_x(BoundaryCurve.SINGULAR_BOUNDARY, t)
        if abs(x - 2.0 * t) <= tol:
            return RegionTag.ON_SHOCK
        if abs(x - xb) <= tol:
            return RegionTag.ON_SINGULAR_BOUNDARY
        if abs(x - (4.0 - 2.0 * t)) <= tol:
            return RegionTag.ON_CAUCHY_HORIZON
    if t < max(0.5 * x, 2.0 - 0.5 * x):
        return RegionTag.OMEGA_A
    if t > 1.0:
        # for t > 1 the curves are ordered: 4 - 2t < x_B(t) < 2t
        if xb < x < 2.0 * t:
            return RegionTag.WEDGE
        if x < xb:
            return RegionTag.WEAK_ONLY
    raise ShockLabError(f"unclassifiable point ({t}, {x})")  # pragma: no cover


# ---------------------------------------------------------------------------
# Foot maps (characteristic inversion)
# ---------------------------------------------------------------------------

def _residual(u: float, t: float, d: float) -> float:
    return u - t * math.atan(u) - d


def _residual_prime(u: float, t: float) -> float:
    return 1.0 - t / (1.0 + u * u)


def _solve_branch(t: float, d: float, lo: float, hi: float, policy: NumericPolicy) -> float:
    return find_root(
        lambda u: _residual(u, t, d),
        (lo, hi),
        policy,
        dfdx=lambda u: _residual_prime(u, t),
    )


def _foot_pre_crease(t: float, d: float, policy: NumericPolicy) -> float:
    # residual is monotone for t <= 1; full bracket
    if d == 0.0:
        return 0.0
    return _solve_branch(t, d, d - t * _HALF_PI, d + t * _HALF_PI, policy)


def _foot_right(t: float, d: float, policy: NumericPolicy) -> float:
    """Foot on the branch u >= sqrt(t-1) (t > 1); requires x right of B."""
    z = math.sqrt(t - 1.0)
    rz = _residual(z, t, d)
    if rz >= 0.0:
        # x_B(t) - x >= 0: on B within tolerance, or outside the domain
        if rz <= 2.0 * policy.geom_tol + 1e-14 * abs(d):
            return z
        raise OutsideDomain(f"point left of the singular boundary by {rz:.3e}")
    return _solve_branch(t, d, z, d + t * _HALF_PI, policy)


def _foot_left(t: float, d: float, policy: NumericPolicy) -> float:
    """Foot on the branch u <= -sqrt(t-1) (t > 1)."""
    z = math.sqrt(t - 1.0)
    rz = _residual(-z, t, d)
    if rz <= 0.0:
        if rz >= -(2.0 * policy.geom_tol + 1e-14 * abs(d)):
            return -z
        raise OutsideDomain(f"point beyond the left characteristic family by {-rz:.3e}")
    return _solve_branch(t, d, d - t * _HALF_PI, -z, policy)


def foot_weak(p: Point, policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """Foot of the entropy-solution characteristic through p.

    The foot is positive iff p lies right of the shock line x = 2t and
    negative iff left of it; on the shock itself (t > 1) the value is
    two-sided and an OnShockError is raised.
    """
    t, x = p.t, p.x
    d = x - 2.0 * t
    if t <= 1.0:
        return _foot_pre_crease(t, d, policy)
    if abs(d) <= policy.geom_tol:
        raise OnShockError(f"({t}, {x}) is on the shock; use shock_trace for the limits")
    if d > 0.0:
        return _foot_right(t, d, policy)
    return _foot_left(t, d, policy)


def foot_classical(p: Point, policy: NumericPolicy = DEFAULT_POLICY) -> float:
    """Foot of the unique classical characteristic through p in cl(Omega_C).

    Raises OutsideDomain when p lies strictly beyond the singular boundary
    and Cauchy horizon (the weak-only region).
    """
    t, x = p.t, p.x
    tag = classify(p, policy)
    if tag is RegionTag.WEAK_ONLY:
        raise OutsideDomain(f"({t}, {x}) is outside the classical domain")
    d = x - 2.0 * t
    if t <= 1.0:
        return _foot_pre_crease(t, d, policy)
    if tag is RegionTag.ON_CAUCHY_HORIZON or (tag is RegionTag.OMEGA_A and x < 2.0 * t):
        return _foot_left(t, d, policy)
    # wedge, on-shock, on-B, or below the shock: the right family
    return _foot_right(t, d, policy)


def shock_feet(t: float, policy: NumericPolicy = DEFAULT_POLICY) -> tuple[float, float]:
    """Feet (-x0, +x0) of the two characteristics meeting the shock at time t > 1.

    x0 > 0 solves x0 = t*arctan(x0); the residual is negative at
    sqrt(t-1) and positive at t*pi/2, bracketing the nontrivial root.
    """
    if t <= 1.0:
        raise DomainError(f"the shock exists for t > 1, got t = {t}")
    z = math.sqrt(t - 1.0)
    x0 = _solve_branch(t, 0.0, z, t * _HALF_PI, policy)
    return -x0, x0


# ---------------------------------------------------------------------------
# Vectorized foot maps for bulk sampling
# ---------------------------------------------------------------------------

def foot_weak_array(t, x, tol: float = 1e-14) -> np.ndarray:
    """Entropy-solution feet for arrays of points; shock-side chosen by sign(x - 2t)."""
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    t, x = np.broadcast_arrays(t, x)
    d = x - 2.0 * t
    z = np.sqrt(np.maximum(t - 1.0, 0.0))
    post = t > 1.0
    lo = np.where(post & (d >= 0.0), z, d - t * _HALF_PI)
    hi = np.where(post & (d < 0.0), -z, d + t * _HALF_PI)

    def p_func(u):
        return u - t * np.arctan(u) - d

    def dp_func(u):
        return 1.0 - t / (1.0 + u * u)

    return solve_monotone_array(p_func, dp_func, lo, hi, tol)


def foot_classical_array(t, x, policy: NumericPolicy = DEFAULT_POLICY, tol: float = 1e-14) -> np.ndarray:
    """Classical feet for arrays of points in cl(Omega_C).

    Branch selection per point: left family at or below the Cauchy horizon,
    right family at or right of the singular boundary.  Points strictly
    between the two (the weak-only region) raise OutsideDomain.
    """
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    t, x = np.broadcast_arrays(t, x)
    d = x - 2.0 * t
    post = t > 1.0
    z = np.sqrt(np.maximum(t - 1.0, 0.0))
    zc = np.where(post, z, 0.0)
    xb = np.where(post, (2.0 - np.arctan(zc)) * t + zc, 2.0 * t)
    xh = 4.0 - 2.0 * t
    band = 2.0 * policy.geom_tol
    left = post & (x <= xh + band) & (x < xb)
    outside = post & ~left & (x < xb - band)
    if np.any(outside):
        bad = np.argwhere(outside)[0]
        raise OutsideDomain(f"point ({t[tuple(bad)]}, {x[tuple(bad)]}) outside the classical domain")
    right = post & ~left
    # points within the tolerance band left of B (or right of the left
    # family's envelope) are snapped onto the branch endpoint
    atan_z = np.arctan(z)
    snap_r = right & (z - t * atan_z - d >= 0.0)
    snap_l = left & (-z + t * atan_z - d <= 0.0)
    d = np.where(snap_r, z - t * atan_z, d)
    d = np.where(snap_l, -z + t * atan_z, d)
    lo = np.where(right, z, d - t * _HALF_PI)
    hi = np.where(left, -z, d + t * _HALF_PI)

    def p_func(u):
        return u - t * np.arctan(u) - d

    def dp_func(u):
        return 1.0 - t / (1.0 + u * u)

    return solve_monotone_array(p_func, dp_func, lo, hi, tol)
