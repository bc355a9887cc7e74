"""Equilibrium analysis and delay-plane stability boundaries.

Near an equilibrium x* of D^alpha x(t) = g(x(t - tau1), x(t - tau2)) the
dynamics are governed by the linearization with coefficients
a = d g/d x1 and b = d g/d x2 at (x*, x*), whose characteristic function is

    lambda**alpha - a*exp(-lambda*tau1) - b*exp(-lambda*tau2).

With zero delays the equilibrium is asymptotically stable iff a + b < 0.
As the delays grow, stability can only be lost through a purely imaginary
characteristic root lambda = i*v with v > 0.  Splitting that condition into
real and imaginary parts and eliminating the trigonometric unknowns yields,
for each crossing frequency v, arccos expressions for the two delays; these
trace parametric curves in the (tau1, tau2) plane whose lowest branch bounds
the region, attached to the origin, where stability persists.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DegenerateCoefficientsError
from .numerics import FractionalOrder, order_value
from .solver import DelayPair, SystemRhs, _as_delays

__all__ = [
    "StabilityVerdict",
    "LinearCoefficients",
    "CriticalCurvePoint",
    "find_equilibria",
    "linearize",
    "stable_at_zero_delay",
    "characteristic_residual",
    "default_v_window",
    "parametric_delays",
    "critical_curve",
    "critical_tau2_for_tau1",
    "delay_plane_boundary",
    "classify",
]

# Arccos arguments may stick out of [-1, 1] by this much before the sample
# is discarded; the excess is pure rounding at the window edges.
_CLAMP_SLACK = 1e-12

# A parametric point is accepted only if both defining equations hold this
# tightly when evaluated from the final float delays.
_RESIDUAL_TOL = 1e-9

_ZERO_SUM_TOL = 1e-12
_EQUILIBRIUM_TOL = 1e-12
_FD_BASE_STEP = 1e-6

_DEFAULT_SAMPLES = 2000
_DEFAULT_MAX_BRANCH = 8
_TWO_PI = 2.0 * math.pi


class StabilityVerdict(str, enum.Enum):
    """Outcome labels for equilibrium classification."""

    STABLE_AT_ZERO_DELAYS = "StableAtZeroDelays"
    UNSTABLE_AT_ZERO_DELAYS = "UnstableAtZeroDelays"
    STABLE = "Stable"
    UNSTABLE = "Unstable"
    ON_BOUNDARY = "OnBoundary"


@dataclass(frozen=True)
class LinearCoefficients:
    """Partial derivatives (a, b) of the right-hand side at an equilibrium."""

    a: float
    b: float

    def __post_init__(self) -> None:
        for name, value in (("a", self.a), ("b", self.b)):
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ValueError(f"{name} must be a real number")
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")


def _as_coef(coef: LinearCoefficients | tuple[float, float]) -> LinearCoefficients:
    if isinstance(coef, LinearCoefficients):
        return coef
    a, b = coef
    return LinearCoefficients(float(a), float(b))


def _require_nondegenerate(coef: LinearCoefficients | tuple[float, float]) -> LinearCoefficients:
    c = _as_coef(coef)
    if c.a == 0.0 or c.b == 0.0:
        raise DegenerateCoefficientsError(
            f"crossing curves require both coefficients nonzero, got a={c.a}, b={c.b}; "
            "a vanishing coefficient reduces the problem to a single delay"
        )
    return c


@dataclass(frozen=True)
class CriticalCurvePoint:
    """One point of the imaginary-axis crossing locus in the delay plane.

    ``v`` is the crossing frequency, ``(tau1, tau2)`` the delays at which
    lambda = i*v solves the characteristic equation, ``(sign1, m1)`` and
    ``(sign2, m2)`` the arccos branch and winding number that produced each
    delay, and ``residual`` the larger absolute defect of the two defining
    equations evaluated at the stored floats.
    """

    v: float
    tau1: float
    tau2: float
    sign1: int
    m1: int
    sign2: int
    m2: int
    residual: float


def find_equilibria(
    rhs: SystemRhs,
    bracket: tuple[float, float],
    resolution: int = 2001,
) -> list[float]:
    """Locate roots of g(x, x) inside a bracket by scan plus bisection.

    The bracket is sampled at ``resolution`` uniformly spaced points; every
    sign change (and every exact zero sample) is refined by bisection until
    ``|g(x, x)| <= 1e-12``.  Roots closer together than the scan spacing can
    be missed; raise the resolution for wildly oscillatory right-hand sides.
    Returns the roots sorted increasingly, duplicates merged.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError(f"bracket must be a finite increasing pair, got {bracket!r}")
    resolution = int(resolution)
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    fun = lambda x: float(rhs.g(float(x), float(x)))
    xs = np.linspace(lo, hi, resolution)
    vals = np.array([fun(x) for x in xs])
    roots: list[float] = []
    for i in range(resolution - 1):
        if vals[i] == 0.0:
            roots.append(float(xs[i]))
        elif vals[i] * vals[i + 1] < 0.0:
            roots.append(_bisect_to_zero(fun, float(xs[i]), float(xs[i + 1]), float(vals[i])))
    if vals[-1] == 0.0:
        roots.append(float(xs[-1]))
    roots.sort()
    merged: list[float] = []
    for r in roots:
        if merged and abs(r - merged[-1]) <= 1e-8 * max(1.0, abs(r)):
            continue
        merged.append(r)
    return merged


def _bisect_to_zero(
    fun: Callable[[float], float],
    lo: float,
    hi: float,
    f_lo: float,
    target: float = _EQUILIBRIUM_TOL,
    max_iter: int = 200,
) -> float:
    best_x, best_f = lo, abs(f_lo)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = fun(mid)
        if abs(f_mid) < best_f:
            best_x, best_f = mid, abs(f_mid)
        if abs(f_mid) <= target:
            return mid
        if (f_lo < 0.0) != (f_mid < 0.0):
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return best_x


def linearize(rhs: SystemRhs, x_star: float) -> LinearCoefficients:
    """Coefficients (a, b) of the linearization at an equilibrium.

    Analytic partials attached to the right-hand side are used when present.
    A missing slot falls back to a central difference with one Richardson
    extrapolation step, which is accurate to roughly 1e-9 relative for
    smooth right-hand sides at moderately sized equilibria.
    """
    x = float(x_star)
    if not math.isfinite(x):
        raise ValueError(f"equilibrium must be finite, got {x_star!r}")
    if rhs.dg_dx1 is not None:
        a = float(rhs.dg_dx1(x, x))
    else:
        a = _numeric_partial(rhs.g, x, slot=0)
    if rhs.dg_dx2 is not None:
        b = float(rhs.dg_dx2(x, x))
    else:
        b = _numeric_partial(rhs.g, x, slot=1)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"linearization is not finite at x = {x}: a={a}, b={b}")
    return LinearCoefficients(a, b)


def _numeric_partial(g: Callable[[float, float], float], x: float, slot: int) -> float:
    d = max(_FD_BASE_STEP, _FD_BASE_STEP * abs(x))

    def central(step: float) -> float:
        if slot == 0:
            return (float(g(x + step, x)) - float(g(x - step, x))) / (2.0 * step)
        return (float(g(x, x + step)) - float(g(x, x - step))) / (2.0 * step)

    coarse = central(d)
    fine = central(0.5 * d)
    # One Richardson step cancels the O(d^2) error term of the central
    # difference, leaving O(d^4) truncation against O(eps/d) rounding.
    return (4.0 * fine - coarse) / 3.0


def stable_at_zero_delay(
    coef: LinearCoefficients | tuple[float, float],
) -> StabilityVerdict:
    """Classify an equilibrium of the delay-free problem by the sign of a+b.

    Within 1e-12 of a + b = 0 the verdict is OnBoundary; the boundary band
    wins over either sign so that roundoff in computed coefficients cannot
    flip a marginal case to a definite one.
    """
    c = _as_coef(coef)
    s = c.a + c.b
    if abs(s) <= _ZERO_SUM_TOL:
        return StabilityVerdict.ON_BOUNDARY
    if s < 0.0:
        return StabilityVerdict.STABLE_AT_ZERO_DELAYS
    return StabilityVerdict.UNSTABLE_AT_ZERO_DELAYS


def characteristic_residual(
    alpha: FractionalOrder | float,
    coef: LinearCoefficients | tuple[float, float],
    delays: DelayPair | tuple[float, float],
    lam: complex,
) -> complex:
    """Defect of the characteristic equation at a candidate root.

    Evaluates ``lam**alpha - a*exp(-lam*tau1) - b*exp(-lam*tau2)`` with the
    principal branch of the complex power.  A genuine characteristic root
    makes this zero; the magnitude of the return value measures how far a
    candidate is from being one.
    """
    al = order_value(alpha)
    c = _as_coef(coef)
    d = _as_delays(delays)
    lam = complex(lam)
    return (
        lam ** al
        - c.a * cmath.exp(-lam * d.tau1)
        - c.b * cmath.exp(-lam * d.tau2)
    )


def default_v_window(
    alpha: FractionalOrder | float,
    coef: LinearCoefficients | tuple[float, float],
) -> tuple[float, float]:
    """Default crossing-frequency search window.

    An imaginary root i*v forces ``v**alpha <= |a| + |b|``, so crossings
    live below ``(|a|+|b|)**(1/alpha)``; the window extends to four times
    that with a tiny positive lower end (v = 0 itself is never a crossing
    of interest and the parametrization is singular there).
    """
    al = order_value(alpha)
    c = _as_coef(coef)
    hi = 4.0 * (abs(c.a) + abs(c.b)) ** (1.0 / al)
    return (1e-6, hi)


def _arccos_arguments(al: float, c: LinearCoefficients, v):
    """Arccos arguments (A1, A2) and v**alpha; v may be scalar or array.

    Both are written with the same expression tree with the roles of a and b
    exchanged, so swapping the coefficients swaps the two results bitwise.
    """
    va = v ** al
    v2a = v ** (2.0 * al)
    a1 = (v2a + (c.a * c.a - c.b * c.b)) / ((2.0 * c.a) * va)
    a2 = (v2a + (c.b * c.b - c.a * c.a)) / ((2.0 * c.b) * va)
    return a1, a2, va


def parametric_delays(
    alpha: FractionalOrder | float,
    coef: LinearCoefficients | tuple[float, float],
    v: float,
    sign1: int = 1,
    m1: int = 0,
    sign2: int = 1,
    m2: int = 0,
) -> tuple[float, float] | None:
    """Raw parametric delay pair at one frequency on one branch.

    Returns ``(tau1, tau2)`` from the arccos inversion with branch signs in
    {-1, +1} and winding numbers m1, m2 >= 0, or None where either arccos
    argument falls outside [-1, 1] beyond rounding slack.  No filtering is
    applied: the returned delays may be negative and the pair need not solve
    the characteristic equation unless the branch signs are compatible with
    the coefficient signs.  Use :func:`critical_curve` for the validated
    locus.
    """
    al = order_value(alpha)
    c = _require_nondegenerate(coef)
    v = float(v)
    if not (math.isfinite(v) and v > 0.0):
        raise ValueError(f"frequency must be positive and finite, got {v!r}")
    if sign1 not in (-1, 1) or sign2 not in (-1, 1):
        raise ValueError("branch signs must be -1 or +1")
    if m1 < 0 or m2 < 0:
        raise ValueError("winding numbers must be nonnegative")
    a1, a2, _ = _arccos_arguments(al, c, v)
    if abs(a1) > 1.0 + _CLAMP_SLACK or abs(a2) > 1.0 + _CLAMP_SLACK:
        return None
    th1 = math.acos(min(1.0, max(-1.0, a1)))
    th2 = math.acos(min(1.0, max(-1.0, a2)))
    half = 0.5 * math.pi * al
    tau1 = (sign1 * th1 - half + _TWO_PI * m1) / v
    tau2 = (sign2 * th2 - half + _TWO_PI * m2) / v
    return (tau1, tau2)


def _resolve_window(
    al: float,
    c: LinearCoefficients,
    v_range: tuple[float, float] | None,
) -> tuple[float, float]:
    lo, hi = v_range if v_range is not None else default_v_window(al, c)
    lo, hi = float(lo), float(hi)
    if not (math.isfinite(lo) and math.isfinite(hi) and 0.0 < lo < hi):
        raise ValueError(f"frequency window must satisfy 0 < lo < hi, got {(lo, hi)!r}")
    return (lo, hi)


def critical_curve(
    alpha: FractionalOrder | float,
    coef: LinearCoefficients | tuple[float, float],
    v_range: tuple[float, float] | None = None,
    samples: int = _DEFAULT_SAMPLES,
    max_branch: int = _DEFAULT_MAX_BRANCH,
    residual_tol: float = _RESIDUAL_TOL,
) -> list[CriticalCurvePoint]:
    """Sampled imaginary-axis crossing locus in the (tau1, tau2) plane.

    The frequency window (default :func:`default_v_window`) is sampled
    uniformly at ``samples`` points.  At each frequency where both arccos
    arguments lie in [-1, 1] (clamped within 1e-12), every branch
    combination with winding numbers up to ``max_branch`` is formed, and a
    point is emitted when both delays are nonnegative and both defining
    equations hold with residual at most ``residual_tol``.  The residual
    filter is what discards the branch sign pairs that are incompatible
    with the coefficient signs.

    Points are sorted by (v, m1, sign1, m2, sign2).  Swapping a and b maps
    the result to the mirrored locus with the delay columns exchanged.
    """
    al = order_value(alpha)
    c = _require_nondegenerate(coef)
    lo, hi = _resolve_window(al, c, v_range)
    samples = int(samples)
    max_branch = int(max_branch)
    if samples < 2:
        raise ValueError("samples must be at least 2")
    if max_branch < 0:
        raise ValueError("max_branch must be nonnegative")
    residual_tol = float(residual_tol)

    vs = np.linspace(lo, hi, samples)
    a1, a2, va = _arccos_arguments(al, c, vs)
    valid = (np.abs(a1) <= 1.0 + _CLAMP_SLACK) & (np.abs(a2) <= 1.0 + _CLAMP_SLACK)
    if not valid.any():
        return []
    vv = vs[valid]
    th1 = np.arccos(np.clip(a1[valid], -1.0, 1.0))
    th2 = np.arccos(np.clip(a2[valid], -1.0, 1.0))
    va = va[valid]
    half = 0.5 * math.pi * al
    cos_term = va * math.cos(half)
    sin_term = va * math.sin(half)

    # Trig factors depend only on one (sign, m) pair, so precompute the
    # tau2 side once and reuse it against every tau1 branch.
    second_branches = []
    for sign2 in (1, -1):
        for m2 in range(max_branch + 1):
            tau2 = (sign2 * th2 - half + _TWO_PI * m2) / vv
            ok2 = tau2 >= 0.0
            if ok2.any():
                second_branches.append(
                    (sign2, m2, tau2, ok2, c.b * np.cos(vv * tau2), c.b * np.sin(vv * tau2))
                )

    points: list[CriticalCurvePoint] = []
    for sign1 in (1, -1):
        for m1 in range(max_branch + 1):
            tau1 = (sign1 * th1 - half + _TWO_PI * m1) / vv
            ok1 = tau1 >= 0.0
            if not ok1.any():
                continue
            a_cos1 = c.a * np.cos(vv * tau1)
            a_sin1 = c.a * np.sin(vv * tau1)
            for sign2, m2, tau2, ok2, b_cos2, b_sin2 in second_branches:
                r1 = cos_term - (a_cos1 + b_cos2)
                r2 = sin_term + (a_sin1 + b_sin2)
                residual = np.maximum(np.abs(r1), np.abs(r2))
                keep = ok1 & ok2 & (residual <= residual_tol)
                for i in np.nonzero(keep)[0]:
                    points.append(
                        CriticalCurvePoint(
                            v=float(vv[i]),
                            tau1=float(tau1[i]),
                            tau2=float(tau2[i]),
                            sign1=sign1,
                            m1=m1,
                            sign2=sign2,
                            m2=m2,
                            residual=float(residual[i]),
                        )
                    )
    points.sort(key=lambda p: (p.v, p.m1, p.sign1, p.m2, p.sign2))
    return points


def _scalar_residual(
    al: float, c: LinearCoefficients, v: float, tau1: float, tau2: float, va: float
) -> float:
    half = 0.5 * math.pi * al
    r1 = va * math.cos(half) - (c.a * math.cos(v * tau1) + c.b * math.cos(v * tau2))
    r2 = va * math.sin(half) + (c.a * math.sin(v * tau1) + c.b * math.sin(v * tau2))
    return max(abs(r1), abs(r2))


def _contiguous_runs(mask: np.ndarray) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    i = 0
    n = len(mask)
    while i < n:
        if mask[i]:
            j = i
            while j + 1 < n and mask[j + 1]:
                j += 1
            runs.append((i, j))
            i = j + 1
        else:
            i += 1
    return runs


def _refine_validity_edge(
    is_valid: Callable[[float], bool], v_bad: float, v_good: float, iters: int = 60
) -> float:
    # Shrink toward the window boundary, returning a point on the valid side.
    for _ in range(iters):
        mid = 0.5 * (v_bad + v_good)
        if is_valid(mid):
            v_good = mid
        else:
            v_bad = mid
    return v_good


def critical_tau2_for_tau1(
    alpha: FractionalOrder | float,
    coef: LinearCoefficients | tuple[float, float],
    tau1: float,
    v_range: tuple[float, float] | None = None,
    samples: int = _DEFAULT_SAMPLES,
    max_branch: int = _DEFAULT_MAX_BRANCH,
    residual_tol: float = _RESIDUAL_TOL,
) -> float | None:
    """Smallest tau2 at which the vertical line tau1 = const meets the locus.

    For coefficients that are stable at zero delays, this is the first delay
    pair (tau1, tau2) at which a characteristic root reaches the imaginary
    axis when tau2 grows from 0 with tau1 held fixed, i.e. the stability
    boundary along that line; None means the line meets no crossing inside
    the frequency window.

    Each branch function tau1(v) is sampled over the window, every bracketed
    crossing of the requested value is sharpened by bisection, and all valid
    tau2 companions at the crossing frequencies are collected.  The valid
    frequency window ends where the arccos arguments leave [-1, 1]; because
    the branch functions fold there with square-root speed, the sweep also
    refines each window edge and checks the sliver between the last interior
    sample and the edge, which a plain scanline would miss.

    Raises
    ------
    ValueError
        If the coefficients are not stable at zero delays (the first
        crossing of a line from an already unstable origin is meaningless).
    """
    al = order_value(alpha)
    c = _require_nondegenerate(coef)
    q = float(tau1)
    if not (math.isfinite(q) and q >= 0.0):
        raise ValueError(f"tau1 must be nonnegative and finite, got {tau1!r}")
    if stable_at_zero_delay(c) is not StabilityVerdict.STABLE_AT_ZERO_DELAYS:
        raise ValueError(
            "the crossing search requires coefficients stable at zero delays "
            f"(a + b < 0), got a={c.a}, b={c.b}"
        )
    lo, hi = _resolve_window(al, c, v_range)
    samples = int(samples)
    max_branch = int(max_branch)
    if samples < 2:
        raise ValueError("samples must be at least 2")
    if max_branch < 0:
        raise ValueError("max_branch must be nonnegative")
    residual_tol = float(residual_tol)
    half = 0.5 * math.pi * al

    def is_valid(v: float) -> bool:
        a1, a2, _ = _arccos_arguments(al, c, v)
        return abs(a1) <= 1.0 + _CLAMP_SLACK and abs(a2) <= 1.0 + _CLAMP_SLACK

    def tau1_branch(v: float, sign1: int, m1: int) -> float:
        a1, a2, _ = _arccos_arguments(al, c, v)
        if abs(a1) > 1.0 + _CLAMP_SLACK or abs(a2) > 1.0 + _CLAMP_SLACK:
            return math.nan
        th1 = math.acos(min(1.0, max(-1.0, a1)))
        return (sign1 * th1 - half + _TWO_PI * m1) / v

    vs = np.linspace(lo, hi, samples)
    a1_all, a2_all, _ = _arccos_arguments(al, c, vs)
    valid = (np.abs(a1_all) <= 1.0 + _CLAMP_SLACK) & (np.abs(a2_all) <= 1.0 + _CLAMP_SLACK)

    crossings: list[tuple[float, int, int]] = []
    for i0, i1 in _contiguous_runs(valid):
        seg = [float(v) for v in vs[i0 : i1 + 1]]
        if i0 > 0:
            seg.insert(0, _refine_validity_edge(is_valid, float(vs[i0 - 1]), seg[0]))
        if i1 < samples - 1:
            seg.append(_refine_validity_edge(is_valid, float(vs[i1 + 1]), seg[-1]))
        for sign1 in (1, -1):
            for m1 in range(max_branch + 1):
                y = [tau1_branch(v, sign1, m1) - q for v in seg]
                for t in range(len(seg)):
                    if math.isnan(y[t]):
                        continue
                    if y[t] == 0.0:
                        crossings.append((seg[t], sign1, m1))
                        continue
                    if t + 1 == len(seg) or math.isnan(y[t + 1]) or y[t] * y[t + 1] >= 0.0:
                        continue
                    v_lo, v_hi, f_lo = seg[t], seg[t + 1], y[t]
                    for _ in range(90):
                        mid = 0.5 * (v_lo + v_hi)
                        f_mid = tau1_branch(mid, sign1, m1) - q
                        if f_mid == 0.0:
                            v_lo = v_hi = mid
                            break
                        if (f_lo < 0.0) != (f_mid < 0.0):
                            v_hi = mid
                        else:
                            v_lo, f_lo = mid, f_mid
                    crossings.append((0.5 * (v_lo + v_hi), sign1, m1))

    best: float | None = None
    for v_star, sign1, m1 in crossings:
        a1, a2, va = _arccos_arguments(al, c, v_star)
        th2 = math.acos(min(1.0, max(-1.0, a2)))
        t1 = tau1_branch(v_star, sign1, m1)
        if math.isnan(t1):
            continue
        for sign2 in (1, -1):
            for m2 in range(max_branch + 1):
                t2 = (sign2 * th2 - half + _TWO_PI * m2) / v_star
                if t2 < 0.0:
                    continue
                if _scalar_residual(al, c, v_star, t1, t2, va) <= residual_tol:
                    if best is None or t2 < best:
                        best = t2
    return best


def delay_plane_boundary(
    alpha: FractionalOrder | float,
    coef: LinearCoefficients | tuple[float, float],
    tau1: float,
    v_range: tuple[float, float] | None = None,
    samples: int = _DEFAULT_SAMPLES,
    max_branch: int = _DEFAULT_MAX_BRANCH,
) -> float | None:
    """Boundary value of tau2 used to classify the point (tau1, tau2).

    Normally this is :func:`critical_tau2_for_tau1`.  When the vertical line
    misses every sampled branch (possible in custom frequency windows), the
    lowest tau2 among all sampled curve points stands in as a conservative
    boundary; None means the window contains no crossing locus at all.
    """
    c = critical_tau2_for_tau1(
        alpha, coef, tau1, v_range=v_range, samples=samples, max_branch=max_branch
    )
    if c is not None:
        return c
    points = critical_curve(
        alpha, coef, v_range=v_range, samples=samples, max_branch=max_branch
    )
    if not points:
        return None
    return min(p.tau2 for p in points)


def classify(
    alpha: FractionalOrder | float,
    coef: LinearCoefficients | tuple[float, float],
    delays: DelayPair | tuple[float, float],
    tolerance: float = 1e-6,
    v_range: tuple[float, float] | None = None,
    samples: int = _DEFAULT_SAMPLES,
    max_branch: int = _DEFAULT_MAX_BRANCH,
) -> StabilityVerdict:
    """Classify an equilibrium of the linearized problem at given delays.

    At zero delays the verdict reduces to :func:`stable_at_zero_delay`.  An
    equilibrium already unstable without delays stays Unstable for positive
    delays (delays cannot stabilize a positive coefficient sum here), and a
    delay-free boundary case stays OnBoundary.  Otherwise the point is
    compared against the stability boundary along its tau1 line: Stable
    below it by more than ``tolerance``, Unstable above it by more than
    ``tolerance``, OnBoundary inside the band.  If no boundary exists in
    the frequency window the delays are classified Stable, since no root
    can have crossed the imaginary axis.
    """
    c = _require_nondegenerate(coef)
    d = _as_delays(delays)
    tolerance = float(tolerance)
    if not (math.isfinite(tolerance) and tolerance >= 0.0):
        raise ValueError(f"tolerance must be nonnegative, got {tolerance!r}")
    zero_verdict = stable_at_zero_delay(c)
    if d.tau1 == 0.0 and d.tau2 == 0.0:
        return zero_verdict
    if zero_verdict is StabilityVerdict.ON_BOUNDARY:
        return StabilityVerdict.ON_BOUNDARY
    if zero_verdict is StabilityVerdict.UNSTABLE_AT_ZERO_DELAYS:
        return StabilityVerdict.UNSTABLE
    boundary = delay_plane_boundary(
        alpha, c, d.tau1, v_range=v_range, samples=samples, max_branch=max_branch
    )
    if boundary is None:
        return StabilityVerdict.STABLE
    if d.tau2 < boundary - tolerance:
        return StabilityVerdict.STABLE
    if d.tau2 > boundary + tolerance:
        return StabilityVerdict.UNSTABLE
    return StabilityVerdict.ON_BOUNDARY
