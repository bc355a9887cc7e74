"""Scalar special functions and quadrature weights for fractional integrals.

Everything in this module is plain float-valued numerics: the gamma function
wrapper used throughout the package, the product-trapezoidal weight rows that
drive the time stepper, a truncated Mittag-Leffler series, and a closed-form
series solution of the linear single-delay problem that the test suite uses
as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonConvergenceError

__all__ = [
    "FractionalOrder",
    "order_value",
    "gamma_function",
    "trapezoid_weights",
    "corner_weight_table",
    "interior_weight_table",
    "mittag_leffler",
    "delayed_series_oracle",
]

# Interior weights switch from the direct second difference to a binomial
# series at this offset; see the comment inside interior_weight_table.
_SERIES_CUTOFF = 8
_SERIES_TERMS = 12

_ML_TERM_FLOOR = 1e-14
_ML_MAX_TERMS = 10_000
_ML_ARG_LIMIT = 50.0

# Just below log(sys.float_info.max); exp() of anything larger overflows.
_LOG_HUGE = 709.0


@dataclass(frozen=True)
class FractionalOrder:
    """Order of the fractional derivative, restricted to (0, 1].

    The value 1 is allowed and reduces every formula in this package to its
    classical first-order counterpart.
    """

    alpha: float

    def __post_init__(self) -> None:
        a = self.alpha
        if not isinstance(a, (int, float)) or isinstance(a, bool) or not math.isfinite(a):
            raise ValueError("derivative order must be a finite real number")
        if not 0.0 < a <= 1.0:
            raise ValueError(f"derivative order must lie in (0, 1], got {a!r}")

    def __float__(self) -> float:
        return float(self.alpha)


def order_value(order: FractionalOrder | float) -> float:
    """Unwrap an order given either bare or wrapped, validating its range."""
    if isinstance(order, FractionalOrder):
        return float(order)
    return float(FractionalOrder(float(order)))


def gamma_function(x: float) -> float:
    """Gamma function on the positive real axis.

    Delegates to the platform implementation behind :func:`math.gamma`,
    which is accurate to well under 1e-12 relative error over the range
    this package exercises (series denominators ``alpha*k + 1`` and the
    stepper constant ``alpha + 2``, all within (0, 35)).

    Parameters
    ----------
    x : float
        Point of evaluation, must be positive and finite.

    Returns
    -------
    float

    Raises
    ------
    ValueError
        If ``x`` is nonpositive, infinite, or NaN.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("gamma_function requires a finite argument")
    if x <= 0.0:
        raise ValueError(f"gamma_function is restricted to x > 0, got {x}")
    return math.gamma(x)


def _corner_weight(alpha: float, n: float) -> float:
    # First quadrature weight of the row for step n+1.  The two terms grow
    # like n**(alpha+1) while their difference stays O(n**alpha), so about
    # log10(n) digits cancel; with n <= 1e7 that leaves plenty of the 16
    # available, and the weight-sum identity test pins the actual loss.
    return n ** (alpha + 1.0) - (n - alpha) * (n + 1.0) ** alpha


def corner_weight_table(alpha: FractionalOrder | float, n_max: int) -> np.ndarray:
    """First-column quadrature weights ``a[0, n+1]`` for ``n = 0..n_max``.

    Entry ``j`` of the result multiplies the oldest integrand sample in the
    step that advances the solution from index ``j`` to ``j + 1``.
    """
    a = order_value(alpha)
    n_max = int(n_max)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    n = np.arange(n_max + 1, dtype=float)
    return n ** (a + 1.0) - (n - a) * (n + 1.0) ** a


def interior_weight_table(alpha: FractionalOrder | float, m_max: int) -> np.ndarray:
    """Interior quadrature weights indexed by sample offset.

    Entry ``m`` of the result is the weight attached to an integrand sample
    ``m`` grid points behind the step target, for ``1 <= m <= m_max``; it is
    the centered second difference of ``m**(alpha+1)``.  Entry 0 is NaN on
    purpose: offset zero is the trailing weight, which is identically 1 and
    never read from this table.

    All entries are positive for ``alpha`` in (0, 1), and at ``alpha == 1``
    every entry is exactly 2.0, the classical trapezoid interior weight.
    """
    a = order_value(alpha)
    m_max = int(m_max)
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    beta = a + 1.0
    d2 = np.empty(m_max + 1, dtype=float)
    d2[0] = np.nan
    hi = min(_SERIES_CUTOFF - 1, m_max)
    if hi >= 1:
        m = np.arange(1, hi + 1, dtype=float)
        d2[1 : hi + 1] = (m + 1.0) ** beta + (m - 1.0) ** beta - 2.0 * m ** beta
    if m_max >= _SERIES_CUTOFF:
        # Cancellation analysis.  The direct second difference subtracts
        # numbers of size m**beta to leave a result of size
        # beta*(beta-1)*m**(beta-2), losing roughly 2*log10(m) decimal
        # digits; at m = 1e6 only half the mantissa would survive.  For
        # m >= 8 we therefore expand
        #
        #   (m+1)**beta + (m-1)**beta - 2*m**beta
        #       = 2 * sum_{k>=1} C(beta, 2k) * m**(beta-2k)
        #
        # (odd binomial terms cancel in exact arithmetic, so dropping them
        # costs nothing).  Every C(beta, 2k) is nonnegative for beta in
        # [1, 2], so the sum has no cancellation at all and each weight is
        # accurate to a few ulp.  Terms shrink by m**(-2) >= 64 per step,
        # so twelve of them reach double precision with a wide margin.
        # Writing each term as m**(beta - 2k) rather than m**beta * u**(2k)
        # keeps beta == 2 exact: there C(2, 2k) vanishes for k >= 2 and the
        # series collapses to the constant 2.
        m = np.arange(_SERIES_CUTOFF, m_max + 1, dtype=float)
        total = np.zeros_like(m)
        coeff = 1.0  # running binomial coefficient C(beta, j)
        j = 0
        for k in range(1, _SERIES_TERMS + 1):
            while j < 2 * k:
                coeff *= (beta - j) / (j + 1)
                j += 1
            if coeff == 0.0:
                break
            total += coeff * m ** (beta - 2 * k)
        d2[_SERIES_CUTOFF:] = 2.0 * total
    return d2


def trapezoid_weights(alpha: FractionalOrder | float, n: int) -> np.ndarray:
    """Full product-trapezoidal quadrature row for the step to index ``n+1``.

    Returns the ``n+2`` weights ``a[j, n+1]`` for ``j = 0..n+1``.  The row
    always ends in the trailing weight 1, sums to
    ``(alpha+1) * (n+1)**alpha``, and at ``alpha == 1`` equals the classical
    pattern ``1, 2, ..., 2, 1``.

    The time stepper does not call this function (it consumes the two weight
    tables directly so that work per step stays linear); the row form exists
    for inspection and for the identity tests.
    """
    a = order_value(alpha)
    n = int(n)
    if n < 0:
        raise ValueError("step index must be nonnegative")
    row = np.empty(n + 2, dtype=float)
    row[0] = _corner_weight(a, float(n))
    if n >= 1:
        interior = interior_weight_table(a, n)
        row[1 : n + 1] = interior[n:0:-1]
    row[n + 1] = 1.0
    return row


def mittag_leffler(alpha: FractionalOrder | float, z: float) -> float:
    """One-parameter Mittag-Leffler function by direct series summation.

    Computes ``sum_k z**k / Gamma(alpha*k + 1)``, accumulating terms until
    the first one below 1e-14 in magnitude has been added, then compensates
    the sum with :func:`math.fsum`.  At ``alpha == 1`` this is ``exp(z)``.

    Arguments are restricted to ``|z| <= 50``.  Direct summation is the
    honest algorithm only where the terms do not wreck the answer before
    they decay: for negative ``z`` the terms alternate and grow to roughly
    ``exp(|z|)`` before shrinking, so the best reachable absolute error is
    about ``exp(|z|) * eps`` no matter how exactly they are added.  Within
    the accepted range that floor stays below 1e-7 absolute and the result
    of fsum realizes it.

    Raises
    ------
    ValueError
        If ``z`` is outside the supported range or not finite.
    NonConvergenceError
        If the term budget is exhausted, or if a term overflows while the
        sign still alternates (the cancelled tail would then be meaningless).
    """
    a = order_value(alpha)
    z = float(z)
    if not math.isfinite(z):
        raise ValueError("mittag_leffler requires a finite argument")
    if abs(z) > _ML_ARG_LIMIT:
        raise ValueError(
            f"series evaluation is supported for |z| <= {_ML_ARG_LIMIT:g}, got {z}"
        )
    if z == 0.0:
        return 1.0
    log_abs_z = math.log(abs(z))
    negative = z < 0.0
    terms = [1.0]
    for k in range(1, _ML_MAX_TERMS + 1):
        log_mag = k * log_abs_z - math.lgamma(a * k + 1.0)
        if log_mag > _LOG_HUGE:
            if negative:
                raise NonConvergenceError(
                    "alternating series terms overflow before decaying "
                    f"(alpha={a}, z={z})"
                )
            # Positive argument: the true value dwarfs the float range, so
            # an infinite partial sum is the honest answer.
            terms.append(math.inf)
            continue
        mag = math.exp(log_mag)
        terms.append(-mag if negative and k % 2 else mag)
        if mag < _ML_TERM_FLOOR:
            return math.fsum(terms)
    raise NonConvergenceError(
        f"Mittag-Leffler series needed more than {_ML_MAX_TERMS} terms "
        f"(alpha={a}, z={z})"
    )


def delayed_series_oracle(
    alpha: FractionalOrder | float, a: float, tau: float, t: float
) -> float:
    """Exact solution of the linear single-delay problem with unit history.

    Evaluates the solution of ``D^alpha x(t) = a * x(t - tau)`` with
    ``x(t) = 1`` for ``t <= 0`` as the finite sum

        ``x(t) = sum_{k>=0} a**k * max(t-(k-1)*tau, 0)**(k*alpha)
                 / Gamma(k*alpha + 1)``.

    Each factor switches on one delay interval later than the previous, so
    the sum has about ``t/tau + 1`` nonzero terms.  Terms are produced in
    log space (immune to intermediate overflow) and compensated with fsum.
    The function is continuous across the interval knots ``t = k*tau``,
    though only Holder-continuous of exponent ``alpha`` at ``t = 0``.

    This series is the package's independent reference for solver accuracy;
    it shares no code path with the time stepper.
    """
    al = order_value(alpha)
    a = float(a)
    tau = float(tau)
    t = float(t)
    if not math.isfinite(a):
        raise ValueError("coefficient must be finite")
    if not tau > 0.0 or not math.isfinite(tau):
        raise ValueError("delay must be positive and finite")
    if t < 0.0 or not math.isfinite(t):
        raise ValueError("time must be nonnegative and finite")
    if t == 0.0 or a == 0.0:
        return 1.0
    log_abs_a = math.log(abs(a))
    negative = a < 0.0
    terms = [1.0]
    k = 1
    while True:
        base = t - (k - 1) * tau
        if base <= 0.0:
            break
        log_mag = k * log_abs_a + (k * al) * math.log(base) - math.lgamma(k * al + 1.0)
        mag = math.exp(log_mag) if log_mag <= _LOG_HUGE else math.inf
        terms.append(-mag if negative and k % 2 else mag)
        k += 1
    return math.fsum(terms)
