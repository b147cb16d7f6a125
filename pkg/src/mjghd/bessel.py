"""Log-scale modified Bessel functions of the second kind.

Every density and conditional expectation in this package reduces to values
and ratios of :math:`K_\\nu(z)`, evaluated in log scale so that large
concentration arguments neither overflow nor cancel. The order symmetry
:math:`K_\\nu = K_{-\\nu}` holds exactly by construction (all evaluations
are done at :math:`|\\nu|`).

Supported argument domain: ``Z_MIN <= z <= Z_MAX``. Outside it a
:class:`BesselRangeError` is raised rather than returning garbage.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np
from scipy.special import kve

# Supported argument domain. kve covers it accurately except where K
# overflows the double range (large |order|, small z); that branch is
# delegated to mpmath below.
Z_MIN = 1e-12
Z_MAX = 1e6

ORDER_MAX = 256.0


class BesselRangeError(ValueError):
    """Argument or order outside the supported evaluation domain."""


@dataclass(frozen=True)
class BesselEval:
    """One evaluation of log K: order, argument, and the log value."""

    order: float
    argument: float
    log_value: float


def _check_z(z: np.ndarray) -> None:
    if np.any(~np.isfinite(z)):
        raise ValueError("Bessel argument must be finite")
    if np.any(z <= 0.0):
        raise ValueError("Bessel argument must be positive")
    if np.any(z < Z_MIN) or np.any(z > Z_MAX):
        raise BesselRangeError(
            f"Bessel argument outside supported domain [{Z_MIN:g}, {Z_MAX:g}]"
        )


def _mpmath_log_k(order: float, z: float) -> float:
    # Arbitrary-precision fallback for the (large order, small z) corner
    # where K overflows the double range and kve returns inf.
    with mpmath.workdps(30):
        return float(mpmath.log(mpmath.besselk(order, mpmath.mpf(z))))


def log_bessel_k(order: float, z):
    """log K_order(z), elementwise over ``z`` (scalar or array).

    Symmetric in the order by construction. Raises ``ValueError`` for
    non-positive arguments and :class:`BesselRangeError` outside the
    supported domain.
    """
    nu = abs(float(order))
    if not np.isfinite(nu):
        raise ValueError("Bessel order must be finite")
    if nu > ORDER_MAX:
        raise BesselRangeError(f"Bessel order magnitude above {ORDER_MAX:g}")
    scalar = np.isscalar(z)
    zarr = np.atleast_1d(np.asarray(z, dtype=float))
    _check_z(zarr)

    with np.errstate(over="ignore"):
        out = np.log(kve(nu, zarr)) - zarr

    bad = ~np.isfinite(out)
    if np.any(bad):
        for i in np.flatnonzero(bad):
            out[i] = _mpmath_log_k(nu, float(zarr[i]))
    if np.any(~np.isfinite(out)):
        raise OverflowError("log K left the representable range")

    return float(out[0]) if scalar else out


def log_bessel_k_ratio(order_a: float, order_b: float, z):
    """log K_{order_a}(z) - log K_{order_b}(z).

    Both logs are produced by the same branch logic, so the difference is
    stable even when each log is large in magnitude.
    """
    return log_bessel_k(order_a, z) - log_bessel_k(order_b, z)


def dlogk_dorder(order: float, z):
    """d/dnu log K_nu(z) at nu = order.

    Central difference on log K with step ``max(1e-6, 1e-6 |order|)`` and
    one Richardson extrapolation level. Odd in the order, exactly zero at
    order 0 (K is even in its order).
    """
    nu = float(order)
    sign = 1.0 if nu >= 0.0 else -1.0
    nu = abs(nu)
    h = max(1e-6, 1e-6 * nu)
    d_h = (log_bessel_k(nu + h, z) - log_bessel_k(nu - h, z)) / (2.0 * h)
    d_h2 = (log_bessel_k(nu + h / 2.0, z) - log_bessel_k(nu - h / 2.0, z)) / h
    return sign * (4.0 * d_h2 - d_h) / 3.0


def evaluate(order: float, z: float) -> BesselEval:
    """Evaluate log K once and package the result."""
    return BesselEval(order=float(order), argument=float(z), log_value=log_bessel_k(order, z))
