"""Exact decay amplitude for a qubit in a zero-temperature Lorentzian reservoir.

All public entry points work in dimensionless time ``gamma0 * t``; the decay
rate ``gamma0`` only sets physical scales reported by accessors.  The central
object is the amplitude suppression factor ``chi(t)``: excited-state
populations scale as ``chi**2`` and coherences as ``chi``.  Below spectral
width ``lambda = 2 * gamma0`` the reservoir memory makes ``chi`` oscillate
through discrete zeros; above it the decay is monotone.
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ReservoirParams",
    "Regime",
    "NoZerosError",
    "regime",
    "evaluate_chi",
    "chi_zeros",
    "spectral_density",
    "solve_memory_kernel",
]

# Width of the degenerate band around lambda_ratio = 2 where the closed form
# switches to its analytic limit to avoid 0/0 in the (lambda/d) sin term.
_DEGENERATE_BAND = 1e-9


class Regime(enum.Enum):
    MARKOVIAN = "markovian"
    NON_MARKOVIAN = "non_markovian"


@dataclass(frozen=True)
class ReservoirParams:
    """Lorentzian reservoir coupling, as (decay rate, spectral width / decay rate).

    Parameters
    ----------
    gamma0 : flat-spectrum decay rate of the excited state; sets the time unit.
    lambda_ratio : spectral width over decay rate, > 0.
    omega0 : optional carrier frequency; enters only `spectral_density`
        (the dynamics are computed in the frame where it cancels).
    """

    gamma0: float = 1.0
    lambda_ratio: float = 1.0
    omega0: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.gamma0) and self.gamma0 > 0):
            raise ValueError(f"gamma0 must be positive and finite, got {self.gamma0}")
        if not (math.isfinite(self.lambda_ratio) and self.lambda_ratio > 0):
            raise ValueError(f"lambda_ratio must be positive and finite, got {self.lambda_ratio}")

    @property
    def lam(self) -> float:
        """Spectral width in physical units."""
        return self.lambda_ratio * self.gamma0

    @property
    def d(self) -> float:
        """Oscillation/damping rate sqrt(|2*gamma0*lambda - lambda**2|), physical units."""
        return self.gamma0 * math.sqrt(abs(2.0 * self.lambda_ratio - self.lambda_ratio**2))

    @property
    def reservoir_correlation_time(self) -> float:
        """Memory time of the reservoir, ~ 1/lambda."""
        return 1.0 / self.lam

    @property
    def relaxation_time(self) -> float:
        """Qubit relaxation time scale, ~ 1/gamma0."""
        return 1.0 / self.gamma0


class NoZerosError(ValueError):
    """The amplitude factor has no positive zeros in this regime."""


def regime(params: ReservoirParams) -> Regime:
    """Classify the reservoir: non-Markovian iff lambda < 2 * gamma0.

    The boundary lambda_ratio == 2 is classified Markovian by convention.
    """
    return Regime.NON_MARKOVIAN if params.lambda_ratio < 2.0 else Regime.MARKOVIAN


def evaluate_chi(params: ReservoirParams, t: float) -> float:
    """Amplitude factor chi at dimensionless time t = gamma0 * t_phys.

    chi(0) = 1 and |chi| <= 1 for all t >= 0.  In the oscillatory regime chi
    goes negative between its zeros; coherences inherit the sign while
    populations (chi**2) do not.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    lam = params.lambda_ratio
    dd = abs(2.0 * lam - lam * lam)
    d = math.sqrt(dd)
    envelope_exponent = -0.5 * lam * t
    if d < _DEGENERATE_BAND:
        # Analytic lambda_ratio -> 2 limit.
        return math.exp(envelope_exponent) * (1.0 + 0.5 * lam * t)
    x = 0.5 * d * t
    if lam < 2.0:
        return math.exp(envelope_exponent) * (math.cos(x) + (lam / d) * math.sin(x))
    # Monotone branch, written as a sum of two decaying exponentials so that
    # exp(-lam*t/2) * cosh(d*t/2) never overflows for large lam * t.
    ratio = lam / d
    return 0.5 * (1.0 + ratio) * math.exp(envelope_exponent + x) + 0.5 * (1.0 - ratio) * math.exp(
        envelope_exponent - x
    )


def _chi_zero_formula(params: ReservoirParams, n: int) -> float:
    lam = params.lambda_ratio
    d = math.sqrt(abs(2.0 * lam - lam * lam))
    return 2.0 * (n * math.pi - math.atan2(d, lam)) / d


def chi_zeros(params: ReservoirParams, n_max: int) -> list[float]:
    """First n_max positive zeros of chi, in dimensionless time units.

    Zeros exist only in the non-Markovian regime; indices start at n = 1
    (n = 0 would give a negative time).  Each returned time is polished by
    bisection so that |chi(t_n)| < 1e-9 holds for the evaluated function,
    not just for the arctan formula.

    Raises
    ------
    NoZerosError
        In the Markovian regime, where chi has no positive zeros.
    """
    if regime(params) is Regime.MARKOVIAN:
        raise NoZerosError(
            f"chi has no positive zeros for lambda_ratio = {params.lambda_ratio} (Markovian regime)"
        )
    zeros = []
    for n in range(1, n_max + 1):
        t_formula = _chi_zero_formula(params, n)
        zeros.append(_polish_zero(params, t_formula))
    return zeros


def _polish_zero(params: ReservoirParams, t0: float, half_width: float = 0.01) -> float:
    """Bisection refinement of a zero of chi inside [t0 - w, t0 + w]."""
    lo = max(t0 - half_width, 0.0)
    hi = t0 + half_width
    f_lo = evaluate_chi(params, lo)
    f_hi = evaluate_chi(params, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0:
        # Formula value already accurate to working precision.
        return t0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = evaluate_chi(params, mid)
        if f_mid == 0.0 or hi - lo < 1e-15 * max(1.0, t0):
            return mid
        if f_lo * f_mid < 0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


def spectral_density(params: ReservoirParams, omega: float) -> float:
    """Lorentzian spectral weight J(omega), physical units.

    J(omega) = gamma0 * lambda**2 / (2 pi ((omega0 - omega)**2 + lambda**2));
    integrates to gamma0 * lambda / 2 over the real line.
    """
    lam = params.lam
    detuning = params.omega0 - omega
    return params.gamma0 * lam * lam / (2.0 * math.pi * (detuning * detuning + lam * lam))


def solve_memory_kernel(params: ReservoirParams, t_grid: np.ndarray) -> np.ndarray:
    """Numeric amplitude from the memory-kernel equation, independent of the closed form.

    Integrates dC/dt = -int_0^t F(t - s) C(s) ds with C(0) = 1 and the
    exponential kernel F(tau) = (lambda_ratio / 2) exp(-lambda_ratio tau)
    (dimensionless time).  Both the time derivative and the convolution use
    the trapezoidal rule on the supplied uniform grid; the convolution sum is
    accumulated with the kernel's semigroup property, which reproduces the
    direct trapezoidal sum exactly up to floating-point reassociation while
    costing O(n) instead of O(n^2).

    Parameters
    ----------
    t_grid : ascending, uniform, starting at 0, with step <= 1e-3.

    Returns
    -------
    Array of C values on t_grid, C[0] == 1.
    """
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 2:
        raise ValueError("t_grid must be a 1-D grid with at least two points")
    if t[0] != 0.0:
        raise ValueError(f"t_grid must start at 0, got {t[0]}")
    steps = np.diff(t)
    h = steps[0]
    if h <= 0 or not np.allclose(steps, h, rtol=1e-9, atol=0.0):
        raise ValueError("t_grid must be strictly ascending with uniform step")
    if h > 1e-3 * (1 + 1e-9):
        raise ValueError(f"grid step {h} too coarse; need h <= 1e-3 in gamma0*t units")

    lam = params.lambda_ratio
    f0 = 0.5 * lam  # kernel value at zero lag
    q = math.exp(-lam * h)  # kernel decay across one step

    n = t.size
    c = np.empty(n)
    c[0] = 1.0
    # conv[k] = trapezoidal quadrature of int_0^{t_k} F(t_k - s) C(s) ds
    conv = 0.0
    # Implicit trapezoid step for the integro-differential equation:
    #   c_k = c_{k-1} - (h/2) (conv_{k-1} + conv_k),
    #   conv_k = q conv_{k-1} + (h f0 / 2) (c_k + q c_{k-1}).
    denom = 1.0 + 0.25 * h * h * f0
    c_prev = 1.0
    for k in range(1, n):
        rhs = c_prev * (1.0 - 0.25 * h * h * f0 * q) - 0.5 * h * (1.0 + q) * conv
        c_k = rhs / denom
        conv = q * conv + 0.5 * h * f0 * (c_k + q * c_prev)
        c[k] = c_k
        c_prev = c_k
    return c
