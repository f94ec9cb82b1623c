"""Limiting regimes of the spectrum: the nearly-free particle in a box
(shallow well) and the nearly-harmonic oscillator (deep or wide well).

Both regimes are series expansions of the shape parameter

    lambda = sqrt(1 + x) - 1,          x = 4 V0 / T        (box side)
    lambda = sqrt(1 + lt^2) - 1,       lt = 2 sqrt(V0 / T) (oscillator side)

graded so that order k keeps every term through the k-th power of the
regime's small parameter (x on the box side; alpha, equivalently 1/lt,
on the oscillator side).  The limiting equations of state are
P = s E / L with s = 2 (box) and s = 1 (oscillator).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidParameterError
from .parameters import PTParameters, derive_scales
from .spectra import energy_level, pressure_level

__all__ = [
    "FP_REGIME",
    "HO_REGIME",
    "LimitExpansion",
    "ApproximationReport",
    "fp_limit_expansion",
    "ho_limit_expansion",
    "limit_equation_of_state",
]

FP_REGIME = "FP"
HO_REGIME = "HO"

# Validity guards for the two expansions, in terms of V0 / T.  The
# underlying statements are only asymptotic; these cut points keep the
# leading neglected term below a few percent.
_FP_MAX_DEPTH_RATIO = 0.25
_HO_MIN_DEPTH_RATIO = 4.0


@dataclass(frozen=True, slots=True)
class LimitExpansion:
    """Truncated series for lambda and hbar*omega in one regime.

    ``order_kept`` counts powers of the regime's small parameter that
    are retained.  ``energy(n)`` evaluates the per-level energy at the
    same consistent order: on the oscillator side the box term T n^2 is
    itself second order in alpha and therefore only enters for
    order_kept >= 2.
    """

    regime: str
    lambda_approx: float
    oscillator_quantum_approx: float
    order_kept: int
    kinetic_scale: float

    def __post_init__(self) -> None:
        if self.lambda_approx < 0.0:
            raise InvalidParameterError("series value of lambda must be >= 0")
        if self.order_kept not in (1, 2, 3):
            raise InvalidParameterError("order_kept must be 1, 2 or 3")

    def energy(self, n: int) -> float:
        """Approximate level energy at this expansion order."""
        if n < 1:
            raise InvalidParameterError(f"quantum number must be >= 1, got {n!r}")
        ho_part = self.oscillator_quantum_approx * (n - 0.5)
        if self.regime == HO_REGIME and self.order_kept == 1:
            return ho_part
        return self.kinetic_scale * n * n + ho_part


@dataclass(frozen=True, slots=True)
class ApproximationReport:
    """Side-by-side exact vs approximate value with deviations."""

    exact: float
    approx: float
    absolute_error: float
    relative_error: float
    expected_order: str


def fp_limit_expansion(params: PTParameters, order: int) -> LimitExpansion:
    """Shallow-well series of lambda in x = 4 V0 / T.

    order 1: lambda ~ x/2;  order 2: lambda ~ (x/2)(1 - x/4), i.e.
    hbar*omega ~ 2 V0 (1 - V0/T).  Requires V0 / T < 1/4.
    """
    if order not in (1, 2):
        raise InvalidParameterError(f"box-side expansion order must be 1 or 2, got {order!r}")
    scales = derive_scales(params)
    depth_ratio = params.well_depth / scales.kinetic_scale
    if depth_ratio >= _FP_MAX_DEPTH_RATIO:
        raise DomainError(
            f"box limit requires well_depth / kinetic_scale < {_FP_MAX_DEPTH_RATIO}, "
            f"got {depth_ratio!r}"
        )
    x = 4.0 * depth_ratio
    lam = 0.5 * x
    if order >= 2:
        lam *= 1.0 - 0.25 * x
    return LimitExpansion(
        regime=FP_REGIME,
        lambda_approx=lam,
        oscillator_quantum_approx=scales.kinetic_scale * lam,
        order_kept=order,
        kinetic_scale=scales.kinetic_scale,
    )


def ho_limit_expansion(params: PTParameters, order: int) -> LimitExpansion:
    """Deep-well series of lambda around lt = 2 sqrt(V0 / T) >> 1.

    order 1: lambda ~ lt;  order 2: lambda ~ lt - 1;  order 3:
    lambda ~ lt - 1 + 1/(2 lt), i.e. hbar*omega ~ hw~ - T + T^2/(2 hw~)
    with hw~ = 2 sqrt(V0 T).  Requires V0 / T > 4.
    """
    if order not in (1, 2, 3):
        raise InvalidParameterError(
            f"oscillator-side expansion order must be 1, 2 or 3, got {order!r}"
        )
    scales = derive_scales(params)
    depth_ratio = params.well_depth / scales.kinetic_scale
    if depth_ratio <= _HO_MIN_DEPTH_RATIO:
        raise DomainError(
            f"oscillator limit requires well_depth / kinetic_scale > {_HO_MIN_DEPTH_RATIO}, "
            f"got {depth_ratio!r}"
        )
    lam_tilde = 2.0 * math.sqrt(depth_ratio)
    lam = lam_tilde
    if order >= 2:
        lam -= 1.0
    if order >= 3:
        lam += 0.5 / lam_tilde
    return LimitExpansion(
        regime=HO_REGIME,
        lambda_approx=lam,
        oscillator_quantum_approx=scales.kinetic_scale * lam,
        order_kept=order,
        kinetic_scale=scales.kinetic_scale,
    )


def limit_equation_of_state(params: PTParameters, n: int, regime: str) -> ApproximationReport:
    """Compare the measured exponent s_eff = P_n L / E_n with the
    limiting value (2 on the box side, 1 on the oscillator side).

    The parameters must lie inside the claimed regime's validity
    region, enforced with the same guards as the expansions.
    """
    if regime == FP_REGIME:
        fp_limit_expansion(params, order=1)
        s_limit = 2.0
        expected = "O(V0/T)"
    elif regime == HO_REGIME:
        ho_limit_expansion(params, order=1)
        s_limit = 1.0
        expected = "O(T/hw_tilde)"
    else:
        raise InvalidParameterError(f"regime must be {FP_REGIME!r} or {HO_REGIME!r}, got {regime!r}")
    energy = energy_level(params, n)
    pressure = pressure_level(params, n)
    s_eff = pressure.total * params.half_width / energy.total
    return ApproximationReport(
        exact=s_eff,
        approx=s_limit,
        absolute_error=abs(s_eff - s_limit),
        relative_error=abs(s_eff - s_limit) / abs(s_limit),
        expected_order=expected,
    )
