"""Slope of a family after base change along a pair of multisections.

Start from a family of curves over a base of genus h carrying two
multisections A_1, A_2 of degrees m_1, m_2 that meet transversally and avoid
each other's tangency points.  Pulling the family back to the normalization
of the fiber product turns the multisections into sections; blowing up their
intersection points then separates them.  The pulled-back divisor degrees
pick up correction terms concentrated at those new sections:

    lambda_B  = m_1 m_2 * lambda
    delta_1,B = A_1 . A_2
    delta_0,B = m_1 m_2 * delta_0
                + sum_l [ m_{3-l} (m_l (2h-2) - (2 g(A_l) - 2) + A_l^2) - A_1.A_2 ]
    delta_j,B = m_1 m_2 * delta_j  for the remaining boundary indices

The delta_0 correction equals the sum of the self-intersections of the two
proper-transform sections,

    sigma_l^2 = m_{3-l} * (-(A_l . omega)) - A_1.A_2,
    A_l . omega = (2 g(A_l) - 2) - A_l^2 - m_l (2h - 2),

an identity this module exposes on both sides so it can be checked exactly.
An earlier published version of the delta_0 and delta_j formulas omitted the
multiplicities on the uncorrected terms; the forms above are the corrected
ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SlopeUndefinedError
from .exact import as_fraction


@dataclass(frozen=True)
class BaseChangeParams:
    """Numeric data of the two multisections and of the original family.

    ``base_lambda``, ``base_delta0`` and ``base_delta_rest`` are the degrees
    of lambda, delta_0 and the remaining boundary divisors on the original
    (pre-base-change) family.
    """

    m1: int
    m2: int
    g_A1: int
    g_A2: int
    A1_sq: int
    A2_sq: int
    A12: int
    base_genus: int
    base_lambda: Fraction
    base_delta0: Fraction
    base_delta_rest: tuple[Fraction, ...] = ()

    def __post_init__(self):
        for name in ("m1", "m2", "g_A1", "g_A2", "A1_sq", "A2_sq", "A12", "base_genus"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"{name} must be an integer, got {v!r}")
        if self.m1 < 1 or self.m2 < 1:
            raise ValueError(
                f"multisection degrees must be at least 1, got m1={self.m1}, m2={self.m2}"
            )
        if self.A12 < 0:
            raise ValueError(f"A1.A2 must be nonnegative, got {self.A12}")
        object.__setattr__(self, "base_lambda", as_fraction(self.base_lambda))
        object.__setattr__(self, "base_delta0", as_fraction(self.base_delta0))
        object.__setattr__(
            self, "base_delta_rest", tuple(as_fraction(d) for d in self.base_delta_rest)
        )

    def _side(self, ell: int) -> tuple[int, int, int, int]:
        """(m_l, g(A_l), A_l^2, m_{3-l}) for l in {1, 2}."""
        if ell == 1:
            return self.m1, self.g_A1, self.A1_sq, self.m2
        if ell == 2:
            return self.m2, self.g_A2, self.A2_sq, self.m1
        raise ValueError(f"multisection index must be 1 or 2, got {ell!r}")


@dataclass(frozen=True)
class PullbackSlope:
    """Pulled-back divisor degrees and the resulting slope."""

    lambda_B: Fraction
    delta0_B: Fraction
    delta1_B: Fraction
    delta_rest_B: tuple[Fraction, ...]
    slope: Fraction

    @property
    def delta_total(self) -> Fraction:
        return self.delta0_B + self.delta1_B + sum(self.delta_rest_B, Fraction(0))


def relative_omega_degree(params: BaseChangeParams, ell: int) -> Fraction:
    """A_l . omega of the family: (2 g(A_l) - 2) - A_l^2 - m_l (2h - 2)."""
    m, g, a_sq, _ = params._side(ell)
    h = params.base_genus
    return Fraction((2 * g - 2) - a_sq - m * (2 * h - 2))


def sigma_tilde_self_intersection(params: BaseChangeParams, ell: int) -> Fraction:
    """Self-intersection of the proper-transform section over multisection l."""
    _, _, _, m_other = params._side(ell)
    return m_other * (-relative_omega_degree(params, ell)) - params.A12


def beta_delta0_correction(params: BaseChangeParams) -> Fraction:
    """The correction added to m_1 m_2 * delta_0 after the blow-ups.

    Equals sigma_tilde_self_intersection(1) + sigma_tilde_self_intersection(2)
    identically; this form evaluates the displayed sum directly.
    """
    h = params.base_genus
    total = Fraction(0)
    for ell in (1, 2):
        m, g, a_sq, m_other = params._side(ell)
        total += m_other * (m * (2 * h - 2) - (2 * g - 2) + a_sq) - params.A12
    return total


def beta_delta_j(params: BaseChangeParams, F_delta_j) -> Fraction:
    """Boundary degrees away from delta_0, delta_1 scale by m_1 m_2."""
    return params.m1 * params.m2 * as_fraction(F_delta_j)


def pullback_slope(params: BaseChangeParams) -> PullbackSlope:
    """Assemble all pulled-back degrees and the slope of the new family."""
    if params.base_lambda == 0:
        raise SlopeUndefinedError(
            "slope after base change is undefined: the base family has lambda = 0"
        )
    mm = params.m1 * params.m2
    lambda_B = mm * params.base_lambda
    delta0_B = mm * params.base_delta0 + beta_delta0_correction(params)
    delta1_B = Fraction(params.A12)
    delta_rest_B = tuple(beta_delta_j(params, d) for d in params.base_delta_rest)
    slope = (delta0_B + delta1_B + sum(delta_rest_B, Fraction(0))) / lambda_B
    return PullbackSlope(
        lambda_B=lambda_B,
        delta0_B=delta0_B,
        delta1_B=delta1_B,
        delta_rest_B=delta_rest_B,
        slope=slope,
    )
