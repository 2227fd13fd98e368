"""Curvature estimates, Einstein obstructions, Ricci and Yamabe bounds.

All comparisons behind a verdict are exact rational comparisons with pi
divided out; pi enters only when the displayed float magnitudes are formed.
The reported quantities, for a 4-manifold with invariant beta^2 and
characteristic numbers (chi, tau):

* scalar curvature:   integral of s^2          >= 32 pi^2 beta^2
* mixed Weyl bound:   integral of (s-sqrt6|W+|)^2 >= 72 pi^2 beta^2
* Einstein existence: 2 chi - 3 tau >= beta^2 / 3 and
                      2 chi + 3 tau >= 2 beta^2 / 3 (else no Einstein metric)
* Ricci:              integral of |r|^2 >= 8 pi^2 (2 beta^2 - (2 chi + 3 tau))
* Yamabe invariant:   <= -4 sqrt2 pi sqrt(beta^2)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputDataError
from .manifold import ManifoldModel

VERDICT_OBSTRUCTED = "OBSTRUCTED"
VERDICT_BORDERLINE = "BORDERLINE"
VERDICT_UNDECIDED = "UNDECIDED"

RIGIDITY_MINUS = (
    "equality case: compact quotient of the complex hyperbolic plane with a "
    "constant multiple of its Kahler-Einstein metric"
)
RIGIDITY_PLUS = (
    "equality case: hyper-Kahler metric; the manifold is diffeomorphic to K3 or T^4"
)
RICCI_EQUALITY = "equality iff g is Kahler-Einstein"


@dataclass(frozen=True)
class CurvatureBounds:
    """Lower bounds for the curvature integrals and the Yamabe upper bound.

    ``scalar_coeff`` and ``weyl_coeff`` are the exact rational multiples of
    pi^2 (32 beta^2 and 72 beta^2); the float fields carry the magnitudes.
    """

    scalar_l2_lower: float
    weyl_mixed_lower: float
    yamabe_upper: float
    scalar_coeff: Fraction
    weyl_coeff: Fraction


@dataclass(frozen=True)
class EinsteinCheck:
    lhs: int
    rhs: Fraction
    verdict: str
    rigidity_note: str | None = None


@dataclass(frozen=True)
class EinsteinObstruction:
    minus_check: EinsteinCheck  # 2 chi - 3 tau against beta^2 / 3
    plus_check: EinsteinCheck  # 2 chi + 3 tau against 2 beta^2 / 3

    @property
    def verdict(self) -> str:
        verdicts = (self.minus_check.verdict, self.plus_check.verdict)
        if VERDICT_OBSTRUCTED in verdicts:
            return VERDICT_OBSTRUCTED
        if VERDICT_BORDERLINE in verdicts:
            return VERDICT_BORDERLINE
        return VERDICT_UNDECIDED


@dataclass(frozen=True)
class RicciBound:
    value: float
    coeff: Fraction  # exact multiple of pi^2, clamped below at 0
    vacuous: bool
    note: str


@dataclass(frozen=True)
class BoundsReport:
    beta_sq: Fraction
    alpha_sq: float | None
    curvature: CurvatureBounds
    einstein: EinsteinObstruction
    ricci: RicciBound
    notes: tuple[str, ...]

    @property
    def scalar_l2_lower(self) -> float:
        return self.curvature.scalar_l2_lower

    @property
    def weyl_mixed_lower(self) -> float:
        return self.curvature.weyl_mixed_lower

    @property
    def yamabe_upper(self) -> float:
        return self.curvature.yamabe_upper


def _as_beta(beta_sq) -> Fraction:
    b = beta_sq if isinstance(beta_sq, Fraction) else Fraction(beta_sq)
    if b < 0:
        raise InputDataError(f"beta^2 must be nonnegative, got {b}")
    return b


def curvature_bounds(beta_sq) -> CurvatureBounds:
    """(32 pi^2 beta^2, 72 pi^2 beta^2, -4 sqrt2 pi sqrt(beta^2))."""
    b = _as_beta(beta_sq)
    scalar_coeff = 32 * b
    weyl_coeff = 72 * b
    pi2 = math.pi * math.pi
    return CurvatureBounds(
        scalar_l2_lower=float(scalar_coeff) * pi2,
        weyl_mixed_lower=float(weyl_coeff) * pi2,
        yamabe_upper=-4.0 * math.sqrt(2.0) * math.pi * math.sqrt(float(b)),
        scalar_coeff=scalar_coeff,
        weyl_coeff=weyl_coeff,
    )


def _check(lhs: int, rhs: Fraction, rigidity: str) -> EinsteinCheck:
    if lhs < rhs:
        return EinsteinCheck(lhs=lhs, rhs=rhs, verdict=VERDICT_OBSTRUCTED)
    if lhs == rhs:
        return EinsteinCheck(lhs=lhs, rhs=rhs, verdict=VERDICT_BORDERLINE, rigidity_note=rigidity)
    return EinsteinCheck(lhs=lhs, rhs=rhs, verdict=VERDICT_UNDECIDED)


def einstein_obstruction(model: ManifoldModel, beta_sq) -> EinsteinObstruction:
    """Exact test of the two Einstein-metric necessary conditions.

    OBSTRUCTED means no Einstein metric can exist on the model; BORDERLINE
    means an inequality holds with exact equality (the rigidity note names
    the only geometries that survive); UNDECIDED asserts nothing.
    """
    b = _as_beta(beta_sq)
    return EinsteinObstruction(
        minus_check=_check(model.two_chi_minus_3tau, b / 3, RIGIDITY_MINUS),
        plus_check=_check(model.two_chi_plus_3tau, 2 * b / 3, RIGIDITY_PLUS),
    )


def ricci_bound(model: ManifoldModel, beta_sq) -> RicciBound:
    """max(0, 8 pi^2 (2 beta^2 - (2 chi + 3 tau)))."""
    b = _as_beta(beta_sq)
    raw = 8 * (2 * b - model.two_chi_plus_3tau)
    if raw <= 0:
        note = RICCI_EQUALITY if raw == 0 else "vacuous: 2 beta^2 <= 2 chi + 3 tau"
        return RicciBound(value=0.0, coeff=Fraction(0), vacuous=raw < 0, note=note)
    return RicciBound(
        value=float(raw) * math.pi * math.pi, coeff=raw, vacuous=False, note=RICCI_EQUALITY
    )


def bounds_report(
    model: ManifoldModel,
    beta_sq,
    alpha_sq: float | None = None,
    extra_notes: tuple[str, ...] = (),
) -> BoundsReport:
    b = _as_beta(beta_sq)
    notes = list(model.hypothesis_warnings) + list(extra_notes)
    if b == 0:
        notes.append(
            "beta^2 = 0: the curvature and Yamabe bounds are vacuous "
            "(the Yamabe estimate assumes a non-zero monopole class)"
        )
    return BoundsReport(
        beta_sq=b,
        alpha_sq=alpha_sq,
        curvature=curvature_bounds(b),
        einstein=einstein_obstruction(model, b),
        ricci=ricci_bound(model, b),
        notes=tuple(notes),
    )
