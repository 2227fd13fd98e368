"""Catalog of 4-manifold building blocks and their monopole configurations.

Connected sums are tracked through the additive invariants (chi - 2 per
extra summand, tau, b+). Monopole-class configurations are generated from
the catalog rules: a minimal general-type surface contributes the sign
expansion of its first Chern class, each reversed projective plane
contributes an exceptional generator of square -1, and K3 / T^4 / N^3 x S^1
contribute the trivial class. The ambient quadratic space is the reduced
exact model: one Lorentzian plane [[c1^2, 0], [0, -1]] per general-type
block (its Chern class sits at (1, 0)), one diag(-1) per reversed plane,
plus any requested extra orthogonal +-1 summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputDataError, UnsupportedModelError
from .hull import MonopoleConfiguration
from .quadform import CohomologyClass, QuadraticSpace

GENERAL_TYPE_SUMMAND_LIMIT = 4  # catalog rules cover up to four such blocks


@dataclass(frozen=True)
class GeneralType:
    """Minimal complex surface of general type: c1^2 = 2*chi + 3*tau >= 1."""

    c1sq: int
    chi: int
    tau: int
    b_plus: int
    h20_odd: bool = True
    simply_connected: bool = True

    def __post_init__(self) -> None:
        if self.c1sq != 2 * self.chi + 3 * self.tau:
            raise InputDataError(
                f"inconsistent general-type data: c1sq={self.c1sq} but "
                f"2*chi+3*tau={2 * self.chi + 3 * self.tau}"
            )
        if self.c1sq < 1:
            raise InputDataError("general-type surface requires c1sq >= 1")
        if self.b_plus < 2:
            raise InputDataError("general-type surface requires b_plus >= 2")

    label = "general_type"


@dataclass(frozen=True)
class CP2Bar:
    """The reversed projective plane: (chi, tau, b+) = (3, -1, 0)."""

    chi = 3
    tau = -1
    b_plus = 0
    label = "cp2bar"


@dataclass(frozen=True)
class K3:
    chi = 24
    tau = -16
    b_plus = 3
    label = "k3"


@dataclass(frozen=True)
class T4:
    chi = 0
    tau = 0
    b_plus = 3
    label = "t4"


@dataclass(frozen=True)
class ThreeManifoldTimesCircle:
    """N^3 x S^1 for an oriented 3-manifold with first Betti number b1."""

    b1: int = 1

    def __post_init__(self) -> None:
        if self.b1 < 0:
            raise InputDataError("first Betti number must be >= 0")

    @property
    def chi(self) -> int:
        return 0

    @property
    def tau(self) -> int:
        return 0

    @property
    def b_plus(self) -> int:
        return self.b1

    label = "n3xs1"


BlockKind = GeneralType | CP2Bar | K3 | T4 | ThreeManifoldTimesCircle


@dataclass(frozen=True)
class BuildingBlock:
    kind: BlockKind
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise InputDataError("block multiplicity must be >= 1")


@dataclass(frozen=True)
class ManifoldModel:
    """A connected sum with its additive invariants and hypothesis warnings."""

    summands: tuple[BuildingBlock, ...]
    chi: int
    tau: int
    b_plus: int
    hypothesis_warnings: tuple[str, ...] = ()

    @property
    def two_chi_plus_3tau(self) -> int:
        return 2 * self.chi + 3 * self.tau

    @property
    def two_chi_minus_3tau(self) -> int:
        return 2 * self.chi - 3 * self.tau


@dataclass(frozen=True)
class GeneratedConfiguration:
    """A generated monopole configuration with its catalog-predicted value.

    ``known_beta`` records the catalog value of beta^2 where the rules give
    one (a lower bound that the matching curvature estimates promote to an
    equality); it is always re-derivable from the configuration itself.
    """

    cfg: MonopoleConfiguration
    known_beta: Fraction | None
    provenance: str
    ambient_description: str = ""


def _expand(blocks: list[BuildingBlock] | tuple[BuildingBlock, ...]) -> list[BlockKind]:
    out: list[BlockKind] = []
    for b in blocks:
        out.extend([b.kind] * b.multiplicity)
    return out


def connected_sum(blocks: list[BuildingBlock] | tuple[BuildingBlock, ...]) -> ManifoldModel:
    """Connected-sum arithmetic: chi loses 2 per extra summand, tau and b+ add."""
    if not blocks:
        raise InputDataError("connected sum requires at least one building block")
    kinds = _expand(blocks)
    n = len(kinds)
    chi = sum(k.chi for k in kinds) - 2 * (n - 1)
    tau = sum(k.tau for k in kinds)
    b_plus = sum(k.b_plus for k in kinds)
    warnings: list[str] = []
    if b_plus < 2:
        warnings.append(
            f"b_plus = {b_plus} < 2: outside the theory's hypotheses "
            "(chamber structure for b_plus = 1 is not modeled)"
        )
    general = [k for k in kinds if isinstance(k, GeneralType)]
    if len(general) > GENERAL_TYPE_SUMMAND_LIMIT:
        warnings.append(
            f"{len(general)} general-type summands: the catalog rules cover at most "
            f"{GENERAL_TYPE_SUMMAND_LIMIT}"
        )
    if any(not k.h20_odd for k in general):
        warnings.append(
            "a general-type summand has even h^{2,0}: the multi-summand "
            "monopole-class rule assumes h^{2,0} odd"
        )
    return ManifoldModel(
        summands=tuple(blocks),
        chi=chi,
        tau=tau,
        b_plus=b_plus,
        hypothesis_warnings=tuple(warnings),
    )


def monopole_configuration(
    model: ManifoldModel, *, extra_plus: int = 0, extra_minus: int = 0
) -> GeneratedConfiguration:
    """Generate the monopole configuration for a catalog model.

    Raises UnsupportedModelError for block combinations without a known
    generation rule; it never guesses.
    """
    if extra_plus < 0 or extra_minus < 0:
        raise InputDataError("ambient extension counts must be >= 0")
    kinds = _expand(model.summands)
    general = [k for k in kinds if isinstance(k, GeneralType)]
    cp2bars = [k for k in kinds if isinstance(k, CP2Bar)]
    k3s = [k for k in kinds if isinstance(k, K3)]
    t4s = [k for k in kinds if isinstance(k, T4)]
    circles = [k for k in kinds if isinstance(k, ThreeManifoldTimesCircle)]

    extras = [Fraction(1)] * extra_plus + [Fraction(-1)] * extra_minus
    extra_desc = f" + {extra_plus} extra(+1) + {extra_minus} extra(-1)" if extras else ""

    if general and not (k3s or t4s or circles):
        diag: list[Fraction] = []
        for g in general:
            diag.extend([Fraction(g.c1sq), Fraction(-1)])
        diag.extend([Fraction(-1)] * len(cp2bars))
        diag.extend(extras)
        space = QuadraticSpace.diagonal(diag)
        dim = space.dim
        generators = []
        for i in range(len(general)):
            coords = [Fraction(0)] * dim
            coords[2 * i] = Fraction(1)
            generators.append(CohomologyClass(coords))
        offset = 2 * len(general)
        for j in range(len(cp2bars)):
            coords = [Fraction(0)] * dim
            coords[offset + j] = Fraction(1)
            generators.append(CohomologyClass(coords))
        cfg = MonopoleConfiguration.zonotope(space, generators)
        known = (
            Fraction(sum(g.c1sq for g in general))
            if len(general) <= GENERAL_TYPE_SUMMAND_LIMIT
            else None
        )
        names = " # ".join(
            [f"X{i + 1}(c1sq={g.c1sq})" for i, g in enumerate(general)]
            + ([f"{len(cp2bars)} x CP2bar"] if cp2bars else [])
        )
        provenance = (
            "sign expansion of the Chern classes of the general-type summands "
            f"plus exceptional generators: {names}"
        )
        ambient = (
            " + ".join([f"[[{g.c1sq},0],[0,-1]]" for g in general])
            + (f" + diag(-1)^{len(cp2bars)}" if cp2bars else "")
            + extra_desc
        )
        return GeneratedConfiguration(
            cfg=cfg, known_beta=known, provenance=provenance, ambient_description=ambient
        )

    if len(kinds) == 1 and (k3s or t4s):
        space = QuadraticSpace.diagonal([Fraction(1), Fraction(-1)] + extras)
        cfg = MonopoleConfiguration.zonotope(space, [])
        name = "K3" if k3s else "T^4"
        return GeneratedConfiguration(
            cfg=cfg,
            known_beta=Fraction(0),
            provenance=f"{name}: only the trivial monopole class is used",
            ambient_description="diag(1,-1) (reduced)" + extra_desc,
        )

    if len(kinds) == 1 and circles:
        b1 = circles[0].b1
        dim = max(b1, 1)
        space = QuadraticSpace.diagonal([Fraction(0)] * dim + extras)
        if b1 >= 1:
            coords = [Fraction(0)] * space.dim
            coords[0] = Fraction(1)
            cfg = MonopoleConfiguration.zonotope(space, [CohomologyClass(coords)])
            prov = (
                "N^3 x S^1: monopole classes lie in the isotropic image of the "
                "3-manifold cohomology; beta^2 = 0"
            )
        else:
            cfg = MonopoleConfiguration.zonotope(space, [])
            prov = "N^3 x S^1 with b1 = 0: trivial configuration; beta^2 = 0"
        return GeneratedConfiguration(
            cfg=cfg,
            known_beta=Fraction(0),
            provenance=prov,
            ambient_description=f"diag(0)^{dim} (isotropic image)" + extra_desc,
        )

    raise UnsupportedModelError(
        "no monopole-class generation rule for this block combination: "
        + ", ".join(k.label for k in kinds)
    )
