"""Indefinite symmetric bilinear forms on finite-dimensional rational spaces.

Models the second cohomology of a compact oriented 4-manifold with its
intersection pairing: a QuadraticSpace is a dimension together with an exact
rational Gram matrix, classes are coordinate vectors, and the structural
operations (pairing, Sylvester decomposition, Q-orthogonal projection) all
run in exact rational arithmetic. Floats appear only in the normalized
Sylvester basis used by the numeric optimizers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ._ratlinalg import (
    Mat,
    Vec,
    dot,
    invert,
    mat_from_rows,
    mat_vec,
    rank,
    solve,
    symmetric_diagonalize,
    to_fraction,
    transpose,
)
from .errors import DegenerateSubspaceError, InputDataError

# float-mode structural residuals are checked against this
FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class CohomologyClass:
    """A coordinate vector in a chosen basis of a quadratic space."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable) -> None:
        object.__setattr__(self, "coords", tuple(to_fraction(c) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def scaled(self, factor) -> "CohomologyClass":
        f = to_fraction(factor)
        return CohomologyClass(c * f for c in self.coords)

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass(-c for c in self.coords)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if self.dim != other.dim:
            raise InputDataError("cannot add classes of different dimension")
        return CohomologyClass(a + b for a, b in zip(self.coords, other.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_float(self) -> np.ndarray:
        return np.array([float(c) for c in self.coords])


@dataclass(frozen=True)
class Signature:
    """Inertia counts of a symmetric form: b_plus, b_minus and the radical."""

    positive: int
    negative: int
    null: int

    @property
    def dim(self) -> int:
        return self.positive + self.negative + self.null

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.null)


class QuadraticSpace:
    """A real vector space of dimension >= 1 with an exact symmetric Gram matrix."""

    def __init__(self, gram: Sequence[Sequence]) -> None:
        g = mat_from_rows(gram)
        n = len(g)
        if n < 1:
            raise InputDataError("quadratic space dimension must be >= 1")
        for row in g:
            if len(row) != n:
                raise InputDataError("gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j] != g[j][i]:
                    raise InputDataError(
                        f"gram matrix is not symmetric at ({i},{j}): {g[i][j]} != {g[j][i]}"
                    )
        self._gram: Mat = g
        self._dim = n
        self._sylvester: SylvesterBasis | None = None

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def gram(self) -> Mat:
        return [list(row) for row in self._gram]

    def gram_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(row) for row in self._gram)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "QuadraticSpace":
        es = [to_fraction(e) for e in entries]
        n = len(es)
        return cls([[es[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def direct_sum(cls, *spaces: "QuadraticSpace") -> "QuadraticSpace":
        dims = [s.dim for s in spaces]
        total = sum(dims)
        g = [[Fraction(0)] * total for _ in range(total)]
        off = 0
        for s in spaces:
            for i in range(s.dim):
                for j in range(s.dim):
                    g[off + i][off + j] = s._gram[i][j]
            off += s.dim
        return cls(g)

    def gram_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self._gram])

    @property
    def signature(self) -> Signature:
        return signature_decompose(self).signature

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadraticSpace) and self._gram == other._gram

    def __hash__(self) -> int:
        return hash(self.gram_rows())

    def __repr__(self) -> str:
        return f"QuadraticSpace(dim={self._dim})"


@dataclass(frozen=True)
class SylvesterBasis:
    """Basis columns diagonalizing the form, positives first, then negatives,
    then radical directions. The exact diagonal keeps signed rationals (no
    square roots); ``normalized_float`` rescales to +-1/0 in float."""

    basis: tuple[tuple[Fraction, ...], ...]  # rows; column k is a basis vector
    diagonal: tuple[Fraction, ...]
    signature: Signature

    def normalized_float(self) -> np.ndarray:
        b = np.array([[float(x) for x in row] for row in self.basis])
        scale = np.array(
            [1.0 / np.sqrt(abs(float(d))) if d != 0 else 1.0 for d in self.diagonal]
        )
        return b * scale


@dataclass(frozen=True)
class Subspace:
    """A subspace given by a dim x p basis matrix of full column rank."""

    basis: tuple[tuple[Fraction, ...], ...]  # rows; p columns

    def __init__(self, basis: Sequence[Sequence]) -> None:
        rows = mat_from_rows(basis)
        if rows and rows[0]:
            cols = transpose(rows)
            if rank(cols) != len(cols):
                raise InputDataError("subspace basis columns are linearly dependent")
        object.__setattr__(self, "basis", tuple(tuple(r) for r in rows))

    @classmethod
    def spanned_by(cls, vectors: Sequence[CohomologyClass | Sequence]) -> "Subspace":
        cols = [
            list(v.coords) if isinstance(v, CohomologyClass) else [to_fraction(x) for x in v]
            for v in vectors
        ]
        return cls(transpose(cols))

    @property
    def ambient_dim(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis[0]) if self.basis and self.basis[0] else 0

    def columns(self) -> list[Vec]:
        return [list(col) for col in zip(*self.basis)] if self.rank else []

    def as_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.basis])


def _check_dim(space: QuadraticSpace, a: CohomologyClass) -> None:
    if a.dim != space.dim:
        raise InputDataError(
            f"class has dimension {a.dim}, space has dimension {space.dim}"
        )


def pairing(space: QuadraticSpace, a: CohomologyClass, b: CohomologyClass) -> Fraction:
    """Exact intersection pairing a^T . gram . b; symmetric in its arguments."""
    _check_dim(space, a)
    _check_dim(space, b)
    gb = mat_vec(space._gram, list(b.coords))
    return dot(a.coords, gb)


def self_pairing(space: QuadraticSpace, a: CohomologyClass) -> Fraction:
    return pairing(space, a, a)


def signature_decompose(space: QuadraticSpace) -> SylvesterBasis:
    """Exact Sylvester reduction by symmetric Gaussian congruence.

    No square roots are taken: the reduced diagonal holds signed rationals
    and the signature is read off their signs. Degenerate forms are fine and
    simply report null > 0.
    """
    if space._sylvester is not None:
        return space._sylvester
    basis, diag = symmetric_diagonalize(space._gram)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    nul = len(diag) - pos - neg
    result = SylvesterBasis(
        basis=tuple(tuple(row) for row in basis),
        diagonal=tuple(diag),
        signature=Signature(pos, neg, nul),
    )
    space._sylvester = result
    return result


def restricted_gram(space: QuadraticSpace, h: Subspace) -> Mat:
    """B^T . gram . B for the subspace basis B."""
    if h.ambient_dim != space.dim:
        raise InputDataError("subspace lives in a different ambient dimension")
    b = [list(row) for row in h.basis]
    gb = [mat_vec(space._gram, col) for col in zip(*b)]  # list of G*column
    cols = list(zip(*b))
    return [[dot(cols[i], gb[j]) for j in range(len(gb))] for i in range(len(cols))]


def project_onto(space: QuadraticSpace, a: CohomologyClass, h: Subspace) -> CohomologyClass:
    """Q-orthogonal projection of a into the subspace, exactly.

    Computed as B (B^T G B)^{-1} B^T G a; requires the restricted Gram to be
    nondegenerate, otherwise DegenerateSubspaceError is raised.
    """
    _check_dim(space, a)
    if h.ambient_dim != space.dim:
        raise InputDataError("subspace lives in a different ambient dimension")
    if h.rank == 0:
        return CohomologyClass([Fraction(0)] * space.dim)
    r = restricted_gram(space, h)
    ga = mat_vec(space._gram, list(a.coords))
    cols = h.columns()
    rhs = [dot(col, ga) for col in cols]
    x = solve(r, rhs)
    if x is None:
        raise DegenerateSubspaceError(
            "restricted Gram is singular; projection is not defined"
        )
    out = [sum((cols[j][i] * x[j] for j in range(len(cols))), Fraction(0)) for i in range(space.dim)]
    return CohomologyClass(out)


def restricted_gram_inverse(space: QuadraticSpace, h: Subspace) -> Mat:
    r = restricted_gram(space, h)
    inv = invert(r)
    if inv is None:
        raise DegenerateSubspaceError("restricted Gram is singular")
    return inv
