"""Maximal positive subspaces and the alpha^2 minimax invariant.

alpha^2 is the infimum, over all maximal subspaces H on which the form is
positive definite, of the worst projected self-intersection max_a (a+)^2 of
the configuration. The open Grassmannian of such subspaces is covered by a
single graph chart over a fixed Sylvester reference splitting: H is the
graph of a b- x b+ matrix T with spectral norm < 1. The minimax is then
attacked by seeded multi-start derivative-free descent in T, reparameterized
radially through tanh so iterates can approach but never leave the chart.

The infimum need not be attained (the Grassmannian is open); runs that
converge towards the chart boundary are reported with ``boundary_flag``
rather than treated as failures. Configurations whose span carries a
negative-semidefinite form short-circuit to the exact value 0, matching the
zero-equivalence of alpha^2 and beta^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize

from ._ratlinalg import (
    dot,
    independent_columns,
    invert,
    is_negative_semidefinite,
    kernel_basis,
    mat_vec,
    symmetric_diagonalize,
)
from .errors import ChartBoundaryError, InputDataError, ResourceCapError
from .hull import MonopoleConfiguration, _sign_patterns, pattern_string
from .quadform import CohomologyClass, QuadraticSpace, signature_decompose

DEFAULT_STARTS = 20
BOUNDARY_TOL = 1e-6
PD_TOL = 1e-10
_ZONOTOPE_VERTEX_CAP = 20

_sign_matrix_cache: dict[int, np.ndarray] = {}


def _sign_matrix(m: int) -> np.ndarray:
    if m not in _sign_matrix_cache:
        if m > _ZONOTOPE_VERTEX_CAP:
            raise ResourceCapError(
                f"zonotope worst-case enumeration capped at {_ZONOTOPE_VERTEX_CAP} generators"
            )
        _sign_matrix_cache[m] = np.array(_sign_patterns(m), dtype=float)
    return _sign_matrix_cache[m]


@dataclass(frozen=True)
class PositiveSubspace:
    """A maximal subspace on which the form is positive definite.

    The basis is a dim x b+ float matrix; ``graph_map`` records the chart
    matrix T when the subspace was built via the graph chart.
    """

    space: QuadraticSpace
    basis: np.ndarray
    graph_map: np.ndarray | None = None

    def __post_init__(self) -> None:
        sig = self.space.signature
        basis = np.asarray(self.basis, dtype=float)
        object.__setattr__(self, "basis", basis)
        if basis.ndim != 2 or basis.shape[0] != self.space.dim:
            raise InputDataError("subspace basis must be a dim x b_plus matrix")
        if basis.shape[1] != sig.positive:
            raise InputDataError(
                f"positive subspace must be maximal: expected {sig.positive} columns, "
                f"got {basis.shape[1]}"
            )
        if basis.shape[1]:
            r = basis.T @ self.space.gram_float() @ basis
            if np.linalg.eigvalsh((r + r.T) / 2).min() <= PD_TOL:
                raise InputDataError("restricted Gram is not positive definite")

    def restricted_gram(self) -> np.ndarray:
        return self.basis.T @ self.space.gram_float() @ self.basis


@dataclass(frozen=True)
class AlphaResult:
    """Outcome of the alpha^2 minimization.

    ``trace`` is the non-increasing best-so-far curve over all objective
    evaluations. ``boundary_flag`` marks runs whose final iterate pressed
    against the chart boundary (infimum not attained); in that case
    ``achieving_subspace`` may be None when only a limiting sequence exists.
    """

    value: float
    achieving_subspace: PositiveSubspace | None
    boundary_flag: bool
    trace: tuple[float, ...]
    classes_attaining: tuple[int, ...]
    note: str | None = None


def subspace_from_graph(space: QuadraticSpace, t) -> PositiveSubspace:
    """The maximal positive subspace that is the graph of T over the
    reference Sylvester splitting: columns of P + N T in ambient coordinates."""
    sig = signature_decompose(space)
    if sig.signature.null:
        raise InputDataError("graph chart requires a nondegenerate form")
    b_plus, b_minus = sig.signature.positive, sig.signature.negative
    t = np.asarray(t, dtype=float).reshape(b_minus, b_plus)
    if b_plus and b_minus:
        norm = np.linalg.norm(t, 2)
        if norm >= 1.0:
            raise ChartBoundaryError(
                f"graph matrix has spectral norm {norm:.6g} >= 1; outside the chart"
            )
    s = sig.normalized_float()
    p, n = s[:, :b_plus], s[:, b_plus : b_plus + b_minus]
    basis = p + n @ t
    return PositiveSubspace(space=space, basis=basis, graph_map=t)


def _worst_case_from_basis(
    cfg: MonopoleConfiguration, basis: np.ndarray, gram_f: np.ndarray
) -> tuple[float, np.ndarray]:
    """Max over the configuration of the projected self-intersection, plus
    the per-class value vector."""
    p = basis.shape[1]
    n_items = 2 ** len(cfg.generators) if cfg.is_zonotope else len(cfg.classes)
    if p == 0:
        return 0.0, np.zeros(n_items)
    c = basis.T @ gram_f
    r = c @ basis
    if cfg.is_zonotope:
        gens = np.array([[float(x) for x in g.coords] for g in cfg.generators])
        m = len(cfg.generators)
        if m == 0:
            return 0.0, np.zeros(1)
        y = c @ gens.T  # p x m
        mm = y.T @ np.linalg.solve(r, y)
        e = _sign_matrix(m)
        vals = np.einsum("ij,jk,ik->i", e, mm, e)
    else:
        a = np.array([[float(x) for x in cl.coords] for cl in cfg.classes])
        y = c @ a.T  # p x n
        vals = (y * np.linalg.solve(r, y)).sum(axis=0)
    return float(vals.max()), vals


def worst_case(cfg: MonopoleConfiguration, h: PositiveSubspace) -> tuple[float, tuple[int, ...]]:
    """Inner maximization: the largest (a+)^2 over the configuration, with
    every attaining class index.

    In zonotope mode the projected form is positive semidefinite, so its
    maximum over the sign box sits at a vertex; all +-1 patterns are
    enumerated and indexed canonically (bit j of the index flips generator j).
    """
    if cfg.is_empty:
        raise InputDataError("worst_case requires a non-empty configuration")
    if h.space.dim != cfg.space.dim:
        raise InputDataError("subspace and configuration live in different spaces")
    value, vals = _worst_case_from_basis(cfg, h.basis, cfg.space.gram_float())
    tol = 1e-9 * max(1.0, abs(value))
    attaining = tuple(int(i) for i in np.nonzero(vals >= value - tol)[0])
    return value, attaining


def attaining_labels(cfg: MonopoleConfiguration, indices: tuple[int, ...]) -> tuple[str, ...] | tuple[int, ...]:
    """Human-readable labels for attaining classes (sign patterns in zonotope mode)."""
    if not cfg.is_zonotope:
        return indices
    m = len(cfg.generators)
    patterns = _sign_patterns(m)
    return tuple(pattern_string(patterns[i]) for i in indices)


def _radial_tanh(z: np.ndarray) -> np.ndarray:
    """Map an unconstrained matrix into the open spectral-norm unit ball."""
    if z.size == 0:
        return z
    norm = np.linalg.norm(z, 2)
    if norm == 0.0:
        return z
    return (np.tanh(norm) / norm) * z


def _nsd_span_result(cfg: MonopoleConfiguration, span_gram, note: str) -> AlphaResult:
    """Exact value 0 by the zero-equivalence of alpha^2 and beta^2.

    When the span is negative definite and the ambient form nondegenerate, a
    maximal positive subspace orthogonal to the span attains the value; with
    isotropic span directions only a limiting sequence exists.
    """
    n_items = 2 ** len(cfg.generators) if cfg.is_zonotope else len(cfg.classes)
    attaining = tuple(range(n_items))
    sig = cfg.space.signature
    nd = invert(span_gram) is not None if span_gram else True
    if sig.null == 0 and nd:
        vectors = cfg.span_vectors()
        span_rows = [list(v.coords) for v in vectors]
        mg = [mat_vec(cfg.space._gram, row) for row in span_rows]
        if not mg:
            mg = [[Fraction(0)] * cfg.space.dim]
        perp = kernel_basis(mg)
        # diagonalize the form restricted to the orthocomplement
        k = len(perp)
        rg = [
            [dot(perp[i], mat_vec(cfg.space._gram, perp[j])) for j in range(k)]
            for i in range(k)
        ]
        b, d = symmetric_diagonalize(rg)
        pos_cols = [j for j in range(k) if d[j] > 0]
        if len(pos_cols) == sig.positive:
            cols = []
            for j in pos_cols:
                vec = [
                    sum((b[i][j] * perp[i][c] for i in range(k)), Fraction(0))
                    for c in range(cfg.space.dim)
                ]
                scale = 1.0 / np.sqrt(float(d[j]))
                cols.append([float(x) * scale for x in vec])
            basis = np.array(cols).T
            h = PositiveSubspace(space=cfg.space, basis=basis)
            return AlphaResult(
                value=0.0,
                achieving_subspace=h,
                boundary_flag=False,
                trace=(0.0,),
                classes_attaining=attaining,
                note=note,
            )
    return AlphaResult(
        value=0.0,
        achieving_subspace=None,
        boundary_flag=True,
        trace=(0.0,),
        classes_attaining=attaining,
        note=note + "; infimum realized only by a limiting sequence",
    )


def _quotient_by_radical(cfg: MonopoleConfiguration) -> MonopoleConfiguration:
    """Push the configuration to the radical quotient, where the induced form
    is nondegenerate and alpha^2 is unchanged."""
    space = cfg.space
    syl = signature_decompose(space)
    sig = syl.signature
    keep = sig.positive + sig.negative
    binv = invert([list(row) for row in syl.basis])
    q_space = QuadraticSpace.diagonal(list(syl.diagonal[:keep]))

    def push(v: CohomologyClass) -> CohomologyClass:
        x = mat_vec(binv, list(v.coords))
        return CohomologyClass(x[:keep])

    if cfg.is_zonotope:
        return MonopoleConfiguration.zonotope(q_space, [push(g) for g in cfg.generators])
    return MonopoleConfiguration(
        space=q_space, classes=tuple(push(c) for c in cfg.classes), generators=None
    )


def alpha_squared(
    cfg: MonopoleConfiguration,
    *,
    starts: int = DEFAULT_STARTS,
    seed: int = 0,
    maxiter: int | None = None,
    fatol: float = 1e-11,
    xatol: float = 1e-9,
    boundary_tol: float = BOUNDARY_TOL,
) -> AlphaResult:
    """Minimize the worst projected self-intersection over the graph chart.

    Deterministic for a fixed seed: the multi-start initial points come from
    a seeded generator (the first start is the chart center T = 0), each
    start runs Nelder-Mead twice (the second leg restarts the simplex at the
    incumbent), and ties between starts resolve to the lowest start index.
    """
    if cfg.is_empty:
        return AlphaResult(
            value=0.0,
            achieving_subspace=None,
            boundary_flag=False,
            trace=(0.0,),
            classes_attaining=(),
            note="empty configuration",
        )

    vectors = cfg.span_vectors()
    rows = [list(v.coords) for v in vectors]
    idx = independent_columns(rows)
    span_rows = [rows[i] for i in idx]
    gcols = [mat_vec(cfg.space._gram, r) for r in span_rows]
    span_gram = [[dot(span_rows[i], gcols[j]) for j in range(len(idx))] for i in range(len(idx))]
    if is_negative_semidefinite(span_gram):
        return _nsd_span_result(
            cfg, span_gram, note="span form negative semidefinite: alpha^2 = 0 exactly"
        )

    sig = cfg.space.signature
    if sig.null:
        inner = alpha_squared(
            _quotient_by_radical(cfg),
            starts=starts,
            seed=seed,
            maxiter=maxiter,
            fatol=fatol,
            xatol=xatol,
            boundary_tol=boundary_tol,
        )
        note = "computed in the radical quotient"
        if inner.note:
            note += "; " + inner.note
        return AlphaResult(
            value=inner.value,
            achieving_subspace=inner.achieving_subspace,
            boundary_flag=inner.boundary_flag,
            trace=inner.trace,
            classes_attaining=inner.classes_attaining,
            note=note,
        )

    gram_f = cfg.space.gram_float()
    syl = signature_decompose(cfg.space)
    s = syl.normalized_float()
    b_plus, b_minus = sig.positive, sig.negative
    p_ref, n_ref = s[:, :b_plus], s[:, b_plus : b_plus + b_minus]

    if b_minus == 0 or b_plus == 0:
        h = PositiveSubspace(space=cfg.space, basis=p_ref, graph_map=np.zeros((0, b_plus)))
        value, attaining = worst_case(cfg, h)
        return AlphaResult(
            value=value,
            achieving_subspace=h,
            boundary_flag=False,
            trace=(value,),
            classes_attaining=attaining,
            note="the Grassmannian is a single point",
        )

    nvars = b_plus * b_minus
    trace: list[float] = []

    def objective(z: np.ndarray) -> float:
        t = _radial_tanh(z.reshape(b_minus, b_plus))
        basis = p_ref + n_ref @ t
        val, _ = _worst_case_from_basis(cfg, basis, gram_f)
        trace.append(val if not trace else min(trace[-1], val))
        return val

    rng = np.random.default_rng(seed)
    options = {
        "maxiter": maxiter or 400 * nvars,
        "xatol": xatol,
        "fatol": fatol,
    }
    best_val = np.inf
    best_z = np.zeros(nvars)
    for start in range(starts):
        z0 = np.zeros(nvars) if start == 0 else rng.normal(scale=0.7, size=nvars)
        res = minimize(objective, z0, method="Nelder-Mead", options=options)
        res = minimize(objective, res.x, method="Nelder-Mead", options=options)
        if res.fun < best_val:
            best_val = float(res.fun)
            best_z = res.x
    t_final = _radial_tanh(best_z.reshape(b_minus, b_plus))
    h = PositiveSubspace(space=cfg.space, basis=p_ref + n_ref @ t_final, graph_map=t_final)
    value, attaining = worst_case(cfg, h)
    boundary = bool(np.linalg.norm(t_final, 2) > 1.0 - boundary_tol)
    return AlphaResult(
        value=value,
        achieving_subspace=h,
        boundary_flag=boundary,
        trace=tuple(trace),
        classes_attaining=attaining,
    )
