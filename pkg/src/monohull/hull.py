"""Convex-hull machinery for monopole-class configurations and the beta^2 invariant.

beta^2 is the exact maximum of the (indefinite) self-intersection form over
the convex hull of a finite centrally symmetric configuration. Two storage
modes are supported:

* Explicit -- an arbitrary finite symmetric list of classes. The hull is a
  polytope; the maximum is found by enumerating vertex subsets, solving the
  critical-point system of the quadratic on each affine hull, and keeping
  feasible candidates whose tangential Hessian is negative definite (faces
  with a singular critical system are covered by their subfaces, which the
  enumeration also visits).
* Zonotope -- sign expansions sum(eps_i u_i) over independent eps_i = +-1.
  The hull is the zonotope {sum(s_i u_i) : s in [-1,1]^m}, so the maximum
  reduces to box-constrained maximization of the generator Gram form.

Everything on the exact path runs in rational arithmetic; floats appear only
in the Monte-Carlo oracle and in the heuristic fallback used above the caps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ._ratlinalg import (
    Mat,
    Vec,
    dot,
    feasible_convex_combination,
    invert,
    is_negative_semidefinite,
    mat_vec,
    neg_def_solve,
)
from .errors import InputDataError, ResourceCapError
from .quadform import CohomologyClass, QuadraticSpace, pairing

DEFAULT_GENERATOR_CAP = 14
DEFAULT_VERTEX_CAP = 12
DEFAULT_ORACLE_SAMPLES = 100_000
DEFAULT_ASCENT_STARTS = 100

_FR0 = Fraction(0)
_FR1 = Fraction(1)


@dataclass(frozen=True)
class MonopoleConfiguration:
    """A finite centrally symmetric set of classes in a quadratic space.

    ``classes`` holds the explicit representation; ``generators`` holds the
    zonotope representation (all independent sign choices of the generators).
    Exactly one of the two is set, except for the empty configuration, which
    is the explicit representation with no classes.
    """

    space: QuadraticSpace
    classes: tuple[CohomologyClass, ...] | None
    generators: tuple[CohomologyClass, ...] | None

    @classmethod
    def explicit(
        cls,
        space: QuadraticSpace,
        classes: Iterable,
        *,
        allow_asymmetric: bool = False,
    ) -> "MonopoleConfiguration":
        items = [c if isinstance(c, CohomologyClass) else CohomologyClass(c) for c in classes]
        for c in items:
            if c.dim != space.dim:
                raise InputDataError(
                    f"class has dimension {c.dim}, space has dimension {space.dim}"
                )
        seen = {c.coords for c in items}
        missing = [c for c in items if (-c).coords not in seen]
        if missing:
            if not allow_asymmetric:
                raise InputDataError(
                    "configuration not centrally symmetric: "
                    f"missing negative of {tuple(str(x) for x in missing[0].coords)}"
                )
            for c in list(items):
                if (-c).coords not in seen:
                    items.append(-c)
                    seen.add((-c).coords)
        return cls(space=space, classes=tuple(items), generators=None)

    @classmethod
    def zonotope(cls, space: QuadraticSpace, generators: Iterable) -> "MonopoleConfiguration":
        gens = [g if isinstance(g, CohomologyClass) else CohomologyClass(g) for g in generators]
        for g in gens:
            if g.dim != space.dim:
                raise InputDataError(
                    f"generator has dimension {g.dim}, space has dimension {space.dim}"
                )
        return cls(space=space, classes=None, generators=tuple(gens))

    @classmethod
    def empty(cls, space: QuadraticSpace) -> "MonopoleConfiguration":
        return cls(space=space, classes=(), generators=None)

    @property
    def is_zonotope(self) -> bool:
        return self.generators is not None

    @property
    def is_empty(self) -> bool:
        return self.classes is not None and len(self.classes) == 0

    @property
    def class_count(self) -> int:
        if self.is_zonotope:
            return 2 ** len(self.generators)
        return len(self.classes)

    def generator_gram(self) -> Mat:
        """Pairwise pairing matrix of the zonotope generators."""
        gens = self.generators
        gcols = [mat_vec(self.space._gram, list(g.coords)) for g in gens]
        return [[dot(gens[i].coords, gcols[j]) for j in range(len(gens))] for i in range(len(gens))]

    def span_vectors(self) -> list[CohomologyClass]:
        return list(self.generators) if self.is_zonotope else list(self.classes)

    def span_gram(self) -> Mat:
        """Pairwise pairing matrix of a spanning set of the configuration."""
        vs = self.span_vectors()
        gcols = [mat_vec(self.space._gram, list(v.coords)) for v in vs]
        return [[dot(vs[i].coords, gcols[j]) for j in range(len(vs))] for i in range(len(vs))]

    def expand(self, cap: int = 20) -> "MonopoleConfiguration":
        """Expanded explicit form of a zonotope configuration."""
        if not self.is_zonotope:
            return self
        m = len(self.generators)
        if m > cap:
            raise ResourceCapError(f"expanding {m} generators exceeds cap {cap}")
        out = []
        for signs in _sign_patterns(m):
            coords = [_FR0] * self.space.dim
            for s, g in zip(signs, self.generators):
                for i, c in enumerate(g.coords):
                    coords[i] += s * c
            out.append(CohomologyClass(coords))
        return MonopoleConfiguration(space=self.space, classes=tuple(out), generators=None)

    def scaled(self, factor) -> "MonopoleConfiguration":
        if self.is_zonotope:
            return MonopoleConfiguration(
                space=self.space,
                classes=None,
                generators=tuple(g.scaled(factor) for g in self.generators),
            )
        return MonopoleConfiguration(
            space=self.space,
            classes=tuple(c.scaled(factor) for c in self.classes),
            generators=None,
        )


@dataclass(frozen=True)
class HullWitness:
    """A hull point with a convex-combination certificate.

    Labels in ``barycentric`` are class indices (explicit mode) or vertex
    sign-pattern strings such as "+-+" (zonotope mode).
    """

    point: CohomologyClass
    barycentric: tuple[tuple[int | str, Fraction], ...]
    value: Fraction


@dataclass(frozen=True)
class BetaResult:
    """Result of a beta^2 computation.

    ``value`` is an exact rational in exact mode and a float in heuristic
    mode. ``oracle_gap`` (heuristic mode only) is the gap between the
    reported value and the independent Monte-Carlo lower bound.
    ``attaining_vertices`` lists every configuration vertex whose
    self-intersection equals the maximum (often empty: the maximum of an
    indefinite form typically sits on a face interior).
    """

    value: Fraction | float
    witness: HullWitness | None
    mode: str  # "exact" | "heuristic"
    oracle_gap: float | None = None
    attaining_vertices: tuple = ()


# ---------------------------------------------------------------------------
# sign patterns and zonotope helpers


def _sign_patterns(m: int) -> list[tuple[int, ...]]:
    """Canonical enumeration of {+1,-1}^m: index bit j flips generator j."""
    out = []
    for idx in range(2**m):
        out.append(tuple(1 if not (idx >> j) & 1 else -1 for j in range(m)))
    return out


def pattern_string(signs: Sequence) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def _staircase_decomposition(s: Sequence[Fraction]) -> list[tuple[tuple[int, ...], Fraction]]:
    """Write s in [-1,1]^m as an exact convex combination of <= m+1 sign vectors."""
    m = len(s)
    lam = [(1 + si) / 2 for si in s]
    order = sorted(range(m), key=lambda i: (-lam[i], i))
    levels = [_FR1] + [lam[i] for i in order] + [_FR0]
    out: list[tuple[tuple[int, ...], Fraction]] = []
    for j in range(m + 1):
        w = levels[j] - levels[j + 1]
        if w == 0:
            continue
        plus = set(order[:j])
        out.append((tuple(1 if i in plus else -1 for i in range(m)), w))
    return out


def _combine_generators(gens: Sequence[CohomologyClass], s: Sequence[Fraction], dim: int) -> CohomologyClass:
    coords = [_FR0] * dim
    for si, g in zip(s, gens):
        if si != 0:
            for i, c in enumerate(g.coords):
                coords[i] += si * c
    return CohomologyClass(coords)


# ---------------------------------------------------------------------------
# exact box maximization (zonotope kernel)


def _vertex_sweep(u: Mat) -> tuple[Fraction, list[tuple[int, ...]], tuple[int, ...]]:
    """Exact max of s^T U s over {+-1}^m by a Gray-code walk.

    Returns (max value, all attaining sign patterns sorted canonically,
    lexicographically smallest attaining pattern).
    """
    m = len(u)
    if m == 0:
        return _FR0, [()], ()
    sigma = [1] * m
    w = [sum((u[i][j] for j in range(m)), _FR0) for i in range(m)]
    val = sum((w[i] for i in range(m)), _FR0)
    best = val
    attaining = [tuple(sigma)]
    for k in range(1, 2**m):
        i = (k & -k).bit_length() - 1  # index flipped by the Gray-code step
        val = val - 4 * sigma[i] * w[i] + 4 * u[i][i]
        si = sigma[i]
        for r in range(m):
            w[r] -= 2 * si * u[r][i]
        sigma[i] = -si
        if val > best:
            best = val
            attaining = [tuple(sigma)]
        elif val == best:
            attaining.append(tuple(sigma))
    attaining = sorted(set(attaining))
    return best, attaining, attaining[0]


def _box_face_candidates(u: Mat, free: tuple[int, ...]) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
    """Interior critical points on the faces with the given free coordinates.

    Only faces whose free-block Hessian is negative definite can carry an
    interior maximum with an invertible critical system; singular faces are
    covered by their subfaces (one more coordinate fixed), which the caller
    enumerates anyway.
    """
    m = len(u)
    fixed = [i for i in range(m) if i not in free]
    f, c = len(free), len(fixed)
    uff = [[u[i][j] for j in free] for i in free]
    # negative-definiteness gate doubles as the factorization for the solves
    if neg_def_solve(uff, [_FR0] * f) is None:
        return []
    uff_inv = invert(uff)
    ufc = [[u[i][j] for j in fixed] for i in free]
    ucf = [[u[i][j] for j in free] for i in fixed]
    ucc = [[u[i][j] for j in fixed] for i in fixed]
    # W maps fixed signs to the free critical point; S gives its value
    w_map = [[-sum((uff_inv[a][b] * ufc[b][j] for b in range(f)), _FR0) for j in range(c)] for a in range(f)]
    s_mat = [
        [
            ucc[i][j] + sum((ucf[i][b] * w_map[b][j] for b in range(f)), _FR0)
            for j in range(c)
        ]
        for i in range(c)
    ]
    out = []
    for sigma in itertools.product((1, -1), repeat=c):
        x = [sum((w_map[a][j] * sigma[j] for j in range(c)), _FR0) for a in range(f)]
        if any(not (-1 < xi < 1) for xi in x):
            continue
        val = sum((sigma[i] * s_mat[i][j] * sigma[j] for i in range(c) for j in range(c)), _FR0)
        pattern = [_FR0] * m
        for a, i in enumerate(free):
            pattern[i] = x[a]
        for j, i in enumerate(fixed):
            pattern[i] = Fraction(sigma[j])
        out.append((val, tuple(pattern)))
    return out


def max_quadratic_on_box(
    generator_gram: Sequence[Sequence], cap: int = DEFAULT_GENERATOR_CAP
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact maximum of s^T U s over the box [-1,1]^m.

    Enumerates all 3^m face patterns (each coordinate fixed at -1, +1, or
    free): vertices via a Gray-code sweep, faces via their critical-point
    systems. Ties are broken by the lexicographically smallest pattern.
    """
    u = [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in generator_gram]
    m = len(u)
    for row in u:
        if len(row) != m:
            raise InputDataError("generator Gram matrix must be square")
    for i in range(m):
        for j in range(i + 1, m):
            if u[i][j] != u[j][i]:
                raise InputDataError("generator Gram matrix must be symmetric")
    if m > cap:
        raise ResourceCapError(
            f"{m} generators exceed the exact enumeration cap {cap}; "
            "enable heuristics or raise the cap"
        )
    best, _, best_pattern = _vertex_sweep(u)
    best_full: tuple[Fraction, ...] = tuple(Fraction(s) for s in best_pattern)
    for f in range(1, m + 1):
        for free in itertools.combinations(range(m), f):
            for val, pattern in _box_face_candidates(u, free):
                if val > best or (val == best and pattern < best_full):
                    best, best_full = val, pattern
    return best, best_full


# ---------------------------------------------------------------------------
# extreme point filtering (explicit mode)


def _unique_points(classes: Sequence[CohomologyClass]) -> tuple[list[int], dict[int, int]]:
    """First-occurrence indices of distinct points, plus duplicate map."""
    seen: dict[tuple, int] = {}
    uniques: list[int] = []
    dup: dict[int, int] = {}
    for i, c in enumerate(classes):
        if c.coords in seen:
            dup[i] = seen[c.coords]
        else:
            seen[c.coords] = i
            uniques.append(i)
    return uniques, dup


def extreme_point_decomposition(
    cfg: MonopoleConfiguration,
) -> tuple[list[int], dict[int, list[tuple[int, Fraction]]]]:
    """Indices of the extreme points, plus a convex-combination certificate
    (in terms of retained indices) for every removed point."""
    if cfg.is_zonotope:
        raise InputDataError("extreme point filtering requires the explicit representation")
    classes = cfg.classes
    uniques, dup = _unique_points(classes)
    pts = {i: list(classes[i].coords) for i in uniques}
    extreme: list[int] = []
    removed: list[int] = []
    for i in uniques:
        others = [pts[j] for j in uniques if j != i]
        if others and feasible_convex_combination(others, pts[i]) is not None:
            removed.append(i)
        else:
            extreme.append(i)
    certificates: dict[int, list[tuple[int, Fraction]]] = {}
    ext_pts = [pts[j] for j in extreme]
    for i in removed:
        weights = feasible_convex_combination(ext_pts, pts[i])
        if weights is None:  # cannot happen: hull of extremes is the hull
            raise RuntimeError("internal error: removed point lost its certificate")
        certificates[i] = [(extreme[j], w) for j, w in enumerate(weights) if w != 0]
    for i, j in dup.items():
        if j in certificates:
            certificates[i] = certificates[j]
        else:
            certificates[i] = [(j, _FR1)]
    return extreme, certificates


def extreme_points(cfg: MonopoleConfiguration) -> list[CohomologyClass]:
    """The subset of listed classes that are extreme points of the hull."""
    extreme, _ = extreme_point_decomposition(cfg)
    return [cfg.classes[i] for i in extreme]


# ---------------------------------------------------------------------------
# exact explicit-mode maximization


def _explicit_candidates(
    gram: Mat, verts: list[Vec]
) -> tuple[Fraction, tuple[int, ...], tuple[Fraction, ...], Vec, list[int]]:
    """Maximize the form over the polytope spanned by the given points.

    Returns (value, support, weights on the support, point, attaining point
    positions). Enumerates point subsets; on each, the critical point of the
    quadratic on the affine hull is accepted when it is interior to the
    simplex and the tangential Hessian is negative definite. Affinely
    dependent subsets and singular critical systems are skipped: the faces
    they would contribute are covered by smaller subsets.
    """
    n = len(verts)
    d = len(verts[0]) if verts else 0
    gcols = [mat_vec(gram, v) for v in verts]
    qmat = [[dot(verts[i], gcols[j]) for j in range(n)] for i in range(n)]
    qvals = [qmat[i][i] for i in range(n)]

    best = max(qvals)
    attaining = [i for i in range(n) if qvals[i] == best]
    first = attaining[0]
    best_support: tuple[int, ...] = (first,)
    best_weights: tuple[Fraction, ...] = (_FR1,)
    best_point = list(verts[first])

    def q(i: int, j: int) -> Fraction:
        return qmat[i][j]

    max_size = min(n, d + 1)
    for size in range(2, max_size + 1):
        for support in itertools.combinations(range(n), size):
            a0 = support[0]
            rest = support[1:]
            r = len(rest)
            # critical system of Q on the affine hull in barycentric offsets
            m_mat = [
                [q(rest[a], rest[b]) - q(rest[a], a0) - q(a0, rest[b]) + q(a0, a0) for b in range(r)]
                for a in range(r)
            ]
            rhs = [-(q(rest[a], a0) - q(a0, a0)) for a in range(r)]
            t = neg_def_solve(m_mat, rhs)
            if t is None:
                continue
            w0 = _FR1 - sum(t, _FR0)
            if w0 <= 0 or any(tj <= 0 for tj in t):
                continue
            val = (
                q(a0, a0)
                + 2 * sum((t[a] * (q(rest[a], a0) - q(a0, a0)) for a in range(r)), _FR0)
                + sum((t[a] * m_mat[a][b] * t[b] for a in range(r) for b in range(r)), _FR0)
            )
            support_t = support
            weights = (w0, *t)
            if val > best or (val == best and support_t < best_support):
                best = val
                best_support = support_t
                best_weights = weights
                point = [w0 * x for x in verts[a0]]
                for a in range(r):
                    for i in range(d):
                        point[i] += t[a] * verts[rest[a]][i]
                best_point = point
    attaining = [i for i in range(n) if qvals[i] == best]
    return best, best_support, best_weights, best_point, attaining


# ---------------------------------------------------------------------------
# Monte-Carlo oracle


def _segment_peak(qa: Fraction, qb: Fraction, qab: Fraction) -> Fraction | None:
    """Exact interior maximum of the form on the segment between two points."""
    den = qa - 2 * qab + qb
    if den >= 0:
        return None
    t = (qb - qab) / den
    if not (0 < t < 1):
        return None
    return t * t * qa + 2 * t * (1 - t) * qab + (1 - t) * (1 - t) * qb


def monte_carlo_oracle(
    cfg: MonopoleConfiguration,
    samples: int = DEFAULT_ORACLE_SAMPLES,
    seed: int = 0,
) -> float:
    """Independent lower-bound oracle for beta^2.

    Evaluates the form at every vertex, at ``samples`` random hull points
    (Dirichlet-uniform barycentric combinations in explicit mode, uniform
    box coordinates in zonotope mode), and at the exact one-dimensional peak
    of every segment between vertices (pairs of classes in explicit mode,
    pairs of leading sign patterns in zonotope mode). Every candidate is a
    genuine hull point and the best few are re-evaluated in exact rational
    arithmetic, so the result never exceeds the true beta^2. Deterministic
    for a fixed seed.
    """
    if cfg.is_empty:
        raise InputDataError("Monte-Carlo oracle requires a non-empty configuration")
    rng = np.random.default_rng(seed)
    gram = cfg.space._gram
    gram_f = cfg.space.gram_float()
    best_exact = None

    def push(value: Fraction) -> None:
        nonlocal best_exact
        if best_exact is None or value > best_exact:
            best_exact = value

    if cfg.is_zonotope:
        gens = cfg.generators
        m = len(gens)
        if m > 24:
            raise ResourceCapError("oracle vertex sweep capped at 24 generators")
        u = cfg.generator_gram()
        vmax, att, _ = _vertex_sweep(u)
        push(vmax)
        # leading patterns: all attaining vertices plus the best sampled ones
        uf = np.array([[float(x) for x in row] for row in u])
        top_rows: list[np.ndarray] = []
        remaining = samples
        while remaining > 0:
            batch = min(remaining, 200_000)
            s = rng.uniform(-1.0, 1.0, size=(batch, m))
            vals = np.einsum("ij,jk,ik->i", s, uf, s)
            k = min(8, batch)
            idx = np.argpartition(vals, -k)[-k:]
            top_rows.extend(s[i] for i in idx)
            remaining -= batch
        for row in top_rows:
            sv = [Fraction(float(x)) for x in row]
            val = sum((sv[i] * u[i][j] * sv[j] for i in range(m) for j in range(m)), _FR0)
            push(val)
        # segment refinement between leading sign patterns
        lead = list(att[:16])
        if m <= 16:
            patterns = _sign_patterns(m)
            e = np.array(patterns, dtype=float)
            vert_vals = np.einsum("ij,jk,ik->i", e, uf, e)
            order = np.argsort(vert_vals)[::-1][: min(16, len(patterns))]
            lead.extend(patterns[i] for i in order)
        lead = list(dict.fromkeys(lead))
        for pa, pb in itertools.combinations(lead, 2):
            qa = sum((pa[i] * u[i][j] * pa[j] for i in range(m) for j in range(m)), _FR0)
            qb = sum((pb[i] * u[i][j] * pb[j] for i in range(m) for j in range(m)), _FR0)
            qab = sum((pa[i] * u[i][j] * pb[j] for i in range(m) for j in range(m)), _FR0)
            peak = _segment_peak(qa, qb, qab)
            if peak is not None:
                push(peak)
    else:
        classes = cfg.classes
        n = len(classes)
        verts = [list(c.coords) for c in classes]
        gcols = [mat_vec(gram, v) for v in verts]
        qmat = [[dot(verts[i], gcols[j]) for j in range(n)] for i in range(n)]
        for i in range(n):
            push(qmat[i][i])
        for i, j in itertools.combinations(range(n), 2):
            peak = _segment_peak(qmat[i][i], qmat[j][j], qmat[i][j])
            if peak is not None:
                push(peak)
        vf = np.array([[float(x) for x in v] for v in verts])
        top_rows = []
        remaining = samples
        while remaining > 0:
            batch = min(remaining, 200_000)
            w = rng.dirichlet(np.ones(n), size=batch)
            x = w @ vf
            vals = np.einsum("ij,jk,ik->i", x, gram_f, x)
            k = min(8, batch)
            idx = np.argpartition(vals, -k)[-k:]
            top_rows.extend(w[i] for i in idx)
            remaining -= batch
        for row in top_rows:
            wts = [Fraction(float(x)) for x in row]
            total = sum(wts, _FR0)
            wts = [x / total for x in wts]
            val = sum(
                (wts[i] * qmat[i][j] * wts[j] for i in range(n) for j in range(n)), _FR0
            )
            push(val)
    return float(best_exact)


# ---------------------------------------------------------------------------
# heuristic fallback (above the exact caps)


def _project_simplex(w: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex."""
    u = np.sort(w)[::-1]
    css = np.cumsum(u) - 1.0
    rho = np.nonzero(u * np.arange(1, len(w) + 1) > css)[0][-1]
    theta = css[rho] / float(rho + 1)
    return np.maximum(w - theta, 0.0)


def _ascent_explicit(
    gram_f: np.ndarray, vf: np.ndarray, starts: int, seed: int, iters: int = 250
) -> tuple[float, np.ndarray]:
    rng = np.random.default_rng(seed)
    n = vf.shape[0]
    best_val, best_w = -np.inf, None
    for s in range(starts):
        w = np.full(n, 1.0 / n) if s == 0 else rng.dirichlet(np.ones(n))
        step = 1.0
        x = w @ vf
        val = x @ gram_f @ x
        for _ in range(iters):
            grad = 2.0 * vf @ (gram_f @ x)
            improved = False
            while step > 1e-12:
                w_new = _project_simplex(w + step * grad)
                x_new = w_new @ vf
                val_new = x_new @ gram_f @ x_new
                if val_new > val + 1e-15:
                    w, x, val = w_new, x_new, val_new
                    improved = True
                    break
                step *= 0.5
            if not improved:
                break
            step *= 1.3
        if val > best_val:
            best_val, best_w = val, w
    return float(best_val), best_w


def _ascent_box(uf: np.ndarray, starts: int, seed: int, iters: int = 250) -> tuple[float, np.ndarray]:
    rng = np.random.default_rng(seed)
    m = uf.shape[0]
    best_val, best_s = -np.inf, None
    for k in range(starts):
        s = np.zeros(m) if k == 0 else rng.uniform(-1.0, 1.0, size=m)
        step = 1.0
        val = s @ uf @ s
        for _ in range(iters):
            grad = 2.0 * uf @ s
            improved = False
            while step > 1e-12:
                s_new = np.clip(s + step * grad, -1.0, 1.0)
                val_new = s_new @ uf @ s_new
                if val_new > val + 1e-15:
                    s, val = s_new, val_new
                    improved = True
                    break
                step *= 0.5
            if not improved:
                break
            step *= 1.3
        if val > best_val:
            best_val, best_s = val, s
    return float(best_val), best_s


# ---------------------------------------------------------------------------
# beta^2


def zero_certificate(cfg: MonopoleConfiguration) -> HullWitness:
    """Barycentric certificate that the zero class lies in the hull."""
    if cfg.is_empty:
        raise InputDataError("the empty configuration has an empty hull")
    dim = cfg.space.dim
    zero = CohomologyClass([_FR0] * dim)
    if cfg.is_zonotope:
        m = len(cfg.generators)
        if m == 0:
            return HullWitness(point=zero, barycentric=(("+" * 0, _FR1),), value=_FR0)
        plus = (1,) * m
        minus = (-1,) * m
        half = Fraction(1, 2)
        return HullWitness(
            point=zero,
            barycentric=((pattern_string(plus), half), (pattern_string(minus), half)),
            value=_FR0,
        )
    coords_to_idx = {c.coords: i for i, c in enumerate(cfg.classes)}
    a = cfg.classes[0]
    i = coords_to_idx[a.coords]
    j = coords_to_idx.get((-a).coords)
    if j is None:
        raise InputDataError("configuration is not centrally symmetric")
    if i == j:  # the zero class itself
        return HullWitness(point=zero, barycentric=((i, _FR1),), value=_FR0)
    half = Fraction(1, 2)
    return HullWitness(point=zero, barycentric=((i, half), (j, half)), value=_FR0)


def is_span_negative_semidefinite(cfg: MonopoleConfiguration) -> bool:
    """Whether the form restricted to the span of the configuration is NSD
    (equivalently, beta^2 = 0 for a non-empty symmetric configuration)."""
    if cfg.is_empty:
        return True
    return is_negative_semidefinite(cfg.span_gram())


def beta_squared(
    cfg: MonopoleConfiguration,
    *,
    generator_cap: int = DEFAULT_GENERATOR_CAP,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    allow_heuristic: bool = True,
    starts: int = DEFAULT_ASCENT_STARTS,
    seed: int = 0,
    oracle_samples: int = DEFAULT_ORACLE_SAMPLES,
) -> BetaResult:
    """Maximum of the self-intersection form over the hull of the configuration.

    Empty configurations give 0 by definition. Zonotope configurations within
    the generator cap and explicit configurations whose extreme-point count is
    within the vertex cap are solved exactly; larger inputs fall back to
    seeded multi-start projected gradient ascent (mode "heuristic", with the
    Monte-Carlo oracle gap reported) unless ``allow_heuristic`` is False, in
    which case a resource error is raised.
    """
    if cfg.is_empty:
        return BetaResult(value=_FR0, witness=None, mode="exact")

    if cfg.is_zonotope:
        gens = cfg.generators
        m = len(gens)
        if m <= generator_cap:
            u = cfg.generator_gram()
            value, pattern = max_quadratic_on_box(u, cap=generator_cap)
            point = _combine_generators(gens, pattern, cfg.space.dim)
            bary = tuple(
                (pattern_string(p), w) for p, w in _staircase_decomposition(pattern)
            )
            witness = HullWitness(point=point, barycentric=bary, value=value)
            vmax, att, _ = _vertex_sweep(u)
            attaining = tuple(pattern_string(p) for p in att) if vmax == value else ()
            return BetaResult(value=value, witness=witness, mode="exact", attaining_vertices=attaining)
        if not allow_heuristic:
            raise ResourceCapError(
                f"{m} generators exceed cap {generator_cap} and heuristics are disabled"
            )
        uf = np.array([[float(pairing(cfg.space, a, b)) for b in gens] for a in gens])
        val, s = _ascent_box(uf, starts, seed)
        oracle = monte_carlo_oracle(cfg, samples=oracle_samples, seed=seed)
        val = max(val, oracle)
        s_frac = [Fraction(float(x)) for x in np.clip(s, -1.0, 1.0)]
        point = _combine_generators(gens, s_frac, cfg.space.dim)
        bary = tuple((pattern_string(p), w) for p, w in _staircase_decomposition(s_frac))
        witness = HullWitness(point=point, barycentric=bary, value=val)
        return BetaResult(
            value=val, witness=witness, mode="heuristic", oracle_gap=val - oracle
        )

    # explicit representation: deduplicate, and only run the exact LP
    # extreme-point filter when it might bring the count under the cap
    # (enumeration over non-extreme points is exact anyway, just larger)
    candidates, _ = _unique_points(cfg.classes)
    if len(candidates) > vertex_cap:
        candidates, _ = extreme_point_decomposition(cfg)
    if len(candidates) <= vertex_cap:
        verts = [list(cfg.classes[i].coords) for i in candidates]
        value, support, weights, point, att = _explicit_candidates(cfg.space._gram, verts)
        bary = tuple((candidates[j], w) for j, w in zip(support, weights))
        witness = HullWitness(point=CohomologyClass(point), barycentric=bary, value=value)
        attaining = tuple(candidates[i] for i in att)
        return BetaResult(value=value, witness=witness, mode="exact", attaining_vertices=attaining)
    if not allow_heuristic:
        raise ResourceCapError(
            f"{len(candidates)} extreme points exceed cap {vertex_cap} and heuristics are disabled"
        )
    vf = np.array([[float(x) for x in c.coords] for c in cfg.classes])
    val, w = _ascent_explicit(cfg.space.gram_float(), vf, starts, seed)
    oracle = monte_carlo_oracle(cfg, samples=oracle_samples, seed=seed)
    val = max(val, oracle)
    wts = [(int(i), Fraction(float(w[i]))) for i in np.argsort(w)[::-1] if w[i] > 1e-12]
    total = sum((x for _, x in wts), _FR0)
    wts = [(i, x / total) for i, x in wts]
    coords = [_FR0] * cfg.space.dim
    for i, x in wts:
        for k, c in enumerate(cfg.classes[i].coords):
            coords[k] += x * c
    witness = HullWitness(point=CohomologyClass(coords), barycentric=tuple(wts), value=val)
    return BetaResult(value=val, witness=witness, mode="heuristic", oracle_gap=val - oracle)
