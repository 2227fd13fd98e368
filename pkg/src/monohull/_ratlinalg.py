"""Exact linear algebra over the rationals.

Small dense matrices only (the package works at desk scale, dim <= ~20).
Matrices are lists of lists of Fraction; vectors are lists of Fraction.
Nothing here ever touches floats, so results feed directly into the exact
invariant computations without tolerance disputes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputDataError

Vec = list[Fraction]
Mat = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected: the exact path must never silently absorb rounding.
    Use ``Fraction(x)`` directly when a float is intentionally reinterpreted
    as the exact binary rational it stores.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputDataError(f"not a valid rational: {value!r}") from exc
    raise InputDataError(
        f"expected integer or 'p/q' rational, got {type(value).__name__}: {value!r}"
    )


def mat_from_rows(rows: Sequence[Sequence]) -> Mat:
    return [[to_fraction(x) for x in row] for row in rows]


def identity(n: int) -> Mat:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)] if a else []


def mat_vec(a: Mat, v: Sequence[Fraction]) -> Vec:
    return [sum((row[j] * v[j] for j in range(len(v))), ZERO) for row in a]


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return [[sum((ra[k] * cb[k] for k in range(len(ra))), ZERO) for cb in bt] for ra in a]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), ZERO)


def solve(a: Mat, b: Sequence[Fraction]) -> Vec | None:
    """Solve a square system exactly; None when the matrix is singular."""
    n = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def invert(a: Mat) -> Mat | None:
    n = len(a)
    aug = [list(a[i]) + identity(n)[i] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def rank(a: Mat) -> int:
    if not a:
        return 0
    m = [list(row) for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = ONE / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def kernel_basis(a: Mat) -> list[Vec]:
    """Basis of the right kernel {x : a x = 0} by reduced row echelon form."""
    if not a:
        return []
    m = [list(row) for row in a]
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = ONE / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis: list[Vec] = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def independent_columns(vectors: Sequence[Sequence[Fraction]]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedily from the left."""
    chosen: list[int] = []
    rows: Mat = []
    for idx, v in enumerate(vectors):
        candidate = rows + [list(v)]
        if rank(candidate) == len(candidate):
            rows = candidate
            chosen.append(idx)
    return chosen


def is_positive_semidefinite(a: Mat) -> bool:
    """Exact PSD test by pivoted symmetric elimination."""
    m = [list(row) for row in a]
    n = len(m)
    active = list(range(n))
    while active:
        piv = next((i for i in active if m[i][i] != 0), None)
        if piv is None:
            # all remaining diagonal entries vanish: PSD iff the block is zero
            return all(m[i][j] == 0 for i in active for j in active)
        if m[piv][piv] < 0:
            return False
        p = m[piv][piv]
        active.remove(piv)
        for i in active:
            if m[i][piv] != 0:
                f = m[i][piv] / p
                for j in active:
                    m[i][j] -= f * m[piv][j]
    return True


def is_negative_semidefinite(a: Mat) -> bool:
    return is_positive_semidefinite([[-x for x in row] for row in a])


def neg_def_solve(a: Mat, b: Sequence[Fraction]) -> Vec | None:
    """Solve a x = b when a is symmetric negative definite; None otherwise.

    Elimination without pivot search is valid here: a symmetric matrix is
    negative definite iff all its elimination pivots are negative, so the
    first non-negative pivot both certifies "not ND" and aborts the solve.
    """
    n = len(a)
    if n == 0:
        return []
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    for col in range(n):
        if aug[col][col] >= 0:
            return None
        inv = ONE / aug[col][col]
        for r in range(col + 1, n):
            if aug[r][col] != 0:
                f = aug[r][col] * inv
                for j in range(col, n + 1):
                    aug[r][j] -= f * aug[col][j]
    x: Vec = [ZERO] * n
    for i in range(n - 1, -1, -1):
        s = aug[i][n] - sum((aug[i][j] * x[j] for j in range(i + 1, n)), ZERO)
        x[i] = s / aug[i][i]
    return x


def symmetric_diagonalize(g: Mat) -> tuple[Mat, Vec]:
    """Congruence-diagonalize a symmetric rational matrix without square roots.

    Returns (b, d) with b invertible and b^T g b = diag(d); the basis columns
    are ordered so that positive diagonal entries come first, then negative,
    then zero.
    """
    n = len(g)
    a = [list(row) for row in g]
    basis = identity(n)  # columns tracked as basis[i][k] = entry i of column k

    def add_col(dst: int, src: int, factor: Fraction) -> None:
        # congruence move: column/row dst += factor * (column/row src)
        for i in range(n):
            a[dst][i] += factor * a[src][i]
        for i in range(n):
            a[i][dst] += factor * a[i][src]
        for i in range(n):
            basis[i][dst] += factor * basis[i][src]

    def swap_cols(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in basis:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap_cols(k, j)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue  # row is zero from k on: a radical direction
                add_col(k, j, ONE)  # makes a[k][k] = 2*a[k][j] != 0
        piv = a[k][k]
        for j in range(k + 1, n):
            if a[k][j] != 0:
                add_col(j, k, -a[k][j] / piv)

    diag = [a[i][i] for i in range(n)]
    order = sorted(range(n), key=lambda i: (0 if diag[i] > 0 else (1 if diag[i] < 0 else 2), i))
    basis = [[row[j] for j in order] for row in basis]
    return basis, [diag[j] for j in order]


def feasible_convex_combination(
    points: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> Vec | None:
    """Exact phase-1 simplex: weights w >= 0, sum w = 1, sum w_j p_j = target.

    Returns the weight vector, or None when target is outside the hull of
    the given points. Bland's rule guarantees termination.
    """
    npts = len(points)
    if npts == 0:
        return None
    dim = len(target)
    rows = dim + 1
    # constraint matrix: geometry rows then the affine row of ones
    cols = [[points[j][i] for i in range(dim)] + [ONE] for j in range(npts)]
    rhs = list(target) + [ONE]
    for i in range(rows):
        if rhs[i] < 0:
            rhs[i] = -rhs[i]
            for j in range(npts):
                cols[j][i] = -cols[j][i]
    # tableau with artificial variables; minimize their sum
    total = npts + rows
    tab = [[ZERO] * (total + 1) for _ in range(rows)]
    for i in range(rows):
        for j in range(npts):
            tab[i][j] = cols[j][i]
        tab[i][npts + i] = ONE
        tab[i][total] = rhs[i]
    basic = [npts + i for i in range(rows)]
    # reduced cost row for the phase-1 objective
    cost = [ZERO] * (total + 1)
    for i in range(rows):
        for j in range(total + 1):
            cost[j] += tab[i][j]
    for i in range(rows):
        cost[npts + i] -= ONE

    while True:
        enter = next((j for j in range(total) if cost[j] > 0), None)
        if enter is None:
            break
        best_ratio = None
        leave = None
        for i in range(rows):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basic[i] < basic[leave]
                ):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            return None  # unbounded cannot happen for this bounded program
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(rows):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basic[leave] = enter

    objective = sum((tab[i][total] for i in range(rows) if basic[i] >= npts), ZERO)
    if objective != 0:
        return None
    weights: Vec = [ZERO] * npts
    for i in range(rows):
        if basic[i] < npts:
            weights[basic[i]] = tab[i][total]
    return weights
