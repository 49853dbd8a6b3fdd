"""Dense exact linear algebra over a coefficient context.

Matrices are lists of rows. Entries are field elements for :func:`rank` and
:func:`choose_pivot_columns`, and :class:`~secgrass.exactfield.Jet` for the
chart routines. Pivots are always the first nonzero entry in scan order, so
elimination transcripts are reproducible.
"""

from __future__ import annotations

from typing import Sequence

from .errors import RankDeficient, ShapeMismatch, SingularPivotBlock
from .exactfield import Jet


def _echelon(M, ctx):
    """Row-reduce a copy of ``M``; return (reduced rows, pivot columns)."""
    red = ctx.reduce
    A = [[red(x) for x in row] for row in M]
    if not A:
        return A, []
    nrows, ncols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        found = next((i for i in range(r, nrows) if not ctx.is_zero(A[i][c])), None)
        if found is None:
            continue
        A[r], A[found] = A[found], A[r]
        inv = ctx.inv(A[r][c])
        prow = [red(x * inv) for x in A[r]]
        A[r] = prow
        for i in range(r + 1, nrows):
            f = A[i][c]
            if not ctx.is_zero(f):
                A[i] = [red(x - f * y) for x, y in zip(A[i], prow)]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: Sequence[Sequence], ctx) -> int:
    """Exact rank by Gaussian elimination."""
    return len(_echelon(M, ctx)[1])


def determinant(M: Sequence[Sequence], ctx):
    n = len(M)
    if any(len(row) != n for row in M):
        raise ShapeMismatch("determinant of a non-square matrix")
    red = ctx.reduce
    A = [[red(x) for x in row] for row in M]
    det = 1
    for c in range(n):
        found = next((i for i in range(c, n) if not ctx.is_zero(A[i][c])), None)
        if found is None:
            return 0
        if found != c:
            A[c], A[found] = A[found], A[c]
            det = -det
        det = red(det * A[c][c])
        inv = ctx.inv(A[c][c])
        for i in range(c + 1, n):
            f = red(A[i][c] * inv)
            if not ctx.is_zero(f):
                A[i] = [red(x - f * y) for x, y in zip(A[i], A[c])]
    return red(det)


def transpose(M):
    return [list(col) for col in zip(*M)]


def choose_pivot_columns(M: Sequence[Sequence], c: int, ctx) -> tuple[int, ...]:
    """Columns ``J`` with ``|J| = c`` making ``M[rows, J]`` invertible.

    ``rows`` are the first ``c`` linearly independent rows of ``M``, taken
    in order; ``J`` are the pivot columns of their echelon form.
    """
    if c == 0:
        return ()
    chosen = []
    for row in M:
        if rank(chosen + [row], ctx) > len(chosen):
            chosen.append(row)
            if len(chosen) == c:
                break
    if len(chosen) < c:
        raise RankDeficient(f"matrix has rank {len(chosen)} < {c}")
    return tuple(_echelon(chosen, ctx)[1])


def jet_values(N):
    return [[x.val for x in row] for row in N]


def chart_normalize(N: Sequence[Sequence[Jet]], J: Sequence[int], ctx) -> list[list[Jet]]:
    """Affine Grassmannian chart ``(N_J)^-1 . N_{J^c}`` computed in jet arithmetic.

    ``N`` has ``h+1`` rows; the result is ``(h+1) x (cols - h - 1)`` with
    columns in increasing order of ``J^c``. Raises :class:`SingularPivotBlock`
    when the value part of ``N_J`` is singular.
    """
    rows = len(N)
    if len(J) != rows:
        raise ShapeMismatch(f"{len(J)} pivot columns for {rows} rows")
    if rows == 0:
        return []
    cols = len(N[0])
    Jset = set(J)
    rest = [j for j in range(cols) if j not in Jset]
    # Gauss-Jordan on the augmented jet matrix [N_J | N_rest]
    A = [[row[j] for j in J] + [row[j] for j in rest] for row in N]
    width = len(A[0])
    for c in range(rows):
        found = next((i for i in range(c, rows) if not ctx.is_zero(A[i][c].val)), None)
        if found is None:
            raise SingularPivotBlock(f"pivot block on columns {tuple(J)} is singular")
        A[c], A[found] = A[found], A[c]
        inv = A[c][c].inverse()
        A[c] = [x * inv for x in A[c]]
        for i in range(rows):
            if i != c:
                f = A[i][c]
                if any(not ctx.is_zero(x) for x in (f.val, *f.partials)):
                    A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [row[rows:width] for row in A]


def jacobian_rank(chart: Sequence[Sequence[Jet]], ctx) -> int:
    """Rank of the matrix whose rows are the partial vectors of every entry."""
    rows = [list(x.partials) for row in chart for x in row]
    if not rows or not rows[0]:
        return 0
    return rank(rows, ctx)


def matmul(A, B, ctx):
    """Product of two matrices with entries in a context (jets allowed)."""
    if A and len(A[0]) != len(B):
        raise ShapeMismatch(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x?")
    out = []
    for row in A:
        new = []
        for j in range(len(B[0]) if B else 0):
            acc = 0
            for a, brow in zip(row, B):
                acc = acc + a * brow[j]
            new.append(acc if isinstance(acc, Jet) else ctx.reduce(acc))
        out.append(new)
    return out
