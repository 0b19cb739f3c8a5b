"""Exact Gaussian elimination over a field of exact scalars.

Works for any element type with ``+ - * /`` and truthiness meaning "nonzero":
QScalar for Q(q), Fraction for specialisations.
"""

from fractions import Fraction

from .errors import InvariantViolation, RankDeficient


def _cost(x):
    # prefer pivots that are units of Z[q, 1/q] to keep denominators small
    num = getattr(x, "num", None)
    if num is None:
        return 0
    return len(num.coeffs) + len(x.den.coeffs)


def row_echelon(rows, ncols):
    """Reduce ``rows`` in place-free fashion; return ``(echelon_rows, pivot_cols)``."""
    rows = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(rows)):
            v = rows[i][c]
            if v:
                cost = _cost(v)
                if best is None or cost < best[0]:
                    best = (cost, i)
                    if cost <= 2:
                        break
        if best is None:
            continue
        i = best[1]
        rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r]
        inv = Fraction(1) / piv[c]
        piv = [x * inv if x else x for x in piv]
        rows[r] = piv
        for j in range(len(rows)):
            if j != r:
                f = rows[j][c]
                if f:
                    row = rows[j]
                    rows[j] = [a - f * b if b else a for a, b in zip(row, piv)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(row_echelon(rows, ncols)[1])


def solve_unique(matrix, rhs):
    """Solve ``matrix @ x = rhs`` where ``matrix`` has full column rank.

    ``matrix`` is a list of rows.  Raises RankDeficient when the columns are
    dependent and InvariantViolation when ``rhs`` is outside their span.
    """
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    ech, pivots = row_echelon(aug, ncols + 1)
    if ncols in pivots:
        raise InvariantViolation("right-hand side is not in the span of the basis")
    if len(pivots) < ncols:
        raise RankDeficient(f"coordinate matrix has rank {len(pivots)} < {ncols}")
    return [row[ncols] for row in ech]
