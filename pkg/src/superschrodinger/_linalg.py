"""Dense exact linear algebra over the coefficient field.

One implementation of Gauss-Jordan elimination parameterized by a small
field-operations record, used both over plain fractions (numeric scans of
the purely even algebras) and over the scalar ring (symbolic parameters
and the chi extension).  Pivot search prefers entries flagged as "good"
so that chi-free pivots are taken whenever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class FieldOps:
    zero: object
    one: object
    is_zero: object  # callable
    inv: object  # callable
    good_pivot: object  # callable; preferred pivots are taken first


FRACTION_OPS = FieldOps(
    zero=Fraction(0),
    one=Fraction(1),
    is_zero=lambda x: x == 0,
    inv=lambda x: Fraction(1) / x,
    good_pivot=lambda x: True,
)


def scalar_field(ctx):
    return FieldOps(
        zero=ctx.zero(),
        one=ctx.one(),
        is_zero=lambda x: x.is_zero(),
        inv=lambda x: x.field_inv(),
        good_pivot=lambda x: not x.has_odd(),
    )


def echelon(rows, ncols, ops):
    """Reduced row echelon form.

    Returns (pivot_cols, reduced_rows, pivot_values); pivot values are the
    entries before normalization, which symbolic callers read as the
    elimination minors.
    """
    is_zero = ops.is_zero
    work = [list(r) for r in rows if not all(is_zero(x) for x in r)]
    reduced, pivot_cols, pivot_vals = [], [], []
    for col in range(ncols):
        pick = None
        for i, r in enumerate(work):
            if not is_zero(r[col]):
                if pick is None:
                    pick = i
                if ops.good_pivot(r[col]):
                    pick = i
                    break
        if pick is None:
            continue
        row = work.pop(pick)
        pivot_vals.append(row[col])
        inv = ops.inv(row[col])
        row = [inv * x for x in row]
        for bucket in (work, reduced):
            for r in bucket:
                c = r[col]
                if is_zero(c):
                    continue
                for k in range(col, ncols):
                    if not is_zero(row[k]):
                        r[k] = r[k] - c * row[k]
        work = [r for r in work if not all(is_zero(x) for x in r)]
        reduced.append(row)
        pivot_cols.append(col)
    return pivot_cols, reduced, pivot_vals


def kernel_from_echelon(pivot_cols, reduced, ncols, ops):
    """Kernel basis vectors, one per free column, in column order."""
    pivot_set = set(pivot_cols)
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ops.zero] * ncols
        vec[free] = ops.one
        for pcol, prow in zip(pivot_cols, reduced):
            vec[pcol] = ops.zero - prow[free]
        out.append(vec)
    return out


def reduce_vector(vec, pivot_cols, reduced, ops):
    """Eliminate the echelon pivots from a coordinate vector (copy)."""
    is_zero = ops.is_zero
    vec = list(vec)
    for pcol, prow in zip(pivot_cols, reduced):
        c = vec[pcol]
        if is_zero(c):
            continue
        for k in range(pcol, len(vec)):
            if not is_zero(prow[k]):
                vec[k] = vec[k] - c * prow[k]
    return vec


def rank(rows, ncols, ops):
    return len(echelon(rows, ncols, ops)[0])


def det(matrix, ops):
    """Determinant of a square matrix by fraction-full elimination."""
    n = len(matrix)
    if n == 0:
        return ops.one
    is_zero = ops.is_zero
    rows = [list(r) for r in matrix]
    sign = 1
    result = ops.one
    for col in range(n):
        pick = None
        for i in range(col, n):
            if not is_zero(rows[i][col]):
                if pick is None:
                    pick = i
                if ops.good_pivot(rows[i][col]):
                    pick = i
                    break
        if pick is None:
            return ops.zero
        if pick != col:
            rows[col], rows[pick] = rows[pick], rows[col]
            sign = -sign
        pivot = rows[col][col]
        result = result * pivot
        inv = ops.inv(pivot)
        for i in range(col + 1, n):
            c = rows[i][col]
            if is_zero(c):
                continue
            f = c * inv
            for k in range(col, n):
                if not is_zero(rows[col][k]):
                    rows[i][k] = rows[i][k] - f * rows[col][k]
    if sign < 0:
        return ops.zero - result
    return result
