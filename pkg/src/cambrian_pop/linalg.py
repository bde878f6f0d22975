"""Exact linear algebra over the rationals on top of sympy's DomainMatrix.

Bases are always stored as the columns of a matrix.  The helpers below smooth
over the handful of places where DomainMatrix behaves oddly on empty shapes.
"""
from __future__ import annotations

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Mat = DomainMatrix


def zeros(m: int, n: int) -> Mat:
    return DomainMatrix.zeros((m, n), QQ)


def eye(n: int) -> Mat:
    return DomainMatrix.eye(n, QQ) if n else zeros(0, 0)


def mat(rows, m: int | None = None, n: int | None = None) -> Mat:
    """Matrix from a list of rows of ints/fractions; shape given for empty input."""
    rows = [list(r) for r in rows]
    m = len(rows) if m is None else m
    n = (len(rows[0]) if rows else 0) if n is None else n
    if m == 0 or n == 0:
        return zeros(m, n)
    return DomainMatrix([[QQ(x) for x in r] for r in rows], (m, n), QQ)


def entries(A: Mat) -> list:
    """Entries as nested lists of python ints or (p, q) strings."""
    m, n = A.shape
    if m == 0 or n == 0:
        return [[] for _ in range(m)]
    return [[_plain(x) for x in row] for row in A.to_list()]


def _plain(x):
    x = QQ.convert(x)
    num, den = int(x.numerator), int(x.denominator)
    return num if den == 1 else f"{num}/{den}"


def is_zero(A: Mat) -> bool:
    m, n = A.shape
    return m == 0 or n == 0 or A.is_zero_matrix


def rank(A: Mat) -> int:
    m, n = A.shape
    if m == 0 or n == 0:
        return 0
    return A.rank()


def hstack(*ms: Mat) -> Mat:
    m = ms[0].shape[0]
    n = sum(x.shape[1] for x in ms)
    if m == 0 or n == 0:
        return zeros(m, n)
    parts = [x for x in ms if x.shape[1]]
    return parts[0].hstack(*parts[1:]) if len(parts) > 1 else parts[0]


def vstack(*ms: Mat) -> Mat:
    n = ms[0].shape[1]
    m = sum(x.shape[0] for x in ms)
    if m == 0 or n == 0:
        return zeros(m, n)
    parts = [x for x in ms if x.shape[0]]
    return parts[0].vstack(*parts[1:]) if len(parts) > 1 else parts[0]


def block_diag(*ms: Mat) -> Mat:
    rows = []
    total = sum(x.shape[1] for x in ms)
    left = 0
    for x in ms:
        r, c = x.shape
        rows.append(hstack(zeros(r, left), x, zeros(r, total - left - c)))
        left += c
    return vstack(*rows) if rows else zeros(0, 0)


def matmul(A: Mat, B: Mat) -> Mat:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    if A.shape[0] == 0 or B.shape[1] == 0 or A.shape[1] == 0:
        return zeros(A.shape[0], B.shape[1])
    return A * B


def transpose(A: Mat) -> Mat:
    m, n = A.shape
    if m == 0 or n == 0:
        return zeros(n, m)
    return A.transpose()


def null_basis(A: Mat) -> Mat:
    """Columns spanning the kernel of A."""
    m, n = A.shape
    if n == 0:
        return zeros(0, 0)
    if m == 0 or A.is_zero_matrix:
        return eye(n)
    ns = A.nullspace()
    if ns.shape[0] == 0:
        return zeros(n, 0)
    return transpose(ns)


def pivots(A: Mat) -> tuple:
    m, n = A.shape
    if m == 0 or n == 0:
        return ()
    return A.rref()[1]


def col_basis(A: Mat) -> Mat:
    """A subset of the columns of A forming a basis of its column space."""
    piv = pivots(A)
    m = A.shape[0]
    if not piv:
        return zeros(m, 0)
    return A.extract(list(range(m)), list(piv))


def columns(A: Mat, idx) -> Mat:
    idx = list(idx)
    if not idx or A.shape[0] == 0:
        return zeros(A.shape[0], len(idx))
    return A.extract(list(range(A.shape[0])), idx)


def left_inverse(B: Mat) -> Mat:
    """(B^T B)^{-1} B^T for B of full column rank."""
    m, k = B.shape
    if k == 0:
        return zeros(0, m)
    Bt = transpose(B)
    return matmul((Bt * B).inv(), Bt)


def right_inverse(q: Mat) -> Mat:
    """q^T (q q^T)^{-1} for q of full row rank."""
    k, m = q.shape
    if k == 0:
        return zeros(m, 0)
    qt = transpose(q)
    return matmul(qt, (q * qt).inv())


def cokernel_map(A: Mat) -> Mat:
    """A surjection q with q A = 0 whose kernel is exactly the column space of A."""
    m, n = A.shape
    if is_zero(A):
        return eye(m)
    ns = transpose(A).nullspace()
    if ns.shape[0] == 0:
        return zeros(0, m)
    return ns


def complement(R: Mat, H: Mat) -> Mat:
    """Columns of H that extend a basis of span(R) to a basis of span(R, H)."""
    return columns(H, complement_indices(R, H))


def in_span(B: Mat, v: Mat) -> bool:
    return rank(hstack(B, v)) == rank(B)


def flatten(A: Mat) -> list:
    """Row-major list of entries."""
    m, n = A.shape
    if m == 0 or n == 0:
        return []
    return [x for row in A.to_list() for x in row]


def from_flat(vals, m: int, n: int) -> Mat:
    if m == 0 or n == 0:
        return zeros(m, n)
    vals = list(vals)
    return DomainMatrix([vals[k * n:(k + 1) * n] for k in range(m)], (m, n), QQ)


def scalar(x) -> object:
    return QQ(x)


def scale(A: Mat, t) -> Mat:
    m, n = A.shape
    if m == 0 or n == 0:
        return A
    return A * QQ(t)


def add(A: Mat, B: Mat) -> Mat:
    m, n = A.shape
    if m == 0 or n == 0:
        return A
    return A + B


def complement_indices(R: Mat, H: Mat) -> list:
    """Indices of the columns chosen by :func:`complement`."""
    r = R.shape[1]
    return [p - r for p in pivots(hstack(R, H)) if p >= r]


def from_columns(cols: list, m: int) -> Mat:
    """Matrix whose columns are the given coordinate lists of length m."""
    if not cols or m == 0:
        return zeros(m, len(cols))
    return DomainMatrix([[QQ(col[r]) for col in cols] for r in range(m)], (m, len(cols)), QQ)
