"""Exact dense linear algebra on sympy ``DomainMatrix`` values.

Every helper accepts and returns dense matrices over a single domain and is
safe on zero-sized shapes, which show up constantly for modules that vanish
at some vertex.
"""
from __future__ import annotations

from typing import Any, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

Matrix = DomainMatrix


def _dense(a: DomainMatrix) -> DomainMatrix:
    return a.to_dense()


def from_rows(rows: Sequence[Sequence[Any]], m: int, n: int, K) -> DomainMatrix:
    if m == 0 or n == 0:
        return zeros(m, n, K)
    data = [[K.convert(x) for x in row] for row in rows]
    return _dense(DomainMatrix(data, (m, n), K))


def from_columns(cols: Sequence[Sequence[Any]], m: int, K) -> DomainMatrix:
    n = len(cols)
    return from_rows([[cols[j][i] for j in range(n)] for i in range(m)], m, n, K)


def zeros(m: int, n: int, K) -> DomainMatrix:
    return _dense(DomainMatrix.zeros((m, n), K))


def eye(n: int, K) -> DomainMatrix:
    if n == 0:
        return zeros(0, 0, K)
    return _dense(DomainMatrix.eye(n, K))


def rows(a: DomainMatrix) -> List[List[Any]]:
    m, n = a.shape
    if m == 0:
        return []
    if n == 0:
        return [[] for _ in range(m)]
    return [list(r) for r in a.to_list()]


def column(a: DomainMatrix, j: int) -> List[Any]:
    return [r[j] for r in rows(a)]


def columns(a: DomainMatrix) -> List[List[Any]]:
    rs = rows(a)
    return [[r[j] for r in rs] for j in range(a.shape[1])]


def select_columns(a: DomainMatrix, idx: Sequence[int]) -> DomainMatrix:
    rs = rows(a)
    return from_rows([[r[j] for j in idx] for r in rs], a.shape[0], len(idx), a.domain)


def select_rows(a: DomainMatrix, idx: Sequence[int]) -> DomainMatrix:
    rs = rows(a)
    return from_rows([rs[i] for i in idx], len(idx), a.shape[1], a.domain)


def is_zero(a: DomainMatrix) -> bool:
    K = a.domain
    return all(K.is_zero(x) for r in rows(a) for x in r)


def equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    if a.shape != b.shape:
        return False
    return rows(a) == rows(b)


def mul(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    m, k = a.shape
    k2, n = b.shape
    if k != k2:
        raise ValueError(f"shape mismatch {a.shape} x {b.shape}")
    if m == 0 or n == 0 or k == 0:
        return zeros(m, n, a.domain)
    return _dense(a.matmul(b))


def chain(*mats: DomainMatrix) -> DomainMatrix:
    """Product of matrices listed left to right (the last one acts first)."""
    out = mats[0]
    for m in mats[1:]:
        out = mul(out, m)
    return out


def add(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} + {b.shape}")
    if 0 in a.shape:
        return a
    return _dense(a + b)


def sub(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} - {b.shape}")
    if 0 in a.shape:
        return a
    return _dense(a - b)


def scale(a: DomainMatrix, c: Any) -> DomainMatrix:
    m, n = a.shape
    return from_rows([[c * x for x in r] for r in rows(a)], m, n, a.domain)


def transpose(a: DomainMatrix) -> DomainMatrix:
    m, n = a.shape
    if m == 0 or n == 0:
        return zeros(n, m, a.domain)
    return _dense(a.transpose())


def hstack(mats: Sequence[DomainMatrix], m: int, K) -> DomainMatrix:
    out: List[List[Any]] = [[] for _ in range(m)]
    n = 0
    for a in mats:
        if a.shape[0] != m:
            raise ValueError("hstack row mismatch")
        for i, r in enumerate(rows(a)):
            out[i].extend(r)
        n += a.shape[1]
    return from_rows(out, m, n, K)


def vstack(mats: Sequence[DomainMatrix], n: int, K) -> DomainMatrix:
    out: List[List[Any]] = []
    for a in mats:
        if a.shape[1] != n:
            raise ValueError("vstack column mismatch")
        out.extend(rows(a))
    return from_rows(out, len(out), n, K)


def block_diag(mats: Sequence[DomainMatrix], K) -> DomainMatrix:
    m = sum(a.shape[0] for a in mats)
    n = sum(a.shape[1] for a in mats)
    out = [[K.zero] * n for _ in range(m)]
    r0 = c0 = 0
    for a in mats:
        for i, r in enumerate(rows(a)):
            for j, x in enumerate(r):
                out[r0 + i][c0 + j] = x
        r0 += a.shape[0]
        c0 += a.shape[1]
    return from_rows(out, m, n, K)


def unit_column(n: int, i: int, K) -> DomainMatrix:
    return from_rows([[K.one if r == i else K.zero] for r in range(n)], n, 1, K)


def rref(a: DomainMatrix) -> Tuple[List[List[Any]], Tuple[int, ...]]:
    m, n = a.shape
    if m == 0 or n == 0:
        return rows(a), ()
    r, pivots = a.rref()
    return rows(r), tuple(pivots)


def rank(a: DomainMatrix) -> int:
    return len(rref(a)[1])


def nullspace(a: DomainMatrix) -> DomainMatrix:
    """Columns form a basis of {x : a x = 0}."""
    m, n = a.shape
    K = a.domain
    R, pivots = rref(a)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    cols = []
    for f in free:
        v = [K.zero] * n
        v[f] = K.one
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        cols.append(v)
    return from_columns(cols, n, K)


def image_basis(a: DomainMatrix) -> DomainMatrix:
    """Pivot columns of ``a``: a basis of its column space."""
    _, pivots = rref(a)
    return select_columns(a, pivots)


def solve(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    """Unique X with a X = b for ``a`` of full column rank.

    Raises ValueError when b is not in the column space of a.
    """
    n, k = a.shape
    K = a.domain
    c = b.shape[1]
    if b.shape[0] != n:
        raise ValueError("solve: row mismatch")
    if k == 0:
        if not is_zero(b):
            raise ValueError("solve: inconsistent system")
        return zeros(0, c, K)
    if c == 0:
        return zeros(k, 0, K)
    R, pivots = rref(hstack([a, b], n, K))
    if tuple(pivots[:k]) != tuple(range(k)) or any(p >= k for p in pivots):
        raise ValueError("solve: inconsistent system or rank-deficient coefficients")
    return from_rows([R[i][k:] for i in range(k)], k, c, K)


def extend_to_basis(a: DomainMatrix) -> DomainMatrix:
    """Standard basis columns completing the independent columns of ``a``."""
    n = a.shape[0]
    K = a.domain
    r = a.shape[1]
    _, pivots = rref(hstack([a, eye(n, K)], n, K))
    picked = [p - r for p in pivots if p >= r]
    return select_columns(eye(n, K), picked)


def inverse(a: DomainMatrix) -> DomainMatrix:
    n = a.shape[0]
    if n == 0:
        return a
    return _dense(a.inv())


def right_inverse(a: DomainMatrix) -> DomainMatrix:
    """S with a S = I for ``a`` of full row rank."""
    m, n = a.shape
    K = a.domain
    if m == 0:
        return zeros(n, 0, K)
    _, pivots = rref(a)
    if len(pivots) != m:
        raise ValueError("right_inverse: rows are dependent")
    square_inv = inverse(select_columns(a, pivots))
    embed = select_columns(eye(n, K), pivots)
    return mul(embed, square_inv)


def is_invertible(a: DomainMatrix) -> bool:
    m, n = a.shape
    return m == n and rank(a) == n


def power(a: DomainMatrix, e: int) -> DomainMatrix:
    n = a.shape[0]
    out = eye(n, a.domain)
    for _ in range(e):
        out = mul(out, a)
    return out


def trace(a: DomainMatrix) -> Any:
    K = a.domain
    total = K.zero
    for i, r in enumerate(rows(a)):
        total += r[i]
    return total


def flatten(a: DomainMatrix) -> List[Any]:
    return [x for r in rows(a) for x in r]


def reshape(values: Sequence[Any], m: int, n: int, K) -> DomainMatrix:
    return from_rows([list(values[i * n:(i + 1) * n]) for i in range(m)], m, n, K)
