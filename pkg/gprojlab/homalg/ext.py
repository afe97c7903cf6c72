from __future__ import annotations

from typing import Any, Dict, List, Optional

from ..core import linalg as la
from ..errors import ResolutionBoundExceeded, ShapeMismatch
from ..rep.representation import Representation
from ..server.settings import settings
from .resolution import ResolutionSegment


def _hom_from_projective_dim(segment: ResolutionSegment, k: int, n: Representation) -> int:
    return sum(n.dims[v] for v in segment.projective(k).tops)


def _cochain_differential(segment: ResolutionSegment, k: int, n: Representation) -> la.Matrix:
    """Matrix of Hom(P_k, N) -> Hom(P_{k+1}, N), g -> g ∘ d_{k+1}.

    Hom(P, N) for P = ⊕ P(v_i) is identified with ⊕ N_{v_i} by evaluating at
    the summand generators.
    """
    K = n.domain
    lower, upper = segment.projective(k), segment.projective(k + 1)
    d = segment.differential(k + 1)
    col_offset: List[int] = []
    pos = 0
    for v in lower.tops:
        col_offset.append(pos)
        pos += n.dims[v]
    n_cols = pos
    rows: List[List[Any]] = []
    for j, u in enumerate(upper.tops):
        image = la.column(d.maps[u], upper.generator_index(j))
        block = [[K.zero] * n_cols for _ in range(n.dims[u])]
        for coeff, (i, path) in zip(image, lower.labels[u]):
            if K.is_zero(coeff):
                continue
            act = la.rows(n.path_action(path))
            for r in range(n.dims[u]):
                for c in range(n.dims[lower.tops[i]]):
                    block[r][col_offset[i] + c] += coeff * act[r][c]
        rows.extend(block)
    return la.from_rows(rows, len(rows), n_cols, K)


def ext_dim(k: int, m: Representation, n: Representation, bound: Optional[int] = None,
            segment: Optional[ResolutionSegment] = None) -> int:
    """dim Ext^k(m, n) from the Hom complex of a minimal projective resolution of m."""
    if k < 0:
        raise ValueError("Ext degree must be >= 0")
    if m.algebra != n.algebra:
        raise ShapeMismatch("Ext between modules over different algebras")
    if bound is None:
        bound = settings.default_bound(m.algebra.dimension)
    if k + 1 > bound:
        raise ResolutionBoundExceeded(k, bound)
    seg = segment or ResolutionSegment(m)
    seg.extend_to(k + 1)
    cochains = _hom_from_projective_dim(seg, k, n)
    rank_out = la.rank(_cochain_differential(seg, k, n))
    rank_in = la.rank(_cochain_differential(seg, k - 1, n)) if k >= 1 else 0
    return cochains - rank_out - rank_in


def _kron_coefficients(left: List[List[Any]], right: List[List[Any]], rows_out: int, cols_out: int,
                       inner_r: int, inner_c: int, K) -> Dict[int, List[Any]]:
    """Coefficients of X -> L X R, keyed by output entry, over row-major vec(X)."""
    out: Dict[int, List[Any]] = {}
    for i in range(rows_out):
        for j in range(cols_out):
            coeffs = [K.zero] * (inner_r * inner_c)
            for a in range(inner_r):
                la_ia = left[i][a]
                if K.is_zero(la_ia):
                    continue
                for b in range(inner_c):
                    rb = right[b][j]
                    if not K.is_zero(rb):
                        coeffs[a * inner_c + b] += la_ia * rb
            out[i * cols_out + j] = coeffs
    return out


def ext1_cocycle_oracle(m: Representation, n: Representation) -> int:
    """dim Ext^1(m, n) from arrow cocycles modulo vertex coboundaries.

    A cocycle picks f_a : M_s -> N_t for each arrow; for every zero relation
    a_1 ... a_k (a_1 first) the sum over positions j of
    N_{a_k..a_{j+1}} f_{a_j} M_{a_{j-1}..a_1} must vanish.
    """
    algebra = m.algebra
    K = m.domain
    offset: Dict[str, int] = {}
    pos = 0
    for a in algebra.arrows:
        offset[a.label] = pos
        pos += n.dims[a.target] * m.dims[a.source]
    total = pos

    def word(rep: Representation, labels, start_vertex: str):
        out = la.eye(rep.dims[start_vertex], K)
        for x in labels:
            out = la.mul(rep.maps[x], out)
        return out

    equations: List[List[Any]] = []
    for g in algebra.ideal.generators:
        first, last = algebra.arrow(g[0]), algebra.arrow(g[-1])
        rows_out, cols_out = n.dims[last.target], m.dims[first.source]
        acc = [[K.zero] * total for _ in range(rows_out * cols_out)]
        for j, label in enumerate(g):
            arrow = algebra.arrow(label)
            before = word(m, g[:j], first.source)        # M_{a_{j-1}..a_1}
            after = word(n, g[j + 1:], arrow.target)     # N_{a_k..a_{j+1}}
            coeffs = _kron_coefficients(la.rows(after), la.rows(before), rows_out, cols_out,
                                        n.dims[arrow.target], m.dims[arrow.source], K)
            for e, cs in coeffs.items():
                for idx, c in enumerate(cs):
                    if not K.is_zero(c):
                        acc[e][offset[label] + idx] += c
        equations.extend(acc)
    cocycle_dim = total - la.rank(la.from_rows(equations, len(equations), total, K))

    # coboundaries: g -> (N_a g_s - g_t M_a)_a
    g_offset: Dict[str, int] = {}
    pos = 0
    for v in algebra.vertices:
        g_offset[v] = pos
        pos += n.dims[v] * m.dims[v]
    g_total = pos
    cob: List[List[Any]] = [[K.zero] * g_total for _ in range(total)]
    for a in algebra.arrows:
        s, t = a.source, a.target
        Na, Ma = la.rows(n.maps[a.label]), la.rows(m.maps[a.label])
        for i in range(n.dims[t]):
            for j in range(m.dims[s]):
                row = cob[offset[a.label] + i * m.dims[s] + j]
                for k in range(n.dims[s]):
                    if not K.is_zero(Na[i][k]):
                        row[g_offset[s] + k * m.dims[s] + j] += Na[i][k]
                for k in range(m.dims[t]):
                    if not K.is_zero(Ma[k][j]):
                        row[g_offset[t] + i * m.dims[t] + k] -= Ma[k][j]
    coboundary_dim = la.rank(la.from_rows(cob, total, g_total, K))
    return cocycle_dim - coboundary_dim
