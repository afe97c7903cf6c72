from __future__ import annotations

import logging
from typing import Dict, List, Optional

from ..rep.ops import dual, is_projective
from ..rep.representation import Representation
from ..schemas.reports import DimensionCertificate
from ..server.settings import settings
from .decompose import decompose
from .iso import is_isomorphic
from .resolution import syzygy

logger = logging.getLogger("gprojlab.homalg")


def _nonprojective_summands(m: Representation, seed: int) -> Optional[List[Representation]]:
    result = decompose(m, seed)
    if result.status != "complete":
        return None
    return [s.module for s in result.summands if not is_projective(s.module)]


def _certificate(kind: str, bound: int, syzygies: List[Representation], **fields) -> DimensionCertificate:
    cert = DimensionCertificate(kind=kind, bound=bound,
                                syzygy_dims=[list(s.dimension_vector()) for s in syzygies], **fields)
    cert._syzygies = list(syzygies)
    return cert


def proj_dim(m: Representation, bound: Optional[int] = None, seed: int = 0) -> DimensionCertificate:
    """Iterate minimal syzygies until one is projective or a recurrence is certified.

    Two recurrences certify infinite dimension: Ω^i ≅ Ω^j (periodic), or every
    nonprojective indecomposable summand of Ω^i reappearing in Ω^j (summand).
    """
    n = bound if bound is not None else settings.default_bound(m.algebra.dimension)
    if n < 1:
        raise ValueError("resolution bound must be >= 1")
    syzygies = [m]
    if m.is_zero():
        return _certificate("finite", n, syzygies, value=0)
    can_decompose = m.algebra.field.characteristic == 0
    limit = settings.GPROJLAB_DECOMPOSE_LIMIT
    summands: Dict[int, Optional[List[Representation]]] = {}

    def summands_of(i: int) -> Optional[List[Representation]]:
        if i not in summands:
            s = syzygies[i]
            summands[i] = _nonprojective_summands(s, seed) if s.total_dim <= limit else None
        return summands[i]

    for j in range(1, n + 1):
        omega = syzygy(syzygies[-1])
        syzygies.append(omega)
        if omega.is_zero():
            return _certificate("finite", n, syzygies, value=j - 1)
        for i in range(j):
            if syzygies[i].dimension_vector() != omega.dimension_vector():
                continue
            result = is_isomorphic(syzygies[i], omega, seed)
            if result.yes:
                cert = _certificate("infinite", n, syzygies, recurrence=(i, j), witness="periodic",
                                    witness_maps=result.iso.to_dict() if result.iso is not None else None)
                cert._iso = result.iso
                return cert
        if not can_decompose:
            continue
        later = summands_of(j)
        if later is None:
            continue
        for i in range(j):
            earlier = summands_of(i)
            if not earlier:
                continue
            matches = []
            for x in earlier:
                hit = next((y for y in later if is_isomorphic(x, y, seed).yes), None)
                if hit is None:
                    break
                matches.append({"summand": list(x.dimension_vector()), "reappears_as": list(hit.dimension_vector())})
            else:
                return _certificate("infinite", n, syzygies, recurrence=(i, j), witness="summand",
                                    witness_summands=matches)
    logger.info("dimension search undetermined at bound %s", n)
    return _certificate("undetermined", n, syzygies)


def inj_dim(m: Representation, bound: Optional[int] = None, seed: int = 0) -> DimensionCertificate:
    return proj_dim(dual(m), bound, seed)


def reverify(cert: DimensionCertificate, seed: int = 0) -> bool:
    """Re-check a certificate from the syzygies it stored."""
    syz = cert._syzygies
    if cert.kind == "finite":
        n = cert.value or 0
        if not is_projective(syz[n]):
            return False
        return n == 0 or not is_projective(syz[n - 1])
    if cert.kind == "infinite" and cert.recurrence is not None:
        i, j = cert.recurrence
        if syz[i].is_zero() or syz[j].is_zero():
            return False
        if cert.witness == "periodic":
            if cert._iso is not None:
                return cert._iso.commutes() and cert._iso.is_iso()
            return is_isomorphic(syz[i], syz[j], seed).yes
        earlier = _nonprojective_summands(syz[i], seed) or []
        later = _nonprojective_summands(syz[j], seed) or []
        return bool(earlier) and all(any(is_isomorphic(x, y, seed).yes for y in later) for x in earlier)
    return cert.kind == "undetermined"
