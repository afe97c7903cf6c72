from __future__ import annotations

import logging
from typing import Dict, Optional

from ..core.algebra import BoundAlgebra
from ..homalg.dimension import inj_dim, proj_dim
from ..rep.ops import injective, projective, simple
from ..schemas.reports import DimensionCertificate, GorensteinReport
from ..server.settings import settings

logger = logging.getLogger("gprojlab.gorenstein")


def _max_finite(table: Dict[str, DimensionCertificate]) -> Optional[int]:
    if not table or not all(c.finite for c in table.values()):
        return None
    return max(c.value or 0 for c in table.values())


def gorenstein_report(a: BoundAlgebra, bound: Optional[int] = None, seed: int = 0,
                      with_simples: bool = True) -> GorensteinReport:
    """id of every P(v) and pd of every I(v); Gorenstein when all are finite.

    An undetermined certificate leaves the verdict open ("unknown at bound N");
    it is never read as a negative answer.
    """
    n = bound if bound is not None else settings.default_bound(a.dimension)
    id_projectives = {v: inj_dim(projective(a, v), n, seed) for v in a.vertices}
    pd_injectives = {v: proj_dim(injective(a, v), n, seed) for v in a.vertices}
    pd_simples = {v: proj_dim(simple(a, v), n, seed) for v in a.vertices} if with_simples else {}

    certificates = list(id_projectives.values()) + list(pd_injectives.values())
    gd = _max_finite(id_projectives)
    if any(c.infinite for c in certificates):
        gorenstein: Optional[bool] = False
        status = "not gorenstein"
    elif all(c.finite for c in certificates):
        gorenstein = True
        status = "certified"
    else:
        gorenstein = None
        status = f"unknown at bound {n}"

    consistent = None
    if gorenstein:
        consistent = gd == _max_finite(pd_injectives)
        if not consistent:
            logger.warning("max id P(v) = %s differs from max pd I(v) = %s", gd, _max_finite(pd_injectives))

    report = GorensteinReport(
        gorenstein=gorenstein,
        gd=gd if gorenstein else None,
        selfinjective=(gd == 0) if gorenstein else gorenstein,
        consistent=consistent,
        bound=n,
        id_projectives=id_projectives,
        pd_injectives=pd_injectives,
        pd_simples=pd_simples,
        global_dimension=_max_finite(pd_simples),
        status=status,
        policy=(f"syzygies computed up to Ω^{n}; infinite dimension only by a recurrence witness "
                "(Ω^i ≅ Ω^j, or every nonprojective summand of Ω^i reappearing in Ω^j)"),
    )
    logger.info("gorenstein report: status=%s gd=%s", status, report.gd)
    return report
