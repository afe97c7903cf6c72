from __future__ import annotations

from typing import Any, Dict, List

from ...errors import GluingError, VerificationFailure
from ...glue.verify import check_defect_hypothesis
from ...qspec.parser import ParsedAlgebra
from ...schemas.reports import Verdict
from ..base import Check, CheckContext, require_glued
from ..registry import register


@register("defect-hypothesis")
class DefectHypothesisCheck(Check):
    type_name = "defect-hypothesis"
    summary = "pd_B Hom_A(M, A) is finite at every arrow node"

    def run(self, parsed: ParsedAlgebra, ctx: CheckContext) -> Verdict:
        glued = require_glued(parsed, "defect-hypothesis")
        arrow_nodes = [n for n in glued.nodes() if n.kind == "arrow"]
        if not arrow_nodes:
            raise GluingError("defect-hypothesis needs at least one connecting arrow")
        rows: List[Dict[str, Any]] = []
        undetermined = False
        for node in arrow_nodes:
            result = check_defect_hypothesis(node, ctx.bound, ctx.seed)
            certificate = result["certificate"]
            row = {
                "arrow": node.connecting_arrow[0] if node.connecting_arrow else None,
                "vertex_v": result["vertex_v"],
                "vertex_w": result["vertex_w"],
                "copies": result["copies"],
                "pd": certificate.label(),
                "certificate": certificate.model_dump(),
                "b_selfinjective": result["b_selfinjective"],
            }
            rows.append(row)
            ctx.logger(f"pd Hom_A(M, A) = {certificate.label()}", {"copies": result["copies"]}, f"arrow {row['arrow']}")
            if result["hypothesis_holds"] is False:
                raise VerificationFailure(self.type_name, {"reason": "Hom_A(M, A) has infinite projective dimension", **row})
            if result["hypothesis_holds"] is None:
                undetermined = True
        return Verdict(check=self.type_name, passed=not undetermined, undetermined=undetermined,
                       evidence={"arrows": rows})
