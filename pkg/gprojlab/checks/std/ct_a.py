from __future__ import annotations

from itertools import permutations
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from ...core.algebra import BoundAlgebra
from ...core.constructors import nakayama_cyclic
from ...errors import NotGorenstein, VerificationFailure
from ...gorenstein.gproj import gproj_indecomposables
from ...gorenstein.report import gorenstein_report
from ...gorenstein.stable import stable_table
from ...qspec.parser import ParsedAlgebra
from ...schemas.reports import Verdict
from ..base import Check, CheckContext
from ..registry import register


class CtASettings(BaseModel):
    triangles: Optional[int] = Field(default=None, description="Triangle count; overrides the document's 'triangles' statement")


def is_triangle(algebra: BoundAlgebra) -> bool:
    """3-cycle with every path of length 2 zero."""
    if len(algebra.vertices) != 3 or len(algebra.arrows) != 3 or algebra.dimension != 6:
        return False
    if not algebra.is_nakayama():
        return False
    v, seen = algebra.vertices[0], set()
    for _ in range(3):
        seen.add(v)
        v = algebra.quiver.out_arrows(v)[0].target
    return v == algebra.vertices[0] and len(seen) == 3


def _same_up_to_order(block: List[List[int]], reference: List[List[int]]) -> bool:
    n = len(reference)
    if len(block) != n:
        return False
    return any(all(block[p[i]][p[j]] == reference[i][j] for i in range(n) for j in range(n))
               for p in permutations(range(n)))


@register("ct-a")
class CtACheck(Check):
    type_name = "ct-a"
    summary = "Gluings of triangles and linear pieces: 3t Gorenstein projectives in t blocks equal to the triangle's table, Gd <= 1"
    settings_model = CtASettings

    def run(self, parsed: ParsedAlgebra, ctx: CheckContext) -> Verdict:
        t = self.settings.get("triangles")
        if t is None:
            t = parsed.triangles
        if t is None:
            raise ValueError("ct-a needs the document to declare 'triangles t;'")
        log = ctx.step_logger("ct-a")
        triangles = sorted(name for name, a in parsed.components.items() if is_triangle(a))
        if len(triangles) != t:
            raise VerificationFailure(self.type_name, {"reason": "triangle count differs from the declared one",
                                                       "declared": t, "triangle_components": triangles})

        s3 = nakayama_cyclic(3, 2, field=parsed.algebra.field)
        s3_report = gorenstein_report(s3, ctx.bound, ctx.seed, with_simples=False)
        s3_list = gproj_indecomposables(s3, s3_report, seed=ctx.seed)
        reference = stable_table(s3_list.modules, s3_list.labels)
        log("reference table computed", {"labels": reference.labels, "table": reference.matrix})

        report = gorenstein_report(parsed.algebra, ctx.bound, ctx.seed, with_simples=False)
        if report.gorenstein is None:
            return Verdict(check=self.type_name, passed=False, undetermined=True,
                           evidence={"status": report.status, "declared": t})
        if not report.certified:
            raise NotGorenstein(f"algebra is not Gorenstein ({report.status})", report)
        evidence: Dict[str, object] = {"declared": t, "triangle_components": triangles, "gd": report.gd,
                                       "reference": reference.model_dump()}
        if report.gd is None or report.gd > 1:
            raise VerificationFailure(self.type_name, {"reason": "Gorenstein dimension exceeds 1", **evidence})

        found = gproj_indecomposables(parsed.algebra, report, glued=parsed.glued, seed=ctx.seed)
        evidence.update({"objects": len(found), "labels": found.labels, "complete": found.complete,
                         "strategy": found.strategy})
        log(f"{len(found)} nonprojective indecomposable Gorenstein projectives", {"strategy": found.strategy})
        if found.complete is None:
            return Verdict(check=self.type_name, passed=False, undetermined=True, evidence=evidence)
        if not found.complete or len(found) != 3 * t:
            raise VerificationFailure(self.type_name, {"reason": f"expected {3 * t} objects", **evidence})

        table = stable_table(found.modules, found.labels)
        blocks: Dict[str, List[int]] = {}
        for i, label in enumerate(found.labels):
            blocks.setdefault(label.split(":", 1)[0] if ":" in label else "", []).append(i)
        owner = {i: key for key, idx in blocks.items() for i in idx}
        for i, row in enumerate(table.matrix):
            for j, x in enumerate(row):
                if x and owner[i] != owner[j]:
                    raise VerificationFailure(self.type_name, {"reason": "stable table is not block diagonal", "row": i,
                                                               "column": j, "value": x, "table": table.matrix})
        for key, idx in blocks.items():
            if not _same_up_to_order(table.block(idx), reference.matrix):
                raise VerificationFailure(self.type_name, {"reason": "block differs from the triangle's table",
                                                           "block": key, "table": table.block(idx),
                                                           "expected": reference.matrix})
        if len(blocks) != t:
            raise VerificationFailure(self.type_name, {"reason": f"expected {t} blocks", "blocks": sorted(blocks)})
        evidence.update({"table": table.model_dump(), "blocks": {k: v for k, v in sorted(blocks.items())}})
        return Verdict(check=self.type_name, passed=True, evidence=evidence)
