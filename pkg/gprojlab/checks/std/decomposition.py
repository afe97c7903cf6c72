from __future__ import annotations

from ...glue.verify import verify_gproj_decomposition
from ...qspec.parser import ParsedAlgebra
from ...schemas.reports import Verdict
from ..base import Check, CheckContext, require_glued
from ..registry import register


@register("decomposition")
class DecompositionCheck(Check):
    type_name = "decomposition"
    summary = "Stable category of Gorenstein projectives splits along the gluing components"

    def run(self, parsed: ParsedAlgebra, ctx: CheckContext) -> Verdict:
        glued = require_glued(parsed, "decomposition")
        return verify_gproj_decomposition(glued, ctx.bound, ctx.seed, log=ctx.step_logger("decomposition"))
