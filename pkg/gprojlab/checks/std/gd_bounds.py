from __future__ import annotations

from ...glue.verify import gd_bound_check
from ...qspec.parser import ParsedAlgebra
from ...schemas.reports import Verdict
from ..base import Check, CheckContext, require_glued
from ..registry import register


@register("gd-bounds")
class GdBoundsCheck(Check):
    type_name = "gd-bounds"
    summary = "Gorenstein dimension bounds at every node of the gluing tree"

    def run(self, parsed: ParsedAlgebra, ctx: CheckContext) -> Verdict:
        glued = require_glued(parsed, "gd-bounds")
        verdict = gd_bound_check(glued, ctx.bound, ctx.seed)
        for i, node in enumerate(verdict.evidence.get("nodes", [])):
            ctx.logger(f"{node['kind']} node: Gd {node['gd']} from {node['gd_a']} and {node['gd_b']}", None, f"node {i}")
        return verdict
