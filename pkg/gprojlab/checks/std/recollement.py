from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field

from ...glue.verify import verify_recollement
from ...qspec.parser import ParsedAlgebra
from ...schemas.reports import Verdict
from ..base import Check, CheckContext, require_glued
from ..registry import register


class RecollementSettings(BaseModel):
    node: Optional[int] = Field(default=None, description="Index of one gluing-tree node (post-order); all nodes when unset")


@register("recollement")
class RecollementCheck(Check):
    type_name = "recollement"
    summary = "Recollement identities at arrow nodes and extension-functor identities at vertex nodes, on seeded samples"
    settings_model = RecollementSettings

    def run(self, parsed: ParsedAlgebra, ctx: CheckContext) -> Verdict:
        glued = require_glued(parsed, "recollement")
        nodes = list(glued.nodes())
        index = self.settings.get("node")
        if index is not None and not 0 <= index < len(nodes):
            raise ValueError(f"node {index} out of range; the gluing tree has {len(nodes)} node(s)")
        chosen = list(enumerate(nodes)) if index is None else [(index, nodes[index])]
        witnesses: List[dict] = []
        for i, node in chosen:
            log = ctx.step_logger(f"node {i}")
            log(f"checking {node.kind} node", node.describe())
            witness = verify_recollement(node, ctx.sample, ctx.seed, ctx.max_dim, log=log)
            witnesses.append({"node": i, **witness.model_dump()})
        return Verdict(check=self.type_name, passed=True, evidence={"nodes": witnesses})
