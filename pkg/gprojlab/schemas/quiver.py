from __future__ import annotations

from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Arrow(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    label: str
    source: str = Field(alias="from")
    target: str = Field(alias="to")


class Quiver(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()

    @model_validator(mode="after")
    def _validate_quiver(self) -> "Quiver":
        vertex_ids = set(self.vertices)
        # Unique vertex labels
        if len(vertex_ids) != len(self.vertices):
            raise ValueError("Duplicate vertex labels in quiver")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("Duplicate arrow labels in quiver")
        # All arrow endpoints exist
        for a in self.arrows:
            if a.source not in vertex_ids or a.target not in vertex_ids:
                raise ValueError(f"Arrow {a.label} references missing vertex")
        return self

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)

    def out_arrows(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def opposite(self) -> "Quiver":
        return Quiver(
            vertices=self.vertices,
            arrows=tuple(Arrow(label=a.label, source=a.target, target=a.source) for a in self.arrows),
        )

    def neighbour_maps(self) -> Tuple[Dict[str, List[str]], Dict[str, List[str]]]:
        parents: Dict[str, List[str]] = {v: [] for v in self.vertices}
        children: Dict[str, List[str]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            parents[a.target].append(a.source)
            children[a.source].append(a.target)
        return parents, children


class MonomialIdeal(BaseModel):
    """Zero relations, each a path written in application order (``a.b`` = a then b)."""

    model_config = ConfigDict(frozen=True)

    generators: Tuple[Tuple[str, ...], ...] = ()

    @field_validator("generators", mode="before")
    @classmethod
    def _canonical(cls, value):
        gens = {tuple(g) for g in (value or ())}
        return tuple(sorted(gens))

    @model_validator(mode="after")
    def _check_lengths(self) -> "MonomialIdeal":
        for g in self.generators:
            if len(g) < 2:
                raise ValueError(f"relation {'.'.join(g) or '<empty>'} has length < 2")
        return self

    def max_length(self) -> int:
        return max((len(g) for g in self.generators), default=0)

    def opposite(self) -> "MonomialIdeal":
        return MonomialIdeal(generators=tuple(tuple(reversed(g)) for g in self.generators))
