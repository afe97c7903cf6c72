from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, PrivateAttr


class DimensionCertificate(BaseModel):
    """Outcome of a projective (or, through duality, injective) dimension search."""

    kind: Literal["finite", "infinite", "undetermined"]
    value: Optional[int] = None
    bound: int
    # infinite: Ω^i and Ω^j with i < j
    recurrence: Optional[Tuple[int, int]] = None
    witness: Optional[Literal["periodic", "summand"]] = None
    witness_maps: Optional[Dict[str, List[List[str]]]] = None
    witness_summands: Optional[List[Dict[str, Any]]] = None
    syzygy_dims: List[List[int]] = Field(default_factory=list)

    _syzygies: List[Any] = PrivateAttr(default_factory=list)
    _iso: Any = PrivateAttr(default=None)

    @property
    def finite(self) -> bool:
        return self.kind == "finite"

    @property
    def infinite(self) -> bool:
        return self.kind == "infinite"

    def label(self) -> str:
        if self.kind == "finite":
            return str(self.value)
        if self.kind == "infinite":
            return "inf"
        return f"unknown at bound {self.bound}"


class GorensteinReport(BaseModel):
    gorenstein: Optional[bool]
    gd: Optional[int] = None
    selfinjective: Optional[bool] = None
    consistent: Optional[bool] = None
    bound: int
    id_projectives: Dict[str, DimensionCertificate]
    pd_injectives: Dict[str, DimensionCertificate]
    pd_simples: Dict[str, DimensionCertificate] = Field(default_factory=dict)
    global_dimension: Optional[int] = None
    status: str = ""
    policy: str = ""

    @property
    def certified(self) -> bool:
        return self.gorenstein is True and self.gd is not None


class GprojVerdict(BaseModel):
    gproj: bool
    certified: bool
    mode: Literal["certified", "heuristic"]
    degrees_checked: int
    failing_degree: Optional[int] = None
    note: str = ""


class StableHomTable(BaseModel):
    labels: List[str]
    matrix: List[List[int]]

    def block(self, indices: List[int]) -> List[List[int]]:
        return [[self.matrix[i][j] for j in indices] for i in indices]


class OrbitPartition(BaseModel):
    orbits: List[List[int]]
    omega: Dict[int, int]
    sigma: Dict[int, int]


class GprojEnumeration(BaseModel):
    strategy: Literal["nakayama", "gluing", "generic"]
    labels: List[str]
    complete: Optional[bool] = None
    note: str = ""
    provenance: List[str] = Field(default_factory=list)
    dimension_vectors: List[List[int]] = Field(default_factory=list)

    _modules: List[Any] = PrivateAttr(default_factory=list)

    @property
    def modules(self) -> List[Any]:
        return self._modules

    def __len__(self) -> int:
        return len(self.labels)


class CheckRecord(BaseModel):
    name: str
    passed: bool
    detail: Dict[str, Any] = Field(default_factory=dict)


class RecollementWitness(BaseModel):
    kind: Literal["arrow", "vertex"]
    sample: int
    seed: int
    max_dim: int
    records: List[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)


class Verdict(BaseModel):
    check: str
    passed: bool
    undetermined: bool = False
    evidence: Dict[str, Any] = Field(default_factory=dict)
    counterexample: Optional[Dict[str, Any]] = None
