from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Literal, Optional, Tuple

from ..errors import ShapeMismatch
from ..rep.hom import HomBasis, hom_basis
from ..rep.ops import radical_layers, socle_vector, top_vector
from ..rep.representation import Morphism, Representation, identity

RANDOM_TRIALS = 8
GRID_LIMIT = 64


@dataclass(frozen=True)
class IsoResult:
    verdict: Literal["yes", "no", "inconclusive"]
    iso: Optional[Morphism] = None
    reason: str = ""

    @property
    def yes(self) -> bool:
        return self.verdict == "yes"

    @property
    def no(self) -> bool:
        return self.verdict == "no"


def uniserial_signature(m: Representation) -> Optional[Tuple[str, int]]:
    """(top vertex, Loewy length) when m is uniserial, else None."""
    layers = radical_layers(m)
    if not layers or any(sum(layer) != 1 for layer in layers):
        return None
    top_vertex = m.algebra.vertices[layers[0].index(1)]
    return top_vertex, len(layers)


def _search(basis: HomBasis, seed: int) -> Optional[Morphism]:
    if basis.dim == 0:
        return None
    K = basis.source.domain
    rng = random.Random(seed)
    for _ in range(RANDOM_TRIALS):
        f = basis.combination([K.convert(rng.randint(-5, 5)) for _ in range(basis.dim)])
        if f.is_iso():
            return f
    # deterministic sweep: single basis elements, then a {0,1,2} grid
    for i in range(basis.dim):
        f = basis.morphisms[i]
        if f.is_iso():
            return f
    for count, coeffs in enumerate(itertools.product((0, 1, 2), repeat=basis.dim)):
        if count >= GRID_LIMIT:
            break
        if not any(coeffs):
            continue
        f = basis.combination([K.convert(c) for c in coeffs])
        if f.is_iso():
            return f
    return None


def is_isomorphic(m: Representation, n: Representation, seed: int = 0) -> IsoResult:
    if m.algebra != n.algebra:
        raise ShapeMismatch("isomorphism test across different algebras")
    if m.dimension_vector() != n.dimension_vector():
        return IsoResult("no", reason="dimension vectors differ")
    if m.is_zero():
        return IsoResult("yes", identity(m), "zero modules")

    method = "search"
    if m.algebra.is_nakayama():
        sm, sn = uniserial_signature(m), uniserial_signature(n)
        if sm is not None and sn is not None:
            if sm != sn:
                return IsoResult("no", reason=f"uniserial signatures {sm} vs {sn}")
            method = "uniserial"
    if method != "uniserial":
        if top_vector(m) != top_vector(n):
            return IsoResult("no", reason="top dimension vectors differ")
        if socle_vector(m) != socle_vector(n):
            return IsoResult("no", reason="socle dimension vectors differ")
    forward = hom_basis(m, n)
    backward = hom_basis(n, m)
    if forward.dim != backward.dim:
        return IsoResult("no", reason=f"dim Hom(m,n)={forward.dim} but dim Hom(n,m)={backward.dim}")
    f = _search(forward, seed)
    if f is not None:
        return IsoResult("yes", f, method)
    if method == "uniserial":
        # same top vertex and length over a Nakayama algebra
        return IsoResult("yes", None, "uniserial rule")
    return IsoResult("inconclusive", reason="no invertible morphism found in the searched grid")
