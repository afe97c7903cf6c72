"""Gorenstein-projective membership and enumeration of indecomposables."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Literal, Optional, Tuple

from ..core import linalg as la
from ..core.algebra import BoundAlgebra
from ..core.gluing import GluedAlgebra
from ..errors import NotGorenstein, ShapeMismatch
from ..glue.functors import extension_into
from ..homalg.decompose import decompose
from ..homalg.ext import ext_dim
from ..homalg.iso import is_isomorphic
from ..homalg.resolution import ResolutionSegment, syzygy
from ..rep.hom import hom_basis
from ..rep.ops import cokernel, direct_sum, is_projective, regular_module, simple, truncated_projective
from ..rep.representation import Morphism, Representation
from ..schemas.reports import GorensteinReport, GprojEnumeration, GprojVerdict
from .report import gorenstein_report

logger = logging.getLogger("gprojlab.gorenstein")

HEURISTIC_DEPTH = 3


def _ext_vanishing(m: Representation, regular: Representation, degrees: int, bound: int) -> Optional[int]:
    """First degree 1..degrees with Ext^i(m, A) != 0, or None."""
    if m.is_zero():
        return None
    segment = ResolutionSegment(m)
    for i in range(1, degrees + 1):
        if ext_dim(i, m, regular, bound=bound, segment=segment):
            return i
    return None


def left_approximation(m: Representation, regular: Representation) -> Morphism:
    """m -> A^r built from a basis of Hom(m, A)."""
    basis = hom_basis(m, regular)
    K = m.domain
    if basis.dim == 0:
        target = direct_sum([], m.algebra).module
        return Morphism(m, target, {v: la.zeros(0, m.dims[v], K) for v in m.algebra.vertices})
    target = direct_sum([regular] * basis.dim).module
    maps = {v: la.vstack([f.maps[v] for f in basis.morphisms], m.dims[v], K) for v in m.algebra.vertices}
    return Morphism(m, target, maps)


def is_gproj(m: Representation, report: GorensteinReport, *, heuristic: bool = False,
             bound: Optional[int] = None) -> GprojVerdict:
    """Gorenstein projectivity through Ext^i(M, A) = 0 for 1 <= i <= Gd A.

    Over a d-Gorenstein algebra the Gorenstein projectives are the d-th
    syzygies, so vanishing beyond d is automatic. Other algebras only get the
    bounded heuristic, which must be asked for explicitly.
    """
    regular = regular_module(m.algebra)
    if report.certified:
        d = report.gd or 0
        if d == 0:
            return GprojVerdict(gproj=True, certified=True, mode="certified", degrees_checked=0,
                                note="selfinjective: every module is Gorenstein projective")
        failing = _ext_vanishing(m, regular, d, max(report.bound, d + 1))
        return GprojVerdict(gproj=failing is None, certified=True, mode="certified", degrees_checked=d,
                            failing_degree=failing,
                            note=f"Ext^i(M, A) checked for 1 <= i <= {d}; higher degrees vanish over a {d}-Gorenstein algebra")
    if not heuristic:
        raise NotGorenstein(f"Gorenstein projectivity needs a certified Gorenstein algebra ({report.status})", report)

    depth = bound if bound is not None else HEURISTIC_DEPTH
    note = f"heuristic: unverified beyond degree {depth}"
    current = m
    for step in range(depth + 1):
        failing = _ext_vanishing(current, regular, depth, depth + 1)
        if failing is not None:
            return GprojVerdict(gproj=False, certified=False, mode="heuristic", degrees_checked=depth,
                                failing_degree=failing, note=f"{note}; Ext^{failing} fails at coresolution step {step}")
        if current.is_zero() or step == depth:
            break
        approx = left_approximation(current, regular)
        if not approx.is_injective():
            return GprojVerdict(gproj=False, certified=False, mode="heuristic", degrees_checked=depth,
                                note=f"{note}; add(A)-approximation not injective at coresolution step {step}")
        current, _ = cokernel(approx)
    return GprojVerdict(gproj=True, certified=False, mode="heuristic", degrees_checked=depth, note=note)


@dataclass
class GprojCollection:
    labels: List[str] = field(default_factory=list)
    modules: List[Representation] = field(default_factory=list)
    provenance: List[str] = field(default_factory=list)

    def add(self, label: str, module: Representation, provenance: str, seed: int) -> bool:
        if any(is_isomorphic(module, other, seed).yes for other in self.modules):
            return False
        self.labels.append(label)
        self.modules.append(module)
        self.provenance.append(provenance)
        return True


def _nonprojective_pieces(m: Representation, seed: int) -> Optional[List[Representation]]:
    if m.is_zero():
        return []
    result = decompose(m, seed)
    if result.status != "complete":
        return None
    return [s.module for s in result.summands if not is_projective(s.module)]


def close_under_syzygy(found: GprojCollection, a: BoundAlgebra, report: GorensteinReport, seed: int) -> Tuple[int, bool]:
    """Add nonprojective summands of Ω^d(S_v) and close under Ω; (added, decided)."""
    d = report.gd or 0
    queue: List[Tuple[Representation, str]] = []
    for v in a.vertices:
        m = simple(a, v)
        for _ in range(d):
            m = syzygy(m)
        queue.append((m, f"Ω^{d}(S_{v}) sweep"))
    queue.extend((syzygy(m), "Ω-closure") for m in found.modules)
    added = 0
    decided = True
    while queue:
        m, origin = queue.pop(0)
        pieces = _nonprojective_pieces(m, seed)
        if pieces is None:
            decided = False
            continue
        for piece in pieces:
            label = f"G{len(found.labels)}"
            if found.add(label, piece, origin, seed):
                added += 1
                logger.info("closure added %s with dimension vector %s", label, piece.dimension_vector())
                queue.append((syzygy(piece), "Ω-closure"))
    return added, decided


def _nakayama(a: BoundAlgebra, report: GorensteinReport, found: GprojCollection, seed: int, heuristic: bool) -> None:
    for v in a.vertices:
        for length in range(1, a.loewy_length(v)):
            u = truncated_projective(a, v, length)
            if is_gproj(u, report, heuristic=heuristic).gproj:
                found.add(f"U({v},{length})", u, "uniserial", seed)


def gproj_indecomposables(a: BoundAlgebra, report: GorensteinReport, *, glued: Optional[GluedAlgebra] = None,
                          strategy: Optional[Literal["nakayama", "gluing", "generic"]] = None,
                          seed: int = 0, heuristic: bool = False) -> GprojEnumeration:
    """Nonprojective indecomposable Gorenstein projectives up to isomorphism."""
    if glued is not None and glued.algebra != a:
        raise ShapeMismatch("gluing tree does not describe this algebra")
    if strategy is None:
        strategy = "gluing" if glued is not None else ("nakayama" if a.is_nakayama() else "generic")
    if not report.certified and not (heuristic and strategy == "nakayama"):
        raise NotGorenstein(f"enumeration needs a certified Gorenstein algebra ({report.status})", report)

    found = GprojCollection()
    complete: Optional[bool]
    note = ""
    if strategy == "nakayama":
        _nakayama(a, report, found, seed, heuristic)
        complete = True if report.certified else None
        note = "all indecomposables are uniserial" if report.certified else "heuristic membership"
    elif strategy == "gluing":
        if glued is None:
            raise ShapeMismatch("the gluing strategy needs the gluing tree")
        for leaf in glued.leaves():
            sub_report = gorenstein_report(leaf.algebra, seed=seed, with_simples=False)
            if not sub_report.certified:
                raise NotGorenstein(f"component {leaf.name} is not certified Gorenstein ({sub_report.status})", sub_report)
            sub = gproj_indecomposables(leaf.algebra, sub_report, seed=seed)
            extend = extension_into(glued, leaf.name)
            for label, module in zip(sub.labels, sub.modules):
                image = extend(module)
                if not is_projective(image) and is_gproj(image, report).gproj:
                    found.add(f"{leaf.name}:{label}", image, f"extension of {leaf.name}", seed)
        added, decided = close_under_syzygy(found, a, report, seed)
        complete = (added == 0) if decided else None
        if added:
            note = f"closure sweep found {added} module(s) missing from the component lists"
        elif not decided:
            note = "closure sweep undecided: decomposition inconclusive"
        else:
            note = "closed under Ω and contains every summand of Ω^d(S_v)"
    else:
        _, decided = close_under_syzygy(found, a, report, seed)
        complete = None
        note = "possibly incomplete: Ω-closure of the Ω^d(simples) sweep"
        if not decided:
            note += "; some decompositions were inconclusive"

    enumeration = GprojEnumeration(
        strategy=strategy,
        labels=found.labels,
        complete=complete,
        note=note,
        provenance=found.provenance,
        dimension_vectors=[list(m.dimension_vector()) for m in found.modules],
    )
    enumeration._modules = list(found.modules)
    return enumeration
