"""Sample-based and exact verification drivers for glued algebras."""
from __future__ import annotations

import logging
import random
from typing import Any, Callable, Dict, List, Optional

from ..core import linalg as la
from ..core.gluing import GluedAlgebra
from ..errors import NotGorenstein, VerificationFailure
from ..gorenstein.gproj import GprojCollection, close_under_syzygy, gproj_indecomposables, is_gproj
from ..gorenstein.report import gorenstein_report
from ..gorenstein.stable import stable_table
from ..homalg.dimension import proj_dim
from ..homalg.iso import is_isomorphic
from ..rep.hom import hom_dim
from ..rep.ops import injective, is_injective, is_projective, power, projective
from ..rep.representation import Morphism, Representation
from ..rep.sampling import ShortExact, random_morphism, random_short_exact, sample_modules
from ..schemas.reports import CheckRecord, DimensionCertificate, GorensteinReport, RecollementWitness, Verdict
from ..server.settings import settings
from .functors import ArrowRecollement, VertexGluingFunctors, extension_into

logger = logging.getLogger("gprojlab.checks")

LogFn = Callable[[str, Optional[Dict[str, Any]]], None]


def _default_log(message: str, data: Optional[Dict[str, Any]] = None) -> None:
    logger.info(message)


class _Recorder:
    def __init__(self, witness: RecollementWitness, log: LogFn) -> None:
        self.witness = witness
        self.log = log
        self.counts: Dict[str, int] = {}

    def check(self, name: str, ok: bool, counterexample: Optional[Dict[str, Any]] = None) -> None:
        if not ok:
            record = CheckRecord(name=name, passed=False, detail=counterexample or {})
            self.witness.records.append(record)
            self.log(f"check failed: {name}", counterexample)
            raise VerificationFailure(name, {"check": name, **(counterexample or {})})
        self.counts[name] = self.counts.get(name, 0) + 1

    def finish(self) -> RecollementWitness:
        for name, count in self.counts.items():
            self.witness.records.append(CheckRecord(name=name, passed=True, detail={"instances": count}))
        self.log("recollement checks passed", {"checks": len(self.counts)})
        return self.witness


def _ranks(f: Morphism) -> Dict[str, int]:
    return {v: la.rank(m) for v, m in f.maps.items()}


def _exact(inc: Morphism, proj: Morphism, *, left: bool = True) -> bool:
    """0 -> A -> B -> C -> 0 exact (or A -> B -> C -> 0 when ``left`` is False)."""
    if not inc.then(proj).is_zero() or not proj.is_surjective():
        return False
    if left and not inc.is_injective():
        return False
    r_inc, r_proj = _ranks(inc), _ranks(proj)
    return all(r_inc[v] == proj.source.dims[v] - r_proj[v] for v in proj.source.algebra.vertices)


def _functorial(f: Morphism) -> Optional[str]:
    return f.failing_square()


def _sequences(algebra, count: int, seed: int, max_dim: int) -> List[ShortExact]:
    rng = random.Random(seed)
    return [random_short_exact(algebra, rng, max_dim) for _ in range(count)]


def _morphisms(modules: List[Representation], seed: int) -> List[Morphism]:
    rng = random.Random(seed)
    return [random_morphism(m, n, rng) for m, n in zip(modules, modules[1:])]


def verify_recollement(glued: GluedAlgebra, sample: Optional[int] = None, seed: Optional[int] = None,
                       max_dim: Optional[int] = None, *, recollement: Optional[ArrowRecollement] = None,
                       functors: Optional[VertexGluingFunctors] = None,
                       log: LogFn = _default_log) -> RecollementWitness:
    """Check the recollement (arrow node) or extension-functor (vertex node) identities on samples.

    The first failing check raises ``VerificationFailure`` carrying the inputs
    that broke it.
    """
    sample = sample if sample is not None else settings.GPROJLAB_SAMPLE
    seed = seed if seed is not None else settings.GPROJLAB_SEED
    max_dim = max_dim if max_dim is not None else settings.GPROJLAB_SAMPLE_DIM
    witness = RecollementWitness(kind=glued.kind, sample=sample, seed=seed, max_dim=max_dim)
    rec = _Recorder(witness, log)
    if glued.kind == "arrow":
        _verify_arrow(recollement or ArrowRecollement(glued), sample, seed, max_dim, rec)
    else:
        _verify_vertex(functors or VertexGluingFunctors(glued), sample, seed, max_dim, rec)
    return rec.finish()


def _verify_arrow(r: ArrowRecollement, sample: int, seed: int, max_dim: int, rec: _Recorder) -> None:
    lam = sample_modules(r.algebra, sample, seed, max_dim)
    xs = sample_modules(r.a_algebra, sample, seed + 1, max_dim)
    ys = sample_modules(r.b_algebra, sample, seed + 2, max_dim)
    rec.log("sampled modules", {"lambda": len(lam), "A": len(xs), "B": len(ys), "orientation": r.orientation})

    for t in lam:
        rec.check("triple round trip", r.assemble_triple(r.split_triple(t)).same_as(t), {"module": t.to_dict()})
    for x in xs:
        rec.check("j^* i_* = 0", r.j_star(r.i_star(x)).is_zero(), {"x": x.to_dict()})
        rec.check("i^! i_* = id", r.i_shriek(r.i_star(x)).same_as(x), {"x": x.to_dict()})
        rec.check("i^* i_* = id", is_isomorphic(r.i_upper_star(r.i_star(x)), x, seed).yes, {"x": x.to_dict()})
    for y in ys:
        rec.check("i^* j_! = 0", r.i_upper_star(r.j_lower_shriek(y)).is_zero(), {"y": y.to_dict()})
        rec.check("j^* j_! = id", r.j_star(r.j_lower_shriek(y)).same_as(y), {"y": y.to_dict()})
        rec.check("j^* j_* = id", r.j_star(r.j_lower_star(y)).same_as(y), {"y": y.to_dict()})

    for t, x, y in zip(lam, xs, ys):
        pair = {"t": t.to_dict(), "x": x.to_dict(), "y": y.to_dict()}
        rec.check("adjunction i^* -| i_*", hom_dim(r.i_upper_star(t), x) == hom_dim(t, r.i_star(x)), pair)
        rec.check("adjunction i_* -| i^!", hom_dim(r.i_star(x), t) == hom_dim(x, r.i_shriek(t)), pair)
        rec.check("adjunction j_! -| j^*", hom_dim(r.j_lower_shriek(y), t) == hom_dim(y, r.j_star(t)), pair)
        rec.check("adjunction j^* -| j_*", hom_dim(r.j_star(t), y) == hom_dim(t, r.j_lower_star(y)), pair)

    for t in lam:
        counit, unit = r.counit_shriek(t), r.unit_upper(t)
        rec.check("j_! j^* T -> T -> i_* i^* T -> 0 exact", _exact(counit, unit, left=False), {"module": t.to_dict()})
        if r.j_star(t).is_zero():
            rec.check("Ker j^* in Im i_*", r.i_star(r.i_shriek(t)).same_as(t), {"module": t.to_dict()})

    for name, f in (("i_*", r.i_star_map), ("j_!", r.j_lower_shriek_map), ("j_*", r.j_lower_star_map)):
        base = xs if name == "i_*" else ys
        for g in _morphisms(base, seed + 3):
            bad = _functorial(f(g))
            rec.check(f"{name} on morphisms", bad is None, {"failing_square": bad, "source": g.source.to_dict(),
                                                             "target": g.target.to_dict()})
    for name, f in (("i^*", r.i_upper_star_map), ("i^!", r.i_shriek_map), ("j^*", r.j_star_map)):
        for g in _morphisms(lam, seed + 4):
            bad = _functorial(f(g))
            rec.check(f"{name} on morphisms", bad is None, {"failing_square": bad, "source": g.source.to_dict(),
                                                             "target": g.target.to_dict()})

    count = max(1, sample // 4)
    for s in _sequences(r.algebra, count, seed + 5, max_dim):
        ses = {"sub": s.sub.to_dict(), "middle": s.middle.to_dict(), "quot": s.quot.to_dict()}
        rec.check("i^* right exact", _exact(r.i_upper_star_map(s.inclusion), r.i_upper_star_map(s.projection), left=False), ses)
        rec.check("i^! exact", _exact(r.i_shriek_map(s.inclusion), r.i_shriek_map(s.projection)), ses)
        rec.check("j^* exact", _exact(r.j_star_map(s.inclusion), r.j_star_map(s.projection)), ses)
    for s in _sequences(r.a_algebra, count, seed + 6, max_dim):
        ses = {"sub": s.sub.to_dict(), "middle": s.middle.to_dict(), "quot": s.quot.to_dict()}
        rec.check("i_* exact", _exact(r.i_star_map(s.inclusion), r.i_star_map(s.projection)), ses)
    for s in _sequences(r.b_algebra, count, seed + 7, max_dim):
        ses = {"sub": s.sub.to_dict(), "middle": s.middle.to_dict(), "quot": s.quot.to_dict()}
        rec.check("j_! exact", _exact(r.j_lower_shriek_map(s.inclusion), r.j_lower_shriek_map(s.projection)), ses)
        rec.check("j_* exact", _exact(r.j_lower_star_map(s.inclusion), r.j_lower_star_map(s.projection)), ses)


def _verify_vertex(f: VertexGluingFunctors, sample: int, seed: int, max_dim: int, rec: _Recorder) -> None:
    glued = f.glued
    gam = sample_modules(f.algebra, sample, seed, max_dim)
    xs = sample_modules(glued.a_part.algebra, sample, seed + 1, max_dim)
    ys = sample_modules(glued.b_part.algebra, sample, seed + 2, max_dim)
    rec.log("sampled modules", {"gamma": len(gam), "A": len(xs), "B": len(ys)})

    sides = (
        ("j", ys, f.j_restrict, f.j_lambda, f.j_rho, f.j_lambda_map, f.j_rho_map, glued.b_part.algebra),
        ("i", xs, f.i_restrict, f.i_lambda, f.i_rho, f.i_lambda_map, f.i_rho_map, glued.a_part.algebra),
    )
    for name, base, restrict, lam, rho, lam_map, rho_map, part in sides:
        for y in base:
            rec.check(f"{name} {name}_lambda = id", restrict(lam(y)).same_as(y), {"module": y.to_dict()})
            rec.check(f"{name} {name}_rho = id", restrict(rho(y)).same_as(y), {"module": y.to_dict()})
        for y, x in zip(base, gam):
            pair = {"part_module": y.to_dict(), "glued_module": x.to_dict()}
            rec.check(f"adjunction {name}_lambda -| {name}", hom_dim(lam(y), x) == hom_dim(y, restrict(x)), pair)
            rec.check(f"adjunction {name} -| {name}_rho", hom_dim(restrict(x), y) == hom_dim(x, rho(y)), pair)
        for g in _morphisms(base, seed + 3):
            for label, fn in ((f"{name}_lambda", lam_map), (f"{name}_rho", rho_map)):
                bad = _functorial(fn(g))
                rec.check(f"{label} on morphisms", bad is None, {"failing_square": bad, "source": g.source.to_dict(),
                                                                  "target": g.target.to_dict()})
        for s in _sequences(part, max(1, sample // 4), seed + 5, max_dim):
            ses = {"sub": s.sub.to_dict(), "middle": s.middle.to_dict(), "quot": s.quot.to_dict()}
            rec.check(f"{name}_lambda exact", _exact(lam_map(s.inclusion), lam_map(s.projection)), ses)
            rec.check(f"{name}_rho exact", _exact(rho_map(s.inclusion), rho_map(s.projection)), ses)
        for u in part.vertices:
            rec.check(f"{name}_lambda preserves projectives", is_projective(lam(projective(part, u))), {"vertex": u})
            rec.check(f"{name}_rho preserves injectives", is_injective(rho(injective(part, u))), {"vertex": u})

    for s in _sequences(f.algebra, max(1, sample // 4), seed + 6, max_dim):
        ses = {"sub": s.sub.to_dict(), "middle": s.middle.to_dict(), "quot": s.quot.to_dict()}
        rec.check("j exact", _exact(f.j_restrict_map(s.inclusion), f.j_restrict_map(s.projection)), ses)
        rec.check("i exact", _exact(f.i_restrict_map(s.inclusion), f.i_restrict_map(s.projection)), ses)


def check_defect_hypothesis(glued: GluedAlgebra, bound: Optional[int] = None, seed: int = 0) -> Dict[str, Any]:
    """pd_B Hom_A(M, A) for the bimodule M of an arrow node.

    With M = A e_v ⊗ e_w B, Hom_A(M, A) = D(e_w B) ⊗ e_v A, i.e. I_B(w) to the
    power dim e_v A (the number of nonzero A-paths ending at v).
    """
    r = ArrowRecollement(glued)
    copies = len(r.a_algebra.paths_to(r.v))
    module = power(injective(r.b_algebra, r.w), copies)
    certificate: DimensionCertificate = proj_dim(module, bound, seed)
    b_report = gorenstein_report(r.b_algebra, bound, seed, with_simples=False)
    return {
        "certificate": certificate,
        "module": module,
        "copies": copies,
        "vertex_w": r.w,
        "vertex_v": r.v,
        "b_selfinjective": b_report.selfinjective,
        "hypothesis_holds": certificate.finite if certificate.kind != "undetermined" else None,
    }


def _reports(glued: GluedAlgebra, bound: Optional[int], seed: int) -> Dict[Any, GorensteinReport]:
    cache: Dict[Any, GorensteinReport] = {}

    def get(algebra) -> GorensteinReport:
        if algebra not in cache:
            cache[algebra] = gorenstein_report(algebra, bound, seed, with_simples=False)
        return cache[algebra]

    for node in glued.nodes():
        get(node.a_part.algebra)
        get(node.b_part.algebra)
        get(node.algebra)
    return cache


def gd_bound_check(glued: GluedAlgebra, bound: Optional[int] = None, seed: int = 0) -> Verdict:
    """Gorenstein dimension bounds at every node of the gluing tree.

    Arrow node: Gd = max(Gd A, Gd B) when they differ, else max <= Gd <= Gd A + 1.
    Vertex node: Gd <= max(1, Gd A, Gd B).
    """
    reports = _reports(glued, bound, seed)
    nodes: List[Dict[str, Any]] = []
    for node in glued.nodes():
        ra, rb, rn = reports[node.a_part.algebra], reports[node.b_part.algebra], reports[node.algebra]
        entry: Dict[str, Any] = {
            "kind": node.kind,
            "components": [c.name for c in node.leaves()],
            "gd_a": ra.gd, "gd_b": rb.gd, "gd": rn.gd,
            "status": rn.status,
        }
        nodes.append(entry)
        if not (ra.certified and rb.certified):
            raise NotGorenstein("gd bounds need Gorenstein parts", ra if not ra.certified else rb)
        if rn.gorenstein is None:
            return Verdict(check="gd-bounds", passed=False, undetermined=True, evidence={"nodes": nodes})
        ga, gb = ra.gd or 0, rb.gd or 0
        if node.kind == "arrow":
            if ga != gb:
                rule, ok = "Gd = max(Gd A, Gd B)", rn.certified and rn.gd == max(ga, gb)
            else:
                rule, ok = "max(Gd A, Gd B) <= Gd <= Gd A + 1", rn.certified and max(ga, gb) <= (rn.gd or 0) <= ga + 1
        else:
            rule, ok = "Gd <= max(1, Gd A, Gd B)", rn.certified and (rn.gd or 0) <= max(1, ga, gb)
        entry["rule"] = rule
        entry["passed"] = ok
        if not ok:
            raise VerificationFailure("gd-bounds", {"node": entry, "nodes": nodes})
    return Verdict(check="gd-bounds", passed=True, evidence={"nodes": nodes})


def _block_diagonal(matrix: List[List[int]], blocks: List[List[int]]) -> Optional[Dict[str, int]]:
    owner = {i: b for b, idx in enumerate(blocks) for i in idx}
    for i, row in enumerate(matrix):
        for j, x in enumerate(row):
            if owner[i] != owner[j] and x != 0:
                return {"row": i, "column": j, "value": x}
    return None


def verify_gproj_decomposition(glued: GluedAlgebra, bound: Optional[int] = None, seed: int = 0,
                               log: LogFn = _default_log) -> Verdict:
    """The stable category of Gorenstein projectives splits along the components."""
    report = gorenstein_report(glued.algebra, bound, seed, with_simples=False)
    if not report.certified:
        raise NotGorenstein(f"glued algebra is not certified Gorenstein ({report.status})", report)
    collection = GprojCollection()
    blocks: List[List[int]] = []
    components: List[Dict[str, Any]] = []
    for leaf in glued.leaves():
        sub_report = gorenstein_report(leaf.algebra, bound, seed, with_simples=False)
        if not sub_report.certified:
            raise NotGorenstein(f"component {leaf.name} is not certified Gorenstein ({sub_report.status})", sub_report)
        sub = gproj_indecomposables(leaf.algebra, sub_report, seed=seed)
        table = stable_table(sub.modules, sub.labels)
        extend = extension_into(glued, leaf.name)
        block = []
        for label, module in zip(sub.labels, sub.modules):
            image = extend(module)
            name = f"{leaf.name}:{label}"
            if is_projective(image) or not is_gproj(image, report).gproj:
                raise VerificationFailure("decomposition", {"reason": "image is not a nonprojective Gorenstein projective",
                                                            "module": name, "image": image.to_dict()})
            for j, other in enumerate(collection.modules):
                if is_isomorphic(image, other, seed).yes:
                    raise VerificationFailure("decomposition", {"reason": "images are isomorphic",
                                                                "modules": [collection.labels[j], name]})
            collection.labels.append(name)
            collection.modules.append(image)
            collection.provenance.append(f"extension of {leaf.name}")
            block.append(len(collection.modules) - 1)
        blocks.append(block)
        components.append({"name": leaf.name, "gd": sub_report.gd, "count": len(block), "table": table.matrix})
        log(f"component {leaf.name}: {len(block)} objects", {"gd": sub_report.gd})

    union = stable_table(collection.modules, collection.labels)
    stray = _block_diagonal(union.matrix, blocks)
    if stray is not None:
        raise VerificationFailure("decomposition", {"reason": "stable table is not block diagonal", **stray,
                                                    "labels": union.labels, "table": union.matrix})
    for component, block in zip(components, blocks):
        if union.block(block) != component["table"]:
            raise VerificationFailure("decomposition", {"reason": "block differs from the component table",
                                                        "component": component["name"], "block": union.block(block),
                                                        "expected": component["table"]})
    expected = len(collection.modules)
    added, decided = close_under_syzygy(collection, glued.algebra, report, seed)
    evidence = {
        "gd": report.gd,
        "components": components,
        "labels": union.labels,
        "table": union.matrix,
        "blocks": blocks,
        "objects": expected,
        "closure_added": added,
    }
    if not decided:
        return Verdict(check="decomposition", passed=False, undetermined=True, evidence=evidence)
    if added:
        raise VerificationFailure("decomposition", {"reason": "closure sweep found objects outside the component images",
                                                    "extra": collection.labels[expected:],
                                                    "dimension_vectors": [list(m.dimension_vector()) for m in collection.modules[expected:]]})
    return Verdict(check="decomposition", passed=True, evidence=evidence)
