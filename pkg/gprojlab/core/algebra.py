from __future__ import annotations

from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from ..errors import NotAdmissible, QuiverError
from ..schemas.quiver import Arrow, MonomialIdeal, Quiver
from .field import BaseField
from .paths import Path, contains_generator, ends_with_generator, stationary


class Admissibility(BaseModel):
    admissible: bool
    witness: Optional[Tuple[str, ...]] = None
    loewy_bound: Optional[int] = None


def _check_generators(quiver: Quiver, ideal: MonomialIdeal) -> None:
    labels = {a.label: a for a in quiver.arrows}
    for g in ideal.generators:
        for x in g:
            if x not in labels:
                raise QuiverError(f"relation {'.'.join(g)} uses unknown arrow {x}")
        for x, y in zip(g, g[1:]):
            if labels[x].target != labels[y].source:
                raise QuiverError(f"relation {'.'.join(g)} is not a path: {x} does not end where {y} starts")


def _extendable_cycle(quiver: Quiver, ideal: MonomialIdeal) -> Optional[Tuple[str, ...]]:
    """Cycle in the automaton of nonzero-path windows, or None.

    A state is the last ``w`` arrows of a nonzero path, with ``w`` one less
    than the longest generator, so appending an arrow only has to test the
    generators ending at it.
    """
    gens = ideal.generators
    window = max(ideal.max_length() - 1, 1)
    outgoing: Dict[str, List[Arrow]] = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        outgoing[a.source].append(a)
    targets = {a.label: a.target for a in quiver.arrows}

    def successors(state: Tuple[str, ...]) -> List[Tuple[str, ...]]:
        out = []
        for b in outgoing[targets[state[-1]]]:
            candidate = state + (b.label,)
            if ends_with_generator(candidate, gens):
                continue
            out.append(candidate[-window:])
        return out

    colour: Dict[Tuple[str, ...], int] = {}
    stack_pos: Dict[Tuple[str, ...], int] = {}
    for a in quiver.arrows:
        start = (a.label,)
        if start in colour:
            continue
        # iterative DFS, keeping the current trail to read off a cycle
        trail: List[Tuple[str, ...]] = [start]
        iters = [iter(successors(start))]
        colour[start] = 1
        stack_pos[start] = 0
        while trail:
            nxt = next(iters[-1], None)
            if nxt is None:
                done = trail.pop()
                iters.pop()
                colour[done] = 2
                stack_pos.pop(done, None)
                continue
            state = colour.get(nxt, 0)
            if state == 1:
                loop = trail[stack_pos[nxt]:]
                return tuple(s[-1] for s in loop[1:]) + (nxt[-1],)
            if state == 0:
                colour[nxt] = 1
                stack_pos[nxt] = len(trail)
                trail.append(nxt)
                iters.append(iter(successors(nxt)))
    return None


def is_admissible(quiver: Quiver, ideal: MonomialIdeal) -> Admissibility:
    if not quiver.vertices:
        raise QuiverError("quiver has no vertices")
    _check_generators(quiver, ideal)
    cycle = _extendable_cycle(quiver, ideal)
    if cycle is not None:
        return Admissibility(admissible=False, witness=cycle)
    basis = _enumerate_basis(quiver, ideal)
    return Admissibility(admissible=True, loewy_bound=max(p.length for p in basis) + 1)


def _enumerate_basis(quiver: Quiver, ideal: MonomialIdeal) -> List[Path]:
    gens = ideal.generators
    order = {v: i for i, v in enumerate(quiver.vertices)}
    arrow_order = {a.label: i for i, a in enumerate(quiver.arrows)}
    layer = [stationary(v) for v in quiver.vertices]
    out = list(layer)
    while layer:
        nxt: List[Path] = []
        for p in layer:
            for a in quiver.arrows:
                if a.source != p.target:
                    continue
                arrows = p.arrows + (a.label,)
                if ends_with_generator(arrows, gens):
                    continue
                nxt.append(Path(p.source, a.target, arrows))
        out.extend(nxt)
        layer = nxt
    out.sort(key=lambda p: (p.length, tuple(arrow_order[x] for x in p.arrows), order[p.source]))
    return out


class BoundAlgebra:
    """kQ/I for a monomial admissible ideal I, realized on its path basis."""

    def __init__(self, quiver: Quiver, ideal: MonomialIdeal, field: BaseField, basis: Sequence[Path]) -> None:
        self.quiver = quiver
        self.ideal = ideal
        self.field = field
        self.basis: Tuple[Path, ...] = tuple(basis)
        self._index: Dict[Path, int] = {p: i for i, p in enumerate(self.basis)}
        self._arrows: Dict[str, Arrow] = {a.label: a for a in quiver.arrows}
        self._opposite: Optional["BoundAlgebra"] = None
        self._table: Optional[Dict[Tuple[int, int], Optional[int]]] = None

    # identity is the defining data; the basis is derived from it
    def _key(self) -> Tuple[Any, ...]:
        return (self.quiver, self.ideal, self.field)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, BoundAlgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"BoundAlgebra(vertices={list(self.vertices)}, dim={self.dimension})"

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> Tuple[Arrow, ...]:
        return self.quiver.arrows

    @property
    def domain(self):
        return self.field.domain

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def arrow(self, label: str) -> Arrow:
        return self._arrows[label]

    def index(self, path: Path) -> int:
        return self._index[path]

    def is_zero_path(self, arrows: Tuple[str, ...]) -> bool:
        return contains_generator(arrows, self.ideal.generators)

    def paths_from(self, v: str) -> List[Path]:
        return [p for p in self.basis if p.source == v]

    def paths_to(self, v: str) -> List[Path]:
        return [p for p in self.basis if p.target == v]

    def paths_between(self, v: str, w: str) -> List[Path]:
        return [p for p in self.basis if p.source == v and p.target == w]

    def extend(self, path: Path, label: str) -> Optional[Path]:
        """``path`` followed by the arrow ``label``, or None when zero."""
        a = self._arrows[label]
        if a.source != path.target:
            return None
        arrows = path.arrows + (label,)
        if ends_with_generator(arrows, self.ideal.generators):
            return None
        return Path(path.source, a.target, arrows)

    def compose(self, first: Path, then: Path) -> Optional[Path]:
        if first.target != then.source:
            return None
        arrows = first.arrows + then.arrows
        if contains_generator(arrows, self.ideal.generators):
            return None
        return Path(first.source, then.target, arrows)

    def product(self, i: int, j: int) -> Optional[int]:
        """Index of basis[i] · basis[j] (basis[j] acts first), None for zero."""
        p = self.compose(self.basis[j], self.basis[i])
        return None if p is None else self._index[p]

    def multiplication_table(self) -> Dict[Tuple[int, int], Optional[int]]:
        if self._table is None:
            n = self.dimension
            self._table = {(i, j): self.product(i, j) for i in range(n) for j in range(n)}
        return self._table

    def max_path_length(self) -> int:
        return max(p.length for p in self.basis)

    def loewy_length(self, v: str) -> int:
        return max(p.length for p in self.paths_from(v)) + 1

    def is_nakayama(self) -> bool:
        for v in self.vertices:
            if len(self.quiver.out_arrows(v)) > 1 or len(self.quiver.in_arrows(v)) > 1:
                return False
        return True

    def kupisch_series(self) -> Dict[str, int]:
        return {v: self.loewy_length(v) for v in self.vertices}

    def opposite(self) -> "BoundAlgebra":
        if self._opposite is None:
            op = build_algebra(self.quiver.opposite(), self.ideal.opposite(), self.field)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def summary(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "vertices": list(self.vertices),
            "arrows": [{"label": a.label, "source": a.source, "target": a.target} for a in self.arrows],
            "relations": [".".join(g) for g in self.ideal.generators],
            "dimension": self.dimension,
            "field": self.field.label(),
            "nakayama": self.is_nakayama(),
            "loewy_bound": self.max_path_length() + 1,
        }
        if out["nakayama"]:
            out["kupisch_series"] = self.kupisch_series()
        return out


def build_algebra(quiver: Quiver, ideal: MonomialIdeal, field: Optional[BaseField] = None) -> BoundAlgebra:
    verdict = is_admissible(quiver, ideal)
    if not verdict.admissible:
        raise NotAdmissible(verdict.witness or ())
    return BoundAlgebra(quiver, ideal, field or BaseField(), _enumerate_basis(quiver, ideal))


def opposite_algebra(a: BoundAlgebra) -> BoundAlgebra:
    return a.opposite()


def make_quiver(vertices: Sequence[str], arrows: Sequence[Tuple[str, str, str]]) -> Quiver:
    return Quiver(vertices=tuple(vertices), arrows=tuple(Arrow(label=l, source=s, target=t) for l, s, t in arrows))


def make_ideal(relations: Sequence[Sequence[str]]) -> MonomialIdeal:
    return MonomialIdeal(generators=tuple(tuple(r) for r in relations))
