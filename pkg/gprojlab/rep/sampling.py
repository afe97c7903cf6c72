"""Seeded random modules and short exact sequences for sampled verification."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Tuple

from ..core import linalg as la
from ..core.algebra import BoundAlgebra
from .hom import hom_basis
from .ops import direct_sum, generated_submodule, image, kernel, projective, quotient, simple
from .representation import Morphism, Representation


@dataclass(frozen=True)
class ShortExact:
    """0 -> sub --inclusion--> middle --projection--> quot -> 0"""

    sub: Representation
    middle: Representation
    quot: Representation
    inclusion: Morphism
    projection: Morphism


def _random_scalar(rng: random.Random, K, spread: int = 2):
    return K.convert(rng.randint(-spread, spread))


def random_module(algebra: BoundAlgebra, rng: random.Random, max_dim: int = 12) -> Representation:
    K = algebra.domain
    vertices = list(algebra.vertices)
    for _ in range(12):
        tops: List[str] = []
        budget = 2 * max_dim
        for _ in range(rng.randint(1, 3)):
            v = rng.choice(vertices)
            size = len(algebra.paths_from(v))
            if size <= budget:
                tops.append(v)
                budget -= size
        if not tops:
            continue
        cover = direct_sum([projective(algebra, v) for v in tops]).module
        gens = []
        for _ in range(rng.randint(0, 3)):
            candidates = [v for v in vertices if cover.dims[v] > 0]
            v = rng.choice(candidates)
            vec = la.from_rows([[_random_scalar(rng, K)] for _ in range(cover.dims[v])], cover.dims[v], 1, K)
            gens.append((v, vec))
        sub, inclusion = generated_submodule(cover, gens)
        if rng.random() < 0.25 and not sub.is_zero():
            candidate = sub
        else:
            candidate, _ = quotient(cover, inclusion.maps)
        if 0 < candidate.total_dim <= max_dim:
            return candidate
    return simple(algebra, rng.choice(vertices))


def random_morphism(m: Representation, n: Representation, rng: random.Random) -> Morphism:
    basis = hom_basis(m, n)
    K = m.domain
    return basis.combination([_random_scalar(rng, K) for _ in range(basis.dim)])


def random_short_exact(algebra: BoundAlgebra, rng: random.Random, max_dim: int = 12) -> ShortExact:
    """Kernel/image sequence of a random morphism out of a random module."""
    middle = random_module(algebra, rng, max_dim)
    other = random_module(algebra, rng, max_dim)
    f = random_morphism(middle, other, rng)
    sub, inclusion = kernel(f)
    quot, _, corestriction = image(f)
    return ShortExact(sub, middle, quot, inclusion, corestriction)


def sample_modules(algebra: BoundAlgebra, count: int, seed: int = 0, max_dim: int = 12) -> List[Representation]:
    rng = random.Random(seed)
    return [random_module(algebra, rng, max_dim) for _ in range(count)]


def sample_pairs(algebra: BoundAlgebra, count: int, seed: int = 0,
                 max_dim: int = 12) -> List[Tuple[Representation, Representation]]:
    rng = random.Random(seed)
    return [(random_module(algebra, rng, max_dim), random_module(algebra, rng, max_dim)) for _ in range(count)]
