from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Path:
    """A path in application order: ``arrows[0]`` acts first.

    Stationary paths have no arrows and ``source == target``.
    """

    source: str
    target: str
    arrows: Tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_stationary(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return ".".join(self.arrows)


def stationary(v: str) -> Path:
    return Path(v, v, ())


def contains_generator(arrows: Tuple[str, ...], generators) -> bool:
    n = len(arrows)
    for g in generators:
        k = len(g)
        for i in range(n - k + 1):
            if arrows[i:i + k] == g:
                return True
    return False


def ends_with_generator(arrows: Tuple[str, ...], generators) -> bool:
    for g in generators:
        if len(g) <= len(arrows) and arrows[len(arrows) - len(g):] == g:
            return True
    return False
