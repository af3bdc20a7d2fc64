"""Vertex orderings, step profiles, and the exhaustive enumeration oracle.

A permutation of a graph is a tuple ordering all n vertices.  Its profile
classifies each of the n-1 consecutive steps: a non-edge, an undirected edge,
an arc traversed forward, or an arc traversed backward.  Everything here is
counted over orderings, never over unordered paths, so a path walkable in
both directions contributes 2.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import IntEnum
from itertools import permutations as _permutations
from typing import Callable, Iterator

from .errors import LengthMismatch, ScaleRefusal
from .graph import MixedGraph, Pair

Permutation = tuple[int, ...]

DEFAULT_ORACLE_CAP = 10
ORACLE_CAP_ENV = "HAMPARITY_ORACLE_CAP"


def oracle_cap(override: int | None = None) -> int:
    """Effective brute-force cap: explicit override, else env var, else 10."""
    if override is not None:
        return override
    raw = os.environ.get(ORACLE_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CAP


class StepClass(IntEnum):
    """Classification of one consecutive step of a permutation."""

    NON_EDGE = 0
    UNDIRECTED = 1
    FORWARD = 2
    BACKWARD = 3


@dataclass(frozen=True)
class ProfileStep:
    """One traversed pair: u immediately before v."""

    u: int
    v: int
    cls: StepClass


@dataclass(frozen=True)
class NeighborProfile:
    """The classified consecutive pairs of one permutation."""

    steps: tuple[ProfileStep, ...]

    def classes(self) -> tuple[StepClass, ...]:
        return tuple(s.cls for s in self.steps)

    def is_hamilton(self) -> bool:
        """True when no step is a non-edge or a backward arc."""
        return all(s.cls in (StepClass.UNDIRECTED, StepClass.FORWARD) for s in self.steps)

    def has_class(self, cls: StepClass) -> bool:
        return any(s.cls == cls for s in self.steps)

    def contains_pair(self, i: int, j: int) -> bool:
        """True when i and j are adjacent, in either order."""
        return any((s.u, s.v) in ((i, j), (j, i)) for s in self.steps)

    def contains_step(self, u: int, v: int) -> bool:
        """True when u appears immediately before v."""
        return any((s.u, s.v) == (u, v) for s in self.steps)


def step_table(g: MixedGraph) -> dict[Pair, StepClass]:
    """Map every ordered pair (u, v) to the class of the step u -> v."""
    table: dict[Pair, StepClass] = {}
    for i, j in g.non_edges():
        table[(i, j)] = table[(j, i)] = StepClass.NON_EDGE
    for i, j in g.undirected_edges():
        table[(i, j)] = table[(j, i)] = StepClass.UNDIRECTED
    for u, v in g.arcs():
        table[(u, v)] = StepClass.FORWARD
        table[(v, u)] = StepClass.BACKWARD
    return table


def profile(g: MixedGraph, order: Permutation) -> NeighborProfile:
    """Classify the consecutive pairs of ``order`` against ``g``."""
    if len(order) != g.n:
        raise LengthMismatch(f"ordering has {len(order)} entries, graph has {g.n} vertices")
    if set(order) != set(range(g.n)):
        raise ValueError("ordering is not a permutation of the vertices")
    table = step_table(g)
    steps = tuple(
        ProfileStep(u, v, table[(u, v)]) for u, v in zip(order, order[1:])
    )
    return NeighborProfile(steps)


def is_hamilton_path(g: MixedGraph, order: Permutation) -> bool:
    """True iff every step is an undirected edge or a forward arc."""
    return profile(g, order).is_hamilton()


def enumerate_permutations(n: int, cap: int | None = None) -> Iterator[Permutation]:
    """All n! orderings of 0..n-1 in lexicographic order; refuses past the cap."""
    if n < 1:
        raise ValueError("need n >= 1")
    limit = oracle_cap(cap)
    if n > limit:
        raise ScaleRefusal(f"n={n} exceeds the brute-force cap {limit}")
    return _permutations(range(n))


def select(
    g: MixedGraph,
    predicate: Callable[[NeighborProfile], bool],
    cap: int | None = None,
) -> int:
    """Count permutations whose profile satisfies ``predicate``.

    The generic counter every brute-force oracle reduces to; 10! profiles take
    seconds, so the cap defaults to 10.
    """
    table = step_table(g)
    count = 0
    for order in enumerate_permutations(g.n, cap):
        steps = tuple(
            ProfileStep(u, v, table[(u, v)]) for u, v in zip(order, order[1:])
        )
        if predicate(NeighborProfile(steps)):
            count += 1
    return count
