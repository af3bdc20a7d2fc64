"""Counting engines: segment closed form, inclusion-exclusion, and subset DP.

Three independent routes produce exact arbitrary-precision counts:

* a closed form from the path-segment structure forced by required pairs,
* brute-force enumeration over all n! orderings (the oracle, small n only),
* a bitmask dynamic program over (visited set, last vertex) states.

Counts are plain Python ints throughout; n! passes 2^63 already at n = 21.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations as _permutations
from math import factorial
from typing import Iterable

from .errors import MalformedRequirement, ScaleRefusal
from .graph import MixedGraph, Pair
from .perm import oracle_cap

DEFAULT_DP_CAP = 24
DEFAULT_BACKWARD_SUBSET_CAP = 22


@dataclass(frozen=True)
class RequiredPairs:
    """Pairs a permutation is required to contain as consecutive steps.

    ``unordered`` holds non-edge or undirected pairs that must appear as
    neighbors in either order; ``backward`` holds (u, v) steps that must
    traverse the arc (v, u) against its direction.
    """

    unordered: frozenset[Pair]
    backward: frozenset[Pair]

    @classmethod
    def of(cls, unordered: Iterable[Pair] = (), backward: Iterable[Pair] = ()) -> "RequiredPairs":
        norm = frozenset((i, j) if i < j else (j, i) for i, j in unordered)
        return cls(norm, frozenset(tuple(p) for p in backward))

    def size(self) -> int:
        return len(self.unordered) + len(self.backward)


@dataclass(frozen=True)
class Decomposition:
    """Path-segment structure forced by a set of required pairs.

    When feasible, the required pairs form vertex-disjoint paths.  Every
    vertex lies in exactly one segment (isolated vertices are singleton
    segments).  ``two_way_segments`` counts multi-vertex segments free of
    backward steps: each can embed in a permutation in either direction.
    ``one_way_segments`` counts segments whose direction a backward step pins.
    """

    feasible: bool
    segments: tuple[tuple[int, ...], ...]
    two_way_segments: int
    one_way_segments: int
    reason: str | None = None

    @property
    def segment_count(self) -> int:
        return len(self.segments)


def _check_required(g: MixedGraph, req: RequiredPairs) -> None:
    non_arc = g.non_arc_pairs()
    for p in req.unordered:
        if p not in non_arc:
            raise MalformedRequirement(f"pair {p} is not a non-edge or undirected pair")
    arcs = g.arcs()
    for u, v in req.backward:
        if (v, u) not in arcs:
            raise MalformedRequirement(f"step ({u}, {v}) does not reverse an arc")


def decompose(g: MixedGraph, req: RequiredPairs) -> Decomposition:
    """Arrange the required pairs into disjoint path segments, if possible.

    Infeasible when some vertex would need three neighbors, the pairs close a
    cycle, or two backward steps pull one segment in opposite directions.
    """
    _check_required(g, req)
    n = g.n
    infeasible = lambda why: Decomposition(False, (), 0, 0, reason=why)

    nbrs: dict[int, list[tuple[int, Pair | None]]] = {v: [] for v in range(n)}
    for i, j in sorted(req.unordered):
        nbrs[i].append((j, None))
        nbrs[j].append((i, None))
    for u, v in sorted(req.backward):
        nbrs[u].append((v, (u, v)))
        nbrs[v].append((u, (u, v)))

    if any(len(lst) > 2 for lst in nbrs.values()):
        return infeasible("degree greater than 2")

    seen: set[int] = set()
    segments: list[tuple[int, ...]] = []
    two_way = one_way = 0
    for start in range(n):
        if start in seen or len(nbrs[start]) != 1:
            continue
        path = [start]
        seen.add(start)
        forward_pins = backward_pins = 0
        prev, cur = -1, start
        while True:
            step = None
            for other, pin in nbrs[cur]:
                if other != prev:
                    step = (other, pin)
                    break
            if step is None:
                break
            other, pin = step
            if pin is not None:
                if pin == (cur, other):
                    forward_pins += 1
                else:
                    backward_pins += 1
            path.append(other)
            seen.add(other)
            prev, cur = cur, other
        if forward_pins and backward_pins:
            return infeasible("conflicting backward-step directions")
        if backward_pins:
            path.reverse()
        if forward_pins or backward_pins:
            one_way += 1
        else:
            two_way += 1
            if path[0] > path[-1]:
                path.reverse()
        segments.append(tuple(path))

    for v in range(n):
        if v not in seen:
            if nbrs[v]:
                return infeasible("required pairs close a cycle")
            segments.append((v,))

    segments.sort()
    dec = Decomposition(True, tuple(segments), two_way, one_way)
    assert dec.segment_count == n - req.size()
    return dec


def _count_from(dec: Decomposition) -> int:
    if not dec.feasible:
        return 0
    return factorial(dec.segment_count) << dec.two_way_segments


def closed_form_count(g: MixedGraph, req: RequiredPairs) -> int:
    """Permutations containing every required pair: r! * 2^p.

    r is the segment count, p the number of segments free to embed in either
    direction.  Zero when the pairs cannot form disjoint consistent paths.
    """
    return _count_from(decompose(g, req))


def brute_force_count(g: MixedGraph, req: RequiredPairs, cap: int | None = None) -> int:
    """Oracle twin of ``closed_form_count``: enumerate all n! orderings."""
    _check_required(g, req)
    n = g.n
    limit = oracle_cap(cap)
    if n > limit:
        raise ScaleRefusal(f"n={n} exceeds the brute-force cap {limit}")
    tokens: dict[Pair, int] = {}
    for k, (i, j) in enumerate(sorted(req.unordered)):
        tokens[(i, j)] = tokens[(j, i)] = k
    base = len(req.unordered)
    for k, (u, v) in enumerate(sorted(req.backward)):
        tokens[(u, v)] = base + k
    need = req.size()
    count = 0
    get = tokens.get
    for order in _permutations(range(n)):
        hits = 0
        prev = order[0]
        for x in order[1:]:
            if get((prev, x)) is not None:
                hits += 1
            prev = x
        if hits == need:
            count += 1
    return count


def _normalized_non_arc(g: MixedGraph, pairs: Iterable[Pair]) -> frozenset[Pair]:
    norm = frozenset((i, j) if i < j else (j, i) for i, j in pairs)
    non_arc = g.non_arc_pairs()
    for p in norm:
        if p not in non_arc:
            raise MalformedRequirement(f"pair {p} is not a non-edge or undirected pair")
    return norm


def count_all_of_brute(g: MixedGraph, pairs: Iterable[Pair], cap: int | None = None) -> int:
    """Permutations containing every given pair and taking no backward step."""
    pairs = _normalized_non_arc(g, pairs)
    n = g.n
    limit = oracle_cap(cap)
    if n > limit:
        raise ScaleRefusal(f"n={n} exceeds the brute-force cap {limit}")
    kill = set(g.backward_arcs())
    tokens: dict[Pair, int] = {}
    for k, (i, j) in enumerate(sorted(pairs)):
        tokens[(i, j)] = tokens[(j, i)] = k
    need = len(pairs)
    count = 0
    get = tokens.get
    for order in _permutations(range(n)):
        hits = 0
        ok = True
        prev = order[0]
        for x in order[1:]:
            op = (prev, x)
            if op in kill:
                ok = False
                break
            if get(op) is not None:
                hits += 1
            prev = x
        if ok and hits == need:
            count += 1
    return count


def count_exactly_brute(g: MixedGraph, pairs: Iterable[Pair], cap: int | None = None) -> int:
    """Permutations whose non-arc steps are precisely the given pairs, no backward step."""
    pairs = _normalized_non_arc(g, pairs)
    n = g.n
    limit = oracle_cap(cap)
    if n > limit:
        raise ScaleRefusal(f"n={n} exceeds the brute-force cap {limit}")
    # Category per ordered pair: 0 neutral (forward arc), 1 hit, 2 kill.
    cat: dict[Pair, int] = {}
    for u, v in g.arcs():
        cat[(u, v)] = 0
        cat[(v, u)] = 2
    for i, j in g.non_arc_pairs():
        c = 1 if (i, j) in pairs else 2
        cat[(i, j)] = cat[(j, i)] = c
    need = len(pairs)
    count = 0
    for order in _permutations(range(n)):
        hits = 0
        ok = True
        prev = order[0]
        for x in order[1:]:
            c = cat[(prev, x)]
            if c == 2:
                ok = False
                break
            hits += c
            prev = x
        if ok and hits == need:
            count += 1
    return count


def count_mixed_steps_brute(g: MixedGraph, cap: int | None = None) -> int:
    """Permutations with no backward step, >= 1 non-edge step and >= 1 undirected step."""
    n = g.n
    limit = oracle_cap(cap)
    if n > limit:
        raise ScaleRefusal(f"n={n} exceeds the brute-force cap {limit}")
    # Category per ordered pair: 0 forward, 1 non-edge, 2 undirected, 3 backward.
    cat: dict[Pair, int] = {}
    for u, v in g.arcs():
        cat[(u, v)] = 0
        cat[(v, u)] = 3
    for i, j in g.non_edges():
        cat[(i, j)] = cat[(j, i)] = 1
    for i, j in g.undirected_edges():
        cat[(i, j)] = cat[(j, i)] = 2
    count = 0
    for order in _permutations(range(n)):
        saw_non = saw_und = False
        ok = True
        prev = order[0]
        for x in order[1:]:
            c = cat[(prev, x)]
            if c == 3:
                ok = False
                break
            if c == 1:
                saw_non = True
            elif c == 2:
                saw_und = True
            prev = x
        if ok and saw_non and saw_und:
            count += 1
    return count


def count_all_of(
    g: MixedGraph,
    pairs: Iterable[Pair],
    backward_subset_cap: int | None = None,
) -> int:
    """Inclusion-exclusion over backward-step subsets for ``count_all_of_brute``.

    Sums (-1)^|extra| times the closed-form count over every feasible set of
    required backward steps added to the given pairs.  Subsets that cannot
    form disjoint paths contribute zero and are pruned (infeasibility is
    monotone under adding requirements), so the walk stays far below 2^|arcs|.
    """
    pairs = _normalized_non_arc(g, pairs)
    limit = (
        DEFAULT_BACKWARD_SUBSET_CAP if backward_subset_cap is None else backward_subset_cap
    )
    backs = sorted(g.backward_arcs())
    if len(backs) > limit:
        raise ScaleRefusal(f"{len(backs)} arcs exceed the inclusion-exclusion cap {limit}")
    base = decompose(g, RequiredPairs(pairs, frozenset()))
    if not base.feasible:
        return 0
    max_extra = g.n - 1 - len(pairs)
    total = 0
    chosen: list[Pair] = []

    def walk(start: int, dec: Decomposition) -> None:
        nonlocal total
        term = _count_from(dec)
        total += -term if len(chosen) % 2 else term
        if len(chosen) >= max_extra:
            return
        for idx in range(start, len(backs)):
            chosen.append(backs[idx])
            d = decompose(g, RequiredPairs(pairs, frozenset(chosen)))
            if d.feasible:
                walk(idx + 1, d)
            chosen.pop()

    walk(0, base)
    return total


class PermClass(Enum):
    """The four step-avoidance classes of permutations.

    All four forbid backward steps; P1 additionally forbids non-edge steps,
    P2 forbids undirected steps, and P3 forbids both (arcs forward only).
    P1 is exactly the Hamilton-path class.
    """

    P0 = "P0"
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"


def class_allowed(g: MixedGraph, cls: PermClass) -> frozenset[Pair]:
    """Ordered steps a permutation of the given class may take."""
    steps = set(g.arcs())
    if cls in (PermClass.P0, PermClass.P2):
        for i, j in g.non_edges():
            steps.add((i, j))
            steps.add((j, i))
    if cls in (PermClass.P0, PermClass.P1):
        for i, j in g.undirected_edges():
            steps.add((i, j))
            steps.add((j, i))
    return frozenset(steps)


def hamilton_allowed(g: MixedGraph) -> frozenset[Pair]:
    """Steps a Hamilton path may take: undirected both ways, arcs forward."""
    return class_allowed(g, PermClass.P1)


def _vertex_set(g: MixedGraph, vs: Iterable[int], label: str) -> frozenset[int]:
    s = frozenset(vs)
    if not s:
        raise ValueError(f"{label} set must be nonempty")
    if not all(0 <= v < g.n for v in s):
        raise ValueError(f"{label} set contains out-of-range vertices")
    return s


def count_constrained(
    g: MixedGraph,
    allowed: Iterable[Pair],
    start_set: Iterable[int],
    end_set: Iterable[int],
    cap: int | None = None,
) -> int:
    """Permutations whose steps all lie in ``allowed``, with pinned endpoints.

    Subset DP over (visited mask, last vertex) in O(2^n * n^2); exact ints.
    """
    n = g.n
    limit = DEFAULT_DP_CAP if cap is None else cap
    if n > limit:
        raise ScaleRefusal(f"n={n} exceeds the DP cap {limit}")
    starts = _vertex_set(g, start_set, "start")
    ends = _vertex_set(g, end_set, "end")
    succ = [0] * n
    for u, v in allowed:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad allowed step ({u}, {v})")
        succ[u] |= 1 << v

    full = (1 << n) - 1
    dp: dict[int, dict[int, int]] = {1 << v: {v: 1} for v in starts}
    for mask in range(1, full):
        states = dp.pop(mask, None)
        if not states:
            continue
        free_all = full & ~mask
        for last, cnt in states.items():
            nxt = succ[last] & free_all
            while nxt:
                bit = nxt & -nxt
                nxt ^= bit
                nm = mask | bit
                v = bit.bit_length() - 1
                row = dp.get(nm)
                if row is None:
                    dp[nm] = {v: cnt}
                else:
                    row[v] = row.get(v, 0) + cnt
    final = dp.get(full) or {}
    return sum(c for v, c in final.items() if v in ends)


def count_constrained_brute(
    g: MixedGraph,
    allowed: Iterable[Pair],
    start_set: Iterable[int],
    end_set: Iterable[int],
    cap: int | None = None,
) -> int:
    """Oracle twin of ``count_constrained``."""
    n = g.n
    limit = oracle_cap(cap)
    if n > limit:
        raise ScaleRefusal(f"n={n} exceeds the brute-force cap {limit}")
    starts = _vertex_set(g, start_set, "start")
    ends = _vertex_set(g, end_set, "end")
    steps = frozenset(allowed)
    count = 0
    for order in _permutations(range(n)):
        if order[0] not in starts or order[-1] not in ends:
            continue
        ok = True
        prev = order[0]
        for x in order[1:]:
            if (prev, x) not in steps:
                ok = False
                break
            prev = x
        if ok:
            count += 1
    return count


def count_class(g: MixedGraph, cls: PermClass, cap: int | None = None) -> int:
    """Size of one avoidance class, by DP."""
    vs = range(g.n)
    return count_constrained(g, class_allowed(g, cls), vs, vs, cap=cap)


def count_class_brute(g: MixedGraph, cls: PermClass, cap: int | None = None) -> int:
    """Size of one avoidance class, by exhaustive enumeration."""
    vs = range(g.n)
    return count_constrained_brute(g, class_allowed(g, cls), vs, vs, cap=cap)


def hamilton_count(g: MixedGraph, cap: int | None = None) -> int:
    """Number of Hamilton paths, counted as orderings (reverse counts again)."""
    return count_class(g, PermClass.P1, cap=cap)


def hamilton_count_brute(g: MixedGraph, cap: int | None = None) -> int:
    """Oracle twin of ``hamilton_count``."""
    return count_class_brute(g, PermClass.P1, cap=cap)
