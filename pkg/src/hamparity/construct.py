"""Tournament extensions, path systems, and the per-pair gadget.

These constructions tie the endpoint-restricted extension parity statement to
the contain-all-non-arc-pairs parity statement, in both directions:

* ``gadget_from_mixed`` routes every non-arc pair of a mixed graph through a
  fresh degree-2 vertex, so Hamilton paths of the gadget that start and end
  in the original vertices biject with backward-free orderings containing all
  those pairs.  ``gadget_equivalence_check`` asserts the counts match.
* ``redei_via_dirac_check`` splits the T-to-T Hamilton paths of an extension
  by the path system their W-runs trace, and checks each part against the
  corresponding count on a tournament with the bridged arcs made undirected.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import count as cnt
from .errors import (
    DuplicateEndpointPair,
    EmptyPairSet,
    MalformedExtension,
    NotATournament,
    ScaleRefusal,
)
from .graph import MixedGraph, Pair, random_tournament
from .theorems import ParityReport, Tally, make_report

DEFAULT_PATH_SYSTEM_CAP = 8


@dataclass(frozen=True)
class WExtension:
    """A tournament plus extra vertices W reached only by undirected edges.

    Vertices are indexed with the tournament first (``0..base.n-1``) and the
    W vertices after; ``w_edges`` uses that combined indexing and each edge
    must touch at least one W vertex.
    """

    base: MixedGraph
    w_count: int
    w_edges: frozenset[Pair]

    def __post_init__(self):
        if not self.base.is_tournament():
            raise MalformedExtension("base graph must be a tournament")
        if self.w_count < 1:
            raise MalformedExtension("need at least one W vertex")
        total = self.base.n + self.w_count
        for i, j in self.w_edges:
            if not (0 <= i < j < total):
                raise MalformedExtension(f"edge ({i}, {j}) is not a normalized pair in range")
            if j < self.base.n:
                raise MalformedExtension(f"edge ({i}, {j}) does not touch a W vertex")

    @classmethod
    def of(cls, base: MixedGraph, w_count: int, w_edges: Iterable[Pair]) -> "WExtension":
        norm = frozenset((i, j) if i < j else (j, i) for i, j in w_edges)
        return cls(base, w_count, norm)


def materialize(ext: WExtension) -> tuple[MixedGraph, frozenset[int], frozenset[int]]:
    """Build the combined mixed graph and the (T, W) vertex split."""
    t_n = ext.base.n
    n = t_n + ext.w_count
    g = MixedGraph(n, undirected=sorted(ext.w_edges), arcs=sorted(ext.base.arcs()))
    return g, frozenset(range(t_n)), frozenset(range(t_n, n))


def random_w_extension(
    t_count: int, w_count: int, seed: int, edge_fraction: float = 0.5
) -> WExtension:
    """Random tournament plus W vertices; each W-touching pair becomes an
    undirected edge with the given probability.  Deterministic in the seed."""
    rng = random.Random(seed)
    base = random_tournament(t_count, rng.getrandbits(63))
    total = t_count + w_count
    edges = []
    for i in range(total):
        for j in range(max(i + 1, t_count), total):
            if rng.random() < edge_fraction:
                edges.append((i, j))
    return WExtension.of(base, w_count, edges)


@dataclass(frozen=True)
class PathSystem:
    """Paths with endpoints in T and interiors in W covering W exactly once.

    Each path is stored once, oriented from its smaller endpoint; direction
    only reappears when a path is embedded into a permutation.
    """

    paths: tuple[tuple[int, ...], ...]

    @property
    def endpoint_pairs(self) -> tuple[Pair, ...]:
        return tuple((p[0], p[-1]) if p[0] < p[-1] else (p[-1], p[0]) for p in self.paths)


def _candidate_paths(
    g: MixedGraph, t_set: frozenset[int], w_set: frozenset[int]
) -> list[tuple[int, ...]]:
    und: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, j in g.undirected_edges():
        und[i].append(j)
        und[j].append(i)
    for lst in und.values():
        lst.sort()

    out: list[tuple[int, ...]] = []

    def extend(path: list[int], visited: set[int]) -> None:
        cur = path[-1]
        for other in und[cur]:
            if other in w_set and other not in visited:
                path.append(other)
                visited.add(other)
                extend(path, visited)
                visited.remove(other)
                path.pop()
            elif other in t_set and len(path) >= 2 and other != path[0]:
                if path[0] < other:
                    out.append(tuple(path) + (other,))

    for t in sorted(t_set):
        extend([t], set())
    return sorted(out)


def _check_split(g: MixedGraph, t_set: frozenset[int], w_set: frozenset[int]) -> None:
    if t_set & w_set or (t_set | w_set) != frozenset(range(g.n)):
        raise MalformedExtension("T and W must partition the vertex set")
    if not w_set:
        raise MalformedExtension("W must be nonempty")
    for w in w_set:
        for v in range(g.n):
            if v != w and g.kind(w, v).is_directed():
                raise MalformedExtension(f"pair touching W ({w}, {v}) must not be directed")


def enumerate_path_systems(
    g: MixedGraph,
    t_set: Iterable[int],
    w_set: Iterable[int],
    w_cap: int | None = None,
) -> Iterator[PathSystem]:
    """Yield every path system of a materialized extension, in a fixed order.

    The union of a system's paths must itself be a disjoint set of paths:
    distinct paths may share a T endpoint (which then becomes interior to the
    union) but never both endpoints, and no T vertex may meet three paths.
    Yields nothing when no system exists.
    """
    t_fs, w_fs = frozenset(t_set), frozenset(w_set)
    _check_split(g, t_fs, w_fs)
    limit = DEFAULT_PATH_SYSTEM_CAP if w_cap is None else w_cap
    if len(w_fs) > limit:
        raise ScaleRefusal(f"|W|={len(w_fs)} exceeds the path-system cap {limit}")

    cands = _candidate_paths(g, t_fs, w_fs)
    by_w: dict[int, list[int]] = {w: [] for w in w_fs}
    for idx, path in enumerate(cands):
        for v in path[1:-1]:
            by_w[v].append(idx)

    w_order = sorted(w_fs)

    def find(comp: dict[int, int], x: int) -> int:
        while comp.get(x, x) != x:
            x = comp[x]
        return x

    def search(
        covered: frozenset[int],
        chosen: tuple[int, ...],
        deg: dict[int, int],
        used_pairs: frozenset[Pair],
        comp: dict[int, int],
    ) -> Iterator[PathSystem]:
        target = next((w for w in w_order if w not in covered), None)
        if target is None:
            yield PathSystem(tuple(sorted(cands[i] for i in chosen)))
            return
        for idx in by_w[target]:
            path = cands[idx]
            interior = path[1:-1]
            if any(v in covered for v in interior):
                continue
            x, y = path[0], path[-1]
            pair = (x, y)
            if pair in used_pairs:
                continue
            if deg.get(x, 0) >= 2 or deg.get(y, 0) >= 2:
                continue
            rx, ry = find(comp, x), find(comp, y)
            if rx == ry:
                continue  # would close a cycle through T
            new_deg = dict(deg)
            new_deg[x] = new_deg.get(x, 0) + 1
            new_deg[y] = new_deg.get(y, 0) + 1
            new_comp = dict(comp)
            new_comp[rx] = ry
            yield from search(
                covered | frozenset(interior),
                chosen + (idx,),
                new_deg,
                used_pairs | {pair},
                new_comp,
            )

    yield from search(frozenset(), (), {}, frozenset(), {})


def replace_along(base: MixedGraph, system: PathSystem) -> MixedGraph:
    """Turn each path's endpoint arc of a tournament into an undirected edge."""
    if not base.is_tournament():
        raise NotATournament("replacement is defined on tournaments")
    pairs = system.endpoint_pairs
    if len(set(pairs)) != len(pairs):
        raise DuplicateEndpointPair("two paths share the same endpoint pair")
    for i, j in pairs:
        if not (0 <= i < j < base.n):
            raise ValueError(f"endpoint pair ({i}, {j}) out of range")
    drop = set(pairs)
    arcs = [a for a in sorted(base.arcs()) if (min(a), max(a)) not in drop]
    return MixedGraph(base.n, undirected=sorted(drop), arcs=arcs)


def gadget_from_mixed(g: MixedGraph) -> tuple[MixedGraph, frozenset[int], frozenset[int]]:
    """Route every non-arc pair through a fresh degree-2 vertex.

    Each non-arc pair {x, y} gets a new vertex joined to x and y by undirected
    edges; the direct pair {x, y} becomes a non-edge in the gadget, so the
    adjacency can only be realized through the new vertex.  Arcs are kept.
    Returns the gadget and the (original, new) vertex split.
    """
    loose = sorted(g.non_arc_pairs())
    if not loose:
        raise EmptyPairSet("graph has no non-edge or undirected pair")
    n2 = g.n + len(loose)
    undirected = []
    for k, (i, j) in enumerate(loose):
        w = g.n + k
        undirected.append((i, w))
        undirected.append((j, w))
    gadget = MixedGraph(n2, undirected=undirected, arcs=sorted(g.arcs()))
    return gadget, frozenset(range(g.n)), frozenset(range(g.n, n2))


def gadget_equivalence_check(g: MixedGraph, engine: str = "dp") -> ParityReport:
    """Check the exact bridge equality between the two parity statements:

    Hamilton paths of the gadget beginning and ending among the original
    vertices are equinumerous with backward-free orderings of the original
    graph containing every non-arc pair.
    """
    gadget, t_fs, _ = gadget_from_mixed(g)
    loose = sorted(g.non_arc_pairs())
    allowed = cnt.hamilton_allowed(gadget)
    t = Tally(engine)
    left = t.put(
        "gadget_t_paths",
        dp=lambda: cnt.count_constrained(gadget, allowed, t_fs, t_fs),
        oracle=lambda: cnt.count_constrained_brute(gadget, allowed, t_fs, t_fs),
    )
    right = t.put(
        "containing_all_non_arc",
        dp=lambda: cnt.count_all_of(g, loose),
        oracle=lambda: cnt.count_all_of_brute(g, loose),
    )
    return make_report(
        "gadget-bridge",
        g,
        t,
        passed=left == right,
        params={"gadget_n": gadget.n},
    )


def redei_via_dirac_check(ext: WExtension, engine: str = "dp") -> ParityReport:
    """Numerically reproduce the reduction from extension parity to the
    contain-all-pairs parity.

    For each path system, the extension's T-to-T Hamilton paths that trace it
    are counted on the bridged tournament (each such count must be even), and
    the per-system counts must add up to the extension's total.
    """
    g, t_fs, w_fs = materialize(ext)
    allowed = cnt.hamilton_allowed(g)
    t = Tally(engine)
    total = t.put(
        "t_to_t_hamilton",
        dp=lambda: cnt.count_constrained(g, allowed, t_fs, t_fs),
        oracle=lambda: cnt.count_constrained_brute(g, allowed, t_fs, t_fs),
    )
    systems = 0
    odd_terms = 0
    term_sum = 0
    for ps in enumerate_path_systems(g, t_fs, w_fs):
        systems += 1
        bridged = replace_along(ext.base, ps)
        pairs = sorted(bridged.non_arc_pairs())
        term = t.put(
            f"system_{systems}",
            dp=lambda b=bridged, p=pairs: cnt.count_all_of(b, p),
            oracle=lambda b=bridged, p=pairs: cnt.count_all_of_brute(b, p),
        )
        term_sum += term
        if term % 2:
            odd_terms += 1
    t.note("path_systems", systems)
    t.note("path_system_sum", term_sum)
    t.note("odd_terms", odd_terms)
    passed = odd_terms == 0 and term_sum == total
    return make_report(
        "redei-via-dirac", g, t, passed=passed, params={"t_size": len(t_fs)}
    )


def t_split_comment(t_size: int) -> str:
    """Comment line content recording a T/W split for graph files."""
    return f"T 0..{t_size - 1}"


def parse_t_split(text: str) -> int | None:
    """Extract a T size recorded by ``t_split_comment``, if present."""
    m = re.search(r"^#\s*T\s+0\.\.(\d+)\s*$", text, flags=re.MULTILINE)
    if m is None:
        return None
    return int(m.group(1)) + 1
