"""Mixed graphs: data model, derived pair sets, generators, and the text format.

Every unordered pair of distinct vertices is classified as exactly one of:
non-edge, undirected edge, or directed edge (in one of the two directions).
Vertices are dense integers ``0..n-1``; the counting kernels rely on that for
bitmask indexing.

Randomized generators draw from :class:`random.Random` (Mersenne Twister),
which is seedable and platform independent: the same (parameters, seed)
always reproduces the same graph.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import NotDirected, ParseError

Pair = tuple[int, int]

# Internal codes per normalized pair (i, j) with i < j.
_NON = 0
_UND = 1
_FWD = 2  # directed i -> j
_BWD = 3  # directed j -> i

_COMPLEMENT_CODE = (_UND, _NON, _BWD, _FWD)


@dataclass(frozen=True)
class PairKind:
    """Classification of one unordered vertex pair.

    ``tag`` is one of "non-edge", "undirected", "directed"; ``src``/``dst``
    are set for directed pairs only.
    """

    tag: str
    src: int | None = None
    dst: int | None = None

    def is_directed(self) -> bool:
        return self.tag == "directed"


class MixedGraph:
    """An immutable mixed graph; safe to share across parallel workers.

    Construct with the undirected pairs and the directed arcs; every pair
    not mentioned is a non-edge.
    """

    __slots__ = ("n", "_codes", "_cache")

    def __init__(self, n: int, undirected: Iterable[Pair] = (), arcs: Iterable[Pair] = ()):
        if n < 1:
            raise ValueError("a mixed graph needs at least one vertex")
        self.n = n
        codes = {p: _NON for p in combinations(range(n), 2)}
        seen: set[Pair] = set()
        for i, j in undirected:
            codes[_norm_pair(n, i, j, seen)] = _UND
        for u, v in arcs:
            codes[_norm_pair(n, u, v, seen)] = _FWD if u < v else _BWD
        self._codes = codes
        self._cache: dict = {}

    @classmethod
    def _from_codes(cls, n: int, codes: dict[Pair, int]) -> "MixedGraph":
        # Trusted fast path for generators; skips per-pair validation.
        g = cls.__new__(cls)
        g.n = n
        g._codes = codes
        g._cache = {}
        return g

    def vertices(self) -> range:
        return range(self.n)

    def pair_count(self) -> int:
        return self.n * (self.n - 1) // 2

    def kind(self, i: int, j: int) -> PairKind:
        """Kind of the pair {i, j}, in either argument order."""
        p = (i, j) if i < j else (j, i)
        code = self._codes.get(p)
        if code is None:
            raise ValueError(f"no such vertex pair: ({i}, {j})")
        if code == _NON:
            return PairKind("non-edge")
        if code == _UND:
            return PairKind("undirected")
        if code == _FWD:
            return PairKind("directed", p[0], p[1])
        return PairKind("directed", p[1], p[0])

    def _sets(self) -> tuple[frozenset[Pair], frozenset[Pair], frozenset[Pair]]:
        cached = self._cache.get("sets")
        if cached is None:
            non, und, arcs = set(), set(), set()
            for (i, j), c in self._codes.items():
                if c == _NON:
                    non.add((i, j))
                elif c == _UND:
                    und.add((i, j))
                elif c == _FWD:
                    arcs.add((i, j))
                else:
                    arcs.add((j, i))
            cached = (frozenset(non), frozenset(und), frozenset(arcs))
            self._cache["sets"] = cached
        return cached

    def non_edges(self) -> frozenset[Pair]:
        """Unordered pairs with no edge at all."""
        return self._sets()[0]

    def undirected_edges(self) -> frozenset[Pair]:
        """Unordered pairs joined by an undirected edge."""
        return self._sets()[1]

    def arcs(self) -> frozenset[Pair]:
        """Directed edges as (src, dst)."""
        return self._sets()[2]

    def backward_arcs(self) -> frozenset[Pair]:
        """The arcs with every direction reversed."""
        cached = self._cache.get("back")
        if cached is None:
            cached = frozenset((v, u) for (u, v) in self.arcs())
            self._cache["back"] = cached
        return cached

    def non_arc_pairs(self) -> frozenset[Pair]:
        """Non-edges plus undirected pairs (everything that is not an arc)."""
        return self.non_edges() | self.undirected_edges()

    def is_tournament(self) -> bool:
        return all(c in (_FWD, _BWD) for c in self._codes.values())

    def is_complete(self) -> bool:
        return all(c != _NON for c in self._codes.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self.n == other.n and self._codes == other._codes

    def __hash__(self) -> int:
        h = self._cache.get("hash")
        if h is None:
            h = hash((self.n, tuple(sorted(self._codes.items()))))
            self._cache["hash"] = h
        return h

    def __repr__(self) -> str:
        return (
            f"MixedGraph(n={self.n}, undirected={sorted(self.undirected_edges())}, "
            f"arcs={sorted(self.arcs())})"
        )


def _norm_pair(n: int, i: int, j: int, seen: set[Pair]) -> Pair:
    if i == j:
        raise ValueError(f"self-loop at vertex {i}")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"vertex pair ({i}, {j}) out of range for n={n}")
    p = (i, j) if i < j else (j, i)
    if p in seen:
        raise ValueError(f"pair {p} classified twice")
    seen.add(p)
    return p


def complement(g: MixedGraph) -> MixedGraph:
    """Swap non-edges with undirected edges and reverse every arc.

    An involution: ``complement(complement(g)) == g``.
    """
    codes = {p: _COMPLEMENT_CODE[c] for p, c in g._codes.items()}
    return MixedGraph._from_codes(g.n, codes)


def reverse_pair(g: MixedGraph, pair: Pair) -> MixedGraph:
    """Flip the direction of one directed pair, leaving everything else alone."""
    i, j = pair
    p = (i, j) if i < j else (j, i)
    code = g._codes.get(p)
    if code is None:
        raise ValueError(f"no such vertex pair: {pair}")
    if code not in (_FWD, _BWD):
        raise NotDirected(f"pair {p} is not directed")
    codes = dict(g._codes)
    codes[p] = _FWD if code == _BWD else _BWD
    return MixedGraph._from_codes(g.n, codes)


def transitive_tournament(n: int) -> MixedGraph:
    """The tournament with arc i -> j for every i < j."""
    codes = {p: _FWD for p in combinations(range(n), 2)}
    if n < 1:
        raise ValueError("need n >= 1")
    return MixedGraph._from_codes(n, codes)


def random_tournament(n: int, seed: int) -> MixedGraph:
    """Orient every pair by an independent fair coin from the seeded stream."""
    rng = random.Random(seed)
    codes = {}
    for p in combinations(range(n), 2):
        codes[p] = _FWD if rng.getrandbits(1) else _BWD
    if n < 1:
        raise ValueError("need n >= 1")
    return MixedGraph._from_codes(n, codes)


def random_mixed(n: int, weights: Sequence[float], seed: int) -> MixedGraph:
    """Draw each pair's kind with relative weights (non-edge, undirected, directed).

    Directed pairs get a fair-coin orientation.  Deterministic in the seed.
    """
    if len(weights) != 3:
        raise ValueError("weights must be a (non-edge, undirected, directed) triple")
    w = [float(x) for x in weights]
    if any(x < 0 for x in w) or sum(w) == 0:
        raise ValueError("weights must be nonnegative and not all zero")
    total = sum(w)
    t1 = w[0] / total
    t2 = (w[0] + w[1]) / total
    rng = random.Random(seed)
    codes = {}
    for p in combinations(range(n), 2):
        r = rng.random()
        if r < t1:
            codes[p] = _NON
        elif r < t2:
            codes[p] = _UND
        else:
            codes[p] = _FWD if rng.getrandbits(1) else _BWD
    if n < 1:
        raise ValueError("need n >= 1")
    return MixedGraph._from_codes(n, codes)


def all_tournaments(n: int) -> Iterator[MixedGraph]:
    """All 2^(n(n-1)/2) labeled tournaments, in a fixed orientation-code order."""
    pairs = list(combinations(range(n), 2))
    for combo in product((_FWD, _BWD), repeat=len(pairs)):
        yield MixedGraph._from_codes(n, dict(zip(pairs, combo)))


def all_mixed_graphs(n: int) -> Iterator[MixedGraph]:
    """All 4^(n(n-1)/2) labeled mixed graphs; only sensible for small n."""
    pairs = list(combinations(range(n), 2))
    for combo in product((_NON, _UND, _FWD, _BWD), repeat=len(pairs)):
        yield MixedGraph._from_codes(n, dict(zip(pairs, combo)))


def serialize(g: MixedGraph, header_comments: Iterable[str] = ()) -> str:
    """Text form of a graph; ``parse`` inverts it exactly.

    Format: optional '#' comment lines, a header ``n <N>``, then one line per
    non-trivial pair: ``u i j`` for undirected, ``d i j`` for an arc i -> j.
    Pairs not listed are non-edges.
    """
    lines = [f"# {c}" for c in header_comments]
    lines.append(f"n {g.n}")
    for (i, j), c in sorted(g._codes.items()):
        if c == _UND:
            lines.append(f"u {i} {j}")
        elif c == _FWD:
            lines.append(f"d {i} {j}")
        elif c == _BWD:
            lines.append(f"d {j} {i}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> MixedGraph:
    """Parse the graph text format; raises ParseError with a line number."""
    n: int | None = None
    und: list[Pair] = []
    arcs: list[Pair] = []
    seen: set[Pair] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ParseError("expected header 'n <N>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"vertex count {parts[1]!r} is not an integer", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be at least 1", lineno)
            continue
        if parts[0] == "n":
            raise ParseError("duplicate 'n' header", lineno)
        if parts[0] not in ("u", "d") or len(parts) != 3:
            raise ParseError(f"malformed line {raw.strip()!r}", lineno)
        try:
            i, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("vertex ids must be integers", lineno) from None
        if i == j:
            raise ParseError(f"self-loop at vertex {i}", lineno)
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"vertex pair ({i}, {j}) out of range for n={n}", lineno)
        p = (i, j) if i < j else (j, i)
        if p in seen:
            raise ParseError(f"pair {p} listed twice", lineno)
        seen.add(p)
        if parts[0] == "u":
            und.append((i, j))
        else:
            arcs.append((i, j))
    if n is None:
        raise ParseError("missing 'n <N>' header")
    return MixedGraph(n, undirected=und, arcs=arcs)


def graph_digest(g: MixedGraph) -> str:
    """Short stable digest of a graph, for report provenance."""
    return hashlib.sha256(serialize(g).encode()).hexdigest()[:12]
