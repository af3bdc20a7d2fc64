"""One verifier per parity theorem, each producing a structured report.

Verifiers are deterministic and total: a failed parity check never raises, it
returns ``passed=False`` with all counts attached, because a failure means an
implementation bug and should be maximally diagnosable.  The ``engine``
argument selects how counts are computed: "dp" (scalable), "oracle"
(exhaustive enumeration), or "both", which runs the two independently and
refuses to pass unless they agree exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import count as cnt
from .count import PermClass
from .errors import (
    BadPartition,
    EmptyPairSet,
    NotATournament,
    NotComplete,
    SearchExhausted,
    TooFewVertices,
)
from .graph import MixedGraph, Pair, all_mixed_graphs, complement, graph_digest

ENGINES = ("oracle", "dp", "both")


@dataclass(frozen=True)
class ParityReport:
    """Outcome of one verifier run: exact counts, their parities, a verdict."""

    theorem: str
    n: int
    digest: str
    counts: dict[str, int]
    passed: bool
    engine: str
    params: dict[str, object] = field(default_factory=dict)

    @property
    def parities(self) -> dict[str, str]:
        return {name: "odd" if v % 2 else "even" for name, v in self.counts.items()}

    def to_json(self) -> dict:
        out: dict[str, object] = {
            "theorem": self.theorem,
            "n": self.n,
            "digest": self.digest,
            "counts": {name: str(v) for name, v in self.counts.items()},
            "parities": self.parities,
            "pass": self.passed,
            "engine": self.engine,
        }
        if self.params:
            out["params"] = self.params
        return out

    def json_line(self) -> str:
        return json.dumps(self.to_json())


class Tally:
    """Collects named counts, via one engine or both.

    With engine "both", each count that has two routes is computed twice;
    a disagreement is recorded (the oracle value lands under ``<name>_oracle``)
    and poisons the report so it cannot pass.
    """

    def __init__(self, engine: str):
        if engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}")
        self.engine = engine
        self.counts: dict[str, int] = {}
        self.agree = True

    def put(
        self,
        name: str,
        dp: Callable[[], int] | None = None,
        oracle: Callable[[], int] | None = None,
    ) -> int:
        if dp is None:
            val = oracle()
        elif oracle is None or self.engine == "dp":
            val = dp()
        elif self.engine == "oracle":
            val = oracle()
        else:
            val = dp()
            alt = oracle()
            if alt != val:
                self.agree = False
                self.counts[name + "_oracle"] = alt
        self.counts[name] = val
        return val

    def note(self, name: str, value: int) -> int:
        self.counts[name] = value
        return value


def make_report(theorem: str, g: MixedGraph, tally: Tally, passed: bool,
            params: dict | None = None) -> ParityReport:
    return ParityReport(
        theorem=theorem,
        n=g.n,
        digest=graph_digest(g),
        counts=dict(tally.counts),
        passed=passed and tally.agree,
        engine=tally.engine,
        params=params or {},
    )


def _need_two(g: MixedGraph) -> None:
    if g.n < 2:
        raise TooFewVertices("theorems are stated for graphs with at least 2 vertices")


def verify_redei(g: MixedGraph, engine: str = "dp") -> ParityReport:
    """A tournament has an odd number of Hamilton paths."""
    _need_two(g)
    if not g.is_tournament():
        raise NotATournament("every pair must be directed")
    t = Tally(engine)
    h = t.put(
        "hamilton",
        dp=lambda: cnt.hamilton_count(g),
        oracle=lambda: cnt.hamilton_count_brute(g),
    )
    return make_report("redei", g, t, passed=h % 2 == 1)


def _check_extension_shape(g: MixedGraph, t_set: frozenset[int], w_set: frozenset[int]) -> None:
    if t_set & w_set or (t_set | w_set) != frozenset(range(g.n)):
        raise BadPartition("T and W must partition the vertex set")
    if not w_set:
        raise BadPartition("W must be nonempty")
    if len(t_set) < 2:
        raise BadPartition("T must have at least 2 vertices")
    for i in t_set:
        for j in t_set:
            if i < j and not g.kind(i, j).is_directed():
                raise BadPartition(f"pair ({i}, {j}) inside T must be directed")
    for w in w_set:
        for v in range(g.n):
            if v != w and g.kind(w, v).is_directed():
                raise BadPartition(f"pair touching W ({w}, {v}) must not be directed")


def verify_redei_stronger(
    g: MixedGraph,
    t_set: Iterable[int],
    w_set: Iterable[int],
    engine: str = "dp",
) -> ParityReport:
    """Extending a tournament T by undirected-only vertices W leaves an even
    number of Hamilton paths that begin and end in T (zero included)."""
    _need_two(g)
    t_fs, w_fs = frozenset(t_set), frozenset(w_set)
    _check_extension_shape(g, t_fs, w_fs)
    allowed = cnt.hamilton_allowed(g)
    t = Tally(engine)
    c = t.put(
        "t_to_t_hamilton",
        dp=lambda: cnt.count_constrained(g, allowed, t_fs, t_fs),
        oracle=lambda: cnt.count_constrained_brute(g, allowed, t_fs, t_fs),
    )
    return make_report(
        "redei-stronger", g, t, passed=c % 2 == 0, params={"t_size": len(t_fs)}
    )


def verify_berge_stronger(g: MixedGraph, engine: str = "dp") -> ParityReport:
    """A mixed graph and its complement have Hamilton path counts of one parity."""
    _need_two(g)
    co = complement(g)
    t = Tally(engine)
    a = t.put(
        "hamilton",
        dp=lambda: cnt.hamilton_count(g),
        oracle=lambda: cnt.hamilton_count_brute(g),
    )
    b = t.put(
        "hamilton_complement",
        dp=lambda: cnt.hamilton_count(co),
        oracle=lambda: cnt.hamilton_count_brute(co),
    )
    return make_report("berge", g, t, passed=(a - b) % 2 == 0)


def verify_dirac_corollary1(g: MixedGraph, engine: str = "dp") -> ParityReport:
    """In a complete mixed graph, evenly many Hamilton paths use an undirected edge."""
    _need_two(g)
    if not g.is_complete():
        raise NotComplete("every pair must be an edge (undirected or directed)")
    t = Tally(engine)
    h = t.put(
        "hamilton",
        dp=lambda: cnt.hamilton_count(g),
        oracle=lambda: cnt.hamilton_count_brute(g),
    )
    p3 = t.put(
        "all_forward",
        dp=lambda: cnt.count_class(g, PermClass.P3),
        oracle=lambda: cnt.count_class_brute(g, PermClass.P3),
    )
    diff = t.note("with_undirected", h - p3)
    return make_report("corollary1", g, t, passed=diff % 2 == 0)


def verify_dirac_stronger(
    g: MixedGraph, pairs: Iterable[Pair], engine: str = "dp"
) -> ParityReport:
    """Counting orderings that avoid backward steps: those containing all the
    given pairs and those containing exactly them share one parity.

    The containment count runs through inclusion-exclusion (the "dp" route)
    and/or the oracle; the exact-match count always needs the oracle.
    """
    _need_two(g)
    norm = sorted(frozenset((i, j) if i < j else (j, i) for i, j in pairs))
    t = Tally(engine)
    at_least = t.put(
        "containing",
        dp=lambda: cnt.count_all_of(g, norm),
        oracle=lambda: cnt.count_all_of_brute(g, norm),
    )
    exact = t.put("exactly", oracle=lambda: cnt.count_exactly_brute(g, norm))
    return make_report(
        "dirac-stronger",
        g,
        t,
        passed=(at_least - exact) % 2 == 0,
        params={"pairs": [list(p) for p in norm]},
    )


def verify_dirac_corollary2(g: MixedGraph, engine: str = "dp") -> ParityReport:
    """Backward-free orderings and all-forward orderings share one parity."""
    _need_two(g)
    t = Tally(engine)
    p0 = t.put(
        "class_p0",
        dp=lambda: cnt.count_class(g, PermClass.P0),
        oracle=lambda: cnt.count_class_brute(g, PermClass.P0),
    )
    p3 = t.put(
        "class_p3",
        dp=lambda: cnt.count_class(g, PermClass.P3),
        oracle=lambda: cnt.count_class_brute(g, PermClass.P3),
    )
    return make_report("corollary2", g, t, passed=(p0 - p3) % 2 == 0)


def verify_dirac_corollary3(g: MixedGraph, engine: str = "dp") -> ParityReport:
    """Evenly many backward-free orderings contain every non-arc pair."""
    _need_two(g)
    loose = sorted(g.non_arc_pairs())
    if not loose:
        raise EmptyPairSet("graph has no non-edge or undirected pair")
    t = Tally(engine)
    c = t.put(
        "containing_all_non_arc",
        dp=lambda: cnt.count_all_of(g, loose),
        oracle=lambda: cnt.count_all_of_brute(g, loose),
    )
    return make_report("corollary3", g, t, passed=c % 2 == 0)


def verify_berge_dirac(g: MixedGraph, engine: str = "dp") -> ParityReport:
    """The four avoidance-class sizes add up to an even number.

    Also checks the signed combination p0 - p1 - p2 + p3 and its direct
    interpretation (orderings with a non-edge step and an undirected step but
    no backward step); all three quantities must be even.
    """
    _need_two(g)
    t = Tally(engine)
    sizes = {}
    for cls in PermClass:
        name = f"class_{cls.value.lower()}"
        sizes[cls] = t.put(
            name,
            dp=lambda c=cls: cnt.count_class(g, c),
            oracle=lambda c=cls: cnt.count_class_brute(g, c),
        )
    total = t.note("class_sum", sum(sizes.values()))
    signed = t.note(
        "signed_sum",
        sizes[PermClass.P0] - sizes[PermClass.P1] - sizes[PermClass.P2] + sizes[PermClass.P3],
    )
    mixed = t.put(
        "mixed_steps",
        dp=lambda: signed,
        oracle=lambda: cnt.count_mixed_steps_brute(g),
    )
    ok = total % 2 == 0 and signed % 2 == 0 and mixed % 2 == 0
    return make_report("berge-dirac", g, t, passed=ok)


def find_parity_witnesses(max_n: int = 4) -> tuple[MixedGraph, MixedGraph]:
    """Scan all small mixed graphs for the two parity cases of the complement
    theorem: returns (both-even witness, both-odd witness).

    Deterministic: graphs are visited in a fixed enumeration order.
    """
    even_g = odd_g = None
    for n in range(2, max_n + 1):
        for g in all_mixed_graphs(n):
            h = cnt.hamilton_count(g)
            hc = cnt.hamilton_count(complement(g))
            if even_g is None and h % 2 == 0 and hc % 2 == 0:
                even_g = g
            if odd_g is None and h % 2 == 1 and hc % 2 == 1:
                odd_g = g
            if even_g is not None and odd_g is not None:
                return even_g, odd_g
    raise SearchExhausted(f"no witness pair among mixed graphs with n <= {max_n}")
