import pytest
from hypothesis import given

from hamparity import (
    MixedGraph,
    all_mixed_graphs,
    all_tournaments,
    complement,
    hamilton_count,
    parse,
    random_mixed,
    random_tournament,
    reverse_pair,
    serialize,
    transitive_tournament,
)
from hamparity.errors import NotDirected, ParseError

from .strategies import mixed_graphs


def test_pair_kinds(mixed3):
    assert mixed3.kind(0, 1).tag == "undirected"
    assert mixed3.kind(1, 0).tag == "undirected"
    k = mixed3.kind(2, 0)
    assert (k.tag, k.src, k.dst) == ("directed", 0, 2)
    assert mixed3.kind(1, 2).tag == "non-edge"
    assert mixed3.non_edges() == {(1, 2)}
    assert mixed3.undirected_edges() == {(0, 1)}
    assert mixed3.arcs() == {(0, 2)}
    assert mixed3.backward_arcs() == {(2, 0)}


def test_constructor_rejects_bad_pairs():
    with pytest.raises(ValueError):
        MixedGraph(0)
    with pytest.raises(ValueError):
        MixedGraph(3, undirected=[(0, 0)])
    with pytest.raises(ValueError):
        MixedGraph(3, arcs=[(0, 3)])
    with pytest.raises(ValueError):
        MixedGraph(3, undirected=[(0, 1)], arcs=[(1, 0)])


def test_complement_swaps_kinds(mixed3):
    co = complement(mixed3)
    assert co.non_edges() == {(0, 1)}
    assert co.undirected_edges() == {(1, 2)}
    assert co.arcs() == {(2, 0)}


def test_complement_of_tournament_reverses_arcs():
    t = random_tournament(5, 11)
    assert complement(t).arcs() == t.backward_arcs()


@given(mixed_graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(mixed_graphs())
def test_pair_classification_is_total(g):
    m = g.n * (g.n - 1) // 2
    assert len(g.non_edges()) + len(g.undirected_edges()) + len(g.arcs()) == m
    for u, v in g.arcs():
        k = g.kind(u, v)
        assert (k.src, k.dst) == (u, v)


def test_reverse_pair(mixed3):
    flipped = reverse_pair(mixed3, (0, 2))
    assert flipped.arcs() == {(2, 0)}
    assert flipped.undirected_edges() == mixed3.undirected_edges()
    assert reverse_pair(flipped, (2, 0)) == mixed3
    with pytest.raises(NotDirected):
        reverse_pair(mixed3, (0, 1))


def test_reverse_pair_in_cycle_gives_transitive(cycle3):
    # Enumerating the arcs: flipping {0,1} leaves 1 beating both others.
    flipped = reverse_pair(cycle3, (0, 1))
    assert flipped.arcs() == {(1, 0), (1, 2), (2, 0)}
    assert hamilton_count(flipped) == 1


def test_transitive_tournament():
    assert transitive_tournament(2).arcs() == {(0, 1)}
    assert transitive_tournament(3).arcs() == {(0, 1), (0, 2), (1, 2)}
    assert transitive_tournament(1).arcs() == frozenset()


def test_random_tournament_deterministic():
    a = random_tournament(8, 7)
    b = random_tournament(8, 7)
    assert a == b
    assert len(a.arcs()) == 28
    assert a.is_tournament()
    assert random_tournament(1, 3).arcs() == frozenset()
    assert random_tournament(8, 8) != a


def test_random_mixed_weight_extremes():
    assert random_mixed(6, (0, 0, 1), 5).is_tournament()
    edgeless = random_mixed(6, (1, 0, 0), 5)
    assert len(edgeless.non_edges()) == 15
    assert hamilton_count(edgeless) == 0
    und = random_mixed(3, (0, 1, 0), 5)
    assert len(und.undirected_edges()) == 3
    assert hamilton_count(und) == 6
    assert random_mixed(6, (1, 1, 2), 9) == random_mixed(6, (1, 1, 2), 9)
    with pytest.raises(ValueError):
        random_mixed(3, (0, 0, 0), 1)


def test_all_tournaments_and_mixed_counts():
    assert sum(1 for _ in all_tournaments(3)) == 8
    assert sum(1 for _ in all_mixed_graphs(3)) == 64
    seen = set(all_mixed_graphs(2))
    assert len(seen) == 4


def test_parse_basic(mixed3):
    g = parse("n 3\nu 0 1\nd 0 2\n")
    assert g == mixed3
    assert parse("n 2").non_edges() == {(0, 1)}
    g = parse("# a comment\nn 3  # trailing\nu 0 1\nd 0 2\n\n")
    assert g == mixed3


@pytest.mark.parametrize(
    "text,line",
    [
        ("n 3\nu 0 1\nu 0 1", 3),
        ("n 3\nu 0 1\nd 1 0", 3),
        ("n 3\nu 2 2", 2),
        ("n 3\nd 0 5", 2),
        ("n 3\nq 0 1", 2),
        ("n 3\nu 0", 2),
        ("u 0 1", 1),
        ("n 0", 1),
        ("n 3\nn 4", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == line


def test_parse_missing_header():
    with pytest.raises(ParseError):
        parse("# nothing but comments\n")


@given(mixed_graphs())
def test_serialize_roundtrip(g):
    assert parse(serialize(g)) == g


def test_serialize_skips_non_edges(mixed3):
    text = serialize(mixed3)
    assert text == "n 3\nu 0 1\nd 0 2\n"
    commented = serialize(mixed3, header_comments=("T 0..1",))
    assert commented.startswith("# T 0..1\n")
    assert parse(commented) == mixed3
