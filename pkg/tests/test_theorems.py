import json
import random

import pytest

from hamparity import (
    MixedGraph,
    PermClass,
    complement,
    count_class,
    find_parity_witnesses,
    hamilton_count,
    random_mixed,
    random_tournament,
    transitive_tournament,
    verify_berge_dirac,
    verify_berge_stronger,
    verify_dirac_corollary1,
    verify_dirac_corollary2,
    verify_dirac_corollary3,
    verify_dirac_stronger,
    verify_redei,
    verify_redei_stronger,
)
from hamparity.count import count_all_of_brute, count_exactly_brute
from hamparity.errors import (
    BadPartition,
    EmptyPairSet,
    NotATournament,
    NotComplete,
    TooFewVertices,
)
from hamparity.theorems import Tally


def test_verify_redei_basics(cycle3):
    rep = verify_redei(transitive_tournament(6))
    assert rep.passed and rep.counts == {"hamilton": 1}
    assert rep.parities == {"hamilton": "odd"}
    rep = verify_redei(cycle3, "both")
    assert rep.passed and rep.counts["hamilton"] == 3


def test_verify_redei_preconditions(mixed3):
    with pytest.raises(NotATournament):
        verify_redei(mixed3)
    with pytest.raises(TooFewVertices):
        verify_redei(MixedGraph(1))


def test_verify_redei_stronger(cycle3):
    g = MixedGraph(4, undirected=[(0, 3), (1, 3)], arcs=sorted(cycle3.arcs()))
    rep = verify_redei_stronger(g, [0, 1, 2], [3], "both")
    assert rep.passed
    assert rep.counts["t_to_t_hamilton"] % 2 == 0
    # An isolated W vertex cannot be interior: count 0, still a pass.
    iso = MixedGraph(4, arcs=sorted(cycle3.arcs()))
    rep = verify_redei_stronger(iso, [0, 1, 2], [3])
    assert rep.passed and rep.counts["t_to_t_hamilton"] == 0


def test_verify_redei_stronger_bad_partitions(mixed3, cycle3):
    with pytest.raises(BadPartition):
        verify_redei_stronger(cycle3, [0, 1, 2], [])  # W empty
    with pytest.raises(BadPartition):
        verify_redei_stronger(cycle3, [0, 1], [1, 2])  # not a partition
    g = MixedGraph(4, undirected=[(0, 1)], arcs=[(1, 2), (0, 2)])
    with pytest.raises(BadPartition):
        verify_redei_stronger(g, [0, 1, 2], [3])  # undirected pair inside T
    h = MixedGraph(4, arcs=[(0, 1), (1, 2), (0, 2), (0, 3)])
    with pytest.raises(BadPartition):
        verify_redei_stronger(h, [0, 1, 2], [3])  # arc touching W
    with pytest.raises(BadPartition):
        verify_redei_stronger(mixed3, [0], [1, 2])  # |T| < 2


def test_verify_berge_stronger(mixed3):
    rep = verify_berge_stronger(mixed3, "both")
    assert rep.passed
    assert rep.counts["hamilton"] == 1
    assert rep.counts["hamilton"] % 2 == rep.counts["hamilton_complement"] % 2
    t = random_tournament(6, 2)
    rep = verify_berge_stronger(t)
    # Reversing the order of a permutation is a bijection between the two sides.
    assert rep.counts["hamilton"] == rep.counts["hamilton_complement"]


def test_verify_dirac_corollary1():
    und = MixedGraph(3, undirected=[(0, 1), (0, 2), (1, 2)])
    rep = verify_dirac_corollary1(und, "both")
    assert rep.passed and rep.counts["with_undirected"] == 6
    rep = verify_dirac_corollary1(random_tournament(5, 1))
    assert rep.passed and rep.counts["with_undirected"] == 0
    with pytest.raises(NotComplete):
        verify_dirac_corollary1(MixedGraph(3, undirected=[(0, 1)], arcs=[(0, 2)]))


def test_verify_dirac_stronger_reduces_to_classes(mixed3):
    rep = verify_dirac_stronger(mixed3, [], "both")
    assert rep.passed
    assert rep.counts["containing"] == count_class(mixed3, PermClass.P0)
    assert rep.counts["exactly"] == count_class(mixed3, PermClass.P3)


def test_verify_dirac_stronger_near_full_set():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(2, 5)
        g = random_mixed(n, (1, 1, 0), rng.getrandbits(63))
        pairs = sorted(g.non_arc_pairs())[: n - 1]
        rep = verify_dirac_stronger(g, pairs, "both")
        assert rep.passed
        if len(pairs) == n - 1:
            assert rep.counts["containing"] == rep.counts["exactly"]


def test_verify_dirac_corollary2(mixed3):
    rep = verify_dirac_corollary2(mixed3, "both")
    assert rep.passed
    assert rep.counts == {"class_p0": 4, "class_p3": 0}
    t = random_tournament(7, 9)
    rep = verify_dirac_corollary2(t)
    assert rep.passed and rep.counts["class_p0"] == rep.counts["class_p3"]


def test_verify_dirac_corollary3(mixed3):
    rep = verify_dirac_corollary3(mixed3, "both")
    assert rep.passed and rep.counts["containing_all_non_arc"] % 2 == 0
    with pytest.raises(EmptyPairSet):
        verify_dirac_corollary3(random_tournament(4, 0))
    crowded = MixedGraph(3)  # 3 non-edges > n - 1
    rep = verify_dirac_corollary3(crowded)
    assert rep.passed and rep.counts["containing_all_non_arc"] == 0


def test_verify_berge_dirac(mixed3):
    rep = verify_berge_dirac(mixed3, "both")
    assert rep.passed
    assert rep.counts["class_sum"] == 6
    assert rep.counts["signed_sum"] == 2 == rep.counts["mixed_steps"]
    t = random_tournament(5, 12)
    rep = verify_berge_dirac(t)
    assert rep.passed
    assert rep.counts["class_sum"] == 4 * hamilton_count(t)


def test_berge_dirac_signed_identity_randomized():
    rng = random.Random(41)
    for _ in range(30):
        g = random_mixed(rng.randint(2, 6), (1, 1, 1), rng.getrandbits(63))
        rep = verify_berge_dirac(g, "both")
        assert rep.passed
        assert rep.counts["mixed_steps"] == rep.counts["signed_sum"]


def test_dirac_stronger_parity_randomized():
    rng = random.Random(43)
    for _ in range(40):
        n = rng.randint(2, 6)
        g = random_mixed(n, (1, 1, 1), rng.getrandbits(63))
        pairs = [p for p in sorted(g.non_arc_pairs()) if rng.random() < 0.5]
        rep = verify_dirac_stronger(g, pairs, "both")
        assert rep.passed
        assert rep.counts["containing"] == count_all_of_brute(g, pairs)
        assert rep.counts["exactly"] == count_exactly_brute(g, pairs)


def test_tournament_verifier_collapse():
    # On tournaments the class counts coincide, tying the two verifiers together.
    rng = random.Random(47)
    for _ in range(15):
        t = random_tournament(rng.randint(2, 6), rng.getrandbits(63))
        r1 = verify_redei(t)
        r2 = verify_dirac_corollary2(t)
        assert r1.passed and r2.passed
        assert count_class(t, PermClass.P3) % 2 == 1


def test_find_parity_witnesses():
    even_g, odd_g = find_parity_witnesses()
    assert verify_berge_stronger(even_g).passed
    assert verify_berge_stronger(odd_g).passed
    assert hamilton_count(even_g) % 2 == 0
    assert hamilton_count(complement(even_g)) % 2 == 0
    assert hamilton_count(odd_g) % 2 == 1
    assert hamilton_count(complement(odd_g)) % 2 == 1
    assert (even_g, odd_g) == find_parity_witnesses()  # deterministic


def test_transitive_is_an_odd_odd_candidate():
    t = transitive_tournament(5)
    assert hamilton_count(t) == 1
    assert hamilton_count(complement(t)) == 1


def test_report_json_shape(mixed3):
    rep = verify_berge_stronger(mixed3, "both")
    obj = json.loads(rep.json_line())
    assert set(obj) == {"theorem", "n", "digest", "counts", "parities", "pass", "engine"}
    assert obj["counts"]["hamilton"] == "1"
    assert obj["parities"]["hamilton"] == "odd"
    assert obj["pass"] is True
    assert obj["engine"] == "both"


def test_tally_disagreement_blocks_pass():
    t = Tally("both")
    t.put("x", dp=lambda: 2, oracle=lambda: 3)
    assert not t.agree
    assert t.counts == {"x": 2, "x_oracle": 3}
    with pytest.raises(ValueError):
        Tally("fast")


def test_verifiers_refuse_single_vertex():
    g = MixedGraph(1)
    for fn in (
        verify_berge_stronger,
        verify_dirac_corollary2,
        verify_berge_dirac,
    ):
        with pytest.raises(TooFewVertices):
            fn(g)
