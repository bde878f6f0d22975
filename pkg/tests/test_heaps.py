import pytest
from hypothesis import given, strategies as st

from cambrian_pop.cambrian import Cambrian
from cambrian_pop.coxeter import group
from cambrian_pop.heaps import (HeapData, commutation_equivalent, heap_of_word, other_reduced_word,
                                simple_ranks, verify_max_orbit)
from cambrian_pop.quiver import QuiverReps

TYPES = ["A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "G2", "I2:5", "I2:8", "H3"]


@pytest.mark.parametrize("tag", TYPES)
def test_every_max_orbit_check(tag):
    W = group(tag)
    for c in W.coxeter_elements():
        report = verify_max_orbit(W, c, Cambrian(W, c))
        assert report["orbit_size"] == report["h"] == W.coxeter_number()
        bad = [k for k, v in report.items() if v is False]
        assert not bad, (c.word, bad)


def test_rank_one_reports_rank_gap_as_none():
    W = group("A1")
    c = W.coxeter_element((0,))
    report = verify_max_orbit(W, c)
    assert report["ranked"] is None
    assert report["h"] == 2 and report["orbit_size"] == 2
    # z_c is s1 itself
    assert HeapData(W, c).z_c() == W.simple_bit[0]


def test_z_c_in_a8():
    W = group("A8")
    c = W.parse_coxeter("1,3,2,4,6,5,7,8")
    H = HeapData(W, c)
    assert H.h == 9
    idx = W.diagram.index_of
    cw = [1, 3, 2, 4, 6, 5, 7, 8]
    assert H.z_c() == W.from_word([idx(s) for s in cw * 3 + [1, 3, 2, 4, 6]])
    assert H.z_c_word() == [idx(s) for s in cw * 3 + [1, 3, 2, 4, 6]]


def test_d5_bipartition():
    W = group("D5")
    H = HeapData(W, W.parse_coxeter("0,2,1,3,4"))
    lab = W.diagram.labels
    X1, X2 = ({lab[i] for i in X} for X in H.bipartition())
    assert H.h == 8
    assert (X1, X2) == ({0, 1, 3}, {2, 4})


def test_heap_of_commuting_word():
    W = group("A3")
    # s1 and s3 commute, s2 sits above both
    heap = heap_of_word(W, [0, 2, 1])
    assert heap.leq(0, 2) and heap.leq(1, 2)
    assert not heap.leq(0, 1) and not heap.leq(1, 0)
    assert sorted(heap.covers()) == [(0, 2), (1, 2)]
    # ideals of a V shape: {}, {a}, {b}, {a,b}, all
    assert len(heap.order_ideals()) == 5


def test_simple_ranks_start_at_one():
    W = group("A4")
    for c in W.coxeter_elements():
        r = simple_ranks(W, c)
        assert min(r.values()) == 1
        for i, j in W.diagram.edges():
            assert abs(r[i] - r[j]) == 1


@pytest.mark.parametrize("tag", ["A4", "D4", "H3"])
def test_other_reduced_word_is_commutation_equivalent(tag):
    W = group(tag)
    for c in W.coxeter_elements():
        word = other_reduced_word(W, c)
        assert commutation_equivalent(W, word, c.word)
        assert W.from_word(word) == W.from_word(c.word)


A4 = group("A4")


@given(st.lists(st.integers(0, 3), max_size=10), st.randoms(use_true_random=False))
def test_commutation_moves_preserve_heap(word, rnd):
    # swapping adjacent commuting letters keeps the heap relations
    w2 = list(word)
    for _ in range(len(w2)):
        if len(w2) < 2:
            break
        k = rnd.randrange(len(w2) - 1)
        a, b = w2[k], w2[k + 1]
        if a != b and A4.diagram.bond[a][b] == 2:
            w2[k], w2[k + 1] = b, a
    assert commutation_equivalent(A4, word, w2)
    assert heap_of_word(A4, word).relations() == heap_of_word(A4, w2).relations()


def test_ar_quiver_dot():
    W = group("A3")
    dot = HeapData(W, W.coxeter_element((0, 1, 2))).ar_quiver_dot()
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")


@pytest.mark.parametrize("tag", ["A2", "A3", "A4", "D4"])
def test_first_copies_carry_injective_roots(tag):
    W = group(tag)
    for c in W.coxeter_elements():
        H = HeapData(W, c)
        first = {b for (s, j), b in zip(heap_of_word(W, H.sort.letters).letters, H.beta()) if j == 1}
        R = QuiverReps(W, c)
        assert first == {R.injective(i) for i in range(W.rank)}
        assert set(H.beta()) == set(range(W.N))
