import random

import pytest
from hypothesis import given, strategies as st

from cambrian_pop.coxeter import group
from cambrian_pop.lattice import (FiniteLattice, NotALattice, NotAnInterval, NotSemidistributive,
                                  congruence_closure, congruence_from_classes, quotient_lattice,
                                  quotient_pop, random_congruence)
from cambrian_pop.weak import build_weak_lattice


def boolean(k):
    return FiniteLattice.from_leq(range(1 << k), lambda a, b: a & ~b == 0, key=int.bit_count)


def chain(n):
    return FiniteLattice.from_leq(range(n), lambda a, b: a <= b)


def pentagon():
    # 0 < a < b < 1 and 0 < c < 1
    return FiniteLattice.from_covers("0abc1", [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])


def diamond():
    return FiniteLattice.from_covers("0abc1", [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])


def dihedral(m):
    """Bottom, two chains a_1..a_{m-1} and a_m..a_{2m-2}, top."""
    names = ["bot"] + [f"a{i}" for i in range(1, 2 * m - 1)] + ["top"]
    covers = [("bot", "a1"), ("bot", f"a{m}"), (f"a{m - 1}", "top"), (f"a{2 * m - 2}", "top")]
    covers += [(f"a{i}", f"a{i + 1}") for i in range(1, m - 1)]
    covers += [(f"a{i}", f"a{i + 1}") for i in range(m, 2 * m - 2)]
    return FiniteLattice.from_covers(names, covers)


def test_rejects_non_lattices():
    with pytest.raises(NotALattice):
        FiniteLattice.from_covers("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    bowtie = ["0", "a", "b", "c", "d", "1"]
    with pytest.raises(NotALattice):
        FiniteLattice.from_covers(bowtie, [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"),
                                           ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")])


def test_boolean_shards_and_pop():
    L = boolean(3)
    # the shard label of A < B is the singleton B \ A
    for x, y in L.edges():
        j = L.shard_label(x, y)
        assert L.elements[j] == L.elements[y] & ~L.elements[x]
        assert L.elements[j].bit_count() == 1
    assert all(not outs for outs in L.galois_graph().values())
    assert L.pop_image() == [L.bottom]
    assert L.pop_image(up=True) == [L.top]
    assert L.facet_polynomial().coeffs == [0, 0, 0, 1]
    assert L.is_boolean() and L.is_distributive() and L.is_semidistributive()


def test_pentagon_and_diamond():
    N5 = pentagon()
    assert N5.is_semidistributive() and not N5.is_distributive()
    a = N5.index["a"]
    assert N5.pop_down(N5.top) == N5.bottom
    assert N5.pop_up(a) == N5.index["b"]
    assert N5.pop_up(N5.bottom) == N5.top
    assert N5.orbit(N5.top) == [N5.top, N5.bottom]
    M3 = diamond()
    assert not M3.is_semidistributive()
    with pytest.raises(NotSemidistributive):
        M3.shards()


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7])
def test_dihedral_kappa_and_galois_rule(m):
    L = dihedral(m)
    a = {i: L.index[f"a{i}"] for i in range(1, 2 * m - 1)}
    top = 2 * m - 2
    for i in range(1, top + 1):
        assert L.kappa(a[i]) == a[i - 1 if i > 1 else top]
    gal = L.galois_graph()
    for i in range(1, top + 1):
        if i <= m - 1:
            want = {a[k] for k in range(1, i)} | {a[k] for k in range(m + 1, top + 1)}
        else:
            want = {a[k] for k in range(2, m)} | {a[k] for k in range(m, i)}
        assert set(gal[a[i]]) == want


def test_dihedral_matches_weak_order():
    for m in (3, 5, 8):
        W = group(f"I2:{m}")
        assert build_weak_lattice(W).n == dihedral(m).n == 2 * m


def test_chain_orbits_and_ranks():
    L = chain(5)
    assert L.rank_function() == [0, 1, 2, 3, 4]
    assert L.orbit(4) == [4, 3, 2, 1, 0]
    assert L.orbit_stats() == (5, [4])
    assert L.is_t_pop_sortable(4, 4) and not L.is_t_pop_sortable(4, 3)


def test_intervals():
    L = boolean(3)
    iv = L.interval(L.index[1], L.index[7])
    assert iv.n == 4 and iv.is_boolean()
    with pytest.raises(NotAnInterval):
        L.interval(L.index[1], L.index[2])


def test_dual_swaps_pops():
    L = pentagon()
    D = L.dual()
    assert D.n == L.n
    for x in range(L.n):
        e = L.elements[x]
        assert D.elements[D.pop_up(D.index[e])] == L.elements[L.pop_down(x)]


def test_dot_export():
    dot = chain(3).to_dot(edge_labels=True)
    assert dot.startswith("digraph L {")
    assert "n0 -> n1" in dot and dot.rstrip().endswith("}")
    assert "digraph Galois" in chain(3).galois_dot()


# congruences -------------------------------------------------------------------

def test_congruence_on_chain():
    L = chain(4)
    cong = congruence_closure(L, [(0, 1)])
    assert cong.num_classes == 3
    assert cong.pi_down(1) == 0 and cong.pi_up(0) == 1
    Q = quotient_lattice(L, cong)
    assert Q.n == 3


def test_congruence_propagates_on_boolean():
    # in B_2, collapsing 0 ~ a forces b ~ 1
    L = boolean(2)
    a, b = L.index[1], L.index[2]
    cong = congruence_closure(L, [(L.bottom, a)])
    assert cong.class_of[b] == cong.class_of[L.top]
    with pytest.raises(ValueError):
        congruence_from_classes(L, [0, 0, 1, 2])


WEAK_A3 = build_weak_lattice(group("A3"))


@given(st.integers(0, 10**6), st.integers(1, 3))
def test_random_congruences_are_order_preserving(seed, k):
    L = WEAK_A3
    cong = random_congruence(L, random.Random(seed), k)
    Q = quotient_lattice(L, cong)
    assert Q.n == cong.num_classes
    for x in range(L.n):
        for y in L.upper_covers[x]:
            assert L.leq(cong.pi_down(x), cong.pi_down(y))
            assert L.leq(cong.pi_up(x), cong.pi_up(y))
    # pop computed inside L agrees with pop in the quotient lattice
    for q in range(Q.n):
        assert Q.elements[Q.pop_down(q)] == quotient_pop(L, cong, Q.elements[q])
    # quotient orbits never exceed the Coxeter number
    assert Q.orbit_stats()[0] <= 4


@given(st.integers(0, 10**6))
def test_facet_polynomial_routes_on_quotients(seed):
    L = WEAK_A3
    Q = quotient_lattice(L, random_congruence(L, random.Random(seed), 2))
    down = Q.facet_polynomial("down").coeffs
    assert down == Q.facet_polynomial("up").coeffs == Q.facet_polynomial("facets").coeffs
    assert down == Q.dual().facet_polynomial().coeffs
    assert sorted(Q.canonical_join_complex_facets(), key=sorted) == Q.galois_independent_facets()
