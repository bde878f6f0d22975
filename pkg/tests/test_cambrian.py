import pytest
from hypothesis import given, strategies as st

from cambrian_pop.cambrian import (Cambrian, NotSortable, is_sortable, is_sortable_recursive,
                                   sortable_elements, sorting_word)
from cambrian_pop.coxeter import group
from cambrian_pop.typea import (PermCodec, all_perms, avoids_312, choi_sun, has_double_descent,
                                is_sortable_perm, nu_map)


# W-Catalan numbers
CATALAN = {"A1": 2, "A2": 5, "A3": 14, "A4": 42, "A5": 132, "B2": 6, "B3": 20, "B4": 70,
           "D4": 50, "D5": 182, "G2": 8, "I2:5": 7, "I2:9": 11, "H3": 32, "F4": 105, "E6": 833}


@pytest.mark.parametrize("tag", sorted(CATALAN))
def test_number_of_sortables_is_catalan(tag):
    W = group(tag)
    counts = {len(sortable_elements(W, c)) for c in W.coxeter_elements()[:3]}
    assert counts == {CATALAN[tag]}


@pytest.mark.parametrize("tag", ["A3", "B3", "D4", "H3", "I2:6"])
def test_sortables_by_three_routes(tag):
    W = group(tag)
    els = W.elements()
    for c in W.coxeter_elements():
        by_words = set(sortable_elements(W, c))
        assert by_words == {w for w in els if is_sortable(W, c, w)}
        assert by_words == {w for w in els if is_sortable_recursive(W, c, w)}


def test_sorting_word_of_w0_in_a2():
    W = group("A2")
    c = W.coxeter_element((0, 1))
    sw = sorting_word(W, c, W.long_element())
    assert list(sw.letters) == [0, 1, 0]
    assert sw.is_nested()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_a_pattern_matches_group_sortability(n):
    W = group(f"A{n}")
    cd = PermCodec(W)
    for c in W.coxeter_elements():
        nu = nu_map(c)
        sortable = set(sortable_elements(W, c))
        for p in all_perms(n):
            assert is_sortable_perm(nu, p) == (cd.element(p) in sortable)


def test_linear_sortables_avoid_312():
    W = group("A4")
    cd = PermCodec(W)
    c = W.coxeter_element(range(4))
    sortable = set(sortable_elements(W, c))
    assert {cd.element(p) for p in all_perms(4) if avoids_312(p)} == sortable


@pytest.fixture(scope="module", params=["A3", "B3", "D4", "H3", "I2:7"])
def cambrians(request):
    W = group(request.param)
    return W, [Cambrian(W, c) for c in W.coxeter_elements()]


def test_cambrian_is_sublattice(cambrians):
    _, cs = cambrians
    for C in cs:
        assert C.check_sublattice()


def test_projection_properties(cambrians):
    W, cs = cambrians
    for C in cs:
        Wk = C.weak
        for k, w in enumerate(Wk.elements):
            p = C.pi_down(w)
            assert p & ~w == 0 and p in C.sortable_set
            assert C.pi_down(p) == p
            for u in Wk.upper_covers[k]:
                assert p & ~C.pi_down(Wk.elements[u]) == 0
        # fibres are intervals with sortable bottoms
        for bottom, fibre in C.congruence_classes().items():
            assert min(fibre, key=int.bit_count) == bottom


def test_pop_agrees_with_lattice_pop(cambrians):
    _, cs = cambrians
    for C in cs:
        L = C.lattice
        for k, w in enumerate(L.elements):
            assert C.pop(w) == L.elements[L.pop_down(k)]


def test_image_by_both_conditions(cambrians):
    _, cs = cambrians
    for C in cs:
        rep = C.image_report()
        assert rep["ok"], C.c.word


def test_interval_conditions_and_dynamics(cambrians):
    W, cs = cambrians
    h = W.coxeter_number()
    for C in cs:
        for w in C.sortables:
            assert len(set(C.six_conditions(w))) == 1
            assert all(C.dynamical_identity(w, t) for t in range(h + 1))


def test_spine_is_distributive(cambrians):
    _, cs = cambrians
    for C in cs:
        assert C.spine_lattice().is_distributive()


def test_pop_rejects_unsortable():
    W = group("A2")
    C = Cambrian(W, W.coxeter_element((0, 1)))
    bad = next(w for w in W.elements() if w not in C.sortable_set)
    with pytest.raises(NotSortable):
        C.pop(bad)


MOTZKIN = [1, 1, 2, 4, 9, 21, 51]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_linear_image_is_motzkin(n):
    W = group(f"A{n}")
    cd = PermCodec(W)
    C = Cambrian(W, W.coxeter_element(range(n)))
    img = C.image()
    assert len(img) == MOTZKIN[n]
    # no double descents and the last entry is n+1
    for w in C.sortables:
        p = cd.perm(w)
        assert (w in img) == (not has_double_descent(p) and p[-1] == n + 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_bipartite_image_matches_explicit_conditions(n):
    W = group(f"A{n}")
    cd = PermCodec(W)
    C = Cambrian(W, W.bipartite_coxeter_element())
    img = C.image()
    for w in C.sortables:
        assert (w in img) == choi_sun(cd.perm(w))


def test_bipartite_image_rank_one():
    # the explicit list degenerates for n = 1 (it mentions the value n - 1 = 0);
    # the image is just the identity
    W = group("A1")
    assert Cambrian(W, W.bipartite_coxeter_element()).image() == {0}


def test_p_elements_lie_above_simples():
    W = group("B3")
    for c in W.coxeter_elements():
        C = Cambrian(W, c)
        for i, p in enumerate(C.p_elements()):
            assert p & W.simple_bit[i]
            assert p in C.sortable_set


A4 = group("A4")
A4_CAMB = [Cambrian(A4, c) for c in A4.coxeter_elements()]


@given(st.integers(0, 7), st.data())
def test_orbits_end_at_identity(k, data):
    C = A4_CAMB[k]
    w = data.draw(st.sampled_from(C.sortables))
    orbit = C.orbit(w)
    assert orbit[-1] == 0 and len(orbit) <= 5
    assert all(b & ~a == 0 for a, b in zip(orbit, orbit[1:]))
    # every element after the first lies in the image
    img = C.image()
    assert all(x in img for x in orbit[1:])


def test_image_sizes_a4_frozen():
    # computed exhaustively; linear is smallest, bipartite largest
    sizes = {tuple(C.c.word): len(C.image()) for C in A4_CAMB}
    lin = A4.coxeter_element(range(4)).word
    bip = A4.bipartite_coxeter_element().word
    assert sizes[lin] == 9 and sizes[bip] == 12
    assert min(sizes.values()) == 9 and max(sizes.values()) == 12


@pytest.mark.slow
def test_h4_suites():
    from cambrian_pop import verify as V

    W = group("H4")
    cs = W.coxeter_elements()
    for c in cs:
        C = Cambrian(W, c)
        assert len(C.sortables) == 280
        for check in (V.check_image, V.check_orbit, V.check_facets):
            assert next(iter(check(W, c, C)), None) is None
    c = cs[0]
    assert next(iter(V.check_intervals(W, c, Cambrian(W, c))), None) is None
