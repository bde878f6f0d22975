import pytest
from hypothesis import given, strategies as st

from cambrian_pop.coxeter import (PHI, CoxeterGroup, GoldenInt, GroupTooLarge, NonFiniteType,
                                  diagram, group, known_order, parse_type, root_table_csv)

# (type, |W|, #positive roots, h) from the classification tables
TABLE = [
    ("A1", 2, 1, 2), ("A2", 6, 3, 3), ("A3", 24, 6, 4), ("A4", 120, 10, 5), ("A5", 720, 15, 6),
    ("B2", 8, 4, 4), ("B3", 48, 9, 6), ("B4", 384, 16, 8),
    ("D4", 192, 12, 6), ("D5", 1920, 20, 8),
    ("E6", 51840, 36, 12), ("E7", 2903040, 63, 18), ("E8", 696729600, 120, 30),
    ("F4", 1152, 24, 12), ("G2", 12, 6, 6), ("H3", 120, 15, 10), ("H4", 14400, 60, 30),
    ("I2:5", 10, 5, 5), ("I2:8", 16, 8, 8), ("I2:12", 24, 12, 12),
]


@pytest.mark.parametrize("tag,order,nroots,h", TABLE)
def test_classification_numbers(tag, order, nroots, h):
    W = group(tag)
    assert W.order() == order
    assert W.N == nroots
    assert W.coxeter_number() == h
    # h is the same for every Coxeter element
    assert {W.coxeter_number(c) for c in W.coxeter_elements()} == {h}
    # |Phi+| = n h / 2
    assert 2 * W.N == W.rank * h


@pytest.mark.parametrize("tag", ["A1", "A3", "B3", "D4", "G2", "I2:7", "H3", "F4"])
def test_enumeration_matches_order(tag):
    W = group(tag)
    els = W.elements()
    assert len(els) == known_order(W.type_tag) == len(set(els))
    assert all(W.is_element(w) for w in els)
    lengths = [w.bit_count() for w in els]
    assert lengths == sorted(lengths)
    assert els[-1] == W.long_element()


def test_parse_type_forms():
    assert parse_type("A4") == ("A", 4)
    assert parse_type("A", 4) == ("A", 4)
    assert parse_type("I2:5") == ("I", 5)
    assert parse_type("I2(7)") == ("I", 7)
    for bad in ["Z3", "A"]:
        with pytest.raises(ValueError):
            parse_type(bad)
    with pytest.raises(ValueError):
        parse_type("A4", 5)


@pytest.mark.parametrize("tag", ["D3", "B1", "E5", "F5", "H5", "I2:2", "A0"])
def test_rejects_bad_types(tag):
    with pytest.raises((ValueError, NonFiniteType)):
        diagram(tag)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("CAMBRIAN_POP_MAX_ELEMENTS", "100")
    with pytest.raises(GroupTooLarge):
        group("A4").elements()
    assert len(group("A3").elements()) == 24


def test_d_labels_and_edges():
    W = group("D5")
    assert W.diagram.labels == (0, 1, 2, 3, 4)
    lab = W.diagram.labels
    edges = {frozenset((lab[i], lab[j])) for i, j in W.diagram.edges()}
    assert edges == {frozenset(e) for e in [(0, 2), (1, 2), (2, 3), (3, 4)]}


def test_number_of_coxeter_elements():
    # one per acyclic orientation of a tree with n-1 edges
    for tag in ["A4", "D4", "E6", "H3"]:
        W = group(tag)
        assert len(W.coxeter_elements()) == 2 ** (W.rank - 1)


def test_coxeter_element_depends_on_commutation_class():
    W = group("A4")
    a = W.parse_coxeter("1,3,2,4")
    b = W.parse_coxeter("3,1,4,2")
    assert a == b
    assert W.parse_coxeter("s1,s2,s3,s4") == W.coxeter_element((0, 1, 2, 3))
    with pytest.raises(ValueError):
        W.parse_coxeter("1,2,3")


def test_root_csv_and_golden_coordinates():
    W = group("H3")
    csv = root_table_csv(W).splitlines()
    assert csv[0] == "index,c1,c2,c3"
    assert len(csv) == 16
    assert any("phi" in line for line in csv)


@st.composite
def words(draw, rank=4, max_len=14):
    return draw(st.lists(st.integers(0, rank - 1), max_size=max_len))


A4 = group("A4")
B3 = group("B3")
H3 = group("H3")


@given(words(4))
def test_word_round_trip(word):
    w = A4.from_word(word)
    assert A4.from_word(A4.word(w)) == w
    assert len(A4.word(w)) == w.bit_count()


@given(words(3), words(3), words(3))
def test_group_axioms_h3(a, b, c):
    W = H3
    x, y, z = W.from_word(a), W.from_word(b), W.from_word(c)
    assert W.multiply(W.multiply(x, y), z) == W.multiply(x, W.multiply(y, z))
    assert W.multiply(x, W.inverse(x)) == 0
    # left inversions of the inverse are the right inversions
    assert W.inverse(W.inverse(x)) == x


@given(words(3))
def test_left_and_right_multiplication_agree(word):
    W = B3
    w = W.from_word(word)
    for i in range(W.rank):
        assert W.left(i, w) == W.multiply(W.simple_bit[i], w)
        assert W.right(w, i) == W.multiply(w, W.simple_bit[i])


@pytest.mark.parametrize("tag", ["A3", "B3", "H3", "G2", "I2:9", "F4"])
def test_braid_relations(tag):
    W = group(tag)
    bond = W.diagram.bond
    for i in range(W.rank):
        assert W.from_word([i, i]) == 0
        for j in range(i + 1, W.rank):
            m = bond[i][j]
            assert W.from_word([i, j] * m) == 0
            assert W.from_word([i, j] * (m - 1)) != 0 or m == 1


@pytest.mark.parametrize("tag", ["A5", "D5", "E6", "B3", "H3", "I2:5", "I2:6"])
def test_psi_is_diagram_automorphism(tag):
    W = group(tag)
    psi = [W.psi(i) for i in range(W.rank)]
    assert sorted(psi) == list(range(W.rank))
    assert all(psi[psi[i]] == i for i in range(W.rank))
    bond = W.diagram.bond
    assert all(bond[psi[i]][psi[j]] == bond[i][j] for i in range(W.rank) for j in range(W.rank))


def test_psi_known_cases():
    assert [group("A8").psi(i) for i in range(8)] == [7, 6, 5, 4, 3, 2, 1, 0]
    assert [group("B3").psi(i) for i in range(3)] == [0, 1, 2]
    assert [group("D5").psi(i) for i in range(5)] == [1, 0, 2, 3, 4]
    assert [group("D4").psi(i) for i in range(4)] == [0, 1, 2, 3]
    assert [group("I2:5").psi(i) for i in range(2)] == [1, 0]


def test_reflections_are_involutions():
    W = group("B3")
    for r in range(W.N):
        t = W.reflection(r)
        assert W.multiply(t, t) == 0
        assert W.reflection_index(t) == r
        assert t.bit_count() % 2 == 1


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_golden_arithmetic(a, b, c, d):
    x, y = GoldenInt(a, b), GoldenInt(c, d)
    phi = (1 + 5 ** 0.5) / 2
    assert abs(float(x * y) - float(x) * float(y)) < 1e-6
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))
    else:
        assert x == y
    assert PHI * PHI == PHI + 1
    assert abs(float(PHI) - phi) < 1e-12


def test_custom_diagram_object():
    W = CoxeterGroup("A", 3)
    assert W.type_tag == "A3"
