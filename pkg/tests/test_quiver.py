import pytest
from hypothesis import given, strategies as st

from cambrian_pop import linalg as la
from cambrian_pop.cambrian import Cambrian
from cambrian_pop.coxeter import group
from cambrian_pop.quiver import (NotABrick, NotSimplyLaced, QuiverReps, Rep, add_maps, cokernel,
                                 compose, direct_sum, end_dim, euler_form, exists_injective,
                                 ext_dim, hom_dim, image, is_morphism, is_zero_map, kernel,
                                 pullback, pushout, scale_map)

SIMPLY_LACED = ["A2", "A3", "A4", "D4"]


@pytest.fixture(scope="module", params=[(t, k) for t in SIMPLY_LACED for k in range(8)
                                         if k < len(group(t).coxeter_elements())])
def reps(request):
    tag, k = request.param
    W = group(tag)
    c = W.coxeter_elements()[k]
    return W, c, QuiverReps(W, c)


def test_indecomposables_are_bricks_for_every_root(reps):
    W, _, R = reps
    assert len(R.indec) == W.N
    assert all(end_dim(M) == 1 for M in R.indec)
    for r, M in enumerate(R.indec):
        assert W.roots.root_index(M.dims) == r


def test_projectives_match_root_formula(reps):
    W, _, R = reps
    assert [R.projective(i) for i in range(W.rank)] == R.projective_roots()
    for i in range(W.rank):
        P = R.indec[R.projective(i)]
        # P(i) has simple top at i
        assert P.top_dims() == [1 if k == i else 0 for k in range(W.rank)]
        I = R.indec[R.injective(i)]
        assert I.socle_dims() == [1 if k == i else 0 for k in range(W.rank)]


def test_ext_from_euler_form_is_nonnegative(reps):
    _, _, R = reps
    E = R.ext_dims
    assert all(x >= 0 for row in E for x in row)
    # no self-extensions for indecomposables of a Dynkin quiver
    assert all(E[r][r] == 0 for r in range(R.N))
    # projectives have no Ext out of them, injectives no Ext into them
    for i in range(R.n):
        p, q = R.projective(i), R.injective(i)
        assert all(E[p][s] == 0 for s in range(R.N))
        assert all(E[s][q] == 0 for s in range(R.N))


def test_torsion_classes_are_sortables(reps):
    W, c, R = reps
    C = Cambrian(W, c)
    assert set(R.torsion_classes) == set(C.sortables)
    assert len(R.torsion_classes) == len(C.sortables)


def test_brick_labels_by_both_routes(reps):
    _, _, R = reps
    for T in R.torsion_classes:
        assert R.brick_labels(T) == R.brick_labels_by_kernels(T)


def test_torsion_closure_routes(reps):
    _, _, R = reps
    for T in R.torsion_classes:
        D, _ = R.brick_labels(T)
        assert R.torsion_closure(D) == T
        assert R.torsion_closure_by_trace(D) == T


def test_serre_and_projective_detection(reps):
    _, _, R = reps
    for T in R.torsion_classes:
        assert R.detect_serre(T) == R.is_serre_direct(T)
        S = R.detect_projective_gen(T)
        if S is not None:
            assert R.gen_projectives(S) == T


# the two-vertex quiver 1 -> 2 (c = s1 s2) -------------------------------------

A2 = group("A2")
R2 = QuiverReps(A2, A2.coxeter_element((0, 1)))
S1, S2 = R2.simple_index(0), R2.simple_index(1)
P1 = R2.projective(0)


def test_a2_arrow_convention():
    assert list(R2.quiver.arrows) == [(0, 1)]
    assert R2.dim(P1) == (1, 1)
    assert R2.projective(1) == S2 and R2.injective(0) == S1


def test_a2_ext_and_closures():
    assert R2.ext_dims[S1][S2] == 1 and R2.ext_dims[S2][S1] == 0
    assert R2.hom_dims[P1][S1] == 1 and R2.hom_dims[S2][P1] == 1
    assert R2.torsion_closure(1 << S1) == 1 << S1
    assert R2.torsion_closure(1 << P1) == (1 << S1) | (1 << P1)
    assert R2.torsion_closure(1 << S2) == 1 << S2
    assert R2.torsion_closure(1 << S1 | 1 << S2) == (1 << R2.N) - 1
    assert len(R2.torsion_classes) == 5


def test_identify_rejects_non_bricks():
    S, _, _ = direct_sum([R2.indec[S1], R2.indec[S1]])
    with pytest.raises(NotABrick):
        R2.identify(S)
    assert R2.identify(R2.indec[P1]) == P1


def test_non_simply_laced_is_rejected():
    W = group("B3")
    with pytest.raises(NotSimplyLaced):
        QuiverReps(W, W.coxeter_elements()[0])


# morphisms --------------------------------------------------------------------

A3 = group("A3")
R3 = QuiverReps(A3, A3.coxeter_element((0, 2, 1)))


@st.composite
def morphisms(draw):
    r = draw(st.integers(0, R3.N - 1))
    s = draw(st.integers(0, R3.N - 1))
    M, N = R3.indec[r], R3.indec[s]
    basis = R3.hom(r, s)
    if not basis:
        return M, N, M.zero_map_to(N)
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(basis), max_size=len(basis)))
    f = M.zero_map_to(N)
    for t, b in zip(coeffs, basis):
        f = add_maps(f, b, t)
    return M, N, f


@given(morphisms())
def test_kernel_image_cokernel_exact(data):
    M, N, f = data
    assert is_morphism(M, N, f)
    K, inc = kernel(f, M)
    I, _ = image(f, N)
    C, proj = cokernel(f, N)
    assert is_morphism(K, M, inc) and is_morphism(N, C, proj)
    assert is_zero_map(compose(f, inc))
    assert is_zero_map(compose(proj, f))
    for i in range(R3.n):
        assert K.dims[i] + I.dims[i] == M.dims[i]
        assert I.dims[i] + C.dims[i] == N.dims[i]
        assert la.rank(f[i]) == I.dims[i]


def test_hom_and_ext_by_euler_form():
    Q = R3.quiver
    for r in range(R3.N):
        for s in range(R3.N):
            M, N = R3.indec[r], R3.indec[s]
            assert hom_dim(M, N) - ext_dim(M, N) == euler_form(Q, M.dims, N.dims)
            # on a Dynkin quiver Hom and Ext between indecomposables are not both nonzero
            assert not (R3.hom_dims[r][s] and R3.ext_dims[r][s])


def test_pushout_pullback_of_nonsplit_extension():
    # the extension 0 -> S2 -> P1 -> S1 -> 0 over 1 -> 2
    s2, p1, s1 = R2.indec[S2], R2.indec[P1], R2.indec[S1]
    f = R2.hom(S2, P1)[0]
    g = R2.hom(P1, S1)[0]
    E, _, _ = pushout(f, scale_map(f, 1), s2, p1, p1)
    assert E.dims == (2, 1)
    E2, _, _ = pullback(g, g, p1, p1, s1)
    assert E2.dims == (1, 2)


def test_exists_injective():
    s2, p1, s1 = R2.indec[S2], R2.indec[P1], R2.indec[S1]
    assert exists_injective(s2, p1)
    assert not exists_injective(s1, p1)
    assert not exists_injective(p1, s1)
    double, _, _ = direct_sum([s2, s2])
    assert not exists_injective(double, p1)
    assert exists_injective(Rep.zero(R2.quiver), s1)
