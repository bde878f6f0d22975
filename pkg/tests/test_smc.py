import pytest

from cambrian_pop.coxeter import group
from cambrian_pop.quiver import QuiverReps, _bits
from cambrian_pop.smc import MutationCalculus, NotSMCompatible, SemibrickPair, subsets


@pytest.fixture(scope="module", params=[("A2", k) for k in range(2)] + [("A3", k) for k in range(4)])
def calc(request):
    tag, k = request.param
    W = group(tag)
    R = QuiverReps(W, W.coxeter_elements()[k])
    return R, MutationCalculus(R)


def test_subsets():
    assert list(subsets(0b101)) == [0, 1, 4, 5]
    assert list(subsets(0)) == [0]


def test_brick_labels_form_sm_compatible_collections(calc):
    R, M = calc
    for T in R.torsion_classes:
        D, U = R.brick_labels(T)
        assert M.is_smc(D, U)
        assert M.is_sm_compatible(D, U)
        assert M.smc_of(T) == SemibrickPair(D, U)
        assert M.torsion_of(M.smc_of(T)) == T


def test_pop_by_mutation(calc):
    R, M = calc
    for T in R.torsion_classes:
        dn, up = M.pop_via_mutation(*R.brick_labels(T))
        assert dn == R.pop_down(T)
        assert up == R.pop_up(T)


def test_left_mutation_gives_smc_and_expected_class(calc):
    R, M = calc
    for T in R.torsion_classes:
        D, U = R.brick_labels(T)
        for Xp in subsets(D):
            res = M.mutate_left(D, U, Xp)
            assert M.is_smc(res.down, res.up)
            assert R.torsion_closure(res.down) == T & R.left_perp(Xp)
            assert all(M.mutation_dimension_checks(D, U, Xp).values())
            for y in _bits(U):
                assert M.check_approximation(M.g_left(y, Xp))


def test_right_mutation_gives_smc_and_expected_class(calc):
    R, M = calc
    for T in R.torsion_classes:
        D, U = R.brick_labels(T)
        for Yp in subsets(U):
            res = M.mutate_right(D, U, Yp)
            assert M.is_smc(res.down, res.up)
            assert R.torsion_closure(res.down) == R.torsion_closure(T | Yp)


def test_single_brick_mutation_round_trip(calc):
    R, M = calc
    for T in R.torsion_classes:
        D, U = R.brick_labels(T)
        for x in _bits(D):
            res = M.mutate(D, U, 1 << x)
            back = M.mutate(res.down, res.up, 1 << x)
            assert (back.down, back.up) == (D, U)


def test_filt_by_two_routes(calc):
    R, M = calc
    for T in R.torsion_classes:
        D, U = R.brick_labels(T)
        assert M.filt(D) == M.filt_by_closures(D)
        assert M.filt(U) == M.filt_by_closures(U)


def test_preimages(calc):
    R, M = calc
    for T in R.torsion_classes:
        pre = M.preimages_bruteforce(T)
        assert pre == M.preimages_by_conditions(T)
        assert all(M.preimage_is_mutation(T, S) for S in pre)
        assert M.pop_up_preimages_by_conditions(T) == {R.pop_up(T)}


def test_image_criteria_agree(calc):
    R, M = calc
    for T in R.torsion_classes:
        assert len(set(M.image_criteria(T).values())) == 1
        assert len(set(M.image_up_criteria(T).values())) == 1


def test_one_and_two_poppable(calc):
    R, M = calc
    for T in R.torsion_classes:
        down, up = M.one_poppable_conditions(T)
        assert len(set(down)) == 1 and len(set(up)) == 1
        for S in range(1 << R.n):
            assert (R.pop_down(T) == R.filt_simples(S)) == M.two_poppable_conditions(T, S)


def test_mutation_argument_checks():
    W = group("A2")
    R = QuiverReps(W, W.coxeter_element((0, 1)))
    M = MutationCalculus(R)
    D, U = next((D, U) for D, U in map(R.brick_labels, R.torsion_classes) if D and U)
    with pytest.raises(ValueError):
        M.mutate_left(D, U, U | D)
    with pytest.raises(ValueError):
        M.mutate(D, U, (1 << R.N) - 1)
    # the two simples with the arrow between them have an extension,
    # so (S1, S2) is not a semibrick pair
    s1, s2 = R.simple_index(0), R.simple_index(1)
    assert not M.is_semibrick_pair(1 << s1, 1 << s2)
    with pytest.raises(NotSMCompatible):
        M.mutate_left(1 << s1, 1 << s2, 0)


def test_no_non_completable_sm_compatible_pairs_a3():
    W = group("A3")
    for c in W.coxeter_elements():
        found = MutationCalculus(QuiverReps(W, c)).non_completable_sm_compatible()
        assert found["pairs"] == 55
        assert found["sm_compatible_non_completable"] == []
