"""The ten acceptance criteria, run exactly (no tolerance).

Each test prints one ``CRITERION k: PASS`` or ``CRITERION k: FAIL`` line and
then asserts, so a failure shows both the line and the first counterexample.
"""
from functools import lru_cache

from cambrian_pop import verify as V
from cambrian_pop.cambrian import Cambrian
from cambrian_pop.coxeter import group


@lru_cache(maxsize=None)
def _cambrian(tag, word):
    W = group(tag)
    return Cambrian(W, W.coxeter_element(word))


def _per_coxeter(check, types, share=True):
    """First counterexample of ``check`` over every Coxeter element of every type."""
    for tag in types:
        W = group(tag)
        for c in W.coxeter_elements():
            args = (W, c, _cambrian(tag, c.word)) if share else (W, c)
            bad = next(iter(check(*args)), None)
            if bad:
                return bad
    return None


def _report(capsys, k, bad):
    with capsys.disabled():
        print(f"\nCRITERION {k}: {'FAIL' if bad else 'PASS'}")
    assert bad is None, bad


def test_criterion_1_image_characterization(capsys):
    _report(capsys, 1, _per_coxeter(V.check_image, V.IMAGE_RANGE))


def test_criterion_2_pop_equals_mutation(capsys):
    _report(capsys, 2, _per_coxeter(V.check_pop_mutation, V.REP_RANGE, share=False))


def test_criterion_3_preimages(capsys):
    _report(capsys, 3, _per_coxeter(V.check_preimage, ["A3"], share=False))


def test_criterion_4_generating_function(capsys):
    bad = next((b for n in range(1, 8) for b in V.check_generating_function(n)), None)
    _report(capsys, 4, bad)


def test_criterion_5_bijection(capsys):
    bad = next((b for n in range(1, 8) for b in V.check_bijection(n)), None)
    _report(capsys, 5, bad)


def test_criterion_6_orbit_bound_and_attainment(capsys):
    # (a) and (b) over the image range, (c) on seeded quotients of Weak(A3) and Weak(B3)
    bad = _per_coxeter(V.check_orbit, V.IMAGE_RANGE)
    if bad is None:
        bad = next((b for t in ("A3", "B3") for b in V.check_quotients(group(t), 100, 0)), None)
    _report(capsys, 6, bad)


def test_criterion_7_intervals_and_dynamics(capsys):
    _report(capsys, 7, _per_coxeter(V.check_intervals, V.CRYSTALLOGRAPHIC_RANGE))


def test_criterion_8_semidistributive_bookkeeping(capsys):
    _report(capsys, 8, _per_coxeter(V.check_facets, V.IMAGE_RANGE))


def test_criterion_9_mutation_dimensions(capsys):
    _report(capsys, 9, _per_coxeter(V.check_mutation_dimensions, V.REP_RANGE, share=False))


def test_criterion_10_fixed_vectors(capsys):
    _report(capsys, 10, next(iter(V.check_vectors()), None))
