"""Exhaustive check suites shared by the command line and the acceptance tests.

Every suite is a generator of counterexamples (plain JSON-ready dicts).  A
suite that yields nothing has passed.
"""
from __future__ import annotations

import random
from typing import Iterator

from .cambrian import Cambrian
from .coxeter import CoxeterElement, CoxeterGroup, group
from .heaps import HeapData, verify_max_orbit
from .lattice import quotient_lattice, quotient_pop, random_congruence
from .weak import build_weak_lattice, pop_weak

IMAGE_RANGE = (["A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "G2"]
               + [f"I2:{m}" for m in range(3, 13)] + ["H3"])
CRYSTALLOGRAPHIC_RANGE = ["A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "G2",
                          "I2:3", "I2:4", "I2:6", "H3"]
REP_RANGE = ["A2", "A3", "A4", "D4"]


def word_labels(W: CoxeterGroup, w: int) -> list:
    return [W.diagram.labels[i] for i in W.word(w)]


def coxeter_labels(W: CoxeterGroup, c: CoxeterElement) -> list:
    return [W.diagram.labels[i] for i in c.word]


def _where(W, c, **extra) -> dict:
    out = {"type": W.type_tag, "coxeter": coxeter_labels(W, c)}
    out.update(extra)
    return out


# Coxeter-Cambrian suites ------------------------------------------------------

def check_image(W: CoxeterGroup, c: CoxeterElement, camb: Cambrian | None = None) -> Iterator[dict]:
    """Brute-force image of pop-down equals the sets cut out by both conditions."""
    camb = camb or Cambrian(W, c)
    rep = camb.image_report()
    if rep["ok"]:
        return
    for name in ("descent_rule", "interval_rule"):
        diff = rep["image"] ^ rep[name]
        if diff:
            w = min(diff, key=lambda x: (x.bit_count(), x))
            yield _where(W, c, check="image", against=name, element=word_labels(W, w),
                         in_image=w in rep["image"])
            return


def check_orbit(W: CoxeterGroup, c: CoxeterElement, camb: Cambrian | None = None) -> Iterator[dict]:
    """Maximum orbit size is h, attained by z_c with orbit v_{h-1}, ..., v_0."""
    camb = camb or Cambrian(W, c)
    h = W.coxeter_number(c)
    best, _ = camb.lattice.orbit_stats()
    if best != h:
        yield _where(W, c, check="max_orbit", h=h, max_orbit=best)
        return
    report = verify_max_orbit(W, c, camb)
    bad = {k: v for k, v in report.items() if v is False}
    if report["orbit_size"] != h:
        bad["orbit_size"] = report["orbit_size"]
    if bad:
        yield _where(W, c, check="z_c", failed=bad)


def check_intervals(W: CoxeterGroup, c: CoxeterElement, camb: Cambrian | None = None) -> Iterator[dict]:
    """The six interval conditions agree and the dynamical identity holds for t <= h."""
    camb = camb or Cambrian(W, c)
    h = W.coxeter_number(c)
    for w in camb.sortables:
        six = camb.six_conditions(w)
        if len(set(six)) != 1:
            yield _where(W, c, check="six_conditions", element=word_labels(W, w), values=list(six))
            return
        for t in range(h + 1):
            if not camb.dynamical_identity(w, t):
                yield _where(W, c, check="dynamical_identity", element=word_labels(W, w), t=t)
                return


def check_facets(W: CoxeterGroup, c: CoxeterElement, camb: Cambrian | None = None) -> Iterator[dict]:
    """|pop-down image| = |pop-up image| = #facets and P_L = P_{L*}."""
    camb = camb or Cambrian(W, c)
    L = camb.lattice
    down, up = len(L.pop_image()), len(L.pop_image(up=True))
    facets = len(L.canonical_join_complex_facets())
    if not down == up == facets:
        yield _where(W, c, check="facet_count", down=down, up=up, facets=facets)
        return
    polys = {m: L.facet_polynomial(m).coeffs for m in ("down", "up", "facets")}
    polys["dual"] = L.dual().facet_polynomial().coeffs
    if len({tuple(p) for p in polys.values()}) != 1:
        yield _where(W, c, check="facet_polynomial", polynomials=polys)


def check_quotients(W: CoxeterGroup, samples: int = 100, seed: int = 0) -> Iterator[dict]:
    """Random lattice quotients of Weak(W) never have an orbit longer than h."""
    rng = random.Random(seed)
    Wk = build_weak_lattice(W)
    h = W.coxeter_number()
    for k in range(samples):
        cong = random_congruence(Wk, rng, rng.randint(1, 3))
        Q = quotient_lattice(Wk, cong)
        best, _ = Q.orbit_stats()
        if best > h:
            yield {"type": W.type_tag, "check": "quotient_orbit", "sample": k,
                   "h": h, "max_orbit": best, "classes": cong.num_classes}
            return
        # the quotient pop computed inside Weak(W) matches the quotient lattice
        for q in range(Q.n):
            x = Q.elements[q]
            if Q.elements[Q.pop_down(q)] != quotient_pop(Wk, cong, x):
                yield {"type": W.type_tag, "check": "quotient_pop", "sample": k, "element": x}
                return


# representation-theoretic suites -------------------------------------------------

def _reps(W, c):
    from .quiver import QuiverReps
    from .smc import MutationCalculus

    R = QuiverReps(W, c)
    return R, MutationCalculus(R)


def check_pop_mutation(W: CoxeterGroup, c: CoxeterElement) -> Iterator[dict]:
    """Mutating the SMC of T at all of D (resp. U) gives pop-down (resp. pop-up)."""
    R, M = _reps(W, c)
    camb = Cambrian(W, c)
    L = camb.lattice
    if set(R.torsion_classes) != camb.sortable_set:
        yield _where(W, c, check="torsion_classes_are_sortables")
        return
    for T in R.torsion_classes:
        D, U = R.brick_labels(T)
        down, up = M.pop_via_mutation(D, U)
        expect_down = camb.pop(T)
        expect_up = L.elements[L.pop_up(L.index[T])]
        if down != expect_down or down != R.pop_down(T):
            yield _where(W, c, check="pop_down", torsion=T, got=down, expected=expect_down)
            return
        if up != expect_up or up != R.pop_up(T):
            yield _where(W, c, check="pop_up", torsion=T, got=up, expected=expect_up)
            return


def check_preimage(W: CoxeterGroup, c: CoxeterElement) -> Iterator[dict]:
    """Preimages by conditions equal brute force; the one- and two-poppable criteria agree."""
    R, M = _reps(W, c)
    for T in R.torsion_classes:
        brute = M.preimages_bruteforce(T)
        if brute != M.preimages_by_conditions(T):
            yield _where(W, c, check="preimage", torsion=T, brute=sorted(brute),
                         conditions=sorted(M.preimages_by_conditions(T)))
            return
        for S in sorted(brute):
            if not M.preimage_is_mutation(T, S):
                yield _where(W, c, check="preimage_is_mutation", torsion=T, preimage=S)
                return
        if M.pop_up_preimages_by_conditions(T) != {R.pop_up(T)}:
            yield _where(W, c, check="pop_up_preimage", torsion=T)
            return
        one, one_dual = M.one_poppable_conditions(T)
        if len(set(one)) != 1 or len(set(one_dual)) != 1:
            yield _where(W, c, check="one_poppable", torsion=T, values=list(one),
                         dual=list(one_dual))
            return
        for S in range(1 << R.n):
            lhs = R.pop_down(T) == R.filt_simples(S)
            if lhs != M.two_poppable_conditions(T, S):
                yield _where(W, c, check="two_poppable", torsion=T, simples=S, direct=lhs)
                return


def check_mutation_dimensions(W: CoxeterGroup, c: CoxeterElement) -> Iterator[dict]:
    """Hom/Ext dimension equalities for every SMC and every subset of its X side."""
    from .smc import subsets

    R, M = _reps(W, c)
    for T in R.torsion_classes:
        D, U = R.brick_labels(T)
        for Xp in subsets(D):
            res = M.mutation_dimension_checks(D, U, Xp)
            bad = [k for k, v in res.items() if not v]
            if bad:
                yield _where(W, c, check="mutation-dims", torsion=T, subset=Xp, failed=bad)
                return


# type A suites -------------------------------------------------------------------

def check_generating_function(n: int) -> Iterator[dict]:
    """P(q) of the bipartite Cambrian lattice of A_n by three routes against the closed form."""
    from .typea import (bipartite_nu, closed_form_coefficients, conjectured_coefficient,
                        facet_counts, maximal_diagrams)

    by_arcs = facet_counts(maximal_diagrams(bipartite_nu(n), n))
    W = group(f"A{n}")
    L = Cambrian(W, W.bipartite_coxeter_element()).lattice
    by_lattice = L.facet_polynomial("facets").coeffs
    by_equation = conjectured_coefficient(n)
    by_series = closed_form_coefficients(n)[n - 1]
    routes = {"arcs": by_arcs, "lattice": by_lattice, "functional_equation": by_equation,
              "closed_form": by_series}
    if len({tuple(v) for v in routes.values()}) != 1:
        yield {"check": "generating_function", "n": n, "routes": routes}


def check_bijection(n: int) -> Iterator[dict]:
    """Psi is a bijection MAD(c_x) -> M-bar_{n+1} with |delta| = n - #U."""
    from .typea import bipartite_nu, diagram_str, maximal_diagrams, motzkin_bar_paths, psi, psi_inverse

    mads = maximal_diagrams(bipartite_nu(n), n)
    targets = set(motzkin_bar_paths(n + 1))
    seen = set()
    for d in mads:
        path = psi(d, n)
        if path not in targets or path in seen:
            yield {"check": "psi_image", "n": n, "diagram": diagram_str(d), "path": path}
            return
        seen.add(path)
        if len(d) != n - path.count("U"):
            yield {"check": "psi_size", "n": n, "diagram": diagram_str(d), "path": path}
            return
        if psi_inverse(path) != d:
            yield {"check": "psi_round_trip", "n": n, "diagram": diagram_str(d)}
            return
    if seen != targets:
        yield {"check": "psi_surjective", "n": n, "missing": sorted(targets - seen)[:5]}


# fixed vectors ------------------------------------------------------------------

def check_vectors() -> Iterator[dict]:
    from .typea import codec, parse_perm, peaks, perm_str

    # pop-stack on the weak order of A4
    cd = codec(4)
    got = perm_str(cd.perm(pop_weak(cd.W, cd.element(parse_perm("52341")))))
    if got != "25314":
        yield {"check": "pop_weak_52341", "got": got}

    # left inversions of c^{-1} for the bipartite element of A7
    cd = codec(7)
    W = cd.W
    c = W.bipartite_coxeter_element()
    inv = W.inverse(W.from_word(c.word))
    got = sorted(cd.transposition(r) for r in W.left_inversions(inv))
    want = sorted([(2, 3), (4, 5), (6, 7), (1, 3), (2, 5), (4, 7), (6, 8)])
    if got != want:
        yield {"check": "A7_bipartite_inversions", "got": got}

    # z_c in A8 for c = s1 s3 s2 s4 s6 s5 s7 s8
    W = group("A8")
    c = W.parse_coxeter("1,3,2,4,6,5,7,8")
    H = HeapData(W, c)
    cw = [1, 3, 2, 4, 6, 5, 7, 8]
    want = W.from_word([W.diagram.index_of(s) for s in cw * 3 + [1, 3, 2, 4, 6]])
    if H.h != 9 or H.z_c() != want \
            or any(W.psi(k - 1) != 9 - k - 1 for k in range(1, 9)):
        yield {"check": "A8_z_c", "h": H.h, "got": word_labels(W, H.z_c())}

    # psi and the bipartition for D5, c = s0 s2 s1 s3 s4
    W = group("D5")
    c = W.parse_coxeter("0,2,1,3,4")
    H = HeapData(W, c)
    lab = W.diagram.labels
    psi = {lab[i]: lab[W.psi(i)] for i in range(5)}
    X1, X2 = ({lab[i] for i in X} for X in H.bipartition())
    if (H.h != 8 or psi != {0: 1, 1: 0, 2: 2, 3: 3, 4: 4}
            or X1 != {0, 1, 3} or X2 != {2, 4}):
        yield {"check": "D5_heap", "h": H.h, "psi": psi, "X1": sorted(X1), "X2": sorted(X2)}

    # kappa on the weak order of I2(5): kappa(a_i) = a_{i-1}, a_0 = a_{2m-2}
    yield from _check_dihedral_kappa(5)

    # peaks of a path with peaks at (6,1) and (10,2)
    if peaks("HHHHHUDHUUDD") != [(6, 1), (10, 2)]:
        yield {"check": "peaks", "got": peaks("HHHHHUDHUUDD")}


def _check_dihedral_kappa(m: int) -> Iterator[dict]:
    W = group(f"I2:{m}")
    L = build_weak_lattice(W)
    chain1 = [W.from_word([k % 2 for k in range(j)]) for j in range(1, m)]
    chain2 = [W.from_word([(k + 1) % 2 for k in range(j)]) for j in range(1, m)]
    a = [None] + [L.index[w] for w in chain1 + chain2]  # a[1..2m-2]
    top = 2 * m - 2
    for i in range(1, top + 1):
        want = a[i - 1] if i > 1 else a[top]
        if L.kappa(a[i]) != want:
            yield {"check": "dihedral_kappa", "m": m, "i": i}
            return
    gal = L.galois_graph()
    for i in range(1, top + 1):
        if i <= m - 1:
            want = {a[k] for k in range(1, i)} | {a[k] for k in range(m + 1, top + 1)}
        else:
            want = {a[k] for k in range(2, m)} | {a[k] for k in range(m, i)}
        if set(gal[a[i]]) != want:
            yield {"check": "dihedral_galois", "m": m, "i": i}
            return


# registry -------------------------------------------------------------------------

PER_COXETER = {
    "image": check_image,
    "orbit": check_orbit,
    "intervals": check_intervals,
    "facets": check_facets,
    "pop-mutation": check_pop_mutation,
    "preimage": check_preimage,
    "mutation-dims": check_mutation_dimensions,
}
PER_N = {"gf": check_generating_function, "bijection": check_bijection}


def run_per_coxeter(suite: str, type_text: str, word: tuple) -> dict | None:
    """First counterexample of one suite for one Coxeter element (picklable entry point)."""
    W = group(type_text)
    c = W.coxeter_element(word)
    return next(iter(PER_COXETER[suite](W, c)), None)
