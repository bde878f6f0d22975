"""The weak order of a finite Coxeter group."""
from __future__ import annotations

from .coxeter import CoxeterGroup
from .lattice import FiniteLattice


def build_weak_lattice(W: CoxeterGroup, cap: int | None = None) -> FiniteLattice:
    """Weak(W) with payloads the inversion bitsets, ordered by length."""
    els = W.elements(cap)
    idx = {w: k for k, w in enumerate(els)}
    down = [0] * len(els)
    for k, w in enumerate(els):
        d = 1 << k
        for s in W.descents(w):
            d |= down[idx[W.right(w, s)]]
        down[k] = d
    return FiniteLattice(els, down, validate=len(els) <= 200)


def parabolic_long(W: CoxeterGroup, J) -> int:
    key = frozenset(J)
    if key not in W.parabolic_cache:
        W.parabolic_cache[key] = W.long_element(key)
    return W.parabolic_cache[key]


def pop_weak(W: CoxeterGroup, w: int) -> int:
    """Pop-down in the weak order: w times the long element of its descents."""
    return W.multiply(w, parabolic_long(W, W.descents(w)))


def pop_weak_up(W: CoxeterGroup, w: int) -> int:
    """Pop-up in the weak order, by the symmetry x -> w0 x."""
    w0 = W.long_element()
    return W.multiply(w0, pop_weak(W, W.multiply(w0, w)))


def cover_reflections(W: CoxeterGroup, w: int) -> set:
    """Root indices of the reflections t with t w covered by w."""
    p = W.perm(w)
    return {~p[W.roots.beta_of_simple[s]] for s in W.descents(w)}


def min_with_inversion(W: CoxeterGroup, w: int, r: int) -> int:
    """The minimum x <= w having root r as a left inversion."""
    if not w >> r & 1:
        raise ValueError("root is not an inversion of w")
    x = w
    moved = True
    while moved:
        moved = False
        for s in sorted(W.descents(x)):
            y = W.right(x, s)
            if y >> r & 1:
                x, moved = y, True
                break
    return x


def cjr_weak(W: CoxeterGroup, w: int) -> set:
    """Canonical joinands of w in the weak order."""
    return {min_with_inversion(W, w, r) for r in cover_reflections(W, w)}


def pop_weak_orbit(W: CoxeterGroup, w: int) -> list:
    out = [w]
    while out[-1]:
        out.append(pop_weak(W, out[-1]))
    return out
