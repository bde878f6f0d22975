"""Representations of a simply-laced Dynkin quiver Q_c over the rationals.

Conventions: Q_c has an arrow i -> j whenever s_i and s_j do not commute and
s_i comes first in c.  Representations are covariant, so the projective P(i)
is spanned by the paths starting at i.  An indecomposable is stored under the
index of its dimension vector in the root system of W, which makes a torsion
class a bitset over root indices, directly comparable with inversion sets.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property

from . import linalg as la
from .cambrian import sorting_word
from .coxeter import CoxeterElement, CoxeterGroup
from .lattice import FiniteLattice


class NotSimplyLaced(ValueError):
    pass


class NotABrick(ValueError):
    pass


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# quivers and representations


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple  # sorted pairs (source, target)

    @classmethod
    def from_coxeter(cls, W: CoxeterGroup, c: CoxeterElement) -> "Quiver":
        tag = W.type_tag
        if tag[0] not in "ADE" and not (tag[0] == "I" and W.rank == 2 and W.diagram.bond[0][1] == 3):
            raise NotSimplyLaced(f"{tag} is not simply laced")
        return cls(W.rank, tuple(sorted(c.orientation)))

    def out_arrows(self, i):
        return [a for a in self.arrows if a[0] == i]

    def in_arrows(self, i):
        return [a for a in self.arrows if a[1] == i]

    def is_sink(self, i) -> bool:
        return not self.out_arrows(i)

    def is_source(self, i) -> bool:
        return not self.in_arrows(i)

    def reflect(self, k: int) -> "Quiver":
        return Quiver(self.n, tuple(sorted((j, i) if k in (i, j) else (i, j) for i, j in self.arrows)))

    def paths_from(self, i: int) -> list:
        """Number of paths from i to each vertex (the dimension vector of P(i))."""
        count = [0] * self.n
        count[i] = 1
        order = self.topological_order()
        for v in order:
            for _, w in self.out_arrows(v):
                count[w] += count[v]
        return count

    def paths_to(self, i: int) -> list:
        count = [0] * self.n
        count[i] = 1
        for v in reversed(self.topological_order()):
            for u, _ in self.in_arrows(v):
                count[u] += count[v]
        return count

    def topological_order(self) -> list:
        indeg = {v: 0 for v in range(self.n)}
        for _, j in self.arrows:
            indeg[j] += 1
        ready = sorted(v for v in indeg if indeg[v] == 0)
        out = []
        while ready:
            v = ready.pop(0)
            out.append(v)
            for _, w in self.out_arrows(v):
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        return out


class Rep:
    """A representation: vector space dimensions and one matrix per arrow.

    ``maps[(i, j)]`` has shape ``dims[j] x dims[i]``.
    """

    __slots__ = ("quiver", "dims", "maps")

    def __init__(self, quiver: Quiver, dims, maps: dict | None = None):
        self.quiver = quiver
        self.dims = tuple(int(d) for d in dims)
        maps = dict(maps or {})
        for a in quiver.arrows:
            i, j = a
            m = maps.get(a)
            if m is None:
                m = la.zeros(self.dims[j], self.dims[i])
            if m.shape != (self.dims[j], self.dims[i]):
                raise ValueError(f"arrow {a}: matrix shape {m.shape} does not match dims")
            maps[a] = m
        self.maps = maps

    def __repr__(self):
        return f"Rep(dims={self.dims})"

    @classmethod
    def zero(cls, quiver: Quiver) -> "Rep":
        return cls(quiver, [0] * quiver.n)

    @classmethod
    def simple(cls, quiver: Quiver, i: int) -> "Rep":
        return cls(quiver, [1 if k == i else 0 for k in range(quiver.n)])

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def identity(self) -> tuple:
        return tuple(la.eye(d) for d in self.dims)

    def zero_map_to(self, other: "Rep") -> tuple:
        return tuple(la.zeros(other.dims[i], self.dims[i]) for i in range(self.quiver.n))

    def socle_dims(self) -> list:
        """Dimension of the socle at each vertex: vectors killed by every outgoing arrow."""
        out = []
        for i in range(self.quiver.n):
            outs = [self.maps[a] for a in self.quiver.out_arrows(i)]
            if not outs or self.dims[i] == 0:
                out.append(self.dims[i])
                continue
            out.append(self.dims[i] - la.rank(la.vstack(*outs)))
        return out

    def top_dims(self) -> list:
        out = []
        for i in range(self.quiver.n):
            ins = [self.maps[a] for a in self.quiver.in_arrows(i)]
            if not ins or self.dims[i] == 0:
                out.append(self.dims[i])
                continue
            out.append(self.dims[i] - la.rank(la.hstack(*ins)))
        return out

    def to_json(self) -> dict:
        return {"dims": list(self.dims),
                "maps": {f"{i}->{j}": la.entries(m) for (i, j), m in sorted(self.maps.items())}}


# morphisms are tuples of per-vertex matrices f[i]: M_i -> N_i


def compose(g: tuple, f: tuple) -> tuple:
    return tuple(la.matmul(gi, fi) for gi, fi in zip(g, f))


def add_maps(f: tuple, g: tuple, t=1) -> tuple:
    """f + t g."""
    return tuple(la.add(fi, la.scale(gi, t)) for fi, gi in zip(f, g))


def scale_map(f: tuple, t) -> tuple:
    return tuple(la.scale(fi, t) for fi in f)


def is_morphism(M: Rep, N: Rep, f: tuple) -> bool:
    for a in M.quiver.arrows:
        i, j = a
        if la.matmul(N.maps[a], f[i]) != la.matmul(f[j], M.maps[a]):
            return False
    return True


def is_injective(f: tuple) -> bool:
    return all(la.rank(fi) == fi.shape[1] for fi in f)


def is_surjective(f: tuple) -> bool:
    return all(la.rank(fi) == fi.shape[0] for fi in f)


def is_zero_map(f: tuple) -> bool:
    return all(la.is_zero(fi) for fi in f)


def flatten_map(f: tuple) -> list:
    return [x for fi in f for x in la.flatten(fi)]


def hom_basis(M: Rep, N: Rep) -> list:
    """A basis of Hom(M, N), found by solving the intertwining equations exactly."""
    Q = M.quiver
    n = Q.n
    offs, total = [], 0
    for i in range(n):
        offs.append(total)
        total += N.dims[i] * M.dims[i]
    if total == 0:
        return []
    rows = []
    zero = la.scalar(0)
    for a in Q.arrows:
        i, j = a
        Na = N.maps[a].to_list() if N.dims[j] and N.dims[i] else []
        Ma = M.maps[a].to_list() if M.dims[j] and M.dims[i] else []
        di, ei, dj, ej = M.dims[i], N.dims[i], M.dims[j], N.dims[j]
        for p in range(ej):
            for q in range(di):
                row = [zero] * total
                # (N_a f_i)[p, q] = sum_r N_a[p, r] f_i[r, q]
                for r in range(ei):
                    row[offs[i] + r * di + q] += Na[p][r]
                # (f_j M_a)[p, q] = sum_s f_j[p, s] M_a[s, q]
                for s in range(dj):
                    row[offs[j] + p * dj + s] -= Ma[s][q]
                if any(row):
                    rows.append(row)
    B = la.null_basis(la.mat(rows, len(rows), total))
    out = []
    for k in range(B.shape[1]):
        col = [B[r, k].element for r in range(total)]
        out.append(tuple(la.from_flat(col[offs[i]:offs[i] + N.dims[i] * M.dims[i]], N.dims[i], M.dims[i])
                         for i in range(n)))
    return out


def hom_dim(M: Rep, N: Rep) -> int:
    return len(hom_basis(M, N))


def euler_form(Q: Quiver, d, e) -> int:
    return sum(d[i] * e[i] for i in range(Q.n)) - sum(d[i] * e[j] for i, j in Q.arrows)


def ext_dim(M: Rep, N: Rep) -> int:
    out = hom_dim(M, N) - euler_form(M.quiver, M.dims, N.dims)
    assert out >= 0, "negative Ext dimension"
    return out


def end_dim(M: Rep) -> int:
    return hom_dim(M, M)


# kernels, cokernels, sums, pushouts and pullbacks


def kernel(f: tuple, M: Rep) -> tuple:
    """(K, inclusion K -> M)."""
    Q = M.quiver
    inc = tuple(la.null_basis(fi) if fi.shape[1] else la.zeros(0, 0) for fi in f)
    inc = tuple(la.zeros(M.dims[i], 0) if inc[i].shape[0] != M.dims[i] else inc[i] for i in range(Q.n))
    dims = [x.shape[1] for x in inc]
    maps = {}
    for a in Q.arrows:
        i, j = a
        maps[a] = la.matmul(la.left_inverse(inc[j]), la.matmul(M.maps[a], inc[i]))
    return Rep(Q, dims, maps), inc


def image(f: tuple, N: Rep) -> tuple:
    """(I, inclusion I -> N) for the image of f."""
    Q = N.quiver
    inc = tuple(la.col_basis(fi) if fi.shape[0] else la.zeros(0, 0) for fi in f)
    inc = tuple(la.zeros(N.dims[i], 0) if inc[i].shape[0] != N.dims[i] else inc[i] for i in range(Q.n))
    dims = [x.shape[1] for x in inc]
    maps = {a: la.matmul(la.left_inverse(inc[a[1]]), la.matmul(N.maps[a], inc[a[0]])) for a in Q.arrows}
    return Rep(Q, dims, maps), inc


def cokernel(f: tuple, N: Rep) -> tuple:
    """(C, projection N -> C)."""
    Q = N.quiver
    proj = []
    for i in range(Q.n):
        fi = f[i]
        if fi.shape[0] != N.dims[i]:
            fi = la.zeros(N.dims[i], 0)
        proj.append(la.cokernel_map(fi))
    dims = [p.shape[0] for p in proj]
    maps = {}
    for a in Q.arrows:
        i, j = a
        maps[a] = la.matmul(la.matmul(proj[j], N.maps[a]), la.right_inverse(proj[i]))
    return Rep(Q, dims, maps), tuple(proj)


def direct_sum(reps) -> tuple:
    """(S, injections, projections)."""
    reps = list(reps)
    Q = reps[0].quiver
    dims = [sum(R.dims[i] for R in reps) for i in range(Q.n)]
    maps = {a: la.block_diag(*[R.maps[a] for R in reps]) for a in Q.arrows}
    S = Rep(Q, dims, maps)
    inj, proj = [], []
    offs = [0] * Q.n
    for R in reps:
        fi, pi = [], []
        for i in range(Q.n):
            d, o = R.dims[i], offs[i]
            e = la.vstack(la.zeros(o, d), la.eye(d), la.zeros(dims[i] - o - d, d))
            fi.append(e)
            pi.append(la.transpose(e))
            offs[i] += d
        inj.append(tuple(fi))
        proj.append(tuple(pi))
    return S, inj, proj


def stack_out(maps: list, source: Rep) -> tuple:
    """The map source -> (+) targets with the given components."""
    return tuple(la.vstack(*[m[i] for m in maps]) if maps else la.zeros(0, source.dims[i])
                 for i in range(source.quiver.n))


def stack_in(maps: list, target: Rep) -> tuple:
    """The map (+) sources -> target with the given components."""
    return tuple(la.hstack(*[m[i] for m in maps]) if maps else la.zeros(target.dims[i], 0)
                 for i in range(target.quiver.n))


def pushout(f: tuple, g: tuple, A: Rep, B: Rep, C: Rep) -> tuple:
    """Pushout of B <-f- A -g-> C: returns (E, B -> E, C -> E)."""
    S, inj, proj = direct_sum([B, C])
    h = stack_out([f, scale_map(g, -1)], A)
    E, q = cokernel(h, S)
    return E, compose(q, inj[0]), compose(q, inj[1])


def pullback(f: tuple, g: tuple, B: Rep, C: Rep, D: Rep) -> tuple:
    """Pullback of B -f-> D <-g- C: returns (E, E -> B, E -> C)."""
    S, inj, proj = direct_sum([B, C])
    h = stack_in([f, scale_map(g, -1)], D)
    E, inc = kernel(h, S)
    return E, compose(proj[0], inc), compose(proj[1], inc)


# ---------------------------------------------------------------------------
# reflection functors and the indecomposables


def reflect_at_source(V: Rep, k: int) -> Rep:
    """BGP reflection at a source k: V'_k = coker(V_k -> (+)_{k->j} V_j)."""
    Q = V.quiver
    if not Q.is_source(k):
        raise ValueError(f"vertex {k} is not a source")
    outs = Q.out_arrows(k)
    Q2 = Q.reflect(k)
    targets = [j for _, j in outs]
    big = sum(V.dims[j] for j in targets)
    h = la.vstack(*[V.maps[a] for a in outs]) if outs else la.zeros(0, V.dims[k])
    if h.shape != (big, V.dims[k]):
        h = la.zeros(big, V.dims[k])
    q = la.cokernel_map(h)
    dims = list(V.dims)
    dims[k] = q.shape[0]
    maps = {}
    off = 0
    blocks = {}
    for j in targets:
        blocks[j] = la.columns(q, range(off, off + V.dims[j])) if q.shape[0] else la.zeros(0, V.dims[j])
        off += V.dims[j]
    for a in Q2.arrows:
        i, j = a
        if j == k:
            maps[a] = blocks[i]
        else:
            maps[a] = V.maps[a]
    return Rep(Q2, dims, maps)


class QuiverReps:
    """All indecomposable representations of Q_c, indexed by positive root.

    Hom dimensions between indecomposables are memoised; the cache is filled
    on first use and only read afterwards.
    """

    def __init__(self, W: CoxeterGroup, c: CoxeterElement):
        self.W = W
        self.c = c
        self.quiver = Quiver.from_coxeter(W, c)
        self.n = W.rank
        self.N = W.N
        self.indec = self._build_indecomposables()
        self._hom: dict = {}
        self._hom_dims = None
        self._ext_dims = None

    # construction --------------------------------------------------------
    def sink_sequence(self) -> list:
        """A reduced word for w0 each of whose letters is a sink at its turn."""
        W = self.W
        return list(sorting_word(W, tuple(reversed(self.c.word)), W.long_element()).letters)

    def _build_indecomposables(self) -> list:
        seq = self.sink_sequence()
        quivers = [self.quiver]
        for k in seq:
            if not quivers[-1].is_sink(k):
                raise AssertionError("sorting word of w0 is not sink-adapted")
            quivers.append(quivers[-1].reflect(k))
        out = [None] * self.N
        for m, k in enumerate(seq):
            V = Rep.simple(quivers[m], k)
            for t in range(m - 1, -1, -1):
                V = reflect_at_source(V, seq[t])
            r = self.W.roots.root_index(V.dims)
            if out[r] is not None:
                raise AssertionError("two indecomposables with the same dimension vector")
            out[r] = V
        if any(v is None for v in out):
            raise AssertionError("reflection functors missed a positive root")
        return out

    # basic data ----------------------------------------------------------
    def dim(self, r: int) -> tuple:
        return self.indec[r].dims

    def simple_index(self, i: int) -> int:
        return self.W.roots.beta_of_simple[i]

    @cached_property
    def simples(self) -> int:
        out = 0
        for i in range(self.n):
            out |= 1 << self.simple_index(i)
        return out

    def projective(self, i: int) -> int:
        return self.W.roots.root_index(self.quiver.paths_from(i))

    def injective(self, i: int) -> int:
        return self.W.roots.root_index(self.quiver.paths_to(i))

    @cached_property
    def projectives(self) -> int:
        return sum(1 << self.projective(i) for i in range(self.n))

    @cached_property
    def injectives(self) -> int:
        return sum(1 << self.injective(i) for i in range(self.n))

    def projective_roots(self) -> list:
        """rho for each letter of c: s_{c_n} ... s_{c_{k+1}} applied to the simple root of c_k."""
        W = self.W
        word = self.c.word
        out = {}
        for k, s in enumerate(word):
            x = W.roots.beta_of_simple[s]
            for t in word[k + 1:]:
                x = W.table[t][x]
            assert x >= 0
            out[s] = x
        return [out[i] for i in range(self.n)]

    def identify(self, M: Rep) -> int:
        """Root index of M, which must be a brick."""
        try:
            r = self.W.roots.root_index(M.dims)
        except KeyError:
            raise NotABrick(f"dimension vector {M.dims} is not a positive root") from None
        if end_dim(M) != 1:
            raise NotABrick(f"module with dimension vector {M.dims} is not a brick")
        return r

    def name(self, r: int) -> str:
        return "".join(str(x) for x in self.indec[r].dims)

    # hom and ext tables ----------------------------------------------------
    def hom(self, r: int, s: int) -> list:
        key = (r, s)
        if key not in self._hom:
            self._hom[key] = hom_basis(self.indec[r], self.indec[s])
        return self._hom[key]

    @property
    def hom_dims(self) -> list:
        if self._hom_dims is None:
            self._hom_dims = [[len(self.hom(r, s)) for s in range(self.N)] for r in range(self.N)]
        return self._hom_dims

    @property
    def ext_dims(self) -> list:
        if self._ext_dims is None:
            H = self.hom_dims
            Q = self.quiver
            self._ext_dims = [[H[r][s] - euler_form(Q, self.dim(r), self.dim(s)) for s in range(self.N)]
                              for r in range(self.N)]
            assert all(x >= 0 for row in self._ext_dims for x in row)
        return self._ext_dims

    @cached_property
    def _hom_rows(self):
        """Bitsets: hom_out[r] = {s : Hom(r, s) != 0}, hom_in[s] = {r : Hom(r, s) != 0}."""
        H = self.hom_dims
        out = [sum(1 << s for s in range(self.N) if H[r][s]) for r in range(self.N)]
        inn = [sum(1 << r for r in range(self.N) if H[r][s]) for s in range(self.N)]
        return out, inn

    def left_perp(self, C: int) -> int:
        """Indecomposables M with Hom(M, C) = 0."""
        out = self._hom_rows[0]
        return sum(1 << r for r in range(self.N) if not out[r] & C)

    def right_perp(self, C: int) -> int:
        """Indecomposables N with Hom(C, N) = 0."""
        inn = self._hom_rows[1]
        return sum(1 << s for s in range(self.N) if not inn[s] & C)

    def ext_zero(self, A: int, B: int) -> bool:
        E = self.ext_dims
        return all(E[a][b] == 0 for a in _bits(A) for b in _bits(B))

    def hom_zero(self, A: int, B: int) -> bool:
        H = self.hom_dims
        return all(H[a][b] == 0 for a in _bits(A) for b in _bits(B))

    # torsion classes -------------------------------------------------------
    def torsion_closure(self, C: int) -> int:
        """T(C) as the left perpendicular of the right perpendicular of C."""
        return self.left_perp(self.right_perp(C))

    def torsionfree_closure(self, C: int) -> int:
        return self.right_perp(self.left_perp(C))

    def torsion_closure_by_trace(self, C: int) -> int:
        """T(C) = Filt(Gen C): M lies in it iff dividing out the trace of C repeatedly reaches 0."""
        gens = list(_bits(C))
        out = 0
        for r in range(self.N):
            if self.in_filt_gen(self.indec[r], gens):
                out |= 1 << r
        return out

    def trace(self, gens: list, M: Rep) -> tuple:
        """(trace submodule, inclusion) of the images of all maps from gens into M."""
        comps = []
        for g in gens:
            comps.extend(hom_basis(self.indec[g], M))
        f = stack_in(comps, M)
        return image(f, M)

    def in_filt_gen(self, M: Rep, gens: list) -> bool:
        while not M.is_zero():
            tr, inc = self.trace(gens, M)
            if tr.is_zero():
                return False
            M, _ = cokernel(inc, M)
        return True

    def is_torsion_class(self, T: int) -> bool:
        return self.torsion_closure(T) == T

    @cached_property
    def torsion_classes(self) -> list:
        """All torsion classes, grown from 0 by joining one brick at a time."""
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for T in frontier:
                for r in range(self.N):
                    if not T >> r & 1:
                        U = self.torsion_closure(T | 1 << r)
                        if U not in seen:
                            seen.add(U)
                            nxt.append(U)
            frontier = nxt
        return sorted(seen, key=lambda t: (t.bit_count(), t))

    @cached_property
    def lattice(self) -> FiniteLattice:
        return FiniteLattice.from_leq(self.torsion_classes, lambda a, b: a & ~b == 0)

    @cached_property
    def _jirr_brick(self) -> dict:
        """Join-irreducible torsion class -> the brick generating it."""
        L = self.lattice
        out = {}
        for j in L.join_irreducibles():
            T = L.elements[j]
            below = L.elements[L.lower_covers[j][0]]
            cands = [r for r in _bits(T & ~below) if self.torsion_closure(1 << r) == T]
            if len(cands) != 1:
                raise AssertionError("join-irreducible torsion class without a unique brick")
            out[j] = cands[0]
        return out

    def brick_of_cover(self, lower: int, upper: int) -> int:
        """Brick label of a cover relation given by torsion-class bitsets."""
        L = self.lattice
        return self._jirr_brick[L.shard_label(L.index[lower], L.index[upper])]

    def brick_labels(self, T: int) -> tuple:
        """(D(T), U(T)) from the shard labels of the lattice of torsion classes."""
        L = self.lattice
        x = L.index[T]
        D = sum(1 << self.brick_of_cover(L.elements[y], T) for y in L.lower_covers[x])
        U = sum(1 << self.brick_of_cover(T, L.elements[y]) for y in L.upper_covers[x])
        return D, U

    # the characterisations of Filt(D(T)) and Filt(U(T)) by kernels/cokernels
    def _test_maps(self, basis: list) -> list:
        """Basis maps, plus one generic combination when the space is larger than a line."""
        if len(basis) <= 1:
            return basis
        generic = basis[0]
        for k, b in enumerate(basis[1:], start=2):
            generic = add_maps(generic, b, k)
        return basis + [generic]

    def wide_below(self, T: int) -> int:
        """Indecomposables M in T with ker f in T for every test map f: N -> M, N in T."""
        out = 0
        for m in _bits(T):
            M = self.indec[m]
            ok = True
            for nn in _bits(T):
                for f in self._test_maps(self.hom(nn, m)):
                    K, _ = kernel(f, self.indec[nn])
                    if not self._module_in(K, T):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out |= 1 << m
        return out

    def wide_above(self, T: int) -> int:
        """Indecomposables M in T^perp with coker f in T^perp for every test map f: M -> N."""
        F = self.right_perp(T)
        out = 0
        for m in _bits(F):
            ok = True
            for nn in _bits(F):
                for f in self._test_maps(self.hom(m, nn)):
                    C, _ = cokernel(f, self.indec[nn])
                    if not self._module_in(C, F, torsionfree=True):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out |= 1 << m
        return out

    def _module_in(self, M: Rep, T: int, torsionfree: bool = False) -> bool:
        """Whether an arbitrary module lies in the torsion (or torsion-free) class T,
        tested through Hom against the opposite class."""
        if M.is_zero():
            return True
        if torsionfree:
            for r in _bits(self.left_perp(T)):
                if hom_basis(self.indec[r], M):
                    return False
            return True
        for r in _bits(self.right_perp(T)):
            if hom_basis(M, self.indec[r]):
                return False
        return True

    def simple_objects(self, Wd: int) -> int:
        """Objects of a wide subcategory (given by its indecomposables) with no
        nonzero map from a smaller indecomposable of the subcategory."""
        H = self.hom_dims
        out = 0
        for x in _bits(Wd):
            size = sum(self.dim(x))
            if not any(H[z][x] for z in _bits(Wd) if sum(self.dim(z)) < size):
                out |= 1 << x
        return out

    def brick_labels_by_kernels(self, T: int) -> tuple:
        return self.simple_objects(self.wide_below(T)), self.simple_objects_dual(self.wide_above(T))

    def simple_objects_dual(self, Wd: int) -> int:
        H = self.hom_dims
        out = 0
        for x in _bits(Wd):
            size = sum(self.dim(x))
            if not any(H[x][z] for z in _bits(Wd) if sum(self.dim(z)) < size):
                out |= 1 << x
        return out

    # pop-stack on torsion classes -------------------------------------------
    def pop_down(self, T: int) -> int:
        D, _ = self.brick_labels(T)
        return T & self.left_perp(D)

    def pop_up(self, T: int) -> int:
        _, U = self.brick_labels(T)
        return self.torsion_closure(T | U)

    # Serre and projective detection ------------------------------------------
    def support(self, r: int) -> int:
        return sum(1 << i for i, d in enumerate(self.dim(r)) if d)

    def filt_simples(self, S: int) -> int:
        """Indecomposables whose composition factors lie in the vertex set S (a bitset of vertices)."""
        return sum(1 << r for r in range(self.N) if self.support(r) & ~S == 0)

    def simples_in(self, T: int) -> int:
        """Vertex bitset of the simples contained in T."""
        return sum(1 << i for i in range(self.n) if T >> self.simple_index(i) & 1)

    def detect_serre(self, T: int) -> bool:
        D, _ = self.brick_labels(T)
        return D & ~self.simples == 0

    def is_serre_direct(self, T: int) -> bool:
        """T equals the modules with composition factors among its own simples."""
        return T == self.filt_simples(self.simples_in(T))

    def detect_projective_gen(self, T: int):
        """Vertex set S with T = Gen(P_S), or None.

        T must be the largest torsion class containing the simples in S and no
        other simple."""
        S = self.simples_in(T)
        simples_out = self.simples & ~sum(1 << self.simple_index(i) for i in _bits(S))
        cands = [U for U in self.torsion_classes
                 if not U & simples_out and all(U >> self.simple_index(i) & 1 for i in _bits(S))]
        top = max(cands, key=int.bit_count)
        if any(U & ~top for U in cands):
            raise AssertionError("no largest torsion class with the given simples")
        return S if top == T else None

    def gen_projectives(self, S: int) -> int:
        """Gen(P_S) for a vertex bitset S."""
        return self.torsion_closure(sum(1 << self.projective(i) for i in _bits(S)))

    # export -------------------------------------------------------------------
    def brick_table(self) -> list:
        return [{"index": r, "dim": list(self.dim(r)), **{"maps": self.indec[r].to_json()["maps"]}}
                for r in range(self.N)]

    def brick_table_json(self) -> str:
        return json.dumps({"schema": "cambrian-pop/1", "arrows": [list(a) for a in self.quiver.arrows],
                           "bricks": self.brick_table()})


def exists_injective(M: Rep, N: Rep, basis: list | None = None) -> bool:
    """Whether some morphism M -> N is injective.

    Injectivity is an open condition given by a product of minors of total
    degree at most dim M, so a grid with dim M + 1 values per coordinate
    contains a witness whenever one exists."""
    if any(a > b for a, b in zip(M.dims, N.dims)):
        return False
    basis = hom_basis(M, N) if basis is None else basis
    if not basis:
        return M.is_zero()
    vals = range(M.total_dim + 1)
    for coeffs in itertools.product(vals, repeat=len(basis)):
        if not any(coeffs):
            continue
        f = scale_map(basis[0], coeffs[0])
        for t, b in zip(coeffs[1:], basis[1:]):
            f = add_maps(f, b, t)
        if is_injective(f):
            return True
    return False
