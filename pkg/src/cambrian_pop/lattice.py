"""Finite lattices given by downset bitsets.

Elements are indexed ``0..n-1`` in a linear extension of the order, so the
bottom is 0 and the top is ``n-1``. Meets are the highest common lower bound
and joins the lowest common upper bound.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

import networkx as nx


class NotALattice(ValueError):
    pass


class NotSemidistributive(ValueError):
    pass


class NotAnInterval(ValueError):
    pass


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class FiniteLattice:
    """An explicit finite lattice.

    ``elements`` are opaque payloads; ``down[i]`` is the bitset of indices
    weakly below ``i``. The indices must form a linear extension.
    """

    def __init__(self, elements: Sequence, down: Sequence[int], validate: bool | None = None):
        self.elements = list(elements)
        self.n = n = len(self.elements)
        if n == 0:
            raise NotALattice("empty poset")
        self.down = list(down)
        self.up = [0] * n
        for i in range(n):
            if not self.down[i] >> i & 1 or self.down[i] >> (i + 1):
                raise NotALattice("indices are not a linear extension")
            for j in _bits(self.down[i]):
                self.up[j] |= 1 << i
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.lower_covers = [self._covers_below(i) for i in range(n)]
        self.upper_covers = [[] for _ in range(n)]
        for i in range(n):
            for j in self.lower_covers[i]:
                self.upper_covers[j].append(i)
        full = (1 << n) - 1
        if self.down[n - 1] != full or self.up[0] != full:
            raise NotALattice("no unique bottom and top")
        if validate is None:
            validate = n <= 400
        if validate:
            self.validate()
        self._shards = None

    # construction ---------------------------------------------------------
    @classmethod
    def from_leq(cls, elements: Sequence, leq: Callable, key=None, validate=None):
        """Build from payloads and an order predicate; sorts by ``key`` first
        (which must be a linear extension, e.g. a rank function)."""
        els = sorted(elements, key=key) if key is not None else list(elements)
        n = len(els)
        down = [0] * n
        for i in range(n):
            d = 1 << i
            for j in range(i):
                if leq(els[j], els[i]):
                    d |= 1 << j
            down[i] = d
        return cls(els, down, validate=validate)

    @classmethod
    def from_covers(cls, elements: Sequence, covers: Sequence[tuple], validate=None):
        """Build from payloads and cover pairs (lower, upper) of payloads."""
        els = list(elements)
        idx = {e: i for i, e in enumerate(els)}
        below = [[] for _ in els]
        for a, b in covers:
            below[idx[b]].append(idx[a])
        # topological order by Kahn on the cover graph
        above = [[] for _ in els]
        nbelow = [len(x) for x in below]
        for b in range(len(els)):
            for a in below[b]:
                above[a].append(b)
        order = []
        ready = [i for i in range(len(els)) if nbelow[i] == 0]
        while ready:
            i = ready.pop()
            order.append(i)
            for b in above[i]:
                nbelow[b] -= 1
                if nbelow[b] == 0:
                    ready.append(b)
        if len(order) != len(els):
            raise NotALattice("cover relation has a cycle")
        pos = {old: new for new, old in enumerate(order)}
        down = [0] * len(els)
        for old in order:
            d = 1 << pos[old]
            for a in below[old]:
                d |= down[pos[a]]
            down[pos[old]] = d
        return cls([els[i] for i in order], down, validate=validate)

    def _covers_below(self, i):
        cand = self.down[i] & ~(1 << i)
        out = []
        covered = 0
        j = cand.bit_length() - 1
        while j >= 0:
            if cand >> j & 1 and not covered >> j & 1:
                out.append(j)
                covered |= self.down[j]
            j -= 1
        return out

    def validate(self):
        n = self.n
        for x in range(n):
            for y in range(x):
                c = self.down[x] & self.down[y]
                m = c.bit_length() - 1
                if self.down[m] != c:
                    raise NotALattice(f"elements {x}, {y} have no meet")
                c = self.up[x] & self.up[y]
                j = (c & -c).bit_length() - 1
                if self.up[j] != c:
                    raise NotALattice(f"elements {x}, {y} have no join")

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteLattice(n={self.n})"

    # basic queries --------------------------------------------------------
    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return self.n - 1

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def meet(self, x: int, y: int) -> int:
        return (self.down[x] & self.down[y]).bit_length() - 1

    def join(self, x: int, y: int) -> int:
        c = self.up[x] & self.up[y]
        return (c & -c).bit_length() - 1

    def meet_all(self, xs, default=None):
        c = self.down[self.top] if default is None else self.down[default]
        for x in xs:
            c &= self.down[x]
        return c.bit_length() - 1

    def join_all(self, xs):
        c = self.up[self.bottom]
        for x in xs:
            c &= self.up[x]
        return (c & -c).bit_length() - 1

    def edges(self):
        return [(x, y) for y in range(self.n) for x in self.lower_covers[y]]

    def rank_function(self):
        """Length of the longest chain from the bottom, per element."""
        r = [0] * self.n
        for y in range(self.n):
            for x in self.lower_covers[y]:
                r[y] = max(r[y], r[x] + 1)
        return r

    def dual(self) -> "FiniteLattice":
        n = self.n
        rev = lambda b: int(format(b, f"0{n}b")[::-1], 2)
        return FiniteLattice(self.elements[::-1], [rev(self.up[i]) for i in range(n - 1, -1, -1)],
                             validate=False)

    # pop-stack ------------------------------------------------------------
    def pop_down(self, x: int) -> int:
        if not self.lower_covers[x]:
            return x
        return self.meet_all(self.lower_covers[x], default=x)

    def pop_up(self, x: int) -> int:
        if not self.upper_covers[x]:
            return x
        return self.join_all(self.upper_covers[x] + [x])

    def orbit(self, x: int, up: bool = False) -> list:
        """Forward orbit until the fixed point, which is listed once."""
        f = self.pop_up if up else self.pop_down
        out = [x]
        while True:
            y = f(out[-1])
            if y == out[-1]:
                return out
            out.append(y)

    def orbit_stats(self, up: bool = False) -> tuple[int, list]:
        sizes = [len(self.orbit(x, up)) for x in range(self.n)]
        best = max(sizes)
        return best, [x for x in range(self.n) if sizes[x] == best]

    def pop_image(self, up: bool = False) -> list:
        f = self.pop_up if up else self.pop_down
        return sorted({f(x) for x in range(self.n)})

    def is_t_pop_sortable(self, x: int, t: int) -> bool:
        """True if t applications of pop-down reach the bottom."""
        for _ in range(t):
            x = self.pop_down(x)
        return x == self.bottom

    # irreducibles, kappa, shard labels ------------------------------------
    def join_irreducibles(self) -> list:
        return [x for x in range(self.n) if len(self.lower_covers[x]) == 1]

    def meet_irreducibles(self) -> list:
        return [x for x in range(self.n) if len(self.upper_covers[x]) == 1]

    def shards(self) -> "ShardLabeling":
        if self._shards is None:
            self._shards = shard_labeling(self)
        return self._shards

    def kappa(self, j: int) -> int:
        return self.shards().kappa[j]

    def shard_label(self, x: int, y: int) -> int:
        return self.shards().edge_label[(x, y)]

    def D(self, v: int) -> frozenset:
        """Canonical joinands of v."""
        return frozenset(self.shard_label(x, v) for x in self.lower_covers[v])

    def U(self, v: int) -> frozenset:
        """Canonical meetands of v."""
        return frozenset(self.kappa(self.shard_label(v, y)) for y in self.upper_covers[v])

    def galois_graph(self) -> dict:
        """Arrows j -> j' for j != j' with j not below kappa(j')."""
        J = self.join_irreducibles()
        k = self.shards().kappa
        return {j: sorted(j2 for j2 in J if j2 != j and not self.leq(j, k[j2])) for j in J}

    def canonical_join_complex_facets(self) -> list:
        faces = {self.D(v) for v in range(self.n)}
        return sorted((f for f in faces if not any(f < g for g in faces)), key=sorted)

    def galois_independent_facets(self) -> list:
        """Maximal independent sets of the Galois graph (undirected)."""
        G = nx.Graph()
        gal = self.galois_graph()
        G.add_nodes_from(gal)
        for j, outs in gal.items():
            for j2 in outs:
                G.add_edge(j, j2)
        comp = nx.complement(G)
        return sorted((frozenset(c) for c in nx.find_cliques(comp)), key=sorted) if len(G) else [frozenset()]

    def facet_polynomial(self, method: str = "down") -> "FacetPolynomial":
        """P_L(q) via the pop-down image ("down"), the pop-up image ("up")
        or the facets of the canonical join complex ("facets")."""
        if method == "down":
            degs = [len(self.U(v)) for v in self.pop_image()]
        elif method == "up":
            degs = [len(self.D(v)) for v in self.pop_image(up=True)]
        elif method == "facets":
            degs = [len(f) for f in self.canonical_join_complex_facets()]
        else:
            raise ValueError(method)
        coeffs = [0] * (max(degs) + 1)
        for d in degs:
            coeffs[d] += 1
        return FacetPolynomial(coeffs)

    # intervals ------------------------------------------------------------
    def interval_indices(self, u: int, v: int) -> list:
        if not self.leq(u, v):
            raise NotAnInterval(f"{u} is not below {v}")
        return list(_bits(self.down[v] & self.up[u]))

    def interval(self, u: int, v: int) -> "FiniteLattice":
        idx = self.interval_indices(u, v)
        return self.sublattice(idx, validate=False)

    def sublattice(self, idx: Sequence[int], validate=None) -> "FiniteLattice":
        """Induced subposet on ``idx`` (payloads are indices into self)."""
        idx = sorted(idx)
        pos = {x: k for k, x in enumerate(idx)}
        down = []
        for x in idx:
            d = 0
            for y in _bits(self.down[x]):
                if y in pos:
                    d |= 1 << pos[y]
            down.append(d)
        return FiniteLattice(idx, down, validate=validate)

    def is_boolean(self) -> bool:
        atoms = self.upper_covers[self.bottom]
        k = len(atoms)
        if self.n != 1 << k:
            return False
        seen = set()
        for mask in range(1 << k):
            seen.add(self.join_all([atoms[i] for i in range(k) if mask >> i & 1]))
        return len(seen) == self.n

    def is_distributive(self) -> bool:
        """Count order ideals of the join-irreducible poset; distributive iff
        the count equals |L| (Birkhoff)."""
        J = self.join_irreducibles()
        pos = {j: k for k, j in enumerate(J)}
        below = [0] * len(J)
        for j in J:
            for i in J:
                if i != j and self.leq(i, j):
                    below[pos[j]] |= 1 << pos[i]
        # J is sorted by a linear extension, so lower elements are decided first.
        # Every branch reaches a leaf, so stopping at |L| + 1 ideals bounds the work.
        limit = self.n + 1
        count = 0
        stack = [(0, 0)]
        while stack and count < limit:
            k, chosen = stack.pop()
            if k == len(J):
                count += 1
                continue
            stack.append((k + 1, chosen))
            if below[k] & ~chosen == 0:
                stack.append((k + 1, chosen | 1 << k))
        return count == self.n

    def is_boolean_interval(self, u: int, v: int) -> bool:
        return self.interval(u, v).is_boolean()

    def is_distributive_interval(self, u: int, v: int) -> bool:
        return self.interval(u, v).is_distributive()

    def is_semidistributive(self) -> bool:
        """Brute-force check of both semidistributive laws (small lattices)."""
        n = self.n
        for x in range(n):
            groups: dict = {}
            for y in range(n):
                groups.setdefault(self.meet(x, y), []).append(y)
            for m, ys in groups.items():
                if self.meet(x, self.join_all(ys)) != m:
                    return False
            groups = {}
            for y in range(n):
                groups.setdefault(self.join(x, y), []).append(y)
            for m, ys in groups.items():
                if self.join(x, self.meet_all(ys)) != m:
                    return False
        return True

    # export ---------------------------------------------------------------
    def to_dot(self, label: Callable | None = None, edge_labels: bool = False, name="L") -> str:
        label = label or (lambda i: str(self.elements[i]))
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i in range(self.n):
            lines.append(f'  n{i} [label="{label(i)}"];')
        for x, y in self.edges():
            if edge_labels:
                lines.append(f'  n{x} -> n{y} [label="{self.shard_label(x, y)}"];')
            else:
                lines.append(f"  n{x} -> n{y};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def galois_dot(self, label: Callable | None = None) -> str:
        label = label or (lambda i: str(self.elements[i]))
        lines = ["digraph Galois {"]
        for j, outs in self.galois_graph().items():
            lines.append(f'  n{j} [label="{label(j)}"];')
            for j2 in outs:
                lines.append(f"  n{j} -> n{j2};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class ShardLabeling:
    jirr: list
    mirr: list
    kappa: dict
    edge_label: dict


@dataclass
class FacetPolynomial:
    coeffs: list

    def __call__(self, q):
        return sum(c * q ** k for k, c in enumerate(self.coeffs))

    def total(self) -> int:
        return sum(self.coeffs)

    def to_json(self) -> str:
        return json.dumps({"coeffs": self.coeffs})


def shard_labeling(L: FiniteLattice) -> ShardLabeling:
    J = L.join_irreducibles()
    M = L.meet_irreducibles()
    kappa = {}
    for j in J:
        jstar = L.lower_covers[j][0]
        cands = [m for m in M if L.meet(m, j) == jstar and L.join(m, j) == L.upper_covers[m][0]]
        if len(cands) != 1:
            raise NotSemidistributive(f"kappa({j}) has {len(cands)} candidates")
        kappa[j] = cands[0]
    if len(set(kappa.values())) != len(J) or len(J) != len(M):
        raise NotSemidistributive("kappa is not a bijection")
    labels = {}
    for x, y in L.edges():
        cands = [j for j in J if L.leq(j, y) and L.leq(x, kappa[j])]
        if len(cands) != 1:
            raise NotSemidistributive(f"edge {x}<{y} has {len(cands)} shard labels")
        # cross-check: the minimum of {z <= y : z not <= x}
        rest = L.down[y] & ~L.down[x]
        mins = [z for z in _bits(rest) if L.down[z] & rest == 1 << z]
        if mins != cands:
            raise NotSemidistributive(f"edge {x}<{y}: minimum witness disagrees")
        labels[(x, y)] = cands[0]
    return ShardLabeling(J, M, kappa, labels)


# ---------------------------------------------------------------------------
# congruences


@dataclass
class Congruence:
    class_of: list
    classes: list = field(default_factory=list)
    cmin: list = field(default_factory=list)
    cmax: list = field(default_factory=list)

    def pi_down(self, x: int) -> int:
        return self.cmin[self.class_of[x]]

    def pi_up(self, x: int) -> int:
        return self.cmax[self.class_of[x]]

    @property
    def num_classes(self):
        return len(self.classes)


def congruence_closure(L: FiniteLattice, pairs) -> Congruence:
    """Smallest lattice congruence containing ``pairs``."""
    n = L.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        a, b = find(a), find(b)
        if a == b:
            return False
        parent[max(a, b)] = min(a, b)
        return True

    for a, b in pairs:
        union(a, b)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            r = find(x)
            if r == x:
                continue
            for z in range(n):
                if union(L.join(x, z), L.join(r, z)):
                    changed = True
                if union(L.meet(x, z), L.meet(r, z)):
                    changed = True
                r = find(x)
    reps = sorted({find(x) for x in range(n)})
    cid = {r: k for k, r in enumerate(reps)}
    class_of = [cid[find(x)] for x in range(n)]
    classes = [0] * len(reps)
    for x in range(n):
        classes[class_of[x]] |= 1 << x
    cmin, cmax = [], []
    for c in classes:
        members = list(_bits(c))
        lo, hi = L.meet_all(members), L.join_all(members)
        if lo not in members or hi not in members:
            raise AssertionError("congruence class has no min or max")
        if L.down[hi] & L.up[lo] != c:
            raise AssertionError("congruence class is not an interval")
        cmin.append(lo)
        cmax.append(hi)
    return Congruence(class_of, classes, cmin, cmax)


def congruence_from_classes(L: FiniteLattice, class_of: Sequence) -> Congruence:
    """Wrap a known partition; the closure of its pairs must not merge classes."""
    pairs = []
    first = {}
    for x, c in enumerate(class_of):
        if c in first:
            pairs.append((first[c], x))
        else:
            first[c] = x
    cong = congruence_closure(L, pairs)
    if cong.num_classes != len(first):
        raise ValueError("partition is not a lattice congruence")
    return cong


def quotient_lattice(L: FiniteLattice, cong: Congruence) -> FiniteLattice:
    """The quotient realised on the class minima with the induced order."""
    return L.sublattice(sorted(set(cong.cmin)), validate=None)


class NotAQuotientRepresentative(ValueError):
    pass


def quotient_pop(L: FiniteLattice, cong: Congruence, x: int) -> int:
    """Pop-down of the quotient at the class minimum x, computed in L."""
    if cong.pi_down(x) != x:
        raise NotAQuotientRepresentative(f"{x} is not a class minimum")
    covers = L.lower_covers[x]
    if not covers:
        return x
    return cong.pi_down(L.meet_all([cong.pi_down(a) for a in covers], default=x))


def random_congruence(L: FiniteLattice, rng: random.Random, k: int = 1) -> Congruence:
    """Congruence generated by ``k`` cover pairs chosen with ``rng``."""
    edges = L.edges()
    pairs = rng.sample(edges, min(k, len(edges))) if edges else []
    return congruence_closure(L, pairs)
