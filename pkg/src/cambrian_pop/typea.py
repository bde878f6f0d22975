"""Type A: permutations, arc diagrams, Motzkin paths and the bijection between
maximal bipartite arc diagrams and Motzkin paths without low peaks."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import networkx as nx

from .coxeter import CoxeterElement, CoxeterGroup, group


class NotMaximal(ValueError):
    pass


class InvalidPath(ValueError):
    pass


# permutations <-> group elements ------------------------------------------

class PermCodec:
    """Translate between one-line notation (values 1..n+1) and inversion bitsets of A_n."""

    def __init__(self, W: CoxeterGroup):
        if not W.type_tag.startswith("A"):
            raise ValueError("permutation model needs type A")
        self.W = W
        self.n = W.rank
        self.root_of_pair = {}
        for a in range(1, self.n + 2):
            for b in range(a + 1, self.n + 2):
                co = [0] * self.n
                for k in range(a - 1, b - 1):
                    co[k] = 1
                self.root_of_pair[(a, b)] = W.roots.root_index(co)
        self.pair_of_root = {r: p for p, r in self.root_of_pair.items()}

    def element(self, perm) -> int:
        perm = tuple(perm)
        pos = {v: k for k, v in enumerate(perm)}
        bits = 0
        for (a, b), r in self.root_of_pair.items():
            if pos[a] > pos[b]:
                bits |= 1 << r
        return bits

    def perm(self, w: int) -> tuple:
        p = list(range(1, self.n + 2))
        for s in self.W.word(w):
            p[s], p[s + 1] = p[s + 1], p[s]
        return tuple(p)

    def transposition(self, r: int) -> tuple:
        return self.pair_of_root[r]


def codec(n: int) -> PermCodec:
    return PermCodec(group(f"A{n}"))


def parse_perm(text: str) -> tuple:
    text = text.strip()
    if "," in text or " " in text:
        return tuple(int(t) for t in text.replace(",", " ").split())
    return tuple(int(ch) for ch in text)


def perm_str(p) -> str:
    if len(p) <= 9:
        return "".join(str(x) for x in p)
    return ",".join(str(x) for x in p)


def perm_descents(p) -> list:
    """1-based positions i with p(i) > p(i+1)."""
    return [i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]]


def has_double_descent(p) -> bool:
    return any(p[i] > p[i + 1] > p[i + 2] for i in range(len(p) - 2))


def avoids_312(p) -> bool:
    n = len(p)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if p[b] < p[c] < p[a]:
                    return False
    return True


# nu maps --------------------------------------------------------------------

def nu_map(c: CoxeterElement) -> dict:
    """nu_c(i) for 2 <= i <= n: 'A' if s_i precedes s_{i-1} in c, else 'B'."""
    n = len(c.word)
    pos = {s: k for k, s in enumerate(c.word)}
    # simple index i-1 is s_i
    return {i: "A" if pos[i - 1] < pos[i - 2] else "B" for i in range(2, n + 1)}


def coxeter_from_nu(W: CoxeterGroup, nu: dict) -> CoxeterElement:
    arcs = frozenset((i - 1, i - 2) if nu[i] == "A" else (i - 2, i - 1) for i in nu)
    return CoxeterElement(W._canonical_word(arcs), arcs)


def bipartite_nu(n: int) -> dict:
    return {i: "A" if i % 2 else "B" for i in range(2, n + 1)}


def is_sortable_perm(nu: dict, p) -> bool:
    """Pattern test: whenever w(j+1) < k < w(j), the value k must sit to the
    right of position j if nu(k) = A and to the left if nu(k) = B."""
    inv = {v: k + 1 for k, v in enumerate(p)}
    for j in range(1, len(p)):
        for k in range(p[j] + 1, p[j - 1]):
            if nu[k] == "A" and not inv[k] > j:
                return False
            if nu[k] == "B" and not inv[k] < j:
                return False
    return True


# arcs -------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Arc:
    left: int
    right: int
    above: frozenset = frozenset()

    def __post_init__(self):
        if not self.left < self.right:
            raise ValueError("arc needs left < right")
        if any(not self.left < k < self.right for k in self.above):
            raise ValueError("above-set must lie strictly between the endpoints")

    def height(self, x: int) -> int:
        if x in (self.left, self.right):
            return 0
        return 1 if x in self.above else -1

    def __str__(self):
        marks = "".join("+" if k in self.above else "-" for k in range(self.left + 1, self.right))
        return f"{self.left}-{self.right}" + (f"[{marks}]" if marks else "")


def arcs_cross(a: Arc, b: Arc) -> bool:
    """Interior crossing: the vertical order of the two arcs flips somewhere
    on their common span (endpoints sit at height 0, between above and below)."""
    lo, hi = max(a.left, b.left), min(a.right, b.right)
    if lo >= hi:
        return False
    signs = {(a.height(x) > b.height(x)) - (a.height(x) < b.height(x)) for x in range(lo, hi + 1)}
    return 1 in signs and -1 in signs


def compatible(a: Arc, b: Arc) -> bool:
    return a.left != b.left and a.right != b.right and not arcs_cross(a, b)


def is_noncrossing(arcs) -> bool:
    arcs = list(arcs)
    return all(compatible(arcs[i], arcs[j]) for i in range(len(arcs)) for j in range(i))


def all_arcs(n: int) -> list:
    out = []
    for i in range(1, n + 2):
        for j in range(i + 1, n + 2):
            inner = list(range(i + 1, j))
            for mask in range(1 << len(inner)):
                out.append(Arc(i, j, frozenset(k for t, k in enumerate(inner) if mask >> t & 1)))
    return out


def sortable_arc(nu: dict, i: int, j: int) -> Arc:
    return Arc(i, j, frozenset(k for k in range(i + 1, j) if nu[k] == "A"))


def is_sortable_arc(nu: dict, a: Arc) -> bool:
    return all((k in a.above) == (nu[k] == "A") for k in range(a.left + 1, a.right))


def sortable_arcs(nu: dict, n: int) -> list:
    return [sortable_arc(nu, i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2)]


def delta(p) -> frozenset:
    """The noncrossing arc diagram of a permutation: one arc per descent."""
    p = tuple(p)
    inv = {v: k + 1 for k, v in enumerate(p)}
    arcs = []
    for i in perm_descents(p):
        lo, hi = p[i], p[i - 1]
        above = frozenset(k for k in range(lo + 1, hi) if inv[k] > i + 1)
        arcs.append(Arc(lo, hi, above))
    return frozenset(arcs)


def delta_inverse(arcs, n: int) -> tuple:
    """Recover the permutation from its diagram.

    Arcs chain values into descending runs. The above/below data orders the
    runs; we search the orders consistent with it and keep the one whose
    diagram reproduces the input."""
    arcs = frozenset(arcs)
    nxt = {a.right: a.left for a in arcs}
    starts = sorted(set(range(1, n + 2)) - {a.left for a in arcs})
    runs = []
    for s in starts:
        run = [s]
        while run[-1] in nxt:
            run.append(nxt[run[-1]])
        runs.append(run)
    if sum(len(r) for r in runs) != n + 1:
        raise ValueError("arcs do not form descending runs")
    where = {v: k for k, r in enumerate(runs) for v in r}
    before = {k: set() for k in range(len(runs))}
    for a in arcs:
        home = where[a.left]
        for k in range(a.left + 1, a.right):
            other = where[k]
            if other == home:
                continue
            if k in a.above:
                before[other].add(home)
            else:
                before[home].add(other)

    def orders(done, left):
        if not left:
            yield list(done)
            return
        for k in sorted(left):
            if before[k] <= set(done):
                done.append(k)
                yield from orders(done, left - {k})
                done.pop()

    for order in orders([], set(range(len(runs)))):
        p = tuple(v for k in order for v in runs[k])
        if delta(p) == arcs:
            return p
    raise ValueError("not the diagram of a permutation")


def all_diagrams(n: int) -> list:
    """Every noncrossing arc diagram on n+1 points, by backtracking over arcs."""
    arcs = all_arcs(n)
    out = []

    def grow(chosen, start):
        out.append(frozenset(chosen))
        for k in range(start, len(arcs)):
            a = arcs[k]
            if all(compatible(a, b) for b in chosen):
                chosen.append(a)
                grow(chosen, k + 1)
                chosen.pop()

    grow([], 0)
    return out


def maximal_diagrams(nu: dict, n: int) -> list:
    """MAD(c): maximal cliques of pairwise compatible c-sortable arcs."""
    arcs = sortable_arcs(nu, n)
    G = nx.Graph()
    G.add_nodes_from(range(len(arcs)))
    for i in range(len(arcs)):
        for j in range(i):
            if compatible(arcs[i], arcs[j]):
                G.add_edge(i, j)
    facets = [frozenset(arcs[k] for k in clique) for clique in nx.find_cliques(G)]
    return sorted(facets, key=lambda d: (len(d), sorted(d)))


def is_maximal(nu: dict, n: int, diagram) -> bool:
    diagram = set(diagram)
    if not is_noncrossing(diagram):
        return False
    for a in sortable_arcs(nu, n):
        if a not in diagram and all(compatible(a, b) for b in diagram):
            return False
    return True


def facet_counts(diagrams) -> list:
    top = max((len(d) for d in diagrams), default=0)
    coeffs = [0] * (top + 1)
    for d in diagrams:
        coeffs[len(d)] += 1
    return coeffs


def diagram_str(arcs) -> str:
    return " ".join(str(a) for a in sorted(arcs))


# Motzkin paths ------------------------------------------------------------------

def is_motzkin(path: str) -> bool:
    h = 0
    for s in path:
        h += {"U": 1, "D": -1, "H": 0}[s]
        if h < 0:
            return False
    return h == 0


def peaks(path: str) -> list:
    """Peaks (x, height) at each consecutive UD."""
    out = []
    h = 0
    for k, s in enumerate(path):
        h += {"U": 1, "D": -1, "H": 0}[s]
        if s == "U" and k + 1 < len(path) and path[k + 1] == "D":
            out.append((k + 1, h))
    return out


def motzkin_paths(n: int) -> list:
    out = []

    def grow(prefix, h):
        left = n - len(prefix)
        if h > left:
            return
        if left == 0:
            out.append("".join(prefix))
            return
        for s, dh in (("U", 1), ("H", 0), ("D", -1)):
            if h + dh >= 0:
                prefix.append(s)
                grow(prefix, h + dh)
                prefix.pop()

    grow([], 0)
    return out


def motzkin_bar_paths(n: int) -> list:
    """Motzkin paths of length n without peaks of height 1."""
    return [m for m in motzkin_paths(n) if all(ht != 1 for _, ht in peaks(m))]


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for k, x in enumerate(a):
        out[k] += x
    for k, x in enumerate(b):
        out[k] += x
    return out


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _shift(a, k=1):
    return [0] * k + list(a)


@lru_cache(maxsize=None)
def motzkin_series(N: int) -> tuple:
    """Coefficients (as q-polynomials in #U) of M and M-bar up to z^N, from
    M - 1 = q z^2 M^2 + z M and M-bar - 1 = q z^2 (M - 1) M-bar + z M-bar."""
    M = [[1]]
    Mb = [[1]]
    for m in range(1, N + 1):
        acc = list(M[m - 1])
        acc2 = list(Mb[m - 1])
        for a in range(m - 1):
            b = m - 2 - a
            acc = _poly_add(acc, _shift(_poly_mul(M[a], M[b])))
            if a > 0:
                acc2 = _poly_add(acc2, _shift(_poly_mul(M[a], Mb[b])))
        M.append(acc)
        Mb.append(acc2)
    return tuple(tuple(p) for p in M), tuple(tuple(p) for p in Mb)


def u_polynomial(paths) -> list:
    coeffs = []
    for m in paths:
        k = m.count("U")
        while len(coeffs) <= k:
            coeffs.append(0)
        coeffs[k] += 1
    return coeffs


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def conjectured_coefficient(n: int) -> list:
    """Coefficient of z^n in (1/qz)(M-bar(1/q, qz) - 1) - 1, as q-coefficients:
    sum over M-bar paths of length n+1 of q^{n - #U}."""
    _, Mb = motzkin_series(n + 1)
    row = Mb[n + 1]
    out = [0] * (n + 1)
    for k, x in enumerate(row):
        out[n - k] += x
    return _trim(out)


def closed_form_coefficients(n_max: int) -> list:
    """z^n coefficients of the closed-form generating function by sympy series."""
    import sympy as sp

    q, z = sp.symbols("q z")
    expr = (1 / (q * z)) * (2 / (1 - q * z * (1 - 2 * z)
                                 + sp.sqrt(1 + q**2 * z**2 - 2 * q * z * (1 + 2 * z))) - 1) - 1
    ser = sp.series(expr, z, 0, n_max + 1).removeO()
    ser = sp.expand(ser)
    out = []
    for n in range(1, n_max + 1):
        poly = sp.Poly(sp.expand(ser.coeff(z, n)), q)
        coeffs = [0] * (poly.degree() + 1)
        for (k,), v in poly.terms():
            coeffs[k] = int(v)
        out.append(_trim(coeffs))
    return out


# the bijection ---------------------------------------------------------------------

def psi(diagram, n: int) -> str:
    """Motzkin word of a maximal bipartite arc diagram."""
    lefts = {a.left for a in diagram}
    rights = {a.right for a in diagram}
    out = []
    for i in range(1, n + 2):
        up = i <= n and (i + 1) not in rights
        down = i >= 2 and (i - 1) not in lefts
        if up and down:
            raise NotMaximal(f"step {i} would be both U and D")
        out.append("U" if up else "D" if down else "H")
    return "".join(out)


def psi_inverse(path: str) -> frozenset:
    """Build the diagram left to right with partial arcs (listed bottom to top)."""
    if not is_motzkin(path):
        raise InvalidPath(f"not a Motzkin path: {path!r}")
    n = len(path) - 1
    partial: list = []  # (left endpoint, set of points passed above)
    arcs = []
    for k in range(1, n + 2):
        odd = k % 2 == 1
        if k >= 2 and path[k - 2] != "U":
            if not partial:
                raise InvalidPath(f"no partial arc to attach at point {k}")
            # odd points are passed above, so the attached arc is the lowest
            left, above = partial.pop(0) if odd else partial.pop()
            arcs.append(Arc(left, k, frozenset(above)))
        if k <= n + 1:
            for _, above in partial:
                if odd:
                    above.add(k)
        if k <= n and path[k] != "D":
            if odd:
                partial.insert(0, (k, set()))
            else:
                partial.append((k, set()))
    if partial:
        raise InvalidPath("partial arcs left over")
    return frozenset(arcs)


# Choi-Sun conditions --------------------------------------------------------------

def choi_sun(p) -> bool:
    n = len(p) - 1
    inv = {v: k for k, v in enumerate(p)}
    if has_double_descent(p):
        return False
    for k in range(1, n + 1):
        if 3 <= 2 * k + 1 <= n + 1 and not inv[2 * k] < inv[2 * k + 1]:
            return False
        if 5 <= 2 * k + 3 <= n + 1 and not inv[2 * k] < inv[2 * k + 3]:
            return False
    if n % 2 == 1 and n >= 2 and not inv[n - 1] < inv[n + 1]:
        return False
    if n != 1 and not inv[1] < inv[3]:
        return False
    return True


def all_perms(n: int):
    return permutations(range(1, n + 2))
