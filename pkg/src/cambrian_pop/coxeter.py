"""Finite Coxeter groups with exact root systems.

Group elements are plain Python ints: the bitset of left inversions over the
indexed positive roots. ``u <= v`` in the weak order iff ``u & ~v == 0``.
"""
from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass
from math import factorial


class NonFiniteType(ValueError):
    pass


class GroupTooLarge(RuntimeError):
    pass


def default_cap() -> int:
    return int(os.environ.get("CAMBRIAN_POP_MAX_ELEMENTS", 200_000))


# ---------------------------------------------------------------------------
# golden integers a + b*phi with phi^2 = phi + 1


@dataclass(frozen=True)
class GoldenInt:
    a: int = 0
    b: int = 0

    def __add__(self, other):
        other = _golden(other)
        return GoldenInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-_golden(other))

    def __rsub__(self, other):
        return _golden(other) - self

    def __mul__(self, other):
        o = _golden(other)
        # (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        return GoldenInt(self.a * o.a + self.b * o.b,
                         self.a * o.b + self.b * o.a + self.b * o.b)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, GoldenInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def sign(self) -> int:
        # 2*value = p + q*sqrt5 with p = 2a + b, q = b
        p, q = 2 * self.a + self.b, self.b
        if p >= 0 and q >= 0:
            return 0 if p == q == 0 else 1
        if p <= 0 and q <= 0:
            return -1
        if p * p > 5 * q * q:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return self.a + self.b * (1 + 5 ** 0.5) / 2

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}phi"
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}phi"


def _golden(x):
    return x if isinstance(x, GoldenInt) else GoldenInt(int(x), 0)


PHI = GoldenInt(0, 1)

# ---------------------------------------------------------------------------
# diagrams

_TAG_RE = re.compile(r"^\s*([A-Ia-i])\s*(\d*)\s*(?:[:(]\s*(\d+)\s*\)?)?\s*$")


@dataclass(frozen=True)
class CoxeterDiagram:
    """Rank, bond matrix ``m(s_i, s_j)``, type tag and display labels."""

    rank: int
    bond: tuple
    type_tag: str
    labels: tuple

    def edges(self):
        n = self.rank
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.bond[i][j] >= 3]

    def neighbours(self, i):
        return [j for j in range(self.rank) if j != i and self.bond[i][j] >= 3]

    def index_of(self, label) -> int:
        """Internal index of a displayed simple label (int or str)."""
        for k, lab in enumerate(self.labels):
            if str(lab) == str(label).lstrip("s"):
                return k
        raise ValueError(f"no simple reflection labelled {label!r} in {self.type_tag}")

    def label(self, i) -> str:
        return f"s{self.labels[i]}"


def _bonds_from_edges(n, edges):
    bond = [[2] * n for _ in range(n)]
    for i in range(n):
        bond[i][i] = 1
    for i, j, m in edges:
        bond[i][j] = bond[j][i] = m
    return tuple(tuple(r) for r in bond)


def parse_type(text: str, rank: int | None = None) -> tuple[str, int]:
    """Parse ``A4``, ``A 4``, ``E6``, ``I2:5`` or ``I2(5)`` into (family, rank or m)."""
    m = _TAG_RE.match(str(text))
    if not m:
        raise ValueError(f"cannot parse Coxeter type {text!r}")
    fam, num, extra = m.group(1).upper(), m.group(2), m.group(3)
    if fam == "I":
        if extra is None:
            if rank is None:
                raise ValueError("I2 needs a parameter, e.g. I2:5")
            extra = rank
        return "I", int(extra)
    if num:
        r = int(num)
        if rank is not None and int(rank) != r:
            raise ValueError(f"conflicting ranks in {text!r} and {rank}")
    elif rank is not None:
        r = int(rank)
    else:
        raise ValueError(f"type {text!r} needs a rank")
    return fam, r


def diagram(type_text: str, rank: int | None = None) -> CoxeterDiagram:
    """Build the diagram of a finite irreducible type.

    Numbering: A_n path s1..sn; B_n path with the 4-bond between s_{n-1}, s_n;
    D_n labelled s0..s_{n-1} with edges {0,2},{1,2},{2,3},...; E, F, G, H
    follow Bourbaki; I2(m) has labels 1, 2.
    """
    fam, r = parse_type(type_text, rank)
    if fam == "A":
        if r < 1:
            raise ValueError("A_n needs n >= 1")
        edges = [(i, i + 1, 3) for i in range(r - 1)]
        return CoxeterDiagram(r, _bonds_from_edges(r, edges), f"A{r}", tuple(range(1, r + 1)))
    if fam == "B":
        if r < 2:
            raise ValueError("B_n needs n >= 2")
        edges = [(i, i + 1, 3) for i in range(r - 2)] + [(r - 2, r - 1, 4)]
        return CoxeterDiagram(r, _bonds_from_edges(r, edges), f"B{r}", tuple(range(1, r + 1)))
    if fam == "D":
        if r < 4:
            raise ValueError("D_n needs n >= 4")
        edges = [(0, 2, 3), (1, 2, 3)] + [(i, i + 1, 3) for i in range(2, r - 1)]
        return CoxeterDiagram(r, _bonds_from_edges(r, edges), f"D{r}", tuple(range(r)))
    if fam == "E":
        if r not in (6, 7, 8):
            raise ValueError("E_n needs n in 6, 7, 8")
        # Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4
        edges = [(0, 2, 3), (2, 3, 3), (1, 3, 3)] + [(i, i + 1, 3) for i in range(3, r - 1)]
        return CoxeterDiagram(r, _bonds_from_edges(r, edges), f"E{r}", tuple(range(1, r + 1)))
    if fam == "F":
        if r != 4:
            raise ValueError("only F4")
        edges = [(0, 1, 3), (1, 2, 4), (2, 3, 3)]
        return CoxeterDiagram(4, _bonds_from_edges(4, edges), "F4", (1, 2, 3, 4))
    if fam == "G":
        if r != 2:
            raise ValueError("only G2")
        return CoxeterDiagram(2, _bonds_from_edges(2, [(0, 1, 6)]), "G2", (1, 2))
    if fam == "H":
        if r not in (3, 4):
            raise ValueError("only H3, H4")
        edges = [(0, 1, 5)] + [(i, i + 1, 3) for i in range(1, r - 1)]
        return CoxeterDiagram(r, _bonds_from_edges(r, edges), f"H{r}", tuple(range(1, r + 1)))
    if fam == "I":
        if r < 3:
            raise ValueError("I2(m) needs m >= 3")
        return CoxeterDiagram(2, _bonds_from_edges(2, [(0, 1, r)]), f"I2({r})", (1, 2))
    raise ValueError(f"unknown family {fam}")


def _bonds_isomorphic(b1, b2):
    """Backtracking search for a relabelling sigma with b2[sigma i][sigma j] = b1[i][j]."""
    n = len(b1)
    if n != len(b2):
        return None
    sig = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return list(sig)
        for t in range(n):
            if used[t]:
                continue
            if all(b2[t][sig[k]] == b1[i][k] for k in range(i)):
                sig[i], used[t] = t, True
                res = extend(i + 1)
                if res:
                    return res
                used[t] = False
        return None

    return extend(0)


def diagram_from_bonds(bond) -> CoxeterDiagram:
    """Classify an explicit bond matrix; indices are kept as given."""
    n = len(bond)
    bond = tuple(tuple(int(x) for x in row) for row in bond)
    for i in range(n):
        if bond[i][i] != 1:
            raise ValueError("bond diagonal must be 1")
        for j in range(n):
            if i != j and (bond[i][j] != bond[j][i] or bond[i][j] < 2):
                raise ValueError("bond matrix must be symmetric with entries >= 2")
    cands = []
    if n == 1:
        cands = ["A1"]
    elif n == 2:
        cands = [f"I2:{bond[0][1]}"] if bond[0][1] >= 3 else []
    else:
        cands = [f"A{n}", f"B{n}"] + ([f"D{n}"] if n >= 4 else [])
        cands += {3: ["H3"], 4: ["F4", "H4"], 6: ["E6"], 7: ["E7"], 8: ["E8"]}.get(n, [])
    for tag in cands:
        std = diagram(tag)
        sig = _bonds_isomorphic(bond, std.bond)
        if sig is not None:
            tag_out = std.type_tag
            if n == 2:
                m = bond[0][1]
                tag_out = {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")
            return CoxeterDiagram(n, bond, tag_out, tuple(range(1, n + 1)))
    raise NonFiniteType("bond matrix is not of finite irreducible type")


def known_order(type_tag: str) -> int:
    fam, r = parse_type(type_tag.replace("(", ":").rstrip(")"))
    if fam == "A":
        return factorial(r + 1)
    if fam == "B":
        return 2 ** r * factorial(r)
    if fam == "D":
        return 2 ** (r - 1) * factorial(r)
    if fam == "I":
        return 2 * r
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152,
            ("G", 2): 12, ("H", 3): 120, ("H", 4): 14400}[(fam, r)]


def known_num_reflections(type_tag: str) -> int:
    fam, r = parse_type(type_tag.replace("(", ":").rstrip(")"))
    if fam == "A":
        return r * (r + 1) // 2
    if fam == "B":
        return r * r
    if fam == "D":
        return r * (r - 1)
    if fam == "I":
        return r
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6,
            ("H", 3): 15, ("H", 4): 60}[(fam, r)]


# ---------------------------------------------------------------------------
# root systems


def _reflection_matrix(d: CoxeterDiagram):
    """Matrix C with s_i(beta) = beta - (sum_j C[i][j] beta_j) e_i, or None for I2(m)."""
    n = d.rank
    fam = d.type_tag[0]
    if fam == "I":
        m = d.bond[0][1]
        if m == 3:
            return [[2, -1], [-1, 2]]
        if m == 4:
            return [[2, -1], [-2, 2]]
        if m == 5:
            return [[GoldenInt(2), -PHI], [-PHI, GoldenInt(2)]]
        if m == 6:
            return [[2, -1], [-3, 2]]
        return None
    if fam == "H":
        C = [[GoldenInt(2) if i == j else GoldenInt(0) for j in range(n)] for i in range(n)]
        for i, j in d.edges():
            v = -PHI if d.bond[i][j] == 5 else GoldenInt(-1)
            C[i][j] = C[j][i] = v
        return C
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in d.edges():
        m = d.bond[i][j]
        C[i][j] = C[j][i] = -1
        if m == 4:
            C[j][i] = -2
        elif m == 6:
            C[j][i] = -3
    return C


def _is_nonneg(v):
    return all(x >= 0 for x in v)


@dataclass
class RootSystem:
    """Indexed positive roots with the simple-reflection action table.

    ``simple_action[i][r]`` is the signed index of ``s_i(beta_r)``: ``k`` for
    ``beta_k`` and ``~k`` for ``-beta_k``.
    """

    diagram: CoxeterDiagram
    pos_roots: list
    simple_action: list
    beta_of_simple: list
    angle_index: list | None = None

    @property
    def num_roots(self):
        return len(self.simple_action[0])

    def coords(self, r):
        return self.pos_roots[r] if self.pos_roots is not None else None

    def root_index(self, coords) -> int:
        key = tuple(coords)
        for k, v in enumerate(self.pos_roots or []):
            if tuple(v) == key:
                return k
        raise KeyError(f"{coords} is not a positive root")


def build_root_system(d: CoxeterDiagram) -> RootSystem:
    n = d.rank
    if d.type_tag.startswith("I"):
        return _dihedral_root_system(d)
    C = _reflection_matrix(d)
    bound = known_num_reflections(d.type_tag)
    zero = C[0][0] - C[0][0]
    simples = []
    for i in range(n):
        v = [zero] * n
        v[i] = zero + 1
        simples.append(tuple(v))
    roots = list(simples)
    index = {r: k for k, r in enumerate(roots)}
    queue = deque(range(n))
    while queue:
        k = queue.popleft()
        beta = roots[k]
        for i in range(n):
            c = sum((C[i][j] * beta[j] for j in range(n)), zero)
            if c == 0:
                continue
            new = list(beta)
            new[i] = new[i] - c
            new = tuple(new)
            if not _is_nonneg(new) or new in index:
                continue
            if len(roots) >= bound:
                raise NonFiniteType(f"root closure exceeded {bound} for {d.type_tag}")
            index[new] = len(roots)
            roots.append(new)
            queue.append(index[new])
    if len(roots) != bound:
        raise NonFiniteType(f"found {len(roots)} positive roots, expected {bound}")
    table = []
    for i in range(n):
        row = []
        for beta in roots:
            c = sum((C[i][j] * beta[j] for j in range(n)), zero)
            new = list(beta)
            new[i] = new[i] - c
            new = tuple(new)
            if new in index:
                row.append(index[new])
            else:
                row.append(~index[tuple(-x for x in new)])
        table.append(row)
    return RootSystem(d, roots, table, list(range(n)))


def _dihedral_root_system(d: CoxeterDiagram) -> RootSystem:
    """Root at angle k*pi/m for k in [0, 2m); k < m positive, k >= m is -beta_{k-m}."""
    m = d.bond[0][1]
    acts = [lambda k: (m - k) % (2 * m), lambda k: (m - 2 - k) % (2 * m)]
    table = []
    for f in acts:
        row = []
        for k in range(m):
            t = f(k)
            row.append(t if t < m else ~(t - m))
        table.append(row)
    simples = [0, m - 1]
    coords = None
    C = _reflection_matrix(d)
    if C is not None:
        # transport coordinates along the index action
        zero = C[0][0] - C[0][0]
        coords = [None] * m
        coords[0] = (zero + 1, zero)
        coords[m - 1] = (zero, zero + 1)
        queue = deque(simples)
        while queue:
            k = queue.popleft()
            for i in range(2):
                t = table[i][k]
                if t < 0 or coords[t] is not None:
                    continue
                beta = coords[k]
                c = C[i][0] * beta[0] + C[i][1] * beta[1]
                new = list(beta)
                new[i] = new[i] - c
                coords[t] = tuple(new)
                queue.append(t)
        for k in range(m):
            for i in range(2):
                beta = coords[k]
                c = C[i][0] * beta[0] + C[i][1] * beta[1]
                new = list(beta)
                new[i] = new[i] - c
                t = table[i][k]
                want = coords[t] if t >= 0 else tuple(-x for x in coords[~t])
                if tuple(new) != want:
                    raise AssertionError("dihedral coordinate model is inconsistent")
    return RootSystem(d, coords, table, simples, angle_index=list(range(m)))


# ---------------------------------------------------------------------------
# the group


def _act(row, x):
    """Apply a simple reflection (table row) to a signed root index."""
    return row[x] if x >= 0 else ~row[~x]


@dataclass(frozen=True)
class CoxeterElement:
    """A Coxeter element: a word using each simple once and its acyclic orientation."""

    word: tuple
    orientation: frozenset

    def __len__(self):
        return len(self.word)


class CoxeterGroup:
    """A finite Coxeter group. Elements are left-inversion bitsets (ints)."""

    def __init__(self, d: CoxeterDiagram | str, rank: int | None = None):
        if not isinstance(d, CoxeterDiagram):
            d = diagram(d, rank)
        self.diagram = d
        self.rank = d.rank
        self.roots = build_root_system(d)
        self.N = self.roots.num_roots
        self.table = self.roots.simple_action
        self.simple_bit = [1 << b for b in self.roots.beta_of_simple]
        self._perm = {0: tuple(range(self.N))}
        self._reflections = None
        self._w0 = None
        self.parabolic_cache = {}

    def __repr__(self):
        return f"CoxeterGroup({self.diagram.type_tag})"

    @property
    def type_tag(self):
        return self.diagram.type_tag

    identity = 0

    # root action ----------------------------------------------------------
    def perm(self, w: int) -> tuple:
        """Signed permutation of positive-root indices induced by w."""
        p = self._perm.get(w)
        if p is not None:
            return p
        # strip a left descent: w = s_i (s_i w)
        for i in range(self.rank):
            if w & self.simple_bit[i]:
                rest = self.left(i, w)
                row = self.table[i]
                p = tuple(_act(row, x) for x in self.perm(rest))
                self._perm[w] = p
                return p
        raise AssertionError("nonidentity element without a left descent")

    def apply_to_root(self, w: int, x: int) -> int:
        p = self.perm(w)
        return p[x] if x >= 0 else ~p[~x]

    def _apply_simple_to_set(self, i, bits):
        row = self.table[i]
        out = 0
        while bits:
            low = bits & -bits
            r = low.bit_length() - 1
            out |= 1 << row[r]
            bits ^= low
        return out

    # multiplication -------------------------------------------------------
    def left(self, i: int, w: int) -> int:
        """s_i * w."""
        b = self.simple_bit[i]
        if w & b:
            return self._apply_simple_to_set(i, w ^ b)
        return b | self._apply_simple_to_set(i, w)

    def right(self, w: int, i: int) -> int:
        """w * s_i."""
        x = self.perm(w)[self.roots.beta_of_simple[i]]
        if x >= 0:
            return w | (1 << x)
        return w & ~(1 << ~x)

    def apply_simple(self, w: int, i: int, side: str = "right") -> int:
        return self.right(w, i) if side == "right" else self.left(i, w)

    def from_word(self, word) -> int:
        w = 0
        for i in word:
            w = self.right(w, i)
        return w

    def multiply(self, u: int, v: int) -> int:
        for i in self.word(v):
            u = self.right(u, i)
        return u

    def inverse(self, w: int) -> int:
        out = 0
        for r, x in enumerate(self.perm(w)):
            if x < 0:
                out |= 1 << r
        return out

    # statistics -----------------------------------------------------------
    @staticmethod
    def length(w: int) -> int:
        return w.bit_count()

    def left_inversions(self, w: int) -> list:
        return [r for r in range(self.N) if w >> r & 1]

    def descents(self, w: int) -> set:
        """Right descents: s_i with l(w s_i) < l(w)."""
        p = self.perm(w)
        return {i for i, b in enumerate(self.roots.beta_of_simple) if p[b] < 0}

    def left_descents(self, w: int) -> set:
        return {i for i in range(self.rank) if w & self.simple_bit[i]}

    def word(self, w: int) -> list:
        """Reduced word, stripping the smallest right descent each time."""
        out = []
        while w:
            i = min(self.descents(w))
            out.append(i)
            w = self.right(w, i)
        out.reverse()
        return out

    def support(self, w: int) -> set:
        return set(self.word(w))

    def leq(self, u: int, v: int) -> bool:
        return u & ~v == 0

    def long_element(self, J=None) -> int:
        """Longest element of the parabolic subgroup W_J (all of W if J is None)."""
        if J is None:
            if self._w0 is None:
                self._w0 = (1 << self.N) - 1
            return self._w0
        J = set(J)
        w = 0
        grown = True
        while grown:
            grown = False
            for i in sorted(J):
                if i not in self.descents(w):
                    w = self.right(w, i)
                    grown = True
        return w

    def is_element(self, bits: int) -> bool:
        """True if ``bits`` is the inversion set of a group element."""
        w, word = bits, []
        while w:
            i = next((i for i in range(self.rank) if w & self.simple_bit[i]), None)
            if i is None:
                return False
            nw = self.left(i, w)
            if nw.bit_count() != w.bit_count() - 1:
                return False
            word.append(i)
            w = nw
        return self.from_word(word) == bits

    # reflections ----------------------------------------------------------
    def reflection(self, r: int) -> int:
        """The reflection t_beta for positive root index r, as an element."""
        if self._reflections is None:
            self._reflections = self._build_reflections()
        return self._reflections[r]

    def _build_reflections(self):
        refl = [None] * self.N
        for i, b in enumerate(self.roots.beta_of_simple):
            refl[b] = self.simple_bit[i]
        queue = deque(self.roots.beta_of_simple)
        while queue:
            k = queue.popleft()
            for i in range(self.rank):
                t = self.table[i][k]
                if t >= 0 and refl[t] is None:
                    # t_{s_i beta} = s_i t_beta s_i
                    refl[t] = self.right(self.left(i, refl[k]), i)
                    queue.append(t)
        return refl

    def reflection_index(self, t: int) -> int:
        for r in range(self.N):
            if self.reflection(r) == t:
                return r
        raise ValueError("not a reflection")

    # enumeration ----------------------------------------------------------
    def order(self) -> int:
        return known_order(self.type_tag)

    def elements(self, cap: int | None = None) -> list:
        """All elements by BFS on right multiplication, in nondecreasing length."""
        cap = default_cap() if cap is None else cap
        if self.order() > cap:
            raise GroupTooLarge(f"|{self.type_tag}| = {self.order()} exceeds cap {cap}")
        seen = {0}
        layer = [0]
        out = [0]
        while layer:
            nxt = []
            for w in layer:
                p = self.perm(w)
                for b in self.roots.beta_of_simple:
                    x = p[b]
                    if x >= 0:
                        u = w | (1 << x)
                        if u not in seen:
                            seen.add(u)
                            nxt.append(u)
            nxt.sort()
            out.extend(nxt)
            layer = nxt
        return out

    # Coxeter elements -----------------------------------------------------
    def coxeter_element(self, word) -> CoxeterElement:
        word = tuple(word)
        if sorted(word) != list(range(self.rank)):
            raise ValueError("a Coxeter element word uses every simple reflection exactly once")
        pos = {s: k for k, s in enumerate(word)}
        arcs = frozenset((i, j) if pos[i] < pos[j] else (j, i) for i, j in self.diagram.edges())
        return CoxeterElement(self._canonical_word(arcs), arcs)

    def _canonical_word(self, arcs):
        indeg = {i: 0 for i in range(self.rank)}
        for _, j in arcs:
            indeg[j] += 1
        out = []
        ready = sorted(i for i in indeg if indeg[i] == 0)
        while ready:
            i = ready.pop(0)
            out.append(i)
            for a, b in arcs:
                if a == i:
                    indeg[b] -= 1
                    if indeg[b] == 0:
                        ready.append(b)
            ready.sort()
        return tuple(out)

    def coxeter_elements(self) -> list:
        """All Coxeter elements, one per acyclic orientation of the Coxeter graph."""
        edges = self.diagram.edges()
        out = []
        for mask in range(1 << len(edges)):
            arcs = frozenset((i, j) if mask >> k & 1 else (j, i) for k, (i, j) in enumerate(edges))
            # the Coxeter graph is a tree, every orientation is acyclic
            out.append(CoxeterElement(self._canonical_word(arcs), arcs))
        return out

    def bipartite_coxeter_element(self) -> CoxeterElement:
        """Product of one colour class then the other (class of the first simple first)."""
        colour = {0: 0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in self.diagram.neighbours(i):
                if j not in colour:
                    colour[j] = 1 - colour[i]
                    queue.append(j)
        word = [i for i in range(self.rank) if colour[i] == 0] + \
               [i for i in range(self.rank) if colour[i] == 1]
        return self.coxeter_element(word)

    def parse_coxeter(self, text: str) -> CoxeterElement:
        labels = [t for t in re.split(r"[,\s]+", text.strip()) if t]
        return self.coxeter_element([self.diagram.index_of(t) for t in labels])

    def coxeter_number(self, c: CoxeterElement | None = None) -> int:
        if c is None:
            c = self.coxeter_elements()[0]
        ce = self.from_word(c.word)
        p = self.perm(ce)
        q = p
        h = 1
        while any(q[r] != r for r in range(self.N)):
            q = tuple(_act_perm(p, x) for x in q)
            h += 1
        return h

    def psi(self, i: int) -> int:
        """psi(s_i) = w0 s_i w0, read off from w0(alpha_i) = -alpha_psi(i)."""
        x = self.perm(self.long_element())[self.roots.beta_of_simple[i]]
        return self.roots.beta_of_simple.index(~x)


def _act_perm(p, x):
    return p[x] if x >= 0 else ~p[~x]


def root_table_csv(W: CoxeterGroup) -> str:
    lines = ["index," + ",".join(f"c{W.diagram.labels[i]}" for i in range(W.rank))]
    for r in range(W.N):
        co = W.roots.coords(r)
        if co is None:
            lines.append(f"{r}," + ",".join(["angle", str(W.roots.angle_index[r])]))
        else:
            lines.append(f"{r}," + ",".join(str(x) for x in co))
    return "\n".join(lines) + "\n"


def group(type_text: str, rank: int | None = None) -> CoxeterGroup:
    return CoxeterGroup(diagram(type_text, rank))
