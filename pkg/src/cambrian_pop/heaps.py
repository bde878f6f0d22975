"""Heaps of words, the heap H_c of the c-sorting word of w0, and the element z_c
whose pop-stack orbit has the maximum possible size."""
from __future__ import annotations

from dataclasses import dataclass, field

from .cambrian import Cambrian, sorting_positions, sorting_word
from .coxeter import CoxeterElement, CoxeterGroup


def _commute(W: CoxeterGroup, s: int, t: int) -> bool:
    return s != t and W.diagram.bond[s][t] == 2


@dataclass
class Heap:
    """Letters in word order with their heap order; ``below[k]`` is the bitset
    of letters weakly below letter k."""

    letters: list
    below: list
    rank_of: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.letters)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.below[b] >> a & 1)

    def covers(self) -> list:
        out = []
        for b in range(len(self.letters)):
            strict = self.below[b] & ~(1 << b)
            for a in range(len(self.letters)):
                if strict >> a & 1:
                    between = strict & ~self.below[a]
                    if not any(between >> x & 1 and self.below[x] >> a & 1 for x in range(len(self.letters))):
                        out.append((a, b))
        return out

    def relations(self) -> set:
        """Order relations as pairs of letter labels."""
        return {(self.letters[a], self.letters[b])
                for b in range(len(self.letters)) for a in range(len(self.letters))
                if a != b and self.leq(a, b)}

    def order_ideals(self) -> list:
        """All order ideals as bitsets over letter positions."""
        n = len(self.letters)
        strict = [self.below[k] & ~(1 << k) for k in range(n)]
        out = []

        def grow(k, chosen):
            if k == n:
                out.append(chosen)
                return
            grow(k + 1, chosen)
            if strict[k] & ~chosen == 0:
                grow(k + 1, chosen | 1 << k)

        # word order is a linear extension, so lower letters are decided first
        grow(0, 0)
        return out


def heap_of_word(W: CoxeterGroup, word) -> Heap:
    """Letters are labelled (simple, occurrence number starting at 1)."""
    word = list(word)
    seen: dict = {}
    letters = []
    below = []
    for k, s in enumerate(word):
        seen[s] = seen.get(s, 0) + 1
        letters.append((s, seen[s]))
        b = 1 << k
        for a in range(k):
            if not _commute(W, word[a], s):
                b |= below[a]
        below.append(b)
    return Heap(letters, below)


def commutation_equivalent(W: CoxeterGroup, w1, w2) -> bool:
    """Same letters, and the same subsequence on every non-commuting pair."""
    w1, w2 = list(w1), list(w2)
    if sorted(w1) != sorted(w2):
        return False
    used = sorted(set(w1))
    for i, s in enumerate(used):
        for t in used[i:]:
            if s == t or not _commute(W, s, t):
                if [x for x in w1 if x in (s, t)] != [x for x in w2 if x in (s, t)]:
                    return False
    return True


def zeta(W: CoxeterGroup, word) -> int:
    return W.from_word(word)


def simple_ranks(W: CoxeterGroup, c: CoxeterElement) -> dict:
    """Rank function on Heap(c) with minimum value 1."""
    pos = {s: k for k, s in enumerate(c.word)}
    rank = {c.word[0]: 0}
    stack = [c.word[0]]
    while stack:
        i = stack.pop()
        for j in W.diagram.neighbours(i):
            if j not in rank:
                rank[j] = rank[i] + 1 if pos[i] < pos[j] else rank[i] - 1
                stack.append(j)
    low = min(rank.values())
    return {s: r - low + 1 for s, r in rank.items()}


class HeapData:
    """H_c inside Heap(c^h), its ranks, the elements v_j and z_c."""

    def __init__(self, W: CoxeterGroup, c: CoxeterElement, word=None):
        self.W = W
        self.c = c
        self.word = tuple(word) if word is not None else c.word
        self.h = W.coxeter_number(c)
        self.rank_simple = simple_ranks(W, c)
        self.full_word = self.word * self.h
        self.full = heap_of_word(W, self.full_word)
        self.full.rank_of = {k: self.rank_simple[s] + 2 * j - 2
                             for k, (s, j) in enumerate(self.full.letters)}
        self.w0 = W.long_element()
        self.sort = sorting_word(W, self.word, self.w0)
        self.positions = sorting_positions(W, self.word, self.w0)
        self.ideal = 0
        for p in self.positions:
            self.ideal |= 1 << p

    def rank(self, k: int) -> int:
        return self.full.rank_of[k]

    def letters_in(self, bits: int) -> list:
        return [k for k in range(len(self.full_word)) if bits >> k & 1]

    def zeta_of(self, bits: int) -> int:
        return self.W.from_word([self.full_word[k] for k in self.letters_in(bits)])

    def level(self, k: int) -> int:
        """Letters of H_c with rank exactly k."""
        return sum(1 << p for p in self.positions if self.rank(p) == k)

    def up_to(self, k: int) -> int:
        return sum(1 << p for p in self.positions if self.rank(p) <= k)

    def Z(self, bits: int) -> set:
        return {self.full_word[k] for k in self.letters_in(bits)}

    def v(self, j: int) -> int:
        return self.zeta_of(self.up_to(j))

    def z_c(self) -> int:
        return self.v(self.h - 1)

    def z_c_word(self) -> list:
        return [self.full_word[k] for k in self.letters_in(self.up_to(self.h - 1))]

    # structural checks ---------------------------------------------------------
    def is_order_ideal(self) -> bool:
        return all(self.full.below[p] & ~self.ideal == 0 for p in self.positions)

    def complement_matches_psi(self) -> bool:
        """sort_c(w0) psi(sort_c(w0)) is commutation equivalent to c^h."""
        W = self.W
        psi_word = [W.psi(s) for s in self.sort.letters]
        return commutation_equivalent(W, list(self.sort.letters) + psi_word, self.full_word)

    def psi_letter_map(self) -> dict:
        """Letter position in H_c -> position of its psi-image in the complement."""
        W = self.W
        count_in_sort: dict = {}
        for s in self.sort.letters:
            count_in_sort[s] = count_in_sort.get(s, 0) + 1
        occ_pos = {letter: k for k, letter in enumerate(self.full.letters)}
        seen: dict = {}
        out = {}
        for p in self.positions:
            t = W.psi(self.full_word[p])
            seen[t] = seen.get(t, 0) + 1
            out[p] = occ_pos[(t, count_in_sort.get(t, 0) + seen[t])]
        return out

    def psi_is_isomorphism(self) -> bool:
        m = self.psi_letter_map()
        comp = set(range(len(self.full_word))) - set(self.positions)
        if set(m.values()) != comp:
            return False
        return all(self.full.leq(a, b) == self.full.leq(m[a], m[b])
                   for a in self.positions for b in self.positions)

    def complement_ranks_at_least(self) -> int:
        comp = [k for k in range(len(self.full_word)) if not self.ideal >> k & 1]
        return min((self.rank(k) for k in comp), default=10**9)

    def covers_raise_rank(self) -> bool:
        return all(self.rank(b) == self.rank(a) + 1 for a, b in self.full.covers())

    # bipartition and u_k --------------------------------------------------------
    def bipartition(self) -> tuple:
        X1 = {s for s, r in self.rank_simple.items() if r % 2 == 1}
        X2 = {s for s, r in self.rank_simple.items() if r % 2 == 0}
        return X1, X2

    def u_word(self, k: int) -> list:
        X1, X2 = self.bipartition()
        c1, c2 = sorted(X1), sorted(X2)
        out = []
        for m in range(1, k + 1):
            out += c1 if m % 2 else c2
        return out

    def epsilon_set(self, k: int) -> set:
        X1, X2 = self.bipartition()
        return X1 if k % 2 else X2

    def u_descents_ok(self) -> bool:
        W = self.W
        return all(W.descents(W.from_word(self.u_word(k))) == self.epsilon_set(k)
                   for k in range(1, self.h))

    def bipartite_sort_is_u_h(self) -> bool:
        X1, X2 = self.bipartition()
        word = tuple(sorted(X1)) + tuple(sorted(X2))
        return list(sorting_word(self.W, word, self.w0).letters) == self.u_word(self.h)

    def top_level_descents(self) -> bool:
        return self.Z(self.level(self.h - 1)) == self.epsilon_set(self.h - 1)

    def level_descents(self) -> bool:
        return all(self.Z(self.level(k)) == self.W.descents(self.v(k)) for k in range(1, self.h))

    # orbit and spine ----------------------------------------------------------------
    def expected_orbit(self) -> list:
        return [self.v(j) for j in range(self.h - 1, -1, -1)]

    def ideal_elements(self) -> set:
        sub = Heap([self.full.letters[p] for p in self.positions],
                   [self._restrict(self.full.below[p]) for p in self.positions])
        out = set()
        for bits in sub.order_ideals():
            chosen = [self.positions[k] for k in range(len(self.positions)) if bits >> k & 1]
            word = [self.full_word[p] for p in chosen]
            w = self.W.from_word(word)
            if w.bit_count() != len(word):
                raise AssertionError("ideal word is not reduced")
            out.add(w)
        return out

    def _restrict(self, bits: int) -> int:
        out = 0
        for k, p in enumerate(self.positions):
            if bits >> p & 1:
                out |= 1 << k
        return out

    def beta(self) -> list:
        """Root index of s_{i1} ... s_{i(k-1)}(alpha_ik) for each letter of sort_c(w0)."""
        W = self.W
        out = []
        prefix = 0
        for s in self.sort.letters:
            r = W.apply_to_root(prefix, W.roots.beta_of_simple[s])
            out.append(r)
            prefix = W.right(prefix, s)
        return out

    def ar_quiver_dot(self) -> str:
        W = self.W
        sub = heap_of_word(W, self.sort.letters)
        betas = self.beta()
        lines = ["digraph ARquiver {", "  rankdir=LR;"]
        for k, (s, j) in enumerate(sub.letters):
            co = W.roots.coords(betas[k])
            dim = "(" + ",".join(str(x) for x in co) + ")" if co is not None else f"root {betas[k]}"
            style = ", shape=box" if j == 1 else ""
            lines.append(f'  n{k} [label="{W.diagram.label(s)}^({j}) {dim}"{style}];')
        for a, b in sub.covers():
            lines.append(f"  n{a} -> n{b};")
        by_rank: dict = {}
        for k, p in enumerate(self.positions):
            by_rank.setdefault(self.rank(p), []).append(k)
        for r in sorted(by_rank):
            lines.append("  { rank=same; " + " ".join(f"n{k};" for k in by_rank[r]) + " }")
        lines.append("}")
        return "\n".join(lines) + "\n"


def other_reduced_word(W: CoxeterGroup, c: CoxeterElement) -> tuple:
    """Topological sort of the orientation with largest-index tie-break."""
    indeg = {i: 0 for i in range(W.rank)}
    for _, j in c.orientation:
        indeg[j] += 1
    out = []
    ready = sorted(i for i in indeg if indeg[i] == 0)
    while ready:
        i = ready.pop()
        out.append(i)
        for a, b in c.orientation:
            if a == i:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
        ready.sort()
    return tuple(out)


def verify_max_orbit(W: CoxeterGroup, c: CoxeterElement, camb: Cambrian | None = None) -> dict:
    """Every check around z_c for one Coxeter element."""
    camb = camb or Cambrian(W, c)
    H = HeapData(W, c)
    orbit = camb.orbit(H.z_c())
    spine = set(camb.spine())
    spine_lat = camb.spine_lattice()
    x = spine_lat.bottom
    for _ in range(H.h - 1):
        x = spine_lat.pop_up(x)
    H2 = HeapData(W, c, other_reduced_word(W, c))
    return {
        "h": H.h,
        "orbit_size": len(orbit),
        "orbit_is_v": orbit == H.expected_orbit(),
        "z_sortable": H.z_c() in camb.sortable_set,
        "ideal": H.is_order_ideal(),
        "psi_complement": H.complement_matches_psi(),
        "psi_iso": H.psi_is_isomorphism(),
        "complement_rank_ok": H.complement_ranks_at_least() >= H.h + 1,
        # in rank 1 the two copies of s1 form a cover of rank gap 2
        "ranked": H.covers_raise_rank() if W.rank > 1 else None,
        "top_level_descents": H.top_level_descents(),
        "level_descents": H.level_descents(),
        "u_descents": H.u_descents_ok(),
        "bipartite_sort": H.bipartite_sort_is_u_h(),
        "spine_is_ideals": spine == H.ideal_elements(),
        "spine_distributive": spine_lat.is_distributive(),
        "z_from_spine": spine_lat.elements[x] == H.z_c(),
        "word_independent": H2.z_c() == H.z_c() and H2.ideal_elements() == H.ideal_elements(),
    }

