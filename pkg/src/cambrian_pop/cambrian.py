"""Sortable elements, Cambrian lattices and their pop-stack operator."""
from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterElement, CoxeterGroup
from .lattice import FiniteLattice
from .weak import build_weak_lattice, pop_weak


class NotSortable(ValueError):
    pass


class MaxNotUnique(AssertionError):
    pass


@dataclass(frozen=True)
class SortingWord:
    letters: tuple
    blocks: tuple  # one tuple of letters per copy of c

    def is_nested(self) -> bool:
        return all(set(b) <= set(a) for a, b in zip(self.blocks, self.blocks[1:]))


def sorting_word(W: CoxeterGroup, c: CoxeterElement | tuple, w: int) -> SortingWord:
    """Leftmost reduced subword of c c c ... representing w."""
    word = c.word if isinstance(c, CoxeterElement) else tuple(c)
    rest = w
    blocks = []
    while rest:
        block = []
        for s in word:
            if rest & W.simple_bit[s]:
                rest = W.left(s, rest)
                block.append(s)
        blocks.append(tuple(block))
    return SortingWord(tuple(s for b in blocks for s in b), tuple(blocks))


def is_sortable(W: CoxeterGroup, c, w: int) -> bool:
    return sorting_word(W, c, w).is_nested()


def is_sortable_recursive(W: CoxeterGroup, c, w: int) -> bool:
    """The first-letter recursion: peel s if it is a left descent, else drop s
    from the parabolic subgroup."""
    word = tuple(c.word if isinstance(c, CoxeterElement) else c)
    allowed = set(word)
    while True:
        if w == 0:
            return True
        if not word:
            return False
        s = word[0]
        if w & W.simple_bit[s]:
            w = W.left(s, w)
            word = word[1:] + (s,)
        else:
            if s in W.support(w) or not W.support(w) <= allowed:
                return False
            word = word[1:]
            allowed.discard(s)


def sorting_positions(W: CoxeterGroup, c, w: int) -> tuple:
    """Positions in c c c ... (0-based) used by the c-sorting word of w."""
    word = c.word if isinstance(c, CoxeterElement) else tuple(c)
    rest, pos, out = w, 0, []
    while rest:
        s = word[pos % len(word)]
        if rest & W.simple_bit[s]:
            rest = W.left(s, rest)
            out.append(pos)
        pos += 1
    return tuple(out)


def sortable_elements(W: CoxeterGroup, c: CoxeterElement) -> list:
    """All c-sortable elements, by growing c-sorting words one letter at a time.

    Prefixes of a sortable element's sorting word are sorting words of sortable
    elements, so every sortable element is reached exactly once."""
    word = c.word
    n = len(word)
    found = [0]
    stack = [(0, ())]
    while stack:
        w, positions = stack.pop()
        last = positions[-1] if positions else -1
        copy = last // n if positions else 0
        prev_block = {word[p % n] for p in positions if p // n == copy - 1}
        this_block = {word[p % n] for p in positions if p // n == copy}
        for q in range(last + 1, (copy + 2) * n):
            s = word[q % n]
            qcopy = q // n
            if qcopy == copy and copy > 0 and s not in prev_block:
                continue
            if qcopy == copy + 1 and s not in this_block:
                continue
            u = W.right(w, s)
            if u.bit_count() < w.bit_count():
                continue
            new = positions + (q,)
            if sorting_positions(W, c, u) != new:
                continue
            found.append(u)
            stack.append((u, new))
    return sorted(found, key=lambda w: (w.bit_count(), w))


class Cambrian:
    """The c-Cambrian lattice of W together with the projection from Weak(W)."""

    def __init__(self, W: CoxeterGroup, c: CoxeterElement):
        self.W = W
        self.c = c
        self.sortables = sortable_elements(W, c)
        self.sortable_set = set(self.sortables)
        self._lattice = None
        self._weak = None
        self._pi = {}

    @property
    def lattice(self) -> FiniteLattice:
        if self._lattice is None:
            self._lattice = FiniteLattice.from_leq(self.sortables, lambda u, v: u & ~v == 0)
        return self._lattice

    @property
    def weak(self) -> FiniteLattice:
        if self._weak is None:
            self._weak = build_weak_lattice(self.W)
        return self._weak

    def __len__(self):
        return len(self.sortables)

    def check_sublattice(self) -> bool:
        """Meets and joins of sortables agree with those of the weak order."""
        L, Wk = self.lattice, self.weak
        for a in range(L.n):
            for b in range(a):
                x, y = Wk.index[L.elements[a]], Wk.index[L.elements[b]]
                if Wk.elements[Wk.meet(x, y)] != L.elements[L.meet(a, b)]:
                    return False
                if Wk.elements[Wk.join(x, y)] != L.elements[L.join(a, b)]:
                    return False
        return True

    # projections and pop --------------------------------------------------
    def pi_down(self, w: int) -> int:
        """Largest sortable element weakly below w."""
        if w in self._pi:
            return self._pi[w]
        below = [v for v in self.sortables if v & ~w == 0]
        top = max(below, key=int.bit_count)
        if any(v & ~top for v in below):
            raise MaxNotUnique("no unique maximal sortable element below w")
        self._pi[w] = top
        return top

    def pop(self, w: int) -> int:
        if w not in self.sortable_set:
            raise NotSortable("pop of the Cambrian lattice needs a sortable element")
        return self.pi_down(pop_weak(self.W, w))

    def orbit(self, w: int) -> list:
        out = [w]
        while out[-1]:
            out.append(self.pop(out[-1]))
        return out

    def image(self) -> set:
        return {self.pop(w) for w in self.sortables}

    def congruence_classes(self) -> dict:
        """Fibres of the projection, keyed by the sortable element each fibre maps to."""
        out: dict = {}
        for w in self.weak.elements:
            out.setdefault(self.pi_down(w), []).append(w)
        return out

    # the elements p_i -----------------------------------------------------
    def p_elements(self) -> list:
        """p_i = join of the sortables above s_i avoiding every other simple."""
        W = self.W
        out = []
        for i in range(W.rank):
            others = 0
            for j in range(W.rank):
                if j != i:
                    others |= W.simple_bit[j]
            theta = [x for x in self.sortables if x & W.simple_bit[i] and not x & others]
            top = max(theta, key=int.bit_count)
            if any(x & ~top for x in theta):
                raise MaxNotUnique(f"Theta_{i} has no unique maximum")
            out.append(top)
        return out

    def c_inverse_inversions(self) -> int:
        W = self.W
        return W.inverse(W.from_word(self.c.word))

    # image conditions -----------------------------------------------------
    def descents_commute(self, w: int) -> bool:
        d = sorted(self.W.descents(w))
        bond = self.W.diagram.bond
        return all(bond[a][b] == 2 for k, a in enumerate(d) for b in d[k + 1:])

    def descent_rule(self, w: int) -> bool:
        """Descents commute and no inversion is shared with c^{-1}."""
        return self.descents_commute(w) and not w & self.c_inverse_inversions()

    def interval_rule(self, w: int, p=None) -> bool:
        """[pop(w), w] is Boolean in Camb_c and no p_i lies below w."""
        p = self.p_elements() if p is None else p
        L = self.lattice
        x = L.index[w]
        if not L.interval(L.index[self.pop(w)], x).is_boolean():
            return False
        return all(pi & ~w for pi in p)

    def image_report(self) -> dict:
        img = self.image()
        p = self.p_elements()
        by_descents = {w for w in self.sortables if self.descent_rule(w)}
        by_intervals = {w for w in self.sortables if self.interval_rule(w, p)}
        return {"image": img, "descent_rule": by_descents, "interval_rule": by_intervals,
                "ok": img == by_descents == by_intervals}

    # interval equivalences --------------------------------------------------
    def six_conditions(self, w: int) -> tuple:
        W, Wk, L = self.W, self.weak, self.lattice
        pw = pop_weak(W, w)
        pc = self.pop(w)
        weak_iv = Wk.interval(Wk.index[pw], Wk.index[w])
        camb_iv = L.interval(L.index[pc], L.index[w])
        weak_set = {Wk.elements[i] for i in weak_iv.elements}
        camb_set = {L.elements[i] for i in camb_iv.elements}
        return (self.descents_commute(w),
                weak_iv.is_distributive(), weak_iv.is_boolean(),
                camb_iv.is_distributive(), camb_iv.is_boolean(),
                weak_set == camb_set)

    def dynamical_identity(self, w: int, t: int) -> bool:
        """pop_weak^t(pop_camb(w)) == pop_camb^{t+1}(w)."""
        left = self.pop(w)
        for _ in range(t):
            left = pop_weak(self.W, left)
        right = w
        for _ in range(t + 1):
            right = self.pop(right)
        return left == right

    # spine ----------------------------------------------------------------
    def spine(self) -> list:
        """Elements lying on some maximum-length chain of Camb_c."""
        L = self.lattice
        up = L.rank_function()
        down = [0] * L.n
        for x in range(L.n - 1, -1, -1):
            for y in L.upper_covers[x]:
                down[x] = max(down[x], down[y] + 1)
        longest = up[L.top]
        return [L.elements[x] for x in range(L.n) if up[x] + down[x] == longest]

    def spine_lattice(self) -> FiniteLattice:
        return FiniteLattice.from_leq(self.spine(), lambda u, v: u & ~v == 0)
