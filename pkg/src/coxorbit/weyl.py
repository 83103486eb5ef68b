"""Orbits, chambers, stabilisers and lengths for standard parabolic subgroups.

``J`` is always a collection of 0-based simple-root indices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import catalog
from .linalg import inverse
from .rootsystem import RootSystem, Vector, add, scale, unit, vec_key
from .scalar import sign


@dataclass(frozen=True)
class GroupElt:
    """Linear map given by the images w(alpha_i) of the simple roots."""

    images: tuple[Vector, ...]
    word: tuple[int, ...] | None = field(default=None, compare=False)

    @classmethod
    def identity(cls, s: RootSystem) -> "GroupElt":
        return cls(tuple(unit(s.rank, i, s.golden) for i in range(s.rank)), ())

    @classmethod
    def from_word(cls, s: RootSystem, word: Sequence[int]) -> "GroupElt":
        """The product s_{word[0]} s_{word[1]} ... (rightmost factor acts first)."""
        w = cls.identity(s)
        for j in reversed(word):
            w = w.left_mul_simple(s, j)
        return cls(w.images, tuple(word))

    def apply(self, v: Sequence) -> Vector:
        out = None
        for c, img in zip(v, self.images):
            if c == 0:
                continue
            term = scale(c, img)
            out = term if out is None else add(out, term)
        if out is None:
            return tuple(0 * x for x in v)
        return out

    def compose(self, other: "GroupElt") -> "GroupElt":
        """self o other."""
        word = None if self.word is None or other.word is None else self.word + other.word
        return GroupElt(tuple(self.apply(img) for img in other.images), word)

    def left_mul_simple(self, s: RootSystem, j: int) -> "GroupElt":
        word = None if self.word is None else (j,) + self.word
        return GroupElt(tuple(s.reflect_simple(j, img) for img in self.images), word)

    def inverse(self) -> "GroupElt":
        n = len(self.images)
        cols = [[self.images[i][r] for i in range(n)] for r in range(n)]
        inv = inverse(cols)
        word = None if self.word is None else tuple(reversed(self.word))
        return GroupElt(tuple(tuple(inv[r][i] for r in range(n)) for i in range(n)), word)

    def preserves_form(self, s: RootSystem) -> bool:
        n = s.rank
        return all(
            s.pair(self.images[i], self.images[j]) == s.gram[i][j] for i in range(n) for j in range(i, n)
        )


def orbit(s: RootSystem, J: Iterable[int], v: Sequence) -> tuple[Vector, ...]:
    """W_J-orbit of v by breadth-first closure, in canonical order."""
    J = sorted(set(J))
    v = tuple(v)
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for j in J:
            w = s.reflect_simple(j, u)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return tuple(sorted(seen, key=vec_key))


def in_chamber(s: RootSystem, J: Iterable[int], v: Sequence) -> bool:
    """<v, alpha_j> >= 0 for every j in J."""
    return all(sign(s.pair_simple(v, j)) >= 0 for j in J)


def chamber_rep(s: RootSystem, J: Iterable[int], v: Sequence) -> tuple[Vector, GroupElt]:
    """The point of W_J v in the closed chamber of W_J, and w with w(v) = that point.

    Repeatedly reflects in the smallest j with <v, alpha_j> < 0.
    """
    J = sorted(set(J))
    v = tuple(v)
    w = GroupElt.identity(s)
    while True:
        bad = next((j for j in J if sign(s.pair_simple(v, j)) < 0), None)
        if bad is None:
            return v, w
        v = s.reflect_simple(bad, v)
        w = w.left_mul_simple(s, bad)


def stabilizer_datum(s: RootSystem, v: Sequence) -> frozenset:
    """I with stab_W(v) = W_I, for v in the fundamental chamber."""
    S = range(s.rank)
    if not in_chamber(s, S, v):
        raise ValueError("vector is not in the fundamental chamber")
    v = tuple(v)
    by_pairing = frozenset(j for j in S if s.pair_simple(v, j) == 0)
    by_fixing = frozenset(j for j in S if s.reflect_simple(j, v) == v)
    if by_pairing != by_fixing:
        raise AssertionError("stabiliser computations disagree")
    return by_pairing


def is_irreducible(s: RootSystem) -> bool:
    return catalog.is_connected(s.coxeter_graph)


def dominant_roots(s: RootSystem) -> tuple[Vector, ...]:
    """Roots in the closed fundamental chamber of an irreducible system."""
    if not is_irreducible(s):
        raise ValueError(f"{s.label} is reducible")
    return tuple(r for k, r in enumerate(s.roots) if min(s.simple_pair_signs[k]) >= 0)


def length(s: RootSystem, w: GroupElt) -> int:
    """Number of positive roots sent to negative roots."""
    if not w.preserves_form(s):
        raise ValueError("element does not preserve the form")
    count = 0
    for k in s.positive:
        img = w.apply(s.roots[k])
        idx = s.index.get(img)
        if idx is None:
            raise ValueError("element does not permute the roots")
        if idx not in s.positive:
            count += 1
    return count


# -- index-level machinery used by the exhaustive sweeps ----------------------


def parabolic_orbit_ids(s: RootSystem, J: Iterable[int]) -> list[int]:
    """W_J-orbit id of every root, via the simple-reflection permutations."""
    perms = [s.simple_perm[j] for j in sorted(set(J))]
    ids = [-1] * len(s.roots)
    nxt = 0
    for start in range(len(s.roots)):
        if ids[start] >= 0:
            continue
        ids[start] = nxt
        stack = [start]
        while stack:
            k = stack.pop()
            for p in perms:
                t = p[k]
                if ids[t] < 0:
                    ids[t] = nxt
                    stack.append(t)
        nxt += 1
    return ids


def index_orbit(gens: Sequence[Sequence[int]], start: int) -> frozenset:
    """Orbit of an index under a list of permutations."""
    seen = {start}
    stack = [start]
    while stack:
        k = stack.pop()
        for p in gens:
            t = p[k]
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def enumerate_group(s: RootSystem, limit: int = 10 ** 6) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All elements of W as (root permutation, reduced word), in BFS order.

    Permutation ``p`` has ``p[k]`` = index of w(root_k).  Elements are reached by
    right multiplication by simple reflections, so the BFS depth is the length.
    """
    n = len(s.roots)
    ident = tuple(range(n))
    seen = {ident: ()}
    out = [(ident, ())]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            word = seen[p]
            for j, sj in enumerate(s.simple_perm):
                q = tuple(p[t] for t in sj)
                if q not in seen:
                    seen[q] = word + (j,)
                    out.append((q, word + (j,)))
                    nxt.append(q)
                    if len(out) > limit:
                        raise ValueError(f"group of {s.label} exceeds {limit} elements")
        frontier = nxt
    return out


def perm_length(s: RootSystem, p: Sequence[int]) -> int:
    pos = s.positive
    return sum(1 for k in pos if p[k] not in pos)


def elt_from_perm(s: RootSystem, p: Sequence[int], word: Sequence[int] | None = None) -> GroupElt:
    return GroupElt(tuple(s.roots[p[k]] for k in s.simple_index), None if word is None else tuple(word))
