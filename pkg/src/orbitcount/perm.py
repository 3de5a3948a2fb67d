"""Permutations on {0..n-1} and finite groups generated by them.

Composition convention, used everywhere in the package::

    compose(p, q)(i) == p(q(i))      # q is applied first
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_ORDER = 1_000_000


class PermutationError(ValueError):
    """Invalid permutation data (bad degree, duplicate or out-of-range point)."""


class CycleParseError(PermutationError):
    """Malformed cycle notation. ``position`` is the 0-based offset in the text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GroupOrderExceeded(RuntimeError):
    def __init__(self, max_order: int, partial: int):
        super().__init__(
            f"group closure exceeded max_order={max_order} "
            f"({partial} elements enumerated so far)"
        )
        self.max_order = max_order
        self.partial = partial


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise PermutationError("permutation degree must be >= 1")
        seen = [False] * n
        for i in images:
            if not 0 <= i < n:
                raise PermutationError(f"image {i} out of range for degree {n}")
            if seen[i]:
                raise PermutationError(f"image {i} repeated; not a bijection")
            seen[i] = True

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted by that point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return format_cycles(self)


def identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError(f"degree must be >= 1, got {n}")
    return Permutation(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[j] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(tuple(inv))


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_TOKEN = re.compile(r"[ \t]+|\d+|[()]|.", re.S)


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse 0-based cycle notation such as ``"(0 1 2)(3 4)"`` into a degree-``n`` permutation.

    ``"()"`` is the identity. Whitespace (spaces and tabs) may surround cycles
    and must separate points inside a cycle.
    """
    if n < 1:
        raise PermutationError(f"degree must be >= 1, got {n}")
    tokens = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
    tokens = [t for t in tokens if t[0].strip(" \t")] + [("", len(text))]
    images = list(range(n))
    seen: dict[int, int] = {}
    pos = 0

    def peek():
        return tokens[pos]

    if peek()[0] == "":
        raise CycleParseError("empty cycle notation", 0)
    if peek()[0] == "(" and tokens[pos + 1][0] == ")":
        if tokens[pos + 2][0] != "":
            raise CycleParseError("'()' must stand alone", tokens[pos + 2][1])
        return Permutation(tuple(images))

    while peek()[0] != "":
        tok, at = peek()
        if tok != "(":
            raise CycleParseError(f"expected '(' but found {tok!r}", at)
        pos += 1
        cycle = []
        while True:
            tok, at = peek()
            if tok.isdigit():
                point = int(tok)
                if point >= n:
                    raise CycleParseError(
                        f"point {point} out of range for degree {n}", at
                    )
                if point in seen:
                    raise CycleParseError(f"point {point} repeated", at)
                seen[point] = at
                cycle.append(point)
                pos += 1
            elif tok == ")":
                if not cycle:
                    raise CycleParseError("empty cycle", at)
                pos += 1
                break
            elif tok == "":
                raise CycleParseError("unterminated cycle", at)
            else:
                raise CycleParseError(f"unexpected {tok!r}", at)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return Permutation(tuple(images))


@dataclass(frozen=True)
class FiniteGroup:
    """A finite permutation group, stored as an explicit list of its elements.

    Elements are addressed by index; ``mul(i, j)`` is the index of
    ``compose(elements[i], elements[j])``.
    """

    degree: int
    elements: tuple[Permutation, ...]
    identity_index: int = 0
    generators: tuple[Permutation, ...] = ()
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {p.images: i for i, p in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise PermutationError("duplicate group elements")
        if any(p.degree != self.degree for p in self.elements):
            raise PermutationError("group elements have mixed degrees")
        if not self.elements[self.identity_index].is_identity():
            raise PermutationError("identity_index does not point at the identity")
        self._index.update(index)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> Permutation:
        return self.elements[i]

    def index(self, p: Permutation) -> int:
        try:
            return self._index[p.images]
        except KeyError:
            raise KeyError(f"{format_cycles(p)} is not in the group") from None

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self._index

    def mul(self, i: int, j: int) -> int:
        return self._index[compose(self.elements[i], self.elements[j]).images]

    def inv(self, i: int) -> int:
        inverses = self._cache.get("inv")
        if inverses is None:
            inverses = tuple(self._index[inverse(p).images] for p in self.elements)
            self._cache["inv"] = inverses
        return inverses[i]

    def mul_row(self, i: int) -> np.ndarray:
        """Indices of ``compose(elements[i], elements[j])`` for every ``j``."""
        lookup = self._cache.get("lookup")
        if lookup is None:
            arr = np.array([p.images for p in self.elements], dtype=np.int64)
            if self.degree ** self.degree < 2**63:
                keys = arr @ (self.degree ** np.arange(self.degree, dtype=np.int64))
                order = np.argsort(keys)
                lookup = (arr, keys[order], order)
            else:
                lookup = (arr, None, None)
            self._cache["lookup"] = lookup
        arr, sorted_keys, order = lookup
        if sorted_keys is None:
            return np.array([self.mul(i, j) for j in range(self.order)], dtype=np.int64)
        composed = arr[i][arr]
        keys = composed @ (self.degree ** np.arange(self.degree, dtype=np.int64))
        pos = np.minimum(np.searchsorted(sorted_keys, keys), len(sorted_keys) - 1)
        if (sorted_keys[pos] != keys).any():
            raise PermutationError("element set is not closed under composition")
        return order[pos]

    def cayley_table(self) -> np.ndarray:
        table = self._cache.get("cayley")
        if table is None:
            table = np.array([self.mul_row(i) for i in range(self.order)], dtype=np.int64)
            table.setflags(write=False)
            self._cache["cayley"] = table
        return table


def generate_group(
    generators: Sequence[Permutation],
    max_order: int = DEFAULT_MAX_ORDER,
    degree: int | None = None,
) -> FiniteGroup:
    """Close ``generators`` under composition by breadth-first search from the identity.

    New elements are discovered as ``compose(element, generator)`` with the
    generators tried in input order, so element indices are reproducible.
    ``degree`` is required when ``generators`` is empty.
    """
    gens = tuple(generators)
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if degree is None:
        if not gens:
            raise PermutationError("degree is required when there are no generators")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise PermutationError(f"generator {g} has degree {g.degree}, expected {degree}")

    e = identity(degree)
    elements = [e]
    seen = {e.images}
    queue = deque([e])
    while queue:
        p = queue.popleft()
        for s in gens:
            r = compose(p, s)
            if r.images in seen:
                continue
            if len(elements) >= max_order:
                raise GroupOrderExceeded(max_order, len(elements))
            seen.add(r.images)
            elements.append(r)
            queue.append(r)
    return FiniteGroup(degree, tuple(elements), 0, gens)


def perm(images: Iterable[int]) -> Permutation:
    """Shorthand constructor: ``perm([1, 2, 0])``."""
    return Permutation(tuple(images))
