"""Brute-force reference computations, written without the package's fast paths.

Everything here works on plain tuples and Fractions so that a bug in the
numpy-backed implementation cannot hide in a shared helper.
"""
from fractions import Fraction
from itertools import product


def compose_t(p, q):
    return tuple(p[i] for i in q)


def inverse_t(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def closure(gens, n):
    """Smallest set containing identity and gens closed under all pairwise products."""
    elems = {tuple(range(n))} | {tuple(g) for g in gens}
    while True:
        new = {compose_t(a, b) for a in elems for b in elems} - elems
        if not new:
            return elems
        elems |= new


def colorings(n, c):
    """All colorings as digit tuples, indexed by sum(f[i] * c**i)."""
    out = []
    for idx in range(c**n):
        f, v = [], idx
        for _ in range(n):
            f.append(v % c)
            v //= c
        out.append(tuple(f))
    return out


def act_coloring(g, f):
    ginv = inverse_t(g)
    return tuple(f[ginv[i]] for i in range(len(f)))


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def orbits_by_union_find(points, gens, act):
    """Orbits from generator moves only; never enumerates the group."""
    uf = UnionFind(points)
    for g in gens:
        for x in points:
            uf.union(x, act(g, x))
    groups = {}
    for x in points:
        groups.setdefault(uf.find(x), []).append(x)
    return sorted(sorted(v) for v in groups.values())


def coloring_orbits(gens, n, c):
    cols = colorings(n, c)
    index = {f: i for i, f in enumerate(cols)}
    return orbits_by_union_find(
        list(range(len(cols))), gens, lambda g, x: index[act_coloring(g, cols[x])]
    )


def coloring_fix_counts(elements, n, c):
    cols = colorings(n, c)
    return [sum(1 for f in cols if act_coloring(g, f) == f) for g in elements]


def triple_experiment(elements, points, act):
    """Exact law of (g, orbit, y) by enumerating every triple.

    Returns ``{(g, y): probability}`` after summing out the orbit coordinate.
    """
    orbits = orbits_by_union_find(points, elements, act)
    pg = Fraction(1, len(elements))
    po = Fraction(1, len(orbits))
    law = {}
    for g, orb in product(elements, orbits):
        for y in orb:
            key = (g, y)
            law[key] = law.get(key, Fraction(0)) + pg * po * Fraction(1, len(orb))
    return law, orbits
