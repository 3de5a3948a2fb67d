"""Standard small groups and the test corpus of actions built from them."""
from __future__ import annotations

import random
from typing import Iterator

import numpy as np

from .action import (
    ActionSpace,
    GroupAction,
    coloring_action,
    natural_action,
    table_action,
)
from .perm import FiniteGroup, Permutation, generate_group, parse_cycles, perm


def trivial_group(n: int) -> FiniteGroup:
    return generate_group([], degree=n)


def cyclic_group(n: int) -> FiniteGroup:
    return generate_group([perm([(i + 1) % n for i in range(n)])])


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of a regular n-gon with vertices 0..n-1 (order 2n for n >= 3)."""
    rotation = perm([(i + 1) % n for i in range(n)])
    reflection = perm([(-i) % n for i in range(n)])
    return generate_group([rotation, reflection])


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return trivial_group(1)
    return generate_group([perm([1, 0] + list(range(2, n))), perm([(i + 1) % n for i in range(n)])])


# faces: 0 up, 1 down, 2 front, 3 back, 4 left, 5 right
CUBE_FACE_GENERATORS = ("(2 5 3 4)", "(0 5 1 4)")


def cube_rotation_group() -> FiniteGroup:
    return generate_group([parse_cycles(c, 6) for c in CUBE_FACE_GENERATORS])


def regular_action(group: FiniteGroup) -> GroupAction:
    """Left multiplication of ``group`` on its own elements, given as a table."""
    rows = [[group.mul(g, h) for h in range(group.order)] for g in range(group.order)]
    labels = tuple(str(p) for p in group)
    return table_action(group, ActionSpace(group.order, labels), rows)


def corpus() -> Iterator[tuple[str, GroupAction]]:
    for n in range(1, 7):
        g = trivial_group(n)
        yield f"trivial({n}) natural", natural_action(g)
        yield f"trivial({n}) colorings c=2", coloring_action(g, 2)
    for n in range(1, 9):
        g = cyclic_group(n)
        yield f"C{n} natural", natural_action(g)
        for c in (1, 2, 3):
            yield f"C{n} colorings c={c}", coloring_action(g, c)
    for n in range(3, 9):
        g = dihedral_group(n)
        yield f"D{n} natural", natural_action(g)
        for c in (1, 2, 3):
            yield f"D{n} colorings c={c}", coloring_action(g, c)
    yield "S3 natural", natural_action(symmetric_group(3))
    yield "S4 natural", natural_action(symmetric_group(4))
    yield "S3 regular (table)", regular_action(symmetric_group(3))
    cube = cube_rotation_group()
    yield "cube faces natural", natural_action(cube)
    for c in (2, 3):
        yield f"cube faces colorings c={c}", coloring_action(cube, c)


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return perm(images)


def random_action(rng: random.Random) -> tuple[str, GroupAction]:
    """1-3 random generators of degree <= 6 with a random action type."""
    n = rng.randint(1, 6)
    gens = [random_permutation(rng, n) for _ in range(rng.randint(1, 3))]
    group = generate_group(gens)
    kind = rng.choice(["natural", "colorings", "table"])
    name = f"<{', '.join(str(g) for g in gens)}> deg {n}"
    if kind == "natural":
        return f"{name} natural", natural_action(group)
    if kind == "colorings":
        c = rng.randint(1, 3)
        return f"{name} colorings c={c}", coloring_action(group, c)
    # natural action relabelled through a random bijection, handed over as a table
    sigma = np.array(random_permutation(rng, n).images)
    sigma_inv = np.argsort(sigma)
    nat = np.array([p.images for p in group])
    rows = sigma[nat[:, sigma_inv]]
    return f"{name} table", table_action(group, ActionSpace(n), rows.tolist())
