"""Finite group actions stored as explicit tables.

An action of a :class:`~orbitcount.perm.FiniteGroup` ``G`` on ``X = {0..m-1}``
is held as an integer array ``table`` of shape ``(|G|, m)`` with
``table[g, x] == act(g, x)``. Every constructor validates the action axioms
before returning, so downstream code may rely on them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .perm import FiniteGroup, format_cycles

DEFAULT_SPACE_CAP = 1_000_000


class InvalidActionError(ValueError):
    """The table does not define a group action. ``witness`` pins the failure."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


class SpaceCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class ActionSpace:
    size: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"action space size must be >= 1, got {self.size}")
        labels = tuple(self.labels) or tuple(str(i) for i in range(self.size))
        if len(labels) != self.size:
            raise ValueError(f"{len(labels)} labels given for {self.size} points")
        if len(set(labels)) != len(labels):
            raise ValueError("action space labels must be distinct")
        object.__setattr__(self, "labels", labels)


@dataclass(frozen=True)
class OrbitPartition:
    orbit_count: int
    orbit_of: tuple[int, ...]
    orbit_members: tuple[tuple[int, ...], ...]

    def sizes(self) -> list[int]:
        return [len(o) for o in self.orbit_members]


@dataclass(frozen=True)
class FixSet:
    element: int
    points: frozenset[int]

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True, eq=False)
class GroupAction:
    group: FiniteGroup
    space: ActionSpace
    table: np.ndarray
    kind: str = "table"
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    @property
    def size(self) -> int:
        return self.space.size

    def act(self, g: int, x: int) -> int:
        return int(self.table[g, x])

    def check_point(self, x: int) -> None:
        if not 0 <= x < self.space.size:
            raise IndexError(f"point {x} out of range for |X| = {self.space.size}")

    def check_element(self, g: int) -> None:
        if not 0 <= g < self.group.order:
            raise IndexError(f"element index {g} out of range for |G| = {self.group.order}")

    def describe_element(self, g: int) -> str:
        return format_cycles(self.group[g])


def _freeze(table: np.ndarray) -> np.ndarray:
    table = np.ascontiguousarray(table, dtype=np.int64)
    table.setflags(write=False)
    return table


def _validate(group: FiniteGroup, table: np.ndarray, exhaustive: bool) -> None:
    n_elems, m = table.shape
    if n_elems != group.order:
        raise InvalidActionError(
            f"table has {n_elems} rows but |G| = {group.order}", {"rows": n_elems}
        )
    bad = np.argwhere((table < 0) | (table >= m))
    if len(bad):
        g, x = map(int, bad[0])
        raise InvalidActionError(
            f"act(g={g}, x={x}) = {int(table[g, x])} is not a point of X",
            {"g": g, "x": x},
        )

    e = group.identity_index
    moved = np.nonzero(table[e] != np.arange(m))[0]
    if len(moved):
        x = int(moved[0])
        raise InvalidActionError(
            f"identity axiom fails: act(e, {x}) = {int(table[e, x])}", {"x": x}
        )

    for g in range(n_elems):
        counts = np.bincount(table[g], minlength=m)
        if (counts != 1).any():
            hit = int(np.argmax(counts > 1))
            raise InvalidActionError(
                f"row of element {g} ({format_cycles(group[g])}) is not a bijection: "
                f"point {hit} is hit {int(counts[hit])} times",
                {"g": g, "point": hit},
            )

    # With exhaustive=False only right factors from the generator set are
    # checked; by induction over the BFS words this implies the full axiom.
    if exhaustive or not group.generators:
        right = range(n_elems)
    else:
        right = [group.index(s) for s in group.generators]
    right = np.fromiter(right, dtype=np.int64)
    if len(right) == 0:
        return
    for g in range(n_elems):
        gh = group.mul_row(g)[right]
        lhs = table[gh]                   # act(gh, x)
        rhs = table[g][table[right]]      # act(g, act(h, x))
        diff = np.argwhere(lhs != rhs)
        if len(diff):
            i, x = map(int, diff[0])
            h = int(right[i])
            raise InvalidActionError(
                f"compatibility fails: act(g*h, x) != act(g, act(h, x)) "
                f"for g={g} ({format_cycles(group[g])}), h={h} "
                f"({format_cycles(group[h])}), x={x}",
                {"g": g, "h": h, "x": x},
            )


def natural_action(group: FiniteGroup) -> GroupAction:
    table = np.array([p.images for p in group], dtype=np.int64)
    _validate(group, table, exhaustive=False)
    return GroupAction(group, ActionSpace(group.degree), _freeze(table), "natural")


def coloring_labels(colors: int, degree: int) -> tuple[str, ...]:
    digits = _coloring_digits(colors, degree)
    sep = "" if colors <= 10 else "-"
    return tuple(sep.join(map(str, row)) for row in digits)


def _coloring_digits(colors: int, degree: int) -> np.ndarray:
    m = colors**degree
    powers = colors ** np.arange(degree, dtype=np.int64)
    return (np.arange(m, dtype=np.int64)[:, None] // powers) % colors


def coloring_action(
    group: FiniteGroup, colors: int, space_cap: int = DEFAULT_SPACE_CAP
) -> GroupAction:
    """Induced action on colorings ``f: {0..n-1} -> {0..colors-1}``.

    A coloring is encoded as ``sum(f(i) * colors**i)`` (point 0 is the least
    significant digit) and ``(g.f)(i) = f(g^-1(i))``.
    """
    if colors < 1:
        raise ValueError(f"colors must be >= 1, got {colors}")
    n = group.degree
    m = colors**n
    if m > space_cap:
        raise SpaceCapExceeded(
            f"{colors}**{n} = {m} colorings exceeds space_cap={space_cap}"
        )
    digits = _coloring_digits(colors, n)
    powers = colors ** np.arange(n, dtype=np.int64)
    table = np.empty((group.order, m), dtype=np.int64)
    for g in range(group.order):
        ginv = np.array(group[group.inv(g)].images, dtype=np.int64)
        table[g] = digits[:, ginv] @ powers
    _validate(group, table, exhaustive=False)
    space = ActionSpace(m, coloring_labels(colors, n))
    return GroupAction(group, space, _freeze(table), "colorings")


def table_action(
    group: FiniteGroup,
    space: ActionSpace,
    table: Sequence[Sequence[int]] | Mapping[int, Sequence[int]] | np.ndarray,
) -> GroupAction:
    """Build an action from explicit rows, ``table[g][x] = act(g, x)``.

    Both axioms are checked over every pair of elements; failures raise
    :class:`InvalidActionError` carrying the offending ``x`` or ``(g, h, x)``.
    """
    if isinstance(table, Mapping):
        missing = [g for g in range(group.order) if g not in table]
        if missing:
            raise InvalidActionError(f"no row for element {missing[0]}", {"g": missing[0]})
        rows = [list(table[g]) for g in range(group.order)]
    else:
        rows = [list(r) for r in table]
    for g, r in enumerate(rows):
        if len(r) != space.size:
            raise InvalidActionError(
                f"row {g} has {len(r)} entries, expected |X| = {space.size}", {"g": g}
            )
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), space.size)
    _validate(group, arr, exhaustive=True)
    return GroupAction(group, space, _freeze(arr), "table")


def orbit(action: GroupAction, x: int) -> frozenset[int]:
    action.check_point(x)
    return frozenset(int(y) for y in np.unique(action.table[:, x]))


def orbit_partition(action: GroupAction) -> OrbitPartition:
    cached = action._cache.get("partition")
    if cached is not None:
        return cached
    m = action.size
    orbit_of = [-1] * m
    members = []
    for x in range(m):
        if orbit_of[x] >= 0:
            continue
        orb = sorted(orbit(action, x))
        for y in orb:
            orbit_of[y] = len(members)
        members.append(tuple(orb))
    part = OrbitPartition(len(members), tuple(orbit_of), tuple(members))
    action._cache["partition"] = part
    return part


def fix_set(action: GroupAction, g: int) -> FixSet:
    action.check_element(g)
    pts = np.nonzero(action.table[g] == np.arange(action.size))[0]
    return FixSet(g, frozenset(int(x) for x in pts))


def fix_counts(action: GroupAction) -> np.ndarray:
    """``|fix(g)|`` for every element, in element order."""
    return (action.table == np.arange(action.size)).sum(axis=1)


def stabilizer(action: GroupAction, x: int) -> frozenset[int]:
    action.check_point(x)
    return frozenset(int(h) for h in np.nonzero(action.table[:, x] == x)[0])


def transporter(action: GroupAction, y: int, x: int) -> frozenset[int]:
    """Elements ``h`` with ``act(h, y) == x``."""
    action.check_point(y)
    action.check_point(x)
    return frozenset(int(h) for h in np.nonzero(action.table[:, y] == x)[0])
