"""Orbit counts by direct partition and by the fixed-point average."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .action import GroupAction, fix_counts, orbit_partition


class ConsistencyError(RuntimeError):
    """Two routes to the same number disagreed; the input escaped validation."""


@dataclass(frozen=True)
class OrbitCountReport:
    direct_count: int
    burnside_value: Fraction
    fixed_pairs: int
    group_order: int
    fix_sizes: tuple[int, ...]

    @property
    def agrees(self) -> bool:
        return self.burnside_value.denominator == 1 and self.burnside_value == self.direct_count


def count_orbits_direct(action: GroupAction) -> int:
    return orbit_partition(action).orbit_count


def burnside_value(action: GroupAction) -> Fraction:
    sizes = fix_counts(action)
    return Fraction(sum(int(s) for s in sizes), action.group.order)


def count_orbits_burnside(action: GroupAction) -> int:
    value = burnside_value(action)
    if value.denominator != 1:
        raise ConsistencyError(f"average fixed-point count {value} is not an integer")
    return value.numerator


def fixed_pairs(action: GroupAction) -> int:
    """``|{(g, x) : act(g, x) == x}|``, counted by rows and by columns."""
    fixed = action.table == np.arange(action.size)
    by_element = sum(int(c) for c in fixed.sum(axis=1))
    by_point = sum(int(c) for c in fixed.sum(axis=0))
    if by_element != by_point:
        raise ConsistencyError(
            f"fixed pairs by element ({by_element}) != by point ({by_point})"
        )
    return by_element


def count_report(action: GroupAction) -> OrbitCountReport:
    sizes = tuple(int(s) for s in fix_counts(action))
    return OrbitCountReport(
        direct_count=count_orbits_direct(action),
        burnside_value=Fraction(sum(sizes), action.group.order),
        fixed_pairs=fixed_pairs(action),
        group_order=action.group.order,
        fix_sizes=sizes,
    )
