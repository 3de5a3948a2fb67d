"""Seeded simulation of the three-stage experiment.

Random source: MT19937 as implemented by :class:`random.Random`, seeded with a
non-negative integer. Integers in ``[0, k)`` come from :meth:`Stream.below`:
draw ``b = max(1, (k-1).bit_length())`` bits with ``getrandbits`` (one 32-bit
output word per draw for ``k <= 2**32``) and reject values ``>= k``. Each
experiment consumes the stream in the order g, orbit, y.
"""
from __future__ import annotations

import math
import random
import statistics
from dataclasses import dataclass
from fractions import Fraction

from .action import GroupAction, OrbitPartition, fix_counts, orbit_partition
from .counting import count_orbits_burnside
from .proof import build_model, prob_gx_eq_x, prob_gy_eq, prob_y_in_orb

EVENTS = ("gy=x", "y_in_orb", "gx=x")
EVENT_LABELS = {"gy=x": "P(gy=x)", "y_in_orb": "P(y in orb(x))", "gx=x": "P(gx=x)"}


class Stream:
    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError(f"seed must be non-negative, got {seed}")
        self.seed = seed
        self._rng = random.Random(seed)

    def below(self, k: int) -> int:
        if k < 1:
            raise ValueError("cannot draw from an empty range")
        bits = max(1, (k - 1).bit_length())
        while True:
            r = self._rng.getrandbits(bits)
            if r < k:
                return r


@dataclass(frozen=True)
class SampleOutcome:
    g: int
    orbit_index: int
    y: int
    gy: int


@dataclass(frozen=True)
class EstimateReport:
    quantity: str
    estimate: float
    exact: Fraction
    standard_error: float
    samples: int
    seed: int
    point: int | None = None

    @property
    def error(self) -> float:
        return abs(self.estimate - float(self.exact))

    def within(self, k: float) -> bool:
        """``|estimate - exact| <= k * standard_error``."""
        return self.error <= k * self.standard_error


def sample_once(action: GroupAction, partition: OrbitPartition, stream: Stream) -> SampleOutcome:
    if action.size < 1 or partition.orbit_count < 1:
        raise ValueError("cannot sample from an empty space")
    g = stream.below(action.group.order)
    o = stream.below(partition.orbit_count)
    members = partition.orbit_members[o]
    y = members[stream.below(len(members))]
    return SampleOutcome(g, o, y, int(action.table[g, y]))


def _summarize(values: list[int]) -> tuple[float, float]:
    n = len(values)
    mean = statistics.fmean(values)
    if n < 2:
        return mean, 0.0
    return mean, statistics.stdev(values) / math.sqrt(n)


def estimate_orbit_count(action: GroupAction, samples: int, seed: int) -> EstimateReport:
    """Average ``|fix(g)|`` over ``samples`` uniform draws of ``g``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    stream = Stream(seed)
    sizes = [int(s) for s in fix_counts(action)]
    order = action.group.order
    values = [sizes[stream.below(order)] for _ in range(samples)]
    mean, se = _summarize(values)
    exact = Fraction(count_orbits_burnside(action))
    return EstimateReport("orbit-count", mean, exact, se, samples, seed)


def estimate_event(
    action: GroupAction, event: str, x: int, samples: int, seed: int
) -> EstimateReport:
    """Empirical frequency of ``gy=x``, ``y_in_orb`` (y in orb(x)) or ``gx=x``."""
    if event not in EVENTS:
        raise ValueError(f"unknown event {event!r}; expected one of {EVENTS}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    action.check_point(x)
    part = orbit_partition(action)
    model = build_model(action)
    x_orbit = part.orbit_of[x]
    stream = Stream(seed)
    values = []
    for _ in range(samples):
        s = sample_once(action, part, stream)
        if event == "gy=x":
            hit = s.gy == x
        elif event == "y_in_orb":
            hit = part.orbit_of[s.y] == x_orbit
        else:
            hit = int(action.table[s.g, x]) == x
        values.append(int(hit))
    exact = {
        "gy=x": prob_gy_eq,
        "y_in_orb": prob_y_in_orb,
        "gx=x": prob_gx_eq_x,
    }[event](model, x)
    mean, se = _summarize(values)
    return EstimateReport(EVENT_LABELS[event], mean, exact, se, samples, seed, x)
