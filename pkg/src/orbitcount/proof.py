"""Exact probability model of the three-stage experiment and its identities.

The experiment picks, independently and uniformly, an element ``g`` of ``G``,
an orbit ``O`` of ``X``, and a point ``y`` of ``O``. Since ``y`` determines
``O`` the outcome is recorded as the pair ``(g, y)`` with weight::

    w(g, y) = 1 / (|G| * N * |orb(y)|)        # N = number of orbits

Every event used below is a set of pairs, and every probability is an exact
:class:`fractions.Fraction`. Internally weights are kept as integer numerators
over the common denominator ``|G| * N * L`` with ``L`` the lcm of orbit sizes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence, Union

import numpy as np

from .action import GroupAction, OrbitPartition, fix_counts, orbit_partition
from .counting import ConsistencyError, count_orbits_direct, fixed_pairs

Value = Union[Fraction, int]


class EmptySpaceError(ValueError):
    pass


class NotATransporterWitness(ValueError):
    def __init__(self, k: int, x: int, y: int, image: int):
        super().__init__(
            f"element {k} is not a witness: act(k, {x}) = {image}, not y = {y}"
        )
        self.k = k


@dataclass(frozen=True, eq=False)
class ProbabilityModel:
    action: GroupAction
    partition: OrbitPartition
    denominator: int
    units: np.ndarray  # units[y] = L / |orb(y)|; w(g, y) = units[y] / denominator
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def weight(self, g: int, y: int) -> Fraction:
        self.action.check_element(g)
        self.action.check_point(y)
        return Fraction(int(self.units[y]), self.denominator)

    def mass(self, event: np.ndarray) -> Fraction:
        """Probability of a set of outcomes given as a ``(|G|, |X|)`` boolean mask."""
        units = np.broadcast_to(self.units, event.shape)
        return Fraction(int(units[event].sum(dtype=self.units.dtype)), self.denominator)

    def total_mass(self) -> Fraction:
        return self.mass(np.ones(self.action.table.shape, dtype=bool))


def build_model(action: GroupAction) -> ProbabilityModel:
    if action.size < 1:
        raise EmptySpaceError("cannot choose an orbit of an empty set")
    part = orbit_partition(action)
    sizes = part.sizes()
    lcm = reduce(math.lcm, sizes, 1)
    denom = action.group.order * part.orbit_count * lcm
    # the largest sum ever formed is the total mass, which equals denom
    dtype = np.int64 if denom < 2**62 else object
    units = np.array([lcm // sizes[part.orbit_of[y]] for y in range(action.size)], dtype=dtype)
    units.setflags(write=False)
    return ProbabilityModel(action, part, denom, units)


def _per_point(model: ProbabilityModel, key: str, compute) -> list[Fraction]:
    if key not in model._cache:
        model._cache[key] = compute()
    return model._cache[key]


def _frac_vector(model: ProbabilityModel, numerators: np.ndarray) -> list[Fraction]:
    return [Fraction(int(v), model.denominator) for v in numerators]


def _pair_units(model: ProbabilityModel) -> np.ndarray:
    return np.broadcast_to(model.units, model.action.table.shape)


def _all_gy_eq(model: ProbabilityModel) -> list[Fraction]:
    acc = np.zeros(model.action.size, dtype=model.units.dtype)
    np.add.at(acc, model.action.table.ravel(), _pair_units(model).ravel())
    return _frac_vector(model, acc)


def _all_y_in_orb(model: ProbabilityModel) -> list[Fraction]:
    orbit_of = np.array(model.partition.orbit_of)
    per_orbit = np.zeros(model.partition.orbit_count, dtype=model.units.dtype)
    ys = np.broadcast_to(orbit_of, model.action.table.shape)
    np.add.at(per_orbit, ys.ravel(), _pair_units(model).ravel())
    return _frac_vector(model, per_orbit[orbit_of])


def _all_gy_eq_and_orb(model: ProbabilityModel) -> list[Fraction]:
    table = model.action.table
    orbit_of = np.array(model.partition.orbit_of)
    same = orbit_of[table] == orbit_of[None, :]
    acc = np.zeros(model.action.size, dtype=model.units.dtype)
    np.add.at(acc, table[same], _pair_units(model)[same])
    return _frac_vector(model, acc)


def _fixed_mask(model: ProbabilityModel) -> np.ndarray:
    return model.action.table == np.arange(model.action.size)


def _all_gx_eq_x_model(model: ProbabilityModel) -> list[Fraction]:
    # event {(g, y) : act(g, x) = x} does not restrict y
    g_hits = _fixed_mask(model).sum(axis=0)
    y_units = model.units.sum(dtype=model.units.dtype)
    return _frac_vector(model, g_hits.astype(model.units.dtype) * y_units)


def _all_gx_eq_x_and_orb(model: ProbabilityModel) -> list[Fraction]:
    g_hits = _fixed_mask(model).sum(axis=0).astype(model.units.dtype)
    orbit_of = np.array(model.partition.orbit_of)
    per_orbit = np.zeros(model.partition.orbit_count, dtype=model.units.dtype)
    np.add.at(per_orbit, orbit_of, model.units)
    return _frac_vector(model, g_hits * per_orbit[orbit_of])


def prob_gy_eq(model: ProbabilityModel, x: int) -> Fraction:
    """P(gy = x)."""
    model.action.check_point(x)
    return _per_point(model, "gy", lambda: _all_gy_eq(model))[x]


def prob_y_in_orb(model: ProbabilityModel, x: int) -> Fraction:
    """P(y in orb(x))."""
    model.action.check_point(x)
    return _per_point(model, "orb", lambda: _all_y_in_orb(model))[x]


def prob_gy_eq_and_orb(model: ProbabilityModel, x: int) -> Fraction:
    model.action.check_point(x)
    return _per_point(model, "gy&orb", lambda: _all_gy_eq_and_orb(model))[x]


def prob_gy_eq_given_orb(model: ProbabilityModel, x: int) -> Fraction:
    """P(gy = x | y in orb(x))."""
    return prob_gy_eq_and_orb(model, x) / prob_y_in_orb(model, x)


def prob_gx_eq_given_orb(model: ProbabilityModel, x: int) -> Fraction:
    """P(gx = x | y in orb(x))."""
    model.action.check_point(x)
    joint = _per_point(model, "gx&orb", lambda: _all_gx_eq_x_and_orb(model))[x]
    return joint / prob_y_in_orb(model, x)


def prob_gx_eq_x_from_model(model: ProbabilityModel, x: int) -> Fraction:
    model.action.check_point(x)
    return _per_point(model, "gx", lambda: _all_gx_eq_x_model(model))[x]


def prob_gx_eq_x(model: ProbabilityModel, x: int) -> Fraction:
    """P(gx = x) = |stab(x)| / |G|; cross-checked against the model's weights."""
    model.action.check_point(x)
    table = model.action.table
    value = Fraction(int((table[:, x] == x).sum()), model.action.group.order)
    from_model = prob_gx_eq_x_from_model(model, x)
    if value != from_model:
        raise ConsistencyError(f"P(gx=x) at x={x}: {value} by stabilizer, {from_model} by weights")
    return value


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    holds: bool
    lhs: Value | tuple[Value, ...]
    rhs: Value | tuple[Value, ...]
    witness: str | None = None
    step: int | None = None
    statement: str = ""


def render(v) -> str:
    """Exact rendering: ``p/q``, or ``p`` when the denominator is 1."""
    if isinstance(v, tuple):
        return "[" + ", ".join(render(t) for t in v) + "]"
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def _compare(
    name: str,
    step: int,
    statement: str,
    lhs: Sequence[Value],
    rhs: Sequence[Value],
    labels: Sequence[str],
    scalar: bool = False,
) -> IdentityReport:
    witness = None
    for a, b, label in zip(lhs, rhs, labels):
        if a != b:
            witness = f"{label}: {render(a)} != {render(b)}"
            break
    holds = witness is None and len(lhs) == len(rhs)
    if scalar:
        return IdentityReport(name, holds, lhs[0], rhs[0], witness, step, statement)
    return IdentityReport(name, holds, tuple(lhs), tuple(rhs), witness, step, statement)


def verify_bijection(action: GroupAction, y: int, x: int, k: int) -> IdentityReport:
    """Check that ``h -> k^-1 h^-1`` maps ``transporter(y, x)`` onto ``stabilizer(x)``.

    Requires ``act(k, x) == y``. The report's ``lhs`` is the sorted image list
    (duplicates kept, so a non-injective map cannot compare equal) and ``rhs``
    the sorted stabilizer.
    """
    action.check_point(x)
    action.check_point(y)
    action.check_element(k)
    ok, image, stab = _bijection_image(action, y, x, k)
    witness = None
    if not ok:
        witness = (
            f"x={x}, y={y}, k={k} ({action.describe_element(k)}): "
            f"image {list(image)} != stabilizer {list(stab)}"
        )
    return IdentityReport(
        "bijection", ok, image, stab, witness, 3,
        "h -> k^-1 h^-1 maps {h : hy = x} onto {h : hx = x}",
    )


def _bijection_image(action: GroupAction, y: int, x: int, k: int, transport=None, stab=None):
    table = action.table
    if int(table[k, x]) != y:
        raise NotATransporterWitness(k, x, y, int(table[k, x]))
    group = action.group
    if transport is None:
        transport = np.nonzero(table[:, y] == x)[0]
    if stab is None:
        stab = tuple(int(h) for h in np.nonzero(table[:, x] == x)[0])
    kinv = group.inv(k)
    row = group.cayley_table()[kinv] if group.order <= 2048 else group.mul_row(kinv)
    image = tuple(sorted(int(row[group.inv(int(h))]) for h in transport))
    return image == stab, image, stab


def _check_all_bijections(action: GroupAction) -> IdentityReport:
    table = action.table
    part = orbit_partition(action)
    checked = 0
    passed = 0
    witness = None
    for x in range(action.size):
        stab = tuple(int(h) for h in np.nonzero(table[:, x] == x)[0])
        for y in part.orbit_members[part.orbit_of[x]]:
            transport = np.nonzero(table[:, y] == x)[0]
            for k in np.nonzero(table[:, x] == y)[0]:
                k = int(k)
                ok, image, _ = _bijection_image(action, y, x, k, transport, stab)
                checked += 1
                if ok:
                    passed += 1
                elif witness is None:
                    witness = (
                        f"x={x}, y={y}, k={k} ({action.describe_element(k)}): "
                        f"image {list(image)} != stabilizer {list(stab)}"
                    )
    return IdentityReport(
        "bijection", passed == checked and witness is None, passed, checked, witness, 3,
        "for all x, y in orb(x), k with kx = y: h -> k^-1 h^-1 is a bijection "
        "{h : hy = x} -> {h : hx = x}  (lhs = passing triples, rhs = triples checked)",
    )


def verify_proof(action: GroupAction) -> list[IdentityReport]:
    """Check each step of the probabilistic orbit-counting argument exactly.

    Returns six reports in fixed order: total probability, chain rule,
    bijection, conditional collapse, orbit uniformity, final count.
    """
    model = build_model(action)
    m = action.size
    xs = range(m)
    xlabels = [f"x={x}" for x in xs]
    n_orbits = model.partition.orbit_count
    order = action.group.order

    gy = [prob_gy_eq(model, x) for x in xs]
    orb = [prob_y_in_orb(model, x) for x in xs]
    gy_given = [prob_gy_eq_given_orb(model, x) for x in xs]
    gx_given = [prob_gx_eq_given_orb(model, x) for x in xs]
    gx_model = [prob_gx_eq_x_from_model(model, x) for x in xs]
    gx_stab = [Fraction(int(c), order) for c in (action.table == np.arange(m)).sum(axis=0)]

    reports = []
    reports.append(_compare(
        "total-probability", 1, "sum_x P(gy=x) = 1",
        [sum(gy, Fraction(0))], [Fraction(1)], ["sum_x P(gy=x)"], scalar=True,
    ))
    reports.append(_compare(
        "chain-rule", 2, "P(gy=x) = P(y in orb(x)) * P(gy=x | y in orb(x)) for every x",
        gy, [o * c for o, c in zip(orb, gy_given)], xlabels,
    ))
    reports.append(_check_all_bijections(action))
    reports.append(_compare(
        "conditional-collapse", 4,
        "P(gy=x | y in orb(x)) = P(gx=x | y in orb(x)) = P(gx=x) = |stab(x)|/|G| for every x",
        gy_given + gx_given + gx_model,
        gx_given + gx_model + gx_stab,
        [f"{lab} (P(gy=x|orb) vs P(gx=x|orb))" for lab in xlabels]
        + [f"{lab} (P(gx=x|orb) vs P(gx=x))" for lab in xlabels]
        + [f"{lab} (P(gx=x) vs |stab|/|G|)" for lab in xlabels],
    ))
    inv_n = Fraction(1, n_orbits)
    reports.append(_compare(
        "orbit-uniformity", 5, "P(y in orb(x)) = 1/N for every x, and (1/N) sum_x P(gx=x) = 1",
        orb + [inv_n * sum(gx_model, Fraction(0))],
        [inv_n] * m + [Fraction(1)],
        xlabels + ["(1/N) sum_x P(gx=x)"],
    ))
    sum_gx = sum(gx_model, Fraction(0))
    direct = count_orbits_direct(action)
    reports.append(_compare(
        "final-count", 6, "sum_x P(gx=x) = fixed_pairs/|G| = (1/|G|) sum_g |fix(g)| = N",
        [sum_gx, Fraction(fixed_pairs(action), order),
         Fraction(sum(int(s) for s in fix_counts(action)), order)],
        [Fraction(direct)] * 3,
        ["sum_x P(gx=x)", "fixed_pairs/|G|", "(1/|G|) sum_g |fix(g)|"],
    ))
    return reports
