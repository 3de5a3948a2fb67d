from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import generator_sets
from oracles import coloring_fix_counts, coloring_orbits
from orbitcount.action import GroupAction, coloring_action, natural_action
from orbitcount.counting import (
    ConsistencyError,
    count_orbits_burnside,
    count_orbits_direct,
    count_report,
    fixed_pairs,
)
from orbitcount.corpus import cube_rotation_group, dihedral_group, symmetric_group
from orbitcount.perm import generate_group


def test_trivial_group(trivial5):
    assert count_orbits_direct(trivial5) == 5
    assert count_orbits_burnside(trivial5) == 5
    assert fixed_pairs(trivial5) == 5


def test_s3_natural(s3_natural):
    r = count_report(s3_natural)
    assert sorted(r.fix_sizes) == [0, 0, 1, 1, 1, 3]
    assert (r.direct_count, r.burnside_value, r.fixed_pairs) == (1, Fraction(1), 6)


def test_c4_colorings(c4):
    a = coloring_action(c4, 2)
    r = count_report(a)
    assert r.fix_sizes == (16, 2, 4, 2)
    assert r.fix_sizes == tuple(coloring_fix_counts([p.images for p in c4], 4, 2))
    assert (r.direct_count, r.fixed_pairs, r.group_order) == (6, 24, 4)
    assert count_orbits_burnside(a) == 6
    assert r.agrees


@pytest.mark.parametrize(
    "group, colors, expected",
    [
        (lambda: dihedral_group(4), 2, 6),
        (cube_rotation_group, 3, 57),
        (cube_rotation_group, 2, 10),
        (lambda: dihedral_group(6), 2, 13),
    ],
)
def test_coloring_counts_against_union_find(group, colors, expected):
    g = group()
    gens = [p.images for p in g.generators]
    assert len(coloring_orbits(gens, g.degree, colors)) == expected
    a = coloring_action(g, colors)
    assert count_orbits_direct(a) == count_orbits_burnside(a) == expected


def test_non_integer_average_is_flagged(s3):
    # bypass validation: a table whose rows are not a homomorphic image
    table = np.array([[0, 1, 2]] + [[1, 0, 2]] * 5)
    bogus = GroupAction(s3, natural_action(s3).space, table)
    with pytest.raises(ConsistencyError):
        count_orbits_burnside(bogus)


@settings(max_examples=80, deadline=None)
@given(generator_sets(max_degree=6), st.integers(1, 3), st.booleans())
def test_lemma_on_random_groups(case, colors, use_colorings):
    n, gens = case
    group = generate_group(gens, degree=n)
    if use_colorings and colors**n <= 729:
        a = coloring_action(group, colors)
    else:
        a = natural_action(group)
    n_orbits = count_orbits_direct(a)
    assert count_orbits_burnside(a) == n_orbits
    fixed = a.table == np.arange(a.size)
    assert fixed_pairs(a) == int(fixed.sum()) == sum(int(fixed[:, x].sum()) for x in range(a.size))
    assert 1 <= n_orbits <= a.size
    trivial = all((a.table[g] == np.arange(a.size)).all() for g in range(group.order))
    assert (n_orbits == a.size) == trivial
    transitive = len(set(a.table[:, 0])) == a.size
    assert (n_orbits == 1) == transitive


def test_s4_natural_transitive():
    a = natural_action(symmetric_group(4))
    assert count_orbits_burnside(a) == 1
    assert fixed_pairs(a) == 24
