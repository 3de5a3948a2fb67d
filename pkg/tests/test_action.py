import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import generator_sets
from oracles import act_coloring, colorings, coloring_orbits, orbits_by_union_find
from orbitcount.action import (
    ActionSpace,
    InvalidActionError,
    SpaceCapExceeded,
    coloring_action,
    fix_set,
    natural_action,
    orbit,
    orbit_partition,
    stabilizer,
    table_action,
    transporter,
)
from orbitcount.corpus import cyclic_group, trivial_group
from orbitcount.perm import generate_group, parse_cycles


def idx(group, text):
    return group.index(parse_cycles(text, group.degree))


def test_natural_action_examples():
    a = natural_action(trivial_group(3))
    assert [a.act(0, x) for x in range(3)] == [0, 1, 2]
    c3 = natural_action(generate_group([parse_cycles("(0 1 2)", 3)]))
    assert c3.act(1, 0) == 1


def test_s3_natural_satisfies_axioms_exhaustively(s3, s3_natural):
    # independent of the validator: check every (g, h, x)
    for g in range(6):
        for h in range(6):
            gh = s3.mul(g, h)
            for x in range(3):
                assert s3_natural.act(gh, x) == s3_natural.act(g, s3_natural.act(h, x))
    assert all(s3_natural.act(s3.identity_index, x) == x for x in range(3))


def test_coloring_action_one_color(c4):
    a = coloring_action(c4, 1)
    assert a.size == 1
    assert all(a.act(g, 0) == 0 for g in range(4))


def test_coloring_action_c4(c4):
    a = coloring_action(c4, 2)
    assert a.size == 16
    for g in range(4):
        assert a.act(g, 0) == 0 and a.act(g, 15) == 15
        assert sorted(a.table[g]) == list(range(16))
    r = idx(c4, "(0 1 2 3)")
    assert fix_set(a, r).points == {0, 15}
    assert a.space.labels[6] == "0110"


@pytest.mark.parametrize("n, c", [(3, 2), (4, 3), (5, 2)])
def test_coloring_table_matches_enumeration(n, c):
    group = cyclic_group(n)
    a = coloring_action(group, c)
    cols = colorings(n, c)
    index = {f: i for i, f in enumerate(cols)}
    for g, p in enumerate(group):
        for x, f in enumerate(cols):
            assert a.act(g, x) == index[act_coloring(p.images, f)]


def test_coloring_space_cap(c4):
    with pytest.raises(SpaceCapExceeded):
        coloring_action(c4, 3, space_cap=80)
    assert coloring_action(c4, 3, space_cap=81).size == 81


def test_table_action_accepts_natural(s3):
    rows = [list(p.images) for p in s3]
    a = table_action(s3, ActionSpace(3), rows)
    assert np.array_equal(a.table, natural_action(s3).table)


def test_table_action_identity_violation(s3):
    rows = [list(p.images) for p in s3]
    rows[s3.identity_index] = [1, 0, 2]
    with pytest.raises(InvalidActionError) as info:
        table_action(s3, ActionSpace(3), rows)
    assert info.value.witness == {"x": 0}


def test_table_action_non_bijective(s3):
    rows = [list(p.images) for p in s3]
    rows[1] = [2, 2, 2]
    with pytest.raises(InvalidActionError, match="not a bijection") as info:
        table_action(s3, ActionSpace(3), rows)
    assert info.value.witness["g"] == 1


def test_table_action_compatibility_violation(s3):
    # every row is a bijection and the identity row is right, but the rows
    # of two transpositions are swapped
    rows = [list(p.images) for p in s3]
    t1, t2 = idx(s3, "(0 1)"), idx(s3, "(1 2)")
    rows[t1], rows[t2] = rows[t2], rows[t1]
    with pytest.raises(InvalidActionError, match="compatibility") as info:
        table_action(s3, ActionSpace(3), rows)
    w = info.value.witness
    g, h, x = w["g"], w["h"], w["x"]
    assert rows[s3.mul(g, h)][x] != rows[g][rows[h][x]]


def test_table_action_out_of_range_and_shape(s3):
    rows = [list(p.images) for p in s3]
    rows[2] = [0, 1, 5]
    with pytest.raises(InvalidActionError, match="not a point"):
        table_action(s3, ActionSpace(3), rows)
    with pytest.raises(InvalidActionError):
        table_action(s3, ActionSpace(3), rows[:4])


def test_action_space():
    assert ActionSpace(3).labels == ("0", "1", "2")
    with pytest.raises(ValueError):
        ActionSpace(0)
    with pytest.raises(ValueError):
        ActionSpace(2, ("a", "a"))


def test_orbit_examples(swap3, s3_natural):
    triv = natural_action(trivial_group(4))
    assert all(orbit(triv, x) == {x} for x in range(4))
    assert orbit(swap3, 0) == {0, 1}
    assert orbit(swap3, 2) == {2}
    assert orbit(s3_natural, 1) == {0, 1, 2}
    with pytest.raises(IndexError):
        orbit(swap3, 3)


def test_orbit_partition_examples(swap3, trivial5, c4):
    p = orbit_partition(trivial5)
    assert p.orbit_count == 5 and p.orbit_members == tuple((x,) for x in range(5))
    p = orbit_partition(swap3)
    assert p.orbit_members == ((0, 1), (2,))
    assert p.orbit_of == (0, 0, 1)
    a = coloring_action(c4, 2)
    assert orbit_partition(a).orbit_count == 6
    assert [list(o) for o in orbit_partition(a).orbit_members] == coloring_orbits(
        [parse_cycles("(0 1 2 3)", 4).images], 4, 2
    )


def test_fix_set_examples(c4):
    nat = natural_action(c4)
    assert fix_set(nat, 0).points == set(range(4))
    assert fix_set(nat, idx(c4, "(0 1 2 3)")).points == set()
    with pytest.raises(IndexError):
        fix_set(nat, 4)


def test_stabilizer_and_transporter_examples(s3, s3_natural, swap3):
    triv = natural_action(trivial_group(3))
    assert stabilizer(triv, 1) == {0}
    assert stabilizer(s3_natural, 0) == {0, idx(s3, "(1 2)")}
    assert len(orbit(s3_natural, 0)) * len(stabilizer(s3_natural, 0)) == 6
    assert transporter(s3_natural, 1, 0) == {idx(s3, "(0 1)"), idx(s3, "(0 2 1)")}
    assert transporter(swap3, 2, 0) == set()
    for x in range(3):
        assert transporter(s3_natural, x, x) == stabilizer(s3_natural, x)


actions = st.one_of(
    generator_sets(max_degree=5).map(lambda c: natural_action(generate_group(c[1], degree=c[0]))),
    st.tuples(generator_sets(max_degree=4), st.integers(1, 3)).map(
        lambda t: coloring_action(generate_group(t[0][1], degree=t[0][0]), t[1])
    ),
)


@settings(max_examples=60, deadline=None)
@given(actions)
def test_action_properties(a):
    m = a.size
    part = orbit_partition(a)
    for g in range(a.group.order):
        assert sorted(a.table[g]) == list(range(m))
    assert fix_set(a, a.group.identity_index).points == set(range(m))
    assert sum(len(o) for o in part.orbit_members) == m
    assert [o[0] for o in part.orbit_members] == sorted(o[0] for o in part.orbit_members)
    orbs = [orbit(a, x) for x in range(m)]
    for x in range(m):
        for y in range(m):
            assert (x in orbs[y]) == (y in orbs[x]) == (orbs[x] == orbs[y])
            if y in orbs[x]:
                assert len(transporter(a, y, x)) == len(stabilizer(a, x))
            else:
                assert not transporter(a, y, x)
    gens = [a.group.index(p) for p in a.group.generators]
    expected = orbits_by_union_find(list(range(m)), gens, a.act)
    assert [list(o) for o in part.orbit_members] == expected
