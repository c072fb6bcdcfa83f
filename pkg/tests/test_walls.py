"""Wall families, separation, chamber paths, restriction closure."""

import random
from fractions import Fraction

import pytest

from arrzeta import (WallFamily, WallInstance, WallSet, chamber_path,
                     extend_restricted_walls, intersection_lattice,
                     localized_walls, nd_wall_set, resolution_datum,
                     same_chamber, separating_walls, walls_from_resolution)

from conftest import random_rational_point, threelines, threelines_factored, veys

F = Fraction


def diag_set():
    return extend_restricted_walls(WallSet([WallFamily((1, 1), [0])]))


def mixed_set():
    return extend_restricted_walls(walls_from_resolution([(2, 1), (1, 3)]))


def tl_wall_set():
    return extend_restricted_walls(nd_wall_set(threelines()))


# ---------------------------------------------------------------------------
# families and sets

def test_family_validation():
    fam = WallFamily((1, 2), [F(1, 2), 0, F(1, 2)])
    assert fam.offsets == (F(0), F(1, 2))  # deduped and sorted
    assert fam.content() == 2
    with pytest.raises(ValueError, match="nonzero"):
        WallFamily((0, 0), [0])
    with pytest.raises(ValueError, match="nonnegative"):
        WallFamily((1, -1), [0])
    with pytest.raises(ValueError, match="primitive"):
        WallFamily((2, 4), [0])
    with pytest.raises(ValueError, match="offset"):
        WallFamily((1, 0), [])
    with pytest.raises(ValueError, match="0, 1"):
        WallFamily((1, 0), [1])
    with pytest.raises(ValueError, match="0, 1"):
        WallFamily((1, 0), [F(-1, 2)])


def test_family_evaluate_and_hits():
    fam = WallFamily((1, 2), [0, F(1, 2)])
    assert fam.evaluate((F(1, 2), F(1, 4))) == 1
    assert fam.hits(F(3))
    assert fam.hits(F(-5, 2))
    assert not fam.hits(F(1, 3))
    with pytest.raises(ValueError):
        fam.evaluate((1,))


def test_wall_set_validation():
    a = WallFamily((1, 0), [0])
    b = WallFamily((0, 1), [0])
    ws = WallSet([a, b])
    assert [f.normal for f in ws] == [(0, 1), (1, 0)]  # sorted by normal
    assert ws.dim == 2 and len(ws) == 2
    with pytest.raises(ValueError, match="duplicate"):
        WallSet([a, WallFamily((1, 0), [F(1, 2)])])
    with pytest.raises(ValueError, match="dimension"):
        WallSet([a, WallFamily((1,), [0])])
    with pytest.raises(ValueError):
        WallSet([]).dim


# ---------------------------------------------------------------------------
# generation from resolution data

def test_walls_from_resolution_golden():
    ws = walls_from_resolution([(2, 4)])
    assert len(ws) == 1
    fam = ws.families[0]
    assert fam.normal == (1, 2)
    assert fam.offsets == (F(0), F(1, 2))


def test_walls_from_resolution_merges():
    ws = walls_from_resolution([(1, 1), (2, 2)])
    assert len(ws) == 1
    assert ws.families[0].normal == (1, 1)
    assert ws.families[0].offsets == (F(0), F(1, 2))


def test_walls_from_resolution_data_objects():
    arr = threelines_factored()
    lat = intersection_lattice(arr)
    data = [resolution_datum(arr, lat.flat([0])),
            resolution_datum(arr, lat.flat([0, 1, 2]))]
    ws = walls_from_resolution(data)
    assert [f.normal for f in ws] == [(1, 0), (1, 2)]
    assert all(f.offsets == (F(0),) for f in ws)
    bare = resolution_datum(veys(), intersection_lattice(veys()).flat([0]))
    with pytest.raises(ValueError, match="factor orders"):
        walls_from_resolution([bare])
    with pytest.raises(ValueError, match="zero"):
        walls_from_resolution([(0, 0)])
    with pytest.raises(ValueError, match="nonnegative"):
        walls_from_resolution([(1, -2)])


def test_nd_wall_set():
    ws = nd_wall_set(threelines())
    assert [f.normal for f in ws] == [
        (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]
    assert all(f.offsets == (F(0),) for f in ws)
    wv = nd_wall_set(veys())
    assert len(wv) == 8
    assert (1, 1, 1, 0, 0) in {f.normal for f in wv}
    assert (1, 0, 0, 1, 1) in {f.normal for f in wv}


# ---------------------------------------------------------------------------
# localization and separation

def test_localized_walls():
    ws = diag_set()
    assert [f.normal for f in ws] == [(0, 1), (1, 0), (1, 1)]
    at_origin = localized_walls(ws, (0, 0))
    assert [w.key() for w in at_origin] == [
        ((0, 1), F(0)), ((1, 0), F(0)), ((1, 1), F(0))]
    inside = localized_walls(ws, (F(1, 2), F(1, 2)))
    assert [w.key() for w in inside] == [((1, 1), F(1))]
    off = localized_walls(ws, (F(1, 3), F(1, 4)))
    assert off == []


def test_separating_walls_golden():
    ws = WallSet([WallFamily((1,), [0])])
    a, b = (F(-1, 2),), (F(5, 2),)
    seps = separating_walls(ws, a, b)
    assert [w.gamma for w in seps] == [0, 1, 2]
    assert separating_walls(ws, a, b) == separating_walls(ws, b, a)
    assert same_chamber(ws, (F(1, 4),), (F(3, 4),))
    assert not same_chamber(ws, (F(-1, 4),), (F(1, 4),))


def test_separation_is_closed_below_open_above():
    ws = WallSet([WallFamily((1,), [0])])
    on_wall = (F(0),)
    # a point on a wall counts as below it: moving up crosses, moving down not
    assert [w.gamma for w in separating_walls(ws, on_wall, (F(1, 2),))] == [0]
    assert separating_walls(ws, on_wall, (F(-1, 2),)) == []
    assert same_chamber(ws, on_wall, (F(1, 2),)) is False
    assert same_chamber(ws, on_wall, (F(-1, 2),)) is True


def test_separating_fractional_offsets():
    ws = walls_from_resolution([(2, 4)])  # normal (1, 2), offsets {0, 1/2}
    seps = separating_walls(ws, (0, F(1, 8)), (0, F(5, 8)))
    # L runs from 1/4 to 5/4: walls at 1/2 and 1
    assert [w.gamma for w in seps] == [F(1, 2), F(1)]


def test_separation_midpoint_additivity():
    ws = mixed_set()
    rng = random.Random(31)
    for _ in range(25):
        a = random_rational_point(rng, 2, den=8)
        b = random_rational_point(rng, 2, den=8)
        total = separating_walls(ws, a, b)
        # the half-open convention makes separation exactly additive over a
        # midpoint, wherever m sits relative to the walls
        m = tuple((x + y) / 2 for x, y in zip(a, b))
        first = separating_walls(ws, a, m)
        second = separating_walls(ws, m, b)
        assert sorted(first + second) == total


# ---------------------------------------------------------------------------
# chamber paths

def test_chamber_path_golden_order():
    ws = WallSet([WallFamily((1,), [0])])
    path = chamber_path(ws, (F(-1, 2),), (F(5, 2),))
    assert [w.gamma for w in path] == [0, 1, 2]
    back = chamber_path(ws, (F(5, 2),), (F(-1, 2),))
    assert [w.gamma for w in back] == [2, 1, 0]


def test_chamber_path_from_wall_point():
    ws = diag_set()
    path = chamber_path(ws, (0, 0), (1, 1))
    expect = separating_walls(ws, (0, 0), (1, 1))
    assert sorted(path) == expect
    assert len(path) == 4  # (1,0) and (0,1) at 0, (1,1) at 0 and 1


def test_chamber_path_errors():
    ws = diag_set()
    with pytest.raises(ValueError, match="coincide"):
        chamber_path(ws, (0, 0), (0, 0))
    with pytest.raises(ValueError, match="dimension"):
        chamber_path(ws, (0,), (1,))
    assert chamber_path(WallSet([]), (0,), (1,)) == []


@pytest.mark.parametrize("maker", [diag_set, mixed_set, tl_wall_set])
def test_chamber_path_matches_separation(maker):
    ws = maker()
    dim = ws.dim
    rng = random.Random(5000 + dim)
    done = 0
    while done < 40:
        a = random_rational_point(rng, dim, den=12)
        b = random_rational_point(rng, dim, den=12)
        if a == b:
            continue
        path = chamber_path(ws, a, b)
        assert sorted(path) == separating_walls(ws, a, b)
        done += 1


def test_chamber_path_endpoints_stay_put():
    # separation of the endpoints themselves must agree with the path even
    # when both endpoints lie on several walls at once
    ws = tl_wall_set()
    a = (0, 0, 0)
    b = (1, 1, 1)
    path = chamber_path(ws, a, b)
    assert sorted(path) == separating_walls(ws, a, b)


# ---------------------------------------------------------------------------
# restriction closure

def test_extend_restricted_golden():
    ws = extend_restricted_walls(walls_from_resolution([(2, 4)]))
    by_normal = {f.normal: f.offsets for f in ws}
    assert by_normal == {
        (1, 0): (F(0), F(1, 2)),
        (0, 1): (F(0), F(1, 4), F(1, 2), F(3, 4)),
        (1, 2): (F(0), F(1, 2))}


def test_extend_restricted_mixed():
    ws = mixed_set()
    by_normal = {f.normal: f.offsets for f in ws}
    assert by_normal == {
        (1, 0): (F(0), F(1, 2)),
        (0, 1): (F(0), F(1, 3), F(2, 3)),
        (2, 1): (F(0),),
        (1, 3): (F(0),)}


def test_extend_restricted_idempotent():
    for maker in (diag_set, mixed_set, tl_wall_set):
        ws = maker()
        assert extend_restricted_walls(ws) == ws


def test_extend_keeps_input_families():
    base = walls_from_resolution([(2, 4), (3, 1)])
    ext = extend_restricted_walls(base)
    by_normal = {f.normal: set(f.offsets) for f in ext}
    for fam in base:
        assert set(fam.offsets) <= by_normal[fam.normal]
