import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fieldlab.designs import (BlockDesign, Resolution, design_counts, design_from_plane,
                              design_imbalance, find_resolution, k_equals_t_designs,
                              parse_design_json, verify_design)
from fieldlab.errors import DesignError, LimitExceeded
from fieldlab.fingeo import affine_plane, projective_plane
from fieldlab.fixtures import load_fixture, nine_point_classes
from fieldlab.gfield import field_of_order, make_field


def test_nine_point_fixture():
    d = load_fixture("nine-point-design")
    assert (d.v, d.b, d.k, d.t, d.lam) == (9, 12, 3, 2, 1)
    assert d.parameters() == "2-(9,3,1), b=12"
    assert design_counts(d) == (12, 4)


def test_nine_point_resolution_matches_columns():
    d = load_fixture("nine-point-design")
    res = find_resolution(d)
    assert res is not None and len(res.classes) == 4
    res.validate(d)
    want = sorted(sorted(map(tuple, c)) for c in nine_point_classes())
    assert sorted(sorted(c) for c in res.classes) == want


def test_nine_point_design_is_affine_plane_over_f3():
    d = load_fixture("nine-point-design")
    relabel = lambda j: (j % 3) * 3 + j // 3
    mapped = {frozenset(relabel(x) for x in b) for b in d.blocks}
    plane = affine_plane(make_field(3))
    assert mapped == {frozenset(l) for l in plane.lines}


def test_removed_block_fails():
    d = load_fixture("nine-point-design")
    blocks = d.blocks[1:]
    assert verify_design(9, blocks, 2) is None
    w = design_imbalance(9, blocks, 2)
    assert w is not None and w.count_a != w.count_b
    with pytest.raises(DesignError):
        BlockDesign.from_blocks(9, blocks, 2)


def test_fano_design(fano):
    d = design_from_plane(fano)
    assert d.parameters() == "2-(7,3,1), b=7"
    assert find_resolution(d) is None


def test_affine_f2_resolution():
    d = design_from_plane(affine_plane(make_field(2)))
    assert (d.v, d.k, d.lam, d.b) == (4, 2, 1, 6)
    res = find_resolution(d)
    assert len(res.classes) == 3


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_planes_are_designs(q):
    d = design_from_plane(projective_plane(field_of_order(q)))
    n = q * q + q + 1
    assert (d.v, d.b, d.k, d.lam) == (n, n, q + 1, 1)
    a = design_from_plane(affine_plane(field_of_order(q)))
    assert (a.v, a.b, a.k, a.lam) == (q * q, q * q + q, q, 1)
    assert len(find_resolution(a).classes) == q + 1


@pytest.mark.parametrize("q", [2, 3, 4])
def test_standard_identities(q):
    for s in (projective_plane(field_of_order(q)), affine_plane(field_of_order(q))):
        d = design_from_plane(s)
        b, r = design_counts(d)
        assert b * d.k == d.v * r
        assert r * (d.k - 1) == d.lam * (d.v - 1)
        assert b * math.comb(d.k, 2) == d.lam * math.comb(d.v, 2)


@pytest.mark.parametrize("v,t", [(v, t) for v in range(1, 7) for t in range(1, min(v, 3) + 1)])
def test_k_equals_t(v, t):
    found = k_equals_t_designs(v, t)
    assert len(found) == 1
    assert found[0].lam == 1
    assert set(found[0].blocks) == set(itertools.combinations(range(v), t))


def test_k_equals_t_limits():
    with pytest.raises(LimitExceeded):
        k_equals_t_designs(8, 3)
    with pytest.raises(DesignError):
        k_equals_t_designs(3, 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7).flatmap(lambda v: st.tuples(
    st.just(v), st.integers(1, v - 1).flatmap(lambda k: st.tuples(
        st.just(k), st.sets(st.sets(st.integers(0, v - 1), min_size=k, max_size=k)
                            .map(lambda s: tuple(sorted(s))), min_size=1, max_size=12))))))
def test_verify_design_agrees_with_brute_force(case):
    v, (k, blocks) = case
    blocks = sorted(blocks)
    for t in range(1, k + 1):
        counts = [sum(set(T) <= set(b) for b in blocks)
                  for T in itertools.combinations(range(v), t)]
        want = counts[0] if len(set(counts)) == 1 and counts[0] >= 1 else None
        assert verify_design(v, blocks, t) == want


def test_block_validation():
    with pytest.raises(DesignError):
        BlockDesign.from_blocks(3, [(0, 0)], 1)
    with pytest.raises(DesignError):
        BlockDesign.from_blocks(3, [(0, 3)], 1)
    with pytest.raises(DesignError):
        BlockDesign.from_blocks(3, [(0, 1), (2,)], 1)
    with pytest.raises(DesignError):
        BlockDesign.from_blocks(3, [(0, 1), (1, 0)], 1)


def test_bad_resolution_rejected():
    d = load_fixture("nine-point-design")
    bad = Resolution((d.blocks[:3], d.blocks[3:6], d.blocks[6:9], d.blocks[9:11]))
    with pytest.raises(DesignError):
        bad.validate(d)


def test_round_trip_and_parse():
    d = load_fixture("nine-point-design")
    assert BlockDesign.from_dict(d.to_dict()) == d
    assert parse_design_json({"v": 9, "blocks": [list(b) for b in d.blocks]}, 2) == d
    with pytest.raises(DesignError):
        parse_design_json({"blocks": []}, 2)
