import itertools

import pytest

from fieldlab.errors import LimitExceeded
from fieldlab.fingeo import (IncidenceStructure, affine_plane, count_bases, one_dim_subspaces,
                             projective_plane, subspaces_of_dim, vector, verify_plane_axioms)
from fieldlab.gfield import field_of_order, make_field


def gaussian_binomial(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_lines_through_origin(p):
    spaces = one_dim_subspaces(make_field(p), 2)
    assert len(spaces) == p + 1
    for s in spaces:
        assert len(s) == p


def test_one_dim_subspaces_of_f3_squared():
    f3 = make_field(3)
    keys = [[v.key for v in s] for s in one_dim_subspaces(f3, 2)]
    assert keys == [[(0, 0), (0, 1), (0, 2)], [(0, 0), (1, 0), (2, 0)],
                    [(0, 0), (1, 1), (2, 2)], [(0, 0), (1, 2), (2, 1)]]


@pytest.mark.parametrize("q,n,d", [(2, 3, 1), (2, 3, 2), (3, 3, 2), (2, 4, 2), (4, 2, 1),
                                   (5, 3, 1), (5, 3, 2), (3, 2, 0), (3, 2, 2)])
def test_subspace_counts_match_gaussian_binomial(q, n, d):
    spaces = subspaces_of_dim(field_of_order(q), n, d)
    assert len(spaces) == gaussian_binomial(n, d, q)
    assert all(len(s) == q ** d for s in spaces)
    assert len({tuple(v.key for v in s) for s in spaces}) == len(spaces)


def test_duality_in_f5_cubed():
    f5 = make_field(5)
    assert len(subspaces_of_dim(f5, 3, 2)) == len(subspaces_of_dim(f5, 3, 1)) == 31


def test_subspaces_are_closed():
    f3 = make_field(3)
    for s in subspaces_of_dim(f3, 3, 2):
        members = set(s)
        for u, w in itertools.product(s, repeat=2):
            for a in f3.elements():
                combo = vector(f3, [(a * x + y).index for x, y in zip(u.coords, w.coords)])
                assert combo in members


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_ordered_bases(q):
    assert count_bases(field_of_order(q)) == (q * q - 1) * (q * q - q)


def test_space_limit():
    with pytest.raises(LimitExceeded):
        subspaces_of_dim(make_field(11), 4, 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_affine_plane(q):
    s = affine_plane(field_of_order(q))
    assert len(s.points) == q * q and len(s.lines) == q * q + q
    assert all(len(l) == q for l in s.lines)
    sets = [set(l) for l in s.lines]
    for x, y in itertools.combinations(range(q * q), 2):
        assert sum(1 for l in sets if x in l and y in l) == 1
    # parallel classes: q lines per slope, pairwise disjoint
    for k in range(q + 1):
        group = sets[k * q:(k + 1) * q]
        assert set().union(*group) == set(range(q * q))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_projective_plane(q):
    s = projective_plane(field_of_order(q))
    n = q * q + q + 1
    assert len(s.points) == n and len(s.lines) == n
    assert all(len(l) == q + 1 for l in s.lines)
    assert verify_plane_axioms(s) == []
    assert all(len(s.lines_through(x)) == q + 1 for x in range(n))
    assert [s.points[i] for i in s.lines[-1]] == [p for p in s.points if p.startswith("inf")]


def test_projective_plane_is_self_dual():
    s = projective_plane(field_of_order(3))
    dual = IncidenceStructure(tuple(f"L{k}" for k in range(len(s.lines))),
                              tuple(tuple(s.lines_through(x)) for x in range(len(s.points))))
    assert verify_plane_axioms(dual) == []


def test_fano_plane_labels(fano):
    assert fano.points[:4] == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
    assert fano.points[4:] == ("inf(0)", "inf(1)", "inf(vert)")


def test_violations_reported(fano):
    missing = IncidenceStructure(fano.points, fano.lines[1:], "generic")
    rules = [v.rule for v in verify_plane_axioms(missing)]
    assert rules == ["points-on-one-line"]
    affine = affine_plane(make_field(2))
    assert [v.rule for v in verify_plane_axioms(affine)] == ["lines-meet-once"]
    mixed = IncidenceStructure(fano.points, fano.lines[:-1] + ((4, 5),), "generic")
    assert "uniform-line-size" in [v.rule for v in verify_plane_axioms(mixed)]


def test_plane_limit():
    with pytest.raises(LimitExceeded):
        projective_plane(make_field(13))


def test_incidence_round_trip(fano):
    assert IncidenceStructure.from_dict(fano.to_dict()) == fano
    with pytest.raises(ValueError):
        IncidenceStructure(("a", "a"), ((0, 1),))
