"""V(4,3) arithmetic, the two bases, and the PG(3,3) taxonomy."""

from collections import Counter

import pytest

from tetradgeom import gf3


def test_trit_arithmetic():
    a, b = (1, 2, 0, 1), (2, 2, 1, 0)
    assert gf3.t_add(a, b) == (0, 1, 1, 1)
    assert gf3.t_sub(a, b) == (2, 0, 2, 1)
    assert gf3.t_neg(a) == (2, 1, 0, 2)
    assert gf3.t_scale(2, a) == (2, 1, 0, 2)
    assert gf3.t_add(a, gf3.t_neg(a)) == gf3.ZERO
    assert len(gf3.ALL81) == 81


def test_trit_strings():
    assert gf3.trit_str((1, 2, 2, 1)) == "1221"
    assert gf3.trit_from_str("1221") == (1, 2, 2, 1)
    with pytest.raises(ValueError):
        gf3.trit_from_str("123")
    with pytest.raises(ValueError):
        gf3.trit_from_str("1234")


def test_canon():
    assert gf3.canon((2, 1, 2, 1)) == (1, 2, 1, 2)
    assert gf3.canon((0, 2, 0, 1)) == (0, 1, 0, 2)
    assert gf3.canon((1, 0, 0, 0)) == (1, 0, 0, 0)
    with pytest.raises(ValueError):
        gf3.canon(gf3.ZERO)


def test_change_basis_frozen_values():
    # basis vectors map to coordinate vectors and back
    assert gf3.change_basis((1, 0, 0, 0)) == (1, 2, 2, 1)
    assert gf3.change_basis((0, 0, 0, 1)) == (1, 1, 1, 1)
    assert gf3.change_basis((1, 2, 2, 1)) == (1, 0, 0, 0)
    assert gf3.change_basis((1, 1, 1, 1)) == (0, 0, 0, 1)
    assert gf3.change_basis(gf3.ZERO) == gf3.ZERO


def test_change_basis_involutory_and_linear():
    for v in gf3.ALL81:
        assert gf3.change_basis(gf3.change_basis(v)) == v
    for v in gf3.ALL81[:12]:
        for w in gf3.ALL81[::9]:
            assert gf3.change_basis(gf3.t_add(v, w)) == gf3.t_add(
                gf3.change_basis(v), gf3.change_basis(w)
            )


def test_weight_pair_census():
    census = Counter(
        (gf3.wt_std(v), gf3.wt_alt(v)) for v in gf3.ALL81
    )
    assert census == Counter(
        {(0, 0): 1, (1, 4): 8, (2, 2): 24, (3, 3): 32, (4, 1): 8, (4, 4): 8}
    )


def test_hamming_distances():
    a, b = (1, 1, 1, 1), (1, 1, 1, 2)
    assert gf3.hd_std(a, b) == 1
    assert gf3.hd_std(a, a) == 0
    assert gf3.hd_alt(a, b) == gf3.wt_alt(gf3.t_sub(a, b))
    # the troika spacing: 0000, 0111, 0222 are pairwise hd 3 in both bases
    t = [(0, 0, 0, 0), (0, 1, 1, 1), (0, 2, 2, 2)]
    for i in range(3):
        for j in range(i + 1, 3):
            assert gf3.hd_std(t[i], t[j]) == 3
            assert gf3.hd_alt(t[i], t[j]) == 3


def test_direction_families():
    assert len(gf3.DIRECTIONS) == 8
    assert set(gf3.FAMILY_EVEN) | set(gf3.FAMILY_ODD) == set(gf3.DIRECTIONS)
    for d in gf3.DIRECTIONS:
        assert d[3] == 1  # normalized to last digit 1
        assert gf3.wt_std(d) == 4
        assert gf3.is_line_direction(d)
    for d in gf3.FAMILY_EVEN:
        assert gf3.direction_family(d) == 0
        assert gf3.direction_family(gf3.t_neg(d)) == 0
        assert gf3.wt_alt(d) == 1  # the even family is the alt basis
    for d in gf3.FAMILY_ODD:
        assert gf3.direction_family(d) == 1
        assert gf3.direction_family(gf3.t_neg(d)) == 1
        assert gf3.wt_alt(d) == 4
    with pytest.raises(ValueError):
        gf3.direction_family((1, 1, 0, 1))
    assert not gf3.is_line_direction((1, 1, 0, 1))


def test_pg33_counts():
    assert len(gf3.all_points()) == 40
    assert len(gf3.all_lines()) == 130
    assert len(gf3.all_planes()) == 40


def test_line_through():
    ln = gf3.line_through((1, 0, 0, 0), (0, 1, 0, 0))
    assert len(ln.points) == 4
    assert len(ln.vectors) == 9
    assert (1, 1, 0, 0) in ln.vectors and (1, 2, 0, 0) in ln.vectors


def test_plane_kind_census():
    census = Counter(gf3.plane_kind(pl) for pl in gf3.all_planes())
    assert census == Counter({0: 8, 1: 16, 2: 12, 3: 4})
    # the two worked examples: sum-zero plane has no vertex, a coordinate
    # plane has three
    assert gf3.plane_kind(gf3.plane_from_functional((1, 1, 1, 1))) == 0
    assert gf3.plane_kind(gf3.plane_from_functional((0, 0, 0, 1))) == 3


def test_line_kind_census():
    census = Counter(gf3.line_kind(ln) for ln in gf3.all_lines())
    assert census == Counter({1: 6, 2: 24, 3: 16, 4: 12, 5: 16, 6: 48, 7: 8})


def test_line_kind_worked_examples():
    # an axis pair: two weight-1 points, two weight-2 -> kind 1
    ln = gf3.line_through((1, 0, 0, 0), (0, 1, 0, 0))
    assert gf3.weight_pattern(ln) == (2, 2, 0, 0)
    assert gf3.line_kind(ln) == 1
    # the all-weight-3 lines are kind 7
    ln7 = gf3.line_through((0, 1, 1, 1), (1, 0, 1, 2))
    assert gf3.weight_pattern(ln7) == (0, 0, 4, 0)
    assert gf3.line_kind(ln7) == 7


def test_plane_subspaces():
    for pl in gf3.all_planes()[:8]:
        subs = gf3.plane_subspaces(pl)
        assert len(subs) == 13
        for sub in subs:
            assert sub.vectors <= pl.vectors
            assert len(sub.points) == 4


def test_segre_plane_line_split():
    pl = gf3.plane_from_functional((1, 1, 1, 1))
    kinds = Counter(gf3.line_kind(s) for s in gf3.plane_subspaces(pl))
    assert kinds == Counter({4: 3, 6: 6, 3: 4})


def test_plane_from_functional():
    pl = gf3.plane_from_functional((1, 1, 1, 1))
    assert pl.functional == (1, 1, 1, 1)
    assert len(pl.points) == 13 and len(pl.vectors) == 27
    # the functional annihilates the plane
    for v in pl.vectors:
        assert sum(c * x for c, x in zip(pl.functional, v)) % 3 == 0
    # scaling the functional names the same plane
    assert gf3.plane_from_functional((2, 2, 2, 2)) is pl
    with pytest.raises(ValueError):
        gf3.plane_from_functional(gf3.ZERO)


def test_gf3_rank():
    assert gf3.gf3_rank([(1, 0, 0, 0), (0, 1, 0, 0)]) == 2
    assert gf3.gf3_rank([(1, 0, 0, 0), (2, 0, 0, 0)]) == 1
    assert gf3.gf3_rank([]) == 0
    assert (
        gf3.gf3_rank(
            [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
        )
        == 4
    )
