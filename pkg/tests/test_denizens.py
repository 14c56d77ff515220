"""Tests for denizens: classification, sections, fans, and enneads."""

from collections import Counter
from itertools import combinations

import pytest

from tetradgeom import denizens, gf3
from tetradgeom.gf2 import perp, span

#: the canonical Segre denizen decomposes into the labelled subspace
#: <(1,2,2,1), (2,1,2,1)> and its two cosets along (2,2,1,1)
SLAB_SUBSPACE = ((1, 2, 2, 1), (2, 1, 2, 1))
SLAB_STEP = (2, 2, 1, 1)
FIRST_SLAB = {0xFF, 0x33, 0xCC, 0xF0, 0x0F, 0xCF, 0xF3, 0x3F, 0xFC}

#: a regulus / opposite-regulus pair: the weight-2 lines of the two C2
#: triplets living in the 3-flat spanned by the third and fourth tetrad
#: lines
REGULUS = (
    frozenset({0x0C, 0x30, 0x3C}),
    frozenset({0x1C, 0x28, 0x34}),
    frozenset({0x14, 0x2C, 0x38}),
)
OPPOSITE_REGULUS = (
    frozenset({0x14, 0x28, 0x3C}),
    frozenset({0x0C, 0x34, 0x38}),
    frozenset({0x1C, 0x2C, 0x30}),
)


def test_triplet_census(ctx):
    trips = ctx.triplets
    assert len(trips) == 40
    census = Counter(d.kind for t in trips for d in t)
    assert census == {"segre": 24, "C1": 48, "C2": 36, "C3": 12}
    omega4 = ctx.frame.orbit(4)
    for t in trips:
        # the three kinds agree and the cosets partition the orbit
        assert len({d.kind for d in t}) == 1
        assert all(len(d.points) == 27 and d.points <= omega4 for d in t)
        assert frozenset().union(*(d.points for d in t)) == omega4
        # shift 0 is the subspace itself, so it holds the unit point
        assert 0xFF in t[0].points
        assert 0xFF not in t[1].points and 0xFF not in t[2].points


def test_denizen_by_id(frame):
    den = denizens.denizen_by_id(frame, "1111:0")
    assert den.kind == "segre"
    assert den.shift_index == 0
    assert den.plane.functional == (1, 1, 1, 1)
    assert den.ident == "1111:0"
    # scaled functionals name the same plane
    same = denizens.denizen_by_id(frame, "2222:0")
    assert same.points == den.points


def test_denizen_by_id_rejects_malformed(frame):
    for bad in ("111:0", "1111:5", "1111", "1x11:0", "0000:0", "11111:0"):
        with pytest.raises(ValueError):
            denizens.denizen_by_id(frame, bad)


def test_classify_canonical_segre(frame):
    den = denizens.denizen_by_id(frame, "1111:0")
    kind, cert = denizens.classify(frame, den)
    assert kind == "segre"
    assert cert == {
        "lines": 27,
        "per_point": [3],
        "span_rank": 8,
        "structural_kind": "segre",
    }


def test_classification_routes_agree_everywhere(ctx):
    # the plane-kind route and the purely structural route always match
    for t in ctx.triplets:
        for d in t:
            kind, cert = denizens.classify(ctx.frame, d)
            assert cert["structural_kind"] == kind, d.ident


def test_segre_slab_decomposition(frame):
    den = denizens.denizen_by_id(frame, "1111:0")
    sub = gf3.line_through(*SLAB_SUBSPACE)
    slabs = []
    for j in range(3):
        s = gf3.t_scale(j, SLAB_STEP)
        slabs.append(
            frozenset(
                frame.point_from_trits(gf3.t_add(v, s)) for v in sub.vectors
            )
        )
    assert slabs[0] == FIRST_SLAB
    assert frozenset().union(*slabs) == den.points
    assert sum(len(s) for s in slabs) == 27


def test_c2_line_of_canonical_c2(frame):
    den = denizens.denizen_by_id(frame, "0011:0")
    assert den.kind == "C2"
    assert denizens.c2_line(frame, den) == {0x0C, 0x30, 0x3C}
    kind, cert = denizens.classify(frame, den)
    assert cert == {
        "lines": 36,
        "per_point": [4],
        "span_rank": 6,
        "structural_kind": "C2",
    }


def test_c2_line_rejects_other_kinds(frame):
    den = denizens.denizen_by_id(frame, "1111:0")
    with pytest.raises(ValueError):
        denizens.c2_line(frame, den)


def test_c3_spans_perp_of_weight1_point(frame):
    den = denizens.denizen_by_id(frame, "0001:0")
    assert den.kind == "C3"
    kind, cert = denizens.classify(frame, den)
    assert cert == {
        "lines": 0,
        "per_point": [0],
        "span_rank": 7,
        "structural_kind": "C3",
    }
    f = perp(den.points)
    assert f.rank == 1
    (pt,) = f.points()
    assert frame.line_weight(pt) == 1


def test_c1_observed_profile(frame):
    den = denizens.denizen_by_id(frame, "1220:0")
    assert den.kind == "C1"
    kind, cert = denizens.classify(frame, den)
    assert cert == {
        "lines": 18,
        "per_point": [2],
        "span_rank": 8,
        "structural_kind": "C1",
    }


def test_c2_census(ctx):
    census = denizens.c2_census(ctx.frame, ctx.triplets)
    assert census["triplet_count"] == 12
    assert census["distinct_lines"] == 36
    assert census["pairs_covered"] == [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    ]
    for pair, checks in census["reguli"].items():
        assert all(checks.values()), (pair, checks)


def test_regulus_pair_in_third_fourth_flat(ctx):
    frame = ctx.frame
    c2_triplets = [t for t in ctx.triplets if t[0].kind == "C2"]
    flat = span(frame.lines[2] | frame.lines[3])
    found = []
    for t in c2_triplets:
        lns = frozenset(denizens.c2_line(frame, d) for d in t)
        if span(set().union(*lns)) == flat:
            found.append(lns)
    assert sorted(found, key=sorted) == sorted(
        [frozenset(REGULUS), frozenset(OPPOSITE_REGULUS)], key=sorted
    )
    grid = flat.points() & frame.orbit(2)
    assert len(grid) == 9
    for ruling in (REGULUS, OPPOSITE_REGULUS):
        assert frozenset().union(*ruling) == grid
        for a, b in combinations(ruling, 2):
            assert not a & b
    for a in REGULUS:
        for b in OPPOSITE_REGULUS:
            assert len(a & b) == 1


def test_sections_census(frame):
    den = denizens.denizen_by_id(frame, "1111:0")
    secs = denizens.sections_of(frame, den)
    assert len(secs) == 13
    assert Counter(s["tag"] for s in secs) == {
        "S2(2)": 3,
        "3-generator": 6,
        "fan": 4,
    }
    for s in secs:
        assert len(s["points"]) == 9
        if s["tag"] == "S2(2)":
            assert len(s["rulings"]) == 2
            assert all(len(r) == 3 for r in s["rulings"])
        elif s["tag"] == "3-generator":
            assert len(s["generators"]) == 3
            assert s["transversal_grids"] == 3


def test_classify_section_rejects_bad_input(frame):
    c2 = denizens.denizen_by_id(frame, "0011:0")
    sub = gf3.plane_subspaces(c2.plane)[0]
    with pytest.raises(ValueError):
        denizens.classify_section(frame, c2, sub)
    segre = denizens.denizen_by_id(frame, "1111:0")
    outside = gf3.line_through((1, 0, 0, 0), (0, 1, 0, 0))
    with pytest.raises(ValueError):
        denizens.classify_section(frame, segre, outside)


def test_fan_triplets_of_canonical_segre(frame):
    den = denizens.denizen_by_id(frame, "1111:0")
    fts = denizens.fan_triplets(frame, den)
    assert [ft.weight3_pair for ft in fts] == [
        (0, 1, 1, 1),
        (1, 0, 1, 1),
        (1, 1, 0, 1),
        (1, 1, 1, 0),
    ]
    # the centre lines are exactly the four tetrad lines; the zero digit
    # of the weight-3 pair names the line
    assert [ft.centre_line for ft in fts] == list(frame.lines)
    for ft in fts:
        assert len(ft.fans) == 3
        assert frozenset().union(*ft.fans) == den.points
        assert set(ft.centres) == set(ft.centre_line)


def test_fan_decomposition_troikas(frame):
    den = denizens.denizen_by_id(frame, "1111:0")
    fts = denizens.fan_triplets(frame, den)
    ft = next(ft for ft in fts if ft.weight3_pair == (0, 1, 1, 1))
    fan = next(f for f in ft.fans if 0xFF in f)
    troikas, centre = denizens.fan_decompose(frame, fan)
    assert len(troikas) == 3
    assert frozenset({0xFF, 0xD5, 0xAB}) in troikas
    assert centre == 0x81
    for t in troikas:
        a, b, c = sorted(t)
        assert a ^ b ^ c == centre


def test_fans_per_point(frame):
    den = denizens.denizen_by_id(frame, "1111:0")
    counts = denizens.fans_per_point(frame, den)
    assert set(counts) == set(den.points)
    assert set(counts.values()) == {4}


def test_recover_tetrad(frame):
    for ident in ("1111:0", "1111:1", "1221:2"):
        den = denizens.denizen_by_id(frame, ident)
        assert den.kind == "segre"
        assert denizens.recover_tetrad(frame, den) == set(frame.lines)


def test_fan_decompose_rejects_non_fans(frame):
    den = denizens.denizen_by_id(frame, "1111:0")
    fts = denizens.fan_triplets(frame, den)
    fan = fts[0].fans[0]
    with pytest.raises(ValueError):  # only eight points
        denizens.fan_decompose(frame, sorted(fan)[:8])
    with pytest.raises(ValueError):  # a point off the weight-4 orbit
        denizens.fan_decompose(frame, sorted(fan)[:8] + [0x01])
    # a grid section contains generator pairs, so it is not a fan
    grid = next(
        s["points"]
        for s in denizens.sections_of(frame, den)
        if s["tag"] == "S2(2)"
    )
    with pytest.raises(ValueError):
        denizens.fan_decompose(frame, grid)


def test_ennead(ctx):
    t1, t2 = ctx.triplets[0], ctx.triplets[1]
    cells = denizens.ennead(ctx.frame, t1, t2)
    assert len(cells) == 9
    assert all(len(c) == 9 for c in cells)
    assert frozenset().union(*cells) == ctx.frame.orbit(4)
    assert sum(len(c) for c in cells) == 81  # pairwise disjoint


def test_ennead_rejects_equal_planes(ctx):
    t1 = ctx.triplets[0]
    with pytest.raises(ValueError):
        denizens.ennead(ctx.frame, t1, t1)
