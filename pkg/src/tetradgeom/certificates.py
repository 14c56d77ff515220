"""Executable certificates for every headline property of the geometry.

Each check is a function Context -> witness dict, raising CheckFailed
with structured data when a property fails.  The runner turns the
registered checks into Certificate records (name, claim, status, witness,
elapsed_ms) in a fixed order, independent of how many worker threads
execute them.  The Context carries the shared artifacts (frame, groups,
quadric, solids, denizens) and builds each lazily exactly once.

Witness values are JSON-safe throughout: ints, strings, bools, lists and
string-keyed dicts only.
"""

from __future__ import annotations

import threading
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from random import Random

from . import anf, denizens, gf3, quadric, spreads
from .gf2 import (
    IDENTITY,
    PAIR_MASKS,
    UNIT,
    apply,
    compose,
    inverse,
    linmap_power,
    point_str,
    quadric_value,
    span,
    symplectic_product,
)
from .tetrad import (
    Frame,
    build_frame,
    build_group81,
    build_stabilizer,
    induced_matrix,
    mat3_apply,
    point_orbits,
    stabilizer_generators,
    subspace_orbit_partition,
)


class CheckFailed(Exception):
    def __init__(self, message: str, **data):
        super().__init__(message)
        self.data = data


def require(cond, message: str, **data):
    if not cond:
        raise CheckFailed(message, **data)


class Context:
    """Lazily built shared artifacts, safe to read from worker threads."""

    def __init__(self, frame: Frame | None = None):
        self.frame = frame if frame is not None else build_frame()
        self._lock = threading.RLock()
        self._cache = {}

    def _get(self, name, builder):
        with self._lock:
            if name not in self._cache:
                self._cache[name] = builder()
            return self._cache[name]

    @property
    def g81(self):
        return self._get("g81", lambda: build_group81(self.frame))

    @property
    def invariants(self):
        return self._get("invariants", lambda: anf.build_invariants(self.frame))

    @property
    def quadric_points(self):
        return self._get("quadric_points", quadric.build_quadric)

    @property
    def solids(self):
        return self._get(
            "solids", lambda: quadric.singular_solids(self.quadric_points)
        )

    @property
    def system_tags(self):
        return self._get("system_tags", lambda: quadric.system_tags(self.solids))

    @property
    def stabilizer(self):
        return self._get("stabilizer", lambda: build_stabilizer(self.frame))

    @property
    def spreads(self):
        return self._get("spreads", lambda: spreads.all_spreads(self.g81))

    @property
    def triplets(self):
        return self._get("triplets", lambda: denizens.all_triplets(self.frame))

    @property
    def segres(self):
        return self._get(
            "segres",
            lambda: tuple(
                d for t in self.triplets for d in t if d.kind == "segre"
            ),
        )


def point_json(frame: Frame, p: int) -> dict:
    return {"mask": p, "bits": point_str(p), "label": frame.label_str(p)}


def _line_json(frame, ln):
    return [point_json(frame, p) for p in sorted(ln)]


CHECKS = []


def check(name: str, claim: str):
    def deco(fn):
        CHECKS.append((name, claim, fn))
        return fn

    return deco


# ── 1 frame ──────────────────────────────────────────────────────────────


@check(
    "frame-wellformed",
    "four pairwise disjoint lines span PG(7,2); each order-3 rotation "
    "cycles its own line and fixes the other three pointwise; the 255 "
    "index labels are bijective with U_0000 the unit point",
)
def check_frame(ctx):
    f = ctx.frame
    allpts = set()
    for ln in f.lines:
        require(len(ln) == 3, "line does not have 3 points")
        a, b, c = sorted(ln)
        require(a ^ b == c, "line is not closed under XOR",
                line=[point_str(p) for p in sorted(ln)])
        require(not (allpts & ln), "lines are not pairwise disjoint")
        allpts |= ln
    require(span(allpts).rank == 8, "tetrad does not span the space")
    for h in range(4):
        z = f.rotations[h]
        require(linmap_power(z, 3) == IDENTITY, f"rotation {h} has order != 3")
        require(z != IDENTITY, f"rotation {h} is the identity")
        u0, u1, u2 = f.points[h]
        require(
            apply(z, u0) == u1 and apply(z, u1) == u2 and apply(z, u2) == u0,
            f"rotation {h} does not cycle its line",
        )
        for k in range(4):
            if k != h:
                for p in f.lines[k]:
                    require(
                        apply(z, p) == p,
                        f"rotation {h} moves a point of line {k}",
                    )
    require(
        not f.label_collisions and len(f.label_table()) == 255,
        "labels are not bijective",
        collisions=len(f.label_collisions),
    )
    require(f.label((0, 0, 0, 0)) == UNIT, "U_0000 is not the unit point")
    return {
        "lines": [[point_str(p) for p in sorted(ln)] for ln in f.lines],
        "labelled_points": len(f.label_table()),
    }


# ── 2 orbits ─────────────────────────────────────────────────────────────


@check(
    "orbit-census",
    "line weight splits the 255 points into classes of sizes 12/54/108/81 "
    "which are exactly the orbits of the stabilizer generators",
)
def check_orbits(ctx):
    f = ctx.frame
    sizes = tuple(len(f.orbit(r)) for r in (1, 2, 3, 4))
    require(sizes == (12, 54, 108, 81), "line-weight census is wrong", sizes=sizes)
    orbs = point_orbits(stabilizer_generators(f).values())
    require(len(orbs) == 4, "generator action has wrong orbit count",
            count=len(orbs))
    for r in (1, 2, 3, 4):
        require(
            f.orbit(r) in orbs,
            f"line-weight class {r} is not a group orbit",
        )
    return {"sizes": list(sizes), "group_orbit_sizes": sorted(len(o) for o in orbs)}


# ── 3 symplectic form ────────────────────────────────────────────────────


@check(
    "symplectic-form",
    "the form is alternating and nondegenerate with Gram matrix pairing "
    "coordinate i with 9-i, and the quadratic form polarizes to it",
)
def check_form(ctx):
    for i in range(1, 9):
        for j in range(1, 9):
            expect = 1 if i + j == 9 else 0
            require(
                symplectic_product(1 << (i - 1), 1 << (j - 1)) == expect,
                f"Gram entry ({i},{j}) wrong",
            )
    for x in range(256):
        require(symplectic_product(x, x) == 0, "form is not alternating", x=x)
    for x in range(256):
        for y in range(256):
            pol = quadric_value(x ^ y) ^ quadric_value(x) ^ quadric_value(y)
            if pol != symplectic_product(x, y):
                raise CheckFailed("polarization identity fails", x=x, y=y)
    rng = Random(20260819)
    for _ in range(512):
        x, y, z = rng.randrange(256), rng.randrange(256), rng.randrange(256)
        require(
            symplectic_product(x ^ y, z)
            == symplectic_product(x, z) ^ symplectic_product(y, z),
            "form is not additive",
        )
    for x in range(1, 256):
        require(
            any(symplectic_product(x, y) for y in range(1, 256)),
            "form is degenerate",
            x=x,
        )
    return {"pairs_checked": 256 * 256}


# ── 4, 5 quadric ─────────────────────────────────────────────────────────


@check(
    "quadric-pointset",
    "the quadric has 135 points, the union of the weight-2 and weight-4 "
    "orbits; all twelve tetrad points are external",
)
def check_quadric_points(ctx):
    f = ctx.frame
    qp = ctx.quadric_points
    require(len(qp) == 135, "quadric size wrong", size=len(qp))
    require(qp == f.orbit(2) | f.orbit(4), "quadric is not orbit2 + orbit4")
    for p in f.orbit(1):
        require(quadric_value(p) == 1, "a tetrad point lies on the quadric",
                point=point_str(p))
    return {"points": len(qp), "external_tetrad_points": 12}


@check(
    "quadric-uniqueness",
    "of the 256 forms sharing the degree-2 part, exactly one avoids all "
    "twelve tetrad points: the adopted form, linear part the all-ones "
    "functional",
)
def check_quadric_unique(ctx):
    cert = quadric.unique_form_certificate(ctx.frame)
    require(
        cert["survivors"] == [0xFF],
        "uniqueness filter did not leave exactly the adopted form",
        survivors=cert["survivors"],
    )
    return cert


# ── 6 invariant polynomials ──────────────────────────────────────────────

VALUE_TABLE = {1: (1, 1, 1), 2: (0, 1, 0), 3: (1, 0, 0), 4: (0, 0, 0)}


@check(
    "invariant-polynomials",
    "the degree-2/4/6 flat-indicator sums are constant on the orbits per "
    "the value table; their sum vanishes exactly on the weight-4 orbit, "
    "equals the explicit symmetric-sum sextic coefficient-for-"
    "coefficient, and polarizes to the four coordinate pairs",
)
def check_invariants(ctx):
    f = ctx.frame
    inv = ctx.invariants
    require(
        (inv.q2.degree(), inv.q4.degree(), inv.q6.degree()) == (2, 4, 6),
        "invariant degrees wrong",
    )
    for r, expected in VALUE_TABLE.items():
        row = inv.value_row(f.orbit(r))
        require(row == expected, f"value row for orbit {r} wrong",
                orbit=r, row=list(row), expected=list(expected))
    # dual route: the ANF of the closed-form quadratic equals q2
    tt = 0
    for x in range(256):
        tt |= quadric_value(x) << x
    require(
        anf.Anf8.from_truth_table(tt) == inv.q2,
        "q2 differs from the ANF of the quadratic form",
    )
    require(
        inv.q_lw4.projective_zeros() == f.orbit(4),
        "sextic zero set is not the weight-4 orbit",
    )
    require(
        inv.q_lw4 == anf.explicit_lw4_sextic(),
        "flat-indicator sextic differs from the symmetric-sum expansion",
    )
    pair6 = anf.symmetric_parts()["pair6"]
    require(
        inv.q6.homogeneous_part(6) == pair6,
        "degree-6 part of q6 is not the four complement monomials",
    )
    wedge = frozenset(((1, 8), (2, 7), (3, 6), (4, 5)))
    require(anf.polarize6(inv.q6) == wedge, "polarization of q6 wrong")
    require(anf.polarize6(inv.q_lw4) == wedge, "polarization of sextic wrong")
    for name, part in anf.symmetric_parts().items():
        if part.degree() <= 5:
            require(
                anf.polarize6(part) == frozenset(),
                f"degree<=5 part {name} polarizes nontrivially",
            )
    return {
        "value_table": {r: list(v) for r, v in VALUE_TABLE.items()},
        "sextic_terms": len(inv.q_lw4.monomials()),
        "wedge": sorted(map(list, wedge)),
    }


# ── 7 stabilizer group ───────────────────────────────────────────────────


@check(
    "stabilizer-group",
    "the stabilizer closure has order 6^4*24 = 31104; the 81 diagonal "
    "maps form a normal subgroup on which conjugation acts F3-linearly; "
    "every element preserves the quadric",
)
def check_stabilizer(ctx):
    st = ctx.stabilizer
    require(st.order == 31104, "stabilizer order wrong", order=st.order)
    g81 = ctx.g81
    for m in g81.maps.values():
        require(m in st.elements, "diagonal map missing from stabilizer")
    for name, g in st.generators.items():
        ginv = inverse(g)
        mat = induced_matrix(g, g81)  # KeyError -> normality fails
        for sigma, a in g81.maps.items():
            conj = compose(compose(g, a), ginv)
            require(
                conj == g81.maps[mat3_apply(mat, sigma)],
                f"conjugation by {name} is not the induced linear map",
                sigma=list(sigma),
            )
    import numpy as np

    elements = sorted(st.elements)
    cols = np.array(elements, dtype=np.uint8)
    qt = np.array([quadric_value(v) for v in range(256)], dtype=np.uint8)
    bad = 0
    for p in sorted(ctx.quadric_points):
        img = np.zeros(len(elements), dtype=np.uint8)
        for i in range(8):
            if p >> i & 1:
                img ^= cols[:, i]
        bad += int(qt[img].sum())
    require(bad == 0, "some element moves the quadric", violations=bad)
    return {
        "order": st.order,
        "generators": sorted(st.generators),
        "quadric_checks": st.order * 135,
    }


# ── 8 PG(3,3) taxonomy ───────────────────────────────────────────────────


@check(
    "gf3-taxonomy",
    "PG(3,3) has 40 points, 130 lines, 40 planes with consistent "
    "incidences; vertex-count classes 8/16/12/4 and weight-pattern "
    "classes 6/24/16/12/16/48/8 coincide with the conjugation orbits",
)
def check_gf3(ctx):
    pts, lns, pls = gf3.all_points(), gf3.all_lines(), gf3.all_planes()
    require(
        (len(pts), len(lns), len(pls)) == (40, 130, 40),
        "PG(3,3) census wrong",
        census=[len(pts), len(lns), len(pls)],
    )
    for ln in lns:
        require(len(ln.points) == 4, "line has wrong point count")
        on = sum(1 for pl in pls if ln.vectors <= pl.vectors)
        require(on == 4, "line lies on wrong number of planes", planes=on)
    for pl in pls:
        require(len(pl.points) == 13, "plane has wrong point count")
        require(len(gf3.plane_subspaces(pl)) == 13, "plane has wrong line count")
    for p in pts:
        on = sum(1 for ln in lns if p in ln.points)
        require(on == 13, "point lies on wrong number of lines", lines=on)
    for a, b in combinations(pts, 2):
        through = [ln for ln in lns if a in ln.points and b in ln.points]
        if len(through) != 1:
            raise CheckFailed("point pair not on a unique line")

    pkinds = Counter(gf3.plane_kind(pl) for pl in pls)
    require(
        pkinds == Counter({0: 8, 1: 16, 2: 12, 3: 4}),
        "plane-kind census wrong",
        census={str(k): v for k, v in sorted(pkinds.items())},
    )
    lkinds = Counter(gf3.line_kind(ln) for ln in lns)
    require(
        lkinds == Counter({1: 6, 2: 24, 3: 16, 4: 12, 5: 16, 6: 48, 7: 8}),
        "line-kind census wrong",
        census={str(k): v for k, v in sorted(lkinds.items())},
    )

    # direction counts per plane kind, and direction-family purity of the
    # vertex-free planes
    expected_dirs = {0: 3, 1: 2, 2: 4, 3: 0}
    fam_count = Counter()
    for pl in pls:
        dirs = [p for p in pl.points if gf3.wt_std(p) == 4]
        k = gf3.plane_kind(pl)
        require(
            len(dirs) == expected_dirs[k],
            "direction count per plane kind wrong",
            kind=k,
            found=len(dirs),
        )
        if k == 0:
            fams = {gf3.direction_family(d) for d in dirs}
            require(len(fams) == 1, "vertex-free plane mixes direction families")
            fam_count[fams.pop()] += 1
            kinds = Counter(gf3.line_kind(s) for s in gf3.plane_subspaces(pl))
            require(
                kinds == Counter({4: 3, 6: 6, 3: 4}),
                "vertex-free plane line-kind split is not 3/6/4",
            )
    require(fam_count == Counter({0: 4, 1: 4}), "family split of Segre planes wrong")

    # conjugation orbits
    mats = [induced_matrix(g, ctx.g81) for g in stabilizer_generators(ctx.frame).values()]
    pl_orbits = subspace_orbit_partition(mats, [pl.vectors for pl in pls])
    by_kind = {}
    for pl in pls:
        by_kind.setdefault(gf3.plane_kind(pl), set()).add(pl.vectors)
    require(
        {frozenset(v) for v in by_kind.values()} == set(pl_orbits),
        "plane conjugation orbits differ from vertex-count classes",
    )
    ln_orbits = subspace_orbit_partition(mats, [ln.vectors for ln in lns])
    lby_kind = {}
    for ln in lns:
        lby_kind.setdefault(gf3.line_kind(ln), set()).add(ln.vectors)
    require(
        {frozenset(v) for v in lby_kind.values()} == set(ln_orbits),
        "line conjugation orbits differ from weight-pattern classes",
    )
    return {
        "plane_kinds": {str(k): v for k, v in sorted(pkinds.items())},
        "line_kinds": {str(k): v for k, v in sorted(lkinds.items())},
        "plane_orbit_sizes": sorted(len(o) for o in pl_orbits),
        "line_orbit_sizes": sorted(len(o) for o in ln_orbits),
    }


# ── 9 weights and distances ──────────────────────────────────────────────


@check(
    "weights-and-distances",
    "basis change is involutory; weights 2 and 3 agree in both bases, the "
    "eight coordinate vectors have alternative weight 4, and the sixteen "
    "weight-4 vectors split by family: even (the alternative basis, "
    "alt-weight 1) vs odd (alt-weight 4); orthogonality of labelled "
    "points is the parity of coordinate Hamming distance",
)
def check_weights(ctx):
    f = ctx.frame
    classes = Counter()
    for v in gf3.ALL81:
        require(
            gf3.change_basis(gf3.change_basis(v)) == v,
            "basis change is not involutory",
        )
        ws, wa = gf3.wt_std(v), gf3.wt_alt(v)
        classes[(ws, wa)] += 1
        if ws in (0, 2, 3):
            require(wa == ws, "weights 0/2/3 must agree in both bases",
                    vector=gf3.trit_str(v))
        elif ws == 1:
            require(wa == 4, "a coordinate vector must have alt-weight 4",
                    vector=gf3.trit_str(v))
        else:  # ws == 4: the family decides
            want = 1 if gf3.direction_family(v) == 0 else 4
            require(wa == want, "weight-4 alt-weight must follow the family",
                    vector=gf3.trit_str(v))
    require(
        classes
        == Counter(
            {(0, 0): 1, (1, 4): 8, (2, 2): 24, (3, 3): 32, (4, 1): 8, (4, 4): 8}
        ),
        "weight-pair census wrong",
        census={f"{k[0]},{k[1]}": n for k, n in sorted(classes.items())},
    )
    signed = {v for d in gf3.DIRECTIONS for v in (d, gf3.t_neg(d))}
    wt4 = {v for v in gf3.ALL81 if gf3.wt_std(v) == 4}
    require(signed == wt4, "weight-4 vectors are not the direction sign pairs")
    alt1 = {v for v in gf3.ALL81 if gf3.wt_alt(v) == 1}
    even = {v for d in gf3.FAMILY_EVEN for v in (d, gf3.t_neg(d))}
    require(alt1 == even, "alt-weight-1 vectors are not the even family")
    for rho in gf3.ALL81:
        p = f.point_from_trits(rho)
        for sigma in gf3.ALL81:
            q = f.point_from_trits(sigma)
            require(
                symplectic_product(p, q) == gf3.hd_std(rho, sigma) % 2,
                "orthogonality differs from Hamming parity",
                rho=gf3.trit_str(rho),
                sigma=gf3.trit_str(sigma),
            )
    return {
        "pairs_checked": 81 * 81,
        "weight_pair_census": {
            f"{ws},{wa}": n for (ws, wa), n in sorted(classes.items())
        },
    }


# ── 10, 11 spreads ───────────────────────────────────────────────────────


@check(
    "spreads",
    "each of the eight spreads has 85 lines partitioning the 255 points, "
    "contains the tetrad, and is invariant under its generator; distinct "
    "spread lines through a point number 8/4/2/1 by line weight 4/3/2/1",
)
def check_spreads(ctx):
    f = ctx.frame
    g81 = ctx.g81
    for ijk, sp in sorted(ctx.spreads.items()):
        require(len(sp.lines) == 85, "spread size wrong", ijk=list(ijk))
        seen = set()
        for ln in sp.lines:
            require(len(ln) == 3, "spread line size wrong")
            a, b, c = sorted(ln)
            require(a ^ b == c, "spread line not closed")
            require(not (seen & ln), "spread lines overlap")
            seen |= ln
        require(len(seen) == 255, "spread does not cover the points")
        for tl in f.lines:
            require(tl in set(sp.lines), "spread misses a tetrad line")
        for ln in sp.lines:
            require(
                frozenset(apply(sp.generator, p) for p in ln) == ln,
                "generator does not fix each spread line",
            )
    expected = {1: 1, 2: 2, 3: 4, 4: 8}
    for r, want in expected.items():
        counts = {spreads.distinct_line_count(g81, p) for p in f.orbit(r)}
        require(
            counts == {want},
            f"distinct-line count on orbit {r} wrong",
            orbit=r,
            found=sorted(counts),
        )
    # zero-digit degeneracy: any sigma with a zero digit has fixed points
    for sigma, m in g81.maps.items():
        fixed = any(apply(m, p) == p for p in range(1, 256))
        require(
            fixed == (0 in sigma),
            "fixed-point-freeness does not match all-nonzero digits",
            sigma=gf3.trit_str(sigma),
        )
    lines_u = {frozenset(spreads.line_through(g81, ijk, f.unit)) for ijk in spreads.ALL_IJK}
    require(len(lines_u) == 8, "unit point does not lie on 8 distinct lines")
    return {
        "spreads": 8,
        "lines_through_unit": [
            [point_str(p) for p in sorted(ln)] for ln in sorted(lines_u, key=min)
        ],
    }


@check(
    "orbit4-lines",
    "a direction orbit of a weight-4 point is a line inside the orbit "
    "exactly for the sixteen weight-4 directions; each direction class "
    "partitions the orbit into the 27 spread lines it contains",
)
def check_orbit4_lines(ctx):
    f = ctx.frame
    g81 = ctx.g81
    omega4 = f.orbit(4)
    seen_pairs = set()
    for lam in gf3.ALL81:
        if lam == gf3.ZERO:
            continue
        pair = frozenset((lam, gf3.t_neg(lam)))
        if pair in seen_pairs:
            continue
        seen_pairs.add(pair)
        want = gf3.wt_std(lam) == 4
        for p in omega4:
            got = spreads.orbit4_line_test(f, g81, p, lam)
            require(
                got == want,
                "line test disagrees with weight-4 criterion",
                direction=gf3.trit_str(lam),
                point=point_str(p),
            )
    require(len(seen_pairs) == 40, "direction pair count wrong")
    classes = spreads.parallel_classes(f, g81)
    for ijk, lines in sorted(classes.items()):
        require(len(lines) == 27, "parallel class size wrong", ijk=list(ijk))
        covered = set()
        for ln in lines:
            require(ln <= omega4, "parallel line leaves the orbit")
            require(not (covered & ln), "parallel lines overlap")
            covered |= ln
        require(covered == omega4, "parallel class does not cover the orbit")
        inside = {ln for ln in ctx.spreads[ijk].lines if ln <= omega4}
        require(set(lines) == inside, "parallel class is not the spread part")
    return {"direction_pairs": 40, "classes": 8, "lines_per_class": 27}


# ── 12 generator solids ──────────────────────────────────────────────────


@check(
    "generator-solids",
    "the quadric carries exactly 270 totally singular solids in two "
    "systems of 135 under the parity relation (an equivalence); the two "
    "spread-family solids of each weight-4 point are on the quadric, "
    "meet in a 7-point plane, and lie in opposite systems",
)
def check_solids(ctx):
    f = ctx.frame
    qp = ctx.quadric_points
    solids = ctx.solids
    require(len(solids) == 270, "solid count wrong", count=len(solids))
    solid_set = set(solids)
    for s in solids:
        require(len(s) == 15 and s <= qp, "solid is not 15 singular points")
        fl = span(s)
        require(fl.rank == 4 and fl.points() == s, "solid is not a 3-flat")
    tags = ctx.system_tags
    sizes = Counter(tags)
    require(
        sizes == Counter({0: 135, 1: 135}),
        "system sizes wrong",
        sizes=sorted(sizes.values()),
    )
    import numpy as np

    n = len(solids)
    rel = np.zeros((n, n), dtype=bool)
    for i in range(n):
        rel[i, i] = True
        for j in range(i + 1, n):
            rel[i, j] = rel[j, i] = quadric.same_system(solids[i], solids[j])
    t = np.array(tags)
    require(
        bool((rel == (t[:, None] == t[None, :])).all()),
        "parity relation is not the two-class equivalence",
    )
    tag_of = {s: tg for s, tg in zip(solids, tags)}
    for p in sorted(f.orbit(4)):
        even, odd = spreads.solid_pair(f, ctx.g81, p)
        se, so = frozenset(even.points()), frozenset(odd.points())
        require(se in solid_set and so in solid_set, "family span is not a solid")
        require(len(se & so) == 7, "solid pair does not meet in a plane",
                point=point_str(p))
        require(tag_of[se] != tag_of[so], "solid pair lies in one system",
                point=point_str(p))
        wts = Counter(f.line_weight(q) for q in se)
        require(
            wts == Counter({4: 9, 2: 6}),
            "solid weight profile wrong",
            point=point_str(p),
        )
        comps = [p & pm for pm in PAIR_MASKS]
        small = {comps[h] ^ comps[k] for h, k in combinations(range(4), 2)}
        require(
            se & so == {p} | small,
            "plane of intersection is not the pair-sum plane",
            point=point_str(p),
        )
    return {"solids": 270, "systems": [135, 135], "points_checked": 81}


# ── 13, 14 denizens ──────────────────────────────────────────────────────


@check(
    "denizen-classification",
    "the 40 plane triplets partition the weight-4 orbit into 120 "
    "denizens, classified 24/48/36/12 as Segre/C1/C2/C3; the structural "
    "line-profile certificate reproduces every tag",
)
def check_denizens(ctx):
    f = ctx.frame
    omega4 = f.orbit(4)
    kinds = Counter()
    c1_profiles = set()
    for t in ctx.triplets:
        union = set()
        for d in t:
            require(len(d.points) == 27, "denizen size wrong", ident=d.ident)
            require(not (union & d.points), "triplet cosets overlap")
            union |= d.points
        require(union == omega4, "triplet does not cover the orbit")
        for d in t:
            kind, cert = denizens.classify(f, d)
            require(
                cert["structural_kind"] == kind,
                "structural certificate disagrees with plane kind",
                ident=d.ident,
                cert={k: v for k, v in cert.items()},
            )
            kinds[kind] += 1
            if kind == "C1":
                c1_profiles.add(
                    (cert["lines"], tuple(cert["per_point"]), cert["span_rank"])
                )
            if kind == "C3":
                pp = span(d.points)
                require(pp.rank == 7, "C3 span is not a 6-flat", ident=d.ident)
                axis = [
                    q for q in range(1, 256)
                    if all(symplectic_product(q, b) == 0 for b in pp.basis)
                ]
                require(
                    len(axis) == 1 and f.line_weight(axis[0]) == 1,
                    "C3 perp is not a single weight-1 point",
                    ident=d.ident,
                )
    require(
        kinds == Counter({"segre": 24, "C1": 48, "C2": 36, "C3": 12}),
        "denizen class census wrong",
        census={k: v for k, v in sorted(kinds.items())},
    )
    return {
        "census": {k: v for k, v in sorted(kinds.items())},
        "c1_observed_profiles": sorted(
            [p[0], list(p[1]), p[2]] for p in c1_profiles
        ),
    }


@check(
    "c2-rogue-structure",
    "every C2 denizen is the weight-4 part of the perp of a line of the "
    "weight-2 orbit; the twelve C2 triplets yield 36 distinct lines "
    "forming regulus / opposite-regulus pairs in the six tetrad-pair "
    "3-flats, with the tetrad lines external",
)
def check_c2(ctx):
    census = denizens.c2_census(ctx.frame, ctx.triplets)
    require(census["triplet_count"] == 12, "C2 triplet count wrong")
    require(
        census["distinct_lines"] == 36,
        "C2 line count wrong",
        count=census["distinct_lines"],
    )
    require(len(census["pairs_covered"]) == 6, "not all tetrad pairs covered")
    for pair, checks in census["reguli"].items():
        for name, ok in checks.items():
            require(ok, f"regulus check {name} fails", pair=list(pair))
    return {
        "distinct_lines": census["distinct_lines"],
        "pairs": [list(p) for p in census["pairs_covered"]],
    }


# ── 15, 16, 17 sections, fans, recovery ──────────────────────────────────


@check(
    "sections",
    "the 13 sections of each of the 24 Segre denizens split 3/6/4 into "
    "grids, 3-generator sets and fans, following the line kind of the "
    "section direction; each tag's promised structure verifies",
)
def check_sections(ctx):
    for den in ctx.segres:
        secs = denizens.sections_of(ctx.frame, den)
        tags = Counter(s["tag"] for s in secs)
        require(
            tags == Counter({"S2(2)": 3, "3-generator": 6, "fan": 4}),
            "section split is not 3/6/4",
            ident=den.ident,
            tags=dict(tags),
        )
    return {"segres": len(ctx.segres), "sections_each": 13}


@check(
    "fans-troikas",
    "every fan of every Segre denizen decomposes uniquely into three "
    "troikas sharing one centre, which lies on a tetrad line",
)
def check_fans(ctx):
    f = ctx.frame
    tetrad_points = f.orbit(1)
    fans_seen = 0
    for den in ctx.segres:
        for ft in denizens.fan_triplets(f, den):
            for fan, centre in zip(ft.fans, ft.centres):
                troikas, c2 = denizens.fan_decompose(f, fan)
                require(c2 == centre, "fan centre not reproducible")
                require(
                    centre in tetrad_points,
                    "fan centre is not a tetrad point",
                    ident=den.ident,
                    centre=point_str(centre),
                )
                for tr in troikas:
                    a, b, c = sorted(tr)
                    require(a ^ b ^ c == centre, "troika centre wrong")
                fans_seen += 1
            require(
                len(ft.centre_line) == 3
                and ft.centre_line in set(f.lines),
                "centre line of a fan triplet is not a tetrad line",
                ident=den.ident,
            )
    require(fans_seen == 24 * 12, "fan count wrong", count=fans_seen)
    return {"fans": fans_seen, "troikas": fans_seen * 3}


@check(
    "tetrad-recovery",
    "each Segre denizen's four fan triplets have centre lines exactly "
    "the four tetrad lines, and each of its points lies in exactly four "
    "fans: the denizen alone recovers the tetrad",
)
def check_recovery(ctx):
    f = ctx.frame
    want = frozenset(f.lines)
    for den in ctx.segres:
        got = denizens.recover_tetrad(f, den)
        require(got == want, "recovered lines differ from the tetrad",
                ident=den.ident)
        per = denizens.fans_per_point(f, den)
        require(
            set(per.values()) == {4} and len(per) == 27,
            "points are not in exactly four fans each",
            ident=den.ident,
        )
    return {"segres_recovering": len(ctx.segres)}


# ── 18 enneads ───────────────────────────────────────────────────────────


@check(
    "enneads",
    "each of the 780 pairs of distinct triplets meets in nine 9-point "
    "cells partitioning the weight-4 orbit, the coset images of the "
    "9-element plane intersection",
)
def check_enneads(ctx):
    f = ctx.frame
    omega4 = f.orbit(4)
    pairs = 0
    for t1, t2 in combinations(ctx.triplets, 2):
        cells = denizens.ennead(f, t1, t2)
        require(len(cells) == 9, "ennead does not have nine cells")
        union = set()
        for cell in cells:
            require(len(cell) == 9, "ennead cell size wrong")
            require(not (union & cell), "ennead cells overlap")
            union |= cell
        require(union == omega4, "ennead does not cover the orbit")
        pairs += 1
    require(pairs == 780, "triplet pair count wrong", count=pairs)
    # coset structure, verified on a sample: differences of a cell lie in
    # the 9-element intersection of the two planes
    for t1, t2 in list(combinations(ctx.triplets, 2))[:40]:
        meet = t1[0].plane.vectors & t2[0].plane.vectors
        require(len(meet) == 9, "plane intersection is not 9 vectors")
        cells = denizens.ennead(f, t1, t2)
        for cell in cells:
            trits = [f.trits_from_point(p) for p in cell]
            for v in trits[1:]:
                require(
                    gf3.t_sub(v, trits[0]) in meet,
                    "ennead cell is not a coset of the intersection",
                )
    return {"pairs": pairs, "cells_per_pair": 9}


# ── 19 nine-caps ─────────────────────────────────────────────────────────


@check(
    "nine-caps",
    "each of the eight all-weight-3 direction planes labels a 9-cap on "
    "the quadric (pairwise product 1, secants off the quadric) whose "
    "nine translates partition the weight-4 orbit into disjoint caps",
)
def check_caps(ctx):
    f = ctx.frame
    qp = ctx.quadric_points
    omega4 = f.orbit(4)
    w3 = quadric.weight3_lines()
    require(len(w3) == 8, "weight-3 plane count wrong", count=len(w3))
    for ln in w3:
        cap = quadric.nine_cap(f, ln)
        require(len(cap) == 9 and set(cap) <= qp, "cap is not 9 quadric points")
        for a, b in combinations(cap, 2):
            require(symplectic_product(a, b) == 1, "cap points are orthogonal")
            require(quadric_value(a ^ b) == 1, "cap secant stays on the quadric")
            require(a ^ b not in cap, "three cap points are collinear")
        translates = quadric.cap_translates(f, ln)
        require(len(translates) == 9, "translate count wrong")
        union = set()
        for cap9 in translates:
            require(len(cap9) == 9, "translate size wrong")
            for a, b in combinations(sorted(cap9), 2):
                require(
                    symplectic_product(a, b) == 1,
                    "translate is not a cap",
                )
            require(not (union & cap9), "translates overlap")
            union |= cap9
        require(union == omega4, "translates do not cover the orbit")
    example = quadric.nine_cap(f, w3[0])
    return {
        "caps": 8,
        "example_cap": [point_json(f, p) for p in example],
    }


# ── runner ───────────────────────────────────────────────────────────────


@dataclass
class Certificate:
    name: str
    claim: str
    status: str  # "pass" | "fail"
    witness: dict
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "status": self.status,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
        }


def run_certificates(ctx: Context, jobs: int = 1, names=None) -> list:
    selected = [
        (name, claim, fn)
        for name, claim, fn in CHECKS
        if names is None or name in names
    ]

    def run_one(entry):
        name, claim, fn = entry
        t0 = time.perf_counter()
        try:
            witness = fn(ctx)
            status = "pass"
        except CheckFailed as e:
            status = "fail"
            witness = {"message": str(e), **e.data}
        except Exception as e:  # broken inputs must report, not crash
            status = "fail"
            witness = {"error": f"{type(e).__name__}: {e}"}
        ms = (time.perf_counter() - t0) * 1000.0
        return Certificate(name, claim, status, witness, round(ms, 3))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_one, selected))
    return [run_one(entry) for entry in selected]
