"""Denizens of the weight-4 orbit and their internal geometry.

The labelling identifies the 81 line-weight-4 points with (F_3)^4.  Each
of the 40 planes V_3 < (F_3)^4 splits the orbit into three 27-point
cosets; the image point sets are *denizens*, and the three from one plane
form a *triplet*.  Denizens inherit the plane's classification:

    plane kind 0 (no vertex)    -> Segre variety S_{1,1,1}(2):
                                   27 lines, 3 per point, spans PG(7,2)
    plane kind 2 (two vertices) -> C2: 36 lines, 4 per point, spans the
                                   5-flat perp to a line of the
                                   weight-2 orbit
    plane kind 3 (three)        -> C3: no lines, spans the 6-flat perp
                                   to a weight-1 point
    plane kind 1 (one vertex)   -> C1: none of the above signatures; the
                                   observed structure is reported, not
                                   pinned (18 lines, 2 per point, full
                                   span)

The classifier reads the plane kind; the structural certificate recomputes
the tag from the point set alone so the two routes stay independent.

Sections of a Segre denizen S by the 13 coset families of 2-subspaces
V_2 < V_3 come in three flavours by the line kind of V_2: a 3x3 grid
(kind 4), three parallel generators with a transversality property (kind
6), or a *fan* (kind 3): nine points no two of which share a generator of
S.  A fan decomposes uniquely into three *troikas* (triples pairwise at
alt-basis Hamming distance 3) sharing a common centre, the XOR of each
troika, which lies on a tetrad line; the four fan triplets of S recover
the tetrad without reference to the frame.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from . import gf3
from .gf2 import Mask, lines_inside, perp, span, symplectic_product
from .tetrad import Frame

PLANE_KIND_TO_DENIZEN = {0: "segre", 1: "C1", 2: "C2", 3: "C3"}

#: structural signatures: (line count, lines per point, span rank)
SIGNATURES = {
    "segre": (27, 3, 8),
    "C2": (36, 4, 6),
    "C3": (0, 0, 7),
}

SECTION_TAGS = {4: "S2(2)", 6: "3-generator", 3: "fan"}


@dataclass(frozen=True)
class Denizen:
    plane: gf3.Plane
    shift: tuple  # coset representative in (F_3)^4
    shift_index: int  # 0, 1, 2
    points: frozenset
    kind: str

    @property
    def ident(self) -> str:
        return f"{gf3.trit_str(self.plane.functional)}:{self.shift_index}"

    def __repr__(self):
        return f"Denizen({self.ident}, {self.kind})"


def triplet_from_plane(frame: Frame, plane: gf3.Plane) -> tuple:
    """The three denizens of a plane, shifts ordered deterministically:
    the subspace itself first, then the two cosets of the smallest
    vector outside the plane."""
    step = min(v for v in gf3.ALL81 if v not in plane.vectors)
    kind = PLANE_KIND_TO_DENIZEN[gf3.plane_kind(plane)]
    dens = []
    for j in range(3):
        s = gf3.t_scale(j, step)
        pts = frozenset(
            frame.point_from_trits(gf3.t_add(v, s)) for v in plane.vectors
        )
        dens.append(Denizen(plane, s, j, pts, kind))
    return tuple(dens)


def all_triplets(frame: Frame) -> tuple:
    return tuple(triplet_from_plane(frame, pl) for pl in gf3.all_planes())


def denizen_by_id(frame: Frame, ident: str) -> Denizen:
    try:
        func_str, shift_str = ident.split(":")
        functional = gf3.canon(gf3.trit_from_str(func_str))
        shift_index = int(shift_str)
        if shift_index not in (0, 1, 2):
            raise ValueError
    except ValueError:
        raise ValueError(
            f"denizen id must look like '1121:0', got {ident!r}"
        ) from None
    plane = gf3.plane_from_functional(functional)
    return triplet_from_plane(frame, plane)[shift_index]


# ── classification ───────────────────────────────────────────────────────


def structural_certificate(frame: Frame, den: Denizen) -> dict:
    """Tag a denizen from its point set alone: count the full lines it
    contains, their per-point incidence, and the span."""
    inner = lines_inside(den.points)
    per_point = Counter()
    for ln in inner:
        for p in ln:
            per_point[p] += 1
    incidences = sorted({per_point[p] for p in den.points})
    rank = span(den.points).rank
    profile = (
        len(inner),
        incidences[0] if len(incidences) == 1 else None,
        rank,
    )
    structural = "C1"
    for tag, sig in SIGNATURES.items():
        if profile == sig:
            structural = tag
    return {
        "lines": len(inner),
        "per_point": incidences,
        "span_rank": rank,
        "structural_kind": structural,
    }


def classify(frame: Frame, den: Denizen) -> tuple:
    """(kind by plane, structural certificate); the certificate's tag is
    computed without looking at the plane."""
    return den.kind, structural_certificate(frame, den)


# ── C2 denizens: perps of weight-2 lines ─────────────────────────────────


def c2_line(frame: Frame, den: Denizen) -> frozenset:
    """The line L with den = perp(L) meet (weight-4 orbit).  Requires a
    C2 denizen; checks the perp really is a line of the weight-2 orbit
    and that the denizen is recovered from it."""
    f = perp(den.points)
    if f.rank != 2:
        raise ValueError(
            f"perp of {den.ident} has rank {f.rank}, not a line"
        )
    line = frozenset(f.points())
    if any(frame.line_weight(p) != 2 for p in line):
        raise ValueError(f"perp line of {den.ident} leaves the weight-2 orbit")
    recovered = frozenset(
        p
        for p in frame.orbit(4)
        if all(symplectic_product(p, b) == 0 for b in f.basis)
    )
    if recovered != den.points:
        raise ValueError(f"perp does not recover denizen {den.ident}")
    return line


def c2_census(frame: Frame, triplets) -> dict:
    """Global structure of the twelve C2 triplets: 36 distinct weight-2
    lines, paired off as regulus / opposite regulus in the six 3-flats
    spanned by tetrad-line pairs."""
    c2_triplets = [t for t in triplets if t[0].kind == "C2"]
    lines_by_triplet = [
        tuple(c2_line(frame, d) for d in t) for t in c2_triplets
    ]
    all_lines = {ln for tri in lines_by_triplet for ln in tri}

    pair_flats = {}
    for h, k in combinations(range(4), 2):
        fl = span(frame.lines[h] | frame.lines[k])
        pair_flats[(h, k)] = fl

    groups = {}
    for t, tri_lines in zip(c2_triplets, lines_by_triplet):
        fl = span(set().union(*tri_lines))
        home = None
        for pair, pf in pair_flats.items():
            if pf == fl:
                home = pair
        if home is None:
            raise ValueError(
                f"C2 lines of plane {gf3.trit_str(t[0].plane.functional)} "
                "span no tetrad-pair 3-flat"
            )
        groups.setdefault(home, []).append(tri_lines)

    reguli = {}
    for pair, two in sorted(groups.items()):
        if len(two) != 2:
            raise ValueError(f"expected 2 C2 triplets per pair, got {len(two)}")
        r1, r2 = two
        grid = frozenset().union(*r1)
        checks = {
            "disjoint_within": all(
                not (a & b) for tri in (r1, r2) for a, b in combinations(tri, 2)
            ),
            "cross_meet_once": all(
                len(a & b) == 1 for a in r1 for b in r2
            ),
            "same_grid": grid == frozenset().union(*r2),
            "grid_is_quadric_part": grid
            == pair_flats[pair].points() & frame.orbit(2),
            "tetrad_lines_external": not (
                grid & (frame.lines[pair[0]] | frame.lines[pair[1]])
            ),
        }
        reguli[pair] = checks

    return {
        "triplet_count": len(c2_triplets),
        "distinct_lines": len(all_lines),
        "pairs_covered": sorted(groups),
        "reguli": reguli,
    }


# ── sections of a Segre denizen ──────────────────────────────────────────


def section_points(frame: Frame, den: Denizen, sub: gf3.Line) -> frozenset:
    return frozenset(
        frame.point_from_trits(gf3.t_add(v, den.shift)) for v in sub.vectors
    )


def _ruling_split(inner) -> tuple:
    """Split 6 coplanar-grid lines into two rulings of 3 pairwise
    disjoint lines; raises if the structure is not a grid."""
    inner = sorted(inner, key=min)
    rulings = []
    unused = set(range(6))
    while unused:
        i = min(unused)
        clique = [j for j in unused if j == i or not (inner[i] & inner[j])]
        if len(clique) != 3:
            raise ValueError("grid section does not split into rulings")
        for a, b in combinations(clique, 2):
            if inner[a] & inner[b]:
                raise ValueError("ruling lines intersect")
        rulings.append(tuple(inner[j] for j in clique))
        unused -= set(clique)
    return tuple(rulings)


def classify_section(frame: Frame, den: Denizen, sub: gf3.Line) -> dict:
    """Classify the section of a Segre denizen by a 2-subspace of its
    direction plane, and verify the structure the tag promises."""
    if den.kind != "segre":
        raise ValueError(f"sections are defined on Segre denizens, not {den.kind}")
    if not sub.vectors <= den.plane.vectors:
        raise ValueError("section subspace is not inside the direction plane")
    kind = gf3.line_kind(sub)
    tag = SECTION_TAGS.get(kind)
    if tag is None:
        raise ValueError(
            f"subspace of kind {kind} cannot occur inside a vertex-free plane"
        )
    pts = section_points(frame, den, sub)
    inner = lines_inside(pts)
    detail = {}

    if tag == "S2(2)":
        if len(inner) != 6 or span(pts).rank != 4:
            raise ValueError("grid section failed its signature")
        detail["rulings"] = _ruling_split(inner)
    elif tag == "3-generator":
        if len(inner) != 3:
            raise ValueError("3-generator section must contain 3 lines")
        gens = sorted(inner, key=min)
        if any(a & b for a, b in combinations(gens, 2)):
            raise ValueError("generators of a 3-generator section must be disjoint")
        if frozenset().union(*gens) != pts:
            raise ValueError("generators must partition the section")
        detail["generators"] = tuple(gens)
        detail["transversal_grids"] = _transversal_check(frame, den, sub, gens)
    else:  # fan
        if inner:
            raise ValueError("fan contains a full line")
        if any((a ^ b) in den.points for a, b in combinations(sorted(pts), 2)):
            raise ValueError("two fan points lie on a common generator")
    return {"tag": tag, "line_kind": kind, "points": pts, **detail}


def _transversal_check(frame, den, sub, gens) -> int:
    """Every grid section whose direction plane avoids the generator
    direction meets each of the three generators in one point, and those
    three points are pairwise off the grid's own generators (their trit
    differences have weight != 4).  Returns the number of grids checked."""
    directions = [v for v in sub.vectors if gf3.wt_std(v) == 4]
    lam = directions[0]
    grids = [
        w
        for w in gf3.plane_subspaces(den.plane)
        if gf3.line_kind(w) == 4 and lam not in w.vectors
    ]
    if len(grids) != 1:
        raise ValueError("expected exactly one transversal grid family")
    w = grids[0]
    step = min(v for v in den.plane.vectors if v not in w.vectors)
    checked = 0
    for j in range(3):
        s = gf3.t_add(den.shift, gf3.t_scale(j, step))
        grid_pts = frozenset(
            frame.point_from_trits(gf3.t_add(v, s)) for v in w.vectors
        )
        hits = []
        for g in gens:
            meet = g & grid_pts
            if len(meet) != 1:
                raise ValueError("generator does not meet grid exactly once")
            hits.append(next(iter(meet)))
        for a, b in combinations(hits, 2):
            d = gf3.t_sub(
                frame.trits_from_point(a), frame.trits_from_point(b)
            )
            if gf3.wt_std(d) == 4:
                raise ValueError("transversal points share a grid generator")
        checked += 1
    return checked


def sections_of(frame: Frame, den: Denizen) -> tuple:
    return tuple(
        classify_section(frame, den, sub)
        for sub in gf3.plane_subspaces(den.plane)
    )


# ── fans, troikas and tetrad recovery ────────────────────────────────────


def fan_decompose(frame: Frame, points) -> tuple:
    """Unique decomposition of a fan into three troikas with a common
    centre.  Returns (troikas, centre); raises ValueError when the nine
    points do not form a fan of a Segre denizen."""
    pts = sorted(set(points))
    if len(pts) != 9:
        raise ValueError("a fan has nine distinct points")
    try:
        trits = {p: frame.trits_from_point(p) for p in pts}
    except ValueError:
        raise ValueError("fan points must lie in the weight-4 orbit") from None
    for a, b in combinations(pts, 2):
        if gf3.hd_std(trits[a], trits[b]) == 4:
            raise ValueError("two points lie on a common generator: not a fan")
    adj = {
        p: [q for q in pts if q != p and gf3.hd_alt(trits[p], trits[q]) == 3]
        for p in pts
    }
    troikas = []
    seen = set()
    for p in pts:
        if p in seen:
            continue
        if len(adj[p]) != 2:
            raise ValueError("distance-3 graph is not a triangle partition")
        q, r = adj[p]
        if r not in adj[q] or q not in adj[r]:
            raise ValueError("distance-3 graph is not a triangle partition")
        troikas.append(frozenset((p, q, r)))
        seen |= {p, q, r}
    if len(troikas) != 3:
        raise ValueError("fan must split into exactly three troikas")
    centres = {a ^ b ^ c for a, b, c in (sorted(t) for t in troikas)}
    if len(centres) != 1:
        raise ValueError("troika centres disagree")
    return tuple(sorted(troikas, key=min)), centres.pop()


@dataclass(frozen=True)
class FanTriplet:
    subspace: gf3.Line
    weight3_pair: tuple  # canonical representative of the +-lambda pair
    fans: tuple  # three frozensets of 9 points
    centres: tuple  # centre of each fan
    centre_line: frozenset


def fan_triplets(frame: Frame, den: Denizen) -> tuple:
    """The four fan triplets of a Segre denizen, one per weight-3 sign
    pair of its direction plane."""
    if den.kind != "segre":
        raise ValueError("fan triplets live on Segre denizens")
    out = []
    for sub in gf3.plane_subspaces(den.plane):
        if gf3.line_kind(sub) != 3:
            continue
        w3 = sorted(
            gf3.canon(v)
            for v in sub.vectors
            if v != gf3.ZERO and gf3.wt_std(v) == 3
        )
        step = min(v for v in den.plane.vectors if v not in sub.vectors)
        fans = []
        centres = []
        for j in range(3):
            s = gf3.t_add(den.shift, gf3.t_scale(j, step))
            fan = frozenset(
                frame.point_from_trits(gf3.t_add(v, s)) for v in sub.vectors
            )
            _, centre = fan_decompose(frame, fan)
            fans.append(fan)
            centres.append(centre)
        out.append(
            FanTriplet(
                sub, w3[0], tuple(fans), tuple(centres), frozenset(centres)
            )
        )
    if len(out) != 4:
        raise ValueError(f"expected 4 fan triplets, found {len(out)}")
    return tuple(sorted(out, key=lambda ft: ft.weight3_pair))


def recover_tetrad(frame: Frame, den: Denizen) -> frozenset:
    """The four centre lines of a Segre denizen's fan triplets.  For
    every Segre denizen these are exactly the four tetrad lines, so the
    denizen alone determines the tetrad."""
    return frozenset(ft.centre_line for ft in fan_triplets(frame, den))


def fans_per_point(frame: Frame, den: Denizen) -> dict:
    counts = Counter()
    for ft in fan_triplets(frame, den):
        for fan in ft.fans:
            for p in fan:
                counts[p] += 1
    return dict(counts)


# ── enneads ──────────────────────────────────────────────────────────────


def ennead(frame: Frame, triplet1, triplet2) -> tuple:
    """The nine pairwise intersections of two distinct triplets; each has
    nine points and together they partition the weight-4 orbit.  They are
    the coset images of the 9-element intersection of the two planes."""
    if triplet1[0].plane.vectors == triplet2[0].plane.vectors:
        raise ValueError("ennead needs two distinct triplets")
    cells = tuple(
        d1.points & d2.points for d1 in triplet1 for d2 in triplet2
    )
    return cells
