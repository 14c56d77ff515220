"""Vectors of V(4,3) and the projective space PG(3,3).

A vector is a 4-tuple of ints mod 3, coordinates (xi_1..xi_4) with respect
to the standard basis.  The canonical representative of a projective point
scales the first nonzero digit to 1.  The alternative basis consists of
the four all-nonzero direction vectors

    1221, 2121, 2211, 1111   (in that order),

whose change-of-basis matrix M is symmetric and involutory over F_3, so a
single function converts coordinates in either direction.  Weights 2 and 3
are the same in both bases.  The eight weight-1 vectors (the coordinate
axes) have alternative weight 4, and of the sixteen weight-4 vectors the
even family (the alternative basis itself, up to sign) has alternative
weight 1 while the odd family has alternative weight 4 again — so
"alternative weight 1" singles out the even family, but weight 4 does not
round-trip to weight 1 in general.

PG(3,3) has 40 points, 130 lines and 40 planes.  Planes are classified by
how many vertices <eps_r> of the fundamental tetrahedron they contain
(kind 0..3, census 8/16/12/4); lines by the weight pattern of their four
points (kinds 1..7, census 6/24/16/12/16/48/8).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

Trit = tuple  # tuple[int, int, int, int]

ZERO: Trit = (0, 0, 0, 0)
BASIS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))

#: all 81 vectors, sorted by base-3 value with xi_1 most significant
ALL81 = tuple(sorted(product(range(3), repeat=4)))


def t_add(a: Trit, b: Trit) -> Trit:
    return tuple((x + y) % 3 for x, y in zip(a, b))


def t_sub(a: Trit, b: Trit) -> Trit:
    return tuple((x - y) % 3 for x, y in zip(a, b))


def t_neg(a: Trit) -> Trit:
    return tuple(-x % 3 for x in a)


def t_scale(c: int, a: Trit) -> Trit:
    return tuple(c * x % 3 for x in a)


def trit_str(a: Trit) -> str:
    return "".join(str(x) for x in a)


def trit_from_str(s: str) -> Trit:
    if len(s) != 4 or any(ch not in "012" for ch in s):
        raise ValueError(f"need 4 digits from 0..2, got {s!r}")
    return tuple(int(ch) for ch in s)


def canon(v: Trit) -> Trit:
    """Projective representative: first nonzero digit scaled to 1."""
    for x in v:
        if x:
            return v if x == 1 else t_scale(2, v)
    raise ValueError("zero vector has no projective representative")


# ── the two bases ────────────────────────────────────────────────────────

#: columns of the change-of-basis matrix: the alternative basis vectors in
#: standard coordinates.  M is symmetric and M^2 = I over F_3.
ALT_BASIS = ((1, 2, 2, 1), (2, 1, 2, 1), (2, 2, 1, 1), (1, 1, 1, 1))


def change_basis(v: Trit) -> Trit:
    """Coordinates of v in the other basis (involutory, same matrix both
    ways since M = M^-1)."""
    return tuple(
        sum(ALT_BASIS[c][r] * v[c] for c in range(4)) % 3 for r in range(4)
    )


def wt_std(v: Trit) -> int:
    return sum(1 for x in v if x)


def wt_alt(v: Trit) -> int:
    return wt_std(change_basis(v))


def hd_std(a: Trit, b: Trit) -> int:
    return wt_std(t_sub(a, b))


def hd_alt(a: Trit, b: Trit) -> int:
    return wt_alt(t_sub(a, b))


#: the sixteen weight-4 vectors form eight sign pairs, the spread
#: directions.  Representatives here are normalized to last digit 1 (so
#: their first three digits are the spread index triples) and split into
#: two families by the parity of the number of 2-digits, a sign-invariant
#: property.  Within one family any three directions span a vertex-free
#: plane; mixing families does not.
FAMILY_EVEN = ((1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1), (2, 2, 1, 1))
FAMILY_ODD = ((2, 2, 2, 1), (2, 1, 1, 1), (1, 2, 1, 1), (1, 1, 2, 1))
DIRECTIONS = FAMILY_EVEN + FAMILY_ODD


def is_line_direction(v: Trit) -> bool:
    """True when +-v is one of the eight spread directions."""
    return wt_std(v) == 4


def direction_family(v: Trit) -> int:
    """0 for the even family, 1 for the odd, judged on the canonical
    representative (negation preserves the parity of the 2-count)."""
    if wt_std(v) != 4:
        raise ValueError(f"{trit_str(v)} is not a weight-4 direction")
    return sum(1 for x in canon(v) if x == 2) % 2


# ── subspace machinery ───────────────────────────────────────────────────


def gf3_rank(vectors) -> int:
    rows = []
    for v in vectors:
        v = list(v)
        for r in rows:
            lead = next(i for i in range(4) if r[i])
            if v[lead]:
                c = v[lead] * r[lead] % 3  # r[lead] == its own inverse mod 3
                v = [(x - c * y) % 3 for x, y in zip(v, r)]
        if any(v):
            rows.append(v)
    return len(rows)


def subspace_vectors(gens) -> frozenset:
    """All F_3-combinations of the generators, including zero."""
    acc = {ZERO}
    for g in gens:
        acc = {t_add(v, t_scale(c, g)) for v in acc for c in range(3)}
    return frozenset(acc)


@dataclass(frozen=True)
class Line:
    """A line of PG(3,3): 4 projective points, 9 vectors including zero."""

    points: tuple
    vectors: frozenset

    def __repr__(self):
        return f"Line({'/'.join(trit_str(p) for p in self.points)})"


@dataclass(frozen=True)
class Plane:
    """A plane of PG(3,3), the kernel of the canonical functional."""

    functional: Trit
    points: tuple
    vectors: frozenset

    def __repr__(self):
        return f"Plane({trit_str(self.functional)})"


def line_through(a: Trit, b: Trit) -> Line:
    vecs = subspace_vectors((a, b))
    if len(vecs) != 9:
        raise ValueError("points do not span a line")
    pts = tuple(sorted({canon(v) for v in vecs if v != ZERO}))
    return Line(pts, vecs)


@lru_cache(maxsize=1)
def all_points() -> tuple:
    return tuple(sorted({canon(v) for v in ALL81 if v != ZERO}))


@lru_cache(maxsize=1)
def all_lines() -> tuple:
    seen = {}
    for a, b in combinations(all_points(), 2):
        ln = line_through(a, b)
        seen.setdefault(ln.vectors, ln)
    return tuple(sorted(seen.values(), key=lambda l: l.points))


@lru_cache(maxsize=1)
def all_planes() -> tuple:
    planes = []
    for c in all_points():
        vecs = frozenset(
            v for v in ALL81 if sum(x * y for x, y in zip(c, v)) % 3 == 0
        )
        pts = tuple(sorted({canon(v) for v in vecs if v != ZERO}))
        planes.append(Plane(c, pts, vecs))
    return tuple(sorted(planes, key=lambda p: p.functional))


@lru_cache(maxsize=1)
def line_by_vectors() -> dict:
    return {ln.vectors: ln for ln in all_lines()}


@lru_cache(maxsize=1)
def plane_by_vectors() -> dict:
    return {pl.vectors: pl for pl in all_planes()}


def plane_from_functional(c: Trit) -> Plane:
    c = canon(c)
    for pl in all_planes():
        if pl.functional == c:
            return pl
    raise ValueError(f"no plane with functional {trit_str(c)}")


# ── classification ───────────────────────────────────────────────────────

#: line kinds keyed by point-weight pattern (count of points of weight
#: 1, 2, 3, 4); the class sizes are 6/24/16/12/16/48/8
LINE_KIND_TABLE = {
    (2, 2, 0, 0): 1,
    (1, 1, 2, 0): 2,
    (0, 3, 1, 0): 3,
    (0, 2, 0, 2): 4,
    (1, 0, 1, 2): 5,
    (0, 1, 2, 1): 6,
    (0, 0, 4, 0): 7,
}


def weight_pattern(line: Line) -> tuple:
    counts = [0, 0, 0, 0]
    for p in line.points:
        counts[wt_std(p) - 1] += 1
    return tuple(counts)


def line_kind(line: Line) -> int:
    pattern = weight_pattern(line)
    kind = LINE_KIND_TABLE.get(pattern)
    if kind is None:
        # every weight pattern of a PG(3,3) line is in the table; reaching
        # this means a convention drifted somewhere upstream
        raise ValueError(f"weight pattern {pattern} not in line-kind table")
    return kind


def plane_kind(plane: Plane) -> int:
    """Number of tetrahedron vertices on the plane (0..3)."""
    return sum(1 for e in BASIS if e in plane.vectors)


def plane_subspaces(plane: Plane) -> tuple:
    """The 13 2-subspaces of a plane, as Line objects."""
    seen = {}
    for a, b in combinations(plane.points, 2):
        ln = line_through(a, b)
        seen.setdefault(ln.vectors, ln)
    subs = tuple(sorted(seen.values(), key=lambda l: l.points))
    if len(subs) != 13:
        raise ValueError(f"expected 13 subspaces, found {len(subs)}")
    return subs
