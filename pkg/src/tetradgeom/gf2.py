"""Exact linear algebra over GF(2) in V(8,2) and PG(7,2).

Conventions, fixed once and relied on by every other module and by the
frozen test fixtures:

* A vector of V(8,2) is an int in range(256); bit i-1 holds the
  coefficient of the basis vector e_i (i = 1..8).  A projective point of
  PG(7,2) is a nonzero mask; 0 occurs only inside subspace computations.
* The symplectic form pairs coordinate i with coordinate 9-i (bit k with
  bit 7-k):

      B(x, y) = (x1 y8 + x8 y1) + (x2 y7 + x7 y2)
              + (x3 y6 + x6 y3) + (x4 y5 + x5 y4)        (mod 2)

* The quadratic form Q(x) = x1 x8 + x2 x7 + x3 x6 + x4 x5 + sum_i x_i
  polarizes to B and takes the value 1 on all twelve points of the four
  coordinate-pair lines.
* A linear map is a tuple of 8 column masks, the images of e_1..e_8.

Everything here is immutable and exact; there is no floating point
anywhere in the package.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

Mask = int
LinMap = tuple  # tuple[Mask, ...] of length 8

E = tuple(1 << i for i in range(8))  # E[i] is the mask of e_{i+1}
IDENTITY: LinMap = E
UNIT: Mask = 0xFF  # u = e_1 + ... + e_8
ALL_POINTS = tuple(range(1, 256))

#: the four coordinate pairs {i, 9-i} as masks; these are the frame lines'
#: underlying 2-dim subspaces and the quadratic form's degree-2 support
PAIR_MASKS = (0x81, 0x42, 0x24, 0x18)


def mask_of(*indices: int) -> Mask:
    """Mask of e_{i1} + e_{i2} + ..., with 1-based coordinate indices."""
    m = 0
    for i in indices:
        if not 1 <= i <= 8:
            raise ValueError(f"coordinate index {i} out of range 1..8")
        m |= 1 << (i - 1)
    return m


def bits_of(x: Mask) -> tuple:
    """The 1-based coordinate indices present in x, ascending."""
    return tuple(i + 1 for i in range(8) if x >> i & 1)


def point_str(x: Mask) -> str:
    """Digit-string shorthand: e_1+e_3+e_5+e_7 prints as '1357'."""
    return "".join(str(i) for i in bits_of(x)) or "0"


# bit-reversal table: partner of bit k is bit 7-k
_REV = tuple(
    sum(1 << (7 - k) for k in range(8) if v >> k & 1) for v in range(256)
)


def symplectic_product(x: Mask, y: Mask) -> int:
    """B(x, y): alternating bilinear form pairing coordinate i with 9-i."""
    return (x & _REV[y]).bit_count() & 1


def quadric_value(x: Mask) -> int:
    """Q(x) = x1 x8 + x2 x7 + x3 x6 + x4 x5 + sum_i x_i over GF(2)."""
    s = x.bit_count()
    for pm in PAIR_MASKS:
        if x & pm == pm:
            s += 1
    return s & 1


# ── linear maps ──────────────────────────────────────────────────────────


def apply(m: LinMap, v: Mask) -> Mask:
    """Image of the vector v under the linear map m."""
    r = 0
    i = 0
    while v:
        if v & 1:
            r ^= m[i]
        v >>= 1
        i += 1
    return r


def compose(m: LinMap, n: LinMap) -> LinMap:
    """m after n: (compose(m, n))(v) == apply(m, apply(n, v))."""
    return tuple(apply(m, c) for c in n)


def linmap(images: dict) -> LinMap:
    """The identity map with the given basis images overridden.

    `images` maps 1-based coordinate indices to image masks.
    """
    cols = list(E)
    for i, img in images.items():
        cols[i - 1] = img
    return tuple(cols)


@lru_cache(maxsize=None)
def perm_table(m: LinMap) -> bytes:
    """256-entry lookup table of apply(m, v); bytes for speed."""
    return bytes(apply(m, v) for v in range(256))


def linmap_power(m: LinMap, k: int) -> LinMap:
    r = IDENTITY
    for _ in range(k):
        r = compose(m, r)
    return r


def inverse(m: LinMap) -> LinMap:
    """Inverse map, by Gauss-Jordan on (image, preimage-combination) pairs."""
    ech = {}
    for j in range(8):
        img, src = m[j], 1 << j
        while img:
            p = img.bit_length() - 1
            if p in ech:
                img ^= ech[p][0]
                src ^= ech[p][1]
            else:
                ech[p] = (img, src)
                break
        else:
            raise ValueError("map is singular")
    for p in sorted(ech):
        img, src = ech[p]
        for q in sorted(ech):
            if q > p and ech[q][0] >> p & 1:
                ech[q] = (ech[q][0] ^ img, ech[q][1] ^ src)
    return tuple(ech[j][1] for j in range(8))


def is_invertible(m: LinMap) -> bool:
    return len(reduced_basis(m)) == 8


def mulclose(gens, maxsize: int | None = None):
    """BFS closure of a generating set of linear maps under composition.

    Returns the set of all products.  If `maxsize` is given and the closure
    exceeds it, raises ValueError: callers that may feed a broken generating
    set (the perturbation hook) use the cap to fail cleanly instead of
    walking a large chunk of GL(8,2).
    """
    gens = [tuple(g) for g in gens]
    tables = [perm_table(g) for g in gens]
    els = {IDENTITY}
    els.update(gens)
    bdy = list(els)
    while bdy:
        new = []
        for t in tables:
            for b in bdy:
                c = tuple(t[col] for col in b)
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if maxsize is not None and len(els) > maxsize:
                        raise ValueError(
                            f"closure exceeded {maxsize} elements"
                        )
        bdy = new
    return els


# ── flats (projective subspaces) ─────────────────────────────────────────


def reduced_basis(vectors) -> tuple:
    """Canonical reduced echelon basis of the span, pivots descending."""
    rows = {}
    for v in vectors:
        while v:
            p = v.bit_length() - 1
            if p in rows:
                v ^= rows[p]
            else:
                rows[p] = v
                break
    # back-substitution: clear every pivot bit from the other rows
    for p in sorted(rows):
        for q in sorted(rows):
            if q > p and rows[q] >> p & 1:
                rows[q] ^= rows[p]
    return tuple(rows[p] for p in sorted(rows, reverse=True))


class Flat:
    """A projective flat of PG(7,2), stored as a canonical echelon basis.

    `rank` is the linear dimension of the underlying subspace and `dim`
    the projective dimension (rank - 1; the empty flat has dim -1).
    """

    __slots__ = ("basis", "_points")

    def __init__(self, basis):
        self.basis = tuple(basis)
        self._points = None

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis) - 1

    def points(self) -> frozenset:
        """All nonzero vectors of the subspace."""
        if self._points is None:
            acc = [0]
            for b in self.basis:
                acc += [v ^ b for v in acc]
            self._points = frozenset(acc) - {0}
        return self._points

    def __contains__(self, v: Mask) -> bool:
        for b in self.basis:
            if v >> (b.bit_length() - 1) & 1:
                v ^= b
        return v == 0

    def __eq__(self, other):
        return isinstance(other, Flat) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Flat(dim={self.dim}, basis={[point_str(b) for b in self.basis]})"


def span(vectors) -> Flat:
    """Smallest flat containing the given vectors."""
    return Flat(reduced_basis(vectors))


def perp(vectors) -> Flat:
    """The flat of all x with B(x, v) = 0 for every given v."""
    basis = reduced_basis(vectors)
    sols = [
        x
        for x in range(256)
        if all(symplectic_product(x, b) == 0 for b in basis)
    ]
    return Flat(reduced_basis(sols))


def lines_inside(points) -> set:
    """All full lines {a, b, a^b} of PG(7,2) contained in the point set.

    Returned as a set of frozensets; each line is found exactly once via
    its two smallest points.
    """
    ps = set(points)
    found = set()
    for a, b in combinations(sorted(ps), 2):
        c = a ^ b
        if c > b and c in ps:
            found.add(frozenset((a, b, c)))
    return found
