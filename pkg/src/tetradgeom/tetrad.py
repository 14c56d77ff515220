"""The canonical tetrad: four mutually skew lines spanning PG(7,2).

The frame consists of the four lines L_a..L_d on the coordinate-pair
2-spaces V_a = <e1,e8>, V_b = <e2,e7>, V_c = <e3,e6>, V_d = <e4,e5>,
together with the order-3 rotations

    zeta_a: e1 -> e8 -> e1+e8        zeta_b: e7 -> e2 -> e2+e7
    zeta_c: e3 -> e6 -> e3+e6        zeta_d: e5 -> e4 -> e4+e5

each cycling its own line and fixing the other six coordinates.  (The
asymmetry between a/c and b/d is deliberate and load-bearing: it makes the
labelling below interact correctly with the symplectic pairing.)

Points are labelled U_t for t in {empty,0,1,2}^4: the component on V_h is
absent for the empty index and u_h(i) otherwise, where u_h(0) is the
weight-2 point of L_h and u_h(i+1) = zeta_h(u_h(i)).  In particular
U_0000 = u, the all-ones point.  The number of non-empty indices is the
point's line weight; line weight partitions the 255 points into the four
orbits of sizes 12/54/108/81 of the full stabilizer group.

The 81 maps A_sigma = zeta_a^i zeta_b^j zeta_c^k zeta_d^l (sigma = ijkl)
form an elementary abelian normal subgroup of the stabilizer
G = G(tetrad) of order 6^4 * 24 = 31104, and sigma -> A_sigma(u) is a
bijection onto the weight-4 orbit that coincides with the labelling:
A_sigma(u) = U_sigma.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import gf3
from .gf2 import (
    E,
    IDENTITY,
    UNIT,
    LinMap,
    Mask,
    PAIR_MASKS,
    apply,
    compose,
    inverse,
    linmap,
    linmap_power,
    mulclose,
    perm_table,
)

LINE_NAMES = "abcd"


def _rotations(perturb: bool = False) -> tuple:
    za = linmap({1: E[7], 8: E[0] ^ E[7]})
    if perturb:
        # test hook: one flipped matrix entry, e1 -> e8 + e2.  Still
        # invertible, but the frame invariants collapse and verify-all
        # must report the failure instead of crashing.
        za = linmap({1: E[7] ^ E[1], 8: E[0] ^ E[7]})
    zb = linmap({7: E[1], 2: E[1] ^ E[6]})
    zc = linmap({3: E[5], 6: E[2] ^ E[5]})
    zd = linmap({5: E[3], 4: E[3] ^ E[4]})
    return za, zb, zc, zd


class Frame:
    """The tetrad frame: lines, rotations, point labels and orbits."""

    __slots__ = (
        "rotations",
        "points",
        "lines",
        "unit",
        "perturbed",
        "_tuple_of",
        "label_collisions",
    )

    def __init__(self, rotations, perturbed: bool = False):
        self.rotations = tuple(rotations)
        self.perturbed = perturbed
        self.unit = UNIT
        pts = []
        for h in range(4):
            u0 = PAIR_MASKS[h]
            u1 = apply(self.rotations[h], u0)
            u2 = apply(self.rotations[h], u1)
            pts.append((u0, u1, u2))
        self.points = tuple(pts)
        self.lines = tuple(frozenset(tri) for tri in pts)
        self._tuple_of = {}
        self.label_collisions = []
        for t in product((None, 0, 1, 2), repeat=4):
            if t == (None, None, None, None):
                continue
            p = self.label(t)
            if p == 0 or p in self._tuple_of:
                self.label_collisions.append((t, p))
            else:
                self._tuple_of[p] = t

    def label(self, t) -> Mask:
        """U_t: XOR of u_h(t_h) over the non-empty (non-None) indices."""
        p = 0
        for h, i in enumerate(t):
            if i is not None:
                p ^= self.points[h][i]
        return p

    def unlabel(self, p: Mask):
        t = self._tuple_of.get(p)
        if t is None:
            raise ValueError(f"no label for mask {p}")
        return t

    def line_weight(self, p: Mask) -> int:
        """Number of nonzero components of p in V_a + V_b + V_c + V_d."""
        return sum(1 for pm in PAIR_MASKS if p & pm)

    def orbit(self, r: int) -> frozenset:
        return frozenset(p for p in range(1, 256) if self.line_weight(p) == r)

    def orbits(self) -> tuple:
        return tuple(self.orbit(r) for r in (1, 2, 3, 4))

    def point_from_trits(self, sigma) -> Mask:
        """theta(sigma) = U_sigma for an all-digit index vector."""
        return self.label(tuple(sigma))

    def trits_from_point(self, p: Mask):
        t = self.unlabel(p)
        if any(i is None for i in t):
            raise ValueError(f"{p} is not in the line-weight-4 orbit")
        return t

    def label_str(self, p: Mask) -> str:
        """Label notation; empty indices print as '.', e.g. 'U_..00'."""
        t = self._tuple_of.get(p)
        if t is None:
            return "?"
        return "U_" + "".join("." if i is None else str(i) for i in t)

    def label_table(self) -> dict:
        """point -> index tuple, for all labelled points (read-only)."""
        return self._tuple_of


def build_frame(perturb: bool = False) -> Frame:
    return Frame(_rotations(perturb), perturbed=perturb)


# ── the normal subgroup of 81 diagonal maps ──────────────────────────────


class Group81:
    """A_sigma = zeta_a^i zeta_b^j zeta_c^k zeta_d^l, indexed by sigma."""

    __slots__ = ("maps", "trit_of")

    def __init__(self, frame: Frame):
        pows = [
            (IDENTITY, z, linmap_power(z, 2)) for z in frame.rotations
        ]
        self.maps = {}
        for sigma in gf3.ALL81:
            m = compose(
                compose(pows[0][sigma[0]], pows[1][sigma[1]]),
                compose(pows[2][sigma[2]], pows[3][sigma[3]]),
            )
            self.maps[sigma] = m
        self.trit_of = {m: s for s, m in self.maps.items()}

    def element(self, sigma) -> LinMap:
        return self.maps[tuple(sigma)]


def build_group81(frame: Frame) -> Group81:
    return Group81(frame)


# ── the full stabilizer ──────────────────────────────────────────────────


def stabilizer_generators(frame: Frame) -> dict:
    """Generators of the line-stabilizer: the four rotations, the four
    in-line transpositions, one factor swap and one factor 4-cycle."""
    gens = {}
    for h, name in enumerate(LINE_NAMES):
        gens[f"zeta_{name}"] = frame.rotations[h]
    gens["swap_a"] = linmap({1: E[7], 8: E[0]})
    gens["swap_b"] = linmap({2: E[6], 7: E[1]})
    gens["swap_c"] = linmap({3: E[5], 6: E[2]})
    gens["swap_d"] = linmap({4: E[4], 5: E[3]})
    gens["swap_ab"] = linmap({1: E[1], 2: E[0], 8: E[6], 7: E[7]})
    gens["cycle_abcd"] = linmap(
        {1: E[1], 2: E[2], 3: E[3], 4: E[0], 8: E[6], 7: E[5], 6: E[4], 5: E[7]}
    )
    return gens


@dataclass(frozen=True)
class Stabilizer:
    generators: dict
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)


def build_stabilizer(frame: Frame, maxsize: int = 40000) -> Stabilizer:
    gens = stabilizer_generators(frame)
    return Stabilizer(gens, frozenset(mulclose(gens.values(), maxsize)))


# ── the induced action on (F_3)^4 ────────────────────────────────────────


def induced_matrix(g: LinMap, g81: Group81) -> tuple:
    """Columns (images of eps_1..eps_4) of the F_3-linear map phi_g with
    g A_sigma g^-1 = A_(phi_g sigma).  Raises KeyError if conjugation
    leaves the 81-group, i.e. if g does not normalize it."""
    ginv = inverse(g)
    cols = []
    for e in gf3.BASIS:
        conj = compose(compose(g, g81.maps[e]), ginv)
        cols.append(g81.trit_of[conj])
    return tuple(cols)


def mat3_apply(m, v):
    return tuple(
        sum(m[c][r] * v[c] for c in range(4)) % 3 for r in range(4)
    )


# ── orbit machinery ──────────────────────────────────────────────────────


def point_orbits(gens) -> list:
    """Orbit partition of the 255 projective points under the generated
    group (closure on points, not on group elements)."""
    tables = [perm_table(g) for g in gens]
    seen = set()
    orbits = []
    for p in range(1, 256):
        if p in seen:
            continue
        orb = {p}
        bdy = [p]
        while bdy:
            nxt = []
            for q in bdy:
                for t in tables:
                    r = t[q]
                    if r not in orb:
                        orb.add(r)
                        nxt.append(r)
            bdy = nxt
        seen |= orb
        orbits.append(frozenset(orb))
    return orbits


def subspace_orbit_partition(mats, spaces) -> list:
    """Orbit partition of GF(3) subspaces (given as frozensets of vectors)
    under a list of 4x4 matrices over F_3."""
    index = {s: i for i, s in enumerate(spaces)}
    seen = set()
    parts = []
    for s in spaces:
        if s in seen:
            continue
        orb = {s}
        bdy = [s]
        while bdy:
            nxt = []
            for t in bdy:
                for m in mats:
                    img = frozenset(mat3_apply(m, v) for v in t)
                    if img not in index:
                        raise ValueError("matrix does not permute the spaces")
                    if img not in orb:
                        orb.add(img)
                        nxt.append(img)
            bdy = nxt
        seen |= orb
        parts.append(frozenset(orb))
    return parts
