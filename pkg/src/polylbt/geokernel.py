"""Exact rational geometry for small point sets.

Facets are found by brute force over d-subsets: each affinely independent
d-subset spans a hyperplane, and that hyperplane is a facet when every point
lies weakly on one side. Coordinates are scaled to integers first so the
normals come out of integer cofactors (Bareiss elimination, no fractions).
Subsets already contained in a known facet are skipped, which removes most of
the work on polytopes with large facets.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .errors import GeometryError
from .lattice import Incidence, build_lattice, mask_of, members

MAX_POINTS = 24
MAX_DIM = 6

RationalPoint = tuple  # of Fraction


def as_point(coords) -> RationalPoint:
    return tuple(Fraction(c) for c in coords)


def points_from_json(obj) -> list:
    pts = [as_point(p) for p in obj["points"]]
    d = obj.get("d", len(pts[0]) if pts else 0)
    if any(len(p) != d for p in pts):
        raise GeometryError(f"points must all have {d} coordinates")
    return pts


def points_to_json(points) -> dict:
    d = len(points[0]) if points else 0
    return {"d": d, "points": [[f"{c.numerator}/{c.denominator}" for c in p] for p in points]}


def bareiss_det(rows) -> int:
    """Determinant of a square integer matrix, fraction-free."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for i in range(n - 1):
        if m[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if m[r][i] != 0), None)
            if swap is None:
                return 0
            m[i], m[swap] = m[swap], m[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    r, ncols = 0, len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def primitive(v) -> tuple:
    g = reduce(gcd, v, 0)
    return tuple(x // g for x in v) if g else tuple(v)


@dataclass(frozen=True)
class Hyperplane:
    """{x : normal . x = offset}, normal primitive with first nonzero entry positive."""

    normal: tuple
    offset: Fraction

    @classmethod
    def through(cls, normal, offset) -> "Hyperplane":
        g = reduce(gcd, normal, 0)
        if not g:
            raise GeometryError("zero normal")
        normal, offset = tuple(x // g for x in normal), Fraction(offset) / g
        lead = next(x for x in normal if x)
        if lead < 0:
            normal, offset = tuple(-x for x in normal), -offset
        return cls(normal, Fraction(offset))

    def value(self, p) -> Fraction:
        return sum(a * b for a, b in zip(self.normal, p))


@dataclass(frozen=True)
class Hull:
    points: tuple
    incidence: Incidence
    planes: tuple    # canonical Hyperplane per facet, same order as incidence.facets
    outward: tuple   # +1 / -1: sign making normal point away from the polytope


def _integer_points(points):
    L = reduce(lcm, (c.denominator for p in points for c in p), 1)
    return [tuple(int(c * L) for c in p) for p in points], L


def _normal_through(ipts, idx):
    base = ipts[idx[0]]
    diffs = [[a - b for a, b in zip(ipts[i], base)] for i in idx[1:]]
    d = len(base)
    out = []
    for j in range(d):
        minor = [[row[c] for c in range(d) if c != j] for row in diffs]
        out.append((-1) ** j * bareiss_det(minor))
    return out


def hull(points) -> Hull:
    """Facets of conv(points); every input point must be a vertex."""
    pts = [as_point(p) for p in points]
    if not pts:
        raise GeometryError("no points")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise GeometryError("points of mixed dimension")
    if len(set(pts)) != len(pts):
        raise GeometryError("duplicate points")
    if d > MAX_DIM or len(pts) > MAX_POINTS:
        raise GeometryError(
            f"{len(pts)} points in d={d} exceeds the hull envelope "
            f"({MAX_POINTS} points, d <= {MAX_DIM})")
    if d < 1 or rank([[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]) != d:
        raise GeometryError(f"points do not affinely span dimension {d}")

    ipts, L = _integer_points(pts)
    n = len(ipts)
    found = {}  # mask -> (normal, h_int, sign)
    for idx in itertools.combinations(range(n), d):
        m = mask_of(idx)
        if any(m & f == m for f in found):
            continue
        normal = _normal_through(ipts, idx)
        if not any(normal):
            continue
        vals = [sum(a * b for a, b in zip(normal, p)) for p in ipts]
        h = vals[idx[0]]
        above = any(v > h for v in vals)
        below = any(v < h for v in vals)
        if above and below:
            continue
        fmask = mask_of(i for i, v in enumerate(vals) if v == h)
        found[fmask] = (normal, h, -1 if above else 1)

    masks = sorted(found, key=lambda m: members(m))
    facets = tuple(members(m) for m in masks)

    # extreme-point check: a vertex has incident facet normals of full rank
    bad = [i for i in range(n)
           if rank([found[m][0] for m in masks if m >> i & 1]) != d]
    if bad:
        raise GeometryError(f"non-extreme input points: {bad}")

    planes, signs = [], []
    for m in masks:
        normal, h, sign = found[m]
        hp = Hyperplane.through(normal, Fraction(h, L))
        flip = 1 if primitive(normal) == hp.normal else -1
        planes.append(hp)
        signs.append(sign * flip)
    return Hull(tuple(pts), Incidence(d, n, facets), tuple(planes), tuple(signs))


def hull_facets(points) -> Incidence:
    return hull(points).incidence


def supporting_functional(points, face):
    """Integer functional maximised exactly on ``face``.

    Returns ``(normal, (max over non-face points, min over face points))``.
    """
    H = hull(points)
    lat = build_lattice(H.incidence)
    fmask = mask_of(face)
    if fmask == 0 or fmask == lat.full or not lat.is_face(fmask):
        raise GeometryError(f"{sorted(face)} is not a proper face of the hull")
    d = H.incidence.d
    c = [0] * d
    for F, hp, sgn in zip(H.incidence.facet_masks, H.planes, H.outward):
        if F & fmask == fmask:
            c = [a + sgn * b for a, b in zip(c, hp.normal)]
    c = tuple(c)
    vals = [sum(a * b for a, b in zip(c, p)) for p in H.points]
    inside = [v for i, v in enumerate(vals) if fmask >> i & 1]
    outside = [v for i, v in enumerate(vals) if not fmask >> i & 1]
    return c, (max(outside), min(inside))


def truncate_face_geo(points, face) -> list:
    """Cut off ``face`` with a hyperplane halfway across the separation gap.

    Output order: surviving points in input order, then one new point per
    edge leaving the face, ordered by (face endpoint, other endpoint).
    """
    pts = [as_point(p) for p in points]
    c, (lo, hi) = supporting_functional(pts, face)
    if hi <= lo:
        raise GeometryError(f"face {sorted(face)} not strictly separated (gap {hi - lo})")
    t = (lo + hi) / 2
    fmask = mask_of(face)
    lat = build_lattice(hull_facets(pts))
    crossing = []
    for e in lat.edges:
        u, w = members(e)
        if (fmask >> u & 1) != (fmask >> w & 1):
            if not fmask >> u & 1:
                u, w = w, u
            crossing.append((u, w))
    new = []
    for u, w in sorted(crossing):
        cu = sum(a * b for a, b in zip(c, pts[u]))
        cw = sum(a * b for a, b in zip(c, pts[w]))
        lam = (cu - t) / (cu - cw)
        new.append(tuple(a + lam * (b - a) for a, b in zip(pts[u], pts[w])))
    keep = [p for i, p in enumerate(pts) if not fmask >> i & 1]
    return keep + new


# --------------------------------------------------------------------------
# coordinate models used by the catalog

def unit(d, i) -> RationalPoint:
    return tuple(Fraction(int(j == i)) for j in range(d))


def triplex_points(d, s) -> list:
    """(s, d-s)-triplex: {0,1} x unit (s-1)-simplex, apexes e_{s+1}..e_d.

    Vertex order matches ``catalog.triplex``: prism vertex (x, j) at index
    2*j + x, then the apexes.
    """
    pts = []
    for j in range(s):
        for x in (0, 1):
            p = [Fraction(0)] * d
            p[0] = Fraction(x)
            if j:
                p[j] = Fraction(1)
            pts.append(tuple(p))
    pts += [unit(d, i) for i in range(s, d)]
    return pts


def sigma_points(d) -> list:
    """0, e1, e2, e1+e2, then e1+e_k, e2+e_k, e1+e2+2e_k for k = 3..d."""
    e = [unit(d, i) for i in range(d)]
    add = lambda *vs: tuple(sum(c) for c in zip(*vs))
    pts = [tuple(Fraction(0) for _ in range(d)), e[0], e[1], add(e[0], e[1])]
    for k in range(2, d):
        two = tuple(2 * c for c in e[k])
        pts += [add(e[0], e[k]), add(e[1], e[k]), add(e[0], e[1], two)]
    return pts


def affine_image(points, matrix, shift=None) -> list:
    shift = shift or [0] * len(matrix)
    return [tuple(sum(Fraction(a) * b for a, b in zip(row, p)) + s
                  for row, s in zip(matrix, shift)) for p in points]
