"""Purely combinatorial polytope constructors on ``Incidence`` objects.

Everything here works on vertex-facet incidences only; coordinates live in
``geokernel``. Each constructor rebuilds a lattice of its output so that a
bad construction fails loudly at the point it was made.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DomainError
from .lattice import Incidence, build_lattice, degrees, mask_of, members


def simplex(d: int) -> Incidence:
    if d < 0:
        raise DomainError(f"simplex: d={d} < 0")
    if d == 0:
        return Incidence(0, 1, ((),))
    verts = range(d + 1)
    return Incidence(d, d + 1, tuple(tuple(v for v in verts if v != skip) for skip in verts))


def product(P: Incidence, Q: Incidence) -> Incidence:
    """Cartesian product; vertex (i, j) gets index i * Q.n + j."""
    if Q.d == 0:
        return P
    if P.d == 0:
        return Q
    qn = Q.n
    allP, allQ = range(P.n), range(Q.n)
    facets = [tuple(i * qn + j for i in F for j in allQ) for F in P.facets]
    facets += [tuple(i * qn + j for i in allP for j in G) for G in Q.facets]
    return Incidence(P.d + Q.d, P.n * Q.n, tuple(facets))


def multifold_pyramid(P: Incidence, t: int) -> Incidence:
    """t-fold pyramid; the apexes are vertices P.n .. P.n+t-1."""
    if t < 0:
        raise DomainError(f"multifold_pyramid: t={t} < 0")
    if t == 0:
        return P
    n = P.n + t
    apexes = tuple(range(P.n, n))
    facets = [tuple(F) + apexes for F in P.facets]
    facets += [tuple(v for v in range(n) if v != a) for a in apexes]
    return Incidence(P.d + t, n, tuple(facets))


def pyramid(P: Incidence) -> Incidence:
    return multifold_pyramid(P, 1)


def prism(P: Incidence) -> Incidence:
    return product(P, simplex(1))


def wedge(P: Incidence, face) -> Incidence:
    """Wedge of P at a proper nonempty face (given as a vertex collection).

    Vertices of the face stay single; every other vertex v is doubled into
    copies (v,0), (v,1). Facets: the two bases plus a lift of every facet of
    P other than the face itself.
    """
    lat = build_lattice(P)
    fmask = mask_of(face)
    if not lat.is_face(fmask):
        raise DomainError(f"wedge: {sorted(face)} is not a face")
    if fmask == 0 or fmask == lat.full:
        raise DomainError("wedge: face must be proper and nonempty")
    index = {}
    for v in range(P.n):
        if fmask >> v & 1:
            index[v] = len(index)
    for v in range(P.n):
        if not fmask >> v & 1:
            index[(v, 0)] = len(index)
            index[(v, 1)] = len(index)

    def copy(v, level):
        return index[v] if fmask >> v & 1 else index[(v, level)]

    base0 = tuple(copy(v, 0) for v in range(P.n))
    base1 = tuple(copy(v, 1) for v in range(P.n))
    facets = [base0, base1]
    for G in P.facets:
        if mask_of(G) == fmask:
            continue
        lift = []
        for v in G:
            if fmask >> v & 1:
                lift.append(index[v])
            else:
                lift += [index[(v, 0)], index[(v, 1)]]
        facets.append(tuple(lift))
    return Incidence(P.d + 1, len(index), tuple(facets))


def wedge_base_facet(P: Incidence, face, level: int = 0) -> tuple:
    """Vertex set of base ``level`` inside ``wedge(P, face)`` (same indexing)."""
    fmask = mask_of(face)
    inside = [v for v in range(P.n) if fmask >> v & 1]
    out = [v for v in range(P.n) if not fmask >> v & 1]
    pos = {v: i for i, v in enumerate(inside)}
    for j, v in enumerate(out):
        pos[(v, 0)] = len(inside) + 2 * j
        pos[(v, 1)] = len(inside) + 2 * j + 1
    return tuple(sorted(pos[v] if fmask >> v & 1 else pos[(v, level)] for v in range(P.n)))


def truncate_simple_vertex(P: Incidence, v: int) -> Incidence:
    """Cut off a simple vertex; new vertices w_u (one per neighbour u) are appended."""
    lat = build_lattice(P)
    if not 0 <= v < P.n:
        raise DomainError(f"truncate_simple_vertex: unknown vertex {v}")
    deg = degrees(lat)[v]
    if deg != P.d:
        raise DomainError(
            f"truncate_simple_vertex: vertex {v} has degree {deg} != d={P.d} (nonsimple); "
            "use geokernel.truncate_face_geo for nonsimple vertices")
    bit = 1 << v
    nbrs = sorted(u for e in lat.edges if e & bit for u in members(e) if u != v)
    keep = [u for u in range(P.n) if u != v]
    index = {u: i for i, u in enumerate(keep)}
    for u in nbrs:
        index[("w", u)] = len(index)
    facets = []
    for G in P.facets:
        if v in G:
            new = [index[u] for u in G if u != v] + [index[("w", u)] for u in nbrs if u in G]
        else:
            new = [index[u] for u in G]
        facets.append(tuple(new))
    facets.append(tuple(index[("w", u)] for u in nbrs))
    out = Incidence(P.d, len(index), tuple(facets))
    build_lattice(out)
    return out


def dual(P: Incidence) -> Incidence:
    """Polar dual: vertices are P's facets (lattice order), facets are P's vertices."""
    if P.d == 0:
        return P
    lat = build_lattice(P)
    facets = lat.facets
    new = tuple(tuple(i for i, F in enumerate(facets) if F >> v & 1) for v in range(P.n))
    return Incidence(P.d, len(facets), new)


def relabel(P: Incidence, perm) -> Incidence:
    """Apply a vertex permutation ``perm[old] = new``."""
    return Incidence(P.d, P.n, tuple(tuple(perm[v] for v in F) for F in P.facets))


# --------------------------------------------------------------------------
# recipes

OPS = ("simplex", "product", "pyramid", "prism", "wedge", "truncate_simple_vertex",
       "dual", "incidence", "family")


@dataclass(frozen=True)
class ConstructionRecipe:
    """Operation tree; leaves are ``simplex``, ``incidence`` or ``family``."""

    op: str
    params: dict = field(default_factory=dict)
    children: tuple = ()

    @classmethod
    def from_json(cls, obj) -> "ConstructionRecipe":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or "op" not in obj:
            raise DomainError(f"recipe node must be an object with 'op': {obj!r}")
        op = obj["op"]
        if op not in OPS:
            raise DomainError(f"unknown recipe op {op!r}; expected one of {OPS}")
        kids = []
        for key in ("of", "left", "right"):
            if key in obj:
                kids.append(cls.from_json(obj[key]))
        params = {k: v for k, v in obj.items() if k not in ("op", "of", "left", "right")}
        return cls(op, params, tuple(kids))

    def evaluate(self) -> Incidence:
        p, kids = self.params, [c.evaluate() for c in self.children]
        need = {"product": 2, "simplex": 0, "incidence": 0, "family": 0}.get(self.op, 1)
        if len(kids) != need:
            raise DomainError(f"recipe op {self.op!r} takes {need} operand(s), got {len(kids)}")
        if self.op == "simplex":
            return simplex(int(p["d"]))
        if self.op == "incidence":
            return Incidence.from_json(p)
        if self.op == "family":
            from .catalog import FamilySpec, build
            return build(FamilySpec.from_json(p)).incidence
        if self.op == "product":
            return product(*kids)
        if self.op == "pyramid":
            return multifold_pyramid(kids[0], int(p.get("t", 1)))
        if self.op == "prism":
            return prism(kids[0])
        if self.op == "wedge":
            return wedge(kids[0], p["face"])
        if self.op == "truncate_simple_vertex":
            return truncate_simple_vertex(kids[0], int(p["v"]))
        if self.op == "dual":
            return dual(kids[0])
        raise DomainError(f"unhandled op {self.op!r}")  # pragma: no cover


def evaluate_recipe(obj) -> Incidence:
    return ConstructionRecipe.from_json(obj).evaluate()


__all__ = [
    "simplex", "product", "multifold_pyramid", "pyramid", "prism", "wedge",
    "wedge_base_facet", "truncate_simple_vertex", "dual", "relabel",
    "ConstructionRecipe", "evaluate_recipe",
]
