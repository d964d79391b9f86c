"""Named polytope families, each paired with its expected f-vector.

Families and parameters (``FamilySpec.params``):

    SIMPLEX
    TRIPLEX       s in [1..d]           (d-s)-fold pyramid over T(1) x T(s-1)
    J             ell_plus_1 in [2..d]  simple-vertex truncation of a triplex
    A                                    prism over the (2, d-3)-triplex
    SIGMA / C                            wedge recursion seeded by one of two quads
    TSTAR_DUAL    a, m                  (d-a)-fold pyramid over T(m) x T(a-m)
    T_M_DPLUS2    a, m                  its dual (d+2 vertices)
    PYR_OVER_J    t in [0..d-3]         t-fold pyramid over J(d-t, d-t)
    CONJ          i, s                  the five truncation candidates

Vertex order of the triplex follows ``geokernel.triplex_points`` so that
vertex indices chosen here mean the same thing in both routes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import bounds
from .construct import (dual, multifold_pyramid, prism, product, simplex,
                        truncate_simple_vertex, wedge, wedge_base_facet)
from .errors import DomainError, GeometryError
from .exactmath import binom
from .geokernel import (hull_facets, sigma_points, triplex_points,
                        truncate_face_geo)
from .lattice import FVector, Incidence, build_lattice, degrees

FAMILIES = ("SIMPLEX", "TRIPLEX", "J", "A", "SIGMA", "C", "TSTAR_DUAL",
            "T_M_DPLUS2", "PYR_OVER_J", "CONJ")

# Sigma(3) with its vertices in coordinate order; vertex 0 is the nonsimple one.
SIGMA3 = Incidence(3, 7, ((0, 1, 2, 3), (0, 1, 4), (0, 2, 5), (0, 4, 5, 6),
                          (1, 3, 4, 6), (2, 3, 5, 6)))
# A quad through the nonsimple vertex seeds Sigma; a quad avoiding it seeds C.
SEED_QUAD = {"SIGMA": (0, 1, 2, 3), "C": (1, 3, 4, 6)}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    d: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "family", self.family.upper())
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        _check_domain(self)

    def p(self, key):
        try:
            return int(self.params[key])
        except KeyError:
            raise DomainError(f"{self.family}: missing parameter {key!r}") from None

    def to_json(self) -> dict:
        return {"family": self.family, "d": self.d, "params": dict(self.params)}

    @classmethod
    def from_json(cls, obj) -> "FamilySpec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["family"], int(obj["d"]), dict(obj.get("params", {})))

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}(d={self.d}{',' if inner else ''}{inner})"


def _need(ok, spec, msg):
    if not ok:
        raise DomainError(f"{spec.family}: {msg}")


def _check_domain(spec: FamilySpec):
    d, f = spec.d, spec.family
    _need(d >= 1, spec, f"d={d} < 1")
    if f == "TRIPLEX":
        s = spec.p("s")
        _need(1 <= s <= d, spec, f"s={s} outside [1..{d}]")
    elif f == "J":
        lp1 = spec.p("ell_plus_1")
        _need(d >= 2, spec, f"d={d} < 2")
        _need(2 <= lp1 <= d, spec, f"ell_plus_1={lp1} outside [2..{d}]")
    elif f == "A":
        _need(d >= 3, spec, f"d={d} < 3")
    elif f in ("SIGMA", "C"):
        _need(d >= 3, spec, f"d={d} < 3")
    elif f in ("TSTAR_DUAL", "T_M_DPLUS2"):
        a, m = spec.p("a"), spec.p("m")
        _need(2 <= a <= d, spec, f"a={a} outside [2..{d}]")
        _need(1 <= m <= a // 2, spec, f"m={m} outside [1..{a // 2}]")
    elif f == "PYR_OVER_J":
        t = spec.p("t")
        _need(d >= 3, spec, f"d={d} < 3")
        _need(0 <= t <= d - 3, spec, f"t={t} outside [0..{d - 3}]")
    elif f == "CONJ":
        i, s = spec.p("i"), spec.p("s")
        _need(i in bounds.CONJ_RANGES, spec, f"i={i} not in 1..5")
        _need(d >= 4, spec, f"d={d} < 4")
        lo, hi = bounds.CONJ_RANGES[i](d)
        _need(lo <= s <= hi, spec, f"s={s} outside [{lo}..{hi}] for candidate {i}")
        # the (s, d-s)-triplex needs s <= d; only bites for i=5 at d=4
        _need(s <= d, spec, f"s={s} > d={d}: no (s, d-s)-triplex to truncate")


# --------------------------------------------------------------------------
# builders

def triplex(d, s) -> Incidence:
    return multifold_pyramid(product(simplex(s - 1), simplex(1)), d - s)


def j_polytope(d, ell_plus_1) -> Incidence:
    # vertex 0 is a prism vertex of the triplex, hence simple
    return truncate_simple_vertex(triplex(d, ell_plus_1), 0)


def a_polytope(d) -> Incidence:
    return prism(triplex(d - 1, 2))


def wedge_chain(family, d) -> Incidence:
    """Sigma(d) or C(d): W_d = wedge of W_{d-1} at its base copy of W_{d-2}."""
    P, face = SIGMA3, SEED_QUAD[family]
    for _ in range(d - 3):
        P, face = wedge(P, face), wedge_base_facet(P, face, 0)
    return P


def tstar_dual(d, a, m) -> Incidence:
    return multifold_pyramid(product(simplex(m), simplex(a - m)), d - a)


def pyr_over_j(d, t) -> Incidence:
    return multifold_pyramid(j_polytope(d - t, d - t), t)


def _geo(make):
    try:
        return hull_facets(make())
    except GeometryError as exc:
        raise DomainError(f"geometric build refused: {exc}") from None


def conj_polytope(d, i, s) -> Incidence:
    if i in (1, 4, 5):
        return _geo(lambda: _conj_points(d, i, s))
    if i == 2:
        return truncate_simple_vertex(tstar_dual(d, s, 2), 0)
    return truncate_simple_vertex(j_polytope(d, s + 1), 0)


def _conj_points(d, i, s):
    if i == 1:   # simple edge: the vertical edge over the first simplex vertex
        return truncate_face_geo(triplex_points(d, s), [0, 1])
    if i == 4:   # first apex
        return truncate_face_geo(triplex_points(d, s), [2 * s])
    # simple triangle inside the x=0 simplex copy of the prism
    return truncate_face_geo(triplex_points(d, s), [0, 2, 4])


def sigma_from_coordinates(d) -> Incidence:
    return _geo(lambda: sigma_points(d))


def c_from_edge_truncation(d) -> Incidence:
    return _geo(lambda: truncate_face_geo(triplex_points(d, 2), [0, 1]))


# --------------------------------------------------------------------------

def expected_fvector(spec: FamilySpec) -> FVector:
    d, f = spec.d, spec.family
    ks = range(d)
    if f == "SIMPLEX":
        proper = [binom(d + 1, k + 1) for k in ks]
    elif f == "TRIPLEX":
        s = spec.p("s")
        if d == 1:
            proper = [2]
        else:
            proper = [bounds.theta(d, s, k) for k in ks]
    elif f == "J":
        n = 2 * d + spec.p("ell_plus_1") - 1
        proper = [bounds.eta(n, d, k) for k in ks]
    elif f == "A":
        proper = [bounds.eta(2 * d + 2, d, k) for k in ks]
    elif f == "SIGMA":
        proper = [bounds.sigma_fvector(d, k) for k in ks]
    elif f == "C":
        proper = [bounds.eta(3 * d - 2, d, k) for k in ks]
    elif f == "TSTAR_DUAL":
        proper = [bounds.rho(spec.p("a"), spec.p("m"), d, k) for k in ks]
    elif f == "T_M_DPLUS2":
        proper = [bounds.rho(spec.p("a"), spec.p("m"), d, k) for k in ks][::-1]
    elif f == "PYR_OVER_J":
        proper = [bounds.pyr_over_J(d, spec.p("t"), k) for k in ks]
    else:
        proper = [bounds.conjecture_f(spec.p("i"), d, spec.p("s"), k) for k in ks]
    return FVector.from_proper(d, proper)


@dataclass(frozen=True)
class Built:
    spec: FamilySpec
    incidence: Incidence
    expected: FVector

    def __iter__(self):
        return iter((self.incidence, self.expected))

    def to_json(self) -> dict:
        return {"spec": self.spec.to_json(), "incidence": self.incidence.to_json(),
                "expected": list(self.expected.proper)}


def build(spec: FamilySpec) -> Built:
    d, f = spec.d, spec.family
    if f == "SIMPLEX":
        inc = simplex(d)
    elif f == "TRIPLEX":
        inc = triplex(d, spec.p("s"))
    elif f == "J":
        inc = j_polytope(d, spec.p("ell_plus_1"))
    elif f == "A":
        inc = a_polytope(d)
    elif f in ("SIGMA", "C"):
        inc = wedge_chain(f, d)
    elif f == "TSTAR_DUAL":
        inc = tstar_dual(d, spec.p("a"), spec.p("m"))
    elif f == "T_M_DPLUS2":
        inc = dual(tstar_dual(d, spec.p("a"), spec.p("m")))
    elif f == "PYR_OVER_J":
        inc = pyr_over_j(d, spec.p("t"))
    else:
        inc = conj_polytope(d, spec.p("i"), spec.p("s"))
    return Built(spec, inc, expected_fvector(spec))


def enumerate_dplus2_facet_types(d) -> list:
    """Every combinatorial type of d-polytope with d+2 facets."""
    if d < 2:
        raise DomainError(f"d={d} < 2")
    return [FamilySpec("TSTAR_DUAL", d, {"a": a, "m": m})
            for a in range(2, d + 1) for m in range(1, a // 2 + 1)]


def instances(d, *, geometric=True) -> list:
    """All admissible FamilySpecs in dimension d, in a fixed order.

    ``geometric=False`` drops the candidates that need the hull kernel.
    """
    out = [FamilySpec("SIMPLEX", d)]
    out += [FamilySpec("TRIPLEX", d, {"s": s}) for s in range(1, d + 1)]
    if d >= 2:
        out += [FamilySpec("J", d, {"ell_plus_1": e}) for e in range(2, d + 1)]
    if d >= 3:
        out += [FamilySpec("A", d), FamilySpec("SIGMA", d), FamilySpec("C", d)]
        out += [FamilySpec("PYR_OVER_J", d, {"t": t}) for t in range(0, d - 2)]
    if d >= 2:
        for spec in enumerate_dplus2_facet_types(d):
            out.append(spec)
            out.append(FamilySpec("T_M_DPLUS2", d, spec.params))
    if d >= 4:
        for i, rng in sorted(bounds.CONJ_RANGES.items()):
            if not geometric and i in (1, 4, 5):
                continue
            lo, hi = rng(d)
            out += [FamilySpec("CONJ", d, {"i": i, "s": s}) for s in range(lo, min(hi, d) + 1)]
    return out


def degree_profile(inc: Incidence) -> tuple:
    """Sorted vertex degrees and sorted facet sizes; a cheap isomorphism fingerprint."""
    lat = build_lattice(inc)
    return (tuple(sorted(degrees(lat).values())), tuple(sorted(len(F) for F in inc.facets)))
