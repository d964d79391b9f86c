"""Verification campaigns: formulas against lattices, and finitely checkable statements.

Every suite returns a ``Report``. Cases are appended in a fixed loop order
(dimension, then family order from ``catalog.instances``, then parameters),
so two runs with the same arguments serialise to identical JSON.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache

from . import bounds
from .catalog import (FamilySpec, build, c_from_edge_truncation, degree_profile,
                      enumerate_dplus2_facet_types, instances, sigma_from_coordinates)
from .construct import multifold_pyramid, product, simplex, wedge
from .errors import DomainError
from .exactmath import (check_identity, check_inequality, identity_grid,
                        inequality_grid)
from .lattice import (FVector, build_lattice, excess_degree, members, validate,
                      xue_bound_check)


@dataclass
class Case:
    params: dict
    expected: object
    actual: object
    passed: bool
    witness: str | None = None

    def to_json(self) -> dict:
        out = {"params": self.params, "expected": self.expected,
               "actual": self.actual, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    suite: str
    cases: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def add(self, params, expected, actual, passed, witness=None):
        if not passed and witness is None:
            witness = f"expected {expected!r}, got {actual!r}"
        self.cases.append(Case(dict(params), expected, actual, bool(passed), witness))

    @property
    def failures(self) -> int:
        return sum(not c.passed for c in self.cases)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def failed(self) -> list:
        return [c for c in self.cases if not c.passed]

    def to_json(self) -> dict:
        out = {"suite": self.suite, "cases": [c.to_json() for c in self.cases],
               "failures": self.failures}
        if self.extra:
            out["extra"] = self.extra
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    def summary(self) -> str:
        return f"{self.suite}: {len(self.cases)} cases, {self.failures} failures"


def merge(name, reports) -> Report:
    out = Report(name)
    for r in reports:
        for c in r.cases:
            out.cases.append(Case({"suite": r.suite, **c.params}, c.expected, c.actual,
                                  c.passed, c.witness))
    return out


# --------------------------------------------------------------------------
# cached builds

def _key(spec: FamilySpec):
    return spec.family, spec.d, tuple(sorted(spec.params.items()))


@lru_cache(maxsize=None)
def _built(key):
    family, d, params = key
    b = build(FamilySpec(family, d, dict(params)))
    return b, build_lattice(b.incidence)


def built(spec: FamilySpec):
    """(Built, FaceLattice) for a spec, memoised across suites."""
    return _built(_key(spec))


def catalog_lattices(d_max, d_min=1):
    """Yield (spec, Built, lattice) for every catalog instance with d_min <= d <= d_max."""
    for d in range(d_min, d_max + 1):
        for spec in instances(d, geometric=d <= 6):
            b, lat = built(spec)
            yield spec, b, lat


def _fv(x) -> list:
    return list(x.proper) if isinstance(x, FVector) else list(x)


# --------------------------------------------------------------------------

def suite_formula_vs_lattice(d_max=5) -> Report:
    rep = Report("formula-vs-lattice")
    for spec, b, lat in catalog_lattices(d_max):
        got = lat.fvector()
        rep.add(spec.to_json(), _fv(b.expected), _fv(got), got == b.expected)
    # second routes for Sigma and C, compared by f-vector and degree profile
    for d in range(4, min(d_max, 6) + 1):
        for fam, other in (("SIGMA", sigma_from_coordinates), ("C", c_from_edge_truncation)):
            b, lat = built(FamilySpec(fam, d))
            alt = other(d)
            alt_fv = build_lattice(alt).fvector()
            rep.add({"family": fam, "d": d, "check": "second-route"},
                    [_fv(alt_fv), [list(x) for x in degree_profile(alt)]],
                    [_fv(lat.fvector()), [list(x) for x in degree_profile(b.incidence)]],
                    alt_fv == lat.fvector() and degree_profile(alt) == degree_profile(b.incidence))
    return rep


def suite_validate(d_max=6) -> Report:
    """Lattice validity plus the structural facts every polytope must satisfy."""
    rep = Report("validate")
    for spec, b, lat in catalog_lattices(d_max):
        v = validate(lat)
        rep.add({**spec.to_json(), "check": "validate"}, [], [list(map(str, f)) for f in v.failures],
                v.ok)
        d = lat.d
        if d >= 2:
            ex = excess_degree(lat)
            rep.add({**spec.to_json(), "check": "excess"}, f"0 or >= {d - 2}", ex,
                    ex == 0 or ex >= d - 2)
            if ex == 0:
                nf = lat.fvector()[d - 1]
                lb = [bounds.lbt_simple(d, nf, k) for k in range(d - 1)]
                act = [lat.fvector()[k] for k in range(d - 1)]
                rep.add({**spec.to_json(), "check": "simple-lbt"}, lb, act,
                        all(a >= x for a, x in zip(act, lb)))
        if spec.family == "J":
            base = built(FamilySpec("TRIPLEX", d, {"s": spec.p("ell_plus_1")}))[1].fvector()
            f = lat.fvector()
            want = [base[0] + d - 1, base[d - 1] + 1]
            rep.add({**spec.to_json(), "check": "truncation-counts"}, want, [f[0], f[d - 1]],
                    want == [f[0], f[d - 1]])
    return rep


def _convolve(P, Q) -> list:
    fp = [P.fvector()[k] for k in range(0, P.d + 1)]
    fq = [Q.fvector()[k] for k in range(0, Q.d + 1)]
    d = P.d + Q.d
    return [sum(fp[i] * fq[k - i] for i in range(0, k + 1) if i <= P.d and k - i <= Q.d)
            for k in range(d)]


def suite_constructions(d_max=7) -> Report:
    """Product convolution and multifold-pyramid binomial form on the products the catalog uses."""
    rep = Report("constructions")
    for a in range(1, d_max + 1):
        for b in range(1, d_max + 1 - a):
            P, Q = build_lattice(simplex(a)), build_lattice(simplex(b))
            got = build_lattice(product(simplex(a), simplex(b))).fvector()
            want = _convolve(P, Q)
            rep.add({"product": [a, b]}, want, _fv(got), want == _fv(got))
            for t in range(0, d_max + 1 - a - b):
                pl = build_lattice(multifold_pyramid(product(simplex(a), simplex(b)), t))
                pyr = pl.fvector()
                rep.add({"product": [a, b], "pyramid": t, "check": "validate"}, [],
                        [list(map(str, f)) for f in validate(pl).failures], validate(pl).ok)
                want = [sum(bounds.binom(t, i) * got[k - i] for i in range(0, t + 1))
                        for k in range(a + b + t)]
                rep.add({"product": [a, b], "pyramid": t}, want, _fv(pyr), want == _fv(pyr))
    return rep


def suite_dplus2_case(d, n_vertices) -> Report:
    """All d-polytopes with d+2 facets and >= n vertices against tau."""
    rep = Report("dplus2")
    n = n_vertices
    ks = range(1, d - 1)
    eligible = [(s.p("a"), s.p("m")) for s in enumerate_dplus2_facet_types(d)
                if bounds.dplus2_vertex_count(s.p("a"), s.p("m"), d) >= n]
    if not eligible:
        # no d-polytope with d+2 facets has this many vertices
        rep.extra = {"eligible": 0}
        return rep
    taus = {k: bounds.tau(n, d, k) for k in ks}
    best = {}
    for a, m in eligible:
        for k in ks:
            r = bounds.rho(a, m, d, k)
            rep.add({"d": d, "n": n, "a": a, "m": m, "k": k}, taus[k], r, r >= taus[k])
            if k not in best or r < best[k][0]:
                best[k] = (r, [a, m])
    rep.extra = {"eligible": len(eligible), "tau": [taus[k] for k in ks],
                 "minimum": [best[k][0] if k in best else None for k in ks],
                 "argmin": [best[k][1] if k in best else None for k in ks],
                 "tight": [k in best and best[k][0] == taus[k] for k in ks]}
    return rep


def suite_lbt_main(d_max=6) -> Report:
    """Catalog instances with 2d+l vertices (1 <= l <= d-1) and >= d+3 facets against eta."""
    rep = Report("lbt-main")
    for spec, b, lat in catalog_lattices(d_max, d_min=3):
        d, f = lat.d, lat.fvector()
        n, facets = f[0], f[d - 1]
        ell = n - 2 * d
        if not 1 <= ell <= d - 1 or facets < d + 3:
            continue
        eq_any = False
        for k in range(1, d - 1):
            e = bounds.eta(n, d, k)
            eq_any |= f[k] == e
            rep.add({**spec.to_json(), "k": k}, e, f[k], f[k] >= e)
        if eq_any:
            rep.add({**spec.to_json(), "check": "equality-facets"}, d + 3, facets, facets == d + 3)
        if spec.family == "PYR_OVER_J" and spec.p("t") >= 1:
            eq_ks = [k for k in range(1, d - 1) if f[k] == bounds.eta(n, d, k)]
            want = [k for k in range(1, d - 1) if k >= d - ell]
            rep.add({**spec.to_json(), "check": "equality-range"}, want, eq_ks, eq_ks == want)
    return rep


def facet_complement_sequences(lat):
    for F in lat.facets:
        yield list(members(lat.full & ~F))[: lat.d + 1]


def suite_xue(d_max=5) -> Report:
    rep = Report("xue")
    for spec, b, lat in catalog_lattices(d_max, d_min=2):
        for fi, seq in enumerate(facet_complement_sequences(lat)):
            for k in range(0, lat.d + 1):
                params = {**spec.to_json(), "facet": fi, "k": k}
                try:
                    res = xue_bound_check(lat, seq, k)
                except AssertionError as exc:
                    rep.add(params, "face chain", None, False, str(exc))
                    continue
                rep.add(params, res.rhs, res.lhs, res.ok)
    return rep


def suite_wedge(d_max=5) -> Report:
    """Wedge at a facet: f_k = 2 f_k(P) + f_{k-1}(P) - f_k(F) - f_{k-1}(F), k = -1..d+1."""
    rep = Report("wedge")
    for spec, b, lat in catalog_lattices(d_max, d_min=2):
        fp = lat.fvector()
        for fi, F in enumerate(lat.facets):
            ff = lat.sub_fvector(F)
            want = [2 * fp[k] + fp[k - 1] - ff[k] - ff[k - 1] for k in range(-1, lat.d + 2)]
            WL = build_lattice(wedge(b.incidence, members(F)))
            got = [WL.fvector()[k] for k in range(-1, lat.d + 2)]
            rep.add({**spec.to_json(), "facet": fi}, want, got, want == got)
            v = validate(WL)
            rep.add({**spec.to_json(), "facet": fi, "check": "validate"}, [],
                    [list(map(str, f)) for f in v.failures], v.ok)
    return rep


def suite_prior_theorems(d_max=6) -> Report:
    rep = Report("prior")
    for d, fam, params in ((3, "SIGMA", {}), (3, "J", {"ell_plus_1": 2})):
        got = built(FamilySpec(fam, d, params))[1].fvector()
        rep.add({"family": fam, "d": d, **params}, [7, 11, 6], _fv(got), _fv(got) == [7, 11, 6])
    for spec, b, lat in catalog_lattices(d_max, d_min=2):
        d, f = lat.d, lat.fvector()
        n, facets = f[0], f[d - 1]
        if spec.family == "TRIPLEX":
            want = [bounds.theta(d, spec.p("s"), k) for k in range(d)]
            rep.add({**spec.to_json(), "check": "triplex-theta"}, want, _fv(f), want == _fv(f))
        s = min(n - d, d)
        eq_any = False
        for k in range(1, d):
            th = bounds.theta(d, s, k)
            eq_any |= f[k] == th and k <= d - 2
            rep.add({**spec.to_json(), "check": "theta", "k": k}, th, f[k], f[k] >= th)
        # s = 1 is the simplex alone, with d+1 facets
        if eq_any and s >= 2:
            rep.add({**spec.to_json(), "check": "theta-equality-facets"}, d + 2, facets,
                    facets == d + 2)
        if d >= 4 and n >= 2 * d + 1 and facets >= d + 3:
            j2 = [bounds.eta(2 * d + 1, d, k) for k in range(1, d - 1)]
            act = [f[k] for k in range(1, d - 1)]
            for k, j, a in zip(range(1, d - 1), j2, act):
                rep.add({**spec.to_json(), "check": "J2", "k": k}, j, a, a >= j)
            if any(a == j for a, j in zip(act, j2)):
                want = _fv(bounds.formula_fvector(bounds.eta, 2 * d + 1, d, d=d))
                rep.add({**spec.to_json(), "check": "J2-equality"}, want, _fv(f), _fv(f) == want)
    return rep


def suite_identities(d_max=30) -> Report:
    rep = Report("identities")
    for item in ("I1", "I2", "I3", "I4", "I5", "I6", "I7"):
        for params in identity_grid(item, d_max):
            c = check_identity(item, **params)
            ok = c.holds and all(c.notes.values())
            rep.add({"item": item, **params}, c.rhs, c.lhs, ok)
    return rep


def suite_inequalities(d_max=20) -> Report:
    rep = Report("inequalities")
    for item in ("Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7"):
        for params in inequality_grid(item, d_max):
            c = check_inequality(item, **params)
            rep.add({"item": item, **params}, c.rhs, c.lhs, c.holds)
    return rep


# --------------------------------------------------------------------------
# candidate-minimiser scan

CSV_COLUMNS = ["d", "n", "k", "f1", "f2", "f3", "f4", "f5", "min", "argmin"]


def _param_for(i, d, n):
    lo, hi = bounds.CONJ_RANGES[i](d)
    for s in range(lo, hi + 1):
        if bounds.conjecture_f(i, d, s, 0) == n:
            return s
    return None


def conjecture_table(d_min, d_max) -> list:
    rows = []
    for d in range(d_min, d_max + 1):
        for n in range(3 * d, 4 * d - 3):
            params = {i: _param_for(i, d, n) for i in range(1, 6)}
            for k in range(d):
                row = {"d": d, "n": n, "k": k}
                vals = {}
                for i, s in params.items():
                    row[f"f{i}"] = "" if s is None else bounds.conjecture_f(i, d, s, k)
                    if s is not None:
                        vals[f"f{i}"] = row[f"f{i}"]
                if vals:
                    lo = min(vals.values())
                    row["min"] = lo
                    row["argmin"] = "|".join(name for name, v in vals.items() if v == lo)
                else:
                    row["min"], row["argmin"] = "", ""
                rows.append(row)
    return rows


def table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _sign(x):
    return (x > 0) - (x < 0)


def function_analysis(d_min, d_max) -> Report:
    """The pairwise comparisons between the five candidate face-count functions."""
    f = bounds.conjecture_f
    rep = Report("function-analysis")
    R = bounds.CONJ_RANGES

    def inside(i, d, s):
        lo, hi = R[i](d)
        return lo <= s <= hi

    signs = set()
    for d in range(max(d_min, 4), d_max + 1):
        for s2 in range(R[2](d)[0], R[2](d)[1] + 1):
            s1 = 2 * s2 - d
            if inside(1, d, s1):
                for k in range(1, d):
                    a, b = f(1, d, s1, k), f(2, d, s2, k)
                    rep.add({"item": "i", "d": d, "s1": s1, "s2": s2, "k": k}, f"<= {b}", a, a <= b)
        for s4 in range(R[4](d)[0], R[4](d)[1] + 1):
            s2 = s4 + 1
            if inside(2, d, s2):
                for k in range(1, d):
                    a, b = f(2, d, s2, k), f(4, d, s4, k)
                    rep.add({"item": "ii", "d": d, "s2": s2, "s4": s4, "k": k}, b, a, a == b)
        for s3 in range(R[3](d)[0], R[3](d)[1] + 1):
            s1 = s3 + 3
            if not inside(1, d, s1):
                continue
            diff = f(1, d, s1, 1) - f(3, d, s3, 1)
            rep.add({"item": "iii", "d": d, "s1": s1, "s3": s3, "k": 1}, d - 2 * s3 - 3, diff,
                    diff == d - 2 * s3 - 3 and _sign(diff) == _sign(d - 2 * s3 - 3))
            signs.add(_sign(diff))
        for s5 in (3, 4, 5):
            s1 = s5 + d - 5
            if not inside(1, d, s1) or f(1, d, s1, 0) != f(5, d, s5, 0):
                continue
            for k in range(1, d - 1):
                a, b = f(1, d, s1, k), f(5, d, s5, k)
                p = {"d": d, "s1": s1, "s5": s5, "k": k}
                if s5 == 3:
                    rep.add({"item": "iv-a", **p}, 0, a - b, a == b)
                elif d >= 5:
                    rep.add({"item": "iv-b", **p}, f"<= {b}", a, a <= b)
                else:
                    rep.add({"item": "iv-c", **p}, f"> {b}", a, a > b)
        if d == 4:
            s3 = R[3](4)[0]
            assert f(3, 4, s3, 0) == f(5, 4, 5, 0)
            for k in (1, 2):
                a, b = f(3, 4, s3, k), f(5, 4, 5, k)
                rep.add({"item": "v", "d": 4, "s3": s3, "s5": 5, "k": k}, f"> {b}", a, a > b)
            f3_counts = [f(3, 4, s, 0) for s in range(R[3](4)[0], R[3](4)[1] + 1)]
            rep.add({"item": "v-s5=4", "d": 4}, f"not in {f3_counts}", f(5, 4, 4, 0),
                    f(5, 4, 4, 0) not in f3_counts)
    if d_max >= 7 and d_min <= 7:
        rep.add({"item": "iii-signs", "d_min": d_min, "d_max": d_max}, [-1, 0, 1], sorted(signs),
                sorted(signs) == [-1, 0, 1])
    return rep


def scan_conjecture(d_min, d_max):
    """(CSV rows, Report) for vertex counts 3d..4d-4."""
    if d_min < 4 or d_max < d_min:
        raise DomainError(f"scan needs 4 <= d_min <= d_max, got {d_min}..{d_max}")
    rows = conjecture_table(d_min, d_max)
    rep = function_analysis(d_min, d_max)
    if d_min <= 4 <= d_max:
        for row in rows:
            if row["d"] == 4 and row["n"] == 12 and row["k"] in (1, 2):
                rep.add({"item": "d4-n12-min", "k": row["k"]}, "f5", row["argmin"],
                        row["argmin"] == "f5")
    return rows, rep


# --------------------------------------------------------------------------

SUITES = {
    "formula-vs-lattice": lambda d_max=5: suite_formula_vs_lattice(d_max),
    "validate": lambda d_max=5: suite_validate(d_max),
    "constructions": lambda d_max=5: suite_constructions(d_max),
    "lbt-main": lambda d_max=5: suite_lbt_main(d_max),
    "xue": lambda d_max=5: suite_xue(d_max),
    "wedge": lambda d_max=5: suite_wedge(d_max),
    "prior": lambda d_max=5: suite_prior_theorems(d_max),
    "identities": lambda d_max=30: suite_identities(d_max),
    "inequalities": lambda d_max=20: suite_inequalities(d_max),
}


def dplus2_all(d_max) -> Report:
    reps = [suite_dplus2_case(d, n) for d in range(4, d_max + 1)
            for n in range(2 * d + 1, 3 * d)
            if any(bounds.dplus2_vertex_count(s.p("a"), s.p("m"), d) >= n
                   for s in enumerate_dplus2_facet_types(d))]
    return merge("dplus2", reps)


def run_all(d_max=5) -> Report:
    reps = [fn(d_max) if name not in ("identities", "inequalities") else fn()
            for name, fn in SUITES.items()]
    reps.append(dplus2_all(max(d_max, 5)))
    reps.append(scan_conjecture(4, max(d_max, 7))[1])
    return merge("all", reps)

