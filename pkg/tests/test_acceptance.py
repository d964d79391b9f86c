"""Acceptance criteria, one test each, with wall-clock limits.

Run alone with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``;
the terminal summary prints one PASS/FAIL line per criterion.
"""
import sys

import pytest

from polylbt import bounds, verify
from polylbt.catalog import FamilySpec, build
from polylbt.construct import prism, simplex, truncate_simple_vertex
from polylbt.geokernel import hull_facets, sigma_points
from polylbt.lattice import build_lattice


def fv(spec):
    return build_lattice(build(spec).incidence).fvector().proper


def test_01_sigma4_from_coordinates(criterion):
    with criterion(1, "Sigma(4) hull: 7 facets, f = (10,21,18,7)", 5):
        inc = hull_facets(sigma_points(4))
        f = build_lattice(inc).fvector().proper
        assert len(inc.facets) == 7
        assert f == (10, 21, 18, 7)
        assert list(f) == [bounds.sigma_fvector(4, k) for k in range(4)]
        assert list(f) == [bounds.eta(10, 4, k) for k in range(4)]


def test_02_j44_by_truncation(criterion):
    with criterion(2, "J(4,4) by vertex truncation of the 4-prism = eta(11,4)", 1):
        f = build_lattice(truncate_simple_vertex(prism(simplex(3)), 0)).fvector().proper
        assert f == (11, 22, 18, 7)
        assert list(f) == [bounds.eta(11, 4, k) for k in range(4)]


def test_03_equal_fvector_families(criterion):
    with criterion(3, "f(J(3,d)) = f(A(d)); f(C(d)) = f(Sigma(d)) = f(J(d-1,d)), d = 4..7", 30):
        for d in range(4, 8):
            assert fv(FamilySpec("J", d, {"ell_plus_1": 3})) == fv(FamilySpec("A", d))
            c = fv(FamilySpec("C", d))
            assert c == fv(FamilySpec("SIGMA", d))
            assert c == fv(FamilySpec("J", d, {"ell_plus_1": d - 1}))


def test_04_rho_matches_lattice(criterion):
    with criterion(4, "rho(a,m,d,k) = lattice f-vector, 2 <= a <= d <= 7", 60):
        count = 0
        for d in range(2, 8):
            for a in range(2, d + 1):
                for m in range(1, a // 2 + 1):
                    got = fv(FamilySpec("TSTAR_DUAL", d, {"a": a, "m": m}))
                    assert list(got) == [bounds.rho(a, m, d, k) for k in range(d)], (d, a, m)
                    assert got[0] == d + 1 + m * (a - m)
                    count += 1
        assert count == sum((a // 2) for d in range(2, 8) for a in range(2, d + 1))


def test_05_dplus2_facet_bound(criterion):
    with criterion(5, "d+2 facets: rho_k >= tau(n,d,k) for d = 5,6,7, n in [2d+1..3d-1]", 60):
        checked = 0
        for d in (5, 6, 7):
            for n in range(2 * d + 1, 3 * d):
                rep = verify.suite_dplus2_case(d, n)
                assert rep.ok, rep.failed()[:3]
                checked += len(rep.cases)
        assert checked > 0


def test_06_identities_and_inequalities(criterion):
    with criterion(6, "binomial identities (d <= 30) and inequalities (d <= 20)", 120):
        ident = verify.suite_identities(30)
        ineq = verify.suite_inequalities(20)
        assert ident.ok, ident.failed()[:3]
        assert ineq.ok, ineq.failed()[:3]
        for rep, prefix in ((ident, "I"), (ineq, "Q")):
            items = {c.params["item"] for c in rep.cases}
            assert items == {f"{prefix}{i}" for i in range(1, 8)}


def test_07_lbt_main_instances(criterion):
    with criterion(7, "catalog, d <= 6: f_k >= eta(2d+l,d,k); equality only with d+3 facets", 60):
        rep = verify.suite_lbt_main(6)
        assert rep.ok, rep.failed()[:3]
        assert any(c.params.get("check") == "equality-facets" for c in rep.cases)


def test_08_xue_bound(criterion):
    with criterion(8, "Xue counting bound over facet complements, d <= 5", 60):
        rep = verify.suite_xue(5)
        assert rep.ok, rep.failed()[:3]
        assert rep.cases


def test_09_four_polytope_predicate(criterion):
    with criterion(9, "4-polytope (f0,f2) predicate: exceptions, (5,10), f0^2-3f0-1", 1):
        assert len(bounds.F0F2_EXCEPTIONS) == 10
        for f0, f2 in sorted(bounds.F0F2_EXCEPTIONS):
            assert not bounds.four_polytope_f0f2(f0, f2)
        assert bounds.four_polytope_f0f2(5, 10)
        for f0 in range(6, 13):
            assert not bounds.four_polytope_f0f2(f0, f0 * f0 - 3 * f0 - 1)


def test_10_wedge_formula(criterion):
    with criterion(10, "wedge formula for every (catalog polytope, facet), d <= 5", 30):
        rep = verify.suite_wedge(5)
        assert rep.ok, rep.failed()[:3]
        assert rep.cases


def test_11_candidate_function_analysis(criterion):
    with criterion(11, "candidate scan reproduces the pairwise comparisons", 10):
        rows, rep = verify.scan_conjecture(4, 9)
        assert rep.ok, rep.failed()[:3]
        items = {c.params["item"] for c in rep.cases}
        assert {"iii", "iii-signs", "iv-a", "iv-c", "v", "d4-n12-min"} <= items
        for c in rep.cases:
            if c.params["item"] == "iii":
                d, s3 = c.params["d"], c.params["s3"]
                assert (c.actual > 0) - (c.actual < 0) == (d - 2 * s3 - 3 > 0) - (d - 2 * s3 - 3 < 0)
            if c.params["item"] == "iv-a":
                assert c.actual == 0


def test_12_everything_validates(criterion):
    with criterion(12, "validate: zero failures over every constructed lattice"):
        reps = [verify.suite_validate(6), verify.suite_constructions(7), verify.suite_wedge(5)]
        validate_cases = [c for r in reps for c in r.cases if c.params.get("check") == "validate"]
        assert {r.suite for r in reps} == {"validate", "constructions", "wedge"}
        assert len(validate_cases) > 500
        failed = [c for c in validate_cases if not c.passed]
        assert not failed, failed[:3]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
