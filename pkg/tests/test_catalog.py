import pytest

from polylbt import bounds
from polylbt.catalog import (FamilySpec, build, c_from_edge_truncation, degree_profile,
                             enumerate_dplus2_facet_types, instances, sigma_from_coordinates,
                             wedge_chain)
from polylbt.errors import DomainError
from polylbt.lattice import build_lattice, validate


def lattice_fv(spec):
    return build_lattice(build(spec).incidence).fvector().proper


def test_examples():
    assert lattice_fv(FamilySpec("TRIPLEX", 4, {"s": 2})) == (6, 13, 13, 6)
    assert lattice_fv(FamilySpec("A", 4)) == (10, 21, 18, 7)
    assert lattice_fv(FamilySpec("A", 4)) == lattice_fv(FamilySpec("J", 4, {"ell_plus_1": 3}))
    b = build(FamilySpec("TSTAR_DUAL", 5, {"a": 4, "m": 2}))
    assert b.incidence.n == 10 == b.expected[0]


def test_enumerate_dplus2():
    got = [(s.p("a"), s.p("m")) for s in enumerate_dplus2_facet_types(4)]
    assert got == [(2, 1), (3, 1), (4, 1), (4, 2)]
    assert len(enumerate_dplus2_facet_types(5)) == 6
    for d in range(2, 8):
        for spec in enumerate_dplus2_facet_types(d):
            a, m = spec.p("a"), spec.p("m")
            inc = build(spec).incidence
            assert inc.n == d + 1 + m * (a - m) and len(inc.facets) == d + 2
            assert build(FamilySpec("T_M_DPLUS2", d, spec.params)).incidence.n == d + 2
    with pytest.raises(DomainError):
        enumerate_dplus2_facet_types(1)


@pytest.mark.parametrize("fam,d,params", [
    ("TRIPLEX", 4, {"s": 5}), ("J", 4, {"ell_plus_1": 1}), ("J", 4, {"ell_plus_1": 5}),
    ("TSTAR_DUAL", 5, {"a": 6, "m": 1}), ("TSTAR_DUAL", 5, {"a": 4, "m": 3}),
    ("CONJ", 6, {"i": 5, "s": 6}), ("CONJ", 6, {"i": 6, "s": 3}), ("PYR_OVER_J", 5, {"t": 3}),
    ("SIGMA", 2, {}), ("BOGUS", 4, {}), ("TRIPLEX", 4, {}),
])
def test_domain_errors(fam, d, params):
    with pytest.raises(DomainError):
        FamilySpec(fam, d, params)


def test_geometric_build_refused_above_envelope():
    with pytest.raises(DomainError, match="envelope"):
        build(FamilySpec("CONJ", 9, {"i": 1, "s": 7}))


@pytest.mark.parametrize("d", [3, 4, 5])
def test_every_instance_matches_formula(d):
    for spec in instances(d):
        b = build(spec)
        lat = build_lattice(b.incidence)
        assert validate(lat).ok, spec.label()
        assert lat.fvector() == b.expected, spec.label()


def test_sigma_routes_agree():
    for d in (4, 5, 6):
        a = build_lattice(wedge_chain("SIGMA", d)).fvector()
        b = build_lattice(sigma_from_coordinates(d)).fvector()
        assert a == b
        assert degree_profile(wedge_chain("SIGMA", d)) == degree_profile(sigma_from_coordinates(d))


def test_c_routes_agree():
    for d in (4, 5, 6):
        assert degree_profile(wedge_chain("C", d)) == degree_profile(c_from_edge_truncation(d))
        # Sigma and C share f-vectors but are different polytopes
        assert degree_profile(wedge_chain("C", d)) != degree_profile(wedge_chain("SIGMA", d))


def test_equal_fvector_families():
    for d in range(4, 8):
        j3 = lattice_fv(FamilySpec("J", d, {"ell_plus_1": 3}))
        assert j3 == lattice_fv(FamilySpec("A", d))
        c = lattice_fv(FamilySpec("C", d))
        assert c == lattice_fv(FamilySpec("SIGMA", d)) == lattice_fv(FamilySpec("J", d, {"ell_plus_1": d - 1}))
        assert list(c) == [bounds.eta(3 * d - 2, d, k) for k in range(d)]


def test_json_roundtrip():
    spec = FamilySpec.from_json('{"family": "J", "d": 5, "params": {"ell_plus_1": 3}}')
    assert spec.label() == "J(d=5,ell_plus_1=3)"
    assert FamilySpec.from_json(spec.to_json()) == spec
    out = build(spec).to_json()
    assert out["expected"] == [bounds.eta(12, 5, k) for k in range(5)]
