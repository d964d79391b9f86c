"""Cross-check Sigma(d) and C(d): coordinates / edge truncation against the wedge recursion."""
import sys
import time

from polylbt import bounds
from polylbt.catalog import c_from_edge_truncation, degree_profile, sigma_from_coordinates, wedge_chain
from polylbt.lattice import build_lattice

ok = True
for d in range(3, 7):
    t0 = time.perf_counter()
    routes = {"sigma-hull": sigma_from_coordinates(d), "sigma-wedge": wedge_chain("SIGMA", d),
              "c-wedge": wedge_chain("C", d)}
    if d >= 4:
        routes["c-truncate"] = c_from_edge_truncation(d)
    want = tuple(bounds.eta(3 * d - 2, d, k) for k in range(d))
    for name, inc in routes.items():
        f = build_lattice(inc).fvector().proper
        ok &= f == want
        print(f"d={d} {name:12s} f={f} facets={len(inc.facets)} profile={degree_profile(inc)[0][-3:]}")
    ok &= degree_profile(routes["sigma-hull"]) == degree_profile(routes["sigma-wedge"])
    print(f"d={d} expected {want}  ({time.perf_counter() - t0:.2f}s)")
sys.exit(0 if ok else 1)
