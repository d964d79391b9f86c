"""Exact face-count bounds, polytope constructions and their verification."""

from .bounds import (conjecture_f, eta, four_polytope_f0f2, lbt_simple, pyr_over_J,
                     rho, sigma_fvector, tau, theta, zeta)
from .catalog import FamilySpec, build, enumerate_dplus2_facet_types
from .errors import DomainError, GeometryError, InvalidIncidence
from .exactmath import binom, check_identity, check_inequality
from .lattice import FaceLattice, FVector, Incidence, build_lattice, validate

__all__ = [
    "binom", "check_identity", "check_inequality",
    "theta", "eta", "rho", "tau", "zeta", "sigma_fvector", "pyr_over_J", "lbt_simple",
    "conjecture_f", "four_polytope_f0f2",
    "Incidence", "FVector", "FaceLattice", "build_lattice", "validate",
    "FamilySpec", "build", "enumerate_dplus2_facet_types",
    "DomainError", "GeometryError", "InvalidIncidence",
]
