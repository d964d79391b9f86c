"""Closed-form face-count functions.

Every function validates its own parameter range and raises ``DomainError``
instead of extrapolating. The only extrapolations are the two documented
flat extensions: ``eta`` and ``tau`` hold their 3d-1 value for larger vertex
counts.

All functions take the face index ``k`` last and return an exact ``int``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .errors import DomainError
from .exactmath import binom


def _need(cond, name, msg):
    if not cond:
        raise DomainError(f"{name}: {msg}")


def theta(d, s, k):
    """Minimum number of k-faces of a d-polytope with d+s vertices."""
    _need(d >= 2, "theta", f"d={d} < 2")
    _need(1 <= s <= d, "theta", f"s={s} outside [1..{d}]")
    _need(0 <= k <= d - 1, "theta", f"k={k} outside [0..{d - 1}]")
    return binom(d + 1, k + 1) + binom(d, k + 1) - binom(d + 1 - s, k + 1)


def eta(n_vertices, d, k):
    """k-faces of J(l+1, d) with n = 2d+l vertices; flat for l >= d-1."""
    _need(d >= 2, "eta", f"d={d} < 2")
    _need(n_vertices >= 2 * d + 1, "eta", f"n={n_vertices} <= 2d={2 * d}; use theta")
    _need(0 <= k <= d - 1, "eta", f"k={k} outside [0..{d - 1}]")
    ell = min(n_vertices - 2 * d, d - 1)
    return binom(d + 1, k + 1) + 2 * binom(d, k + 1) - binom(d - ell, k + 1) - binom(1, k + 1)


def eta_alt(n_vertices, d, k):
    """Second displayed form of eta (C(d,k) + 3 C(d,k+1) ...)."""
    ell = min(n_vertices - 2 * d, d - 1)
    return binom(d, k) + 3 * binom(d, k + 1) - binom(d - ell, k + 1) - binom(1, k + 1)


def rho(a, m, d, k):
    """k-faces of the (d-a)-fold pyramid over T(m) x T(a-m)."""
    _need(d >= 2, "rho", f"d={d} < 2")
    _need(2 <= a <= d, "rho", f"a={a} outside [2..{d}]")
    _need(1 <= m <= a // 2, "rho", f"m={m} outside [1..{a // 2}]")
    _need(0 <= k <= d - 1, "rho", f"k={k} outside [0..{d - 1}]")
    return (binom(d + 2, k + 2) - binom(d - a + m + 1, k + 2)
            - binom(d - m + 1, k + 2) + binom(d - a + 1, k + 2))


def dplus2_vertex_count(a, m, d):
    return d + 1 + m * (a - m)


def tau_regime(n_vertices, d):
    """Which closed form governs tau at this vertex count: returns (regime, a, m)."""
    ell = n_vertices - 2 * d
    if n_vertices <= 3 * d - 3:
        return "small", (d + ell + 1) // 2 + 1, 2
    alpha = 0 if n_vertices == 3 * d - 2 else 1
    return f"alpha={alpha}", d + 2 - (d - alpha) // 3, 3


def tau(n_vertices, d, k):
    """Lower bound for k-faces of d-polytopes with d+2 facets and >= n vertices.

    Regimes by vertex count n = 2d+l:
      n <= 3d-3      m=2, a = floor((d+l+1)/2)+1
      n == 3d-2      m=3, a = d+2-floor(d/3)        (needs d >= 6)
      n == 3d-1      m=3, a = d+2-floor((d-1)/3)    (needs d >= 7)
      n >= 3d        value at 3d-1
    """
    _need(d >= 4, "tau", f"d={d} < 4")
    _need(n_vertices >= 2 * d + 1, "tau", f"n={n_vertices} <= 2d")
    _need(1 <= k <= d - 2, "tau", f"k={k} outside [1..{d - 2}]")
    n = min(n_vertices, 3 * d - 1)
    if n <= 3 * d - 3:
        ell = n - 2 * d
        a = (d + ell + 1) // 2 + 1
        return (binom(d + 2, k + 2) - binom(d - a + 3, k + 2)
                - binom(d - 1, k + 2) + binom(d - a + 1, k + 2))
    alpha = n - (3 * d - 2)
    floor = 6 + alpha
    _need(d >= floor, "tau",
          f"the m=3 regime needs d >= {floor} at n = 3d-2+{alpha} (d={d})")
    a = d + 2 - (d - alpha) // 3
    return (binom(d + 1, k + 1) + binom(d, k + 1) + binom(d - 1, k + 1) + binom(d - 2, k + 1)
            - binom(d - a + 3, k + 1) - binom(d - a + 2, k + 1) - binom(d - a + 1, k + 1))


def tau_alt(n_vertices, d, k):
    """The other displayed form of tau in each regime (C(.,k+1) for m=2, rho for m=3)."""
    n = min(n_vertices, 3 * d - 1)
    regime, a, m = tau_regime(n, d)
    if regime == "small":
        return (binom(d + 1, k + 1) + binom(d, k + 1) + binom(d - 1, k + 1)
                - binom(d - a + 2, k + 1) - binom(d - a + 1, k + 1))
    return rho(a, m, d, k)


def zeta(d, s, k):
    _need(d >= 3, "zeta", f"d={d} < 3")
    _need(2 <= s <= d, "zeta", f"s={s} outside [2..{d}]")
    _need(1 <= k <= d - 2, "zeta", f"k={k} outside [1..{d - 2}]")
    return theta(d, s, k) + binom(d - 1, k) - binom(d + 1 - s, k)


def sigma_fvector(d, k):
    _need(d >= 3, "sigma_fvector", f"d={d} < 3")
    _need(0 <= k <= d - 1, "sigma_fvector", f"k={k} outside [0..{d - 1}]")
    if k == d - 1:
        return d + 3
    return binom(d + 1, k + 1) + 2 * binom(d, k + 1) - binom(2, k + 1) - binom(1, k + 1)


def pyr_over_J(d, t, k):
    """k-faces of the t-fold pyramid over J(d-t, d-t)."""
    _need(d >= 3, "pyr_over_J", f"d={d} < 3")
    _need(0 <= t <= d - 3, "pyr_over_J", f"t={t} outside [0..{d - 3}]")
    _need(0 <= k <= d - 1, "pyr_over_J", f"k={k} outside [0..{d - 1}]")
    return binom(d + 1, k + 1) + 2 * binom(d, k + 1) - 2 * binom(t + 1, k + 1)


def lbt_simple(d, n_facets, k):
    """Barnette's lower bound for simple d-polytopes with n_facets facets."""
    _need(d >= 2, "lbt_simple", f"d={d} < 2")
    _need(n_facets >= d + 1, "lbt_simple", f"n_facets={n_facets} < d+1")
    _need(0 <= k <= d - 2, "lbt_simple", f"k={k} outside [0..{d - 2}] (facet count is the input)")
    if k == 0:
        return (d - 1) * n_facets - (d + 1) * (d - 2)
    return binom(d, k + 1) * n_facets - binom(d + 1, k + 1) * (d - 1 - k)


CONJ_RANGES = {
    1: lambda d: (2, d),
    2: lambda d: (3, d),
    3: lambda d: (1, d - 3),
    4: lambda d: (2, d - 2),
    5: lambda d: (3, 5),
}


def conjecture_f(i, d, s, k):
    """The five candidate minimiser face counts for 3d..4d-4 vertices.

    Family 3 uses -2 C(1,k+1) where ``f3_displayed`` has -C(2,k+1); the two
    differ only at k=1, and only this one satisfies Euler's relation and
    matches the built polytopes.
    """
    _need(i in CONJ_RANGES, "conjecture_f", f"i={i} not in 1..5")
    _need(d >= 4, "conjecture_f", f"d={d} < 4")
    lo, hi = CONJ_RANGES[i](d)
    _need(lo <= s <= hi, "conjecture_f", f"s{i}={s} outside [{lo}..{hi}]")
    _need(0 <= k <= d - 1, "conjecture_f", f"k={k} outside [0..{d - 1}]")
    head = binom(d + 1, k + 1) + 2 * binom(d, k + 1) + binom(d - 1, k + 1)
    if i == 1:
        return head - binom(1, k + 1) - binom(d + 1 - s, k + 1) - binom(2, k + 1)
    if i == 2:
        return head - binom(1, k + 1) - binom(d + 1 - s, k + 1) - binom(d + 2 - s, k + 1)
    if i == 3:
        return binom(d + 1, k + 1) + 3 * binom(d, k + 1) - binom(d - s, k + 1) - 2 * binom(1, k + 1)
    if i == 4:
        return head - binom(1, k + 1) - binom(d + 1 - s, k + 1) - binom(d - s, k + 1)
    return head - binom(4, k + 2) - binom(d + 1 - s, k + 1) + binom(d - 2, k + 1)


def f3_displayed(d, s, k):
    """Candidate 3 with the -C(2,k+1) term; one edge short of any realisation."""
    return binom(d + 1, k + 1) + 3 * binom(d, k + 1) - binom(d - s, k + 1) - binom(2, k + 1)


F0F2_EXCEPTIONS = frozenset([
    (6, 12), (6, 14), (7, 13), (7, 15), (8, 15),
    (8, 16), (9, 16), (10, 17), (11, 20), (13, 21),
])


def four_polytope_f0f2(f0, f2):
    """Whether some 4-polytope has f0 vertices and f2 two-faces."""
    _need(f0 >= 5, "four_polytope_f0f2", f"f0={f0} < 5")
    _need(f2 >= 0, "four_polytope_f0f2", f"f2={f2} < 0")
    # 2 f2 >= 2 f0 + 3 + sqrt(8 f0 + 9), squared without floats
    gap = 2 * f2 - 2 * f0 - 3
    if gap < 0 or gap * gap < 8 * f0 + 9:
        return False
    if f2 > f0 * f0 - 3 * f0 or f2 == f0 * f0 - 3 * f0 - 1:
        return False
    return (f0, f2) not in F0F2_EXCEPTIONS


def f0f2_lower(f0):
    """Smallest integer f2 meeting the algebraic lower bound (via isqrt)."""
    disc = 8 * f0 + 9
    r = isqrt(disc)
    root_ceil = r if r * r == disc else r + 1
    return -(-(2 * f0 + 3 + root_ceil) // 2)


# --------------------------------------------------------------------------

FORMULAS = {
    "THETA": theta, "ETA": eta, "RHO": rho, "TAU": tau, "ZETA": zeta,
    "SIGMA": sigma_fvector, "PYR_OVER_J": pyr_over_J, "LBT_SIMPLE": lbt_simple,
}


@dataclass(frozen=True)
class BoundQuery:
    """A parameterised reference to one formula; validated on construction."""

    formula: str
    d: int
    k: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 2:
            raise DomainError(f"BoundQuery: d={self.d} < 2")
        if not -1 <= self.k <= self.d:
            raise DomainError(f"BoundQuery: k={self.k} outside [-1..{self.d}]")
        self.evaluate()

    def evaluate(self):
        f, p, d, k = self.formula.upper(), self.params, self.d, self.k
        if f.startswith("CONJ_F"):
            i = int(f[len("CONJ_F"):])
            return conjecture_f(i, d, p[f"s{i}"] if f"s{i}" in p else p["s"], k)
        if f == "F0F2_4D":
            return four_polytope_f0f2(p["f0"], p["f2"])
        if f == "THETA":
            return theta(d, p["s"], k)
        if f in ("ETA", "TAU"):
            n = p.get("n_vertices", 2 * d + p.get("ell", 0))
            return FORMULAS[f](n, d, k)
        if f == "RHO":
            return rho(p["a"], p["m"], d, k)
        if f == "ZETA":
            return zeta(d, p["s"], k)
        if f == "SIGMA":
            return sigma_fvector(d, k)
        if f == "PYR_OVER_J":
            return pyr_over_J(d, p["t"], k)
        if f == "LBT_SIMPLE":
            return lbt_simple(d, p["n_facets"], k)
        raise DomainError(f"unknown formula {self.formula!r}")


def formula_fvector(fn, *args, d, ks=None):
    """Evaluate ``fn(*args, k)`` over ks (default 0..d-1) as a tuple."""
    ks = range(d) if ks is None else ks
    return tuple(fn(*args, k) for k in ks)
