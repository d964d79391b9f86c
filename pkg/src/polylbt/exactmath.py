"""Exact integer helpers and checkers for the binomial identities/inequalities.

Python ``int`` and ``fractions.Fraction`` are the big-integer and rational
types throughout the package; nothing here ever touches a float.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import DomainError

BigInt = int


def binom(n: int, k: int) -> int:
    """Total binomial coefficient: zero outside ``0 <= k <= n``, including n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Check:
    """Outcome of one identity/inequality evaluation, with both sides kept."""

    item: str
    params: dict
    lhs: int
    rhs: int
    holds: bool
    equal: bool
    strict_required: bool = False
    notes: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds


def _require(cond: bool, item: str, msg: str):
    if not cond:
        raise DomainError(f"{item}: parameter outside domain ({msg})")


# --------------------------------------------------------------------------
# local copies of the few bound functions the checkers need; the bounds module
# validates domains, the checkers deliberately evaluate raw expressions because
# the identities plug in boundary indices (e.g. k = d'-1 in dimension d' = d-1)

def _theta_raw(d, s, k):
    return binom(d + 1, k + 1) + binom(d, k + 1) - binom(d + 1 - s, k + 1)


def _eta_raw(d, ell, k):
    ell = min(ell, d - 1)
    return binom(d + 1, k + 1) + 2 * binom(d, k + 1) - binom(d - ell, k + 1) - binom(1, k + 1)


def _tau_small_raw(d, ell, k):
    # m = 2 form; the vertex-count excess ell is clamped at d-3, i.e. 3d-3 vertices
    ell = min(ell, d - 3)
    a = (d + ell + 1) // 2 + 1
    return (binom(d + 1, k + 1) + binom(d, k + 1) + binom(d - 1, k + 1)
            - binom(d - a + 2, k + 1) - binom(d - a + 1, k + 1))


def _tau_large_raw(d, alpha, k):
    # m = 3 form for 3d-2+alpha vertices
    a = d + 2 - (d - alpha) // 3
    return (binom(d + 1, k + 1) + binom(d, k + 1) + binom(d - 1, k + 1) + binom(d - 2, k + 1)
            - binom(d - a + 3, k + 1) - binom(d - a + 2, k + 1) - binom(d - a + 1, k + 1))


# --------------------------------------------------------------------------
# identities I1..I7

def _i1(d, r, s, k):
    _require(d >= 2 and 2 <= r <= s <= d and 1 <= k <= d - 1, "I1", "2<=r<=s<=d, 1<=k<=d-1")
    lhs = _theta_raw(d - 1, s - r + 1, k) + sum(binom(d + 1 - i, k) for i in range(1, r + 1))
    rhs = _theta_raw(d, s, k)
    eq = lhs == rhs
    # equality is only claimed to force r in {2, s} below the top index;
    # at k = d-1 both sides collapse to d+2 for every r
    only_if = (not eq) or r in (2, s) or k == d - 1
    return Check("I1", dict(d=d, r=r, s=s, k=k), lhs, rhs, lhs >= rhs, eq,
                 notes={"equality_only_if_r_is_2_or_s": only_if})


def _i2(n, c):
    _require(n >= c >= 1, "I2", "n>=c>=1")
    lhs = binom(n, c)
    rhs = binom(n - 1, c - 1) + binom(n - 1, c)
    return Check("I2", dict(n=n, c=c), lhs, rhs, lhs == rhs, lhs == rhs)


def _i3(n, c, a):
    _require(n >= c >= 1 and n >= a >= 1, "I3", "n>=c>=1, n>=a>=1")
    lhs = binom(n, c) - binom(n - a, c)
    rhs = sum(binom(n - i, c - 1) for i in range(1, a + 1))
    return Check("I3", dict(n=n, c=c, a=a), lhs, rhs, lhs == rhs, lhs == rhs)


def _i4(n, c):
    _require(n >= 1 and c >= 1, "I4", "n>=1, c>=1")
    lhs = binom(n, c)
    rhs = sum(binom(n - i, c - 1) for i in range(1, n + 1))
    return Check("I4", dict(n=n, c=c), lhs, rhs, lhs == rhs, lhs == rhs)


def _i5(n, a, c):
    _require(n >= 0 and a >= 0 and c >= 0, "I5", "n,a,c>=0")
    lhs = binom(n + a, c)
    rhs = sum(binom(n, i) * binom(a, c - i) for i in range(c + 1))
    return Check("I5", dict(n=n, a=a, c=c), lhs, rhs, lhs == rhs, lhs == rhs)


def _i6(a, b, c):
    _require(a >= 0 and b >= 0 and c >= 0, "I6", "a,b,c>=0")
    S = a + b
    lhs = binom(a, c) + binom(b, c)
    rhs = binom(S // 2, c) + binom(S - S // 2, c)
    return Check("I6", dict(a=a, b=b, c=c), lhs, rhs, lhs >= rhs, lhs == rhs)


def _i7(d, ell, k):
    _require(d >= 5 and 1 <= ell <= d - 4 and 1 <= k <= d - 2, "I7", "d>=5, 1<=ell<=d-4, 1<=k<=d-2")
    a = (d + ell) // 2 + 1
    lhs = binom(d - ell - 1, k + 1) - binom(d - a + 1, k + 1) - binom(d - a, k + 1)
    strict = k < d - ell - 1
    holds = lhs > 0 if strict else lhs >= 0
    return Check("I7", dict(d=d, ell=ell, k=k, a=a), lhs, 0, holds, lhs == 0, strict_required=strict)


IDENTITIES: dict[str, Callable[..., Check]] = {
    "I1": _i1, "I2": _i2, "I3": _i3, "I4": _i4, "I5": _i5, "I6": _i6, "I7": _i7,
}


def check_identity(item: str, **params) -> Check:
    try:
        fn = IDENTITIES[item]
    except KeyError:
        raise DomainError(f"unknown identity {item!r}") from None
    return fn(**params)


# --------------------------------------------------------------------------
# inequalities Q1..Q7; lhs is always the smaller side

def _q1(d, k):
    _require(d >= 4 and 1 <= k <= d - 2, "Q1", "d>=4, 1<=k<=d-2")
    lhs = _tau_small_raw(d, d - 3, k)
    rhs = _tau_large_raw(d, 0, k)
    return Check("Q1", dict(d=d, k=k), lhs, rhs, lhs <= rhs, lhs == rhs)


def _q2(d, ell, k):
    _require(d >= 5 and ell >= 1 and 2 <= k <= d - 2, "Q2", "d>=5, ell>=1, 2<=k<=d-2")
    lhs = _eta_raw(d, ell, k)
    rhs = (_tau_small_raw(d - 1, ell, k) + _eta_raw(d - 1, ell, k - 1)
           + binom(d - 1, k) + binom(d - 2, k) - binom(d - 4, k))
    return Check("Q2", dict(d=d, ell=ell, k=k), lhs, rhs, lhs < rhs, lhs == rhs, True)


def _q3(d, ell):
    _require(d >= 5 and ell >= 1, "Q3", "d>=5, ell>=1")
    lhs = _eta_raw(d, ell, 1)
    rhs = _tau_small_raw(d - 1, ell, 1) + 2 * (d - 1) + ell + d + 1
    return Check("Q3", dict(d=d, ell=ell), lhs, rhs, lhs < rhs, lhs == rhs, True)


def _q4(d, ell, k):
    _require(d >= 5 and ell >= 1 and 2 <= k <= d - 2, "Q4", "d>=5, ell>=1, 2<=k<=d-2")
    lhs = _eta_raw(d, ell, k)
    rhs = (_tau_small_raw(d - 1, ell, k) + _tau_small_raw(d - 1, ell, k - 1)
           + binom(d - 1, k) + binom(d - 2, k) - binom(d - 4, k))
    return Check("Q4", dict(d=d, ell=ell, k=k), lhs, rhs, lhs < rhs, lhs == rhs, True)


def _q5(d, ell, r):
    _require(d >= 5 and ell >= 3 and 3 <= r <= ell + 1, "Q5", "d>=5, ell>=3, 3<=r<=ell+1")
    e = ell - r + 2
    lhs = _eta_raw(d, ell, 1)
    rhs = _tau_small_raw(d - 1, e, 1) + 2 * (d - 1) + e + sum(binom(d - i, 1) for i in range(1, r))
    return Check("Q5", dict(d=d, ell=ell, r=r), lhs, rhs, lhs < rhs, lhs == rhs, True)


def _q6(d, ell, r, k):
    _require(d >= 5 and ell >= 3 and 3 <= r <= ell + 1 and 2 <= k <= d - 2,
             "Q6", "d>=5, ell>=3, 3<=r<=ell+1, 2<=k<=d-2")
    e = ell - r + 2
    lhs = _eta_raw(d, ell, k)
    rhs = (_tau_small_raw(d - 1, e, k) + _eta_raw(d - 1, e, k - 1)
           + sum(binom(d - i, k) for i in range(1, r)))
    return Check("Q6", dict(d=d, ell=ell, r=r, k=k), lhs, rhs, lhs < rhs, lhs == rhs, True)


def _q7(d, ell, r, k):
    _require(d >= 5 and ell >= 3 and 3 <= r <= ell + 1 and 2 <= k <= d - 2,
             "Q7", "d>=5, ell>=3, 3<=r<=ell+1, 2<=k<=d-2")
    e = ell - r + 2
    lhs = _eta_raw(d, ell, k)
    rhs = (_tau_small_raw(d - 1, e, k) + _tau_small_raw(d - 1, e, k - 1)
           + sum(binom(d - i, k) for i in range(1, r)))
    return Check("Q7", dict(d=d, ell=ell, r=r, k=k), lhs, rhs, lhs < rhs, lhs == rhs, True)


INEQUALITIES: dict[str, Callable[..., Check]] = {
    "Q1": _q1, "Q2": _q2, "Q3": _q3, "Q4": _q4, "Q5": _q5, "Q6": _q6, "Q7": _q7,
}


def check_inequality(item: str, **params) -> Check:
    try:
        fn = INEQUALITIES[item]
    except KeyError:
        raise DomainError(f"unknown inequality {item!r}") from None
    return fn(**params)


# --------------------------------------------------------------------------
# admissible grids

def identity_grid(item: str, d_max: int):
    """Yield every admissible parameter dict for ``item`` with all sizes <= d_max."""
    if item == "I1":
        for d in range(2, d_max + 1):
            for s in range(2, d + 1):
                for r in range(2, s + 1):
                    for k in range(1, d):
                        yield dict(d=d, r=r, s=s, k=k)
    elif item in ("I2", "I4"):
        for n in range(1, d_max + 1):
            for c in range(1, (n if item == "I2" else d_max) + 1):
                yield dict(n=n, c=c)
    elif item == "I3":
        for n in range(1, d_max + 1):
            for c in range(1, n + 1):
                for a in range(1, n + 1):
                    yield dict(n=n, c=c, a=a)
    elif item in ("I5", "I6"):
        names = ("n", "a", "c") if item == "I5" else ("a", "b", "c")
        for x in range(d_max + 1):
            for y in range(d_max + 1):
                for c in range(d_max + 1):
                    yield dict(zip(names, (x, y, c)))
    elif item == "I7":
        for d in range(5, d_max + 1):
            for ell in range(1, d - 3):
                for k in range(1, d - 1):
                    yield dict(d=d, ell=ell, k=k)
    else:
        raise DomainError(f"unknown identity {item!r}")


def inequality_grid(item: str, d_max: int):
    """Yield admissible parameters for ``item``.

    ``ell`` is unbounded in the statements; every quantity involved is
    constant in ``ell`` once it passes d-1, so scanning ``ell <= 2d`` is
    exhaustive up to that stabilisation.
    """
    if item == "Q1":
        for d in range(4, d_max + 1):
            for k in range(1, d - 1):
                yield dict(d=d, k=k)
    elif item in ("Q2", "Q4"):
        for d in range(5, d_max + 1):
            for ell in range(1, 2 * d + 1):
                for k in range(2, d - 1):
                    yield dict(d=d, ell=ell, k=k)
    elif item == "Q3":
        for d in range(5, d_max + 1):
            for ell in range(1, 2 * d + 1):
                yield dict(d=d, ell=ell)
    elif item == "Q5":
        for d in range(5, d_max + 1):
            for ell in range(3, 2 * d + 1):
                for r in range(3, ell + 2):
                    yield dict(d=d, ell=ell, r=r)
    elif item in ("Q6", "Q7"):
        for d in range(5, d_max + 1):
            for ell in range(3, 2 * d + 1):
                for r in range(3, ell + 2):
                    for k in range(2, d - 1):
                        yield dict(d=d, ell=ell, r=r, k=k)
    else:
        raise DomainError(f"unknown inequality {item!r}")
