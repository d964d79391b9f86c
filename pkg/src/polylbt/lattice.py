"""Face lattices from vertex-facet incidences.

Faces are stored as Python ints used as vertex bitsets (bit i = vertex i).
Python ints are unbounded, so the same representation covers both small
word-sized masks and arbitrarily many vertices; equality and hashing are
exact and canonical.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidIncidence


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Incidence:
    """A combinatorial polytope: dimension, vertex count and facet vertex sets."""

    d: int
    n: int
    facets: tuple

    def __post_init__(self):
        d, n = self.d, self.n
        raw = [tuple(sorted(set(int(v) for v in f))) for f in self.facets]
        if len(set(raw)) != len(raw):
            dup = next(f for f in raw if raw.count(f) > 1)
            raise InvalidIncidence(f"duplicated facet {list(dup)}")
        facets = tuple(sorted(raw))
        object.__setattr__(self, "facets", facets)
        if d < 0:
            raise InvalidIncidence(f"negative dimension {d}")
        if n < d + 1:
            raise InvalidIncidence(f"n={n} < d+1={d + 1}")
        if len(facets) < d + 1:
            raise InvalidIncidence(f"{len(facets)} facets < d+1={d + 1}")
        for f in facets:
            for v in f:
                if not 0 <= v < n:
                    raise InvalidIncidence(f"vertex index {v} outside [0..{n - 1}]")
        masks = [mask_of(f) for f in facets]
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i != j and a & b == a:
                    raise InvalidIncidence(f"facet {list(facets[i])} is contained in {list(facets[j])}")
        counts = [0] * n
        for f in facets:
            for v in f:
                counts[v] += 1
        for v, c in enumerate(counts):
            if c < d:
                raise InvalidIncidence(f"vertex {v} lies in {c} < d={d} facets")

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(f) for f in self.facets)

    def to_json(self) -> dict:
        return {"d": self.d, "n": self.n, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, obj) -> "Incidence":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["d"]), int(obj["n"]), tuple(tuple(f) for f in obj["facets"]))


@dataclass(frozen=True)
class FVector:
    """Extended face counts f_{-1}..f_d; index with ``fv[k]`` for k in -1..d."""

    d: int
    counts: tuple

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != self.d + 2:
            raise ValueError(f"expected {self.d + 2} counts for d={self.d}, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError(f"negative face count in {self.counts}")
        if self.counts[0] != 1 or self.counts[-1] != 1:
            raise ValueError("extended f-vector must have f_{-1} = f_d = 1")

    @classmethod
    def from_proper(cls, d, proper: Sequence[int]) -> "FVector":
        return cls(d, (1, *proper, 1))

    def __getitem__(self, k: int) -> int:
        if not -1 <= k <= self.d:
            return 0
        return self.counts[k + 1]

    @property
    def proper(self) -> tuple:
        return self.counts[1:-1]

    def euler_ok(self) -> bool:
        alt = sum((-1) ** k * self[k] for k in range(self.d))
        return alt == 1 - (-1) ** self.d

    def problems(self) -> list[str]:
        out = []
        if not self.euler_ok():
            out.append(f"Euler relation fails for {self.proper}")
        if self.d >= 1 and self[0] < self.d + 1:
            out.append(f"f_0={self[0]} < d+1")
        if self.d >= 1 and self[self.d - 1] < self.d + 1:
            out.append(f"f_(d-1)={self[self.d - 1]} < d+1")
        return out

    def __str__(self):
        return " ".join(str(c) for c in self.proper)


def dual_fvector(fv: FVector) -> FVector:
    return FVector(fv.d, tuple(reversed(fv.counts)))


# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FaceLattice:
    d: int
    n: int
    by_dim: tuple          # by_dim[k+1] = sorted tuple of face masks of dimension k
    covers: dict = field(repr=False)   # mask -> tuple of upper covers
    dim_of: dict = field(repr=False)   # mask -> dimension

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def faces(self, k: int) -> tuple:
        if not -1 <= k <= self.d:
            return ()
        return self.by_dim[k + 1]

    @property
    def facets(self) -> tuple:
        return self.faces(self.d - 1)

    @property
    def edges(self) -> tuple:
        return self.faces(1)

    def fvector(self) -> FVector:
        return FVector(self.d, tuple(len(level) for level in self.by_dim))

    def incidence(self) -> Incidence:
        return Incidence(self.d, self.n, tuple(members(f) for f in self.facets))

    def is_face(self, mask: int) -> bool:
        return mask in self.dim_of

    def sub_fvector(self, face: int) -> FVector:
        """Extended f-vector of the face ``face`` viewed as a polytope."""
        dim = self.dim_of[face]
        counts = [sum(1 for g in self.faces(k) if g & face == g) for k in range(-1, dim + 1)]
        return FVector(dim, tuple(counts))


def _closure_faces(facets: Sequence[int], full: int) -> set:
    faces = set(facets)
    work = list(facets)
    while work:
        g = work.pop()
        for f in facets:
            h = g & f
            if h not in faces:
                faces.add(h)
                work.append(h)
    faces.add(full)
    faces.add(0)
    return faces


def _upper_covers(g: int, facets: Sequence[int], n: int, full: int) -> list:
    above = [f for f in facets if f & g == g]
    closures = {}
    for v in range(n):
        bit = 1 << v
        if g & bit:
            continue
        h = full
        for f in above:
            if f & bit:
                h &= f
        closures[v] = h
    counts: dict = {}
    for h in closures.values():
        counts[h] = counts.get(h, 0) + 1
    # h is minimal over g exactly when every new vertex of h closes to h
    return sorted(h for h, c in counts.items() if c == popcount(h & ~g))


def build_lattice(inc: Incidence) -> FaceLattice:
    """Intersection-closure face lattice, graded by longest chain from the empty face.

    Raises InvalidIncidence when the result is not the lattice of a polytope
    (non-graded, wrong top rank, vertices not rank 0, or a ridge not in
    exactly two facets).
    """
    n, d = inc.n, inc.d
    full = (1 << n) - 1
    facets = inc.facet_masks
    faces = _closure_faces(facets, full)
    order = sorted(faces, key=lambda m: (popcount(m), m))
    covers = {}
    for g in order:
        covers[g] = tuple(_upper_covers(g, facets, n, full)) if g != full else ()
    rank = {g: None for g in order}
    rank[0] = -1
    for g in order:
        r = rank[g]
        if r is None:
            raise InvalidIncidence(f"face {list(members(g))} not reachable from the empty face")
        for h in covers[g]:
            if h not in rank:
                raise InvalidIncidence(f"cover {list(members(h))} is not an intersection of facets")
            if rank[h] is None or rank[h] < r + 1:
                rank[h] = r + 1
    for g in order:
        for h in covers[g]:
            if rank[h] != rank[g] + 1:
                raise InvalidIncidence(
                    f"not graded: {list(members(g))} (rank {rank[g]}) is covered by "
                    f"{list(members(h))} (rank {rank[h]})")
    if rank[full] != d:
        raise InvalidIncidence(f"top face has rank {rank[full]}, expected d={d}")
    verts = sorted(g for g in order if rank[g] == 0)
    if verts != [1 << v for v in range(n)]:
        bad = [list(members(g)) for g in verts if popcount(g) != 1]
        raise InvalidIncidence(f"rank-0 faces are not the {n} vertices: {bad or 'missing vertex'}")
    if set(g for g in order if rank[g] == d - 1) != set(facets):
        raise InvalidIncidence("listed facets do not all have rank d-1")
    if d >= 1:
        for g in order:
            if rank[g] == d - 2 and len(covers[g]) != 2:
                raise InvalidIncidence(
                    f"ridge {list(members(g))} lies in {len(covers[g])} facets, expected 2")
    by_dim = tuple(tuple(sorted(g for g in order if rank[g] == k)) for k in range(-1, d + 1))
    return FaceLattice(d, n, by_dim, covers, rank)


# --------------------------------------------------------------------------
# queries

def fvector(lat: FaceLattice) -> FVector:
    return lat.fvector()


def degrees(lat: FaceLattice) -> dict:
    deg = {v: 0 for v in range(lat.n)}
    for e in lat.edges:
        for v in members(e):
            deg[v] += 1
    return deg


def simple_vertices(lat: FaceLattice) -> set:
    return {v for v, k in degrees(lat).items() if k == lat.d}


def simple_edges(lat: FaceLattice) -> set:
    simple = simple_vertices(lat)
    return {members(e) for e in lat.edges if set(members(e)) <= simple}


def excess_degree(lat: FaceLattice) -> int:
    return sum(k - lat.d for k in degrees(lat).values())


def vertex_figure_fvector(lat: FaceLattice, v: int, k: int) -> int:
    """Number of k-faces containing v, i.e. f_{k-1} of the vertex figure."""
    if not 0 <= v < lat.n:
        raise KeyError(f"unknown vertex {v}")
    bit = 1 << v
    return sum(1 for g in lat.faces(k) if g & bit)


def faces_containing_any(lat: FaceLattice, S: Iterable[int], k: int) -> int:
    s = mask_of(S)
    return sum(1 for g in lat.faces(k) if g & s)


def faces_avoiding(lat: FaceLattice, S: Iterable[int], k: int) -> int:
    s = mask_of(S)
    return sum(1 for g in lat.faces(k) if not g & s)


def _faces_in_containing(lat, face, v, k):
    bit = 1 << v
    return sum(1 for g in lat.faces(k) if g & bit and g & face == g)


@dataclass(frozen=True)
class XueResult:
    lhs: int
    rhs: int
    ok: bool
    chain: tuple   # the faces F_1..F_r used, as vertex tuples
    terms: tuple   # f_{k-1}(F_i / v_i)


def xue_bound_check(lat: FaceLattice, seq: Sequence[int], k: int) -> XueResult:
    """Count k-faces meeting ``seq`` and compare with the face-sequence lower bound.

    F_1 is the polytope; F_i (i >= 2) is a face of dimension d-i+1 containing
    v_i and none of v_1..v_{i-1}. A face inside F_{i-1} is preferred; any
    face of the right dimension is accepted otherwise. Missing F_i means the
    counting proposition has a counterexample, which is raised.
    """
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise ValueError("vertex sequence must be distinct")
    if len(seq) > lat.d + 1:
        raise ValueError(f"sequence length {len(seq)} > d+1")
    chain = []
    prev = lat.full
    for i, v in enumerate(seq, start=1):
        if i == 1:
            face = lat.full
        else:
            dim = lat.d - i + 1
            avoid = mask_of(seq[: i - 1])
            bit = 1 << v
            cands = [g for g in lat.faces(dim) if g & bit and not g & avoid]
            if not cands:
                raise AssertionError(
                    f"no {dim}-face contains vertex {v} while avoiding {seq[:i - 1]}")
            nested = [g for g in cands if g & prev == g]
            face = (nested or cands)[0]
        chain.append(face)
        prev = face
    terms = tuple(_faces_in_containing(lat, f, v, k) for f, v in zip(chain, seq))
    lhs = faces_containing_any(lat, seq, k)
    rhs = sum(terms)
    return XueResult(lhs, rhs, lhs >= rhs, tuple(members(f) for f in chain), terms)


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)   # (check name, witness)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, check, witness):
        self.failures.append((check, witness))


def validate(lat: FaceLattice) -> ValidationReport:
    rep = ValidationReport()
    fv = lat.fvector()
    for p in fv.problems():
        rep.add("fvector", p)
    if lat.faces(-1) != (0,) or lat.faces(lat.d) != (lat.full,):
        rep.add("bounds", "missing empty face or full polytope")
    for g, ups in lat.covers.items():
        for h in ups:
            if lat.dim_of[h] != lat.dim_of[g] + 1:
                rep.add("graded", (members(g), members(h)))
    facets = lat.facets
    if lat.d >= 1:
        for r in lat.faces(lat.d - 2):
            c = sum(1 for f in facets if f & r == r)
            if c != 2:
                rep.add("ridge", (members(r), c))
    for f in facets:
        sub = lat.sub_fvector(f)
        for k in range(lat.d):
            if fv[k] < sub[k] + sub[k - 1]:
                rep.add("facet-k-faces", (members(f), k, fv[k], sub[k] + sub[k - 1]))
    return rep
