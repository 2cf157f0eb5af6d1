"""Simplicial complexes on [n], their face numbers and Stanley-Reisner ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable

from . import _linalg
from .ideal import BettiTable, MonomialIdeal, is_squarefree_strongly_stable
from .monomial import Monomial

__all__ = [
    "SimplicialComplex",
    "FHGVectors",
    "SizeGuardError",
    "from_facets",
    "fhg_vectors",
    "stanley_reisner_ideal",
    "complex_of_ideal",
    "boundary_of_pure",
    "cone",
    "is_pure",
    "is_shifted",
    "betti_hochster",
    "reduced_homology_ranks",
    "HOCHSTER_MAX_N",
]

HOCHSTER_MAX_N = 14


class SizeGuardError(ValueError):
    pass


def _mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << (v - 1)
    return m


def _unmask(m: int) -> frozenset[int]:
    out = []
    v = 1
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def _submasks(m: int):
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


class SimplicialComplex:
    """Complex on the vertex set [n] given by its facets.

    Every singleton must be a face unless ``relaxed`` is set (needed for
    boundaries of low-dimensional balls and for intermediate objects).
    """

    __slots__ = ("n", "facets", "relaxed", "_faces")

    def __init__(self, n: int, facets: Iterable[Iterable[int]], relaxed: bool = False):
        fs = {frozenset(f) for f in facets}
        for f in fs:
            if any(v < 1 or v > n for v in f):
                raise ValueError(f"vertex out of range in facet {sorted(f)} (n={n})")
        maximal = {f for f in fs if not any(f < g for g in fs)}
        # the void complex has no faces at all; {} as facet means the empty face only
        self.n = n
        self.facets: frozenset[frozenset[int]] = frozenset(maximal)
        self.relaxed = relaxed
        self._faces: frozenset[int] | None = None
        if not relaxed:
            covered = set().union(*self.facets) if self.facets else set()
            missing = set(range(1, n + 1)) - covered
            if missing:
                raise ValueError(f"vertices {sorted(missing)} are not faces; use relaxed=True")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self.n == other.n and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={self.sorted_facets()})"

    def __contains__(self, face: Iterable[int]) -> bool:
        s = frozenset(face)
        return any(s <= f for f in self.facets)

    def sorted_facets(self) -> list[list[int]]:
        return sorted(sorted(f) for f in self.facets)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    def face_masks(self) -> frozenset[int]:
        """All faces (including the empty face) as vertex bitmasks."""
        if self._faces is None:
            out: set[int] = set()
            for f in self.facets:
                out.update(_submasks(_mask(f)))
            self._faces = frozenset(out)
        return self._faces

    def faces(self) -> list[frozenset[int]]:
        return sorted((_unmask(m) for m in self.face_masks()), key=lambda s: (len(s), sorted(s)))

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for m in self.face_masks():
            k = bin(m).count("1")
            if k:
                counts[k - 1] += 1
        return tuple(counts)

    def to_json(self) -> dict:
        return {"n": self.n, "facets": self.sorted_facets()}


@dataclass(frozen=True)
class FHGVectors:
    f: tuple[int, ...]
    h: tuple[int, ...]
    g: tuple[int, ...]

    def to_json(self) -> dict:
        return {"f": list(self.f), "h": list(self.h), "g": list(self.g)}


def from_facets(n: int, facets: Iterable[Iterable[int]], relaxed: bool = False) -> SimplicialComplex:
    return SimplicialComplex(n, facets, relaxed)


def h_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    d = len(f)
    ff = (1,) + tuple(f)  # ff[j] = f_{j-1}
    return tuple(
        sum((-1) ** (i - j) * comb(d - j, d - i) * ff[j] for j in range(i + 1)) for i in range(d + 1)
    )


def g_from_h(h: tuple[int, ...]) -> tuple[int, ...]:
    d = len(h) - 1
    return (1,) + tuple(h[i] - h[i - 1] for i in range(1, d // 2 + 1))


def fhg_vectors(gamma: SimplicialComplex) -> FHGVectors:
    f = gamma.f_vector()
    h = h_from_f(f)
    return FHGVectors(f, h, g_from_h(h))


def stanley_reisner_ideal(gamma: SimplicialComplex) -> MonomialIdeal:
    """Minimal non-faces of ``gamma`` as squarefree monomials."""
    faces = gamma.face_masks()
    n = gamma.n
    gens = []
    for v in range(1, n + 1):
        if (1 << (v - 1)) not in faces:
            gens.append(Monomial({v: 1}))
    for fm in faces:
        if fm == 0:
            continue
        top = fm.bit_length()
        for v in range(top + 1, n + 1):
            s = fm | (1 << (v - 1))
            if s in faces:
                continue
            # s is a minimal non-face iff every facet of s is a face
            sub = s
            ok = True
            while sub:
                low = sub & -sub
                if (s ^ low) not in faces:
                    ok = False
                    break
                sub ^= low
            if ok:
                gens.append(Monomial.from_set(_unmask(s)))
    return MonomialIdeal(gens, n)


def complex_of_ideal(I: MonomialIdeal, n: int) -> SimplicialComplex:
    """Complex whose faces are the sets S with ``x_S`` outside the squarefree ideal ``I``."""
    if not I.is_squarefree():
        raise ValueError(f"{I} is not squarefree")
    if any(len(g.exps) > n for g in I.generators):
        raise ValueError(f"{I} has variables beyond x{n}")
    nonface = [_mask(g.support) for g in I.generators]

    def is_face(m: int) -> bool:
        return not any(g & m == g for g in nonface)

    facets = []

    def grow(m: int, start: int) -> None:
        extended = False
        for v in range(1, n + 1):
            bit = 1 << (v - 1)
            if m & bit or not is_face(m | bit):
                continue
            extended = True
            if v >= start:
                grow(m | bit, v + 1)
        if not extended:
            facets.append(_unmask(m))

    if is_face(0):
        grow(0, 1)
    relaxed = any(g.degree == 1 for g in I.generators) or not is_face(0)
    return SimplicialComplex(n, facets, relaxed=relaxed)


def boundary_of_pure(gamma: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by the codimension-one faces lying in exactly one facet."""
    if not is_pure(gamma):
        raise ValueError("boundary_of_pure needs a pure complex")
    counts: dict[frozenset[int], int] = {}
    for f in gamma.facets:
        for v in f:
            ridge = f - {v}
            counts[ridge] = counts.get(ridge, 0) + 1
    ridges = [r for r, c in counts.items() if c == 1]
    covered = set().union(*ridges) if ridges else set()
    relaxed = covered != set(range(1, gamma.n + 1))
    return SimplicialComplex(gamma.n, ridges, relaxed=relaxed)


def cone(gamma: SimplicialComplex, v: int) -> SimplicialComplex:
    if v != gamma.n + 1:
        raise ValueError(f"cone vertex must be n+1 = {gamma.n + 1}")
    facets = [f | {v} for f in gamma.facets] or [{v}]
    return SimplicialComplex(v, facets, relaxed=gamma.relaxed)


def is_pure(gamma: SimplicialComplex) -> bool:
    return len({len(f) for f in gamma.facets}) <= 1


def is_shifted(gamma: SimplicialComplex) -> bool:
    return is_squarefree_strongly_stable(stanley_reisner_ideal(gamma))


def _boundary_rank(upper: list[int], lower: list[int]) -> int:
    if not upper or not lower:
        return 0
    pos = {m: k for k, m in enumerate(lower)}
    rows = []
    for m in upper:
        row = [0] * len(lower)
        sign = 1
        sub = m
        while sub:
            low = sub & -sub
            row[pos[m ^ low]] = sign
            sign = -sign
            sub ^= low
        rows.append(row)
    return _linalg.rank(rows)


def reduced_homology_ranks(face_masks: Iterable[int]) -> dict[int, int]:
    """Reduced Betti numbers over Q of the complex with the given faces (empty face included)."""
    by_size: dict[int, list[int]] = {}
    for m in face_masks:
        by_size.setdefault(bin(m).count("1"), []).append(m)
    if 0 not in by_size:
        return {}
    top = max(by_size)
    ranks = {k: _boundary_rank(by_size.get(k, []), by_size.get(k - 1, [])) for k in range(1, top + 1)}
    out = {}
    for k in range(0, top + 1):
        b = len(by_size.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if b:
            out[k - 1] = b
    return out


def betti_hochster(gamma: SimplicialComplex) -> BettiTable:
    """``beta_{i,j}(I_gamma) = sum_{|W| = j} dim H~_{j-i-2}(gamma|_W; Q)``."""
    n = gamma.n
    if n > HOCHSTER_MAX_N:
        raise SizeGuardError(f"Hochster's formula limited to n <= {HOCHSTER_MAX_N}")
    faces = sorted(gamma.face_masks())
    table: dict[tuple[int, int], int] = {}
    for W in range(1, 1 << n):
        if W in gamma.face_masks():
            continue  # a full simplex is acyclic
        restricted = [f for f in faces if f & ~W == 0]
        j = bin(W).count("1")
        for q, b in reduced_homology_ranks(restricted).items():
            i = j - q - 2
            if i >= 0:
                table[(i, j)] = table.get((i, j), 0) + b
    return BettiTable(table)


def all_subsets(n: int, k: int) -> list[frozenset[int]]:
    return [frozenset(c) for c in itertools.combinations(range(1, n + 1), k)]
