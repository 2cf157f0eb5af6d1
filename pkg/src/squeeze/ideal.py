"""Monomial ideals, graded Betti tables and the closed-form Betti formulas."""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .monomial import Monomial, lex_key, monomials_of_degree

__all__ = [
    "MonomialIdeal",
    "BettiTable",
    "NotStronglyStableError",
    "minimalize",
    "contains",
    "is_strongly_stable",
    "is_squarefree_strongly_stable",
    "colon_saturate_by_last",
    "degree_part_ideal",
    "hilbert_function_quotient",
    "hilbert_function_from_betti",
    "betti_eliahou_kervaire",
    "betti_squarefree_stable",
    "betti_linear_quotients",
]


class NotStronglyStableError(ValueError):
    pass


def _minimal(gens: Iterable[Monomial]) -> frozenset[Monomial]:
    ordered = sorted(set(gens), key=lambda u: u.degree)
    kept: list[Monomial] = []
    for u in ordered:
        if not any(v.divides(u) for v in kept):
            kept.append(u)
    return frozenset(kept)


class MonomialIdeal:
    """Ideal generated by a finite set of monomials, kept minimal.

    ``ambient_hint`` records the number of variables the caller has in mind;
    it never changes membership.
    """

    __slots__ = ("generators", "ambient_hint")

    def __init__(self, generators: Iterable[Monomial | str] = (), ambient_hint: int | None = None):
        gens = [Monomial.parse(g) if isinstance(g, str) else g for g in generators]
        self.generators: frozenset[Monomial] = _minimal(gens)
        self.ambient_hint = ambient_hint

    @classmethod
    def parse(cls, text: str, ambient_hint: int | None = None) -> "MonomialIdeal":
        """Comma or newline separated generators, e.g. ``"x1^2, x1*x2"``."""
        parts = [p for chunk in text.splitlines() for p in chunk.split(",")]
        return cls([Monomial.parse(p) for p in parts if p.strip()], ambient_hint)

    def __contains__(self, u: Monomial) -> bool:
        return any(g.divides(u) for g in self.generators)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_generators())

    def __repr__(self) -> str:
        return f"MonomialIdeal<{', '.join(map(str, self.sorted_generators()))}>"

    def sorted_generators(self) -> list[Monomial]:
        """Generators by degree, then lex-descending within a degree."""
        n = self.max_var
        return sorted(self.generators, key=lambda u: (u.degree, [-e for e in lex_key(u, n)]))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    @property
    def max_var(self) -> int:
        """``max(I)``: largest m(u) over generators (0 for zero/unit ideals)."""
        return max((len(g.exps) for g in self.generators), default=0)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.generators | other.generators, self.ambient_hint)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(g in other for g in self.generators)

    def truncate(self, D: int) -> "MonomialIdeal":
        """Ideal generated by the generators of degree <= D."""
        return MonomialIdeal([g for g in self.generators if g.degree <= D], self.ambient_hint)

    def restrict(self, k: int) -> "MonomialIdeal":
        """``I ∩ K[x_1..x_k]`` (generated by generators living in k variables)."""
        return MonomialIdeal([g for g in self.generators if len(g.exps) <= k], self.ambient_hint)

    def degree_component(self, n: int, d: int) -> list[Monomial]:
        return [u for u in monomials_of_degree(n, d) if u in self]


class BettiTable:
    """Graded Betti numbers ``beta[i, j]`` keyed by (homological, internal) degree."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (i, j), v in (entries or {}).items():
            if v < 0:
                raise ValueError("negative Betti number")
            if v:
                clean[(int(i), int(j))] = int(v)
        self.entries: dict[tuple[int, int], int] = dict(sorted(clean.items()))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"BettiTable({self.entries})"

    def __iter__(self):
        return iter(self.entries.items())

    @property
    def proj_dim(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def shift(self, di: int) -> "BettiTable":
        return BettiTable({(i + di, j): v for (i, j), v in self.entries.items()})

    def to_quotient(self) -> "BettiTable":
        """Table of ``R/I`` from the table of ``I`` (adds beta_{0,0} = 1)."""
        out = {(i + 1, j): v for (i, j), v in self.entries.items()}
        out[(0, 0)] = 1
        return BettiTable(out)

    @classmethod
    def from_quotient(cls, table: "BettiTable") -> "BettiTable":
        return cls({(i - 1, j): v for (i, j), v in table.entries.items() if i > 0})

    def dominated_by(self, other: "BettiTable") -> bool:
        keys = set(self.entries) | set(other.entries)
        return all(self[k] <= other[k] for k in keys)

    def by_homological_degree(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (i, j), v in self.entries.items():
            out.setdefault(i, {})[j] = v
        return out

    def to_json(self) -> dict:
        return {"betti": [{"i": i, "j": j, "value": v} for (i, j), v in self.entries.items()]}


# --- operations ----------------------------------------------------------


def minimalize(gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(gens)


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    return u in I


def _borel_moves(v: Monomial) -> Iterator[Monomial]:
    for j, e in enumerate(v.exps, start=1):
        if e == 0:
            continue
        for i in range(1, j):
            yield v / Monomial({j: 1}) * Monomial({i: 1})


def is_strongly_stable(I: MonomialIdeal) -> bool:
    """Borel exchange test: x_i v / x_j in I for all generators v, x_j | v, i < j."""
    return all(w in I for v in I.generators for w in _borel_moves(v))


def is_squarefree_strongly_stable(I: MonomialIdeal) -> bool:
    if not I.is_squarefree():
        return False
    for v in I.generators:
        supp = v.support
        for j in supp:
            for i in range(1, j):
                if i in supp:
                    continue
                if v / Monomial({j: 1}) * Monomial({i: 1}) not in I:
                    return False
    return True


def colon_saturate_by_last(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """``(I : x_m^∞)``."""
    return MonomialIdeal([g.strip(m) for g in I.generators], I.ambient_hint)


def degree_part_ideal(I: MonomialIdeal, n: int, d: int) -> MonomialIdeal:
    """Ideal generated by the degree-``d`` monomials of ``I`` in ``n`` variables."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return MonomialIdeal(I.degree_component(n, d), n)


def hilbert_function_quotient(I: MonomialIdeal, n: int, D: int) -> tuple[int, ...]:
    """Number of standard monomials of ``K[x_1..x_n]/I`` in degrees 0..D."""
    if D < 0:
        raise ValueError("D must be >= 0")
    return tuple(sum(1 for u in monomials_of_degree(n, d) if u not in I) for d in range(D + 1))


def hilbert_function_from_betti(ideal_table: BettiTable, n: int, D: int) -> tuple[int, ...]:
    """Hilbert function of ``R/I`` (R in n variables) read off the Betti table of ``I``.

    Uses ``H(R/I, t) = sum_j a_j C(n-1+t-j, t-j)`` with
    ``a_k = sum_i (-1)^i beta_{i,k}(R/I)``.
    """
    q = ideal_table.to_quotient()
    a: dict[int, int] = {}
    for (i, k), v in q.entries.items():
        a[k] = a.get(k, 0) + (-1) ** i * v
    out = []
    for t in range(D + 1):
        out.append(sum(ak * comb(n - 1 + t - k, t - k) for k, ak in a.items() if k <= t))
    return tuple(out)


def betti_eliahou_kervaire(I: MonomialIdeal) -> BettiTable:
    """``beta_{i,i+j}(I) = sum_{u in G(I), deg u = j} C(m(u)-1, i)``."""
    if not is_strongly_stable(I):
        raise NotStronglyStableError(f"{I} is not strongly stable")
    table: dict[tuple[int, int], int] = {}
    for u in I.generators:
        j = u.degree
        mu = len(u.exps)
        if mu == 0:  # unit ideal
            table[(0, 0)] = table.get((0, 0), 0) + 1
            continue
        for i in range(mu):
            table[(i, i + j)] = table.get((i, i + j), 0) + comb(mu - 1, i)
    return BettiTable(table)


def betti_squarefree_stable(I: MonomialIdeal) -> BettiTable:
    """``beta_{i,i+j}(I) = sum_{u in G(I), deg u = j} C(m(u)-j, i)``."""
    if not is_squarefree_strongly_stable(I):
        raise NotStronglyStableError(f"{I} is not squarefree strongly stable")
    table: dict[tuple[int, int], int] = {}
    for u in I.generators:
        j = u.degree
        top = len(u.exps) - j
        for i in range(top + 1):
            table[(i, i + j)] = table.get((i, i + j), 0) + comb(top, i)
    return BettiTable(table)


def betti_linear_quotients(ordered_gens: Sequence[Monomial], set_sizes: Sequence[int]) -> BettiTable:
    """``beta_{i,i+j}(I) = sum_{u, deg u = j} C(|set(u)|, i)`` for linear quotients."""
    if len(ordered_gens) != len(set_sizes):
        raise ValueError("ordered_gens and set_sizes differ in length")
    table: dict[tuple[int, int], int] = {}
    for u, s in zip(ordered_gens, set_sizes):
        j = u.degree
        for i in range(s + 1):
            table[(i, i + j)] = table.get((i, i + j), 0) + comb(s, i)
    return BettiTable(table)
