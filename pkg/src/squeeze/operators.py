"""Stable operators on monomials: the shift maps alpha^a, polarization and sigma^a."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .ideal import MonomialIdeal
from .monomial import Monomial, lex_key

__all__ = [
    "ShiftSequence",
    "PolarizedMonomial",
    "alpha_a",
    "apply_operator_to_ideal",
    "alpha_image_ordered",
    "quotient_set",
    "linear_quotient_sets",
    "polarize",
    "polarize_ideal",
    "sigma_a",
]


@dataclass(frozen=True)
class ShiftSequence:
    """Nondecreasing integer sequence: a finite prefix followed by a regular tail.

    ``step=None`` repeats the last prefix value forever; an integer ``step``
    continues the prefix arithmetically.
    """

    prefix: tuple[int, ...]
    step: int | None = None

    def __post_init__(self):
        if not self.prefix:
            raise ValueError("empty shift sequence")
        if any(b < a for a, b in zip(self.prefix, self.prefix[1:])):
            raise ValueError(f"shift sequence {self.prefix} is not nondecreasing")
        if self.step is not None and self.step < 0:
            raise ValueError("negative step")

    @classmethod
    def arithmetic(cls, step: int, start: int = 0) -> "ShiftSequence":
        return cls((start,), step)

    @classmethod
    def constant(cls, value: int) -> "ShiftSequence":
        return cls((value,))

    @classmethod
    def parse(cls, text: str) -> "ShiftSequence":
        """``0,2,4,+2`` (arithmetic continuation) or ``0,1,2,2,=`` (constant tail)."""
        toks = [t.strip() for t in text.split(",") if t.strip()]
        step = None
        if toks and toks[-1] == "=":
            toks = toks[:-1]
        elif toks and toks[-1].startswith("+"):
            step = int(toks[-1][1:])
            toks = toks[:-1]
        return cls(tuple(int(t) for t in toks), step)

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        if k < len(self.prefix):
            return self.prefix[k]
        extra = k - len(self.prefix) + 1
        return self.prefix[-1] + (self.step or 0) * extra

    def head(self, length: int) -> tuple[int, ...]:
        return tuple(self[k] for k in range(length))

    def __str__(self) -> str:
        tail = "=" if self.step is None else f"+{self.step}"
        return ",".join(map(str, self.prefix)) + "," + tail


@dataclass(frozen=True)
class PolarizedMonomial:
    """Squarefree monomial in the doubly indexed variables ``x_{ij}``."""

    factors: frozenset[tuple[int, int]]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"x{i}_{j}" for i, j in sorted(self.factors))


def alpha_a(u: Monomial, a: ShiftSequence) -> Monomial:
    """Shift the k-th smallest index of ``u`` by ``a[k-1]``."""
    if a[0] != 0:
        raise ValueError("alpha^a needs a_0 = 0")
    return Monomial.from_indices(i + a[k] for k, i in enumerate(u.indices))


def apply_operator_to_ideal(I: MonomialIdeal, op: Callable[[Monomial], Monomial]) -> MonomialIdeal:
    """Ideal generated by ``op(u)`` for ``u`` in ``G(I)``."""
    return MonomialIdeal([op(u) for u in I.generators], I.ambient_hint)


def _lex_descending(gens: Iterable[Monomial]) -> list[Monomial]:
    gens = list(gens)
    n = max((len(g.exps) for g in gens), default=0)
    return sorted(gens, key=lambda u: lex_key(u, n), reverse=True)


def alpha_image_ordered(I: MonomialIdeal, a: ShiftSequence) -> tuple[list[Monomial], list[int]]:
    """Images ``alpha^a(u_1), ..., alpha^a(u_m)`` (u's lex-descending) and their quotient-set sizes."""
    gens = _lex_descending(I.generators)
    return [alpha_a(u, a) for u in gens], [len(quotient_set(u, a)) for u in gens]


def quotient_set(u: Monomial, a: ShiftSequence) -> frozenset[int]:
    """``set(alpha^a(u))`` as a union of half-open index ranges (``i_0 = 1``, ``a_0 = 0``)."""
    if u.is_one():
        raise ValueError("quotient set of the unit monomial is undefined")
    idx = (1,) + u.indices
    out: set[int] = set()
    for l in range(u.degree):
        out.update(range(idx[l] + a[l], idx[l + 1] + a[l]))
    return frozenset(out)


def linear_quotient_sets(ordered_gens: Sequence[Monomial]) -> list[frozenset[int]] | None:
    """Brute-force colon ideals ``(<u_1..u_{j-1}> : u_j)``.

    Returns the variable sets generating each colon ideal, or ``None`` when
    some colon ideal is not generated by variables.
    """
    sets = []
    for j, uj in enumerate(ordered_gens):
        colon = MonomialIdeal([ui / _gcd(ui, uj) for ui in ordered_gens[:j]])
        if any(g.degree != 1 for g in colon.generators):
            return None
        sets.append(frozenset(next(iter(g.support)) for g in colon.generators))
    return sets


def _gcd(u: Monomial, v: Monomial) -> Monomial:
    return Monomial(tuple(min(x, y) for x, y in zip(u.exps, v.exps)))


def polarize(u: Monomial) -> PolarizedMonomial:
    return PolarizedMonomial(frozenset((i, j) for i, e in u.exponents.items() for j in range(1, e + 1)))


def polarize_ideal(I: MonomialIdeal) -> tuple[MonomialIdeal, dict[tuple[int, int], int]]:
    """Polarize ``I`` and flatten ``x_{ij}`` to single indices.

    The pairs that occur are numbered 1, 2, ... in lexicographic order of (i, j).
    """
    pols = [polarize(u) for u in I.generators]
    pairs = sorted(set().union(*(p.factors for p in pols))) if pols else []
    index = {pair: k for k, pair in enumerate(pairs, start=1)}
    flat = MonomialIdeal([Monomial.from_set(index[f] for f in p.factors) for p in pols], len(pairs))
    return flat, index


def sigma_a(u: Monomial, a: ShiftSequence) -> Monomial:
    """Compression map with ``a = (a_1, a_2, ...)``, ``q_j = a_j - 1``.

    Each exponent in turn is split greedily over consecutive variables: whole
    ``q_j`` blocks while they fit, then the remainder on the next variable,
    which closes the block.  Every output exponent ``b_j`` satisfies ``b_j < a_j``.
    """
    def q(j: int) -> int:
        return a[j - 1] - 1

    out: dict[int, int] = {}
    p = 0
    for alpha in u.exps:
        j = p + 1
        rem = alpha
        while True:
            qj = q(j)
            if qj < 1:
                raise ValueError("sigma_a undefined for input")
            if rem < qj:
                break
            out[j] = out.get(j, 0) + qj
            rem -= qj
            j += 1
        if rem:
            out[j] = out.get(j, 0) + rem
        p = j
    return Monomial(out)
