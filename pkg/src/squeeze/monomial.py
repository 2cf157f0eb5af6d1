"""Monomials in K[x_1, x_2, ...] and the three orders used throughout the package.

Variables are 1-based.  A monomial is stored as a dense exponent tuple
``(e_1, ..., e_m)`` with no trailing zero, so ``m`` is the largest variable
index that divides it.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Monomial",
    "ONE",
    "var",
    "degrevlex_cmp",
    "lex_cmp",
    "dominates",
    "max_index",
    "degrevlex_key",
    "lex_key",
    "monomials_of_degree",
    "monomials_up_to_degree",
]


class Monomial:
    __slots__ = ("exps", "_hash")

    def __init__(self, exponents: Mapping[int, int] | Iterable[int] | None = None):
        if exponents is None:
            exps: tuple[int, ...] = ()
        elif isinstance(exponents, Mapping):
            if not exponents:
                exps = ()
            else:
                top = max(exponents)
                if min(exponents) < 1:
                    raise ValueError("variable indices start at 1")
                vec = [0] * top
                for i, e in exponents.items():
                    if e < 0:
                        raise ValueError("negative exponent")
                    vec[i - 1] = e
                exps = tuple(vec)
        else:
            exps = tuple(int(e) for e in exponents)
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
        while exps and exps[-1] == 0:
            exps = exps[:-1]
        self.exps = exps
        self._hash = hash(exps)

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Monomial":
        """Build ``x_{i_1} x_{i_2} ... x_{i_k}`` from a multiset of indices."""
        counts: dict[int, int] = {}
        for i in indices:
            counts[i] = counts.get(i, 0) + 1
        return cls(counts)

    @classmethod
    def from_set(cls, vertices: Iterable[int]) -> "Monomial":
        """Squarefree monomial ``x_S``."""
        return cls({v: 1 for v in vertices})

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        return parse_monomial(text)

    # --- basic statistics -------------------------------------------------

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def exponents(self) -> dict[int, int]:
        return {i + 1: e for i, e in enumerate(self.exps) if e}

    @property
    def indices(self) -> tuple[int, ...]:
        """Sorted index sequence ``i_1 <= ... <= i_k`` (length = degree)."""
        return tuple(i + 1 for i, e in enumerate(self.exps) for _ in range(e))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    @property
    def max_index(self) -> int:
        if not self.exps:
            raise ValueError("m(1) undefined")
        return len(self.exps)

    def exponent(self, i: int) -> int:
        return self.exps[i - 1] if 0 < i <= len(self.exps) else 0

    def vector(self, n: int) -> tuple[int, ...]:
        if len(self.exps) > n:
            raise ValueError(f"{self} does not live in {n} variables")
        return self.exps + (0,) * (n - len(self.exps))

    def is_one(self) -> bool:
        return not self.exps

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    # --- arithmetic ------------------------------------------------------

    def __mul__(self, other: "Monomial") -> "Monomial":
        a, b = self.exps, other.exps
        if len(a) < len(b):
            a, b = b, a
        return Monomial(tuple(x + y for x, y in itertools.zip_longest(a, b, fillvalue=0)))

    def divides(self, other: "Monomial") -> bool:
        a, b = self.exps, other.exps
        if len(a) > len(b):
            return False
        return all(x <= y for x, y in zip(a, b))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        b = other.exps + (0,) * (len(self.exps) - len(other.exps))
        return Monomial(tuple(x - y for x, y in zip(self.exps, b)))

    def strip(self, i: int) -> "Monomial":
        """Remove every power of ``x_i``."""
        if i > len(self.exps):
            return self
        vec = list(self.exps)
        vec[i - 1] = 0
        return Monomial(vec)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(max(x, y) for x, y in itertools.zip_longest(self.exps, other.exps, fillvalue=0))
        )

    # --- protocol --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for i, e in enumerate(self.exps, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)


ONE = Monomial()


def var(i: int, e: int = 1) -> Monomial:
    return Monomial({i: e})


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str) -> Monomial:
    """Parse ``1`` or ``x1^2*x3`` style text (whitespace tolerated)."""
    s = "".join(text.split())
    if s == "1":
        return ONE
    if not s:
        raise ValueError("empty monomial")
    counts: dict[int, int] = {}
    for tok in s.split("*"):
        m = _FACTOR.match(tok)
        if m is None:
            raise ValueError(f"bad monomial factor {tok!r} in {text!r}")
        i = int(m.group(1))
        e = int(m.group(2) or 1)
        if i < 1 or e < 1:
            raise ValueError(f"index and exponent must be >= 1 in {text!r}")
        counts[i] = counts.get(i, 0) + e
    return Monomial(counts)


# --- orders --------------------------------------------------------------


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def degrevlex_cmp(u: Monomial, v: Monomial) -> int:
    """Return -1, 0, 1 as u <, =, > v in degree reverse lex (x_1 > x_2 > ...).

    At equal degree the exponent vectors are scanned from the highest
    variable downward; a larger exponent at the last differing variable makes
    the monomial smaller.
    """
    du, dv = u.degree, v.degree
    if du != dv:
        return _sign(du - dv)
    n = max(len(u.exps), len(v.exps))
    for i in range(n, 0, -1):
        a, b = u.exponent(i), v.exponent(i)
        if a != b:
            return 1 if a < b else -1
    return 0


def lex_cmp(u: Monomial, v: Monomial) -> int:
    """Return -1, 0, 1 as u <, =, > v in lex order (x_1 > x_2 > ...)."""
    n = max(len(u.exps), len(v.exps))
    for i in range(1, n + 1):
        a, b = u.exponent(i), v.exponent(i)
        if a != b:
            return 1 if a > b else -1
    return 0


def dominates(u: Monomial, v: Monomial) -> bool:
    """``u ≺ v``: the k-th smallest index of u is <= that of v for every k."""
    if u.degree != v.degree:
        raise ValueError("incomparable degrees")
    return all(i <= j for i, j in zip(u.indices, v.indices))


def max_index(u: Monomial) -> int:
    return u.max_index


def degrevlex_key(u: Monomial, n: int) -> tuple:
    """Sort key, ascending in degrevlex, for monomials in ``n`` variables."""
    vec = u.vector(n)
    return (sum(vec),) + tuple(-e for e in reversed(vec))


def lex_key(u: Monomial, n: int) -> tuple:
    """Sort key, ascending in lex, for monomials in ``n`` variables."""
    return u.vector(n)


# --- enumeration ---------------------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All degree-``d`` monomials in ``x_1..x_n``, lex-descending."""
    if d < 0:
        return []
    return [Monomial(c) for c in _compositions(d, n)]


def monomials_up_to_degree(n: int, d: int) -> list[Monomial]:
    out: list[Monomial] = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(n, k))
    return out
