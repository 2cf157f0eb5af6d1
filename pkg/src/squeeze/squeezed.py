"""Shifted order ideals of monomials and the squeezed balls and spheres built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .ideal import (
    BettiTable,
    MonomialIdeal,
    NotStronglyStableError,
    betti_eliahou_kervaire,
    is_strongly_stable,
)
from .monomial import ONE, Monomial, lex_key, monomials_of_degree
from .operators import ShiftSequence, alpha_a
from .simplicial import SimplicialComplex, SizeGuardError, boundary_of_pure

__all__ = [
    "ShiftedOrderIdeal",
    "ShiftedOrderIdealError",
    "SqueezedPair",
    "validate_shifted_order_ideal",
    "facet_F",
    "build_squeezed",
    "ideal_I_of_U",
    "squeezed_sphere_betti",
    "lex_order_ideal",
    "enumerate_shifted_order_ideals",
    "count_shifted_order_ideals",
    "chara5_condition_check",
    "exterior_shifted_ball",
    "squeeze_counts_relation_check",
    "ENUMERATION_MAX_M",
    "ENUMERATION_MAX_DEG",
]

ENUMERATION_MAX_M = 4
ENUMERATION_MAX_DEG = 3


class ShiftedOrderIdealError(ValueError):
    """A shifted order ideal axiom fails; ``axiom`` names it and ``witness`` shows why."""

    def __init__(self, axiom: str, witness: Monomial, detail: str):
        super().__init__(f"axiom {axiom} violated at {witness}: {detail}")
        self.axiom = axiom
        self.witness = witness


@dataclass(frozen=True)
class ShiftedOrderIdeal:
    m: int
    monomials: frozenset[Monomial]

    @property
    def max_deg(self) -> int:
        return max(u.degree for u in self.monomials)

    def degree_counts(self) -> tuple[int, ...]:
        counts = [0] * (self.max_deg + 1)
        for u in self.monomials:
            counts[u.degree] += 1
        return tuple(counts)

    def of_degree(self, k: int) -> list[Monomial]:
        return sorted((u for u in self.monomials if u.degree == k), key=lambda u: lex_key(u, self.m), reverse=True)

    def sorted_monomials(self) -> list[Monomial]:
        return [u for k in range(self.max_deg + 1) for u in self.of_degree(k)]

    def __contains__(self, u: Monomial) -> bool:
        return u in self.monomials

    def __len__(self) -> int:
        return len(self.monomials)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.sorted_monomials())) + "}"


@dataclass(frozen=True)
class SqueezedPair:
    U: ShiftedOrderIdeal
    d: int
    n: int
    ball: SimplicialComplex
    sphere: SimplicialComplex = field(repr=False)


def validate_shifted_order_ideal(m: int, monomials: Iterable[Monomial | str]) -> ShiftedOrderIdeal:
    """Check the three axioms and return the validated object.

    (i) ``{1, x_1, ..., x_m}`` is contained; (ii) closed under divisors;
    (iii) closed upward under ≺ among monomials in ``m`` variables.
    """
    U = frozenset(Monomial.parse(u) if isinstance(u, str) else u for u in monomials)
    for u in sorted(U, key=lambda u: (u.degree, u.exps)):
        if len(u.exps) > m:
            raise ShiftedOrderIdealError("(range)", u, f"uses a variable beyond x{m}")
    for u in [ONE] + [Monomial({i: 1}) for i in range(1, m + 1)]:
        if u not in U:
            raise ShiftedOrderIdealError("(i)", u, "required monomial missing")
    for u in sorted(U, key=lambda u: (u.degree, u.exps)):
        for i in u.support:
            v = u / Monomial({i: 1})
            if v not in U:
                raise ShiftedOrderIdealError("(ii)", u, f"divisor {v} missing")
        # ≺ is generated by the single moves x_{j+1} u / x_j
        for j in u.support:
            if j < m:
                v = u / Monomial({j: 1}) * Monomial({j + 1: 1})
                if v not in U:
                    raise ShiftedOrderIdealError("(iii)", u, f"{u} ≺ {v} but {v} missing")
    return ShiftedOrderIdeal(m, U)


def facet_F(u: Monomial, d: int, n: int) -> frozenset[int]:
    """``F_d(u) = {i_1, i_1+1} ∪ {i_2+2, i_2+3} ∪ ... ∪ {n+2k-d, ..., n}``."""
    k = u.degree
    if k > (d + 1) // 2:
        raise ValueError(f"deg({u}) = {k} exceeds floor((d+1)/2) = {(d + 1) // 2}")
    out: set[int] = set()
    for t, i in enumerate(u.indices):
        out.update((i + 2 * t, i + 2 * t + 1))
    out.update(range(n + 2 * k - d, n + 1))
    if len(out) != d + 1 or max(out) > n or min(out) < 1:
        raise AssertionError(f"F_{d}({u}) = {sorted(out)} is not a (d+1)-subset of [{n}]")
    return frozenset(out)


def build_squeezed(U: ShiftedOrderIdeal, d: int) -> SqueezedPair:
    """Squeezed ball ``B_d(U)`` on [m+d+1] and its boundary sphere ``S_d(U)``."""
    if U.max_deg > (d + 1) // 2:
        raise ValueError(f"U has degree {U.max_deg} > floor((d+1)/2) = {(d + 1) // 2}")
    n = U.m + d + 1
    ball = SimplicialComplex(n, [facet_F(u, d, n) for u in U.monomials], relaxed=d <= 1)
    return SqueezedPair(U, d, n, ball, boundary_of_pure(ball))


def ideal_I_of_U(U: ShiftedOrderIdeal, n: int | None = None) -> MonomialIdeal:
    """``I(U)``: generated by the monomials of ``K[x_1..x_m]`` outside ``U``."""
    gens = [u for k in range(1, U.max_deg + 2) for u in monomials_of_degree(U.m, k) if u not in U]
    return MonomialIdeal(gens, n)


def squeezed_sphere_betti(U: ShiftedOrderIdeal, d: int) -> BettiTable:
    """Betti table of ``I_{S_d(U)}`` (ideal-indexed) from the Eliahou-Kervaire table of ``I(U)``.

    In quotient indexing, with ``q = beta(R/I(U))``:
    ``beta_{i,i+j}(R/I_S)`` is ``q_{i,i+j}`` for ``j < d/2``,
    ``q_{n-d-i, n-i-j}`` for ``j > d/2`` and their sum at ``j = d/2``.
    """
    if U.max_deg > d // 2:
        raise ValueError(f"S_{d}(U) is not S-squeezed: U has degree {U.max_deg} > floor(d/2)")
    n = U.m + d + 1
    q = betti_eliahou_kervaire(ideal_I_of_U(U, n)).to_quotient()
    out: dict[tuple[int, int], int] = {}
    for i in range(0, n - d + 1):
        for j in range(0, n + 1):
            if 2 * j < d:
                v = q[(i, i + j)]
            elif 2 * j > d:
                v = q[(n - d - i, n - i - j)]
            else:
                v = q[(i, i + j)] + q[(n - d - i, n - i - j)]
            if v:
                out[(i, i + j)] = v
    return BettiTable.from_quotient(BettiTable(out))


def lex_order_ideal(m: int, degree_counts: Sequence[int]) -> ShiftedOrderIdeal:
    """Lexicographic order ideal ``U^lex``: in each degree the lex-smallest monomials."""
    counts = list(degree_counts)
    if not counts or counts[0] != 1:
        raise ValueError("degree_counts[0] must be 1")
    if len(counts) > 1 and counts[1] != m:
        raise ValueError(f"degree_counts[1] must equal m = {m}")
    chosen: set[Monomial] = {ONE}
    for k, c in enumerate(counts[1:], start=1):
        pool = sorted(monomials_of_degree(m, k), key=lambda u: lex_key(u, m))
        if c > len(pool):
            raise ValueError(f"only {len(pool)} monomials of degree {k} in {m} variables, asked for {c}")
        segment = pool[:c]
        for u in segment:
            for i in u.support:
                if u / Monomial({i: 1}) not in chosen:
                    raise ValueError(f"counts {counts} are not realizable: {u} lacks divisor in degree {k - 1}")
        chosen.update(segment)
    return validate_shifted_order_ideal(m, chosen)


def _upsets(pool: list[Monomial], allowed: set[Monomial], m: int) -> Iterator[frozenset[Monomial]]:
    """≺-up-closed subsets of ``pool`` (one degree) contained in ``allowed``."""
    # process from the top of ≺ downward; include u only if its upper covers are included
    order = sorted(pool, key=lambda u: lex_key(u, m))  # lex ascending = ≺-top first
    covers = {}
    for u in order:
        covers[u] = [u / Monomial({j: 1}) * Monomial({j + 1: 1}) for j in u.support if j < m]

    def rec(pos: int, chosen: frozenset[Monomial]) -> Iterator[frozenset[Monomial]]:
        if pos == len(order):
            yield chosen
            return
        u = order[pos]
        yield from rec(pos + 1, chosen)
        if u in allowed and all(c in chosen for c in covers[u]):
            yield from rec(pos + 1, chosen | {u})

    yield from rec(0, frozenset())


def _canonical_key(U: ShiftedOrderIdeal):
    mons = sorted(U.monomials, key=lambda u: (u.degree, u.vector(U.m)))
    return (len(mons), [(u.degree, u.vector(U.m)) for u in mons])


def enumerate_shifted_order_ideals(m: int, max_deg: int) -> Iterator[ShiftedOrderIdeal]:
    """Every shifted order ideal in ``m`` variables of degree <= ``max_deg``, once each.

    Ordered by size, then lexicographically on the sorted monomial lists.
    """
    if m > ENUMERATION_MAX_M or max_deg > ENUMERATION_MAX_DEG:
        raise SizeGuardError(f"enumeration limited to m <= {ENUMERATION_MAX_M}, max_deg <= {ENUMERATION_MAX_DEG}")
    if m < 0 or max_deg < 0:
        raise ValueError("m and max_deg must be >= 0")
    base = frozenset([ONE] + [Monomial({i: 1}) for i in range(1, m + 1)])
    if max_deg == 0 and m > 0:
        return
    results: list[frozenset[Monomial]] = []

    def extend(current: frozenset[Monomial], k: int) -> None:
        results.append(current)
        if k > max_deg:
            return
        prev = {u for u in current if u.degree == k - 1}
        pool = monomials_of_degree(m, k)
        allowed = {u for u in pool if all(u / Monomial({i: 1}) in prev for i in u.support)}
        for up in _upsets(pool, allowed, m):
            if up:
                extend(current | up, k + 1)

    extend(base, 2)
    ideals = [ShiftedOrderIdeal(m, s) for s in results]
    yield from sorted(ideals, key=_canonical_key)


def count_shifted_order_ideals(m: int, max_deg: int) -> int:
    return sum(1 for _ in enumerate_shifted_order_ideals(m, max_deg))


def chara5_condition_check(I: MonomialIdeal, n: int, d: int) -> tuple[bool, dict]:
    """Evaluate the four conditions on ``A = K[x_1..x_{n-d}] / (I ∩ K[x_1..x_{n-d}])``.

    ``max(I) = n-d``, ``A_{d+1} = 0``, ``dim A_1 = n-d``, and multiplication by
    ``x_{n-d}^{d-2i}: A_i -> A_{d-i}`` is bijective for ``0 <= i <= floor(d/2)``.
    """
    if not is_strongly_stable(I):
        raise NotStronglyStableError(f"{I} is not strongly stable")
    k = n - d
    J = I.restrict(k)

    def basis(deg: int) -> list[Monomial]:
        return [u for u in monomials_of_degree(k, deg) if u not in J]

    report: dict = {"max(I)": I.max_var, "n-d": k}
    report["max_condition"] = I.max_var == k
    report["A_{d+1}"] = len(basis(d + 1))
    report["top_vanishes"] = report["A_{d+1}"] == 0
    report["dim A_1"] = len(basis(1))
    report["dim_A1_condition"] = report["dim A_1"] == k
    iso = {}
    for i in range(d // 2 + 1):
        src, dst = basis(i), set(basis(d - i))
        mult = Monomial({k: d - 2 * i}) if k >= 1 else ONE
        images = {u * mult for u in src}
        iso[i] = len(src) == len(dst) and images == dst
    report["lefschetz_isomorphisms"] = iso
    ok = report["max_condition"] and report["top_vanishes"] and report["dim_A1_condition"] and all(iso.values())
    report["holds"] = ok
    return ok, report


def exterior_shifted_ball(U: ShiftedOrderIdeal, d: int) -> SimplicialComplex:
    """Complex generated by ``{i_1, i_2+1, ..., i_k+k-1}`` plus the last ``d+1-k`` vertices of [n]."""
    n = U.m + d + 1
    alpha = ShiftSequence.arithmetic(1)
    facets = []
    for u in U.monomials:
        k = u.degree
        head = alpha_a(u, alpha).support
        facets.append(head | frozenset(range(n - d + k, n + 1)))
    return SimplicialComplex(n, facets, relaxed=d <= 1)


def squeeze_counts_relation_check(d: int, n: int) -> tuple[bool, dict]:
    """Compare the enumeration counts behind ``sq(d-1, n-1)`` and ``ssq(d, n)``.

    ``ssq(d, n)`` counts shifted order ideals in ``n-d-1`` variables of degree
    at most ``floor(d/2)``; ``sq(d-1, n-1)`` counts those in
    ``(n-1)-(d-1)-1`` variables of degree at most ``floor(d/2)``.
    """
    m_s, deg_s = n - d - 1, d // 2
    m_q, deg_q = (n - 1) - (d - 1) - 1, ((d - 1) + 1) // 2
    ssq = count_shifted_order_ideals(m_s, deg_s)
    sq = count_shifted_order_ideals(m_q, deg_q)
    report = {
        "ssq(d,n)": {"m": m_s, "max_deg": deg_s, "count": ssq},
        "sq(d-1,n-1)": {"m": m_q, "max_deg": deg_q, "count": sq},
        # sq(d, n) itself allows degree floor((d+1)/2); differs from ssq for odd d
        "sq(d,n)": {"m": m_s, "max_deg": (d + 1) // 2, "count": count_shifted_order_ideals(m_s, (d + 1) // 2)},
    }
    return ssq == sq, report
