"""Generic initial ideals by degreewise exact linear algebra.

The degree-t part of ``in(J)`` for a homogeneous ideal ``J`` is the set of
leading monomials of ``J_t``.  With the columns of the coefficient matrix
ordered degrevlex-descending these are the pivot columns of its echelon form.

Restricting to the first ``k`` variables uses the revlex section property:
``gin(I) ∩ K[x_1..x_k]`` is the initial ideal of ``φ(I)`` with
``x_{k+1}, ..., x_n`` set to zero.  This keeps the matrices for ``L(Γ)`` and
``U(Γ)`` small.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _linalg
from .ideal import MonomialIdeal, NotStronglyStableError, is_strongly_stable
from .monomial import ONE, Monomial, degrevlex_key, monomials_of_degree
from .simplicial import SimplicialComplex, SizeGuardError, _mask, _unmask, complex_of_ideal, stanley_reisner_ideal
from .squeezed import ShiftedOrderIdeal, ShiftedOrderIdealError, SqueezedPair, build_squeezed, validate_shifted_order_ideal

__all__ = [
    "GinError",
    "GinResult",
    "GenericMatrix",
    "Polynomial",
    "gin_truncated",
    "exterior_gin",
    "L_set",
    "U_set",
    "LefschetzReport",
    "lefschetz_checks",
    "squeeze",
    "generic_section",
    "EXTERIOR_MAX_N",
]

Polynomial = Mapping[Monomial, "int | Fraction"]

ENTRY_RANGE = 999
MAX_RETRIES = 3
EXTERIOR_MAX_N = 12


class GinError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenericMatrix:
    """Invertible n×n integer matrix; ``φ(x_k) = sum_i a[i][k] x_i``."""

    entries: tuple[tuple[int, ...], ...]
    seed: int

    @classmethod
    def draw(cls, n: int, seed: int) -> "GenericMatrix":
        rng = random.Random(seed)
        while True:
            rows = tuple(tuple(rng.randint(-ENTRY_RANGE, ENTRY_RANGE) for _ in range(n)) for _ in range(n))
            if n == 0 or _linalg.det(rows) != 0:
                return cls(rows, seed)

    @property
    def n(self) -> int:
        return len(self.entries)

    def image_of_variable(self, k: int, keep: int | None = None) -> dict[Monomial, int]:
        """``φ(x_k)`` with the variables beyond ``keep`` set to zero."""
        top = self.n if keep is None else keep
        return {Monomial({i: 1}): self.entries[i - 1][k - 1] for i in range(1, top + 1) if self.entries[i - 1][k - 1]}


@dataclass(frozen=True)
class GinResult:
    ideal: MonomialIdeal
    D: int
    seeds: tuple[int, ...]
    field: str
    variables: int

    @property
    def seeds_agreeing(self) -> int:
        return len(self.seeds)

    def to_json(self) -> dict:
        return {
            "gin": [str(g) for g in self.ideal.sorted_generators()],
            "D": self.D,
            "seeds": list(self.seeds),
            "seeds_agreeing": self.seeds_agreeing,
            "agrees": True,
            "field": self.field,
        }


def _mul(f: Mapping[Monomial, object], g: Mapping[Monomial, object]) -> dict[Monomial, object]:
    out: dict[Monomial, object] = {}
    for u, a in f.items():
        for v, b in g.items():
            w = u * v
            out[w] = out.get(w, 0) + a * b
    return {w: c for w, c in out.items() if c}


class _Substitution:
    """Memoized images ``φ(u)`` of monomials, optionally with trailing variables zeroed."""

    def __init__(self, phi: GenericMatrix, keep: int | None):
        self.phi = phi
        self.keep = keep
        self.cache: dict[Monomial, dict[Monomial, int]] = {ONE: {ONE: 1}}

    def __call__(self, u: Monomial) -> dict[Monomial, int]:
        hit = self.cache.get(u)
        if hit is not None:
            return hit
        k = len(u.exps)
        rest = u / Monomial({k: 1})
        img = _mul(self(rest), self.phi.image_of_variable(k, self.keep))
        self.cache[u] = img
        return img

    def poly(self, f: Polynomial) -> dict[Monomial, object]:
        out: dict[Monomial, object] = {}
        for u, c in f.items():
            for w, a in self(u).items():
                out[w] = out.get(w, 0) + c * a
        return {w: c for w, c in out.items() if c}


def _integer_row(poly: Mapping[Monomial, object], index: Mapping[Monomial, int], width: int) -> list[int]:
    row: list[object] = [0] * width
    for w, c in poly.items():
        row[index[w]] = c
    if any(isinstance(c, Fraction) for c in row):
        den = 1
        for c in row:
            if isinstance(c, Fraction):
                den = den * c.denominator // _gcd(den, c.denominator)
        row = [c * den for c in row]
    return [int(c) for c in row]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _as_polynomials(gens) -> tuple[list[dict[Monomial, object]], bool]:
    if isinstance(gens, MonomialIdeal):
        return [{g: 1} for g in gens.generators], True
    polys = []
    for g in gens:
        if isinstance(g, Monomial):
            polys.append({g: 1})
        elif isinstance(g, str):
            polys.append({Monomial.parse(g): 1})
        else:
            polys.append({u: c for u, c in dict(g).items() if c})
    for p in polys:
        if len({u.degree for u in p}) > 1:
            raise ValueError("generators must be homogeneous")
    return polys, all(len(p) == 1 for p in polys)


def _initial_monomials(polys, monomial_input: bool, n: int, keep: int, D: int, phi: GenericMatrix, field: str):
    """Leading monomials of ``φ(I)_t`` (variables beyond ``keep`` zeroed) for t <= D."""
    sub = _Substitution(phi, keep if keep < n else None)
    found: list[Monomial] = []
    polys = [p for p in polys if p]
    bases: dict[int, dict[Monomial, object]] = {}
    mono_gens = MonomialIdeal([next(iter(p)) for p in polys]) if monomial_input else None
    for t in range(D + 1):
        cols = sorted(monomials_of_degree(keep, t), key=lambda u: degrevlex_key(u, keep), reverse=True)
        if not cols:
            continue
        index = {u: c for c, u in enumerate(cols)}
        images: list[Mapping[Monomial, object]] = []
        if monomial_input and keep == n:
            # I_t is spanned by its monomials, so φ(I_t) is spanned by their images
            for u in monomials_of_degree(n, t):
                if u in mono_gens:
                    images.append(sub(u))
        else:
            for p in polys:
                dg = next(iter(p)).degree
                if dg > t:
                    continue
                if id(p) not in bases:
                    bases[id(p)] = sub.poly(p)
                base = bases[id(p)]
                for m in monomials_of_degree(keep, t - dg):
                    images.append({w * m: c for w, c in base.items()})
        rows = [_integer_row(img, index, len(cols)) for img in images if img]
        for c in _linalg.pivot_columns(rows, len(cols), field):
            found.append(cols[c])
    return MonomialIdeal(found, n)


def gin_truncated(
    gens,
    n: int,
    D: int,
    seed: int = 1,
    field: str = "q",
    variables: int | None = None,
) -> GinResult:
    """``gin(I)`` up to degree ``D`` with respect to degrevlex.

    ``variables=k`` returns ``gin(I) ∩ K[x_1..x_k]`` instead.  Two matrices
    (``seed`` and ``seed + 1``) must give the same answer; on disagreement a
    fresh pair is drawn, and after repeated disagreement ``GinError`` is raised.
    """
    if D < 0:
        raise ValueError("D must be >= 0")
    if field not in _linalg.FIELDS:
        raise ValueError(f"field must be one of {_linalg.FIELDS}")
    polys, monomial_input = _as_polynomials(gens)
    for p in polys:
        if any(len(u.exps) > n for u in p):
            raise ValueError(f"generator uses a variable beyond x{n}")
    keep = n if variables is None else variables
    if not 0 <= keep <= n:
        raise ValueError("variables must lie in [0, n]")
    for attempt in range(MAX_RETRIES):
        s1 = seed + 2 * attempt
        s2 = s1 + 1
        a = _initial_monomials(polys, monomial_input, n, keep, D, GenericMatrix.draw(n, s1), field)
        b = _initial_monomials(polys, monomial_input, n, keep, D, GenericMatrix.draw(n, s2), field)
        if a == b:
            if field == "q" and not is_strongly_stable(a):
                raise NotStronglyStableError(f"gin {a} is not strongly stable; input likely not homogeneous")
            return GinResult(a, D, (s1, s2), field, keep)
    raise GinError("non-generic matrices suspected")


# --- exterior algebra -----------------------------------------------------


def _exterior_images(phi: GenericMatrix, masks: Iterable[int]) -> dict[int, dict[int, int]]:
    """``φ(e_S)`` for each mask S, built by wedging on the image of the largest element."""
    n = phi.n
    cache: dict[int, dict[int, int]] = {0: {0: 1}}

    def image(S: int) -> dict[int, int]:
        hit = cache.get(S)
        if hit is not None:
            return hit
        top = S.bit_length()
        rest = cache.get(S ^ (1 << (top - 1)))
        if rest is None:
            rest = image(S ^ (1 << (top - 1)))
        out: dict[int, int] = {}
        for T, c in rest.items():
            for i in range(1, n + 1):
                a = phi.entries[i - 1][top - 1]
                bit = 1 << (i - 1)
                if not a or T & bit:
                    continue
                # e_T ∧ e_i: move e_i left past the elements of T larger than i
                sign = -1 if bin(T >> i).count("1") % 2 else 1
                out[T | bit] = out.get(T | bit, 0) + sign * c * a
        out = {k: v for k, v in out.items() if v}
        cache[S] = out
        return out

    return {S: image(S) for S in masks}


def _revlex_desc_key(mask: int, n: int):
    return degrevlex_key(Monomial.from_set(_unmask(mask)), n)


def _exterior_initial(gamma: SimplicialComplex, phi: GenericMatrix, field: str) -> frozenset[int]:
    n = gamma.n
    faces = gamma.face_masks()
    leading: set[int] = set()
    for t in range(1, n + 1):
        basis = [m for m in _masks_of_size(n, t)]
        nonfaces = [m for m in basis if m not in faces]
        if not nonfaces:
            continue
        cols = sorted(basis, key=lambda m: _revlex_desc_key(m, n), reverse=True)
        index = {m: c for c, m in enumerate(cols)}
        imgs = _exterior_images(phi, nonfaces)
        rows = []
        for S in nonfaces:
            row = [0] * len(cols)
            for T, c in imgs[S].items():
                row[index[T]] = c
            rows.append(row)
        for c in _linalg.pivot_columns(rows, len(cols), field):
            leading.add(cols[c])
    return frozenset(leading)


def _masks_of_size(n: int, t: int) -> list[int]:
    return [_mask(c) for c in itertools.combinations(range(1, n + 1), t)]


def exterior_gin(gamma: SimplicialComplex, seed: int = 1, field: str = "q") -> SimplicialComplex:
    """Exterior algebraic shifting ``Δ^e(Γ)``: faces are the sets outside ``Gin(J_Γ)``."""
    n = gamma.n
    if n > EXTERIOR_MAX_N:
        raise SizeGuardError(f"exterior gin limited to n <= {EXTERIOR_MAX_N}")
    for attempt in range(MAX_RETRIES):
        s1 = seed + 2 * attempt
        a = _exterior_initial(gamma, GenericMatrix.draw(n, s1), field)
        b = _exterior_initial(gamma, GenericMatrix.draw(n, s1 + 1), field)
        if a == b:
            ideal = MonomialIdeal([Monomial.from_set(_unmask(m)) for m in a], n)
            return complex_of_ideal(ideal, n)
    raise GinError("non-generic matrices suspected")


# --- L(Γ), U(Γ), Lefschetz criteria -----------------------------------------


def _standard_by_degree(J: MonomialIdeal, k: int, D: int) -> dict[int, list[Monomial]]:
    return {t: [u for u in monomials_of_degree(k, t) if u not in J] for t in range(D + 1)}


def L_set(gamma: SimplicialComplex, d: int, D: int | None = None, seed: int = 1, field: str = "q") -> dict[int, list[Monomial]]:
    """Standard monomials of ``gin(I_Γ)`` in ``x_1..x_{n-d}``, graded by degree up to ``D`` (default d+1)."""
    D = d + 1 if D is None else D
    k = gamma.n - d
    if k < 0:
        raise ValueError("d exceeds the number of vertices")
    res = gin_truncated(stanley_reisner_ideal(gamma), gamma.n, D, seed, field, variables=k)
    return _standard_by_degree(res.ideal, k, D)


def U_set(gamma: SimplicialComplex, d: int, seed: int = 1, field: str = "q") -> ShiftedOrderIdeal:
    """``U(Γ)``: standard monomials of ``gin(I_Γ)`` in ``x_1..x_{n-d-1}``."""
    k = gamma.n - d - 1
    if k < 0:
        raise ValueError("d + 1 exceeds the number of vertices")
    D = d // 2 + 1
    res = gin_truncated(stanley_reisner_ideal(gamma), gamma.n, D, seed, field, variables=k)
    std = _standard_by_degree(res.ideal, k, D)
    if std[D]:
        raise ShiftedOrderIdealError(
            "(degree)", std[D][0], "Γ lacks weak Lefschetz or is not Gorenstein*: U(Γ) has a monomial of degree > floor(d/2)"
        )
    monomials = [u for t in range(D) for u in std[t]]
    try:
        return validate_shifted_order_ideal(k, monomials)
    except ShiftedOrderIdealError as exc:
        raise ShiftedOrderIdealError(exc.axiom, exc.witness, "Γ lacks weak Lefschetz or is not Gorenstein*") from exc


@dataclass(frozen=True)
class LefschetzReport:
    weak: bool
    strong: bool
    h: tuple[int, ...]

    def to_json(self) -> dict:
        return {"weak": self.weak, "strong": self.strong, "h_from_L": list(self.h)}


def lefschetz_checks(gamma: SimplicialComplex, d: int, seed: int = 1, field: str = "q") -> LefschetzReport:
    """Monomial criteria for the weak and strong Lefschetz properties on ``L(Γ)``.

    weak: ``x_{n-d} L_{i-1} ⊂ L_i`` for ``i <= floor(d/2)`` and
    ``x_{n-d} L_{i-1} ⊃ L_i`` for ``floor(d/2) < i <= d + 1``;
    strong: ``x_{n-d}^{d-2i} L_i = L_{d-i}``.
    """
    L = L_set(gamma, d, d + 1, seed, field)
    k = gamma.n - d
    if k == 0:
        return LefschetzReport(True, True, tuple(len(L[t]) for t in range(d + 1)))
    x = Monomial({k: 1})
    sets = {t: set(L[t]) for t in L}
    weak = True
    for i in range(1, d + 2):
        image = {x * u for u in sets[i - 1]}
        if i <= d // 2:
            weak &= image <= sets[i]
        else:
            weak &= sets[i] <= image
    strong = all({Monomial({k: d - 2 * i}) * u for u in sets[i]} == sets[d - i] for i in range(d // 2 + 1))
    return LefschetzReport(weak, strong, tuple(len(L[t]) for t in range(d + 1)))


def squeeze(gamma: SimplicialComplex, d: int, seed: int = 1, field: str = "q") -> SqueezedPair:
    """``Sq(Γ) = S_d(U(Γ))`` for a ``(d-1)``-sphere ``Γ``; returned as the pair (ball, sphere)."""
    U = U_set(gamma, d, seed, field)
    if U.m + d + 1 != gamma.n:
        raise AssertionError("vertex count mismatch")
    return build_squeezed(U, d)


# --- generic hyperplane sections --------------------------------------------


def generic_section(I, n: int, m: int, seed: int = 1) -> list[dict[Monomial, Fraction]]:
    """Restrict ``I`` to ``m`` generic hyperplanes, returning generators in ``n - m`` variables.

    Each step draws a generic linear form ``h = c_1 x_1 + ... + c_k x_k``
    and eliminates the last variable via ``x_k = -(c_1 x_1 + ... + c_{k-1} x_{k-1}) / c_k``.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    polys, _ = _as_polynomials(I)
    polys = [{u: Fraction(c) for u, c in p.items()} for p in polys]
    rng = random.Random(seed)
    for k in range(n, n - m, -1):
        coeffs = [rng.randint(-ENTRY_RANGE, ENTRY_RANGE) for _ in range(k)]
        while coeffs[-1] == 0:
            coeffs[-1] = rng.randint(-ENTRY_RANGE, ENTRY_RANGE)
        sub = {Monomial({i: 1}): Fraction(-coeffs[i - 1], coeffs[-1]) for i in range(1, k) if coeffs[i - 1]}
        polys = [_substitute_last(p, k, sub) for p in polys]
        polys = [p for p in polys if p]
    return polys


def _substitute_last(p: Mapping[Monomial, Fraction], k: int, lin: Mapping[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    powers: list[dict[Monomial, Fraction]] = [{ONE: Fraction(1)}]
    out: dict[Monomial, Fraction] = {}
    for u, c in p.items():
        e = u.exponent(k)
        while len(powers) <= e:
            powers.append(_mul(powers[-1], lin))
        rest = u.strip(k)
        for w, a in powers[e].items():
            out[rest * w] = out.get(rest * w, 0) + c * a
    return {w: c for w, c in out.items() if c}
