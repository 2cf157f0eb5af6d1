"""Text formats for ideals, order ideals and facet lists, plus deterministic JSON output."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .ideal import MonomialIdeal
from .monomial import Monomial
from .simplicial import SimplicialComplex
from .squeezed import ShiftedOrderIdeal, validate_shifted_order_ideal

__all__ = [
    "FormatError",
    "parse_ideal_text",
    "parse_U_text",
    "parse_facets_text",
    "read_ideal",
    "read_U",
    "read_facets",
    "format_U",
    "format_facets",
    "dumps",
    "digest",
]


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def _header(lines: list[tuple[int, str]], key: str) -> tuple[int, list[tuple[int, str]]]:
    if not lines or not lines[0][1].replace(" ", "").startswith(key + "="):
        raise FormatError(f"first line must be '{key}=<int>'")
    try:
        value = int(lines[0][1].split("=", 1)[1])
    except ValueError as exc:
        raise FormatError(f"line {lines[0][0]}: bad header") from exc
    return value, lines[1:]


def _monomial(no: int, line: str) -> Monomial:
    try:
        return Monomial.parse(line)
    except ValueError as exc:
        raise FormatError(f"line {no}: {exc}") from exc


def parse_ideal_text(text: str, n: int | None = None) -> MonomialIdeal:
    """One generator per line; ``#`` comment lines and blank lines are skipped."""
    return MonomialIdeal([_monomial(no, line) for no, line in _lines(text)], n)


def parse_U_text(text: str) -> ShiftedOrderIdeal:
    """``m=<int>`` header, then one monomial per line (the unit written ``1``)."""
    m, rest = _header(_lines(text), "m")
    return validate_shifted_order_ideal(m, [_monomial(no, line) for no, line in rest])


def parse_facets_text(text: str, relaxed: bool = False) -> SimplicialComplex:
    """``n=<int>`` header, then one facet per line as space-separated vertices."""
    n, rest = _header(_lines(text), "n")
    facets = []
    for no, line in rest:
        try:
            facets.append([int(v) for v in line.split()])
        except ValueError as exc:
            raise FormatError(f"line {no}: bad vertex list") from exc
    try:
        return SimplicialComplex(n, facets, relaxed=relaxed)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def read_ideal(path: str | Path, n: int | None = None) -> MonomialIdeal:
    return parse_ideal_text(Path(path).read_text(encoding="utf-8"), n)


def read_U(path: str | Path) -> ShiftedOrderIdeal:
    return parse_U_text(Path(path).read_text(encoding="utf-8"))


def read_facets(path: str | Path, relaxed: bool = False) -> SimplicialComplex:
    return parse_facets_text(Path(path).read_text(encoding="utf-8"), relaxed)


def format_U(U: ShiftedOrderIdeal) -> str:
    return "\n".join([f"m={U.m}"] + [str(u) for u in U.sorted_monomials()]) + "\n"


def format_facets(gamma: SimplicialComplex) -> str:
    return "\n".join([f"n={gamma.n}"] + [" ".join(map(str, f)) for f in gamma.sorted_facets()]) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def digest(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()
