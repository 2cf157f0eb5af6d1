"""``squeeze`` command-line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input
error, 3 a size guard was hit.
"""

from __future__ import annotations

import argparse
import os
import sys
import dataclasses
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .gin import GinError, U_set, exterior_gin, gin_truncated, lefschetz_checks, squeeze
from .ideal import betti_eliahou_kervaire
from .io import FormatError, digest, dumps, read_facets, read_ideal, read_U
from .simplicial import SizeGuardError, betti_hochster, boundary_of_pure, fhg_vectors, stanley_reisner_ideal
from .squeezed import (
    ShiftedOrderIdealError,
    build_squeezed,
    chara5_condition_check,
    enumerate_shifted_order_ideals,
    squeezed_sphere_betti,
)
from .verify import SUITES, run_suite

__all__ = ["RunConfig", "parse_args", "run", "main", "emit_report"]

EXIT_OK, EXIT_MATH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
DEFAULT_SEED = 1


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    U: str | None = None
    facets: str | None = None
    ideal: str | None = None
    d: int | None = None
    n: int | None = None
    m: int | None = None
    maxdeg: int | None = None
    seed: int = DEFAULT_SEED
    field: str = "q"
    out: str | None = None
    suite: str | None = None
    check_conj: bool = False
    inputs: list[str] = dataclasses.field(default_factory=list)


_REQUIRED = {
    "build": ("U", "d"),
    "boundary": ("facets",),
    "betti": (),
    "gin": ("ideal", "n", "maxdeg"),
    "usets": ("facets", "d"),
    "sq": ("facets", "d"),
    "eshift": ("facets",),
    "enumerate": ("m", "maxdeg"),
    "chara5": ("ideal", "n", "d"),
    "verify": ("suite",),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit itself; route through UsageError
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="squeeze", description="Squeezed balls and spheres, Betti tables and generic initial ideals.")
    p.add_argument("--version", action="version", version=f"squeeze {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "build": "facets of the squeezed ball B_d(U)",
        "boundary": "boundary of a pure complex",
        "betti": "Betti table (U file: closed formula; facets: Hochster; ideal: Eliahou-Kervaire)",
        "gin": "generic initial ideal up to degree --maxdeg",
        "usets": "U(Γ), L(Γ) and the Lefschetz criteria",
        "sq": "the squeezed sphere Sq(Γ)",
        "eshift": "exterior algebraic shifting",
        "enumerate": "shifted order ideals, one JSON object per line",
        "chara5": "the four conditions on a strongly stable ideal",
        "verify": "run a verification suite",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, help=text)
        sp.add_argument("--U")
        sp.add_argument("--facets")
        sp.add_argument("--ideal")
        sp.add_argument("--d", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--maxdeg", type=int)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--field", choices=("q", "p"), default="q")
        sp.add_argument("--out")
        sp.add_argument("--suite", choices=sorted(SUITES))
        if name == "enumerate":
            sp.add_argument("--check-conj", action="store_true", help="verify U(S_d(U)) = U for each U (needs --d)")
    return p


def parse_args(argv: list[str] | None = None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    seed = ns.seed
    if seed is None:
        env = os.environ.get("SQUEEZE_SEED")
        try:
            seed = int(env) if env else DEFAULT_SEED
        except ValueError as exc:
            raise UsageError(f"SQUEEZE_SEED must be an integer, got {env!r}") from exc
    cfg = RunConfig(
        command=ns.command, U=ns.U, facets=ns.facets, ideal=ns.ideal, d=ns.d, n=ns.n, m=ns.m,
        maxdeg=ns.maxdeg, seed=seed, field=ns.field, out=ns.out, suite=ns.suite,
        check_conj=getattr(ns, "check_conj", False),
    )
    for req in _REQUIRED[cfg.command]:
        if getattr(cfg, req) is None:
            raise UsageError(f"{cfg.command} requires --{req}")
    if cfg.command == "betti" and sum(x is not None for x in (cfg.U, cfg.facets, cfg.ideal)) != 1:
        raise UsageError("betti takes exactly one of --U, --facets, --ideal")
    if cfg.command == "betti" and cfg.U is not None and cfg.d is None:
        raise UsageError("betti --U requires --d")
    if cfg.check_conj and cfg.d is None:
        raise UsageError("--check-conj requires --d")
    for name in ("d", "n", "m", "maxdeg"):
        v = getattr(cfg, name)
        if v is not None and v < 0:
            raise UsageError(f"--{name} must be >= 0")
    if cfg.m is not None and cfg.d is not None and cfg.n is not None and cfg.n != cfg.m + cfg.d + 1:
        raise UsageError(f"inconsistent sizes: n must equal m + d + 1 = {cfg.m + cfg.d + 1}")
    cfg.inputs = [p for p in (cfg.U, cfg.facets, cfg.ideal) if p is not None]
    return cfg


def emit_report(result: dict, cfg: RunConfig) -> str:
    """Deterministic JSON text carrying the input hash, seed, field and version."""
    h = "|".join(digest(Path(p).read_bytes()) for p in cfg.inputs) if cfg.inputs else digest(cfg.command)
    report = dict(result)
    report["meta"] = {"command": cfg.command, "input_hash": h, "seed": cfg.seed, "field": cfg.field, "version": __version__}
    return dumps(report)


def _check_n(cfg: RunConfig, expected: int) -> None:
    if cfg.n is not None and cfg.n != expected:
        raise UsageError(f"inconsistent sizes: n must equal m + d + 1 = {expected}")


def _run(cfg: RunConfig) -> tuple[int, list[dict]]:
    c = cfg.command
    if c == "build":
        U = read_U(cfg.U)
        _check_n(cfg, U.m + cfg.d + 1)
        pair = build_squeezed(U, cfg.d)
        return EXIT_OK, [{**pair.ball.to_json(), "d": cfg.d, "m": U.m, "sphere": pair.sphere.sorted_facets()}]
    if c == "boundary":
        gamma = read_facets(cfg.facets, relaxed=True)
        return EXIT_OK, [boundary_of_pure(gamma).to_json()]
    if c == "betti":
        if cfg.U:
            U = read_U(cfg.U)
            _check_n(cfg, U.m + cfg.d + 1)
            return EXIT_OK, [{**squeezed_sphere_betti(U, cfg.d).to_json(), "source": "formula", "n": U.m + cfg.d + 1}]
        if cfg.facets:
            gamma = read_facets(cfg.facets, relaxed=True)
            return EXIT_OK, [{**betti_hochster(gamma).to_json(), "source": "hochster", "n": gamma.n}]
        I = read_ideal(cfg.ideal, cfg.n)
        return EXIT_OK, [{**betti_eliahou_kervaire(I).to_json(), "source": "eliahou-kervaire"}]
    if c == "gin":
        res = gin_truncated(read_ideal(cfg.ideal, cfg.n), cfg.n, cfg.maxdeg, cfg.seed, cfg.field)
        return EXIT_OK, [res.to_json()]
    if c == "usets":
        gamma = read_facets(cfg.facets)
        rep = lefschetz_checks(gamma, cfg.d, cfg.seed, cfg.field)
        try:
            U = U_set(gamma, cfg.d, cfg.seed, cfg.field)
        except ShiftedOrderIdealError as exc:
            return EXIT_MATH, [{"U": None, "error": str(exc), "lefschetz": rep.to_json()}]
        return EXIT_OK, [{"U": [str(u) for u in U.sorted_monomials()], "m": U.m, "lefschetz": rep.to_json()}]
    if c == "sq":
        gamma = read_facets(cfg.facets)
        pair = squeeze(gamma, cfg.d, cfg.seed, cfg.field)
        same_f = fhg_vectors(gamma).f == fhg_vectors(pair.sphere).f
        out = {
            **pair.sphere.to_json(),
            "U": [str(u) for u in pair.U.sorted_monomials()],
            "f_vector_preserved": same_f,
            "betti": squeezed_sphere_betti(pair.U, cfg.d).to_json()["betti"] if pair.U.max_deg <= cfg.d // 2 else None,
        }
        return (EXIT_OK if same_f else EXIT_MATH), [out]
    if c == "eshift":
        gamma = read_facets(cfg.facets, relaxed=True)
        shifted = exterior_gin(gamma, cfg.seed, cfg.field)
        return EXIT_OK, [{**shifted.to_json(), "ideal": [str(g) for g in stanley_reisner_ideal(shifted).sorted_generators()]}]
    if c == "enumerate":
        rows = []
        code = EXIT_OK
        for U in enumerate_shifted_order_ideals(cfg.m, cfg.maxdeg):
            row = {"U": [str(u) for u in U.sorted_monomials()]}
            if cfg.check_conj:
                if U.max_deg > cfg.d // 2:
                    row["check"] = "skipped: not S-squeezed"
                else:
                    got = U_set(build_squeezed(U, cfg.d).sphere, cfg.d, cfg.seed, cfg.field)
                    row["check"] = "pass" if got == U else "fail"
                    if got != U:
                        code = EXIT_MATH
            rows.append(row)
        rows.append({"count": len(rows)})
        return code, rows
    if c == "chara5":
        ok, rep = chara5_condition_check(read_ideal(cfg.ideal, cfg.n), cfg.n, cfg.d)
        rep["lefschetz_isomorphisms"] = {str(k): v for k, v in rep["lefschetz_isomorphisms"].items()}
        return EXIT_OK, [rep]
    if c == "verify":
        results = run_suite(cfg.suite, cfg.seed)
        ok = all(r[1] for r in results)
        checks = [{"id": cid, "passed": passed, "detail": detail} for cid, passed, detail in results]
        return (EXIT_OK if ok else EXIT_MATH), [{"suite": cfg.suite, "passed": ok, "checks": checks}]
    raise UsageError(f"unknown command {c}")


def run(cfg: RunConfig) -> int:
    try:
        code, results = _run(cfg)
    except SizeGuardError as exc:
        print(f"squeeze: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ShiftedOrderIdealError, GinError) as exc:
        # input parsed fine but the mathematics did not come out as expected
        if isinstance(exc, ShiftedOrderIdealError) and cfg.command not in ("sq", "usets"):
            print(f"squeeze: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"squeeze: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (UsageError, FormatError, OSError, ValueError) as exc:
        print(f"squeeze: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = "\n".join(emit_report(r, cfg) for r in results) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        print(f"squeeze: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
