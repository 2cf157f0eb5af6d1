"""Named verification suites run by ``squeeze verify``.

Each check returns ``(check_id, passed, detail)``; suites return them sorted by id.
"""

from __future__ import annotations

from typing import Callable

from .gin import U_set, exterior_gin, gin_truncated, lefschetz_checks, squeeze
from .ideal import (
    MonomialIdeal,
    betti_eliahou_kervaire,
    betti_linear_quotients,
    hilbert_function_quotient,
)
from .monomial import Monomial
from .operators import ShiftSequence, alpha_a, alpha_image_ordered, apply_operator_to_ideal, sigma_a
from .simplicial import betti_hochster, fhg_vectors, from_facets, stanley_reisner_ideal
from .squeezed import (
    build_squeezed,
    chara5_condition_check,
    enumerate_shifted_order_ideals,
    exterior_shifted_ball,
    ideal_I_of_U,
    squeezed_sphere_betti,
    validate_shifted_order_ideal,
)

__all__ = ["SUITES", "run_suite", "golden"]


def _I(*gens: str) -> MonomialIdeal:
    return MonomialIdeal(gens)


class golden:
    """Fixed reference data for the worked examples."""

    stable_I = _I("x1^4", "x1^3*x2", "x1^3*x3", "x1^2*x2^2", "x1^2*x2*x3", "x1*x2^3", "x2^4")
    a1 = ShiftSequence.arithmetic(2)
    a2 = ShiftSequence((0, 1, 2), None)
    alpha_a1 = _I("x1*x3*x5*x7", "x1*x3*x5*x8", "x1*x3*x5*x9", "x1*x3*x6*x8", "x1*x3*x6*x9", "x1*x4*x6*x8", "x2*x4*x6*x8")
    alpha_a2 = _I("x1*x2*x3^2", "x1*x2*x3*x4", "x1*x2*x3*x5", "x1*x2*x4^2", "x1*x2*x4*x5", "x1*x3*x4^2", "x2*x3*x4^2")
    stable_betti = {(0, 4): 7, (1, 5): 8, (2, 6): 2}

    sigma_in = _I("x1^4", "x1^3*x2", "x1^2*x2^2")
    sigma_seq = ShiftSequence.constant(3)
    sigma_out = _I("x1^2*x2^2", "x1^2*x2*x3", "x1^2*x3^2")

    U5 = ("1", "x1", "x2", "x3", "x1*x3", "x2*x3", "x3^2")
    B5_facets = sorted(
        [[1, 2, 5, 6, 8, 9], [1, 2, 6, 7, 8, 9], [2, 3, 5, 6, 8, 9], [2, 3, 6, 7, 8, 9],
         [3, 4, 5, 6, 8, 9], [3, 4, 6, 7, 8, 9], [4, 5, 6, 7, 8, 9]]
    )
    I_B5 = _I("x1*x3", "x1*x4", "x2*x4", "x1*x5*x7", "x2*x5*x7", "x3*x5*x7")
    I_S5 = I_B5 + _I("x2*x6*x8*x9", "x3*x6*x8*x9", "x4*x6*x8*x9")
    I_U5 = _I("x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^3")
    # quotient-indexed resolution of R/I_{S_5(U)}
    S5_quotient = {
        (0, 0): 1,
        (1, 2): 3, (1, 3): 3, (1, 4): 3,
        (2, 3): 2, (2, 4): 6, (2, 5): 6, (2, 6): 2,
        (3, 5): 3, (3, 6): 3, (3, 7): 3,
        (4, 9): 1,
    }
    exterior_B5 = _I("x1*x2", "x1*x3", "x2*x3", "x1*x4*x5", "x2*x4*x5", "x3*x4*x5")

    octahedron_facets = [[a, b, c] for a in (1, 2) for b in (3, 4) for c in (5, 6)]
    octahedron_betti = {(0, 2): 3, (1, 4): 3, (2, 6): 1}
    octahedron_U = ("1", "x1", "x2")
    sq_octahedron_quotient = {(0, 0): 1, (1, 2): 3, (1, 3): 2, (2, 3): 2, (2, 4): 3, (3, 6): 1}
    octahedron_gin = _I("x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^4")


def _quot(table) -> dict:
    return dict(table.to_quotient().entries)


def _checks_paper_examples(seed: int) -> dict[str, Callable[[], tuple[bool, str]]]:
    g = golden
    U = validate_shifted_order_ideal(3, g.U5)
    pair = build_squeezed(U, 5)
    octa = from_facets(6, g.octahedron_facets)

    def alpha_example():
        i1 = apply_operator_to_ideal(g.stable_I, lambda u: alpha_a(u, g.a1))
        i2 = apply_operator_to_ideal(g.stable_I, lambda u: alpha_a(u, g.a2))
        ek = dict(betti_eliahou_kervaire(g.stable_I).entries)
        return i1 == g.alpha_a1 and i2 == g.alpha_a2 and ek == g.stable_betti, f"EK table {ek}"

    def alpha_linear_quotients():
        ok = True
        for a in (g.a1, g.a2):
            images, sizes = alpha_image_ordered(g.stable_I, a)
            ok &= betti_linear_quotients(images, sizes) == betti_eliahou_kervaire(g.stable_I)
        return ok, "linear-quotient table equals EK table"

    def sigma_example():
        out = apply_operator_to_ideal(g.sigma_in, lambda u: sigma_a(u, g.sigma_seq))
        return out == g.sigma_out, str(out)

    def ball_facets():
        return pair.ball.sorted_facets() == g.B5_facets, f"{len(pair.ball.facets)} facets"

    def ball_sphere_ideals():
        ib, is_ = stanley_reisner_ideal(pair.ball), stanley_reisner_ideal(pair.sphere)
        return ib == g.I_B5 and is_ == g.I_S5 and ideal_I_of_U(U) == g.I_U5, f"{ib}; {is_}"

    def sphere_betti():
        t = squeezed_sphere_betti(U, 5)
        return _quot(t) == g.S5_quotient and t == betti_hochster(pair.sphere), "formula and Hochster agree"

    def prop_gin_ball():
        I = stanley_reisner_ideal(pair.ball)
        q = gin_truncated(I, 9, 4, seed, "q").ideal
        p = gin_truncated(I, 9, 4, seed, "p").ideal
        hf = hilbert_function_quotient(I, 9, 6) == hilbert_function_quotient(g.I_U5, 9, 6)
        return q == g.I_U5 and p == q and hf, str(q)

    def usets_sphere():
        rep = lefschetz_checks(pair.sphere, 5, seed)
        return U_set(pair.sphere, 5, seed) == U and rep.weak, f"weak={rep.weak} strong={rep.strong}"

    def octahedron():
        Ug = U_set(octa, 3, seed)
        hb = dict(betti_hochster(octa).entries)
        sq = squeeze(octa, 3, seed)
        sq_table = squeezed_sphere_betti(sq.U, 3)
        base = betti_hochster(octa)
        dominated = base.dominated_by(sq_table) and base != sq_table
        ok = (
            Ug.monomials == frozenset(Monomial.parse(u) for u in g.octahedron_U)
            and hb == g.octahedron_betti
            and _quot(sq_table) == g.sq_octahedron_quotient
            and sq_table == betti_hochster(sq.sphere)
            and dominated
            and fhg_vectors(octa).f == fhg_vectors(sq.sphere).f
        )
        return ok, f"U={Ug}"

    def exterior_ball():
        ext = exterior_gin(pair.ball, seed)
        return stanley_reisner_ideal(ext) == g.exterior_B5 and ext == exterior_shifted_ball(U, 5), str(stanley_reisner_ideal(ext))

    def chara5():
        good, _ = chara5_condition_check(g.octahedron_gin, 6, 3)
        bad, rep = chara5_condition_check(_I("x1^2", "x1*x2", "x2^2"), 6, 3)
        return good and not bad and not rep["top_vanishes"], f"A_4 dimension {rep['A_{d+1}']} for the failing case"

    return {
        "01-alpha-example": alpha_example,
        "02-alpha-linear-quotients": alpha_linear_quotients,
        "03-sigma-example": sigma_example,
        "04-ball-facets": ball_facets,
        "05-ball-sphere-ideals": ball_sphere_ideals,
        "06-sphere-betti-table": sphere_betti,
        "07-gin-of-ball": prop_gin_ball,
        "08-U-of-sphere": usets_sphere,
        "09-octahedron": octahedron,
        "10-exterior-shifted-ball": exterior_ball,
        "11-chara5": chara5,
    }


def _checks_sweep(seed: int) -> dict[str, Callable[[], tuple[bool, str]]]:
    """U(S_d(U)) = U, weak Lefschetz and face-number identities for m <= 3, degree <= 2, d in {4, 5}."""
    checks = {}
    for m in range(1, 4):
        for U in enumerate_shifted_order_ideals(m, 2):
            for d in (4, 5):
                checks[f"m{m}-d{d}-{'-'.join(map(str, U.sorted_monomials()))}"] = _sweep_item(U, d, seed)
    return checks


def _sweep_item(U, d: int, seed: int):
    def run():
        pair = build_squeezed(U, d)
        got = U_set(pair.sphere, d, seed)
        rep = lefschetz_checks(pair.sphere, d, seed)
        counts = U.degree_counts()
        fb, fs = fhg_vectors(pair.ball), fhg_vectors(pair.sphere)
        h_ok = all(fb.h[i] == (counts[i] if i < len(counts) else 0) for i in range(d + 2))
        g_ok = all(fs.g[i] == (counts[i] if i < len(counts) else 0) for i in range(d // 2 + 1))
        k = U.max_deg
        f_ok = fb.f[: d - k] == fs.f[: d - k]
        ds_ok = all(fs.h[i] == fs.h[d - i] for i in range(d + 1))
        ok = got == U and rep.weak and h_ok and g_ok and f_ok and ds_ok
        return ok, f"U(S)={got} weak={rep.weak} strong={rep.strong}"

    return run


SUITES = {
    "paper-examples": _checks_paper_examples,
    "sweep": _checks_sweep,
}


def run_suite(name: str, seed: int = 1) -> list[tuple[str, bool, str]]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    out = []
    for cid, check in sorted(SUITES[name](seed).items()):
        try:
            ok, detail = check()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((cid, bool(ok), detail))
    return out
