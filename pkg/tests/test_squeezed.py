import itertools

import pytest

from squeeze import (
    Monomial,
    MonomialIdeal,
    ShiftedOrderIdealError,
    betti_hochster,
    build_squeezed,
    chara5_condition_check,
    count_shifted_order_ideals,
    enumerate_shifted_order_ideals,
    exterior_shifted_ball,
    facet_F,
    fhg_vectors,
    ideal_I_of_U,
    is_strongly_stable,
    lex_order_ideal,
    squeeze_counts_relation_check,
    squeezed_sphere_betti,
    stanley_reisner_ideal,
    validate_shifted_order_ideal,
)
from squeeze.monomial import monomials_up_to_degree
from squeeze.simplicial import SizeGuardError

M = Monomial.parse
I_ = lambda *g: MonomialIdeal(g)


def test_validation_accepts_examples(U5):
    assert U5.degree_counts() == (1, 3, 3)
    assert len(validate_shifted_order_ideal(2, ["1", "x1", "x2"])) == 3


@pytest.mark.parametrize(
    "m, mons, axiom",
    [
        (2, ["1", "x1", "x2", "x1^2"], "(iii)"),
        (2, ["1", "x1"], "(i)"),
        (2, ["1", "x1", "x2", "x2*x3"], "(range)"),
        (3, ["1", "x1", "x2", "x3", "x1*x2*x3"], "(ii)"),
    ],
)
def test_validation_names_axiom(m, mons, axiom):
    with pytest.raises(ShiftedOrderIdealError) as info:
        validate_shifted_order_ideal(m, mons)
    assert info.value.axiom == axiom
    assert isinstance(info.value.witness, Monomial)


@pytest.mark.parametrize(
    "u, expected",
    [("x1*x3", {1, 2, 5, 6, 8, 9}), ("1", {4, 5, 6, 7, 8, 9}), ("x3^2", {3, 4, 5, 6, 8, 9})],
)
def test_facet_map(u, expected):
    assert facet_F(M(u), 5, 9) == expected


def test_facet_map_degree_bound():
    with pytest.raises(ValueError):
        facet_F(M("x1^4"), 5, 9)


def test_build_squeezed(U5):
    pair = build_squeezed(U5, 5)
    assert pair.n == 9 and len(pair.ball.facets) == 7
    assert {len(f) for f in pair.ball.facets} == {6}
    assert pair.sphere.vertices == set(range(1, 10))
    with pytest.raises(ValueError):
        build_squeezed(U5, 2)


def test_minimal_U_gives_stacked_ball():
    for m, d in [(1, 3), (3, 4), (2, 6)]:
        U = validate_shifted_order_ideal(m, monomials_up_to_degree(m, 1))
        pair = build_squeezed(U, d)
        assert len(pair.ball.facets) == m + 1
        # stacked: consecutive facets share a ridge
        assert fhg_vectors(pair.ball).h[:2] == (1, m)


def test_I_of_U(U5):
    assert ideal_I_of_U(U5) == I_("x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^3")
    assert ideal_I_of_U(validate_shifted_order_ideal(2, ["1", "x1", "x2"])) == I_("x1^2", "x1*x2", "x2^2")
    assert ideal_I_of_U(validate_shifted_order_ideal(1, ["1", "x1"])) == I_("x1^2")


def test_sphere_betti_examples(U5):
    q = squeezed_sphere_betti(U5, 5).to_quotient().by_homological_degree()
    assert q == {
        0: {0: 1},
        1: {2: 3, 3: 3, 4: 3},
        2: {3: 2, 4: 6, 5: 6, 6: 2},
        3: {5: 3, 6: 3, 7: 3},
        4: {9: 1},
    }
    octa_U = validate_shifted_order_ideal(2, ["1", "x1", "x2"])
    q = squeezed_sphere_betti(octa_U, 3).to_quotient().by_homological_degree()
    assert q == {0: {0: 1}, 1: {2: 3, 3: 2}, 2: {3: 2, 4: 3}, 3: {6: 1}}
    # ideal-indexed storage
    assert squeezed_sphere_betti(octa_U, 3)[(0, 2)] == 3
    with pytest.raises(ValueError):
        squeezed_sphere_betti(validate_shifted_order_ideal(1, ["1", "x1", "x1^2"]), 3)


def test_lex_order_ideal():
    U = lex_order_ideal(3, (1, 3, 3))
    assert U.degree_counts() == (1, 3, 3)
    assert U.monomials == {M(u) for u in ["1", "x1", "x2", "x3", "x2^2", "x2*x3", "x3^2"]}
    assert lex_order_ideal(2, (1, 2)).monomials == {M("1"), M("x1"), M("x2")}
    with pytest.raises(ValueError):
        lex_order_ideal(2, (1, 2, 5))


def test_lex_ideal_is_a_lex_segment():
    # every monomial of U^lex of degree k is lex-smaller than every outside one
    U = lex_order_ideal(3, (1, 3, 4, 3))
    for k in (2, 3):
        inside = [u for u in U.monomials if u.degree == k]
        outside = [u for u in monomials_up_to_degree(3, k) if u.degree == k and u not in U]
        assert max(u.vector(3) for u in inside) < min(v.vector(3) for v in outside)


def _brute_force_count(m, max_deg):
    base = monomials_up_to_degree(m, 1)
    rest = [u for u in monomials_up_to_degree(m, max_deg) if u.degree >= 2]
    count = 0
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            try:
                validate_shifted_order_ideal(m, base + list(extra))
            except ShiftedOrderIdealError:
                continue
            count += 1
    return count


@pytest.mark.parametrize("m, max_deg", [(1, 1), (2, 1), (2, 2), (1, 3), (3, 2), (2, 3)])
def test_enumeration_matches_brute_force(m, max_deg):
    listed = list(enumerate_shifted_order_ideals(m, max_deg))
    assert len(listed) == len({U.monomials for U in listed}) == _brute_force_count(m, max_deg)


def test_enumeration_small_counts_and_guard():
    assert count_shifted_order_ideals(1, 1) == 1
    assert count_shifted_order_ideals(2, 1) == 1
    assert count_shifted_order_ideals(2, 2) == 4
    with pytest.raises(SizeGuardError):
        list(enumerate_shifted_order_ideals(5, 2))
    sizes = [len(U) for U in enumerate_shifted_order_ideals(3, 2)]
    assert sizes == sorted(sizes)


def test_chara5_examples():
    ok, report = chara5_condition_check(I_("x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^4"), 6, 3)
    assert ok and report["lefschetz_isomorphisms"] == {0: True, 1: True}
    ok, report = chara5_condition_check(I_("x1"), 2, 1)
    assert set(report) >= {"max_condition", "top_vanishes", "dim_A1_condition", "lefschetz_isomorphisms"}
    ok, report = chara5_condition_check(I_("x1^2", "x1*x2", "x2^2"), 6, 3)
    assert not ok and not report["top_vanishes"] and report["A_{d+1}"] > 0
    with pytest.raises(ValueError):
        chara5_condition_check(I_("x2"), 3, 1)


def test_exterior_shifted_ball(U5):
    ball = exterior_shifted_ball(U5, 5)
    assert stanley_reisner_ideal(ball) == I_("x1*x2", "x1*x3", "x2*x3", "x1*x4*x5", "x2*x4*x5", "x3*x4*x5")
    assert {1, 4, 6, 7, 8, 9} in {frozenset(f) for f in ball.facets}
    assert {4, 5, 6, 7, 8, 9} in {frozenset(f) for f in ball.facets}
    assert {len(f) for f in ball.facets} == {6}


def test_counts_relation():
    assert squeeze_counts_relation_check(4, 7)[0]
    assert squeeze_counts_relation_check(2, 4)[0]
    ok, report = squeeze_counts_relation_check(5, 8)
    assert ok and report["sq(d,n)"]["count"] != report["ssq(d,n)"]["count"]


@pytest.mark.parametrize("d", [3, 4, 5])
def test_face_number_lemmas_on_sweep(d):
    for m in (1, 2, 3):
        for U in enumerate_shifted_order_ideals(m, (d + 1) // 2 if d < 5 else 2):
            pair = build_squeezed(U, d)
            counts = U.degree_counts() + (0,) * (d + 1)
            fb, fs = fhg_vectors(pair.ball), fhg_vectors(pair.sphere)
            assert fb.h == counts[: d + 2]
            k = U.max_deg
            assert fb.f[: d - k] == fs.f[: d - k]
            assert fs.h == fs.h[::-1]
            if k <= d // 2:
                assert fs.g == counts[: d // 2 + 1]


@pytest.mark.parametrize("d", [3, 4, 5])
def test_sphere_betti_formula_matches_hochster(d):
    for m in (1, 2, 3):
        if m + d + 1 > 9:
            continue
        for U in enumerate_shifted_order_ideals(m, d // 2):
            pair = build_squeezed(U, d)
            assert squeezed_sphere_betti(U, d) == betti_hochster(pair.sphere)


def test_I_of_U_strongly_stable_and_low_degree():
    for m in (1, 2, 3):
        for U in enumerate_shifted_order_ideals(m, 3 if m < 3 else 2):
            I = ideal_I_of_U(U)
            assert is_strongly_stable(I)
            assert I.max_degree <= U.max_deg + 1
