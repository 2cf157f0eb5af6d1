import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

import squeeze.gin as gin_mod
from squeeze import (
    GenericMatrix,
    GinError,
    L_set,
    Monomial,
    MonomialIdeal,
    U_set,
    betti_hochster,
    build_squeezed,
    cone,
    enumerate_shifted_order_ideals,
    exterior_gin,
    exterior_shifted_ball,
    fhg_vectors,
    from_facets,
    generic_section,
    gin_truncated,
    hilbert_function_quotient,
    ideal_I_of_U,
    is_shifted,
    lefschetz_checks,
    squeeze,
    squeezed_sphere_betti,
    stanley_reisner_ideal,
    validate_shifted_order_ideal,
)
from squeeze.simplicial import SizeGuardError

from conftest import strongly_stable_ideals

M = Monomial.parse
I_ = lambda *g: MonomialIdeal(g)
OCTA_GIN = I_("x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^4")
# suspension of a pentagon: a 2-sphere on 7 vertices
PENTAGON = [{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}]
SUSPENSION = [e | {v} for e in PENTAGON for v in (6, 7)]


def test_generic_matrix_is_reproducible_and_invertible():
    a, b = GenericMatrix.draw(5, 7), GenericMatrix.draw(5, 7)
    assert a == b and a != GenericMatrix.draw(5, 8)
    assert all(-999 <= x <= 999 for row in a.entries for x in row)


def test_octahedron_gin(octahedron):
    I = stanley_reisner_ideal(octahedron)
    q = gin_truncated(I, 6, 4)
    assert q.ideal == OCTA_GIN
    assert q.seeds_agreeing == 2 and q.to_json()["agrees"]
    assert gin_truncated(I, 6, 4, seed=5, field="p").ideal == OCTA_GIN


def test_small_polynomial_inputs():
    assert gin_truncated([{M("x1"): 1, M("x2"): 3}], 2, 2).ideal == I_("x1")
    assert gin_truncated([{M("x1^2"): 1, M("x2^2"): 1}], 2, 3).ideal == I_("x1^2")
    # a complete intersection of two quadrics in three variables
    ci = [{M("x1^2"): 1, M("x2*x3"): 1}, {M("x2^2"): 1, M("x1*x3"): -1}]
    assert gin_truncated(ci, 3, 4).ideal == I_("x1^2", "x1*x2", "x2^3")
    with pytest.raises(ValueError):
        gin_truncated([{M("x1"): 1, M("x2^2"): 1}], 2, 2)


def test_restricted_gin_matches_full(U5):
    I = stanley_reisner_ideal(build_squeezed(U5, 4).sphere)
    full = gin_truncated(I, 8, 4).ideal
    for k in (2, 3, 4):
        assert gin_truncated(I, 8, 4, variables=k).ideal == full.restrict(k)


@settings(max_examples=15, deadline=None)
@given(strongly_stable_ideals(n=3, maxdeg=3))
def test_gin_fixes_strongly_stable_ideals(I):
    assert gin_truncated(I, 3, 3).ideal == I


@settings(max_examples=10, deadline=None)
@given(st.lists(st.sets(st.integers(1, 5), min_size=2, max_size=3), min_size=1, max_size=4))
def test_gin_preserves_hilbert_function(sets):
    I = MonomialIdeal([Monomial.from_set(s) for s in sets])
    g = gin_truncated(I, 5, 4).ideal
    assert hilbert_function_quotient(I, 5, 4) == hilbert_function_quotient(g, 5, 4)
    assert gin_truncated(g, 5, 4).ideal == g


def test_gin_is_monotone():
    J = I_("x1*x2", "x3*x4")
    I = J + I_("x2*x3", "x1*x4*x5")
    gj, gi = gin_truncated(J, 5, 4).ideal, gin_truncated(I, 5, 4).ideal
    assert gj.issubset(gi)


def test_disagreeing_seeds_raise(monkeypatch):
    real = gin_mod._initial_monomials

    def flaky(polys, mono, n, keep, D, phi, field):
        out = real(polys, mono, n, keep, D, phi, field)
        return out + I_("x%d" % n) if phi.seed % 2 else out

    monkeypatch.setattr(gin_mod, "_initial_monomials", flaky)
    with pytest.raises(GinError, match="non-generic matrices suspected"):
        gin_truncated(I_("x1*x2"), 3, 2)


def test_L_and_U_sets(octahedron, U5):
    L = L_set(octahedron, 3)
    assert [len(L[i]) for i in range(5)] == [1, 3, 3, 1, 0]
    assert U_set(octahedron, 3).monomials == {M("1"), M("x1"), M("x2")}
    sphere = build_squeezed(U5, 5).sphere
    L = L_set(sphere, 5)
    assert tuple(len(L[i]) for i in range(6)) == fhg_vectors(sphere).h == (1, 4, 7, 7, 4, 1)
    assert U_set(sphere, 5) == U5


def test_simplex_boundary_L_set():
    sphere = from_facets(4, [{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}])
    L = L_set(sphere, 3)
    assert [L[i] for i in range(5)] == [[M("1")], [M("x1")], [M("x1^2")], [M("x1^3")], []]


def test_lefschetz(octahedron, U5):
    rep = lefschetz_checks(octahedron, 3)
    assert rep.weak and rep.strong and rep.h == (1, 3, 3, 1)
    assert lefschetz_checks(build_squeezed(U5, 5).sphere, 5).weak


def test_max_of_gin_is_n_minus_d(octahedron):
    g = gin_truncated(stanley_reisner_ideal(octahedron), 6, 4).ideal
    assert g.max_var == 3
    sus = from_facets(7, SUSPENSION)
    g = gin_truncated(stanley_reisner_ideal(sus), 7, 4).ideal
    assert g.max_var == 4


def test_U_set_rejects_non_spheres():
    # the complete graph K5 has h = (1, 3, 6), too big for any 1-sphere
    gamma = from_facets(5, [set(c) for c in itertools.combinations(range(1, 6), 2)])
    with pytest.raises(ValueError, match="weak Lefschetz"):
        U_set(gamma, 2)
    assert not lefschetz_checks(gamma, 2).weak


def test_squeeze(octahedron):
    pair = squeeze(octahedron, 3)
    assert fhg_vectors(pair.sphere).f == fhg_vectors(octahedron).f
    assert squeezed_sphere_betti(pair.U, 3) == betti_hochster(pair.sphere)
    again = squeeze(pair.sphere, 3)
    assert again.sphere == pair.sphere
    sus = from_facets(7, SUSPENSION)
    p2 = squeeze(sus, 3)
    assert fhg_vectors(p2.sphere).f == fhg_vectors(sus).f
    assert betti_hochster(sus).dominated_by(betti_hochster(p2.sphere))


def test_squeezed_sphere_is_its_own_squeeze(U5):
    pair = build_squeezed(U5, 5)
    assert squeeze(pair.sphere, 5).sphere == pair.sphere


def test_generic_section(octahedron):
    I = stanley_reisner_ideal(octahedron)
    section = generic_section(I, 6, 1)
    assert all(len(u.exps) <= 5 for p in section for u in p)
    assert all(isinstance(c, Fraction) for p in section for c in p.values())
    assert gin_truncated(section, 5, 4).ideal == gin_truncated(I, 6, 4).ideal.restrict(5)
    two = generic_section(I, 6, 2, seed=3)
    assert gin_truncated(two, 4, 4).ideal == OCTA_GIN.restrict(4)
    line = generic_section(I, 6, 5)
    assert all(len(u.exps) <= 1 for p in line for u in p)
    with pytest.raises(ValueError):
        generic_section(I, 6, 0)


def test_exterior_gin(U5):
    ball = build_squeezed(U5, 5).ball
    shifted = exterior_gin(ball)
    assert stanley_reisner_ideal(shifted) == I_("x1*x2", "x1*x3", "x2*x3", "x1*x4*x5", "x2*x4*x5", "x3*x4*x5")
    assert shifted == exterior_shifted_ball(U5, 5)
    assert exterior_gin(shifted) == shifted
    with pytest.raises(SizeGuardError):
        exterior_gin(from_facets(13, [set(range(1, 14))]))


def test_exterior_gin_of_octahedron(octahedron):
    shifted = exterior_gin(octahedron, field="p")
    assert is_shifted(shifted)
    assert fhg_vectors(shifted).f == fhg_vectors(octahedron).f
    assert exterior_gin(octahedron, seed=11) == shifted


def test_exterior_gin_commutes_with_cones(octahedron):
    assert exterior_gin(cone(octahedron, 7)) == cone(exterior_gin(octahedron), 7)


def test_exterior_ball_formula_on_sweep():
    for U in enumerate_shifted_order_ideals(2, 2):
        for d in (3, 4):
            pair = build_squeezed(U, d)
            ext = exterior_shifted_ball(U, d)
            alpha = MonomialIdeal([Monomial.from_indices(i + k for k, i in enumerate(u.indices)) for u in ideal_I_of_U(U).generators])
            assert stanley_reisner_ideal(ext) == alpha
            assert exterior_gin(pair.ball) == ext
