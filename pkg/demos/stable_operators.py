"""Shift operators on a strongly stable ideal.

alpha^a spreads each generator out along a shift sequence a; the Betti
numbers survive, and a generic initial ideal brings the original back.
"""

from squeeze import (
    MonomialIdeal,
    ShiftSequence,
    alpha_a,
    alpha_image_ordered,
    apply_operator_to_ideal,
    betti_eliahou_kervaire,
    betti_linear_quotients,
    gin_truncated,
    sigma_a,
)

I = MonomialIdeal(["x1^4", "x1^3*x2", "x1^3*x3", "x1^2*x2^2", "x1^2*x2*x3", "x1*x2^3", "x2^4"])
print("I =", I)
print("Eliahou-Kervaire table:", betti_eliahou_kervaire(I).by_homological_degree())

for a in (ShiftSequence.arithmetic(2), ShiftSequence((0, 1, 2), None)):
    J = apply_operator_to_ideal(I, lambda u: alpha_a(u, a))
    images, sizes = alpha_image_ordered(I, a)
    print(f"\na = {a}")
    print("  alpha^a(I) =", J)
    print("  linear-quotient table:", betti_linear_quotients(images, sizes).by_homological_degree())
    print("  gin(alpha^a(I)) == I:", gin_truncated(J, J.max_var, I.max_degree).ideal == I)

K = MonomialIdeal(["x1^4", "x1^3*x2", "x1^2*x2^2"])
print("\nsigma^(3,3,...) of", K, "=", apply_operator_to_ideal(K, lambda u: sigma_a(u, ShiftSequence.constant(3))))
