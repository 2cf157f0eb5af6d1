"""A squeezed 5-ball, its boundary sphere and the Betti table of the sphere."""

from squeeze import (
    U_set,
    betti_hochster,
    build_squeezed,
    fhg_vectors,
    gin_truncated,
    ideal_I_of_U,
    lefschetz_checks,
    squeezed_sphere_betti,
    stanley_reisner_ideal,
    validate_shifted_order_ideal,
)

U = validate_shifted_order_ideal(3, ["1", "x1", "x2", "x3", "x1*x3", "x2*x3", "x3^2"])
pair = build_squeezed(U, 5)
print("U =", U, "  degree counts", U.degree_counts())
print("n =", pair.n)
for facet in pair.ball.sorted_facets():
    print("  facet", facet)

print("\nI(B) =", stanley_reisner_ideal(pair.ball))
print("I(S) =", stanley_reisner_ideal(pair.sphere))
print("ball h-vector  ", fhg_vectors(pair.ball).h)
print("sphere h-vector", fhg_vectors(pair.sphere).h, " g =", fhg_vectors(pair.sphere).g)

table = squeezed_sphere_betti(U, 5)
print("\nresolution of R/I(S), closed formula:")
for i, row in table.to_quotient().by_homological_degree().items():
    print(f"  {i}: " + "  ".join(f"R(-{j})^{b}" if j else f"R^{b}" for j, b in sorted(row.items())))
print("agrees with Hochster's formula:", table == betti_hochster(pair.sphere))

# the generic initial ideal of the ball is I(U), and U is recovered from the sphere
print("\ngin(I(B)) =", gin_truncated(stanley_reisner_ideal(pair.ball), pair.n, 4).ideal)
print("I(U)      =", ideal_I_of_U(U))
print("U(S) == U:", U_set(pair.sphere, 5) == U, " weak Lefschetz:", lefschetz_checks(pair.sphere, 5).weak)
