"""Exterior algebraic shifting of a squeezed ball, and a formula for the result."""

from squeeze import (
    ShiftSequence,
    alpha_a,
    apply_operator_to_ideal,
    build_squeezed,
    exterior_gin,
    exterior_shifted_ball,
    ideal_I_of_U,
    is_shifted,
    stanley_reisner_ideal,
    validate_shifted_order_ideal,
)

U = validate_shifted_order_ideal(3, ["1", "x1", "x2", "x3", "x1*x3", "x2*x3", "x3^2"])
ball = build_squeezed(U, 5).ball
shifted = exterior_gin(ball)
print("shifted complex facets:", shifted.sorted_facets())
print("shifted:", is_shifted(shifted))
print("its face ideal:", stanley_reisner_ideal(shifted))
print("alpha of I(U): ", apply_operator_to_ideal(ideal_I_of_U(U), lambda u: alpha_a(u, ShiftSequence.arithmetic(1))))
print("facet formula gives the same complex:", exterior_shifted_ball(U, 5) == shifted)
print("shifting is idempotent:", exterior_gin(shifted) == shifted)
