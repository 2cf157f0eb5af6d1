"""Squeezing the octahedron: same f-vector, Betti numbers can only grow."""

from squeeze import U_set, betti_hochster, fhg_vectors, from_facets, gin_truncated, squeeze, stanley_reisner_ideal

octahedron = from_facets(6, [{a, b, c} for a in (1, 2) for b in (3, 4) for c in (5, 6)])
I = stanley_reisner_ideal(octahedron)
print("I =", I)
print("gin(I) up to degree 4 =", gin_truncated(I, 6, 4).ideal)
print("U =", U_set(octahedron, 3))

pair = squeeze(octahedron, 3)
print("\nSq facets:", pair.sphere.sorted_facets())
print("f-vectors:", fhg_vectors(octahedron).f, fhg_vectors(pair.sphere).f)

before, after = betti_hochster(octahedron), betti_hochster(pair.sphere)
print("\n(i, j)   octahedron  squeezed")
for key in sorted(set(before.entries) | set(after.entries)):
    print(f"{key}  {before[key]:>10}  {after[key]:>8}")
print("dominated:", before.dominated_by(after), " strictly:", before != after)
