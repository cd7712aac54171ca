"""Exact intersection numbers, pants decompositions and pentagons.

Intersection numbers come from overlaying transverse representatives and
removing bigons; the result is the minimal crossing count, an integer.
"""

from crosscap import Surface, core_curve, geometric_intersection, two_sided_chord
from crosscap.complexes import r_curve, w_curve
from crosscap.geometry import (
    intersection_matrix,
    is_top_pants_decomposition,
    verify_pentagon,
)

s = Surface.get(4, 1)

# the companion curve w2 meets b_{1,3} and b_{2,5} twice and misses the rest
w2 = w_curve(s, 2)
for name in ("b1,3", "b2,5", "b3,5"):
    i, j = (int(x) for x in name[1:].split(","))
    val = geometric_intersection(w2, two_sided_chord(s, i, j))
    print(f"i(w2, {name}) = {val}")

# a maximal curve system: four cores and two chord curves cut the surface
# into pairs of pants
P = [core_curve(s, i) for i in range(1, 5)]
P += [two_sided_chord(s, 1, 3), two_sided_chord(s, 3, 5)]
ok, certificate = is_top_pants_decomposition(P, bound=8)
print("\npants system P maximal:", ok, "-", certificate[0])

# five curves whose disjointness graph is exactly a 5-cycle
pent = [two_sided_chord(s, 3, 5), two_sided_chord(s, 1, 3),
        two_sided_chord(s, 1, 4), r_curve(s, 3), w_curve(s, 2)]
print("pentagon verified:", verify_pentagon(*pent))

print("\nintersection matrix of the pentagon curves:")
for row in intersection_matrix(pent):
    print("  ", row)
