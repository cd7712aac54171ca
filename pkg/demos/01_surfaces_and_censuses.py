"""Build the polygon models, enumerate small censuses and cut along curves.

The surface N_{g,n} is two (2g+2n)-gons glued along their e-edges, with each
s-circle closed up antipodally (a crosscap) and the z-circles left as
boundary.  Curves live on the cone triangulation as transverse diagrams.
"""

from crosscap import (
    Surface,
    core_curve,
    enumerate_classes,
    itinerary_curve,
)

# the four surfaces whose curve complexes are tiny and explicitly known
for g, n in ((1, 0), (1, 1), (1, 2), (2, 0)):
    s = Surface.get(g, n)
    cls = enumerate_classes(s, 8)
    kinds = ", ".join(f"{c.sidedness} (weight {c.weight})" for c in cls)
    print(f"{s.sig}: chi = {s.complex.euler_characteristic}, "
          f"{len(cls)} classes: {kinds}")

# cutting: the core of a crosscap on the closed genus-3 surface leaves a
# genus-2 piece with one boundary circle
s = Surface.get(3, 0)
a1 = core_curve(s, 1)
print(f"\n{s.sig}: cutting along {a1.name} gives", a1.cut_along())

# the distinguished 1-sided curve through all three crosscaps has an
# orientable complement (a one-holed torus)
l = itinerary_curve(s, ["s1", "s2", "s3", "e3"], name="l")
print(f"cutting along {l.name} gives", l.cut_along())
