"""The mapping class action: Dehn twists, crosscap slides and the nine-entry
table of the closed genus-3 surface."""

from crosscap import Surface, isotopic, twist, crosscap_slide
from crosscap.complexes import b30_curves

s = Surface.get(3, 0)
N = b30_curves(s)
c1, c2, w, j, a3 = N["c1"], N["c2"], N["w"], N["j"], N["a3"]

table = [
    ("t_c1(c1)", twist(c1, c1, 1), c1),
    ("t_c1(c2)", twist(c1, c2, 1), j),
    ("t_c1(w) ", twist(c1, w, 1), c2),
    ("t_c2(c1)", twist(c2, c1, 1), w),
    ("t_c2(c2)", twist(c2, c2, 1), c2),
    ("t_c2(j) ", twist(c2, j, 1), c1),
    ("y(c1)   ", crosscap_slide(a3, c2, c1), c1),
    ("y(c2)   ", crosscap_slide(a3, c2, c2), c2),
    ("y(w)    ", crosscap_slide(a3, c2, w), j),
]
for label, got, want in table:
    mark = "ok" if isotopic(got, want) else "MISMATCH"
    print(f"{label} = {want.name:3} [{mark}]")

# twisting walks curves arbitrarily far: the images of c2 under powers of
# t_c1 grow linearly in weight and intersection number
x = c2
for k in range(1, 4):
    x = twist(c1, x, 1)
    print(f"t_c1^{k}(c2): weight {x.weight}")
