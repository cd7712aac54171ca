"""The named finite sets and bounded rigidity evidence.

The thirteen-curve set of the closed genus-3 surface is characterized curve
by curve: each member is the unique essential curve disjoint from a stated
handful of the others.  Locally injective simplicial maps of its flag
complex into a weight-truncated complex are enumerated and certified.
"""

from crosscap import Surface
from crosscap.complexes import (
    b30_curves,
    build_B30,
    build_X,
    build_complex,
    solve_unique_curve,
)
from crosscap.rigidity import rigidity_evidence

s = Surface.get(3, 0)
B = build_B30(s)
fc = build_complex(B)
print(f"B30: {fc.n_vertices} vertices, {len(fc.edges())} edges")

N = b30_curves(s)
out, certificate = solve_unique_curve(
    s, [N["a2"], N["a3"]], [N["a1"], N["a2"], N["a3"]],
    candidates=[N["a1"], N["d"]])
print(f"unique curve disjoint from a2, a3 (besides a1): "
      f"{out[0].name}, certificate {certificate}")

report = rigidity_evidence(B, bound=8, radius=2)
print("rigidity evidence:", report["counts"],
      f"({report['maps']} locally injective maps into a "
      f"{report['codomain_size']}-vertex complex)")

s41 = Surface.get(4, 1)
print(f"\n|X(4,1)| = {len(build_X(s41))} curves")
