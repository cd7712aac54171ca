"""The exhaustion sequence: generator images of the base rigid set.

E_1 is the thirteen-curve set; E_k adds every twist and slide image (and
preimage) of E_{k-1}.  The levels grow strictly and eventually meet every
bounded-weight class.
"""

from crosscap import Surface, enumerate_classes, isotopic
from crosscap.complexes import exhaustion, exhaustion_complex

s = Surface.get(3, 0)
for k in (1, 2):
    E = exhaustion(s, k)
    print(f"E{k}: {len(E)} classes, max weight "
          f"{max(c.weight for c in E)}")

small = enumerate_classes(s, 6)
covered = sum(1 for c in small
              if any(isotopic(c, x) for x in exhaustion(s, 2)))
print(f"classes of weight <= 6 covered by E2: {covered}/{len(small)}")

fc = exhaustion_complex(s, 2)
with open("exhaustion_E2.dot", "w") as fh:
    fh.write(fc.to_dot())
print("wrote exhaustion_E2.dot")
