"""Unrestricted tableau counts: hook lengths vs brute-force enumeration.

When the level is at least the walk length the restriction is inert and
walk counts reduce to plain 3-row standard-tableau counts, with a
closed hook-length form.  A printed transcription of that closed form
circulates with typo'd variables; the audit below pins down where it
fails.
"""

import json

from anyondeg import (
    Shape3, Vertex, audit_published_formula, brute_force_count, degeneracy,
    hook_count, shape_for_vertex, unrestricted_count,
)

# Hook-length counts for a few shapes, with the brute-force oracle.
for rows in [(1, 1, 1), (2, 2, 2), (3, 3, 3), (4, 2, 1), (5, 3, 1)]:
    shape = Shape3(*rows)
    print(f"shape {rows}: hook = {hook_count(shape):>4}, "
          f"brute force = {brute_force_count(shape):>4}")

# Vertex <-> shape dictionary: endpoint (i, j) after n steps is the
# shape with row differences j (top) and i (middle).
print()
for n, v in [(3, Vertex(0, 0)), (5, Vertex(1, 0)), (12, Vertex(0, 0))]:
    shape = shape_for_vertex(n, v)
    print(f"n={n:>2}, endpoint {tuple(v)} -> shape {tuple(shape)}, "
          f"count {unrestricted_count(n, v)}")

# Saturation: at level >= n the lattice count equals the tableau count.
print()
n = 12
print(f"level {n} walk count at origin:", degeneracy(n, n))
print(f"unrestricted tableau count:     ",
      unrestricted_count(n, Vertex(0, 0)))

# Audit of the printed closed form: it agrees at the origin but fails
# off it; e.g. shape (1,1,0) has one tableau, the printed expression
# none.
print()
report = audit_published_formula(n_max=27)
print("origin rows all agree:", report["origin_all_agree"])
print("first disagreements:")
print(json.dumps(report["disagreements"][:3], indent=2))
