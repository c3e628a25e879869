"""A walk through the explicit constructions.

For each construction we build a coloring, confirm it avoids the patterns it
is meant to avoid, and compare its largest two-colored clique with the
closed form it is supposed to attain. Run with ``python demos/constructions_tour.py``.
"""
from trichrome.catalog import FORMULAS
from trichrome.cliques import two_color_profile
from trichrome.constructions import SPECS, generate
from trichrome.core import find_forbidden

# construction id -> formula tag it should match or beat
TARGETS = {1: "ceil_sqrt", 12: "two_fifths_eps", 13: "two_ceil_fifth",
           14: "three_sevenths_eps1", 15: "half_ceil", 16: "half_ceil_plus_1"}

print("Small explicit constructions\n")
for cid, tag in TARGETS.items():
    fn, text = FORMULAS[tag]
    print(f"[{cid}] {SPECS[cid].name}  (avoids {', '.join(map(str, SPECS[cid].avoided))})")
    for n in (15, 22, 40, 77):
        c, spec = generate(cid, n)
        assert find_forbidden(c, spec.avoided) is None
        prof = two_color_profile(c)
        print(f"    n={n:3d}  S_rb={prof.s_rb:3d} S_ry={prof.s_ry:3d} S_by={prof.s_by:3d}"
              f"  h2={prof.h2:3d}  target {text} = {fn(n)}")
    print()

# the 2-blow-up picture: doubling every vertex of the cyclic K7 coloring
c, _ = generate(14, 14)
print("Cyclic K7 blown up to 14 vertices, color matrix:")
for i in range(c.n):
    print("   ", "".join("." if i == j else c.color(i, j).char for j in range(c.n)))
