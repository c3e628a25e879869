"""Exact small values by exhaustive search, next to the closed forms.

The last block shows the one family where the closed form and the search
disagree at small n, together with an extremal coloring for inspection.
"""
from trichrome.catalog import load_catalog
from trichrome.cliques import two_color_profile
from trichrome.core import PatternFamily
from trichrome.exact import exact_h2, f_exact, g_exact

print("family                 n:  " + "  ".join(f"{n:>4d}" for n in range(3, 8)))
for entry in load_catalog():
    if entry.kind != "exact":
        continue
    vals = []
    for n in range(3, 8):
        res = exact_h2(n, entry.family, budget=2_000_000)
        got = res.value if res.is_exact else f"{res.lower}-{res.upper}"
        want = entry.value(n)
        vals.append(f"{got!s:>4}" + ("" if want is None or got == want else "*"))
    print(f"{{{entry.family.spec()}}}".ljust(25) + "  ".join(vals))
print("(* marks a value differing from the tabulated closed form)\n")

print("f(n) and g(n) by graph enumeration:")
print("  f:", [f_exact(n).value for n in range(1, 8)])
print("  g:", [g_exact(n).value for n in range(1, 9)])

print("\nThe {rrr,bbb,rry} case at n = 5 and 7:")
for n in (5, 7):
    res = exact_h2(n, PatternFamily.parse("rrr,bbb,rry"))
    w = res.witness
    prof = two_color_profile(w)
    print(f"  n={n}: h2={res.value} (S_rb={prof.s_rb}, S_ry={prof.s_ry}, S_by={prof.s_by})")
    for i in range(n):
        print("     ", "".join("." if i == j else w.color(i, j).char for j in range(n)))
