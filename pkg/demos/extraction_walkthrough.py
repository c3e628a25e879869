"""Certified extraction of two-colored cliques.

Takes random avoiding colorings, hands them to the dispatcher, and shows the
clique it returns against the guarantee it certifies and the true h2.
"""
from trichrome.catalog import avoiding_corpus
from trichrome.cliques import h2_of_coloring
from trichrome.core import PatternFamily
from trichrome.extract import extract_dispatch, gallai_partition
from trichrome.constructions import generate

for spec in ("rrb,bby,yyr", "rrr,bbb,rry", "rrr,bby,yyb", "rrb,bbr,rby"):
    fam = PatternFamily.parse(spec)
    print(f"{{{spec}}}")
    for n, kind, c in avoiding_corpus(fam, 4, seed=3, n_range=(8, 14)):
        out = extract_dispatch(c, fam)
        colors = "".join(x.char for x in sorted(out.witness.colors_used))
        print(f"   n={n:2d} ({kind:8s}) via {out.lemma_id:18s} size {out.size}"
              f"  guarantee {out.guarantee}  h2 {h2_of_coloring(c)[0]}  colors {colors}")
    print()

c, _ = generate(16, 9)
bp = gallai_partition(c)
print("Gallai partition of the 9-vertex half/half construction:")
print("  ", bp.to_dict())
