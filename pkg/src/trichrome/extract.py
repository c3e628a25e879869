"""Witness extractors: constructive lower-bound arguments replayed on a coloring.

Each extractor checks the structure its argument relies on (a red matching,
a bipartite red graph, a C7 blow-up, ...), builds the candidate vertex sets
the argument names, validates them as two-colored cliques and returns the
largest. A structural check that fails means the input was not avoiding and
raises :class:`PreconditionError` naming the failed step; an outcome below
the promised size raises :class:`ExtractionError`.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field

from .cliques import max_clique, two_color_profile
from .core import (ALL_PERMUTATIONS, COLORS, CliqueWitness, Color, ColorPermutation, EdgeColoring,
                   PatternFamily, PreconditionError, SimpleGraph, TrichromeError,
                   apply_color_permutation, bits, color_class, find_forbidden, require_avoiding,
                   to_mask)
from .patterns import canonical_family

R, B, Y = Color.R, Color.B, Color.Y

__all__ = [
    "ExtractionError", "ExtractionOutcome", "BlobPartition", "RedCliquePartition",
    "extract_sqrt", "extract_red_matching", "extract_bipartite_red", "extract_disjoint_palettes",
    "extract_degree2", "extract_majority_neighborhood", "extract_c7_structure", "extract_mono_split",
    "blob_decomposition", "gallai_partition", "red_clique_partition", "extract_dispatch",
    "degree2_bound", "EXTRACTORS", "ROUTES", "route_for",
]


class ExtractionError(TrichromeError):
    """An extractor produced less than it promised (a bug, never expected)."""


@dataclass(frozen=True)
class ExtractionOutcome:
    witness: CliqueWitness
    guarantee: int
    lemma_id: str
    n: int
    family: PatternFamily | None = None
    permutation: ColorPermutation | None = None
    notes: tuple = ()

    @property
    def size(self) -> int:
        return self.witness.size

    def to_dict(self) -> dict:
        d = {"lemma_id": self.lemma_id, "n": self.n, "guarantee": self.guarantee,
             "size": self.size, "witness": list(self.witness.vertices),
             "colors_used": "".join(x.char for x in sorted(self.witness.colors_used))}
        if self.family is not None:
            d["family"] = self.family.spec()
        if self.permutation is not None:
            d["permutation"] = str(self.permutation)
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def _fam(s: str) -> PatternFamily:
    return PatternFamily.parse(s)


def _best(c: EdgeColoring, candidates, guarantee: int, lemma_id: str, notes=()) -> ExtractionOutcome:
    """Largest candidate spanning at most two colors; ties go to the smaller vertex tuple."""
    best = None
    for vs in candidates:
        vs = tuple(sorted(set(vs)))
        if not vs or len(c.colors_on(vs)) > 2:
            continue
        if best is None or len(vs) > len(best) or (len(vs) == len(best) and vs < best):
            best = vs
    if best is None:
        best = (0,)
    wit = CliqueWitness.of(c, best)
    wit.validate(c)
    if wit.size < guarantee:
        raise ExtractionError(f"{lemma_id}: witness of size {wit.size} below guarantee {guarantee}")
    return ExtractionOutcome(wit, guarantee, lemma_id, c.n, notes=tuple(notes))


def _sides(masks_row: tuple, n: int, allowed: int | None = None):
    """Two-color each component of a graph; returns (components, None) or (None, odd cycle).

    Each component is reported as ``(side0, side1)`` bitsets where ``side0``
    holds the smallest vertex.
    """
    allowed = (1 << n) - 1 if allowed is None else allowed
    side = {}
    parent = {}
    comps = []
    for s in bits(allowed):
        if s in side:
            continue
        side[s], parent[s] = 0, None
        q = deque([s])
        parts = [0, 0]
        while q:
            u = q.popleft()
            parts[side[u]] |= 1 << u
            for w in bits(masks_row[u] & allowed):
                if w not in side:
                    side[w], parent[w] = 1 - side[u], u
                    q.append(w)
                elif side[w] == side[u]:
                    return None, _odd_cycle(parent, u, w)
        comps.append((parts[0], parts[1]))
    return comps, None


def _odd_cycle(parent: dict, u: int, w: int) -> tuple:
    pu, pw = [u], [w]
    while parent[pu[-1]] is not None:
        pu.append(parent[pu[-1]])
    while parent[pw[-1]] is not None:
        pw.append(parent[pw[-1]])
    common = set(pu) & set(pw)
    lca = next(x for x in pu if x in common)
    a = pu[:pu.index(lca) + 1]
    b = pw[:pw.index(lca)]
    return tuple(a + b[::-1])


def _larger_sides(comps) -> int:
    out = 0
    for s0, s1 in comps:
        out |= s0 if s0.bit_count() >= s1.bit_count() else s1
    return out


# ------------------------------------------------------------------ {rrb}

def extract_sqrt(c: EdgeColoring) -> ExtractionOutcome:
    """Two-colored clique of size at least ceil(sqrt(n)) in an {rrb}-avoiding coloring."""
    require_avoiding(c, _fam("rrb"))
    n = c.n
    g = math.ceil(math.sqrt(n))
    k = math.isqrt(n)
    red = c.masks[R]
    degs = [red[v].bit_count() for v in range(n)]
    top = max(range(n), key=lambda v: (degs[v], -v))
    if degs[top] >= k:
        # the red neighbourhood spans no blue edge
        return _best(c, [[top] + bits(red[top])], g, "sqrt:red-star")
    # greedy proper coloring of the red graph, high degree first
    order = sorted(range(n), key=lambda v: (-degs[v], v))
    classes: list[int] = []
    for v in order:
        for idx, cl in enumerate(classes):
            if not red[v] & cl:
                classes[idx] |= 1 << v
                break
        else:
            classes.append(1 << v)
    if len(classes) > max(k, 1):
        raise PreconditionError("greedy coloring needed more than floor(sqrt n) classes", len(classes))
    return _best(c, [bits(cl) for cl in classes], g, "sqrt:red-independent")


# ------------------------------------------------------------------ {rrr,rrb,rry}

def extract_red_matching(c: EdgeColoring, family: PatternFamily | None = None) -> ExtractionOutcome:
    """One endpoint of every red edge plus all red-isolated vertices."""
    require_avoiding(c, family or _fam("rrr,rrb,rry"))
    n = c.n
    red = c.masks[R]
    for v in range(n):
        if red[v].bit_count() > 1:
            a, b = bits(red[v])[:2]
            raise PreconditionError(f"red edges {v}-{a} and {v}-{b} share vertex {v}; red graph is not a matching",
                                    ((v, a), (v, b)))
    keep = [v for v in range(n) if not red[v] or v < bits(red[v])[0]]
    return _best(c, [keep], (n + 1) // 2, "red-matching")


# ------------------------------------------------------------------ bipartite red graph

def extract_bipartite_red(c: EdgeColoring, family: PatternFamily) -> ExtractionOutcome:
    """For {rrb,bbr,yyr} and {rrr,bbr,yyr}: the red graph is bipartite (or, for the
    former, a red triangle rules out blue altogether)."""
    fams = (_fam("rrb,bbr,yyr"), _fam("rrr,bbr,yyr"))
    if family not in fams:
        raise ValueError(f"extract_bipartite_red handles {fams[0]} and {fams[1]}, not {family}")
    require_avoiding(c, family)
    n = c.n
    half = (n + 1) // 2
    if family == fams[0] and c.n >= 3:
        tri = _find_mono_triangle(c, R)
        if tri is not None:
            if any(c.masks[B]):
                raise PreconditionError("red triangle present together with a blue edge", tri)
            return _best(c, [range(n)], n, "bipartite-red:red-triangle")
    comps, cyc = _sides(c.masks[R], n)
    if cyc is not None:
        raise PreconditionError(f"odd red cycle {cyc}", cyc)
    return _best(c, [bits(_larger_sides(comps))], half, "bipartite-red:bipartition")


def _find_mono_triangle(c: EdgeColoring, col: Color):
    m = c.masks[col]
    for u in range(c.n):
        for v in bits(m[u] >> (u + 1)):
            v += u + 1
            common = m[u] & m[v]
            if common:
                return (u, v, (common & -common).bit_length() - 1)
    return None


# ------------------------------------------------------------------ {rrb,bbr,rby}

def extract_disjoint_palettes(c: EdgeColoring) -> ExtractionOutcome:
    """No vertex sees both red and blue; the larger side plus one more vertex."""
    require_avoiding(c, _fam("rrb,bbr,rby"))
    n = c.n
    red, blue = c.masks[R], c.masks[B]
    for v in range(n):
        if red[v] and blue[v]:
            raise PreconditionError(f"vertex {v} has both red and blue edges", v)
    no_red = [v for v in range(n) if not red[v]]
    no_blue = [v for v in range(n) if not blue[v]]
    cands = []
    for side in (no_red, no_blue):
        rest = [v for v in range(n) if v not in set(side)]
        cands.append(side + rest[:1])
    g = min(n, (n + 1) // 2 + 1)
    return _best(c, cands, g, "disjoint-palettes")


# ------------------------------------------------------------------ {rrr,bbb,rry}

def degree2_bound(n: int) -> int:
    """Least independence number of an n-vertex graph whose components are paths
    or cycles of length at least 4; the size the degree argument certifies."""
    if n <= 0:
        return 0
    best = [0] + [None] * n
    for m in range(1, n + 1):
        opts = []
        for p in range(1, m + 1):
            opts.append(best[m - p] + (p + 1) // 2)      # path on p vertices
            if p >= 4:
                opts.append(best[m - p] + p // 2)        # cycle on p vertices
        best[m] = min(opts)
    return best[n]


def eps5(n: int) -> int:
    return (0, 1, 2, 2, 2)[n % 5]


def extract_degree2(c: EdgeColoring) -> ExtractionOutcome:
    """Red degree is at most 2; a maximum red-independent set, component by component."""
    require_avoiding(c, _fam("rrr,bbb,rry"))
    n = c.n
    red = c.masks[R]
    for v in range(n):
        if red[v].bit_count() > 2:
            raise PreconditionError(f"vertex {v} has red degree {red[v].bit_count()} > 2", v)
    tri = _find_mono_triangle(c, R)
    if tri is not None:
        raise PreconditionError(f"red triangle {tri}", tri)
    chosen = []
    seen = 0
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = _component(red, s)
        seen |= comp
        vs = bits(comp)
        ends = [v for v in vs if red[v].bit_count() < 2]
        # walk the path or cycle from an endpoint (or from its least vertex)
        start = min(ends) if ends else vs[0]
        walk, prev, cur = [start], None, start
        while True:
            nxt = [w for w in bits(red[cur]) if w != prev and w != start]
            if not nxt or len(walk) == len(vs):
                break
            prev, cur = cur, min(nxt)
            walk.append(cur)
        chosen.extend(walk[0::2] if ends else walk[0:len(walk) - 1:2])
    notes = []
    bound = degree2_bound(n)
    stated = 2 * (n // 5) + eps5(n)
    if n >= 3 and stated != bound:
        notes.append(f"closed form 2*floor(n/5)+eps(n) = {stated}; the degree argument certifies {bound}")
    return _best(c, [chosen], min(n, bound) if n >= 3 else n, "degree2", notes)


def _component(adj, s: int) -> int:
    comp = frontier = 1 << s
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= adj[v]
        frontier = reach & ~comp
        comp |= frontier
    return comp


# ------------------------------------------------------------------ majority neighbourhoods

def _majorities(family: PatternFamily):
    out = []
    for p in family:
        if p.is_rainbow:
            return None
        out.append(p.majority)
    return out if len(out) == 3 and len(set(out)) == 3 else None


def extract_majority_neighborhood(c: EdgeColoring, family: PatternFamily) -> ExtractionOutcome:
    """Largest color neighbourhood of vertex 0 (three distinct majority colors).

    For {rrr,bby,yyb} the full neighbourhood case analysis is replayed and the
    guarantee rises to ceil(n/2).
    """
    if _majorities(family) is None:
        raise ValueError(f"{family} does not have three patterns with distinct majority colors")
    require_avoiding(c, family)
    n = c.n
    if n == 1:
        return _best(c, [[0]], 1, "majority")
    nbs = [bits(c.masks[x][0]) for x in COLORS]
    if family == _fam("rrr,bby,yyb"):
        return _best(c, _rrr_bby_yyb_candidates(c), (n + 1) // 2, "majority:rrr-bby-yyb")
    for x, s in zip(COLORS, nbs):
        if s and len(c.colors_on(s)) > 2:
            hit = find_forbidden(c.induced([0] + s), family)
            raise PreconditionError(f"{x.char}-neighbourhood of vertex 0 spans three colors", hit)
    return _best(c, nbs, math.ceil((n - 1) / 3), "majority")


def _rrr_bby_yyb_candidates(c: EdgeColoring) -> list:
    n = c.n
    v = 0
    out = []
    # b<->y fixes the family; running both frames covers "N_r is blue or yellow"
    for frame in (None, ColorPermutation.swap(B, Y)):
        cc = c if frame is None else apply_color_permutation(c, frame)
        m = cc.masks
        Nr, Nb, Ny = (bits(m[x][v]) for x in (R, B, Y))
        out += [Nr + [v], Nb + [v], Ny + [v]]
        for w in Nr:
            if all(cc.color(w, u) == Y for u in Ny):
                rest = [u for u in Nr if u != w]
                out += [rest + Nb + [v], [w, v] + Ny]
        out += [Nr + Nb + [v], Ny + [v]]
    return out


# ------------------------------------------------------------------ {rrr,bbr,yyb}

def eps7(n: int) -> int:
    return 1 if n % 7 == 2 else 0


def extract_c7_structure(c: EdgeColoring) -> ExtractionOutcome:
    """Blue clique split, blue bipartition, or a verified blow-up of the cyclic K7."""
    require_avoiding(c, _fam("rrr,bbr,yyb"))
    n = c.n
    g = math.ceil(3 * n / 7) + eps7(n) if n >= 3 else n
    blue = c.masks[B]
    bg = SimpleGraph(n, blue)
    Bq = max_clique(bg)
    if len(Bq) >= 3:
        Bm = to_mask(Bq)
        A = [x for x in range(n) if not Bm >> x & 1 and not c.masks[R][x] & Bm]
        O = [x for x in range(n) if not Bm >> x & 1 and c.masks[R][x] & Bm]
        return _best(c, [list(Bq) + A, O], g, "c7:blue-clique")
    comps, _ = _sides(blue, n)
    if comps is not None:
        return _best(c, [bits(_larger_sides(comps))], g, "c7:blue-bipartite")
    cyc = _shortest_odd_cycle(blue, n)
    if len(cyc) != 7:
        raise PreconditionError(f"shortest odd blue cycle has length {len(cyc)}, expected 7", cyc)
    parts = _mimicry_parts(c, cyc)
    U = [parts[i] + parts[(i + 1) % 7] + parts[(i + 2) % 7] for i in range(7)]
    W = [parts[i] + parts[(i + 2) % 7] + parts[(i + 4) % 7] for i in range(7)]
    return _best(c, U + W, g, "c7:blow-up")


_CYC_COLOR = {1: B, 2: Y, 3: R}


def _mimicry_parts(c: EdgeColoring, cyc: tuple) -> list:
    """Assign every vertex to the cycle vertex it copies and verify the blow-up."""
    n = c.n
    pos = {v: i for i, v in enumerate(cyc)}
    part_of = {}
    for x in range(n):
        if x in pos:
            part_of[x] = pos[x]
            continue
        hits = sorted(pos[v] for v in cyc if c.color(x, v) == B)
        match = [i for i in range(7) if sorted(((i - 1) % 7, (i + 1) % 7)) == hits]
        if not match:
            raise PreconditionError(f"vertex {x} sends blue edges to cycle positions {hits}; "
                                    "it mimics no cycle vertex", x)
        part_of[x] = match[0]
    for x in range(n):
        for z in range(x + 1, n):
            d = (part_of[x] - part_of[z]) % 7
            want = Y if d == 0 else _CYC_COLOR[min(d, 7 - d)]
            if c.color(x, z) != want:
                raise PreconditionError(f"edge {x}-{z} breaks the C7 blow-up (parts {part_of[x]}, "
                                        f"{part_of[z]})", (x, z))
    parts = [[] for _ in range(7)]
    for x in range(n):
        parts[part_of[x]].append(x)
    return parts


def _shortest_odd_cycle(adj, n: int) -> tuple:
    best = None
    for s in range(n):
        dist, parent = {s: 0}, {s: None}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in bits(adj[u]):
                if w not in dist:
                    dist[w], parent[w] = dist[u] + 1, u
                    q.append(w)
                elif dist[w] == dist[u] and u < w:
                    L = 2 * dist[u] + 1
                    if best is None or L < len(best):
                        cyc = _odd_cycle(parent, u, w)
                        if len(set(cyc)) == len(cyc) == L:
                            best = cyc
    if best is None:
        raise PreconditionError("no odd cycle found in a non-bipartite graph")
    return best


# ------------------------------------------------------------------ {rrb,bby,yyr}

def extract_mono_split(c: EdgeColoring) -> ExtractionOutcome:
    """Mono-clique split, the cyclic K7 at n = 7, or a bipartite red graph for n <= 6."""
    require_avoiding(c, _fam("rrb,bby,yyr"))
    n = c.n
    g = 3 if n == 7 else (n + 1) // 2
    cands = []
    for z in COLORS:
        if _find_mono_triangle(c, z) is None:
            continue
        # r -> b -> y maps the family to itself, so z plays the part of red
        zb, zy = Color((z + 1) % 3), Color((z + 2) % 3)
        Rq = max_clique(SimpleGraph(n, c.masks[z]))
        Rm = to_mask(Rq)
        O, P = [], []
        for x in range(n):
            if Rm >> x & 1:
                continue
            if c.masks[zb][x] & Rm:
                if c.masks[z][x] & Rm:
                    raise PreconditionError(f"vertex {x} sends both {z.char} and {zb.char} edges "
                                            "to the monochromatic clique", x)
                P.append(x)
            else:
                O.append(x)
        cands += [P, list(Rq) + O]
    if cands:
        return _best(c, cands, g, "mono-split:mono-clique")
    if n > 7:
        raise PreconditionError("no monochromatic triangle with n > 7")
    if n == 7:
        tri = next(t for t in itertools.combinations(range(7), 3) if len(c.colors_on(t)) <= 2)
        return _best(c, [tri], 3, "mono-split:cyclic-k7")
    comps, cyc = _sides(c.masks[R], n)
    if cyc is not None:
        raise PreconditionError(f"odd red cycle {cyc} without a monochromatic triangle", cyc)
    return _best(c, [bits(_larger_sides(comps))], g, "mono-split:bipartite-red")


# ------------------------------------------------------------------ decompositions

@dataclass(frozen=True)
class BlobPartition:
    """Vertex partition whose crossing edges are monochromatic per pair of parts."""

    parts: tuple
    between_colors: dict = field(compare=False)
    level: str
    notes: tuple = ()

    def crossing_colors(self) -> frozenset:
        return frozenset(self.between_colors.values())

    def to_dict(self) -> dict:
        return {"level": self.level, "parts": [list(p) for p in self.parts],
                "between_colors": {f"{i},{j}": col.char for (i, j), col in sorted(self.between_colors.items())},
                "notes": list(self.notes)}


def _between(c: EdgeColoring, parts) -> dict:
    out = {}
    for i, j in itertools.combinations(range(len(parts)), 2):
        cols = {c.color(a, b) for a in parts[i] for b in parts[j]}
        if len(cols) != 1:
            a, b = parts[i][0], parts[j][0]
            raise PreconditionError(f"edges between parts {i} and {j} use {len(cols)} colors", (i, j))
        out[(i, j)] = cols.pop()
    return out


def _require_gallai(c: EdgeColoring):
    hit = find_forbidden(c, _fam("rby"))
    if hit is not None:
        raise PreconditionError(f"rainbow triangle {hit[1]}", hit[1])


def blob_decomposition(c: EdgeColoring) -> BlobPartition:
    """Red components ("blobs"); crossings are monochromatic blue or yellow."""
    _require_gallai(c)
    red = c.masks[R]
    parts, seen = [], 0
    for s in range(c.n):
        if not seen >> s & 1:
            comp = _component(red, s)
            seen |= comp
            parts.append(tuple(bits(comp)))
    between = _between(c, parts)
    notes = ("single red component",) if len(parts) == 1 else ()
    return BlobPartition(tuple(parts), between, "blob", notes)


def gallai_partition(c: EdgeColoring) -> BlobPartition:
    """A partition into at least two parts with monochromatic crossings in at most two colors.

    For each color z in turn: if the z-graph is disconnected its components
    work. Inside a z-component any vertex outside sees a single color (two
    colors on a z-edge would close a rainbow triangle), so crossings are
    monochromatic, and none of them is z. Some color graph is always
    disconnected in a rainbow-free coloring, so the fallback (exhaustive over
    set partitions, n <= 8) is only a safety net.
    """
    if c.n < 2:
        raise ValueError("a Gallai partition needs at least two vertices")
    _require_gallai(c)
    best = None
    for z in COLORS:
        adj = c.masks[z]
        comp = _component(adj, 0)
        if comp == (1 << c.n) - 1:
            continue
        parts, seen = [], 0
        for s in range(c.n):
            if not seen >> s & 1:
                cm = _component(adj, s)
                seen |= cm
                parts.append(tuple(bits(cm)))
        parts = _coarsen(c, parts)
        if best is None or len(parts) < len(best[1]):
            best = (z, parts)
    if best is not None:
        z, parts = best
        out = BlobPartition(tuple(parts), _between(c, parts), "sub-blob",
                            (f"merged components of the {z.char} graph",))
        _check_gallai(out, c.n)
        return out
    if c.n <= 8:
        for parts in _set_partitions(list(range(c.n))):
            if len(parts) < 2:
                continue
            try:
                bp = BlobPartition(tuple(parts), _between(c, parts), "sub-blob", ("exhaustive search",))
            except PreconditionError:
                continue
            if len(bp.crossing_colors()) <= 2:
                return bp
    raise TrichromeError(f"no Gallai partition found for n={c.n}; every color graph is connected")


def _coarsen(c: EdgeColoring, parts: list) -> list:
    """Merge parts that see every other part in the same color, while two parts remain."""
    parts = [tuple(p) for p in parts]
    while len(parts) > 2:
        k = len(parts)
        q = [[None if i == j else c.color(parts[i][0], parts[j][0]) for j in range(k)]
             for i in range(k)]
        pair = next(((i, j) for i, j in itertools.combinations(range(k), 2)
                     if all(q[i][l] == q[j][l] for l in range(k) if l not in (i, j))), None)
        if pair is None:
            break
        i, j = pair
        merged = tuple(sorted(parts[i] + parts[j]))
        parts = [p for t, p in enumerate(parts) if t not in (i, j)] + [merged]
        parts.sort()
    return parts


def _check_gallai(bp: BlobPartition, n: int):
    assert sorted(v for p in bp.parts for v in p) == list(range(n))
    assert len(bp.parts) >= 2 and len(bp.crossing_colors()) <= 2


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [tuple(sorted((first,) + sub[i]))] + sub[i + 1:]
        yield [(first,)] + sub


@dataclass(frozen=True)
class RedCliquePartition:
    """Greedy partition into maximum red cliques A_1, A_2, ... with a type per clique.

    Type I cliques send only blue or yellow to the others, Type II only red or
    yellow.
    """

    parts: tuple
    types: tuple
    between_colors: dict = field(compare=False)

    def to_dict(self) -> dict:
        return {"parts": [list(p) for p in self.parts], "types": list(self.types),
                "between_colors": {f"{i},{j}": "".join(sorted(x.char for x in cols))
                                   for (i, j), cols in sorted(self.between_colors.items())}}


def red_clique_partition(c: EdgeColoring, family: PatternFamily | None = None) -> RedCliquePartition:
    """Peel off maximum red cliques; for {rrb,bby,rby} check the blue-is-all-or-nothing
    rule between cliques and classify each clique as Type I or II."""
    family = family or _fam("rrb,bby,rby")
    require_avoiding(c, family)
    n = c.n
    red = SimpleGraph(n, c.masks[R])
    rest = (1 << n) - 1
    parts = []
    while rest:
        from .cliques import max_clique_search
        q = max_clique_search(red, within=rest).vertices
        parts.append(tuple(q))
        rest &= ~to_mask(q)
    between = {}
    for i, j in itertools.combinations(range(len(parts)), 2):
        cols = frozenset(c.color(a, b) for a in parts[i] for b in parts[j])
        if B in cols and len(cols) > 1:
            raise PreconditionError(f"cliques {i} and {j} mix blue with other colors", (i, j))
        between[(i, j)] = cols
    types = []
    for i in range(len(parts)):
        seen = set()
        for (a, b), cols in between.items():
            if i in (a, b):
                seen |= cols
        if R not in seen:
            types.append("I")
        elif B not in seen:
            types.append("II")
        else:
            raise PreconditionError(f"clique {i} sends both red and blue edges to other cliques", i)
    return RedCliquePartition(tuple(parts), tuple(types), between)


# ------------------------------------------------------------------ dispatch

EXTRACTORS = {
    "sqrt": (lambda c: extract_sqrt(c), "rrb"),
    "red-matching": (lambda c: extract_red_matching(c), "rrr,rrb,rry"),
    "bipartite-red-a": (lambda c: extract_bipartite_red(c, _fam("rrb,bbr,yyr")), "rrb,bbr,yyr"),
    "bipartite-red-b": (lambda c: extract_bipartite_red(c, _fam("rrr,bbr,yyr")), "rrr,bbr,yyr"),
    "disjoint-palettes": (lambda c: extract_disjoint_palettes(c), "rrb,bbr,rby"),
    "degree2": (lambda c: extract_degree2(c), "rrr,bbb,rry"),
    "majority-rrr-bbb-yyr": (lambda c: extract_majority_neighborhood(c, _fam("rrr,bbb,yyr")), "rrr,bbb,yyr"),
    "majority-rrr-bbb-yyy": (lambda c: extract_majority_neighborhood(c, _fam("rrr,bbb,yyy")), "rrr,bbb,yyy"),
    "majority-rrr-bby-yyb": (lambda c: extract_majority_neighborhood(c, _fam("rrr,bby,yyb")), "rrr,bby,yyb"),
    "c7": (lambda c: extract_c7_structure(c), "rrr,bbr,yyb"),
    "mono-split": (lambda c: extract_mono_split(c), "rrb,bby,yyr"),
}

# Families served directly, in the frame the extractor expects. The {rrb}
# argument also covers every family containing an rrb-type pattern whose
# table value is ceil(sqrt n).
_DIRECT = {
    "rrb": "sqrt", "rrb,rry": "sqrt", "rrb,bbr": "sqrt", "rrb,bby": "sqrt", "rry,bby": "sqrt",
    "rrb,rry,bby": "sqrt", "rrb,rry,bbr": "sqrt",
    "rrr,rrb,rry": "red-matching",
    "rrb,bbr,yyr": "bipartite-red-a",
    "rrr,bbr,yyr": "bipartite-red-b",
    "rrb,bbr,rby": "disjoint-palettes",
    "rrr,bbb,rry": "degree2",
    "rrr,bbb,yyr": "majority-rrr-bbb-yyr",
    "rrr,bbb,yyy": "majority-rrr-bbb-yyy",
    "rrr,bby,yyb": "majority-rrr-bby-yyb",
    "rrr,bbr,yyb": "c7",
    "rrb,bby,yyr": "mono-split",
}


def _build_routes() -> dict:
    routes = {}
    for fam_s, name in _DIRECT.items():
        fam = _fam(fam_s)
        base = _fam(EXTRACTORS[name][1])
        # a color map taking the family onto the frame the extractor reads
        pi = next(p for p in ALL_PERMUTATIONS if base.issubset(fam.permuted(p)))
        rep, to_rep = canonical_family(fam)
        # canonical frame -> extractor frame
        routes[rep] = (name, pi.compose(to_rep.inverse()))
    return routes


ROUTES = _build_routes()


def route_for(family: PatternFamily, allow_subfamily: bool = False):
    """``(extractor name, permutation)`` with ``permutation(family) ⊇`` the extractor's base
    family, or ``None``. By default only exact table entries are routed."""
    rep, to_rep = canonical_family(family)
    if rep in ROUTES:
        name, pi = ROUTES[rep]
        return name, pi.compose(to_rep)
    if allow_subfamily:
        best = None
        for name, (fn, base_s) in EXTRACTORS.items():
            base = _fam(base_s)
            for p in ALL_PERMUTATIONS:
                if base.issubset(family.permuted(p)):
                    best = best or (name, p)
                    break
        return best
    return None


def extract_dispatch(c: EdgeColoring, family: PatternFamily, allow_subfamily: bool = False
                     ) -> ExtractionOutcome:
    """Route to the specialized extractor for ``family`` (in any color frame).

    The coloring is recolored into the extractor's frame, the extractor runs
    there, and the witness palette is mapped back. Families with no
    extractor fall back to the exact two-color profile with guarantee
    ``min(n, 2)``.
    """
    require_avoiding(c, family)
    route = route_for(family, allow_subfamily)
    if route is None:
        prof = two_color_profile(c)
        wit = prof.best_witness()
        g = min(c.n, 2)
        if wit.size < g:
            raise ExtractionError("profile fallback below 2")
        return ExtractionOutcome(wit, g, "fallback:profile", c.n, family, None,
                                 ("no specialized extractor for this family",))
    name, pi = route
    out = EXTRACTORS[name][0](apply_color_permutation(c, pi))
    inv = pi.inverse()
    wit = CliqueWitness(out.witness.vertices, frozenset(inv(x) for x in out.witness.colors_used))
    wit.validate(c)
    return ExtractionOutcome(wit, out.guarantee, out.lemma_id, c.n, family, pi, out.notes)
