"""Extremal colorings: the blow-up operator, constructions 1-17, graph providers
and the random-permutation packing step.

Construction ids follow the order in which the constructions are numbered in
the source material (1 = grid, ..., 16 = red/blue halves); id 17 is the
packing construction for {rrr, bbb}.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .cliques import max_clique_search, two_color_profile
from .core import (COLORS, Color, EdgeColoring, PatternFamily, PreconditionError, parse_patterns,
                   SimpleGraph, TrichromeError, bits, find_forbidden)

R, B, Y = Color.R, Color.B, Color.Y

__all__ = [
    "ProviderError", "ConstructionSpec", "ProviderRequest", "ProviderResult",
    "blow_up", "generate", "provider", "pack_copy", "verify_claims", "SPECS",
    "construction14_schedule", "balanced_sizes", "eps5", "eps7",
]


class ProviderError(TrichromeError):
    """A provider ran out of budget before meeting its hard constraint."""


def eps5(n: int) -> int:
    return {0: 0, 1: 1}.get(n % 5, 2)


def eps7(n: int) -> int:
    return 1 if n % 7 == 2 else 0


def balanced_sizes(n: int, k: int) -> list[int]:
    """``k`` sizes summing to ``n`` differing by at most one, larger ones first."""
    if k < 1:
        raise ValueError("need at least one part")
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def _log2(x: float) -> float:
    return math.log2(max(x, 2.0))


# ---------------------------------------------------------------- blow-up

def blow_up(outer: EdgeColoring, part_sizes: Sequence[int], inner) -> EdgeColoring:
    """Replace vertex ``i`` of ``outer`` by ``part_sizes[i]`` vertices.

    ``inner[i]`` colors the edges inside part ``i``: an :class:`EdgeColoring`
    on ``part_sizes[i]`` vertices, a single :class:`Color` for a uniform
    filler, or ``None`` when the part has one vertex. Parts are laid out
    consecutively.
    """
    k = outer.n
    sizes = list(part_sizes)
    if len(sizes) != k:
        raise ValueError(f"expected {k} part sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    if isinstance(inner, (Color, int)) or inner is None:
        inner = [inner] * k
    inner = list(inner)
    if len(inner) != k:
        raise ValueError(f"expected {k} inner colorings, got {len(inner)}")
    for i, (s, col) in enumerate(zip(sizes, inner)):
        if isinstance(col, EdgeColoring):
            if col.n != s:
                raise ValueError(f"inner coloring {i} has {col.n} vertices, part has {s}")
        elif col is None:
            if s > 1:
                raise ValueError(f"part {i} has {s} vertices but no inner coloring")
        else:
            Color(col)
    label = []
    for i, s in enumerate(sizes):
        label += [(i, t) for t in range(s)]
    n = len(label)
    codes = []
    for a in range(n):
        pa, ta = label[a]
        for b in range(a + 1, n):
            pb, tb = label[b]
            if pa != pb:
                codes.append(outer.color(pa, pb))
            else:
                col = inner[pa]
                codes.append(col.color(ta, tb) if isinstance(col, EdgeColoring) else col)
    return EdgeColoring(n, codes)


def _two_coloring(g: SimpleGraph, on: Color, off: Color) -> EdgeColoring:
    """Color the edges of ``g`` with ``on`` and its non-edges with ``off``."""
    return EdgeColoring.from_function(g.n, lambda i, j: on if g.has_edge(i, j) else off)


# ---------------------------------------------------------------- providers

KINDS = ("triangle-free-low-alpha", "two-color-no-Ks-no-Kt", "no-mono-clique-2logk")


@dataclass(frozen=True)
class ProviderRequest:
    kind: str
    n: int
    s: int | None = None
    t: int | None = None
    seed: int = 0
    restarts: int = 4
    alpha_budget: int = 20_000


@dataclass(frozen=True)
class ProviderResult:
    """Output of a provider.

    ``graph`` (or ``coloring`` for the two-color kinds) satisfies the hard
    constraint, which was re-checked; ``metrics`` holds the soft quantities,
    with ``*_exact`` flags telling whether the clique searches completed.
    """

    request: ProviderRequest
    graph: SimpleGraph | None
    coloring: EdgeColoring | None
    strategy: str
    metrics: dict = field(default_factory=dict)


def _triangle_free_process(n: int, rng: random.Random) -> SimpleGraph:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    adj = [0] * n
    for i, j in pairs:
        if not adj[i] & adj[j]:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return SimpleGraph(n, adj)


def _ks_free_process(n: int, s: int, rng: random.Random) -> SimpleGraph:
    """Random greedy K_s-free process: add edges unless they close a K_s."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    adj = [0] * n
    g_adj = adj
    for i, j in pairs:
        if s <= 2:
            break
        # the edge closes a K_s iff the common neighbourhood holds a K_{s-2}
        if not _clique_at_least(g_adj, g_adj[i] & g_adj[j], s - 2):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return SimpleGraph(n, adj)


def _clique_at_least(adj, P: int, k: int) -> bool:
    if k <= 0:
        return True
    if P.bit_count() < k:
        return False
    for v in bits(P):
        if _clique_at_least(adj, P & adj[v] & ~((1 << (v + 1)) - 1), k - 1):
            return True
    return False


def _alpha(g: SimpleGraph, budget: int) -> tuple[int, int, bool]:
    """(lower, upper, exact) for the independence number."""
    res = max_clique_search(g.complement(), budget)
    return res.size, res.upper_bound, res.optimal


def _greedy_alpha(g: SimpleGraph) -> int:
    # min-degree greedy independent set, used to rank restarts cheaply
    P = (1 << g.n) - 1
    size = 0
    while P:
        v = min(bits(P), key=lambda u: ((g.adj[u] & P).bit_count(), u))
        size += 1
        P &= ~g.adj[v] & ~(1 << v)
    return size


def _paley17() -> SimpleGraph:
    qr = {(x * x) % 17 for x in range(1, 17)}
    return SimpleGraph.from_edges(17, [(i, j) for i in range(17) for j in range(i + 1, 17)
                                       if (j - i) % 17 in qr])


def provider(req: ProviderRequest) -> ProviderResult:
    """Desk-scale stand-ins for the asymptotic existence results.

    * ``triangle-free-low-alpha``: a triangle-free graph on ``n`` vertices;
      exact minimum independence number for ``n <= 10``, otherwise the best of
      ``restarts`` runs of the random greedy triangle-free process.
    * ``two-color-no-Ks-no-Kt``: a ``K_s``-free graph (hard) whose
      complement has small clique number (soft target ``t``).
    * ``no-mono-clique-2logk``: a red/blue coloring of ``K_n`` with no
      monochromatic clique above ``floor(2 log2 n)`` (hard).
    """
    from . import exact  # local import: exact depends on cliques only

    n = req.n
    if n < 1:
        raise ValueError("provider needs n >= 1")
    rng = random.Random(f"{req.kind}:{n}:{req.s}:{req.t}:{req.seed}")
    if req.kind == "triangle-free-low-alpha":
        if n <= 10:
            g, a = exact.min_alpha_free_graph(n, 3)
            strategy = "exact"
        else:
            best, best_key = None, None
            for _ in range(max(1, req.restarts)):
                g = _triangle_free_process(n, rng)
                key = _greedy_alpha(g)
                if best is None or key < best_key:
                    best, best_key = g, key
            g = best
            strategy = f"greedy-process(restarts={req.restarts})"
        tri = g.find_triangle()
        if tri is not None:
            raise ProviderError(f"provider produced a triangle {tri}")
        lo, hi, ex = _alpha(g, req.alpha_budget)
        return ProviderResult(req, g, None, strategy,
                              {"alpha": lo, "alpha_upper": hi, "alpha_exact": ex,
                               "edges": g.num_edges, "max_degree": g.max_degree})
    if req.kind == "two-color-no-Ks-no-Kt":
        s = req.s
        if s is None or s < 2:
            raise ValueError("two-color-no-Ks-no-Kt needs s >= 2")
        if n <= 10 and s <= 4:
            g, a = exact.min_alpha_free_graph(n, s)
            strategy = "exact"
        else:
            best, best_key = None, None
            for _ in range(max(1, req.restarts)):
                g = _ks_free_process(n, s, rng)
                key = _greedy_alpha(g)
                if best is None or key < best_key:
                    best, best_key = g, key
            g = best
            strategy = f"greedy-process(restarts={req.restarts})"
        om = max_clique_search(g)
        if om.size >= s:
            raise ProviderError(f"K_{s}-free constraint violated: clique {om.vertices}")
        lo, hi, ex = _alpha(g, req.alpha_budget)
        metrics = {"clique_number": om.size, "alpha": lo, "alpha_upper": hi, "alpha_exact": ex}
        if req.t is not None:
            metrics["meets_t"] = hi < req.t if ex else None
        return ProviderResult(req, g, None, strategy, metrics)
    if req.kind == "no-mono-clique-2logk":
        limit = max(2, int(math.floor(2 * math.log2(n)))) if n > 1 else 1
        if n <= 5:
            g, _ = exact.min_alpha_free_graph(n, 3)
            # complement of a K3-free graph with alpha <= 2 has no K3 either
            strategy = "exact"
        elif n <= 17:
            g = _paley17().induced(range(n))
            strategy = "paley17"
        else:
            for attempt in range(50):
                g = SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                               if rng.random() < 0.5])
                r1 = max_clique_search(g, req.alpha_budget)
                r2 = max_clique_search(g.complement(), req.alpha_budget)
                if r1.upper_bound <= limit and r2.upper_bound <= limit:
                    break
            else:
                raise ProviderError(f"no coloring of K_{n} with mono cliques <= {limit} found")
            strategy = f"random(attempt={attempt})"
        red = max_clique_search(g, req.alpha_budget)
        blue = max_clique_search(g.complement(), req.alpha_budget)
        if red.upper_bound > limit or blue.upper_bound > limit:
            raise ProviderError("monochromatic clique bound not certified")
        col = _two_coloring(g, R, B)
        return ProviderResult(req, g, col, strategy,
                              {"limit": limit, "max_red_clique": red.size,
                               "max_blue_clique": blue.size,
                               "exact": red.optimal and blue.optimal})
    raise ValueError(f"unknown provider kind {req.kind!r}; expected one of {KINDS}")


def _recolor(c: EdgeColoring, mapping: dict) -> EdgeColoring:
    table = bytes(mapping.get(Color(x), Color(x)) for x in range(3)) + bytes(range(3, 256))
    return EdgeColoring(c.n, c.codes.translate(table))


# ---------------------------------------------------------------- packing

def pack_copy(g: SimpleGraph, seed: int = 0, restarts: int = 10_000) -> tuple[list[int], int]:
    """Random vertex permutation ``sigma`` with few edges shared by ``g`` and ``sigma(g)``.

    The expected overlap of a uniform permutation is ``|E|^2 / C(n,2)``, so a
    permutation meeting the floor of that value exists; we sample until one
    is found. Returns ``(sigma, overlap)``.
    """
    n = g.n
    if n < 2:
        raise ValueError("pack_copy needs n >= 2")
    m = g.num_edges
    target = (m * m) // (n * (n - 1) // 2)
    edges = g.edges()
    rng = random.Random(seed)
    for _ in range(restarts):
        sigma = list(range(n))
        rng.shuffle(sigma)
        overlap = sum(1 for u, v in edges if g.has_edge(sigma[u], sigma[v]))
        if overlap <= target:
            return sigma, overlap
    raise ProviderError(f"no permutation with overlap <= {target} in {restarts} tries")


# ---------------------------------------------------------------- specs

@dataclass(frozen=True)
class ConstructionSpec:
    id: int
    name: str
    avoided: tuple
    bound_tag: str
    bound: Callable[[int], int] | None
    validity_floor: int
    min_n: int
    needs_seed: bool
    order: str

    @property
    def deterministic(self) -> bool:
        return not self.needs_seed

    @property
    def exact_bound(self) -> bool:
        return self.bound is not None

    def to_dict(self) -> dict:
        return {"id": self.id, "name": self.name, "avoided": ",".join(str(p) for p in self.avoided),
                "bound": self.bound_tag, "validity_floor": self.validity_floor,
                "min_n": self.min_n, "needs_seed": self.needs_seed, "order": self.order}


def _spec(id, name, fam, tag, bound, floor, min_n, seeded, order):
    return ConstructionSpec(id, name, parse_patterns(fam), tag, bound, floor, min_n,
                            seeded, order)


SPECS = {s.id: s for s in [
    _spec(1, "grid", "rrb,rry,bbr,bby", "ceil_sqrt", lambda n: math.isqrt(n - 1) + 1, 3, 3,
          False, "ceil(sqrt(n))"),
    _spec(2, "k4-free blow-up", "rby,rrb", "order", None, 3, 3, True, "O(sqrt(n))"),
    _spec(3, "triangle-free red, color classes blue", "rrr,bbr,bby", "order", None, 3, 3,
          True, "O(sqrt(n log n))"),
    _spec(4, "blue/yellow Ramsey blow-up, red inside", "rby,rrb,rry", "order", None, 3, 3,
          True, "O(sqrt(n log n))"),
    _spec(5, "red/blue Ramsey copies, yellow between", "rby,rry,bby", "order", None, 3, 3,
          True, "O(sqrt(n log n))"),
    _spec(6, "random red/blue on triangle-free graph", "rrr,bbb,bbr,rrb", "order", None, 3, 3,
          True, "O(sqrt(n) log^{3/2} n)"),
    _spec(7, "nested cliques", "rrb,rry,bby,rby", "order", None, 3, 3, False, "O(n^{2/3})"),
    _spec(8, "triangle-free red blow-up, yellow inside", "rby,rrr,yyb,yyr", "order", None, 3, 3,
          True, "O(n^{2/3} sqrt(log n))"),
    _spec(9, "blue blow-up of red/yellow parts", "rby,rrr,rrb,yyb", "order", None, 3, 3, True,
          "O(n^{2/3} sqrt(log n))"),
    _spec(10, "copies with matched positions blue", "rrr,rrb,bbr,bby", "order", None, 3, 3,
          True, "O(n^{2/3} sqrt(log n))"),
    _spec(11, "triangle-free blue blow-up of red/yellow parts", "rby,rrr,bbb,rrb", "order", None,
          3, 3, True, "O(n^{3/4} sqrt(log n))"),
    _spec(12, "K5 copies, yellow between", "rrr,bbb,rry,bby", "two_fifths_eps",
          lambda n: 2 * (n // 5) + eps5(n), 11, 3, False, "2 floor(n/5) + eps(n)"),
    _spec(13, "K5 blow-up, yellow inside", "rrr,bbb,yyr,yyb", "two_ceil_fifth",
          lambda n: 2 * -(-n // 5), 11, 3, False, "2 ceil(n/5)"),
    _spec(14, "cyclic K7 blow-up", "rrr,bbb,bbr,yyb", "three_sevenths_eps1",
          lambda n: -(-3 * n // 7) + eps7(n), 7, 7, False, "ceil(3n/7) + eps1(n)"),
    _spec(15, "blue halves with red matching", "rrr,yyy,rrb,rry,bbr,bby,yyr", "half_ceil",
          lambda n: -(-n // 2), 3, 3, False, "ceil(n/2)"),
    _spec(16, "red half, blue half, yellow between", "yyy,rby,rrb,rry,bbr,bby",
          "half_ceil_plus_1", lambda n: -(-n // 2) + 1, 3, 3, False, "ceil(n/2) + 1"),
    _spec(17, "packing of two triangle-free graphs", "rrr,bbb", "order", None, 3, 3, True,
          "O(sqrt(n) log n)"),
]}

_CYCLE7 = {1: B, 2: Y, 3: R}
SCHEDULES = ("xxxxxxx", "wxxxxxx", "wxwxxxx", "wwxxwxx", "wwxxwwx", "wwwwwxx", "wwwwwwx")


def cyclic_k7() -> EdgeColoring:
    """Distance 1 blue, distance 2 yellow, distance 3 red around a 7-cycle."""
    return EdgeColoring.from_function(7, lambda i, j: _CYCLE7[min((i - j) % 7, (j - i) % 7)])


def c5_split() -> EdgeColoring:
    """Red 5-cycle, blue pentagram: the red/blue K5 with no monochromatic triangle."""
    return EdgeColoring.from_function(5, lambda i, j: R if (j - i) % 5 in (1, 4) else B)


def construction14_schedule(n: int) -> list[int]:
    x, w = n // 7, -(-n // 7)
    return [w if ch == "w" else x for ch in SCHEDULES[n % 7]]


def _ramsey_two_coloring(k: int, seed: int, on: Color, off: Color) -> EdgeColoring:
    res = provider(ProviderRequest("no-mono-clique-2logk", k, seed=seed, alpha_budget=5_000))
    return _recolor(res.coloring, {R: on, B: off})


def _tf_coloring(k: int, seed: int, on: Color, off: Color, tag: str) -> EdgeColoring:
    # triangle-free graph colored ``on``, complement ``off``
    res = provider(ProviderRequest("triangle-free-low-alpha", k, seed=_sub(seed, tag),
                                   alpha_budget=2_000))
    return _two_coloring(res.graph, on, off)


def _sub(seed: int, tag) -> int:
    return random.Random(f"{seed}:{tag}").getrandbits(32)


def _parts_inner(sizes, make: Callable[[int, int], EdgeColoring]):
    return [make(s, i) if s > 1 else None for i, s in enumerate(sizes)]


def generate(id: int, n: int, seed: int | None = None) -> tuple[EdgeColoring, ConstructionSpec]:
    """Build construction ``id`` on ``n`` vertices.

    Randomized constructions need ``seed``; deterministic ones ignore it.
    Asymptotic parameter expressions are rounded to the nearest integer and
    clamped to ``[1, n]``; uneven part sizes are balanced.
    """
    if id not in SPECS:
        raise ValueError(f"unknown construction id {id}; expected 1..17")
    spec = SPECS[id]
    if n < spec.min_n:
        raise ValueError(f"construction {id} needs n >= {spec.min_n}, got {n}")
    if spec.needs_seed and seed is None:
        raise ValueError(f"construction {id} is randomized and needs a seed")
    c = _BUILDERS[id](n, seed)
    if c.n != n:
        raise AssertionError(f"construction {id} built {c.n} vertices, expected {n}")
    hit = find_forbidden(c, spec.avoided)
    if hit is not None:
        raise AssertionError(f"construction {id} at n={n} contains {hit[0]} on {hit[1]}")
    return c, spec


def _clamp(x: float, n: int) -> int:
    return max(1, min(n, int(round(x))))


def _c1(n, seed):
    m = math.isqrt(n - 1) + 1
    cells = [(v // m, v % m) for v in range(n)]

    def col(a, b):
        (i, k), (j, l) = cells[a], cells[b]
        if i == j:
            return R
        return B if k == l else Y
    return EdgeColoring.from_function(n, col)


def _c2(n, seed):
    k = _clamp(math.sqrt(n), n)
    sizes = balanced_sizes(n, k)
    # outer: blue/yellow with no yellow K4; inside: red/yellow with no yellow K4
    og = provider(ProviderRequest("two-color-no-Ks-no-Kt", k, s=4, seed=_sub(seed, "outer"),
                                  alpha_budget=2_000)).graph
    outer = _two_coloring(og, Y, B)
    inner = _parts_inner(sizes, lambda s, i: _two_coloring(
        provider(ProviderRequest("two-color-no-Ks-no-Kt", s, s=4, seed=_sub(seed, i),
                                 alpha_budget=2_000)).graph, Y, R))
    return blow_up(outer, sizes, inner)


def _greedy_classes(g: SimpleGraph) -> list[int]:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    cls = [-1] * g.n
    for v in order:
        used = {cls[u] for u in g.neighbors(v)}
        c = 0
        while c in used:
            c += 1
        cls[v] = c
    return cls


def _c3(n, seed):
    g = provider(ProviderRequest("triangle-free-low-alpha", n, seed=_sub(seed, "G"),
                                 alpha_budget=2_000)).graph
    cls = _greedy_classes(g)
    return EdgeColoring.from_function(
        n, lambda i, j: R if g.has_edge(i, j) else (B if cls[i] == cls[j] else Y))


def _c4(n, seed):
    k = _clamp(math.sqrt(n * _log2(n)), n)
    sizes = balanced_sizes(n, k)
    outer = _ramsey_two_coloring(k, _sub(seed, "outer"), B, Y)
    return blow_up(outer, sizes, R)


def _c5(n, seed):
    k = _clamp(math.sqrt(n * _log2(n)), n)
    m = max(1, int(round(n / k)))
    sizes = balanced_sizes(n, m)
    base = _ramsey_two_coloring(max(sizes), _sub(seed, "copy"), R, B)
    outer = EdgeColoring.uniform(m, Y)
    return blow_up(outer, sizes, _parts_inner(sizes, lambda s, i: base.induced(range(s))))


def _c6(n, seed, retries: int = 5):
    h = provider(ProviderRequest("triangle-free-low-alpha", n, seed=_sub(seed, "H"),
                                 alpha_budget=2_000)).graph
    target = 80 * math.sqrt(n) * _log2(n) ** 1.5
    for attempt in range(retries):
        rng = random.Random(_sub(seed, ("coins", attempt)))
        coin = {e: (R if rng.random() < 0.5 else B) for e in h.edges()}
        c = EdgeColoring.from_function(n, lambda i, j: coin.get((i, j), Y))
        # h2 <= n always, so the target can only fail once it drops below n
        if target >= n or two_color_profile(c, budget=5_000).h2 <= target:
            return c
    return c


def _c7(n, seed):
    a = 1
    while a ** 3 < n:
        a += 1
    lab = [(v // (a * a), (v // a) % a) for v in range(n)]

    def col(i, j):
        (ci, ki), (cj, kj) = lab[i], lab[j]
        if ci != cj:
            return Y
        return R if ki == kj else B
    return EdgeColoring.from_function(n, col)


def _c8(n, seed):
    k = _clamp(n ** (2 / 3) * math.sqrt(_log2(n)), n)
    sizes = balanced_sizes(n, k)
    outer = _tf_coloring(k, seed, R, B, "outer")
    return blow_up(outer, sizes, Y)


def _c9(n, seed):
    k = _clamp(n ** (1 / 3) / math.sqrt(_log2(n)), n)
    sizes = balanced_sizes(n, k)
    outer = EdgeColoring.uniform(k, B)
    inner = _parts_inner(sizes, lambda s, i: _tf_coloring(s, seed, R, Y, ("part", i)))
    return blow_up(outer, sizes, inner)


def _c10(n, seed):
    k = _clamp(n ** (2 / 3) * math.sqrt(_log2(n)), n)
    m = max(1, int(round(n / k)))
    sizes = balanced_sizes(n, m)
    base = _tf_coloring(max(sizes), seed, R, Y, "copy")
    lab = []
    for i, s in enumerate(sizes):
        lab += [(i, t) for t in range(s)]

    def col(a, b):
        (i, s), (j, t) = lab[a], lab[b]
        if i == j:
            return base.color(s, t)
        return B if s == t else Y
    return EdgeColoring.from_function(n, col)


def _c11(n, seed):
    k = _clamp(math.sqrt(n), n)
    sizes = balanced_sizes(n, k)
    outer = _tf_coloring(k, seed, B, Y, "outer")
    inner = _parts_inner(sizes, lambda s, i: _tf_coloring(s, seed, R, Y, ("part", i)))
    return blow_up(outer, sizes, inner)


def _c12(n, seed):
    sizes = [5] * (n // 5) + ([n % 5] if n % 5 else [])
    base = c5_split()
    outer = EdgeColoring.uniform(len(sizes), Y)
    return blow_up(outer, sizes, _parts_inner(sizes, lambda s, i: base.induced(range(s))))


def _c13(n, seed):
    # parts of size ceil(n/5) first, then floor(n/5); empty parts are dropped for n < 5
    sizes = [s for s in balanced_sizes(n, 5) if s > 0]
    outer = c5_split().induced(range(len(sizes)))
    return blow_up(outer, sizes, Y)


def _c14(n, seed):
    return blow_up(cyclic_k7(), construction14_schedule(n), Y)


def _c15(n, seed):
    h = n // 2
    # V1 = 0..h-1, V2 = h..n-1; matching pairs i with h+i
    def col(i, j):
        if (i < h) == (j < h):
            return B
        return R if j - i == h else Y
    return EdgeColoring.from_function(n, col)


def _c16(n, seed):
    h = -(-n // 2)

    def col(i, j):
        if j < h:
            return R
        if i >= h:
            return B
        return Y
    return EdgeColoring.from_function(n, col)


def _c17(n, seed):
    N = n
    for step in range(60):
        g = provider(ProviderRequest("triangle-free-low-alpha", N, seed=_sub(seed, ("G", N)),
                                     restarts=1, alpha_budget=500)).graph
        if g.num_edges == 0 or N < 2:
            sigma, overlap = list(range(N)), 0
        else:
            sigma, overlap = pack_copy(g, _sub(seed, ("pack", N)))
        g2 = g.relabeled(sigma)
        both = SimpleGraph(N, [a & b for a, b in zip(g.adj, g2.adj)])
        # greedy independent set of the overlap graph, min degree first
        P = (1 << N) - 1
        X = []
        while P:
            v = min(bits(P), key=lambda u: ((both.adj[u] & P).bit_count(), u))
            X.append(v)
            P &= ~both.adj[v] & ~(1 << v)
        if len(X) >= n:
            X = sorted(X)[:n]
            return EdgeColoring.from_function(
                n, lambda i, j: R if g.has_edge(X[i], X[j]) else
                (B if g2.has_edge(X[i], X[j]) else Y))
        N = max(N + 1, int(N * 1.15))
    raise ProviderError(f"packing did not reach {n} vertices")


_BUILDERS = {1: _c1, 2: _c2, 3: _c3, 4: _c4, 5: _c5, 6: _c6, 7: _c7, 8: _c8, 9: _c9,
             10: _c10, 11: _c11, 12: _c12, 13: _c13, 14: _c14, 15: _c15, 16: _c16, 17: _c17}


# ---------------------------------------------------------------- claims

def verify_claims(id: int, n_range, seed: int | None = 0, clique_budget: int | None = None
                  ) -> dict:
    """Check avoidance (always) and the declared h2 bound (exact-bound constructions).

    Deterministic constructions with an exact bound are solved exactly and a
    bound violation at ``n >= validity_floor`` is a failure. Other
    constructions report measured h2 (or bounds when ``clique_budget`` cut the
    search short) next to the asymptotic order, with no assertion on constants.
    """
    spec = SPECS[id]
    rows, failures = [], []
    for n in n_range:
        if n < spec.min_n:
            continue
        c, _ = generate(id, n, seed if spec.needs_seed else None)
        row = {"n": n}
        hit = find_forbidden(c, spec.avoided)
        row["avoiding"] = hit is None
        if hit is not None:
            failures.append({"n": n, "kind": "pattern", "pattern": str(hit[0]),
                             "triangle": list(hit[1])})
        budget = None if spec.exact_bound else clique_budget
        prof = two_color_profile(c, budget)
        row.update(s_rb=prof.s_rb, s_ry=prof.s_ry, s_by=prof.s_by, h2=prof.h2,
                   h2_exact=prof.optimal)
        if not prof.optimal:
            row["h2_upper"] = max(prof.upper_bounds.values())
        if spec.exact_bound:
            bound = spec.bound(n)
            row["bound"] = bound
            row["applies"] = n >= spec.validity_floor
            if row["applies"] and prof.h2 > bound:
                wit = prof.best_witness()
                failures.append({"n": n, "kind": "bound", "h2": prof.h2, "bound": bound,
                                 "witness": wit.to_dict()})
        else:
            row["order"] = spec.order
        rows.append(row)
    return {"id": id, "spec": spec.to_dict(), "seed": seed if spec.needs_seed else None,
            "rows": rows, "failures": failures, "ok": not failures}
