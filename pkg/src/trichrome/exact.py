"""Exact h2(n, F) by symmetry-broken backtracking, and the graph functions f, g.

Edges are visited column by column: for ``j = 1..n-1`` and ``i = 0..j-1``.
When edge ``(i, j)`` gets its color every triangle ``(k, i, j)`` with
``k < i`` is complete, so the forbidden-pattern test is a couple of bitset
intersections, and the two-colored cliques that first appear are exactly
those containing both ``i`` and ``j``. Their size is a lower bound on h2 of
every completion, which prunes against the incumbent minimum.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .cliques import clique_number, independence_number
from .core import (ALL_PERMUTATIONS, COLOR_PAIRS, EdgeColoring, PatternFamily, SimpleGraph,
                   bits, forbidden_table)
from .patterns import family_stabilizer

__all__ = [
    "ExactResult", "GraphSearchResult", "exact_h2", "enumerate_graphs", "canonical_form",
    "f_exact", "g_exact", "sandwich_check", "min_alpha_free_graph", "odd_girth_at_least_7",
    "PREDICATES", "DEFAULT_CAP",
]

DEFAULT_CAP = 10


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class ExactResult:
    """Outcome of :func:`exact_h2`.

    ``status`` is ``"exact"`` (``value`` set, ``witness`` attains it),
    ``"interval"`` (budget ran out; ``lower <= h2(n, F) <= upper``, ``upper``
    is ``None`` when no avoiding coloring had been found yet) or
    ``"infeasible"`` (the complete search found no avoiding coloring).
    """

    n: int
    family: PatternFamily
    status: str
    lower: int | None
    upper: int | None
    witness: EdgeColoring | None
    nodes: int
    notes: tuple = ()

    @property
    def value(self) -> int | None:
        return self.lower if self.status == "exact" else None

    @property
    def is_exact(self) -> bool:
        return self.status == "exact"

    def to_dict(self) -> dict:
        d = {"n": self.n, "family": self.family.spec(), "status": self.status,
             "value": self.value, "lower": self.lower, "upper": self.upper,
             "nodes_explored": self.nodes,
             "witness": self.witness.to_string() if self.witness is not None else None}
        if self.notes:
            d["notes"] = list(self.notes)
        return d


# ---------------------------------------------------------------- h2 search

def _omega(P: int, pm: list) -> int:
    """Clique number inside ``P`` where ``pm[v]`` is the neighbourhood of ``v``."""
    if not P:
        return 0
    best = 0
    stack = [(P, 0)]
    while stack:
        Q, size = stack.pop()
        if size > best:
            best = size
        if size + Q.bit_count() <= best:
            continue
        while Q:
            b = Q & -Q
            v = b.bit_length() - 1
            Q ^= b
            stack.append((Q & pm[v], size + 1))
    return best


def _prefix_transforms(k: int, stab) -> list:
    """(edge index map, color map) pairs for vertex perms of K_k times ``stab``."""
    edges = [(i, j) for j in range(1, k) for i in range(j)]
    pos = {e: t for t, e in enumerate(edges)}
    out = []
    for perm in itertools.permutations(range(k)):
        # image edge t gets the color of preimage edge src[t]
        inv = [0] * k
        for a, pa in enumerate(perm):
            inv[pa] = a
        src = []
        for (i, j) in edges:
            a, b = sorted((inv[i], inv[j]))
            src.append(pos[(a, b)])
        for pi in stab:
            out.append((tuple(src), tuple(int(c) for c in pi.images)))
    return out


class _Search:
    def __init__(self, n: int, family: PatternFamily, budget: int | None, symmetry: bool = True,
                 use_bound: bool = True):
        self.n = n
        self.family = family
        self.budget = budget
        self.nodes = 0
        self.bad = forbidden_table(family)
        self.edges = [(i, j) for j in range(1, n) for i in range(j)]
        self.use_bound = use_bound
        self.k = 4 if n >= 4 else n
        self.sym_at = len([1 for j in range(1, self.k) for i in range(j)]) - 1 if symmetry and n >= 3 else -1
        stab = sorted(family_stabilizer(family), key=lambda p: p.images)
        self.transforms = _prefix_transforms(self.k, stab) if self.sym_at >= 0 else []
        self.nb = [[0] * n for _ in range(3)]
        self.assign = [0] * len(self.edges)
        self.best = n + 1
        self.best_codes = None
        self.frontier = None

    def canonical_prefix(self) -> bool:
        cur = self.assign[:self.sym_at + 1]
        t = tuple(cur)
        for src, cmap in self.transforms:
            img = tuple(cmap[cur[s]] for s in src)
            if img < t:
                return False
        return True

    def pair_lb(self, i: int, j: int, x: int) -> int:
        nb = self.nb
        best = 0
        for a, b in COLOR_PAIRS:
            if x != a and x != b:
                continue
            pm = [nb[a][v] | nb[b][v] for v in range(self.n)]
            S = pm[i] & pm[j]
            val = 2 + _omega(S, pm)
            if val > best:
                best = val
        return best

    def run(self, start: int = 0, lbv: int | None = None):
        if lbv is None:
            lbv = min(self.n, 2) if self.n >= 2 else 1
        if self.n < 2:
            self.best, self.best_codes = self.n, []
            return
        self._dfs(start, lbv)

    def _dfs(self, t: int, lbv: int):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExceeded
        if t == len(self.edges):
            if lbv < self.best:
                self.best = lbv
                self.best_codes = list(self.assign)
            return
        i, j = self.edges[t]
        nb = self.nb
        bad = self.bad
        bi, bj = 1 << i, 1 << j
        for x in (0, 1, 2):
            ok = True
            for a, b in bad[x]:
                if nb[a][i] & nb[b][j]:
                    ok = False
                    break
            if not ok:
                continue
            nb[x][i] |= bj
            nb[x][j] |= bi
            self.assign[t] = x
            try:
                new_lb = lbv
                if self.use_bound:
                    v = self.pair_lb(i, j, x)
                    if v > new_lb:
                        new_lb = v
                if new_lb < self.best and (t != self.sym_at or self.canonical_prefix()):
                    self._dfs(t + 1, new_lb)
            except _BudgetExceeded:
                # every unexplored completion below this node has h2 >= lbv
                if self.frontier is None or lbv < self.frontier:
                    self.frontier = lbv
                raise
            finally:
                nb[x][i] &= ~bj
                nb[x][j] &= ~bi

    def coloring(self) -> EdgeColoring | None:
        if self.best_codes is None:
            return None
        col = dict(zip(self.edges, self.best_codes))
        return EdgeColoring(self.n, [col[(i, j)] for i in range(self.n)
                                     for j in range(i + 1, self.n)])


def _run_subtree(args):
    n, family, prefix, budget = args
    s = _Search(n, family, budget)
    # replay the prefix assignment (already verified canonical and avoiding)
    lbv = min(n, 2)
    for t, x in enumerate(prefix):
        i, j = s.edges[t]
        s.nb[x][i] |= 1 << j
        s.nb[x][j] |= 1 << i
        s.assign[t] = x
        lbv = max(lbv, s.pair_lb(i, j, x))
    try:
        s._dfs(len(prefix), lbv)
        done = True
    except _BudgetExceeded:
        done = False
    return s.best, s.best_codes, s.nodes, done, s.frontier


def _prefixes(n: int, family: PatternFamily) -> list[tuple]:
    """Canonical, avoiding colorings of the K4 prefix, in DFS order."""
    s = _Search(n, family, None)
    out = []
    m = s.sym_at + 1

    def rec(t):
        if t == m:
            if s.canonical_prefix():
                out.append(tuple(s.assign[:m]))
            return
        i, j = s.edges[t]
        for x in (0, 1, 2):
            if any(s.nb[a][i] & s.nb[b][j] for a, b in s.bad[x]):
                continue
            s.nb[x][i] |= 1 << j
            s.nb[x][j] |= 1 << i
            s.assign[t] = x
            rec(t + 1)
            s.nb[x][i] &= ~(1 << j)
            s.nb[x][j] &= ~(1 << i)
    rec(0)
    return out


def exact_h2(n: int, family: PatternFamily, budget: int | None = 5_000_000,
             threads: int = 1, symmetry: bool = True) -> ExactResult:
    """Exact h2(n, F), or an interval when ``budget`` search nodes are not enough.

    Symmetry breaking: the coloring of the first four vertices must be the
    lexicographically least in its orbit under vertex permutations of those
    four vertices combined with the color permutations fixing ``family``.
    Relabelling any avoiding coloring brings it into this form without
    changing h2, so the minimum is unaffected.

    With ``threads > 1`` the canonical prefixes are searched in separate
    processes, each with its own incumbent; the minimum and the witness (the
    first minimizer in search order) agree with the sequential search.
    """
    if n < 1:
        raise ValueError("n must be positive")
    notes = ()
    if n < 3:
        notes = ("n < 3: no triangles, every coloring is avoiding and h2 = n by convention",)
        w = EdgeColoring(n, [0] * (n * (n - 1) // 2))
        return ExactResult(n, family, "exact", n, n, w, 1, notes)

    if threads > 1 and symmetry and n >= 5:
        prefixes = _prefixes(n, family)
        with ProcessPoolExecutor(max_workers=threads) as ex:
            per = None if budget is None else max(1, budget // max(1, len(prefixes)))
            results = list(ex.map(_run_subtree, [(n, family, p, per) for p in prefixes]))
        nodes = sum(r[2] for r in results)
        best, codes = n + 1, None
        for b, c, _, _, _ in results:
            if c is not None and b < best:
                best, codes = b, c
        complete = all(r[3] for r in results)
        frontier = min((r[4] for r in results if not r[3] and r[4] is not None), default=None)
        s = _Search(n, family, None)
        s.best, s.best_codes = best, codes
        return _finish(n, family, s, complete, frontier, nodes, notes)

    s = _Search(n, family, budget, symmetry=symmetry)
    try:
        s.run()
        complete = True
    except _BudgetExceeded:
        complete = False
    return _finish(n, family, s, complete, s.frontier, s.nodes, notes)


def _finish(n, family, s: _Search, complete: bool, frontier, nodes, notes) -> ExactResult:
    wit = s.coloring()
    if complete:
        if wit is None:
            return ExactResult(n, family, "infeasible", None, None, None, nodes, notes)
        return ExactResult(n, family, "exact", s.best, s.best, wit, nodes, notes)
    upper = s.best if wit is not None else None
    lower = frontier if frontier is not None else 1
    if upper is not None:
        lower = min(lower, upper)
    return ExactResult(n, family, "interval", lower, upper, wit, nodes, notes)


# ---------------------------------------------------------------- graphs

def _refine(n: int, adj: tuple, cells: list) -> list:
    """Equitable refinement of an ordered partition (label-invariant)."""
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            smask = 0
            for v in cells[si]:
                smask |= 1 << v
            new = []
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new.append(cell)
                else:
                    changed = True
                    for key in sorted(groups):
                        new.append(groups[key])
            cells = new
            if changed:
                break
    return cells


def canonical_form(g: SimpleGraph) -> tuple[int, tuple]:
    """Canonical certificate and a canonical labeling of ``g``.

    Individualization-refinement over equitable partitions; the certificate is
    the least upper-triangle adjacency word over all leaves. Vertices with the
    same neighbourhood apart from each other are interchangeable, so only one
    per such class is individualized.
    """
    n, adj = g.n, g.adj
    if n == 0:
        return 0, ()
    best = [None, None]

    def cert(order):
        word = 0
        for a in range(n):
            va = adj[order[a]]
            for b in range(a + 1, n):
                word = (word << 1) | ((va >> order[b]) & 1)
        return word

    def rec(cells):
        cells = _refine(n, adj, cells)
        idx = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = tuple(c[0] for c in cells)
            w = cert(order)
            if best[0] is None or w < best[0]:
                best[0], best[1] = w, order
            return
        cell = cells[idx]
        seen = []
        for v in cell:
            if any((adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in seen):
                continue
            seen.append(v)
            rest = [u for u in cell if u != v]
            rec(cells[:idx] + [[v], rest] + cells[idx + 1:])

    degs = {}
    for v in range(n):
        degs.setdefault(adj[v].bit_count(), []).append(v)
    rec([degs[d] for d in sorted(degs)])
    return best[0], best[1]


def _triangle_ok(adj: list, S: int) -> bool:
    # the new vertex's neighbourhood must be independent
    for v in bits(S):
        if adj[v] & S:
            return False
    return True


def _odd7_ok(adj: list, S: int) -> bool:
    """No C3 or C5 through a new vertex joined to ``S`` (graph itself already ok)."""
    if not _triangle_ok(adj, S):
        return False
    for a in bits(S):
        for x in bits(adj[a]):
            for y in bits(adj[x] & ~(1 << a)):
                if adj[y] & S & ~(1 << a) & ~(1 << x):
                    return False
    return True


PREDICATES = {
    "all": lambda adj, S: True,
    "triangle-free": _triangle_ok,
    "odd-girth-7": _odd7_ok,
}


def odd_girth_at_least_7(g: SimpleGraph) -> bool:
    """No cycle of length 3 or 5."""
    adj = [0] * g.n
    for v in range(g.n):
        S = g.adj[v] & ((1 << v) - 1)
        if not _odd7_ok(adj, S):
            return False
        for u in bits(S):
            adj[u] |= 1 << v
        adj[v] = S
    return True


@lru_cache(maxsize=None)
def _level(n: int, predicate: str) -> tuple:
    if n == 0:
        return (SimpleGraph(0, []),)
    ext = PREDICATES[predicate]
    seen = {}
    for g in _level(n - 1, predicate):
        adj = list(g.adj)
        for S in range(1 << (n - 1)):
            if not ext(adj, S):
                continue
            new = adj + [S]
            for u in bits(S):
                new[u] = new[u] | (1 << (n - 1))
            h = SimpleGraph(n, new)
            key, order = canonical_form(h)
            if key not in seen:
                seen[key] = h.relabeled([order.index(v) for v in range(n)])
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(n: int, predicate: str | Callable = "all", cap: int = DEFAULT_CAP
                     ) -> Iterator[SimpleGraph]:
    """One graph per isomorphism class on ``n`` vertices satisfying ``predicate``.

    ``predicate`` names a hereditary property ("all", "triangle-free",
    "odd-girth-7"); graphs are grown one vertex at a time, extensions that
    break the property are skipped and duplicates are removed by canonical
    certificate. Output graphs are in canonical labeling, sorted by
    certificate.
    """
    if callable(predicate):
        name = next((k for k, v in PREDICATES.items() if v is predicate), None)
        if name is None:
            raise ValueError("predicate must be one of the registered hereditary predicates")
        predicate = name
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; expected one of {sorted(PREDICATES)}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    yield from _level(n, predicate)


@dataclass(frozen=True)
class GraphSearchResult:
    n: int
    value: int
    witness: SimpleGraph
    count_considered: int

    def to_dict(self) -> dict:
        return {"n": self.n, "value": self.value, "count_considered": self.count_considered,
                "witness": {"n": self.witness.n, "edges": self.witness.edges()}}


def f_of_graph(g: SimpleGraph) -> int:
    return max(independence_number(g), clique_number(g.square()))


def f_exact(n: int, cap: int = DEFAULT_CAP) -> GraphSearchResult:
    """min over triangle-free G on n vertices of max(alpha(G), omega(G^2))."""
    best, wit, count = None, None, 0
    for g in enumerate_graphs(n, "triangle-free", cap):
        count += 1
        v = f_of_graph(g)
        if best is None or v < best:
            best, wit = v, g
    return GraphSearchResult(n, best, wit, count)


def g_exact(n: int, cap: int = DEFAULT_CAP) -> GraphSearchResult:
    """min independence number over n-vertex graphs with no C3 and no C5."""
    best, wit, count = None, None, 0
    for g in enumerate_graphs(n, "odd-girth-7", cap):
        count += 1
        v = independence_number(g)
        if best is None or v < best:
            best, wit = v, g
    return GraphSearchResult(n, best, wit, count)


def sandwich_check(n: int, family: PatternFamily, lo_fn: Callable[[int], int],
                   hi_fn: Callable[[int], int], budget: int | None = 5_000_000) -> dict:
    """Check ``lo_fn(n) <= h2(n, family) <= hi_fn(n)``; ``ok`` is ``None`` if undecided."""
    res = exact_h2(n, family, budget)
    lo, hi = lo_fn(n), hi_fn(n)
    report = {"n": n, "family": family.spec(), "lower_fn": lo, "upper_fn": hi,
              "h2": res.to_dict()}
    if res.is_exact:
        report["ok"] = lo <= res.value <= hi
    elif res.status == "interval" and res.upper is not None and (res.upper < lo or res.lower > hi):
        report["ok"] = False
    else:
        report["ok"] = None
    if report["ok"] is False:
        report["counterexample"] = res.witness.to_string() if res.witness is not None else None
    return report


# ---------------------------------------------------------------- small Ramsey graphs

def _has_clique(adj: list, P: int, k: int) -> bool:
    if k <= 0:
        return True
    if P.bit_count() < k:
        return False
    while P:
        b = P & -P
        v = b.bit_length() - 1
        P ^= b
        if _has_clique(adj, P & adj[v], k - 1):
            return True
        if P.bit_count() < k:
            return False
    return False


def _ramsey_graph(n: int, s: int, t: int) -> SimpleGraph | None:
    """A graph on n vertices with no K_s and no independent t-set, or None."""
    if n == 0:
        return SimpleGraph(0, [])
    if t <= 1 or s <= 1:
        return None
    edges = [(i, j) for j in range(1, n) for i in range(j)]
    red = [0] * n
    blue = [0] * n

    def rec(k):
        if k == len(edges):
            return True
        i, j = edges[k]
        for on in (True, False):
            mine, kk = (red, s) if on else (blue, t)
            if not _has_clique(mine, mine[i] & mine[j], kk - 2):
                mine[i] |= 1 << j
                mine[j] |= 1 << i
                if rec(k + 1):
                    return True
                mine[i] &= ~(1 << j)
                mine[j] &= ~(1 << i)
        return False

    # an isolated-free start: vertex 0 is joined to 1 whenever s > 2
    return SimpleGraph(n, red) if rec(0) else None


@lru_cache(maxsize=None)
def min_alpha_free_graph(n: int, s: int) -> tuple[SimpleGraph, int]:
    """A K_s-free graph on n vertices of minimum independence number, and that number."""
    if n == 0:
        return SimpleGraph(0, []), 0
    lo = 1 if n == 1 else min_alpha_free_graph(n - 1, s)[1]
    for a in range(lo, n + 1):
        g = _ramsey_graph(n, s, a + 1)
        if g is not None:
            return g, a
    raise AssertionError("unreachable: the empty graph is K_s-free")
