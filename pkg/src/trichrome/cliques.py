"""Maximum cliques of color-class graphs, S_rb / S_ry / S_by and h2(c).

The solver works on Python ``int`` bitsets. Each subproblem is first reduced
(disconnected graph: best component; disconnected complement: union of the
co-components; true twins merged into one weighted vertex; false twins kept
once), and only then branched on with a greedy-coloring bound. The
reductions make blow-up colorings, which are everywhere in this package,
collapse to graphs on a handful of weighted vertices.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

from .core import (COLOR_PAIRS, CliqueWitness, Color, EdgeColoring, SimpleGraph, bits,
                   color_class)

__all__ = ["CliqueResult", "max_clique", "max_clique_search", "clique_number",
           "independence_number", "max_independent_set", "TwoColorProfile",
           "two_color_profile", "h2_of_coloring", "is_clique"]


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class CliqueResult:
    vertices: tuple
    optimal: bool
    upper_bound: int
    nodes: int

    @property
    def size(self) -> int:
        return len(self.vertices)


class _Solver:
    def __init__(self, adj: tuple, budget: int | None):
        self.adj = adj
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExceeded

    def components(self, P: int, complement: bool) -> list[int]:
        adj = self.adj
        out = []
        rest = P
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                reach = 0
                f = frontier
                while f:
                    b = f & -f
                    v = b.bit_length() - 1
                    reach |= (~adj[v] & ~b) if complement else adj[v]
                    f ^= b
                frontier = reach & rest & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def solve(self, P: int, w: dict, mem: dict, lb: int):
        """Best clique inside ``P`` of weight > ``lb``; ``None`` if there is none.

        ``w[v]`` is the weight of representative ``v`` and ``mem[v]`` the mask
        of original vertices it stands for.
        """
        self.tick()
        if not P:
            return (0, 0) if lb < 0 else None
        if sum(w[v] for v in bits(P)) <= lb:
            return None
        if P & (P - 1) == 0:
            v = P.bit_length() - 1
            return (w[v], mem[v]) if w[v] > lb else None

        comps = self.components(P, False)
        if len(comps) > 1:
            best = None
            for comp in sorted(comps, key=lambda m: -sum(w[v] for v in bits(m))):
                r = self.solve(comp, w, mem, lb)
                if r is not None:
                    best, lb = r, r[0]
            return best

        cocomps = self.components(P, True)
        if len(cocomps) > 1:
            total, mask = 0, 0
            for cc in cocomps:
                r = self.solve(cc, w, mem, -1)
                total += r[0]
                mask |= r[1]
            return (total, mask) if total > lb else None

        reduced = self.reduce_twins(P, w, mem)
        if reduced is not None:
            P2, w2, mem2 = reduced
            return self.solve(P2, w2, mem2, lb)

        return self.branch(P, w, mem, lb)

    def reduce_twins(self, P: int, w: dict, mem: dict):
        adj = self.adj
        closed, opened = {}, {}
        merge, drop = [], []
        for v in bits(P):
            nb = adj[v] & P
            key = nb | (1 << v)
            if key in closed:
                merge.append((closed[key], v))
            else:
                closed[key] = v
            if nb in opened:
                drop.append((opened[nb], v))
            else:
                opened[nb] = v
        if not merge and not drop:
            return None
        w2, mem2 = dict(w), dict(mem)
        P2 = P
        for rep, v in merge:
            w2[rep] += w2[v]
            mem2[rep] |= mem2[v]
            P2 &= ~(1 << v)
        if not merge:
            for rep, v in drop:
                # same open neighbourhood: at most one of them in any clique
                if w2[v] > w2[rep]:
                    w2[rep], mem2[rep] = w2[v], mem2[v]
                P2 &= ~(1 << v)
        return P2, w2, mem2

    def coloring(self, P: int, w: dict) -> tuple[list, list]:
        """Greedy sequential coloring; returns vertices and prefix bounds."""
        adj = self.adj
        order, bounds = [], []
        rest = P
        acc = 0
        while rest:
            Q = rest
            cls = []
            while Q:
                b = Q & -Q
                v = b.bit_length() - 1
                Q &= ~adj[v] & ~b
                rest &= ~b
                cls.append(v)
            acc += max(w[v] for v in cls)
            order.extend(cls)
            bounds.extend([acc] * len(cls))
        return order, bounds

    def branch(self, P: int, w: dict, mem: dict, lb: int):
        order, bounds = self.coloring(P, w)
        best = None
        adj = self.adj
        for idx in range(len(order) - 1, -1, -1):
            if bounds[idx] <= lb:
                break
            v = order[idx]
            r = self.solve(P & adj[v], w, mem, lb - w[v])
            if r is not None:
                best = (r[0] + w[v], r[1] | mem[v])
                lb = best[0]
            P &= ~(1 << v)
        return best

    def root_bound(self, P: int) -> int:
        order, bounds = self.coloring(P, {v: 1 for v in bits(P)})
        return bounds[-1] if bounds else 0


def _greedy_clique(adj: tuple, P: int) -> int:
    best = 0
    for s in bits(P):
        C = 1 << s
        cand = adj[s] & P
        while cand:
            # pick the candidate with most neighbours among candidates
            v = max(bits(cand), key=lambda u: ((adj[u] & cand).bit_count(), -u))
            C |= 1 << v
            cand &= adj[v]
        if C.bit_count() > best.bit_count():
            best = C
    return best


def max_clique_search(g: SimpleGraph, budget: int | None = None,
                      within: int | None = None) -> CliqueResult:
    """Maximum clique with an optional node budget.

    Without a budget the result is always optimal. With a budget the best
    clique found so far is returned together with ``optimal=False`` and a
    greedy-coloring upper bound when the budget runs out.
    """
    P = ((1 << g.n) - 1) if within is None else within
    solver = _Solver(g.adj, budget)
    w = {v: 1 for v in bits(P)}
    mem = {v: 1 << v for v in bits(P)}
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000))
    try:
        r = solver.solve(P, w, mem, 0)
        mask = r[1] if r is not None else 0
        return CliqueResult(tuple(bits(mask)), True, mask.bit_count(), solver.nodes)
    except _BudgetExceeded:
        greedy = _greedy_clique(g.adj, P)
        return CliqueResult(tuple(bits(greedy)), False, solver.root_bound(P), solver.nodes)
    finally:
        sys.setrecursionlimit(old)


def max_clique(g: SimpleGraph) -> tuple:
    """A maximum clique of ``g`` as a sorted vertex tuple (deterministic)."""
    return max_clique_search(g).vertices


def clique_number(g: SimpleGraph) -> int:
    return len(max_clique(g))


def max_independent_set(g: SimpleGraph) -> tuple:
    return max_clique(g.complement())


def independence_number(g: SimpleGraph) -> int:
    return len(max_independent_set(g))


def is_clique(g: SimpleGraph, vertices) -> bool:
    vs = list(vertices)
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


@dataclass(frozen=True)
class TwoColorProfile:
    s_rb: int
    s_ry: int
    s_by: int
    witnesses: dict
    optimal: bool = True
    upper_bounds: dict | None = None

    @property
    def h2(self) -> int:
        return max(self.s_rb, self.s_ry, self.s_by)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.s_rb, self.s_ry, self.s_by)

    def best_witness(self) -> CliqueWitness:
        # first pair (rb, ry, by order) attaining the maximum
        for pair in COLOR_PAIRS:
            wit = self.witnesses[pair]
            if wit.size == self.h2:
                return wit
        raise AssertionError("unreachable")

    def to_dict(self) -> dict:
        d = {"s_rb": self.s_rb, "s_ry": self.s_ry, "s_by": self.s_by, "h2": self.h2,
             "optimal": self.optimal,
             "witness": self.best_witness().to_dict()}
        if not self.optimal:
            d["upper_bounds"] = {"".join(c.char for c in k): v for k, v in self.upper_bounds.items()}
        return d


def two_color_profile(c: EdgeColoring, budget: int | None = None) -> TwoColorProfile:
    """Largest clique for each pair of colors, with validated witnesses.

    ``budget`` caps the node count of each of the three clique searches; when
    any of them runs out the profile is marked non-optimal and carries the
    upper bounds.
    """
    sizes, wits, ubs = {}, {}, {}
    optimal = True
    for pair in COLOR_PAIRS:
        res = max_clique_search(color_class(c, pair), budget)
        wit = CliqueWitness(res.vertices, frozenset(pair)) if res.vertices else \
            CliqueWitness((), frozenset(pair))
        wit.validate(c)
        sizes[pair] = res.size
        wits[pair] = wit
        ubs[pair] = res.upper_bound
        optimal &= res.optimal
    R, B, Y = Color.R, Color.B, Color.Y
    return TwoColorProfile(sizes[(R, B)], sizes[(R, Y)], sizes[(B, Y)], wits, optimal,
                           None if optimal else ubs)


def h2_of_coloring(c: EdgeColoring) -> tuple[int, CliqueWitness]:
    """Largest two-colored clique of ``c``.

    For ``n < 3`` every vertex set is two-colored, so the answer is ``n``.
    """
    prof = two_color_profile(c)
    wit = prof.best_witness()
    # shrink the reported palette to the colors actually present
    used = c.colors_on(wit.vertices)
    if used and len(used) < len(wit.colors_used):
        wit = CliqueWitness(wit.vertices, used)
    return prof.h2, wit
