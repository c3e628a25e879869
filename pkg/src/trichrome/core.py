"""Value types for 3-edge-colored complete graphs and the primitives built on them.

Colorings are stored as a flat upper-triangular byte string; index of the pair
``(i, j)`` with ``i < j`` is ``i*n - i*(i+1)//2 + (j - i - 1)``. Graphs use one
Python ``int`` per vertex as an adjacency bitset.
"""
from __future__ import annotations

import enum
import itertools
import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np


class TrichromeError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(TrichromeError, ValueError):
    """An input violated a structural precondition.

    ``detail`` carries the offending object (a triangle, a cycle, a vertex).
    """

    def __init__(self, message: str, detail=None):
        super().__init__(message)
        self.detail = detail


class InfeasibleError(TrichromeError):
    """A complete search proved that no avoiding coloring exists."""


class ParseError(TrichromeError, ValueError):
    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.offset = offset


class Color(enum.IntEnum):
    R = 0
    B = 1
    Y = 2

    @property
    def char(self) -> str:
        return "rby"[self]

    @classmethod
    def from_char(cls, ch: str) -> "Color":
        try:
            return cls("rby".index(ch.lower()))
        except ValueError:
            raise ValueError(f"unknown color {ch!r}; expected one of r, b, y") from None

    def __repr__(self) -> str:
        return f"Color.{self.name}"


COLORS = (Color.R, Color.B, Color.Y)
COLOR_PAIRS = ((Color.R, Color.B), (Color.R, Color.Y), (Color.B, Color.Y))


@dataclass(frozen=True, order=True)
class TrianglePattern:
    """A multiset of three edge colors, kept sorted under R < B < Y."""

    colors: tuple

    def __post_init__(self):
        if len(self.colors) != 3:
            raise ValueError("a triangle pattern has exactly three colors")
        object.__setattr__(self, "colors", tuple(sorted(Color(c) for c in self.colors)))

    @classmethod
    def parse(cls, text: str) -> "TrianglePattern":
        text = text.strip()
        if len(text) != 3:
            raise ValueError(f"pattern {text!r} must have three letters")
        return cls(tuple(Color.from_char(ch) for ch in text))

    @property
    def is_monochromatic(self) -> bool:
        return self.colors[0] == self.colors[2]

    @property
    def is_rainbow(self) -> bool:
        return len(set(self.colors)) == 3

    @property
    def majority(self) -> Color | None:
        """The color on at least two edges; ``None`` for the rainbow pattern."""
        if self.is_rainbow:
            return None
        return self.colors[1]

    @property
    def minority(self) -> Color | None:
        if self.is_rainbow:
            return None
        a, b, c = self.colors
        return c if a == b else a

    def permuted(self, pi: "ColorPermutation") -> "TrianglePattern":
        return TrianglePattern(tuple(pi(c) for c in self.colors))

    def __str__(self) -> str:
        # majority-first spelling, e.g. "yyr" rather than "ryy"
        if self.is_rainbow or self.is_monochromatic:
            return "".join(c.char for c in self.colors)
        maj, mino = self.majority, self.minority
        return maj.char * 2 + mino.char

    def __repr__(self) -> str:
        return f"TrianglePattern({str(self)!r})"


ALL_PATTERNS = tuple(
    sorted({TrianglePattern(t) for t in itertools.combinations_with_replacement(COLORS, 3)})
)


@dataclass(frozen=True, order=True)
class PatternFamily:
    """A set of one to three distinct triangle patterns."""

    patterns: tuple

    def __post_init__(self):
        pats = tuple(sorted(set(self.patterns)))
        if len(pats) != len(self.patterns):
            raise ValueError("duplicate patterns in family")
        if not 1 <= len(pats) <= 3:
            raise ValueError(f"families have 1 to 3 patterns, got {len(pats)}")
        object.__setattr__(self, "patterns", pats)

    @classmethod
    def parse(cls, text: str) -> "PatternFamily":
        """Parse a comma-separated list such as ``"rrb,yyr"`` (case-insensitive)."""
        parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
        return cls(tuple(TrianglePattern.parse(p) for p in parts))

    @classmethod
    def of(cls, *names: str) -> "PatternFamily":
        return cls(tuple(TrianglePattern.parse(p) for p in names))

    def permuted(self, pi: "ColorPermutation") -> "PatternFamily":
        return PatternFamily(tuple(p.permuted(pi) for p in self.patterns))

    def __iter__(self) -> Iterator[TrianglePattern]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __contains__(self, p) -> bool:
        return p in self.patterns

    def issubset(self, other: "PatternFamily") -> bool:
        return set(self.patterns) <= set(other.patterns)

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.patterns) + "}"

    def spec(self) -> str:
        """Comma-separated form accepted by :meth:`parse`."""
        return ",".join(str(p) for p in self.patterns)


def parse_patterns(text: str) -> tuple:
    """Any number of distinct patterns, e.g. the full avoided set of a construction."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    pats = tuple(sorted({TrianglePattern.parse(p) for p in parts}))
    if len(pats) != len(parts):
        raise ValueError("duplicate patterns")
    return pats


@dataclass(frozen=True)
class ColorPermutation:
    """Bijection of {R, B, Y}; ``images[c]`` is the image of color ``c``."""

    images: tuple

    def __post_init__(self):
        imgs = tuple(Color(c) for c in self.images)
        if sorted(imgs) != list(COLORS):
            raise ValueError(f"not a permutation of colors: {self.images}")
        object.__setattr__(self, "images", imgs)

    def __call__(self, c: Color) -> Color:
        return self.images[c]

    def compose(self, other: "ColorPermutation") -> "ColorPermutation":
        """``self ∘ other``: apply ``other`` first."""
        return ColorPermutation(tuple(self.images[other.images[c]] for c in COLORS))

    def inverse(self) -> "ColorPermutation":
        inv = [Color.R] * 3
        for c, img in zip(COLORS, self.images):
            inv[img] = c
        return ColorPermutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return self.images == COLORS

    @classmethod
    def identity(cls) -> "ColorPermutation":
        return cls(COLORS)

    @classmethod
    def swap(cls, a: Color, b: Color) -> "ColorPermutation":
        imgs = list(COLORS)
        imgs[a], imgs[b] = imgs[b], imgs[a]
        return cls(tuple(imgs))

    @classmethod
    def parse(cls, text: str) -> "ColorPermutation":
        """``"byr"`` maps r->b, b->y, y->r."""
        return cls(tuple(Color.from_char(ch) for ch in text))

    def __str__(self) -> str:
        return "".join(c.char for c in self.images)


ALL_PERMUTATIONS = tuple(ColorPermutation(p) for p in itertools.permutations(COLORS))


def pair_index(n: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


class EdgeColoring:
    """An immutable 3-edge-coloring of the complete graph on ``n`` vertices."""

    __slots__ = ("n", "codes", "__dict__")

    def __init__(self, n: int, codes):
        if n < 1:
            raise ValueError("a coloring needs at least one vertex")
        codes = bytes(int(c) for c in codes)
        if len(codes) != n * (n - 1) // 2:
            raise ValueError(f"expected {n * (n - 1) // 2} edge colors for n={n}, got {len(codes)}")
        if any(c > 2 for c in codes):
            raise ValueError("edge colors must be 0, 1 or 2")
        self.n = n
        self.codes = codes

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], Color]) -> "EdgeColoring":
        return cls(n, [fn(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def uniform(cls, n: int, color: Color) -> "EdgeColoring":
        return cls(n, [color] * (n * (n - 1) // 2))

    @classmethod
    def from_matrix(cls, m) -> "EdgeColoring":
        m = np.asarray(m)
        n = m.shape[0]
        iu = np.triu_indices(n, 1)
        upper, lower = m[iu], m.T[iu]
        if not np.array_equal(upper, lower):
            raise ValueError("color matrix is not symmetric")
        return cls(n, upper.tolist())

    def color(self, i: int, j: int) -> Color:
        if i == j:
            raise ValueError("self-loops carry no color")
        return Color(self.codes[pair_index(self.n, i, j)])

    @cached_property
    def matrix(self) -> np.ndarray:
        """Symmetric ``n x n`` int8 matrix of colors, ``-1`` on the diagonal."""
        m = np.full((self.n, self.n), -1, dtype=np.int8)
        iu = np.triu_indices(self.n, 1)
        vals = np.frombuffer(self.codes, dtype=np.uint8).astype(np.int8)
        m[iu] = vals
        m.T[iu] = vals
        return m

    @cached_property
    def masks(self) -> tuple:
        """``masks[color][v]``: bitset of the ``color``-neighbours of ``v``."""
        n = self.n
        out = [[0] * n for _ in range(3)]
        k = 0
        codes = self.codes
        for i in range(n):
            for j in range(i + 1, n):
                c = codes[k]
                k += 1
                out[c][i] |= 1 << j
                out[c][j] |= 1 << i
        return tuple(tuple(row) for row in out)

    def neighbors(self, v: int, color: Color) -> list[int]:
        return bits(self.masks[color][v])

    def degree(self, v: int, color: Color) -> int:
        return self.masks[color][v].bit_count()

    def induced(self, vertices: Sequence[int]) -> "EdgeColoring":
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("repeated vertices")
        return EdgeColoring(len(vs), [self.color(vs[a], vs[b])
                                      for a in range(len(vs)) for b in range(a + 1, len(vs))])

    def relabeled(self, perm: Sequence[int]) -> "EdgeColoring":
        """Vertex ``v`` of the result is vertex ``perm[v]`` of ``self``."""
        return self.induced(perm)

    def colors_on(self, vertices: Iterable[int]) -> frozenset:
        vs = list(vertices)
        return frozenset(self.color(a, b) for a, b in itertools.combinations(vs, 2))

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeColoring) and self.n == other.n and self.codes == other.codes

    def __hash__(self) -> int:
        return hash((self.n, self.codes))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, {self.to_string()!r})"

    def to_string(self) -> str:
        return "".join("rby"[c] for c in self.codes)

    def to_text(self) -> str:
        """Serialize as ``n=<int>`` followed by one row of the upper triangle per line."""
        lines = [f"n={self.n}"]
        s = self.to_string()
        pos = 0
        for i in range(self.n - 1):
            width = self.n - 1 - i
            lines.append(s[pos:pos + width])
            pos += width
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "EdgeColoring":
        lines = text.splitlines()
        n, start = _parse_header(lines)
        chars = []
        for lineno in range(start, len(lines)):
            for off, ch in enumerate(lines[lineno]):
                if ch.isspace():
                    continue
                if ch.lower() not in "rby":
                    raise ParseError(f"unexpected character {ch!r}", line=lineno + 1, offset=off)
                chars.append("rby".index(ch.lower()))
        need = n * (n - 1) // 2
        if len(chars) != need:
            raise ParseError(f"expected {need} edge colors for n={n}, found {len(chars)}",
                             line=len(lines))
        return cls(n, chars)


def _parse_header(lines: list[str]) -> tuple[int, int]:
    for idx, line in enumerate(lines):
        s = line.strip()
        if not s:
            continue
        m = re.fullmatch(r"n\s*=\s*(\d+)", s)
        if not m:
            raise ParseError("expected header 'n=<int>'", line=idx + 1, offset=0)
        n = int(m.group(1))
        if n < 1:
            raise ParseError("n must be positive", line=idx + 1)
        return n, idx + 1
    raise ParseError("empty input", line=1)


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class SimpleGraph:
    """Undirected simple graph on ``range(n)`` with bitset adjacency."""

    __slots__ = ("n", "adj", "__dict__")

    def __init__(self, n: int, adj: Sequence[int]):
        adj = tuple(int(a) for a in adj)
        if len(adj) != n:
            raise ValueError("adjacency length must equal n")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if a & ~full:
                raise ValueError(f"neighbour out of range at {v}")
            for u in bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(self.n, [full & ~a & ~(1 << v) for v, a in enumerate(self.adj)])

    def square(self) -> "SimpleGraph":
        """Vertices adjacent iff at distance at most 2."""
        out = []
        for v, a in enumerate(self.adj):
            reach = a
            for u in bits(a):
                reach |= self.adj[u]
            out.append(reach & ~(1 << v))
        return SimpleGraph(self.n, out)

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return SimpleGraph.from_edges(
            len(vs), [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos])

    def relabeled(self, perm: Sequence[int]) -> "SimpleGraph":
        """Edge ``{perm[u], perm[v]}`` for every edge ``{u, v}``."""
        return SimpleGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def find_triangle(self) -> tuple[int, int, int] | None:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                common = self.adj[u] & self.adj[v] & ~((1 << (v + 1)) - 1)
                if common:
                    return (u, v, (common & -common).bit_length() - 1)
        return None

    def is_triangle_free(self) -> bool:
        return self.find_triangle() is None

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(bits(comp))
        return comps

    def __eq__(self, other) -> bool:
        return isinstance(other, SimpleGraph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"

    def to_text(self) -> str:
        return "\n".join([f"n={self.n}"] + [f"{u} {v}" for u, v in self.edges()]) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SimpleGraph":
        lines = text.splitlines()
        n, start = _parse_header(lines)
        edges = []
        for lineno in range(start, len(lines)):
            s = lines[lineno].strip()
            if not s:
                continue
            m = re.fullmatch(r"(\d+)\s+(\d+)", s)
            if not m:
                raise ParseError(f"expected 'i j', got {s!r}", line=lineno + 1, offset=0)
            u, v = int(m.group(1)), int(m.group(2))
            if u >= n or v >= n or u == v:
                raise ParseError(f"invalid edge {u} {v} for n={n}", line=lineno + 1)
            edges.append((u, v))
        return cls.from_edges(n, edges)


@dataclass(frozen=True)
class CliqueWitness:
    """A vertex set together with the at most two colors it spans."""

    vertices: tuple
    colors_used: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "colors_used", frozenset(Color(c) for c in self.colors_used))
        if len(self.colors_used) > 2:
            raise ValueError("a two-colored clique uses at most two colors")

    @classmethod
    def of(cls, c: EdgeColoring, vertices: Iterable[int]) -> "CliqueWitness":
        vs = sorted(set(vertices))
        return cls(tuple(vs), c.colors_on(vs))

    @property
    def size(self) -> int:
        return len(self.vertices)

    def validate(self, c: EdgeColoring) -> None:
        vs = self.vertices
        if any(v < 0 or v >= c.n for v in vs):
            raise PreconditionError("witness vertex out of range", vs)
        if len(set(vs)) != len(vs):
            raise PreconditionError("repeated witness vertex", vs)
        for a, b in itertools.combinations(vs, 2):
            if c.color(a, b) not in self.colors_used:
                raise PreconditionError(
                    f"edge {a}-{b} has color {c.color(a, b).char} outside {sorted(x.char for x in self.colors_used)}",
                    (a, b))

    def is_valid(self, c: EdgeColoring) -> bool:
        try:
            self.validate(c)
        except PreconditionError:
            return False
        return True

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices),
                "colors_used": "".join(c.char for c in sorted(self.colors_used))}


def triangle_pattern(c: EdgeColoring, u: int, v: int, w: int) -> TrianglePattern:
    for x in (u, v, w):
        if not 0 <= x < c.n:
            raise ValueError(f"vertex {x} out of range for n={c.n}")
    if len({u, v, w}) != 3:
        raise ValueError("triangle vertices must be distinct")
    return TrianglePattern((c.color(u, v), c.color(u, w), c.color(v, w)))


def _bad_pairs(p: TrianglePattern) -> list[tuple[Color, tuple[Color, Color]]]:
    """All (edge color, (color to k from one end, color to k from the other)) realising p."""
    out = []
    for perm in set(itertools.permutations(p.colors)):
        out.append((perm[0], (perm[1], perm[2])))
    return out


def contains_pattern(c: EdgeColoring, p: TrianglePattern) -> tuple[int, int, int] | None:
    """Return a triangle ``(u, v, w)`` colored as ``p``, or ``None``."""
    if c.n < 3:
        return None
    masks = c.masks
    n = c.n
    for u in range(n):
        for v in range(u + 1, n):
            cuv = c.color(u, v)
            above = ~((1 << (v + 1)) - 1)
            for x, (a, b) in _bad_pairs(p):
                if x != cuv:
                    continue
                common = masks[a][u] & masks[b][v] & above
                if common:
                    return (u, v, (common & -common).bit_length() - 1)
    return None


def find_forbidden(c: EdgeColoring, family: PatternFamily) -> tuple[TrianglePattern, tuple] | None:
    for p in family:
        t = contains_pattern(c, p)
        if t is not None:
            return p, t
    return None


def is_avoiding(c: EdgeColoring, family: PatternFamily) -> bool:
    return find_forbidden(c, family) is None


def require_avoiding(c: EdgeColoring, family: PatternFamily) -> None:
    hit = find_forbidden(c, family)
    if hit is not None:
        p, t = hit
        raise PreconditionError(f"coloring contains forbidden pattern {p} on triangle {t}", t)


def color_class(c: EdgeColoring, colors: Iterable[Color]) -> SimpleGraph:
    cs = {Color(x) for x in colors}
    if not cs:
        raise ValueError("color set must be nonempty")
    masks = c.masks
    adj = [0] * c.n
    for col in cs:
        for v in range(c.n):
            adj[v] |= masks[col][v]
    return SimpleGraph(c.n, adj)


def apply_color_permutation(c: EdgeColoring, pi: ColorPermutation) -> EdgeColoring:
    table = bytes(pi.images) + bytes(range(3, 256))
    return EdgeColoring(c.n, c.codes.translate(table))


def forbidden_table(family: PatternFamily) -> tuple:
    """``table[x]`` lists color pairs ``(a, b)`` such that edge color ``x`` with
    colors ``a`` (from one endpoint) and ``b`` (from the other) to a common
    vertex closes a forbidden triangle."""
    table = [set() for _ in range(3)]
    for p in family:
        for x, ab in _bad_pairs(p):
            table[x].add(ab)
    return tuple(tuple(sorted(s)) for s in table)


def sample_avoiding(n: int, family: PatternFamily, seed: int = 0,
                    budget: int = 200_000) -> EdgeColoring | None:
    """Randomized backtracking for an ``family``-avoiding coloring of ``K_n``.

    Edges are visited in a seeded random order and each edge tries the three
    colors in a seeded random order. Returns ``None`` when ``budget`` nodes are
    exhausted and raises :class:`InfeasibleError` when the search space is
    fully explored without success. The output is deterministic in
    ``(n, family, seed)`` but is not uniform over avoiding colorings.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(edges)
    orders = [rng.sample(COLORS, 3) for _ in edges]
    bad = forbidden_table(family)
    nb = [[0] * n for _ in range(3)]
    chosen = [0] * len(edges)
    nodes = 0

    def ok(i, j, x):
        for a, b in bad[x]:
            if nb[a][i] & nb[b][j]:
                return False
        return True

    # iterative DFS; choice[k] indexes into orders[k]
    choice = [-1] * len(edges)
    k = 0
    m = len(edges)
    while 0 <= k < m:
        i, j = edges[k]
        if choice[k] >= 0:
            x = orders[k][choice[k]]
            nb[x][i] &= ~(1 << j)
            nb[x][j] &= ~(1 << i)
        placed = False
        while choice[k] < 2:
            choice[k] += 1
            x = orders[k][choice[k]]
            nodes += 1
            if ok(i, j, x):
                nb[x][i] |= 1 << j
                nb[x][j] |= 1 << i
                chosen[k] = x
                placed = True
                break
        if nodes > budget:
            return None
        if placed:
            k += 1
        else:
            choice[k] = -1
            k -= 1
    if k < 0:
        raise InfeasibleError(f"no {family}-avoiding coloring of K_{n}")
    col = {e: x for e, x in zip(edges, chosen)}
    return EdgeColoring(n, [col[(i, j)] for i in range(n) for j in range(i + 1, n)])
