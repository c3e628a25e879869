"""Pattern families up to color permutation: canonical forms, orbits, stabilizers."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .core import (ALL_PATTERNS, ALL_PERMUTATIONS, ColorPermutation, PatternFamily,
                   TrianglePattern)

__all__ = [
    "ColorPermutation", "OrbitCatalog", "canonical_family", "enumerate_orbits",
    "family_stabilizer", "all_canonical_families", "PRINTED_LISTS",
]


def _key(f: PatternFamily) -> tuple:
    return tuple(p.colors for p in f.patterns)


@lru_cache(maxsize=None)
def canonical_family(family: PatternFamily) -> tuple[PatternFamily, ColorPermutation]:
    """Lexicographically least image of ``family`` under the six color permutations.

    Returns the representative and the first permutation (in a fixed order,
    identity first) that maps ``family`` onto it.
    """
    best, best_pi = None, None
    for pi in ALL_PERMUTATIONS:
        img = family.permuted(pi)
        if best is None or _key(img) < _key(best):
            best, best_pi = img, pi
    return best, best_pi


@lru_cache(maxsize=None)
def family_stabilizer(family: PatternFamily) -> frozenset:
    return frozenset(pi for pi in ALL_PERMUTATIONS if family.permuted(pi) == family)


@dataclass(frozen=True)
class OrbitCatalog:
    k: int
    representatives: tuple
    member_map: dict = field(repr=False, compare=False)

    def orbit_size(self, rep: PatternFamily) -> int:
        return 6 // len(family_stabilizer(rep))

    def members(self, rep: PatternFamily) -> list[PatternFamily]:
        return [f for f, r in self.member_map.items() if r == rep]


@lru_cache(maxsize=None)
def enumerate_orbits(k: int) -> OrbitCatalog:
    if k not in (1, 2, 3):
        raise ValueError(f"family size must be 1, 2 or 3, got {k}")
    member_map = {}
    reps = set()
    for combo in itertools.combinations(ALL_PATTERNS, k):
        fam = PatternFamily(combo)
        rep, _ = canonical_family(fam)
        member_map[fam] = rep
        reps.add(rep)
    return OrbitCatalog(k, tuple(sorted(reps, key=_key)), member_map)


def all_canonical_families() -> list[PatternFamily]:
    return [rep for k in (1, 2, 3) for rep in enumerate_orbits(k).representatives]


def _fams(*groups: str) -> tuple:
    return tuple(PatternFamily.parse(g) for g in groups)


# Reference representative lists for each family size, each in its own color
# frame (not necessarily our canonical frame).
PRINTED_LISTS = {
    1: _fams("rrr", "rrb", "rby"),
    2: _fams("rrb,rry", "rrb,bbr", "rrb,bby", "rry,bby", "rrb,rby",
             "rrr,bby", "rrr,bbr", "rrr,rrb", "rrr,bbb", "rrr,rby"),
    3: _fams("rrb,rry,bbr", "rrb,rry,bby", "rrb,bbr,yyr", "rrb,bby,yyr",
             "rrb,rry,rby", "rrb,bbr,rby", "rry,bby,rby", "rrb,bby,rby",
             "rrr,bbb,yyy", "rrr,bbb,rrb", "rrr,bbb,rry", "rrr,bbb,yyr",
             "rrr,rrb,rry", "rrr,rrb,bbr", "rrr,rrb,bby", "rrr,rrb,yyr",
             "rrr,rrb,yyb", "rrr,bbr,bby", "rrr,bbr,yyr", "rrr,bbr,yyb",
             "rrr,bby,yyb",
             "rby,rrr,bbb", "rby,rrr,rrb", "rby,rrr,bbr", "rby,rrr,bby"),
}
