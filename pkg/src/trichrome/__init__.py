"""Three-edge-colorings of complete graphs avoiding triangle patterns.

Submodules: ``core`` (colorings, patterns, graphs), ``patterns`` (families up
to color permutation), ``cliques`` (two-colored clique solver),
``constructions`` (avoiding colorings with small h2), ``exact`` (exhaustive
search for h2(n, F), f(n), g(n)), ``extract`` (certified witnesses) and
``catalog`` (known values and their verification).
"""
__version__ = "0.1.0"

from .core import (Color, ColorPermutation, CliqueWitness, EdgeColoring, PatternFamily,
                   SimpleGraph, TrianglePattern, find_forbidden, is_avoiding, sample_avoiding)
from .patterns import canonical_family, enumerate_orbits
from .cliques import h2_of_coloring, two_color_profile
from .constructions import SPECS, generate
from .exact import exact_h2, f_exact, g_exact
from .extract import extract_dispatch

__all__ = [
    "Color", "ColorPermutation", "CliqueWitness", "EdgeColoring", "PatternFamily", "SimpleGraph",
    "TrianglePattern", "find_forbidden", "is_avoiding", "sample_avoiding", "canonical_family",
    "enumerate_orbits", "h2_of_coloring", "two_color_profile", "SPECS", "generate", "exact_h2",
    "f_exact", "g_exact", "extract_dispatch",
]
