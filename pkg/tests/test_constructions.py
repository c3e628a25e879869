import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from strategies import colorings, graphs
from trichrome.cliques import h2_of_coloring, two_color_profile
from trichrome.constructions import (SPECS, ProviderRequest, balanced_sizes,
                                     blow_up, c5_split, construction14_schedule, cyclic_k7,
                                     generate, pack_copy, provider, verify_claims)
from trichrome.core import Color, EdgeColoring, SimpleGraph, find_forbidden

R, B, Y = Color.R, Color.B, Color.Y
SEEDED = [i for i, s in SPECS.items() if s.needs_seed]
FIXED = [i for i, s in SPECS.items() if not s.needs_seed]


def test_seventeen_specs():
    assert sorted(SPECS) == list(range(1, 18))
    assert sorted(FIXED) == [1, 7, 12, 13, 14, 15, 16]


@pytest.mark.parametrize("cid", sorted(SPECS))
@pytest.mark.parametrize("n", [3, 4, 7, 9, 16, 31])
def test_generated_colorings_avoid_their_patterns(cid, n):
    spec = SPECS[cid]
    if n < spec.min_n:
        with pytest.raises(ValueError):
            generate(cid, n, 0)
        return
    c, _ = generate(cid, n, 0 if spec.needs_seed else None)
    assert c.n == n
    assert find_forbidden(c, spec.avoided) is None


@pytest.mark.parametrize("cid", SEEDED)
def test_seeded_constructions_are_reproducible(cid):
    a = generate(cid, 20, 5)[0]
    assert generate(cid, 20, 5)[0] == a
    with pytest.raises(ValueError):
        generate(cid, 20)


@pytest.mark.parametrize("cid", FIXED)
def test_deterministic_constructions_ignore_seed(cid):
    n = max(12, SPECS[cid].min_n)
    assert generate(cid, n)[0] == generate(cid, n, 99)[0]


def test_unknown_id():
    with pytest.raises(ValueError):
        generate(18, 10)


def test_grid_at_nine_is_three_red_triangles():
    c, spec = generate(1, 9)
    red = nx.Graph([(i, j) for i, j in itertools.combinations(range(9), 2) if c.color(i, j) == R])
    assert sorted(len(k) for k in nx.connected_components(red)) == [3, 3, 3]
    assert all(len(k) == 3 for k in nx.find_cliques(red))
    assert h2_of_coloring(c)[0] == 3


def test_named_examples():
    assert h2_of_coloring(generate(14, 7)[0])[0] == 3
    assert generate(14, 7)[0] == cyclic_k7()
    c16 = generate(16, 9)[0]
    assert h2_of_coloring(c16)[0] == 6
    assert sum(1 for i, j in itertools.combinations(range(9), 2) if c16.color(i, j) == R) == 10


def test_construction13_at_ten_exceeds_the_formula():
    # below its validity floor the bound 2*ceil(n/5) does not hold
    c, spec = generate(13, 10)
    assert h2_of_coloring(c)[0] == 5 > spec.bound(10) == 4
    assert spec.validity_floor == 11


def test_c14_schedules():
    for n in range(7, 70):
        sizes = construction14_schedule(n)
        assert sum(sizes) == n and max(sizes) - min(sizes) <= 1
    assert construction14_schedule(9) == [2, 1, 2, 1, 1, 1, 1]


def test_blow_up_basics():
    outer = EdgeColoring.uniform(2, Y)
    two_red = EdgeColoring.uniform(2, R)
    c = blow_up(outer, [2, 2], [two_red, two_red])
    assert sorted(c.codes) == [R, R, Y, Y, Y, Y]
    assert two_color_profile(c).s_ry == 4
    inner = c5_split()
    assert blow_up(EdgeColoring.uniform(1, R), [5], [inner]) == inner
    with pytest.raises(ValueError):
        blow_up(outer, [2], [two_red])
    with pytest.raises(ValueError):
        blow_up(outer, [0, 2], R)


@given(colorings(max_n=7))
def test_blow_up_of_singletons_is_identity(c):
    assert blow_up(c, [1] * c.n, None) == c


@given(colorings(max_n=4), colorings(max_n=4))
def test_product_law(outer, inner):
    big = blow_up(outer, [inner.n] * outer.n, [inner if inner.n > 1 else None] * outer.n)
    po, pi, pb = (two_color_profile(x).as_tuple() for x in (outer, inner, big))
    assert pb == tuple(a * b for a, b in zip(po, pi))


def test_balanced_sizes():
    s = balanced_sizes(10, 3)
    assert sum(s) == 10 and max(s) - min(s) <= 1


def test_providers():
    res = provider(ProviderRequest("triangle-free-low-alpha", 5))
    assert nx.is_isomorphic(nx.Graph(res.graph.edges()), nx.cycle_graph(5))
    res = provider(ProviderRequest("no-mono-clique-2logk", 5))
    assert res.coloring is not None and two_color_profile(res.coloring).as_tuple()[0] == 5
    for col in (R, B):
        g = nx.Graph([(i, j) for i, j in itertools.combinations(range(5), 2)
                      if res.coloring.color(i, j) == col])
        assert nx.is_isomorphic(g, nx.cycle_graph(5))
    big = provider(ProviderRequest("triangle-free-low-alpha", 40, seed=2))
    assert big.graph.is_triangle_free()
    assert "alpha" in big.metrics
    with pytest.raises(ValueError):
        provider(ProviderRequest("triangle-free-low-alpha", 0))


def test_pack_copy_examples():
    sigma, ov = pack_copy(SimpleGraph.empty(4))
    assert ov == 0
    matching = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    sigma, ov = pack_copy(matching, seed=1)
    assert ov == 0
    sigma, ov = pack_copy(SimpleGraph.cycle(5), seed=1)
    assert ov <= 2
    with pytest.raises(ValueError):
        pack_copy(SimpleGraph.empty(1))


@given(graphs(min_n=2, max_n=9), st.integers(0, 50))
def test_pack_copy_overlap_bound(g, seed):
    sigma, ov = pack_copy(g, seed=seed)
    assert sorted(sigma) == list(range(g.n))
    assert ov == sum(1 for u, v in g.edges() if g.has_edge(sigma[u], sigma[v]))
    assert ov <= g.num_edges ** 2 // math.comb(g.n, 2)


@pytest.mark.parametrize("cid,lo,hi", [(1, 3, 40), (12, 11, 40), (13, 11, 40), (14, 7, 40),
                                       (15, 3, 40), (16, 3, 40)])
def test_verify_claims_exact_bounds(cid, lo, hi):
    rep = verify_claims(cid, range(lo, hi + 1))
    assert rep["ok"], rep["failures"]
    assert all(r["avoiding"] for r in rep["rows"])


def test_verify_claims_reports_orders_for_random_constructions():
    rep = verify_claims(3, [20, 30], seed=1, clique_budget=10_000)
    assert rep["ok"]
    assert all("order" in r for r in rep["rows"])
