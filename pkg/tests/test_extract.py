import itertools
import random

import pytest
from hypothesis import assume, given, strategies as st

import oracles
from trichrome.catalog import avoiding_corpus
from trichrome.cliques import h2_of_coloring
from trichrome.constructions import blow_up, cyclic_k7, generate
from trichrome.core import (ALL_PERMUTATIONS, Color, ColorPermutation, EdgeColoring,
                            PatternFamily, PreconditionError, apply_color_permutation,
                            find_forbidden, sample_avoiding)
from trichrome.extract import (EXTRACTORS, blob_decomposition, degree2_bound, eps7,
                               extract_bipartite_red, extract_c7_structure, extract_degree2,
                               extract_disjoint_palettes, extract_dispatch, extract_mono_split,
                               extract_majority_neighborhood, extract_red_matching,
                               extract_sqrt, gallai_partition, red_clique_partition, route_for)

R, B, Y = Color.R, Color.B, Color.Y
F = PatternFamily.parse


def one(fam, n, seed=0):
    """A seeded avoiding coloring on exactly n vertices."""
    return next(avoiding_corpus(fam, 1, seed=seed, n_range=(n, n)))[2]


def mono(n, col):
    return EdgeColoring.uniform(n, col)


def _ok(out, c, at_least):
    out.witness.validate(c)
    assert out.size >= out.guarantee
    assert out.size >= at_least
    assert out.size <= h2_of_coloring(c)[0]


def test_sqrt_examples():
    _ok(extract_sqrt(mono(4, Y)), mono(4, Y), 4)
    c = generate(1, 9)[0]
    _ok(extract_sqrt(c), c, 3)
    c = one(F("rrb"), 16, 1)
    _ok(extract_sqrt(c), c, 4)


def test_red_matching_examples():
    _ok(extract_red_matching(mono(5, B)), mono(5, B), 5)
    fam = F("rrr,rrb,rry")
    pi = next(p for p in ALL_PERMUTATIONS if find_forbidden(apply_color_permutation(generate(15, 8)[0], p), fam) is None)
    c = apply_color_permutation(generate(15, 8)[0], pi)
    _ok(extract_red_matching(c), c, 4)
    c = one(fam, 11, 2)
    _ok(extract_red_matching(c), c, 6)


def test_bipartite_red_examples():
    fam = F("rrb,bbr,yyr")
    # red triangle on 0..2, red to the rest, yellow among the rest (yellow
    # crossings would close a yyr triangle)
    c = EdgeColoring.from_function(6, lambda i, j: R if i < 3 else Y)
    assert find_forbidden(c, fam) is None
    out = extract_bipartite_red(c, fam)
    _ok(out, c, 6)
    c = one(fam, 10, 4)
    _ok(extract_bipartite_red(c, fam), c, 5)
    fam = F("rrr,bbr,yyr")
    base = generate(15, 9)[0]
    pi = next(p for p in ALL_PERMUTATIONS if find_forbidden(apply_color_permutation(base, p), fam) is None)
    c = apply_color_permutation(base, pi)
    _ok(extract_bipartite_red(c, fam), c, 5)


def test_disjoint_palettes_examples():
    c = generate(16, 9)[0]
    _ok(extract_disjoint_palettes(c), c, 6)
    _ok(extract_disjoint_palettes(mono(7, Y)), mono(7, Y), 7)
    c = one(F("rrb,bbr,rby"), 12, 0)
    _ok(extract_disjoint_palettes(c), c, 7)


def test_degree2_examples():
    fam = F("rrr,bbb,rry")
    base = generate(12, 10)[0]
    pi = next(p for p in ALL_PERMUTATIONS if find_forbidden(apply_color_permutation(base, p), fam) is None)
    c = apply_color_permutation(base, pi)
    _ok(extract_degree2(c), c, 4)
    _ok(extract_degree2(mono(6, Y)), mono(6, Y), 6)
    c = one(fam, 9, 0)
    _ok(extract_degree2(c), c, 4)


def test_degree2_bound_versus_closed_form():
    closed = lambda n: 2 * (n // 5) + (0, 1, 2, 2, 2)[n % 5]
    for n in range(3, 60):
        if n % 5 == 2 and n >= 7:
            assert degree2_bound(n) == closed(n) - 1
        else:
            assert degree2_bound(n) == closed(n)


def test_majority_examples():
    fam = F("rrr,bbb,yyr")
    base = generate(13, 10)[0]
    pi = next(p for p in ALL_PERMUTATIONS if find_forbidden(apply_color_permutation(base, p), fam) is None)
    c = apply_color_permutation(base, pi)
    _ok(extract_majority_neighborhood(c, fam), c, 3)
    c = mono(7, R)
    out = extract_majority_neighborhood(c, F("rrb,bby,yyr"))
    assert out.size >= 6
    c = one(F("rrb,bby,yyr"), 13, 3)
    _ok(extract_majority_neighborhood(c, F("rrb,bby,yyr")), c, 4)
    with pytest.raises(ValueError):
        extract_majority_neighborhood(c, F("rrb,rry"))


def test_c7_examples():
    c = mono(10, B)
    _ok(extract_c7_structure(c), c, 10)
    c = generate(14, 14)[0]
    out = extract_c7_structure(c)
    _ok(out, c, 6)
    assert out.lemma_id == "c7:blow-up"
    c = generate(14, 9)[0]
    _ok(extract_c7_structure(c), c, 5)
    assert eps7(9) == 1


def test_mono_split_examples():
    k7 = apply_color_permutation(cyclic_k7(), ColorPermutation.swap(B, Y))
    assert find_forbidden(k7, F("rrb,bby,yyr")) is None
    out = extract_mono_split(k7)
    _ok(out, k7, 3)
    assert out.lemma_id == "mono-split:cyclic-k7"
    _ok(extract_mono_split(mono(9, R)), mono(9, R), 9)
    fam = F("rrb,bby,yyr")
    for seed in range(30):
        c = one(fam, 8, seed)
        out = extract_mono_split(c)
        _ok(out, c, 4)


def test_preconditions_are_checked():
    # a red path with a blue chord violates the degree-2 structure
    c = EdgeColoring.from_function(5, lambda i, j: R)
    with pytest.raises(PreconditionError):
        extract_degree2(c)
    with pytest.raises(PreconditionError):
        extract_disjoint_palettes(EdgeColoring(3, [R, B, Y]))


@pytest.mark.parametrize("name", sorted(EXTRACTORS))
def test_fuzz_small(name):
    fn, base = EXTRACTORS[name]
    fam = F(base)
    n_range = (5, 16) if name == "majority-rrr-bbb-yyy" else (5, 30)
    for n, kind, c in avoiding_corpus(fam, 40, seed=11, n_range=n_range):
        out = fn(c)
        out.witness.validate(c)
        assert out.size >= out.guarantee
        if n <= 12:
            assert out.size <= h2_of_coloring(c)[0]


@given(st.integers(0, 10**6), st.sampled_from(ALL_PERMUTATIONS))
def test_dispatch_is_frame_independent(seed, pi):
    fam = F("rrr,rrb,rry")
    c = one(fam, 9, seed)
    direct = extract_red_matching(c)
    moved = extract_dispatch(apply_color_permutation(c, pi), fam.permuted(pi))
    assert moved.size == direct.size
    moved.witness.validate(apply_color_permutation(c, pi))


def test_dispatch_routes():
    assert route_for(F("rrb"))[0] == "sqrt"
    assert route_for(F("bbb,bbr,bby"))[0] == "red-matching"
    assert route_for(F("bbr,bby,rby")) is None
    c = one(F("bbr,bby,rby"), 8, 0)
    out = extract_dispatch(c, F("bbr,bby,rby"))
    assert out.lemma_id == "fallback:profile" and out.guarantee == 2 and out.size >= 2
    with pytest.raises(PreconditionError):
        extract_dispatch(mono(5, R), F("rrr"))


def test_blob_examples():
    c = generate(16, 7)[0]
    bp = blob_decomposition(c)
    sizes = sorted(len(p) for p in bp.parts)
    assert sizes == [1, 1, 1, 4]
    assert bp.crossing_colors() <= {B, Y}
    assert len(blob_decomposition(mono(6, R)).parts) == 1
    c = one(F("rby"), 9, 0)
    bp = blob_decomposition(c)
    for (i, j), col in bp.between_colors.items():
        assert {c.color(a, b) for a in bp.parts[i] for b in bp.parts[j]} == {col}


def _valid_gallai(c, bp):
    assert sorted(v for p in bp.parts for v in p) == list(range(c.n))
    assert len(bp.parts) >= 2 and len(bp.crossing_colors()) <= 2
    for (i, j), col in bp.between_colors.items():
        assert {c.color(a, b) for a in bp.parts[i] for b in bp.parts[j]} == {col}


def _exhaustive_gallai_exists(c):
    def partitions(items):
        if not items:
            yield []
            return
        for sub in partitions(items[1:]):
            for i in range(len(sub)):
                yield sub[:i] + [sub[i] + [items[0]]] + sub[i + 1:]
            yield [[items[0]]] + sub
    for parts in partitions(list(range(c.n))):
        if len(parts) < 2:
            continue
        cols = set()
        ok = True
        for p, q in itertools.combinations(parts, 2):
            s = {c.color(a, b) for a in p for b in q}
            if len(s) != 1:
                ok = False
                break
            cols |= s
        if ok and len(cols) <= 2:
            return True
    return False


def test_gallai_examples():
    c = generate(16, 9)[0]
    bp = gallai_partition(c)
    assert sorted(map(len, bp.parts)) == [4, 5] and bp.crossing_colors() == {Y}
    outer = EdgeColoring(3, [R, B, B])
    rng = random.Random(0)
    inner = [sample_avoiding(k, F("rby"), seed=rng.randrange(99)) for k in (2, 3, 4)]
    c = blow_up(outer, [2, 3, 4], inner)
    _valid_gallai(c, gallai_partition(c))
    for seed in range(5):
        c = one(F("rby"), 8, seed)
        _valid_gallai(c, gallai_partition(c))
        assert _exhaustive_gallai_exists(c)
    with pytest.raises(PreconditionError):
        gallai_partition(EdgeColoring(3, [R, B, Y]))


@given(st.integers(0, 10**6), st.integers(2, 10))
def test_gallai_on_random_rainbow_free(seed, n):
    c = sample_avoiding(n, F("rby"), seed=seed, budget=20_000)
    assume(c is not None)
    _valid_gallai(c, gallai_partition(c))


def test_red_clique_partition():
    fam = F("rrb,bby,rby")
    for seed in range(10):
        c = one(fam, 10, seed)
        rp = red_clique_partition(c, fam)
        assert sorted(v for p in rp.parts for v in p) == list(range(10))
        for p in rp.parts:
            assert all(c.color(a, b) == R for a, b in itertools.combinations(p, 2))
        assert set(rp.types) <= {"I", "II"}
