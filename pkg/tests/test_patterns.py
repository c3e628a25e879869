import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

import oracles
from strategies import families
from trichrome.core import ALL_PATTERNS, ALL_PERMUTATIONS, PatternFamily
from trichrome.patterns import (PRINTED_LISTS, all_canonical_families, canonical_family,
                                enumerate_orbits, family_stabilizer)


@pytest.mark.parametrize("k,count", [(1, 3), (2, 10), (3, 25)])
def test_orbit_counts(k, count):
    cat = enumerate_orbits(k)
    assert len(cat.representatives) == count == oracles.burnside_orbit_count(k)
    assert sum(cat.orbit_size(r) for r in cat.representatives) == comb(10, k)
    for r in cat.representatives:
        assert len(cat.members(r)) == cat.orbit_size(r)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_catalog_matches_printed_lists(k):
    printed = {canonical_family(f)[0] for f in PRINTED_LISTS[k]}
    assert len(printed) == len(PRINTED_LISTS[k])
    assert printed == set(enumerate_orbits(k).representatives)


def test_every_subset_maps_to_one_representative():
    for k in (1, 2, 3):
        cat = enumerate_orbits(k)
        for combo in itertools.combinations(ALL_PATTERNS, k):
            fam = PatternFamily(combo)
            rep, pi = canonical_family(fam)
            assert fam.permuted(pi) == rep
            assert cat.member_map[fam] == rep
    assert len(all_canonical_families()) == 38


@given(families(), st.sampled_from(ALL_PERMUTATIONS))
def test_canonical_form_is_invariant(fam, pi):
    assert canonical_family(fam.permuted(pi))[0] == canonical_family(fam)[0]


@given(families())
def test_stabilizer_is_a_subgroup(fam):
    stab = family_stabilizer(fam)
    assert any(p.is_identity for p in stab)
    for p, q in itertools.product(stab, repeat=2):
        assert p.compose(q) in stab
    assert 6 % len(stab) == 0


def test_known_stabilizers():
    assert len(family_stabilizer(PatternFamily.parse("rrr,bbb,yyy"))) == 6
    assert len(family_stabilizer(PatternFamily.parse("rby"))) == 6
    assert len(family_stabilizer(PatternFamily.parse("rrb"))) == 1
    assert len(family_stabilizer(PatternFamily.parse("rrb,bbr"))) == 2


def test_bad_k():
    with pytest.raises(ValueError):
        enumerate_orbits(4)
