import itertools

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from kernel import (
    agemo1, all_subgroups, all_subgroups_by_closure, center, central_product, derived_subgroup,
    direct_product, element_orders, exponent, find_isomorphism, frattini,
    frattini_by_maximal_subgroups, generated_subgroup, intersection, is_isomorphism, isomorphic,
    join, lower_central_series, maximal_subgroups, minimal_generators, nilpotency_class,
    normal_closure, normalizer, omega1, quotient, subgroup_as_group, whole_group,
)
from kernel.pgroups import log_p, require_prime
from tests.helpers import family_group, group_of
from utils.errors import CapExceededError, NotAPGroupError, NotNormalError, PairingError


def trivial_group():
    return group_of("gens a; rels a=1;")


def _bits(subgroups):
    return sorted(h.bits for h in subgroups)


def test_subgroup_counts(d8, q8, c2xc2, d16, s3):
    assert len(all_subgroups(d8)) == 10
    assert len(all_subgroups(q8)) == 6
    assert len(all_subgroups(c2xc2)) == 5
    assert len(all_subgroups(family_group("Cyclic", n=5))) == 2
    assert len(all_subgroups(d16)) == 19
    assert len(all_subgroups(s3)) == 6


def test_layered_lattice_matches_closure_oracle(d8, q8, d16, q8xc2, m3_111):
    for g in (d8, q8, d16, q8xc2, m3_111):
        assert _bits(all_subgroups(g)) == _bits(all_subgroups_by_closure(g))


def test_subgroups_are_sorted_and_closed(d16):
    subgroups = all_subgroups(d16)
    assert [h.order for h in subgroups] == sorted(h.order for h in subgroups)
    for h in subgroups:
        assert generated_subgroup(d16, h.elements) == h
        assert d16.order % h.order == 0


def test_lattice_cap(d16):
    with pytest.raises(CapExceededError):
        all_subgroups(d16, cap=8)


def test_center_and_derived_subgroup(d8, q8, c2xc2):
    assert center(d8).order == 2
    assert derived_subgroup(d8) == center(d8)
    assert derived_subgroup(q8).order == 2
    assert derived_subgroup(c2xc2).order == 1


def test_lower_central_series(d16, s3):
    assert [h.order for h in lower_central_series(d16)] == [16, 4, 2, 1]
    assert nilpotency_class(d16) == 3
    assert nilpotency_class(s3) is None
    assert nilpotency_class(trivial_group()) == 0


def test_frattini_two_ways(d16, q8xc2):
    for g in (d16, q8xc2):
        assert frattini(g) == frattini_by_maximal_subgroups(g)
    assert frattini(d16).order == 4
    assert len(maximal_subgroups(d16)) == 3


def test_minimal_generators(d16, c2xc2, q8xc2, s3):
    assert minimal_generators(d16) == 2
    assert minimal_generators(c2xc2) == 2
    assert minimal_generators(q8xc2) == 3
    assert minimal_generators(s3) == 2
    assert minimal_generators(trivial_group()) == 0


def test_element_orders_and_omega_agemo(q8, d16):
    counts = np.bincount(element_orders(q8))
    assert counts[1] == 1 and counts[2] == 1 and counts[4] == 6
    assert omega1(q8).order == 2
    assert agemo1(d16).order == 4
    assert exponent(whole_group(d16)) == 8


def test_normal_closure_and_normalizer(d8):
    s = d8.gens[1]
    closure = normal_closure(d8, [s])
    assert closure.order == 4 and closure.is_normal
    assert not generated_subgroup(d8, [s]).is_normal
    assert normalizer(d8, generated_subgroup(d8, [s])).order == 4


def test_join_and_intersection(d8):
    r, s = d8.gens
    rotations = generated_subgroup(d8, [r])
    reflections = generated_subgroup(d8, [s])
    assert join(d8, rotations, reflections).order == 8
    assert intersection(d8, rotations, reflections).order == 1


def test_quotient_by_center(d8, c2xc2):
    top = quotient(d8, center(d8))
    assert top.group.order == 4
    assert isomorphic(top.group, c2xc2)
    assert top.mapping[d8.gens[0]] == top.group.gens[0]


def test_quotient_needs_normal_subgroup(d8):
    with pytest.raises(NotNormalError):
        quotient(d8, generated_subgroup(d8, [d8.gens[1]]))


def test_subgroup_as_group_keeps_structure(d16, d8):
    nonabelian_maximal = [h for h in maximal_subgroups(d16) if not h.is_abelian]
    assert len(nonabelian_maximal) == 2
    for h in nonabelian_maximal:
        section = subgroup_as_group(h)
        assert isomorphic(section.group, d8)
        assert sorted(section.mapping.tolist()) == h.elements.tolist()


def test_direct_product_matches_a2_type8(q8xc2):
    assert q8xc2.order == 16
    assert isomorphic(q8xc2, family_group("A2Type8"))


def test_central_product_of_q8_and_c4(q8, c4):
    z = int(center(q8).generators[0])
    c2 = int(np.flatnonzero(element_orders(c4) == 2)[0])
    product = central_product(q8, c4, [(z, c2)])
    assert product.order == 16
    assert center(product).order == 4


def test_central_product_rejects_non_central_pairing(q8, c4):
    with pytest.raises(PairingError):
        central_product(q8, c4, [(q8.gens[0], int(c4.gens[0]))])


def test_isomorphism_search(d8, q8):
    m = family_group("MpMN", p=2, m=2, n=1)
    phi = find_isomorphism(d8, m)
    assert phi is not None and is_isomorphism(d8, m, phi)
    assert find_isomorphism(d8, q8) is None


def test_require_prime_rejects_mixed_orders(s3):
    with pytest.raises(NotAPGroupError):
        require_prime(s3)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([1, 2, 4, 8]), st.sampled_from([1, 2, 4]))
def test_abelian_two_groups_lattice_matches_oracle(m, n):
    g = group_of(f"gens a,b; rels a^{m}=b^{n}=1, [a,b]=1;")
    assert _bits(all_subgroups(g)) == _bits(all_subgroups_by_closure(g))
    assert all(h.is_normal and h.is_abelian for h in all_subgroups(g))
    assert direct_product(g, g).order == g.order ** 2


def test_log_p_is_exact():
    assert log_p(27, 3) == 3
    assert log_p(1, 2) == 0
    assert log_p(2 ** 60, 2) == 60
    with pytest.raises(ValueError):
        log_p(12, 2)
    with pytest.raises(ValueError):
        log_p(3 ** 40 + 1, 3)


def test_central_quotient_drops_class_by_one(d8, d16, d32, q8xc2, m3_21, m3_111):
    for g in (d8, d16, d32, q8xc2, m3_21, m3_111):
        c = nilpotency_class(g)
        assert nilpotency_class(quotient(g, center(g)).group) == c - 1, g.label


SAMPLE_GROUPS = ["c2xc2", "c4", "d8", "q8", "d16", "q8xc2", "m3_21", "m3_111"]


@pytest.mark.parametrize("first, second", itertools.product(SAMPLE_GROUPS, repeat=2))
def test_isomorphic_is_reflexive_and_symmetric(request, first, second):
    g1, g2 = request.getfixturevalue(first), request.getfixturevalue(second)
    assert isomorphic(g1, g1)
    assert isomorphic(g1, g2) == isomorphic(g2, g1)
    assert isomorphic(g1, g2) == (first == second)


def test_isomorphic_rejects_equal_orders(d8, q8, c4, c2xc2, d16, q8xc2):
    assert not isomorphic(d8, q8)
    assert not isomorphic(c4, c2xc2)
    assert not isomorphic(d16, q8xc2)
