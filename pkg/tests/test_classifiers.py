import pytest
from pydantic import ValidationError

from audit import element_of
from classifiers import (
    A1Type, a2_group_class, a_degree, blackburn_kernel, classify, has_abelian_maximal_subgroup,
    is_abelian, is_dedekindian, is_hamiltonian, is_metacyclic, is_metacyclic_blackburn,
    is_metahamiltonian, is_metahamiltonian_a1, is_metahamiltonian_definition,
    is_metahamiltonian_derived, is_minimal_nonabelian, is_two_engel, minimal_nonabelian_subgroups,
    redei_type,
)
from families import standard_corpus
from kernel import all_subgroups_by_closure, generated_subgroup
from tests.helpers import family_group
from utils.errors import NotAPGroupError


def test_q8_is_hamiltonian(q8):
    result = classify(q8)
    assert result.flags["hamiltonian"] is True
    assert result.flags["minimal_nonabelian"] is True
    assert result.a_degree == 1
    assert result.a1_type.kind == "Q8"
    assert is_dedekindian(q8) and is_hamiltonian(q8)


def test_cyclic_group_is_abelian():
    result = classify(family_group("Cyclic", n=16))
    assert result.flags["abelian"] is True
    assert result.flags["metahamiltonian"] is None
    assert result.a_degree == 0
    assert result.d == 1


def test_d16_structure(d16):
    result = classify(d16)
    assert result.c == 3
    assert result.a_degree == 2
    assert result.flags["metahamiltonian"] is True
    assert result.flags["metacyclic"] is True
    assert result.flags["two_engel"] is False
    assert a2_group_class(d16) == "I"


def test_d32_is_not_metahamiltonian_with_checkable_witness(d32):
    result = classify(d32)
    assert result.flags["metahamiltonian"] is False
    assert result.metahamiltonian_witness
    h = generated_subgroup(d32, [element_of(d32, w) for w in result.metahamiltonian_witness])
    assert not h.is_abelian
    assert not h.is_normal


def test_routes_agree(d8, q8, d16, d32, m3_111, q8xc2):
    expected = [(d8, True), (q8, True), (d16, True), (m3_111, True), (q8xc2, True), (d32, False)]
    for g, answer in expected:
        values = {
            is_metahamiltonian_definition(g).value,
            is_metahamiltonian_a1(g).value,
            is_metahamiltonian_derived(g).value,
        }
        assert values == {answer}, g.label


def naive_metahamiltonian(g):
    return all(h.is_normal for h in all_subgroups_by_closure(g) if not h.is_abelian)


@pytest.mark.parametrize("entry", standard_corpus({2: 64, 3: 27}), ids=lambda e: e.label)
def test_routes_agree_with_closure_lattice(entry):
    g = entry.group
    if is_abelian(g):
        return
    naive = naive_metahamiltonian(g)
    assert is_metahamiltonian_definition(g).value == naive
    assert is_metahamiltonian_a1(g).value == naive
    assert is_metahamiltonian_derived(g).value == naive


def test_abelian_input_is_not_applicable(c2xc2):
    assert is_metahamiltonian_definition(c2xc2).value is None
    assert not is_metahamiltonian(c2xc2)


def test_derived_route_needs_p_group(s3):
    with pytest.raises(NotAPGroupError):
        is_metahamiltonian_derived(s3)
    with pytest.raises(NotAPGroupError):
        a_degree(s3)
    assert classify(s3).a_degree == "not-applicable"


def test_redei_types(d8, q8, m3_21, m3_111):
    assert redei_type(q8).label() == "Q8"
    assert redei_type(d8).label() == "M2(2,1)"
    assert redei_type(m3_21).label() == "M3(2,1)"
    assert redei_type(m3_111).label() == "M3(1,1,1)"


def test_minimal_nonabelian_detection(d8, d16, m3_111):
    assert is_minimal_nonabelian(d8)
    assert is_minimal_nonabelian(m3_111)
    assert not is_minimal_nonabelian(d16)
    assert len(minimal_nonabelian_subgroups(d16)) == 2


def test_metacyclic_two_ways(d16, m3_21, m3_111, q8xc2):
    for g in (d16, m3_21, m3_111, q8xc2):
        assert is_metacyclic(g) == is_metacyclic_blackburn(g)
    assert is_metacyclic(m3_21)
    assert not is_metacyclic(m3_111)
    assert not is_metacyclic(q8xc2)
    assert blackburn_kernel(d16).order == 2


def test_two_engel(q8, d16):
    assert is_two_engel(q8)
    assert not is_two_engel(d16)


def test_a2_type8_class(q8xc2):
    assert a_degree(q8xc2) == 2
    assert a2_group_class(q8xc2) == "II"
    assert has_abelian_maximal_subgroup(q8xc2)


def test_a2_class_is_none_outside_a2(q8, c2xc2):
    assert a2_group_class(q8) is None
    assert a2_group_class(c2xc2) is None
    assert is_abelian(c2xc2)


def test_a1_type_side_conditions():
    with pytest.raises(ValidationError):
        A1Type(kind="Mp(m,n)", p=2, m=1, n=1)
    with pytest.raises(ValidationError):
        A1Type(kind="Mp(m,n,1)", p=2, m=1, n=1)
    assert A1Type(kind="Mp(m,n,1)", p=3, m=1, n=1).label() == "M3(1,1,1)"
