import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from enumeration import (
    dump_group, enumerate_group, evaluate, load_group, presentation_from_table, run_hlt,
    verify_group_axioms,
)
from presentation import Presentation, parse_presentation
from tests.helpers import group_of
from utils.errors import EmptyPresentationError, EnumerationBudgetExceeded


@pytest.mark.parametrize(
    "text, order",
    [
        ("gens a; rels a=1;", 1),
        ("gens a; rels a^5=1;", 5),
        ("gens r,s; rels r^4=s^2=1, r^s=r^-1;", 8),
        ("gens a,b; rels a^4=1, b^2=a^2, a^b=a^-1;", 8),
        ("gens a,b; rels a^3=b^2=1, a^b=a^-1;", 6),
        ("gens a,b; rels a^2=b^3=(a b)^5=1;", 60),
    ],
)
def test_enumerated_orders(text, order):
    g = group_of(text)
    assert g.order == order
    assert verify_group_axioms(g)


def test_identity_is_element_zero_and_relators_hold(d8):
    assert (d8.mul[0] == np.arange(8)).all()
    for relator in d8.presentation.relators:
        assert evaluate(d8, relator) == d8.identity


def test_element_words_evaluate_to_their_element(q8):
    for x, word in enumerate(q8.element_words):
        assert evaluate(q8, word) == x


def test_infinite_presentation_exceeds_budget():
    with pytest.raises(EnumerationBudgetExceeded) as info:
        enumerate_group(parse_presentation("gens a,b; rels [a,b]=1;"), max_cosets=200)
    assert info.value.max_cosets == 200


def test_no_generators_is_rejected():
    with pytest.raises(EmptyPresentationError):
        run_hlt(Presentation(()))


def test_enumeration_is_deterministic():
    text = "gens a,b; rels a^8=b^2=1, a^b=a^3;"
    first, second = group_of(text), group_of(text)
    assert (first.mul == second.mul).all()
    assert first.element_words == second.element_words


def test_dump_and_load_keep_the_table(d16):
    restored = load_group(dump_group(d16))
    assert (restored.mul == d16.mul).all()
    assert (restored.inv == d16.inv).all()
    assert restored.gens == d16.gens


def test_presentation_read_off_table_defines_same_order(q8xc2):
    again = enumerate_group(presentation_from_table(q8xc2))
    assert again.order == 16


def test_axiom_check_rejects_broken_table(d8):
    broken = dump_group(d8)
    mul = np.array(broken["mul"]).reshape(8, 8)
    mul[[1, 2]] = mul[[2, 1]]
    broken["mul"] = mul.ravel().tolist()
    assert not verify_group_axioms(load_group(broken))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12))
def test_abelian_presentations_have_product_order(m, n):
    g = group_of(f"gens a,b; rels a^{m}=b^{n}=1, [a,b]=1;")
    assert g.order == m * n
    assert (g.mul == g.mul.T).all()
    assert verify_group_axioms(g)


@pytest.mark.parametrize(
    "text, order",
    [
        ("gens r,s; rels r^16=s^2=1, r^s=r^-1;", 32),
        ("gens a,b; rels c:=[a,b], a^9=b^3=c^3=1, [c,a]=[c,b]=1;", 81),
    ],
)
def test_order_does_not_depend_on_coset_budget(text, order):
    presentation = parse_presentation(text)
    for budget in (4096, 16384, 65536):
        assert enumerate_group(presentation, max_cosets=budget).order == order
