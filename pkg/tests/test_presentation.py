import hypothesis.strategies as st
import pytest
from hypothesis import given

from presentation import (
    IDENTITY, Word, commutator, expand_word, format_presentation, format_word, free_reduce,
    parse_presentation,
)
from utils.errors import PresentationSyntaxError, UndefinedAbbreviationError, UnknownGeneratorError

NAMES = ("a", "b", "c")

words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12).map(lambda xs: Word(tuple(xs)))


def test_commutator_and_conjugate_expansion():
    assert expand_word("[a,b]", ["a", "b"]).letters == (-1, -2, 1, 2)
    assert expand_word("a^b", ["a", "b"]).letters == (-2, 1, 2)
    assert len(expand_word("[a,b,b]", ["a", "b"])) == 10  # free-reduced length of [[a,b],b]


def test_relation_chain_splits_against_last_term():
    p = parse_presentation("gens a,b; rels a^4=b^2=1, a^b=a^-1;")
    assert p.generator_names == ("a", "b")
    assert p.relators[0].letters == (1, 1, 1, 1)
    assert p.relators[1].letters == (2, 2)
    assert p.relators[2].letters == (-2, 1, 2, 1)


def test_abbreviation_introduces_generator():
    p = parse_presentation("gens a,b; rels c:=[a,b], a^3=b^3=c^3=1, [c,a]=[c,b]=1;")
    assert p.generator_names == ("a", "b", "c")
    assert p.relators[0].letters == (-3, -1, -2, 1, 2)


def test_trailing_semicolon_and_comments_are_optional():
    p = parse_presentation("# cyclic of order 3\ngens a;\nrels a^3=1")
    assert p.relators == (Word.of(1, 1, 1),)


def test_syntax_error_reports_position():
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation("gens a;\nrels a^2 = ;")
    assert info.value.line == 2
    assert info.value.column == 12


def test_zero_exponent_is_rejected():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens a; rels a^0=1;")


def test_relation_needs_equals():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens a; rels a;")


def test_unknown_generator():
    with pytest.raises(UnknownGeneratorError) as info:
        parse_presentation("gens a; rels b=1;")
    assert info.value.name == "b"


def test_undefined_abbreviation_in_word():
    with pytest.raises(UndefinedAbbreviationError):
        expand_word("z", ["a"])


def test_format_presentation_reparses_to_same_relators():
    p = parse_presentation("gens r,s; rels r^4=s^2=1, r^s=r^-1;")
    text = format_presentation(p, comment="Dihedral:n=8")
    assert text.startswith("# Dihedral:n=8\n")
    assert parse_presentation(text) == p


def test_format_presentation_without_relators():
    p = parse_presentation("gens a; rels 1=1;")
    assert parse_presentation(format_presentation(p)).generator_names == ("a",)


@given(words)
def test_free_reduce_is_idempotent(w):
    once = free_reduce(w)
    assert free_reduce(once) == once
    assert all(x != -y for x, y in zip(once.letters, once.letters[1:]))


@given(words)
def test_word_times_inverse_reduces_to_identity(w):
    assert free_reduce(w * w.inverse()) == IDENTITY


@given(words, words)
def test_commutator_inverse_swaps_entries(x, y):
    assert free_reduce(commutator(x, y).inverse()) == free_reduce(commutator(y, x))


@given(words)
def test_formatted_word_expands_back(w):
    assert expand_word(format_word(w, NAMES), NAMES) == w
