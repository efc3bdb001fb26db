import dataclasses

import pytest

from audit import suite_a2_catalogue
from classifiers import a2_group_class, a_degree, is_abelian
from families import (
    FAMILIES, PINNED_A2, FamilySpec, build, dump_corpus, expected_order, family_text,
    identity_group, load_corpus_dir, primary_specs, read_grp, resolve_spec, smallest_primitive_root,
    smallest_quadratic_nonresidue, solve_j_type15, solve_j_type16, solve_l_type19,
    standard_corpus,
)
from kernel import isomorphic
from utils.errors import NoAdmissibleParameterError, OrderMismatchError, ParameterRangeError

SMALL_A2 = [spec for spec in PINNED_A2[2]] + [
    spec for spec in PINNED_A2[3] if spec.family in ("A2Type5", "A2Type6", "A2Type7", "A2Type9")
]


def test_number_theory_helpers():
    assert smallest_quadratic_nonresidue(5) == 2
    assert smallest_quadratic_nonresidue(7) == 3
    assert smallest_primitive_root(5) == 2
    assert smallest_primitive_root(7) == 3
    assert solve_j_type15(5) == 2
    assert solve_j_type16(5, 1) == 2
    assert solve_j_type16(2) == 1
    assert solve_l_type19(5, 1) == 3


def test_type15_has_no_parameter_for_p3():
    with pytest.raises(NoAdmissibleParameterError):
        solve_j_type15(3)


def test_build_mpmn_order():
    built = build(FamilySpec(family="MpMN", p=3, m=2, n=1))
    assert built.group.order == 27
    assert built.group.label == "MpMN:p=3,m=2,n=1"


def test_side_condition_is_named():
    with pytest.raises(ParameterRangeError) as info:
        build(FamilySpec(family="MpMN", p=3, m=1, n=1))
    assert info.value.condition == "m >= 2"


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec(family="NoSuchFamily"),
        FamilySpec(family="Q8", m=1),
        FamilySpec(family="A2Type8", p=3),
        FamilySpec(family="Dihedral", n=6 + 1),
        FamilySpec(family="MpMN", p=4, m=2, n=1),
        FamilySpec(family="A2Type19", p=5, r=3),
    ],
)
def test_parameter_range_errors(spec):
    with pytest.raises(ParameterRangeError):
        resolve_spec(spec)


def test_derived_values_are_computed():
    assert resolve_spec(FamilySpec(family="A2Type6", p=3, m=1, variant="nonresidue")).nu == 2
    assert resolve_spec(FamilySpec(family="A2Type6", p=3, m=1, variant="one")).nu == 1
    assert resolve_spec(FamilySpec(family="A2Type18", p=5)).nu == 2
    derived = resolve_spec(FamilySpec(family="A2Type19", p=5, r=1)).derived()
    assert derived == {"rho": 2, "l": 3}


def test_fixed_prime_labels():
    assert resolve_spec(FamilySpec(family="Q8")).label() == "Q8"
    assert resolve_spec(FamilySpec(family="A2Type8", p=2)).label() == "A2Type8"


def test_family_text_evaluates_exponents():
    assert family_text(FamilySpec(family="MpMN", p=2, m=3, n=1)) == "gens a,b; rels a^8=b^2=1, a^b=a^5;"


@pytest.mark.parametrize("spec", SMALL_A2, ids=lambda s: s.label())
def test_small_a2_instances(spec):
    built = build(spec)
    g = built.group
    assert g.order == expected_order(spec)
    assert a_degree(g) == 2
    assert a2_group_class(g) == FAMILIES[spec.family].a2_class


def test_a2_type8_and_type11_orders():
    assert build(FamilySpec(family="A2Type8")).group.order == 16
    assert build(FamilySpec(family="A2Type11")).group.order == 16


def test_primary_specs_for_small_cap():
    labels = [spec.label() for spec in primary_specs(3, 27)]
    assert labels == ["MpMN:p=3,m=2,n=1", "MpMN1:p=3,m=1,n=1"]


def test_corpus_at_cap_eight():
    corpus = standard_corpus({2: 8})
    assert [entry.label for entry in corpus] == ["Dihedral:n=8", "MpMN:p=2,m=2,n=1", "Q8"]


def test_corpus_at_cap_sixteen_is_sorted_and_deduplicated():
    corpus = standard_corpus({2: 16})
    labels = [entry.label for entry in corpus]
    assert labels == sorted(labels)
    assert len(set(labels)) == len(labels)
    derived = [e for e in corpus if "|" in e.label or e.label.startswith("DirectProduct:")]
    for i, entry in enumerate(derived):
        if "|" in entry.label:
            assert not is_abelian(entry.group)
        for other in derived[i + 1:]:
            assert not isomorphic(entry.group, other.group)


def test_corpus_dump_and_reload(tmp_path):
    corpus = standard_corpus({2: 8})
    dump_corpus(corpus, str(tmp_path))
    reloaded = load_corpus_dir(str(tmp_path))
    assert [e.label for e in reloaded] == [e.label for e in corpus]
    assert [e.group.order for e in reloaded] == [8, 8, 8]


def test_read_grp_uses_file_stem_without_comment(tmp_path):
    path = tmp_path / "c3.grp"
    path.write_text("gens a; rels a^3=1;\n")
    entry = read_grp(str(path))
    assert entry.label == "c3"
    assert entry.group.order == 3


LISTED_PRODUCTS = [
    spec for p in (2, 3) for spec in PINNED_A2[p]
    if spec.family in ("A2Type8", "A2Type9", "A2Type10", "A2Type11", "A2Type12")
]


@pytest.mark.parametrize("spec", LISTED_PRODUCTS, ids=lambda s: s.label())
def test_class_ii_types_are_their_listed_products(spec):
    g = build(spec).group
    product = identity_group(spec)
    assert product.order == g.order
    assert isomorphic(g, product)
    report = suite_a2_catalogue(g)
    assert report.verdict == "holds"
    assert "isomorphic to" in report.message


def test_listed_products_cover_both_primes():
    assert {(s.family, s.p) for s in LISTED_PRODUCTS} >= {
        ("A2Type8", None), ("A2Type11", None),
        ("A2Type9", 2), ("A2Type10", 2), ("A2Type12", 2),
        ("A2Type9", 3), ("A2Type10", 3), ("A2Type12", 3),
    }


def test_families_outside_class_ii_products_have_no_identity():
    assert identity_group(FamilySpec(family="A2Type1", m=1)) is None


def test_label_round_trip():
    for spec in (
        FamilySpec(family="A2Type9", p=3, m=1, n=1),
        FamilySpec(family="A2Type6", p=3, m=1, variant="nonresidue"),
        FamilySpec(family="Q8"),
    ):
        assert FamilySpec.from_label(spec.label()) == spec


def test_wrong_order_formula_raises(monkeypatch):
    monkeypatch.setitem(FAMILIES, "Q8", dataclasses.replace(FAMILIES["Q8"], order=lambda s: 16))
    with pytest.raises(OrderMismatchError) as excinfo:
        build(FamilySpec(family="Q8"))
    assert (excinfo.value.order, excinfo.value.expected) == (8, 16)
