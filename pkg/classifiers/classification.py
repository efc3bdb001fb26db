import logging
from typing import Optional

from classifiers.metacyclic import is_metacyclic
from classifiers.metahamiltonian import is_metahamiltonian_definition
from classifiers.models import Classification
from classifiers.predicates import (
    a_degree, has_abelian_maximal_subgroup, is_abelian, is_dedekindian, is_minimal_nonabelian,
    is_two_engel,
)
from classifiers.redei import redei_type
from enumeration import ConcreteGroup
from kernel import (
    DEFAULT_MAX_ORDER, center, derived_subgroup, exponent, frattini, group_prime,
    minimal_generators, nilpotency_class, prime_power,
)
from utils.errors import ClassificationConsistencyError

logger = logging.getLogger(__name__)

A2_CLASSES = ("I", "II", "III", "IV", "V")


def a2_group_class(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> Optional[str]:
    """Structural class I-V of an A2-group, or None when the group is not A2.

    I: d=2 with an abelian maximal subgroup; II: d=3, |G'|=p, abelian maximal;
    III: d=3, |G'|=p^2, abelian maximal; IV: d=2, no abelian maximal;
    V: d=3, no abelian maximal.
    """
    p = group_prime(g)
    if p is None or a_degree(g, cap) != 2:
        return None
    d = minimal_generators(g, cap)
    abelian_maximal = has_abelian_maximal_subgroup(g, cap)
    derived_order = derived_subgroup(g).order
    if d == 2:
        return "I" if abelian_maximal else "IV"
    if d == 3 and not abelian_maximal:
        return "V"
    if d == 3 and derived_order == p:
        return "II"
    if d == 3 and derived_order == p * p:
        return "III"
    return None


def _check_a1_equivalences(g: ConcreteGroup, minimal: bool, p: int, cap: int):
    """Minimal non-abelian iff d=2 and |G'|=p iff d=2 and Z(G)=Φ(G)."""
    d = minimal_generators(g, cap)
    by_derived = d == 2 and derived_subgroup(g).order == p
    by_center = d == 2 and center(g) == frattini(g, cap)
    if not (minimal == by_derived == by_center):
        raise ClassificationConsistencyError(
            f"[{g.label}] minimal non-abelian={minimal}, d=2 & |G'|=p is {by_derived}, "
            f"d=2 & Z=Φ is {by_center}"
        )


def classify(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> Classification:
    """Fill every Classification field, cross-checking A1 claims before returning."""
    pk = prime_power(g.order)
    p, n = pk if pk else (None, None)
    abelian = is_abelian(g)
    derived = derived_subgroup(g)
    derived_exponent = exponent(derived)
    dedekindian = is_dedekindian(g, cap)
    minimal = is_minimal_nonabelian(g, cap)
    metahamiltonian = is_metahamiltonian_definition(g, cap)
    if p is not None and not abelian:
        _check_a1_equivalences(g, minimal, p, cap)
    degree = a_degree(g, cap) if p is not None or g.order == 1 else "not-applicable"
    if degree != "not-applicable" and (abelian != (degree == 0) or minimal != (degree == 1)):
        raise ClassificationConsistencyError(
            f"[{g.label}] a_degree {degree} disagrees with abelian={abelian}, minimal={minimal}"
        )
    flags = {
        "abelian": abelian,
        "dedekindian": dedekindian,
        "hamiltonian": dedekindian and not abelian,
        "minimal_nonabelian": minimal,
        "metahamiltonian": metahamiltonian.value,
        "metacyclic": is_metacyclic(g, cap),
        "two_engel": is_two_engel(g),
    }
    result = Classification(
        order=g.order,
        p=p,
        n=n,
        d=minimal_generators(g, cap),
        c=nilpotency_class(g),
        derived_order=derived.order,
        derived_exponent=derived_exponent,
        derived_elementary_abelian=derived.is_abelian and (
            derived.order == 1 or (p is not None and derived_exponent == p)
        ),
        flags=flags,
        a_degree=degree,
        a1_type=redei_type(g, cap) if minimal else None,
        metahamiltonian_witness=metahamiltonian.witness,
    )
    logger.debug(f"[{g.label}] classified: order {g.order}, a_degree {degree}")
    return result
