"""One-call entry points for each suite, returning reports for a single group."""
from typing import List

from audit.models import TheoremReport
from audit.prelim_suites import A2CatalogueSuite, PrelimSuite
from audit.structure_suites import (
    A1CharacterizationSuite, ClassBoundSuite, DerivedContainmentSuite, ElemAbelianDerivedSuite,
    MetacyclicSuite, NormalClosureSuite, SectionsSuite,
)
from enumeration import ConcreteGroup
from kernel import DEFAULT_MAX_ORDER


def suite_sections(g: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER) -> TheoremReport:
    return SectionsSuite(max_order).run(g)[0]


def suite_a1_characterization(g: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER) -> TheoremReport:
    return A1CharacterizationSuite(max_order).run(g)[0]


def suite_normal_closure(g: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER) -> TheoremReport:
    return NormalClosureSuite(max_order).run(g)[0]


def suite_class_bound(g: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER) -> TheoremReport:
    return ClassBoundSuite(max_order).run(g)[0]


def suite_derived_containment(g: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER) -> TheoremReport:
    return DerivedContainmentSuite(max_order).run(g)[0]


def suite_metacyclic(g: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER) -> TheoremReport:
    return MetacyclicSuite(max_order).run(g)[0]


def suite_elem_abelian_derived(g: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER) -> List[TheoremReport]:
    """Reports for L3.7, T3.8 and C3.9, in that order."""
    return ElemAbelianDerivedSuite(max_order).run(g)


def suite_prelim(g: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER) -> List[TheoremReport]:
    """Reports for T2.2, L2.3, L2.5, T2.6 and L2.7, in that order."""
    return PrelimSuite(max_order).run(g)


def suite_a2_catalogue(g: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER) -> TheoremReport:
    """Needs ``g.label`` to carry the family label the group was built from."""
    return A2CatalogueSuite(max_order).run(g)[0]
