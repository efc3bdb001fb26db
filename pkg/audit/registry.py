from typing import Dict, List, Optional, Sequence, Type

from audit.base_suite import TheoremSuite
from audit.models import THEOREM_IDS
from audit.prelim_suites import A2CatalogueSuite, PrelimSuite
from audit.structure_suites import (
    A1CharacterizationSuite, ClassBoundSuite, DerivedContainmentSuite, ElemAbelianDerivedSuite,
    MetacyclicSuite, NormalClosureSuite, SectionsSuite,
)

suite_map: Dict[str, Type[TheoremSuite]] = {
    theorem: suite
    for suite in (
        PrelimSuite, A2CatalogueSuite, SectionsSuite, A1CharacterizationSuite, NormalClosureSuite,
        ClassBoundSuite, DerivedContainmentSuite, MetacyclicSuite, ElemAbelianDerivedSuite,
    )
    for theorem in suite.theorem_ids
}


def resolve_suite_filter(suite_filter: Optional[Sequence[str]]) -> List[str]:
    """Theorem ids to audit, in canonical order; everything when the filter is empty."""
    if not suite_filter:
        return list(THEOREM_IDS)
    unknown = [t for t in suite_filter if t not in suite_map]
    if unknown:
        raise ValueError(f"Unknown theorem ids {unknown}; expected some of {list(THEOREM_IDS)}")
    return [t for t in THEOREM_IDS if t in suite_filter]


def suites_for(theorems: Sequence[str], max_order: int) -> List[TheoremSuite]:
    classes: List[Type[TheoremSuite]] = []
    for t in theorems:
        if suite_map[t] not in classes:
            classes.append(suite_map[t])
    return [cls(max_order=max_order) for cls in classes]
