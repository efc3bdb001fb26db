from .models import (
    Verdict, THEOREM_IDS, TOOL_VERSION, Witness, TheoremReport, AuditMeta, AuditReport,
)
from .base_suite import TheoremSuite
from .structure_suites import (
    SectionsSuite, A1CharacterizationSuite, DerivedContainmentSuite, NormalClosureSuite,
    ClassBoundSuite, MetacyclicSuite, ElemAbelianDerivedSuite,
)
from .prelim_suites import PrelimSuite, A2CatalogueSuite, family_of_label
from .registry import suite_map, resolve_suite_filter, suites_for
from .suites import (
    suite_sections, suite_a1_characterization, suite_normal_closure, suite_class_bound,
    suite_derived_containment, suite_metacyclic, suite_elem_abelian_derived, suite_prelim,
    suite_a2_catalogue,
)
from .witnesses import recheck_witness, element_of
from .runner import audit_group, audit_in_subprocess, audit_corpus, run_all, summarize

all = [
    Verdict, THEOREM_IDS, TOOL_VERSION, Witness, TheoremReport, AuditMeta, AuditReport,
    TheoremSuite, SectionsSuite, A1CharacterizationSuite, DerivedContainmentSuite,
    NormalClosureSuite, ClassBoundSuite, MetacyclicSuite, ElemAbelianDerivedSuite, PrelimSuite,
    A2CatalogueSuite, family_of_label, suite_map, resolve_suite_filter, suites_for,
    suite_sections, suite_a1_characterization, suite_normal_closure, suite_class_bound,
    suite_derived_containment, suite_metacyclic, suite_elem_abelian_derived, suite_prelim,
    suite_a2_catalogue, recheck_witness, element_of, audit_group, audit_in_subprocess, audit_corpus, run_all,
    summarize,
]
