import logging
from typing import List, Optional

from audit.base_suite import TheoremSuite
from audit.models import TheoremReport, Witness
from classifiers import (
    a2_group_class, a_degree, blackburn_kernel, is_abelian, is_metacyclic,
    is_minimal_nonabelian, is_two_engel, minimal_nonabelian_subgroups, redei_type,
)
from enumeration import ConcreteGroup
from families import FAMILIES, IDENTITIES, FamilySpec, identity_group
from kernel import (
    DEFAULT_ISOMORPHISM_CAP, center, derived_subgroup, element_orders, exponent, frattini, group_prime,
    isomorphic, join, minimal_generators, nilpotency_class, quotient,
)
from utils.errors import RedeiParameterizationError

logger = logging.getLogger(__name__)


def family_of_label(label: str) -> Optional[str]:
    """Family id of a primary corpus label such as ``A2Type4:p=3,m=2``; None for sections and products."""
    if "|" in label:
        return None
    family_id = label.split(":", 1)[0]
    return family_id if family_id in FAMILIES else None


class PrelimSuite(TheoremSuite):
    """Known facts about p-groups the structure results lean on."""

    theorem_ids = ("T2.2", "L2.3", "L2.5", "T2.6", "L2.7")

    def check(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        p = group_prime(g)
        if p is None:
            engel = self._engel(g, label)
            rest = self._not_applicable(label, "not a p-group")
            return [r if r.theorem != "T2.6" else engel for r in rest]
        return [
            self._a1_equivalence(g, label, p),
            self._generated_by_a1(g, label),
            self._a2_properties(g, label, p),
            self._engel(g, label),
            self._blackburn(g, label),
        ]

    def _a1_equivalence(self, g: ConcreteGroup, label: str, p: int) -> TheoremReport:
        if is_abelian(g):
            return self._report("T2.2", label, "not-applicable", message="abelian")
        minimal = is_minimal_nonabelian(g, self.max_order)
        d = minimal_generators(g, self.max_order)
        by_derived = d == 2 and derived_subgroup(g).order == p
        by_center = d == 2 and center(g) == frattini(g, self.max_order)
        if not minimal == by_derived == by_center:
            witness = Witness(
                kind="a1-equivalence",
                detail=f"minimal={minimal}, d=2 & |G'|=p is {by_derived}, d=2 & Z=Φ is {by_center}",
            )
            return self._report("T2.2", label, "fails", witness)
        if not minimal:
            return self._report("T2.2", label, "holds", message="not minimal non-abelian")
        try:
            identified = redei_type(g, self.max_order)
        except RedeiParameterizationError as e:
            witness = Witness(kind="redei-unidentified", detail=str(e))
            return self._report("T2.2", label, "fails", witness)
        return self._report("T2.2", label, "holds", message=f"minimal non-abelian, {identified.label()}")

    def _generated_by_a1(self, g: ConcreteGroup, label: str) -> TheoremReport:
        if is_abelian(g):
            return self._report("L2.3", label, "not-applicable", message="abelian")
        minimal = minimal_nonabelian_subgroups(g, self.max_order)
        generated = join(g, *minimal)
        if generated.order == g.order:
            return self._report("L2.3", label, "holds", message=f"{len(minimal)} minimal non-abelian subgroups")
        witness = Witness(
            kind="a1-join-proper",
            subgroup=generated.generator_words(),
            detail=f"minimal non-abelian subgroups generate a subgroup of order {generated.order}",
        )
        return self._report("L2.3", label, "fails", witness)

    def _a2_properties(self, g: ConcreteGroup, label: str, p: int) -> TheoremReport:
        degree = a_degree(g, self.max_order)
        if degree != 2:
            return self._report("L2.5", label, "not-applicable", message=f"a_degree {degree}")
        d = minimal_generators(g, self.max_order)
        c = nilpotency_class(g)
        derived_exponent = exponent(derived_subgroup(g))
        broken = []
        if d > 3 or c > 3:
            broken.append(f"d={d}, c={c}")
        if d == 2 and derived_exponent == p and c != 3:
            broken.append(f"d=2 and exp(G')=p but c={c}")
        if c > 2 and derived_exponent == p and not (d == 2 and p % 2 == 1):
            broken.append(f"c={c} and exp(G')=p but d={d}, p={p}")
        if broken:
            return self._report("L2.5", label, "fails", Witness(kind="a2-property", detail="; ".join(broken)))
        return self._report("L2.5", label, "holds", message=f"d={d}, c={c}, exp(G')={derived_exponent}")

    def _engel(self, g: ConcreteGroup, label: str) -> TheoremReport:
        if not is_two_engel(g):
            return self._report("T2.6", label, "not-applicable", message="not 2-Engel")
        c = nilpotency_class(g)
        has_order_three = bool((element_orders(g) == 3).any())
        if c is None or c > 3 or (c > 2 and not has_order_three):
            witness = Witness(
                kind="engel-class",
                detail=f"2-Engel with class {c}, elements of order 3: {has_order_three}",
            )
            return self._report("T2.6", label, "fails", witness)
        return self._report("T2.6", label, "holds", message=f"class {c}")

    def _blackburn(self, g: ConcreteGroup, label: str) -> TheoremReport:
        kernel = blackburn_kernel(g)
        top = quotient(g, kernel).group
        whole = is_metacyclic(g, self.max_order)
        section = is_metacyclic(top, self.max_order)
        if whole == section:
            return self._report("L2.7", label, "holds", message=f"metacyclic={whole}")
        witness = Witness(
            kind="blackburn-disagreement",
            subgroup=kernel.generator_words(),
            detail=f"G metacyclic={whole}, G/Φ(G')G3 metacyclic={section}",
        )
        return self._report("L2.7", label, "fails", witness)


class A2CatalogueSuite(TheoremSuite):
    """Every listed A2 family instance is A2, sits in its listed structural class
    and, for the class II product types, is isomorphic to the product it is listed as."""

    theorem_ids = ("L2.4",)

    def check(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        family_id = family_of_label(label)
        listed = FAMILIES[family_id].a2_class if family_id else None
        if listed is None:
            return self._not_applicable(label, "not an A2 family instance")
        degree = a_degree(g, self.max_order)
        found = a2_group_class(g, self.max_order)
        if degree != 2 or found != listed:
            witness = Witness(
                kind="a2-catalogue",
                detail=f"{family_id} is listed under class {listed}; a_degree {degree}, class {found}",
            )
            return [self._report("L2.4", label, "fails", witness)]
        if family_id not in IDENTITIES:
            return [self._report("L2.4", label, "holds", message=f"class {found}")]
        if g.order > DEFAULT_ISOMORPHISM_CAP:
            logger.info(f"[{label}] order {g.order} above isomorphism cap, listed product not compared")
            return [self._report("L2.4", label, "holds", message=f"class {found}; product not compared")]
        product = identity_group(FamilySpec.from_label(label))
        if not isomorphic(g, product):
            witness = Witness(kind="a2-identity", detail=f"{label} is not isomorphic to {product.label}")
            return [self._report("L2.4", label, "fails", witness)]
        return [self._report("L2.4", label, "holds", message=f"class {found}, isomorphic to {product.label}")]
