"""Suites for the structure of metahamiltonian p-groups.

Every suite here is gated on its hypotheses: groups outside them get
``not-applicable`` for each of the suite's theorem ids.
"""
import logging
from typing import Dict, List, Optional

import numpy as np

from audit.base_suite import TheoremSuite
from audit.models import TheoremReport, Witness
from classifiers import (
    a_degree, is_abelian, is_metacyclic, is_metahamiltonian_a1, is_metahamiltonian_definition,
    is_metahamiltonian_derived, minimal_nonabelian_subgroups,
)
from classifiers.models import MetahamiltonianResult
from enumeration import ConcreteGroup
from kernel import (
    Subgroup, all_subgroups, derived_subgroup, element_orders, exponent, group_prime,
    is_elementary_abelian, is_normal_in, lower_central_term, minimal_generators,
    nilpotency_class, normal_closure, quotient, subgroup_as_group,
)

logger = logging.getLogger(__name__)


def _nonabelian_proper_subgroup(g: ConcreteGroup, k: Subgroup, cap: int) -> Optional[Subgroup]:
    for h in all_subgroups(g, cap):
        if h.order < k.order and not h.is_abelian and h.issubset(k):
            return h
    return None


class SectionsSuite(TheoremSuite):
    """Non-abelian subgroups and non-abelian quotients are again metahamiltonian."""

    theorem_ids = ("T3.1",)

    def check(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        reason = self._metahamiltonian_p_group_gate(g)
        if reason:
            return self._not_applicable(label, reason)

        subgroups = all_subgroups(g, self.max_order)
        nonabelian = [h for h in subgroups if not h.is_abelian and h.order < g.order]
        for h in nonabelian:
            for k in nonabelian:
                if k.order < h.order and k.issubset(h) and not is_normal_in(k, h):
                    witness = Witness(
                        kind="non-metahamiltonian-subgroup",
                        subgroup=h.generator_words(),
                        elements=k.generator_words(),
                        detail=f"<{','.join(k.generator_words())}> is not normal in the subgroup",
                    )
                    return [self._report("T3.1", label, "fails", witness)]

        checked = 0
        for n in subgroups:
            if n.order in (1, g.order) or not n.is_normal:
                continue
            section = quotient(g, n).group
            if is_abelian(section):
                continue
            checked += 1
            result = is_metahamiltonian_definition(section, self.max_order)
            if result.value is False:
                witness = Witness(
                    kind="non-metahamiltonian-quotient",
                    subgroup=n.generator_words(),
                    elements=result.witness,
                    detail="subgroup of G/N given by coset representatives is non-abelian and not normal",
                )
                return [self._report("T3.1", label, "fails", witness)]
        message = f"{len(nonabelian)} non-abelian proper subgroups, {checked} non-abelian quotients"
        return [self._report("T3.1", label, "holds", message=message)]


class _RouteAgreementSuite(TheoremSuite):
    """Compare the definitional metahamiltonian test with an alternative route."""

    theorem_id = ""

    def _alternative(self, g: ConcreteGroup) -> MetahamiltonianResult:
        raise NotImplementedError

    def check(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        reason = self._nonabelian_p_group_gate(g)
        if reason:
            return self._not_applicable(label, reason)
        by_definition = is_metahamiltonian_definition(g, self.max_order)
        other = self._alternative(g)
        if by_definition.value == other.value:
            message = f"both routes give {by_definition.value}"
            return [self._report(self.theorem_id, label, "holds", message=message)]
        witness = Witness(
            kind="route-disagreement",
            subgroup=by_definition.witness or other.witness,
            detail=f"definition={by_definition.value}, {other.route}={other.value}",
        )
        return [self._report(self.theorem_id, label, "fails", witness)]


class A1CharacterizationSuite(_RouteAgreementSuite):
    """Metahamiltonian iff every minimal non-abelian subgroup is normal."""

    theorem_ids = ("T3.2",)
    theorem_id = "T3.2"

    def _alternative(self, g: ConcreteGroup) -> MetahamiltonianResult:
        return is_metahamiltonian_a1(g, self.max_order)


class DerivedContainmentSuite(_RouteAgreementSuite):
    """Metahamiltonian iff G' lies in every minimal non-abelian subgroup."""

    theorem_ids = ("T3.5",)
    theorem_id = "T3.5"

    def _alternative(self, g: ConcreteGroup) -> MetahamiltonianResult:
        return is_metahamiltonian_derived(g, self.max_order)


class NormalClosureSuite(TheoremSuite):
    theorem_ids = ("T3.3",)

    def check(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        reason = self._metahamiltonian_p_group_gate(g)
        if reason:
            return self._not_applicable(label, reason)
        minimal_bits = {h.bits for h in minimal_nonabelian_subgroups(g, self.max_order)}
        closures: Dict[int, Subgroup] = {}
        for x in range(1, g.order):
            k = normal_closure(g, [x])
            closures.setdefault(k.bits, k)
            if k.is_abelian or k.bits in minimal_bits:
                continue
            inner = _nonabelian_proper_subgroup(g, k, self.max_order)
            witness = Witness(
                kind="closure-not-abelian-or-a1",
                subgroup=inner.generator_words() if inner else [],
                elements=[g.format_element(x)],
                detail=f"normal closure has order {k.order}",
            )
            return [self._report("T3.3", label, "fails", witness)]
        message = f"{len(closures)} distinct normal closures"
        return [self._report("T3.3", label, "holds", message=message)]


class ClassBoundSuite(TheoremSuite):
    theorem_ids = ("T3.4",)

    def check(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        reason = self._metahamiltonian_p_group_gate(g)
        if reason:
            return self._not_applicable(label, reason)
        c = nilpotency_class(g)
        if c > 3:
            g4 = lower_central_term(g, 4)
            witness = Witness(
                kind="class-above-3",
                elements=[g.format_element(g4.generators[0])],
                detail=f"class {c}",
            )
            return [self._report("T3.4", label, "fails", witness)]
        derived = derived_subgroup(g)
        if not derived.is_abelian:
            gens = derived.generators
            mul = g.mul
            x, y = next(
                (a, b) for a in gens for b in gens if mul[a, b] != mul[b, a]
            )
            witness = Witness(
                kind="derived-nonabelian",
                elements=[g.format_element(x), g.format_element(y)],
                detail="two elements of G' that do not commute",
            )
            return [self._report("T3.4", label, "fails", witness)]
        return [self._report("T3.4", label, "holds", message=f"class {c}, G' abelian")]


class MetacyclicSuite(TheoremSuite):
    theorem_ids = ("T3.6",)

    def check(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        reason = self._metahamiltonian_p_group_gate(g)
        if reason:
            return self._not_applicable(label, reason)
        p = group_prime(g)
        d = minimal_generators(g, self.max_order)
        derived = derived_subgroup(g)
        derived_exponent = exponent(derived)
        if d != 2 or derived_exponent <= p:
            return self._not_applicable(label, f"d={d}, exp(G')={derived_exponent}")
        if is_metacyclic(g, self.max_order):
            return [self._report("T3.6", label, "holds", message=f"exp(G')={derived_exponent}")]
        orders = element_orders(g)
        x = int(derived.elements[np.argmax(orders[derived.elements])])
        witness = Witness(
            kind="not-metacyclic",
            elements=[g.format_element(x)],
            detail=f"d=2 and G' has an element of order {int(orders[x])}, but no cyclic normal "
                   f"subgroup has a cyclic quotient",
        )
        return [self._report("T3.6", label, "fails", witness)]


class ElemAbelianDerivedSuite(TheoremSuite):
    """Consequences of an elementary abelian derived subgroup.

    Class 3 forces an A2-group with d=2 and p odd. The last claim is the
    statement of the corollary itself; its proof cites a lemma under a
    corollary number.
    """

    theorem_ids = ("L3.7", "T3.8", "C3.9")

    def check(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        reason = self._metahamiltonian_p_group_gate(g)
        if reason is None and not is_elementary_abelian(derived_subgroup(g), group_prime(g)):
            reason = "G' is not elementary abelian"
        if reason:
            return self._not_applicable(label, reason)
        return [self._a2_subgroups(g, label), *self._class_three(g, label)]

    def _a2_subgroups(self, g: ConcreteGroup, label: str) -> TheoremReport:
        if a_degree(g, self.max_order) == 2:
            return self._report("L3.7", label, "not-applicable", message="the group is itself A2")
        checked = 0
        for h in all_subgroups(g, self.max_order):
            if h.is_abelian or h.order == g.order:
                continue
            section = subgroup_as_group(h).group
            if a_degree(section, self.max_order) != 2:
                continue
            checked += 1
            c = nilpotency_class(section)
            if c != 2:
                witness = Witness(
                    kind="a2-subgroup-class",
                    subgroup=h.generator_words(),
                    detail=f"A2-subgroup of class {c}",
                )
                return self._report("L3.7", label, "fails", witness)
        return self._report("L3.7", label, "holds", message=f"{checked} A2-subgroups of class 2")

    def _class_three(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        c = nilpotency_class(g)
        if c != 3:
            reason = f"class {c}"
            return [
                self._report("T3.8", label, "not-applicable", message=reason),
                self._report("C3.9", label, "not-applicable", message=reason),
            ]
        p = group_prime(g)
        degree = a_degree(g, self.max_order)
        d = minimal_generators(g, self.max_order)
        if degree == 2:
            t38 = self._report("T3.8", label, "holds", message="class 3 and A2")
        else:
            t38 = self._report(
                "T3.8", label, "fails",
                Witness(kind="class3-not-a2", detail=f"class 3 but a_degree {degree}"),
            )
        if d == 2 and p % 2 == 1:
            c39 = self._report("C3.9", label, "holds", message=f"d=2, p={p}")
        else:
            c39 = self._report(
                "C3.9", label, "fails",
                Witness(kind="class3-consequence", detail=f"class 3 with d={d}, p={p}"),
            )
        return [t38, c39]
