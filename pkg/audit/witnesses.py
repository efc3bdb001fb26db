"""Independent re-checking of ``fails`` verdicts.

A witness is re-derived from its generator words alone, on a fresh copy of
the group with no cached structure, and the violated property is tested
again directly.
"""
import logging
from typing import Callable, Dict, List

from audit.models import TheoremReport, Witness
from audit.registry import suite_map
from classifiers import a_degree, is_metacyclic
from enumeration import ConcreteGroup, evaluate
from kernel import (
    DEFAULT_MAX_ORDER, derived_subgroup, element_orders, generated_subgroup, group_prime,
    is_normal_in, lower_central_term, nilpotency_class, normal_closure, subgroup_as_group,
)
from presentation import expand_word

logger = logging.getLogger(__name__)


def element_of(g: ConcreteGroup, text: str) -> int:
    return evaluate(g, expand_word(text, g.generator_names))


def _elements(g: ConcreteGroup, words: List[str]) -> List[int]:
    return [element_of(g, w) for w in words]


def _commute(g: ConcreteGroup, x: int, y: int) -> bool:
    return g.mul[x, y] == g.mul[y, x]


def _non_metahamiltonian_subgroup(g: ConcreteGroup, w: Witness, cap: int) -> bool:
    h = generated_subgroup(g, _elements(g, w.subgroup))
    k = generated_subgroup(g, _elements(g, w.elements))
    return k.issubset(h) and not k.is_abelian and not is_normal_in(k, h)


def _non_metahamiltonian_quotient(g: ConcreteGroup, w: Witness, cap: int) -> bool:
    n = generated_subgroup(g, _elements(g, w.subgroup))
    representatives = _elements(g, w.elements)
    preimage = generated_subgroup(g, [*n.generators, *representatives])
    nonabelian_image = any(
        not n.mask[g.mul[g.inv[g.mul[y, x]], g.mul[x, y]]]
        for x in representatives for y in representatives
    )
    return n.is_normal and nonabelian_image and not preimage.is_normal


def _closure_not_abelian_or_a1(g: ConcreteGroup, w: Witness, cap: int) -> bool:
    (x,) = _elements(g, w.elements)
    k = normal_closure(g, [x])
    if k.is_abelian or not w.subgroup:
        return False
    inner = generated_subgroup(g, _elements(g, w.subgroup))
    return inner.issubset(k) and inner.order < k.order and not inner.is_abelian


def _class_above_3(g: ConcreteGroup, w: Witness, cap: int) -> bool:
    (x,) = _elements(g, w.elements)
    return x != g.identity and x in lower_central_term(g, 4)


def _derived_nonabelian(g: ConcreteGroup, w: Witness, cap: int) -> bool:
    x, y = _elements(g, w.elements)
    derived = derived_subgroup(g)
    return x in derived and y in derived and not _commute(g, x, y)


def _not_metacyclic(g: ConcreteGroup, w: Witness, cap: int) -> bool:
    (x,) = _elements(g, w.elements)
    p = group_prime(g)
    return (
        x in derived_subgroup(g)
        and element_orders(g)[x] > p
        and not is_metacyclic(g, cap)
    )


def _a2_subgroup_class(g: ConcreteGroup, w: Witness, cap: int) -> bool:
    section = subgroup_as_group(generated_subgroup(g, _elements(g, w.subgroup))).group
    return a_degree(section, cap) == 2 and nilpotency_class(section) != 2


WORD_CHECKS: Dict[str, Callable[[ConcreteGroup, Witness, int], bool]] = {
    "non-metahamiltonian-subgroup": _non_metahamiltonian_subgroup,
    "non-metahamiltonian-quotient": _non_metahamiltonian_quotient,
    "closure-not-abelian-or-a1": _closure_not_abelian_or_a1,
    "class-above-3": _class_above_3,
    "derived-nonabelian": _derived_nonabelian,
    "not-metacyclic": _not_metacyclic,
    "a2-subgroup-class": _a2_subgroup_class,
}


def recheck_witness(g: ConcreteGroup, report: TheoremReport, cap: int = DEFAULT_MAX_ORDER) -> bool:
    """True when the witness of a ``fails`` report reproduces the failure from scratch.

    Witness kinds carrying words are re-tested directly; kinds that record a
    disagreement between computed quantities are re-tested by rerunning the
    theorem's suite on an uncached copy of the group.
    """
    if report.verdict != "fails" or report.witness is None:
        return False
    fresh = g.with_label(g.label)
    check = WORD_CHECKS.get(report.witness.kind)
    if check is not None:
        confirmed = check(fresh, report.witness, cap)
    else:
        suite = suite_map[report.theorem](max_order=cap)
        rerun = [r for r in suite.check(fresh, report.label) if r.theorem == report.theorem]
        confirmed = bool(rerun) and rerun[0].verdict == "fails" and rerun[0].witness.kind == report.witness.kind
    logger.info(f"[{report.label}] {report.theorem} witness {report.witness.kind}: confirmed={confirmed}")
    return confirmed
