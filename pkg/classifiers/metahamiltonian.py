"""Three independent tests of "every non-abelian subgroup is normal".

Each returns a MetahamiltonianResult whose value is None for abelian input,
and whose witness lists generator words of an offending subgroup on failure.
"""
import logging

from classifiers.models import MetahamiltonianResult
from classifiers.predicates import is_abelian, minimal_nonabelian_subgroups
from enumeration import ConcreteGroup
from kernel import DEFAULT_MAX_ORDER, all_subgroups, derived_subgroup
from kernel.pgroups import require_prime

logger = logging.getLogger(__name__)


def is_metahamiltonian_definition(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> MetahamiltonianResult:
    if is_abelian(g):
        return MetahamiltonianResult(route="definition", value=None)
    for h in all_subgroups(g, cap):
        if not h.is_abelian and not h.is_normal:
            return MetahamiltonianResult(
                route="definition", value=False, witness=h.generator_words()
            )
    return MetahamiltonianResult(route="definition", value=True)


def is_metahamiltonian_a1(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> MetahamiltonianResult:
    if is_abelian(g):
        return MetahamiltonianResult(route="a1", value=None)
    for h in minimal_nonabelian_subgroups(g, cap):
        if not h.is_normal:
            return MetahamiltonianResult(route="a1", value=False, witness=h.generator_words())
    return MetahamiltonianResult(route="a1", value=True)


def is_metahamiltonian_derived(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> MetahamiltonianResult:
    require_prime(g)
    if is_abelian(g):
        return MetahamiltonianResult(route="derived", value=None)
    derived = derived_subgroup(g)
    for h in minimal_nonabelian_subgroups(g, cap):
        if not derived.issubset(h):
            return MetahamiltonianResult(route="derived", value=False, witness=h.generator_words())
    return MetahamiltonianResult(route="derived", value=True)


def is_metahamiltonian(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> bool:
    """True only for non-abelian groups passing the definitional test."""
    return bool(is_metahamiltonian_definition(g, cap).value)
