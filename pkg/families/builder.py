import logging
from typing import NamedTuple

from enumeration import DEFAULT_MAX_COSETS, ConcreteGroup, enumerate_group
from families.catalog import FAMILIES, Family
from families.specs import FamilySpec, PARAMETER_ORDER
from presentation import Presentation, parse_presentation
from utils.errors import OrderMismatchError, ParameterRangeError

logger = logging.getLogger(__name__)


class BuiltGroup(NamedTuple):
    group: ConcreteGroup
    presentation: Presentation
    spec: FamilySpec
    text: str


def get_family(family_id: str) -> Family:
    if (family := FAMILIES.get(family_id)) is None:
        raise ParameterRangeError(family_id, f"unknown family; choose from {sorted(FAMILIES)}")
    return family


def resolve_spec(spec: FamilySpec) -> FamilySpec:
    """Check parameters against the family's side conditions and fill in derived values.

    Raises ParameterRangeError naming the first violated condition.
    """
    family = get_family(spec.family)
    allowed = set(family.parameters) | set(family.optional)
    if family.fixed_prime is not None:
        if spec.p is not None and spec.p != family.fixed_prime:
            raise ParameterRangeError(spec.family, f"p = {family.fixed_prime}")
        allowed.add("p")
    for name in PARAMETER_ORDER:
        value = getattr(spec, name)
        if name in family.parameters and value is None:
            raise ParameterRangeError(spec.family, f"parameter {name} is required")
        if name not in allowed and value is not None:
            raise ParameterRangeError(spec.family, f"parameter {name} is not used by this family")
    working = spec.model_copy(update={"p": spec.p or family.fixed_prime})
    for condition, holds in family.conditions:
        if not holds(working):
            raise ParameterRangeError(spec.family, condition)
    derived = family.derive(working)
    # fixed primes stay out of the label
    return spec.model_copy(update={**derived, "p": None if family.fixed_prime else spec.p})


def _with_prime(family: Family, spec: FamilySpec) -> FamilySpec:
    return spec.model_copy(update={"p": spec.p or family.fixed_prime})


def family_text(spec: FamilySpec) -> str:
    family = get_family(spec.family)
    resolved = resolve_spec(spec)
    return family.text(_with_prime(family, resolved))


def expected_order(spec: FamilySpec) -> int:
    family = get_family(spec.family)
    resolved = resolve_spec(spec)
    return family.order(_with_prime(family, resolved))


def build(spec: FamilySpec, max_cosets: int = DEFAULT_MAX_COSETS) -> BuiltGroup:
    """Generate the family's presentation from its parameters and enumerate it."""
    family = get_family(spec.family)
    resolved = resolve_spec(spec)
    text = family.text(_with_prime(family, resolved))
    label = resolved.label()
    presentation = parse_presentation(text)
    group = enumerate_group(presentation, max_cosets=max_cosets, label=label)
    expected = family.order(_with_prime(family, resolved))
    if group.order != expected:
        raise OrderMismatchError(label, group.order, expected)
    logger.info(f"[{label}] built group of order {group.order}")
    return BuiltGroup(group, presentation, resolved, text)
