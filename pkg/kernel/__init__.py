from .subgroups import (
    Subgroup, ElementSet, generated_subgroup, normal_closure, is_normal, is_normal_in, center, centralizer,
    normalizer, join, intersection, subgroup_from_mask, trivial_subgroup, whole_group,
)
from .pgroups import (
    prime_power, group_prime, is_p_group, element_orders, power_map, exponent, lambda1, v1,
    omega1, agemo1, is_p_abelian, is_elementary_abelian, is_cyclic,
)
from .series import (
    commutator_elements, commutator_subgroup, derived_subgroup, lower_central_series,
    lower_central_term, nilpotency_class,
)
from .lattice import (
    DEFAULT_MAX_ORDER, all_subgroups, all_subgroups_by_closure, maximal_subgroups, frattini,
    frattini_by_maximal_subgroups, minimal_generators,
)
from .sections import SectionMap, quotient, subgroup_as_group, direct_product, central_product
from .isomorphism import (
    DEFAULT_ISOMORPHISM_CAP, find_isomorphism, isomorphic, is_isomorphism, group_invariants,
)

all = [
    Subgroup, ElementSet, generated_subgroup, normal_closure, is_normal, is_normal_in, center, centralizer,
    normalizer, join, intersection, subgroup_from_mask, trivial_subgroup, whole_group,
    prime_power, group_prime, is_p_group, element_orders, power_map, exponent, lambda1, v1,
    omega1, agemo1, is_p_abelian, is_elementary_abelian, is_cyclic, commutator_elements,
    commutator_subgroup, derived_subgroup, lower_central_series, lower_central_term,
    nilpotency_class, DEFAULT_MAX_ORDER, all_subgroups, all_subgroups_by_closure,
    maximal_subgroups, frattini, frattini_by_maximal_subgroups, minimal_generators, SectionMap,
    quotient, subgroup_as_group, direct_product, central_product, DEFAULT_ISOMORPHISM_CAP,
    find_isomorphism, isomorphic, is_isomorphism, group_invariants,
]
