import logging

import numpy as np

from enumeration import ConcreteGroup
from kernel import (
    DEFAULT_MAX_ORDER, Subgroup, all_subgroups, derived_subgroup, element_orders, frattini,
    is_cyclic, join, lower_central_term, quotient, subgroup_as_group, subgroup_from_mask,
)
from kernel.pgroups import require_prime

logger = logging.getLogger(__name__)


def orders_modulo(g: ConcreteGroup, n: Subgroup) -> np.ndarray:
    """Least k >= 1 with x^k in N, for every element x."""
    everything = np.arange(g.order)
    result = np.zeros(g.order, dtype=np.int64)
    power = everything.copy()
    k = 1
    while (result == 0).any():
        result[(result == 0) & n.mask[power]] = k
        power = g.mul[power, everything]
        k += 1
    return result


def is_metacyclic(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> bool:
    """Some cyclic normal N has cyclic G/N; normal subgroups are tried largest first."""
    if g.order == 1 or is_cyclic(subgroup_from_mask(g, np.ones(g.order, dtype=bool))):
        return True
    # cyclic candidates only
    orders = element_orders(g)
    for n in sorted(all_subgroups(g, cap), key=lambda h: -h.order):
        if not (orders[n.elements] == n.order).any() or not n.is_normal:
            continue
        if (orders_modulo(g, n) == n.index).any():
            return True
    return False


def blackburn_kernel(g: ConcreteGroup) -> Subgroup:
    """Φ(G')G_3, the normal subgroup whose quotient decides metacyclicity of a p-group."""
    derived = derived_subgroup(g)
    section = subgroup_as_group(derived)
    inner = frattini(section.group)
    mask = np.zeros(g.order, dtype=bool)
    mask[section.mapping[inner.elements]] = True
    return join(g, subgroup_from_mask(g, mask), lower_central_term(g, 3))


def is_metacyclic_blackburn(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> bool:
    require_prime(g)
    kernel = blackburn_kernel(g)
    reduced = quotient(g, kernel).group
    logger.debug(f"[{g.label}] Blackburn quotient has order {reduced.order}")
    return is_metacyclic(reduced, cap)
