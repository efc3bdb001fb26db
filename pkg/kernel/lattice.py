import itertools
import logging
from typing import Dict, List

import numpy as np

from enumeration import ConcreteGroup
from kernel.pgroups import agemo1, element_orders, group_prime, log_p, power_map
from kernel.series import derived_subgroup
from kernel.subgroups import (
    Subgroup, generated_subgroup, join, normalizer_mask, subgroup_from_mask,
    trivial_subgroup, whole_group,
)
from utils.errors import CapExceededError

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 1024


def _check_cap(g: ConcreteGroup, cap: int, what: str):
    if g.order > cap:
        raise CapExceededError(what, g.order, cap)


def _sorted(subgroups) -> List[Subgroup]:
    return sorted(subgroups, key=lambda h: (h.order, h.key))


def _layered_p_subgroups(g: ConcreteGroup, p: int) -> List[Subgroup]:
    """Subgroups of a p-group, one order p^k layer at a time.

    Every subgroup K of order p^(k+1) is H<g> for a maximal subgroup H of K
    and any g in N(H) \\ H with g^p in H, so extending each layer by such
    elements finds everything.
    """
    p_power = power_map(g, p)
    found: Dict[int, Subgroup] = {}
    layer = [trivial_subgroup(g)]
    found[layer[0].bits] = layer[0]
    while layer:
        following: Dict[int, Subgroup] = {}
        for h in layer:
            candidates = normalizer_mask(g, h) & ~h.mask & h.mask[p_power]
            covered = h.mask.copy()
            for x in np.flatnonzero(candidates):
                if covered[x]:
                    continue
                mask = h.mask.copy()
                coset = h.elements
                for _ in range(p - 1):
                    coset = g.mul[coset, x]
                    mask[coset] = True
                covered |= mask
                k = Subgroup(g, mask, h.generators + (int(x),))
                if k.bits not in found and k.bits not in following:
                    following[k.bits] = k
        found.update(following)
        layer = list(following.values())
    return list(found.values())


def all_subgroups(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> List[Subgroup]:
    """Every subgroup exactly once, sorted by (order, element indices)."""
    _check_cap(g, cap, "all_subgroups")

    def compute():
        p = group_prime(g)
        if p is None:
            return all_subgroups_by_closure(g, cap)
        subgroups = _sorted(_layered_p_subgroups(g, p))
        logger.debug(f"[{g.label}] {len(subgroups)} subgroups")
        return subgroups

    return g.memo("all_subgroups", compute)


def all_subgroups_by_closure(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> List[Subgroup]:
    """Generic fixpoint: cyclic subgroups, then <H, x> for every known H and x outside H.

    Works for any finite group and shares nothing with the p-group layering,
    so it also serves as an independent check of ``all_subgroups``.
    """
    _check_cap(g, cap, "all_subgroups_by_closure")
    found: Dict[int, Subgroup] = {}
    for x in range(g.order):
        h = generated_subgroup(g, [x])
        found.setdefault(h.bits, h)
    queue = list(found.values())
    while queue:
        h = queue.pop()
        covered = h.mask.copy()
        for x in range(g.order):
            if covered[x]:
                continue
            # <H, x> only depends on the coset Hx
            covered[g.mul[h.elements, x]] = True
            k = generated_subgroup(g, h.generators + (x,))
            if k.bits not in found:
                found[k.bits] = k
                queue.append(k)
    return _sorted(found.values())


def maximal_subgroups(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> List[Subgroup]:
    def compute():
        subgroups = all_subgroups(g, cap)
        proper = [h for h in subgroups if h.order < g.order]
        p = group_prime(g)
        if p is not None:
            return [h for h in proper if h.order * p == g.order]
        return [
            h for h in proper
            if not any(h.order < k.order and h.issubset(k) for k in proper)
        ]

    return g.memo("maximal_subgroups", compute)


def frattini_by_maximal_subgroups(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> Subgroup:
    maximal = maximal_subgroups(g, cap)
    if not maximal:
        return whole_group(g)
    mask = np.ones(g.order, dtype=bool)
    for h in maximal:
        mask &= h.mask
    return subgroup_from_mask(g, mask)


def frattini(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> Subgroup:
    """G'·℧1(G) for p-groups; intersection of maximal subgroups otherwise."""

    def compute():
        if group_prime(g) is None:
            return frattini_by_maximal_subgroups(g, cap)
        return join(g, derived_subgroup(g), agemo1(g))

    return g.memo("frattini", compute)


def minimal_generators(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> int:
    """d(G): log_p |G/Φ(G)| for p-groups, a smallest generating set search otherwise."""
    if g.order == 1:
        return 0
    p = group_prime(g)
    if p is not None:
        return log_p(g.order // frattini(g, cap).order, p)
    _check_cap(g, cap, "minimal_generators")
    # one generator per cyclic subgroup is enough
    seen = set()
    representatives = []
    orders = element_orders(g)
    for x in np.argsort(-orders, kind="stable"):
        h = generated_subgroup(g, [int(x)])
        if h.bits not in seen:
            seen.add(h.bits)
            representatives.append(int(x))
    for k in itertools.count(1):
        for combo in itertools.combinations(representatives, k):
            if generated_subgroup(g, combo).order == g.order:
                return k
    raise AssertionError("unreachable")
