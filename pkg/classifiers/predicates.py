import logging
from typing import Dict, List

import numpy as np

from enumeration import ConcreteGroup
from kernel import (
    DEFAULT_MAX_ORDER, Subgroup, all_subgroups, commutator_elements, group_prime,
    maximal_subgroups,
)
from utils.errors import NotAPGroupError

logger = logging.getLogger(__name__)


def is_abelian(g: ConcreteGroup) -> bool:
    gens = np.array(g.gens, dtype=np.int64)
    if gens.size and not (g.mul[gens[:, None], gens[None, :]] == g.mul[gens[None, :], gens[:, None]]).all():
        return False
    return bool((g.mul == g.mul.T).all())


def is_dedekindian(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> bool:
    return all(h.is_normal for h in all_subgroups(g, cap))


def is_hamiltonian(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> bool:
    return not is_abelian(g) and is_dedekindian(g, cap)


def is_minimal_nonabelian(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> bool:
    """Non-abelian with every maximal subgroup abelian."""
    if is_abelian(g):
        return False
    return all(h.is_abelian for h in maximal_subgroups(g, cap))


def minimal_nonabelian_subgroups(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> List[Subgroup]:
    """Non-abelian subgroups with no non-abelian proper subgroup."""

    def compute():
        nonabelian = [h for h in all_subgroups(g, cap) if not h.is_abelian]
        return [
            h for h in nonabelian
            if not any(k.order < h.order and k.issubset(h) for k in nonabelian)
        ]

    return g.memo("minimal_nonabelian_subgroups", compute)


def is_two_engel(g: ConcreteGroup) -> bool:
    """[x, y, y] = 1 for every pair."""
    everything = np.arange(g.order)
    comms = commutator_elements(g, everything, everything).reshape(g.order, g.order)
    ys = np.broadcast_to(everything[None, :], comms.shape)
    triples = g.mul[g.mul[g.inv[comms], g.inv[ys]], g.mul[comms, ys]]
    return bool((triples == 0).all())


def subgroups_by_index(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> Dict[int, List[Subgroup]]:
    buckets: Dict[int, List[Subgroup]] = {}
    for h in all_subgroups(g, cap):
        buckets.setdefault(h.index, []).append(h)
    return buckets


def a_degree(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> int:
    """Least t with every subgroup of index p^t abelian; 0 for abelian groups."""
    p = group_prime(g)
    if p is None:
        if g.order == 1:
            return 0
        raise NotAPGroupError(f"[{g.label}] a_degree needs a p-group, order is {g.order}")
    if is_abelian(g):
        return 0
    buckets = subgroups_by_index(g, cap)
    t = 1
    while not all(h.is_abelian for h in buckets.get(p ** t, [])):
        t += 1
    return t


def has_abelian_maximal_subgroup(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> bool:
    if g.order == 1:
        return False
    return any(h.is_abelian for h in maximal_subgroups(g, cap))
