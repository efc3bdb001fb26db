import logging
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from enumeration import ConcreteGroup
from kernel.lattice import frattini, minimal_generators
from kernel.pgroups import element_orders, exponent
from kernel.series import derived_subgroup, nilpotency_class
from kernel.subgroups import center, subgroup_from_mask, whole_group
from utils.errors import CapExceededError

logger = logging.getLogger(__name__)

DEFAULT_ISOMORPHISM_CAP = 512


class GroupInvariants(NamedTuple):
    order: int
    order_profile: tuple
    center_order: int
    derived_order: int
    d: int
    c: Optional[int]
    exponent: int


def group_invariants(g: ConcreteGroup) -> GroupInvariants:
    def compute():
        values, counts = np.unique(element_orders(g), return_counts=True)
        return GroupInvariants(
            order=g.order,
            order_profile=tuple(zip(values.tolist(), counts.tolist())),
            center_order=center(g).order,
            derived_order=derived_subgroup(g).order,
            d=minimal_generators(g),
            c=nilpotency_class(g),
            exponent=exponent(whole_group(g)),
        )

    return g.memo("invariants", compute)


def element_signatures(g: ConcreteGroup) -> np.ndarray:
    """Per-element (order, centralizer size, in Z, in G', in Φ), packed into rows."""

    def compute():
        centralizer_sizes = (g.mul == g.mul.T).sum(axis=1)
        return np.stack([
            element_orders(g),
            centralizer_sizes,
            center(g).mask.astype(np.int64),
            derived_subgroup(g).mask.astype(np.int64),
            frattini(g).mask.astype(np.int64),
        ], axis=1)

    return g.memo("element_signatures", compute)


def _extend(
    g1: ConcreteGroup, g2: ConcreteGroup, gens: Sequence[int], images: Sequence[int]
) -> Optional[np.ndarray]:
    """Extend generator images to the subgroup they generate, or None if that is not an injective homomorphism."""
    phi = np.full(g1.order, -1, dtype=np.int64)
    phi[0] = 0
    used = {0}
    frontier = [0]
    while frontier:
        fresh = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = int(g1.mul[x, s])
                image = int(g2.mul[phi[x], t])
                if phi[y] >= 0:
                    if phi[y] != image:
                        return None
                    continue
                if image in used:
                    return None
                phi[y] = image
                used.add(image)
                fresh.append(y)
        frontier = fresh
    return phi


def find_isomorphism(
    g1: ConcreteGroup, g2: ConcreteGroup, cap: int = DEFAULT_ISOMORPHISM_CAP
) -> Optional[np.ndarray]:
    """Backtracking search for an isomorphism; ``phi[x]`` is the image of element x.

    A fixed generating sequence of g1 is mapped to candidate images in g2 with
    matching element signatures; each partial assignment is extended to the
    subgroup it generates and rejected on the first inconsistency.
    """
    for g in (g1, g2):
        if g.order > cap:
            raise CapExceededError("isomorphic", g.order, cap)
    if g1.order != g2.order:
        return None
    if group_invariants(g1) != group_invariants(g2):
        return None
    gens = list(subgroup_from_mask(g1, np.ones(g1.order, dtype=bool)).generators)
    sig1, sig2 = element_signatures(g1), element_signatures(g2)
    candidates: List[np.ndarray] = [
        np.flatnonzero((sig2 == sig1[s]).all(axis=1)) for s in gens
    ]

    def search(images: List[int]) -> Optional[np.ndarray]:
        depth = len(images)
        for t in candidates[depth]:
            trial = images + [int(t)]
            phi = _extend(g1, g2, gens[: depth + 1], trial)
            if phi is None:
                continue
            if depth + 1 == len(gens):
                return phi
            found = search(trial)
            if found is not None:
                return found
        return None

    if not gens:
        return np.zeros(1, dtype=np.int64)
    return search([])


def isomorphic(g1: ConcreteGroup, g2: ConcreteGroup, cap: int = DEFAULT_ISOMORPHISM_CAP) -> bool:
    return find_isomorphism(g1, g2, cap) is not None


def is_isomorphism(g1: ConcreteGroup, g2: ConcreteGroup, phi: np.ndarray) -> bool:
    """Bijective and multiplicative over the whole table."""
    if len(np.unique(phi)) != g2.order or phi.shape[0] != g1.order:
        return False
    return bool((phi[g1.mul] == g2.mul[phi[:, None], phi[None, :]]).all())
