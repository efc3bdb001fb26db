import logging
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from enumeration import ConcreteGroup

logger = logging.getLogger(__name__)


def mask_to_bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


class ElementSet:
    """A subset of the elements of a parent group (not necessarily a subgroup)."""

    def __init__(self, parent: ConcreteGroup, mask: np.ndarray):
        self.parent = parent
        self.mask = np.asarray(mask, dtype=bool)

    @cached_property
    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, element: int) -> bool:
        return bool(self.mask[element])

    def __repr__(self) -> str:
        return f"ElementSet(size={len(self)}, elements={self.elements.tolist()})"


class Subgroup:
    """A subgroup of a ConcreteGroup held as a boolean membership mask.

    ``generators`` always generate the subgroup and are used as the printable
    witness; normality and abelianness are computed once and cached.
    """

    def __init__(self, parent: ConcreteGroup, mask: np.ndarray, generators: Sequence[int]):
        self.parent = parent
        self.mask = np.asarray(mask, dtype=bool)
        self.generators: Tuple[int, ...] = tuple(int(x) for x in generators if int(x) != 0)
        self.order = int(self.mask.sum())
        if parent.order % self.order != 0:
            raise ValueError(f"Subgroup order {self.order} does not divide {parent.order}")

    @cached_property
    def bits(self) -> int:
        return mask_to_bits(self.mask)

    @cached_property
    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @cached_property
    def key(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.elements)

    @cached_property
    def is_normal(self) -> bool:
        return is_normal(self)

    @cached_property
    def is_abelian(self) -> bool:
        mul = self.parent.mul
        gens = np.array(self.generators, dtype=np.int64)
        if gens.size < 2:
            return True
        return bool((mul[gens[:, None], gens[None, :]] == mul[gens[None, :], gens[:, None]]).all())

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, element: int) -> bool:
        return bool(self.mask[element])

    def __len__(self) -> int:
        return self.order

    def issubset(self, other: "Subgroup") -> bool:
        return self.bits & ~other.bits == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.bits == self.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def generator_words(self) -> List[str]:
        return [self.parent.format_element(x) for x in self.generators]

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, generators={self.generator_words()})"


def _closure_mask(g: ConcreteGroup, seeds: np.ndarray) -> np.ndarray:
    mask = np.zeros(g.order, dtype=bool)
    mask[0] = True
    frontier = np.array([0], dtype=np.int64)
    if seeds.size == 0:
        return mask
    while frontier.size:
        products = g.mul[frontier[:, None], seeds[None, :]].ravel()
        fresh = np.unique(products[~mask[products]])
        mask[fresh] = True
        frontier = fresh
    return mask


def _unique_seeds(seeds: Iterable[int]) -> List[int]:
    out = []
    for s in seeds:
        s = int(s)
        if s != 0 and s not in out:
            out.append(s)
    return out


def generated_subgroup(g: ConcreteGroup, seeds: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seeds`` (BFS closure under right multiplication)."""
    seeds = _unique_seeds(seeds)
    mask = _closure_mask(g, np.array(seeds, dtype=np.int64))
    return Subgroup(g, mask, seeds)


def trivial_subgroup(g: ConcreteGroup) -> Subgroup:
    mask = np.zeros(g.order, dtype=bool)
    mask[0] = True
    return Subgroup(g, mask, ())


def whole_group(g: ConcreteGroup) -> Subgroup:
    return Subgroup(g, np.ones(g.order, dtype=bool), g.gens)


def conjugates_of(g: ConcreteGroup, elements: Sequence[int], by: Sequence[int]) -> np.ndarray:
    """``x^-1 s x`` for every s in ``elements`` and x in ``by`` (flattened)."""
    s = np.asarray(elements, dtype=np.int64)
    x = np.asarray(by, dtype=np.int64)
    if s.size == 0 or x.size == 0:
        return np.zeros(0, dtype=np.int64)
    return g.mul[g.inv[x][None, :], g.mul[s[:, None], x[None, :]]].ravel()


def is_normal(h: Subgroup) -> bool:
    """Conjugating the subgroup's generators by the parent's generators suffices."""
    conj = conjugates_of(h.parent, h.generators, h.parent.gens)
    return bool(h.mask[conj].all())


def normal_closure(g: ConcreteGroup, seeds: Iterable[int]) -> Subgroup:
    generators = _unique_seeds(seeds)
    h = generated_subgroup(g, generators)
    while True:
        conj = conjugates_of(g, h.generators, g.gens)
        missing = [int(x) for x in np.unique(conj[~h.mask[conj]])]
        if not missing:
            return h
        generators.extend(missing)
        h = generated_subgroup(g, generators)


def subgroup_from_mask(g: ConcreteGroup, mask: np.ndarray) -> Subgroup:
    """Wrap a mask known to be a subgroup, choosing a small generating set greedily."""
    mask = np.asarray(mask, dtype=bool)
    from kernel.pgroups import element_orders

    orders = element_orders(g)
    members = np.flatnonzero(mask)
    # larger element orders first so fewer generators are needed
    candidates = members[np.argsort(-orders[members], kind="stable")]
    generators: List[int] = []
    current = np.zeros(g.order, dtype=bool)
    current[0] = True
    target = int(mask.sum())
    for x in candidates:
        if int(current.sum()) == target:
            break
        if not current[x]:
            generators.append(int(x))
            current = _closure_mask(g, np.array(generators, dtype=np.int64))
    return Subgroup(g, mask, generators)


def center(g: ConcreteGroup) -> Subgroup:
    return centralizer(g, whole_group(g))


def centralizer(g: ConcreteGroup, h: Subgroup) -> Subgroup:
    """Elements commuting with every generator of ``h``."""
    mask = np.ones(g.order, dtype=bool)
    for s in h.generators:
        mask &= g.mul[:, s] == g.mul[s, :]
    return subgroup_from_mask(g, mask)


def normalizer_mask(g: ConcreteGroup, h: Subgroup) -> np.ndarray:
    mask = np.ones(g.order, dtype=bool)
    everything = np.arange(g.order)
    for s in h.generators:
        mask &= h.mask[g.mul[g.inv, g.mul[s, everything]]]
    return mask


def normalizer(g: ConcreteGroup, h: Subgroup) -> Subgroup:
    return subgroup_from_mask(g, normalizer_mask(g, h))


def join(g: ConcreteGroup, *subgroups: Subgroup) -> Subgroup:
    seeds: List[int] = []
    for h in subgroups:
        seeds.extend(h.generators)
    return generated_subgroup(g, seeds)


def intersection(g: ConcreteGroup, *subgroups: Subgroup) -> Subgroup:
    mask = np.ones(g.order, dtype=bool)
    for h in subgroups:
        mask &= h.mask
    return subgroup_from_mask(g, mask)


def is_normal_in(k: Subgroup, h: Subgroup) -> bool:
    """K normal in H, for subgroups K <= H of the same parent."""
    conj = conjugates_of(k.parent, k.generators, h.generators)
    return bool(k.mask[conj].all())
