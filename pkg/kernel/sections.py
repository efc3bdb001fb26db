import logging
from typing import Dict, List, NamedTuple, Sequence, Tuple

import numpy as np

from enumeration import ConcreteGroup, group_from_table, table_positions
from kernel.subgroups import Subgroup, center, subgroup_from_mask
from utils.errors import NotNormalError, PairingError

logger = logging.getLogger(__name__)


class SectionMap(NamedTuple):
    """A derived group with its connecting map.

    For quotients ``mapping[x]`` is the image of parent element x; for
    subgroups ``mapping[y]`` is the parent element behind element y.
    """

    group: ConcreteGroup
    mapping: np.ndarray


def coset_labels(g: ConcreteGroup, n: Subgroup) -> Tuple[np.ndarray, np.ndarray]:
    """Coset index of every element and one representative per coset."""
    labels = np.full(g.order, -1, dtype=np.int64)
    representatives = []
    for x in range(g.order):
        if labels[x] < 0:
            labels[g.mul[n.elements, x]] = len(representatives)
            representatives.append(x)
    return labels, np.array(representatives, dtype=np.int64)


def quotient(g: ConcreteGroup, n: Subgroup, label: str = "") -> SectionMap:
    """G/N on cosets; element words stay words over the parent generators."""
    if not n.is_normal:
        raise NotNormalError(f"[{g.label}] subgroup {n.generator_words()} is not normal")
    labels, representatives = coset_labels(g, n)
    table = labels[g.mul[representatives[:, None], representatives[None, :]]]
    gens = [int(labels[s]) for s in g.gens]
    group = group_from_table(
        table, gens, g.generator_names, label=label or f"{g.label}/{n.order}"
    )
    positions = table_positions(group, table, gens)
    renumber = np.empty(len(representatives), dtype=np.int64)
    renumber[positions] = np.arange(group.order)
    return SectionMap(group, renumber[labels])


def subgroup_as_group(h: Subgroup, label: str = "") -> SectionMap:
    """Re-index a subgroup as a standalone group on generators ``x1, x2, ...``."""
    g = h.parent
    elements = h.elements
    index = np.full(g.order, -1, dtype=np.int64)
    index[elements] = np.arange(elements.size)
    table = index[g.mul[elements[:, None], elements[None, :]]]
    gens = [int(index[s]) for s in h.generators]
    group = group_from_table(
        table,
        gens,
        [f"x{i + 1}" for i in range(len(gens))],
        label=label or f"{g.label}<{','.join(h.generator_words())}>",
    )
    return SectionMap(group, elements[table_positions(group, table, gens)])


def _product_names(first: Sequence[str], second: Sequence[str]) -> List[str]:
    names = list(first)
    for name in second:
        candidate = name
        suffix = 2
        while candidate in names:
            candidate = f"{name}{suffix}"
            suffix += 1
        names.append(candidate)
    return names


def _product_table(g1: ConcreteGroup, g2: ConcreteGroup) -> np.ndarray:
    n1, n2 = g1.order, g2.order
    tensor = g1.mul[:, None, :, None] * n2 + g2.mul[None, :, None, :]
    return tensor.reshape(n1 * n2, n1 * n2)


def _direct_product_with_positions(
    g1: ConcreteGroup, g2: ConcreteGroup, label: str
) -> Tuple[ConcreteGroup, np.ndarray]:
    n2 = g2.order
    table = _product_table(g1, g2)
    gens = [x * n2 for x in g1.gens] + list(g2.gens)
    group = group_from_table(
        table, gens, _product_names(g1.generator_names, g2.generator_names), label=label
    )
    return group, table_positions(group, table, gens)


def direct_product(g1: ConcreteGroup, g2: ConcreteGroup, label: str = "") -> ConcreteGroup:
    """G1 x G2 generated by the generators of both factors."""
    group, _ = _direct_product_with_positions(g1, g2, label or f"{g1.label}x{g2.label}")
    return group


def pairing_isomorphism(
    g1: ConcreteGroup, g2: ConcreteGroup, pairing: Sequence[Tuple[int, int]]
) -> Dict[int, int]:
    """Extend the pairing z1 -> z2 to an isomorphism between the central subgroups they generate."""
    z1, z2 = center(g1), center(g2)
    for a, b in pairing:
        if a not in z1:
            raise PairingError(f"{g1.format_element(a)} is not central in {g1.label or 'G1'}")
        if b not in z2:
            raise PairingError(f"{g2.format_element(b)} is not central in {g2.label or 'G2'}")
    images = {0: 0}
    frontier = [0]
    while frontier:
        fresh = []
        for x in frontier:
            for a, b in pairing:
                y = int(g1.mul[x, a])
                image = int(g2.mul[images[x], b])
                if y in images:
                    if images[y] != image:
                        raise PairingError("Pairing does not extend to a homomorphism")
                    continue
                images[y] = image
                fresh.append(y)
        frontier = fresh
    if len(set(images.values())) != len(images):
        raise PairingError("Pairing orders do not match")
    return images


def central_product(
    g1: ConcreteGroup,
    g2: ConcreteGroup,
    pairing: Sequence[Tuple[int, int]],
    label: str = "",
) -> ConcreteGroup:
    """(G1 x G2)/N with N = {(z, φ(z)^-1)} for the isomorphism φ the pairing induces."""
    images = pairing_isomorphism(g1, g2, pairing)
    label = label or f"{g1.label}*{g2.label}"
    product, positions = _direct_product_with_positions(g1, g2, label)
    renumber = np.empty(product.order, dtype=np.int64)
    renumber[positions] = np.arange(product.order)
    mask = np.zeros(product.order, dtype=bool)
    for z, image in images.items():
        mask[renumber[z * g2.order + int(g2.inv[image])]] = True
    n = subgroup_from_mask(product, mask)
    logger.debug(f"[{label}] identifying a central subgroup of order {n.order}")
    return quotient(product, n, label=label).group
