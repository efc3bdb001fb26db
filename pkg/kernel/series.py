import logging
from typing import List, Optional

import numpy as np

from enumeration import ConcreteGroup
from kernel.subgroups import (
    Subgroup, generated_subgroup, normal_closure, trivial_subgroup, whole_group,
)

logger = logging.getLogger(__name__)


def commutator_elements(g: ConcreteGroup, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """``[x, y] = x^-1 y^-1 x y`` for every pair, flattened."""
    x = np.asarray(xs, dtype=np.int64)[:, None]
    y = np.asarray(ys, dtype=np.int64)[None, :]
    return g.mul[g.mul[g.inv[x], g.inv[y]], g.mul[x, y]].ravel()


def commutator_subgroup(g: ConcreteGroup, a: Subgroup, b: Subgroup) -> Subgroup:
    """[A, B] generated by commutators of all element pairs."""
    comms = np.unique(commutator_elements(g, a.elements, b.elements))
    return generated_subgroup(g, comms[comms != 0])


def derived_subgroup(g: ConcreteGroup) -> Subgroup:
    def compute():
        gens = np.array(g.gens, dtype=np.int64)
        comms = np.unique(commutator_elements(g, gens, gens)) if gens.size else gens
        return normal_closure(g, comms[comms != 0])

    return g.memo("derived_subgroup", compute)


def lower_central_series(g: ConcreteGroup) -> List[Subgroup]:
    """G = G_1 > G_2 > ... ending at the trivial group, or at the first repeated term."""

    def compute():
        top = whole_group(g)
        series = [top]
        while series[-1].order > 1:
            following = commutator_subgroup(g, series[-1], top)
            if following.order == series[-1].order:
                break
            series.append(following)
        return series

    return g.memo("lower_central_series", compute)


def nilpotency_class(g: ConcreteGroup) -> Optional[int]:
    """Least c with G_{c+1} = 1; 0 for the trivial group, None if not nilpotent."""
    series = lower_central_series(g)
    if series[-1].order > 1:
        return None
    return len(series) - 1


def lower_central_term(g: ConcreteGroup, i: int) -> Subgroup:
    series = lower_central_series(g)
    if i - 1 < len(series):
        return series[i - 1]
    return trivial_subgroup(g) if series[-1].order == 1 else series[-1]
