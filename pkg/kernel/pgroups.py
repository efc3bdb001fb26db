import logging
from typing import Optional, Tuple

import numpy as np

from enumeration import ConcreteGroup
from kernel.subgroups import ElementSet, Subgroup, generated_subgroup, subgroup_from_mask
from utils.errors import NotAPGroupError

logger = logging.getLogger(__name__)


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """Return (p, k) with n = p^k for a prime p, or None (also for n = 1)."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def group_prime(g: ConcreteGroup) -> Optional[int]:
    pk = prime_power(g.order)
    return pk[0] if pk else None


def is_p_group(g: ConcreteGroup) -> bool:
    return group_prime(g) is not None


def require_prime(g: ConcreteGroup, p: Optional[int] = None) -> int:
    found = group_prime(g)
    if found is None or (p is not None and p != found):
        raise NotAPGroupError(f"[{g.label}] group of order {g.order} is not a {p or 'p'}-group")
    return found


def element_orders(g: ConcreteGroup) -> np.ndarray:
    def compute():
        n = g.order
        orders = np.zeros(n, dtype=np.int64)
        everything = np.arange(n)
        power = everything.copy()
        k = 1
        while (orders == 0).any():
            hit = (power == 0) & (orders == 0)
            orders[hit] = k
            power = g.mul[power, everything]
            k += 1
        return orders

    return g.memo("element_orders", compute)


def power_map(g: ConcreteGroup, k: int) -> np.ndarray:
    """``x -> x^k`` for every element, by repeated squaring over the table."""
    n = g.order
    base = np.arange(n) if k >= 0 else g.inv.copy()
    e = abs(k)
    result = np.zeros(n, dtype=np.int64)
    while e:
        if e & 1:
            result = g.mul[result, base]
        base = g.mul[base, base]
        e >>= 1
    return result


def exponent(h: Subgroup) -> int:
    orders = element_orders(h.parent)[h.elements]
    return int(np.lcm.reduce(orders)) if orders.size else 1


def lambda1(g: ConcreteGroup, p: Optional[int] = None) -> ElementSet:
    p = require_prime(g, p)
    return ElementSet(g, power_map(g, p) == 0)


def v1(g: ConcreteGroup, p: Optional[int] = None) -> ElementSet:
    p = require_prime(g, p)
    mask = np.zeros(g.order, dtype=bool)
    mask[power_map(g, p)] = True
    return ElementSet(g, mask)


def omega1(g: ConcreteGroup, p: Optional[int] = None) -> Subgroup:
    return generated_subgroup(g, lambda1(g, p).elements)


def agemo1(g: ConcreteGroup, p: Optional[int] = None) -> Subgroup:
    def compute():
        return generated_subgroup(g, v1(g, p).elements)

    return g.memo("agemo1", compute)


def is_p_abelian(g: ConcreteGroup, p: Optional[int] = None) -> bool:
    """(ab)^p = a^p b^p for all a, b."""
    p = require_prime(g, p)
    powers = power_map(g, p)
    return bool((powers[g.mul] == g.mul[powers[:, None], powers[None, :]]).all())


def is_elementary_abelian(h: Subgroup, p: int) -> bool:
    return h.is_abelian and exponent(h) in (1, p)


def is_cyclic(h: Subgroup) -> bool:
    return bool((element_orders(h.parent)[h.elements] == h.order).any())


def log_p(n: int, p: int) -> int:
    """Exponent k with p^k = n; ValueError when n is not a power of p."""
    k = 0
    while n > 1 and n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise ValueError(f"not a power of {p}")
    return k
