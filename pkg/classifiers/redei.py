import logging
from typing import Iterator, Optional, Tuple

import numpy as np

from classifiers.metacyclic import is_metacyclic
from classifiers.models import A1Type
from classifiers.predicates import is_minimal_nonabelian
from enumeration import ConcreteGroup
from kernel import DEFAULT_MAX_ORDER, center, element_orders, generated_subgroup
from kernel.pgroups import log_p, require_prime
from utils.errors import RedeiParameterizationError

logger = logging.getLogger(__name__)


def _power(g: ConcreteGroup, x: int, k: int) -> int:
    result = 0
    base = x
    while k:
        if k & 1:
            result = int(g.mul[result, base])
        base = int(g.mul[base, base])
        k >>= 1
    return result


def _commutator(g: ConcreteGroup, x: int, y: int) -> int:
    return int(g.mul[g.mul[g.inv[x], g.inv[y]], g.mul[x, y]])


def find_metacyclic_pair(g: ConcreteGroup, p: int, m: int, n: int) -> Optional[Tuple[int, int]]:
    """a, b generating G with o(a)=p^m, o(b)=p^n and a^b = a^(1+p^(m-1))."""
    orders = element_orders(g)
    bs = np.flatnonzero(orders == p ** n)
    for a in np.flatnonzero(orders == p ** m):
        target = _power(g, int(a), 1 + p ** (m - 1))
        conj = g.mul[g.inv[bs], g.mul[a, bs]]
        for b in bs[conj == target]:
            if generated_subgroup(g, [int(a), int(b)]).order == g.order:
                return int(a), int(b)
    return None


def find_nonmetacyclic_triple(g: ConcreteGroup, p: int, m: int, n: int) -> Optional[Tuple[int, int, int]]:
    """a, b generating G with o(a)=p^m, o(b)=p^n and c=[a,b] central of order p."""
    orders = element_orders(g)
    z = center(g)
    bs = np.flatnonzero(orders == p ** n)
    for a in np.flatnonzero(orders == p ** m):
        comms = g.mul[g.mul[g.inv[a], g.inv[bs]], g.mul[a, bs]]
        good = (orders[comms] == p) & z.mask[comms]
        for b in bs[good]:
            if generated_subgroup(g, [int(a), int(b)]).order == g.order:
                return int(a), int(b), _commutator(g, int(a), int(b))
    return None


def _splits(total: int, lower: int) -> Iterator[Tuple[int, int]]:
    for m in range(lower, total):
        yield m, total - m


def redei_type(g: ConcreteGroup, cap: int = DEFAULT_MAX_ORDER) -> A1Type:
    """Identify a minimal non-abelian p-group as Q8, Mp(m,n) or Mp(m,n,1).

    The lexicographically smallest admissible (m, n) is returned, together
    with the defining relations instantiated on the elements found.
    """
    p = require_prime(g)
    if not is_minimal_nonabelian(g, cap):
        raise RedeiParameterizationError(f"[{g.label}] group is not minimal non-abelian")
    total = log_p(g.order, p)
    orders = element_orders(g)
    if g.order == 8 and int((orders == 2).sum()) == 1:
        return A1Type(kind="Q8", p=2, relations=["unique involution, order 8"])
    word = g.format_element
    if is_metacyclic(g, cap):
        for m, n in _splits(total, 2):
            found = find_metacyclic_pair(g, p, m, n)
            if found is None:
                continue
            a, b = found
            relations = [
                f"a={word(a)}", f"b={word(b)}",
                f"a^{p ** m}=1", f"b^{p ** n}=1", f"a^b=a^{1 + p ** (m - 1)}",
            ]
            return A1Type(kind="Mp(m,n)", p=p, m=m, n=n, relations=relations)
    else:
        for m, n in _splits(total - 1, total // 2):
            if n < 1 or (p == 2 and m + n < 3):
                continue
            found = find_nonmetacyclic_triple(g, p, m, n)
            if found is None:
                continue
            a, b, c = found
            relations = [
                f"a={word(a)}", f"b={word(b)}", f"c={word(c)}",
                f"a^{p ** m}=1", f"b^{p ** n}=1", f"c^{p}=1", "c=[a,b]", "[c,a]=[c,b]=1",
            ]
            return A1Type(kind="Mp(m,n,1)", p=p, m=m, n=n, relations=relations)
    raise RedeiParameterizationError(
        f"[{g.label}] no Rédei parameterization found for a minimal non-abelian group of order {g.order}"
    )
