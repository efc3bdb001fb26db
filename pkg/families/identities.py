"""Products that the class II A2 families are listed as.

Type 8 is Q8 x C2, type 9 is Mp(n+1,m) x Cp, type 10 is Mp(n,m,1) x Cp,
type 11 is Q8 * C4 and type 12 is Mp(n,m,1) * C(p^2), the central products
identifying the commutator of the first factor with an element of order p
of the cyclic one.
"""
import logging
from typing import Callable, Dict, Optional

from enumeration import DEFAULT_MAX_COSETS, ConcreteGroup, evaluate
from families.builder import build
from families.specs import FamilySpec
from kernel import central_product, direct_product
from presentation import expand_word

logger = logging.getLogger(__name__)


def _group(family: str, max_cosets: int, **params) -> ConcreteGroup:
    return build(FamilySpec(family=family, **params), max_cosets).group


def _element(g: ConcreteGroup, text: str) -> int:
    return evaluate(g, expand_word(text, g.generator_names))


def _type8(spec: FamilySpec, max_cosets: int) -> ConcreteGroup:
    return direct_product(_group("Q8", max_cosets), _group("Cyclic", max_cosets, n=2))


def _type9(spec: FamilySpec, max_cosets: int) -> ConcreteGroup:
    p = spec.p
    return direct_product(
        _group("MpMN", max_cosets, p=p, m=spec.n + 1, n=spec.m), _group("Cyclic", max_cosets, n=p)
    )


def _type10(spec: FamilySpec, max_cosets: int) -> ConcreteGroup:
    p = spec.p
    return direct_product(
        _group("MpMN1", max_cosets, p=p, m=spec.n, n=spec.m), _group("Cyclic", max_cosets, n=p)
    )


def _type11(spec: FamilySpec, max_cosets: int) -> ConcreteGroup:
    q8, c4 = _group("Q8", max_cosets), _group("Cyclic", max_cosets, n=4)
    return central_product(q8, c4, [(_element(q8, "a^2"), _element(c4, "a^2"))])


def _type12(spec: FamilySpec, max_cosets: int) -> ConcreteGroup:
    p = spec.p
    mp = _group("MpMN1", max_cosets, p=p, m=spec.n, n=spec.m)
    cyclic = _group("Cyclic", max_cosets, n=p * p)
    return central_product(mp, cyclic, [(_element(mp, "[a,b]"), _element(cyclic, f"a^{p}"))])


IDENTITIES: Dict[str, Callable[[FamilySpec, int], ConcreteGroup]] = {
    "A2Type8": _type8,
    "A2Type9": _type9,
    "A2Type10": _type10,
    "A2Type11": _type11,
    "A2Type12": _type12,
}


def identity_group(spec: FamilySpec, max_cosets: int = DEFAULT_MAX_COSETS) -> Optional[ConcreteGroup]:
    """The product ``spec``'s family is listed as, at the same parameters; None for other families."""
    construct = IDENTITIES.get(spec.family)
    if construct is None:
        return None
    product = construct(spec, max_cosets)
    logger.debug(f"[{spec.label()}] listed product has order {product.order}")
    return product
