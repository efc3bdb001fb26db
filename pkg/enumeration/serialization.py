import json
import logging
from typing import Any, Dict

import numpy as np

from enumeration.concrete_group import ConcreteGroup
from presentation import Presentation, Word, free_reduce

logger = logging.getLogger(__name__)

ASSOCIATIVITY_EXHAUSTIVE_LIMIT = 512
ASSOCIATIVITY_SAMPLES = 20000


def dump_group(g: ConcreteGroup) -> Dict[str, Any]:
    """Exact integer encoding: {order, gens, generator_names, mul (row-major), element_words}."""
    return {
        "label": g.label,
        "order": g.order,
        "gens": [int(x) for x in g.gens],
        "generator_names": list(g.generator_names),
        "mul": [int(x) for x in g.mul.ravel()],
        "element_words": [list(w.letters) for w in g.element_words],
    }


def load_group(data: Dict[str, Any]) -> ConcreteGroup:
    order = int(data["order"])
    mul = np.array(data["mul"], dtype=np.int64).reshape(order, order)
    inv = np.argmin(mul, axis=1).astype(np.int64)
    return ConcreteGroup(
        mul=mul,
        inv=inv,
        gens=tuple(int(x) for x in data["gens"]),
        element_words=tuple(Word(tuple(w)) for w in data["element_words"]),
        generator_names=tuple(data["generator_names"]),
        label=data.get("label", ""),
    )


def save_group(g: ConcreteGroup, path: str):
    with open(path, "w") as f:
        json.dump(dump_group(g), f)


def presentation_from_table(g: ConcreteGroup) -> Presentation:
    """A finite presentation read off the Cayley graph of ``g``.

    For every element x and generator s the relator ``w(x) s w(xs)^-1`` is
    recorded; the element words form a prefix-closed spanning tree, so tree
    edges reduce away and the rest define ``g``.
    """
    relators = []
    seen = set()
    for x in range(g.order):
        for k, s in enumerate(g.gens, start=1):
            target = int(g.mul[x, s])
            relator = free_reduce(
                g.element_words[x] * Word((k,)) * g.element_words[target].inverse()
            )
            if relator.is_identity() or relator.letters in seen:
                continue
            seen.add(relator.letters)
            relators.append(relator)
    return Presentation(g.generator_names, tuple(relators))


def verify_group_axioms(g: ConcreteGroup, seed: int = 0) -> bool:
    """Latin square, inverse and associativity checks on the multiplication table.

    Associativity is exhaustive up to ASSOCIATIVITY_EXHAUSTIVE_LIMIT elements and
    sampled (seeded) above it.
    """
    n = g.order
    mul = g.mul
    expected = np.arange(n)
    if not (np.sort(mul, axis=1) == expected).all():
        return False
    if not (np.sort(mul, axis=0) == expected[:, None]).all():
        return False
    if not (mul[expected, g.inv] == g.identity).all():
        return False
    if (mul[0] != expected).any():
        return False
    if n <= ASSOCIATIVITY_EXHAUSTIVE_LIMIT:
        for a in range(n):
            # (a b) c == a (b c) over all b, c
            if not (mul[mul[a]] == mul[a][mul]).all():
                return False
        return True
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
    return bool((mul[mul[a, b], c] == mul[a, mul[b, c]]).all())
