import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from enumeration.coset_table import DEFAULT_MAX_COSETS, CosetTable, run_hlt
from presentation import Presentation, Word, format_word
from utils.errors import UnknownGeneratorError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ConcreteGroup:
    """A finite group held as a full multiplication table.

    Element 0 is the identity. ``gens`` are the element indices of the
    presentation generators, and ``element_words[i]`` is a shortest-found word
    over those generators representing element ``i``.
    """

    mul: np.ndarray
    inv: np.ndarray
    gens: Tuple[int, ...]
    element_words: Tuple[Word, ...]
    generator_names: Tuple[str, ...]
    presentation: Optional[Presentation] = None
    label: str = ""
    _memo: Dict[str, Any] = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    @property
    def identity(self) -> int:
        return 0

    def memo(self, key: str, factory: Callable[[], Any]) -> Any:
        """Cache a derived structure on the (immutable) group."""
        if key not in self._memo:
            self._memo[key] = factory()
        return self._memo[key]

    def with_label(self, label: str) -> "ConcreteGroup":
        return ConcreteGroup(
            mul=self.mul,
            inv=self.inv,
            gens=self.gens,
            element_words=self.element_words,
            generator_names=self.generator_names,
            presentation=self.presentation,
            label=label,
        )

    def format_element(self, element: int) -> str:
        return format_word(self.element_words[element], self.generator_names)

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_memo"] = {}
        return state

    def __setstate__(self, state):
        for key, value in state.items():
            object.__setattr__(self, key, value)

    def __repr__(self) -> str:
        return f"ConcreteGroup(order={self.order}, label={self.label!r})"


def evaluate(g: ConcreteGroup, w: Word) -> int:
    """Left-to-right product of generator images; the empty word is the identity."""
    result = g.identity
    mul, inv, gens = g.mul, g.inv, g.gens
    for letter in w.letters:
        k = abs(letter)
        if k > len(gens):
            raise UnknownGeneratorError(f"#{k}")
        image = gens[k - 1] if letter > 0 else int(inv[gens[k - 1]])
        result = int(mul[result, image])
    return result


def shortest_words(
    action: np.ndarray, rank: int
) -> Tuple[np.ndarray, Tuple[Word, ...], np.ndarray, np.ndarray]:
    """Breadth-first search of a regular action from point 0.

    ``action[column]`` is the permutation of one letter (columns ordered
    ``g1, g1^-1, g2, ...``). Returns the discovery order, the words, and for
    each discovered point its BFS parent and column.
    """
    n = action.shape[1]
    order = [0]
    words = {0: Word()}
    parent = {0: -1}
    column_of = {0: -1}
    queue = deque([0])
    while queue:
        point = queue.popleft()
        for column in range(2 * rank):
            image = int(action[column, point])
            if image not in words:
                letter = column // 2 + 1
                letter = letter if column % 2 == 0 else -letter
                words[image] = Word(words[point].letters + (letter,))
                parent[image] = point
                column_of[image] = column
                order.append(image)
                queue.append(image)
    if len(order) != n:
        raise ValueError(f"Action is not transitive: reached {len(order)} of {n} points")
    order_arr = np.array(order, dtype=np.int64)
    return (
        order_arr,
        tuple(words[p] for p in order),
        np.array([parent[p] for p in order], dtype=np.int64),
        np.array([column_of[p] for p in order], dtype=np.int64),
    )


def group_from_action(
    action: np.ndarray,
    generator_names: Sequence[str],
    presentation: Optional[Presentation] = None,
    label: str = "",
) -> ConcreteGroup:
    """Build a ConcreteGroup from the regular action of its generators.

    Points are renumbered in BFS order so that element 0 is the identity and
    element words are shortest-found representatives.
    """
    rank = len(generator_names)
    n = action.shape[1]
    old_of_new, words, parents, columns = shortest_words(action, rank)
    new_of_old = np.empty(n, dtype=np.int64)
    new_of_old[old_of_new] = np.arange(n)
    relabelled = new_of_old[action[:, old_of_new]]

    mul = np.empty((n, n), dtype=np.int64)
    mul[:, 0] = np.arange(n)
    # element j = parent(j) * letter, so x * j = (x * parent(j)) acted on by letter
    new_parents = np.where(parents >= 0, new_of_old[np.maximum(parents, 0)], -1)
    for j in range(1, n):
        mul[:, j] = relabelled[columns[j], mul[:, new_parents[j]]]
    inv = np.argmin(mul, axis=1).astype(np.int64)
    gens = tuple(int(relabelled[2 * k, 0]) for k in range(rank))
    return ConcreteGroup(
        mul=mul,
        inv=inv,
        gens=gens,
        element_words=words,
        generator_names=tuple(generator_names),
        presentation=presentation,
        label=label,
    )


def group_from_coset_table(
    table: CosetTable, presentation: Presentation, label: str = ""
) -> ConcreteGroup:
    live = table.live_cosets()
    index = {c: i for i, c in enumerate(live)}
    action = np.empty((table.width, len(live)), dtype=np.int64)
    for i, coset in enumerate(live):
        row = table.rows[coset]
        for column in range(table.width):
            action[column, i] = index[table.rep(row[column])]
    return group_from_action(action, presentation.generator_names, presentation, label)


def enumerate_group(
    presentation: Presentation,
    max_cosets: int = DEFAULT_MAX_COSETS,
    label: str = "",
) -> ConcreteGroup:
    """Coset-enumerate a finite presentation into a full multiplication table.

    Raises EnumerationBudgetExceeded when more than ``max_cosets`` live cosets
    would be needed. The result is deterministic for a fixed presentation.
    """
    table = run_hlt(presentation, max_cosets)
    group = group_from_coset_table(table, presentation, label)
    for relator in presentation.relators:
        if evaluate(group, relator) != group.identity:
            raise ValueError(
                f"[{label}] relator {presentation.format_relator(relator)} "
                f"does not evaluate to the identity"
            )
    logger.debug(f"[{label}] enumerated group of order {group.order}")
    return group


def group_from_table(
    mul: np.ndarray,
    gens: Sequence[int],
    generator_names: Sequence[str],
    label: str = "",
) -> ConcreteGroup:
    """Re-index an arbitrary multiplication table (identity anywhere) by BFS from its identity.

    ``mul`` must be a group table and ``gens`` must generate it.
    """
    mul = np.asarray(mul, dtype=np.int64)
    n = mul.shape[0]
    identity = int(np.flatnonzero((mul == np.arange(n)).all(axis=1))[0])
    inv = np.argmax(mul == identity, axis=1)
    columns = []
    for gen in gens:
        columns.append(mul[:, gen])
        columns.append(mul[:, inv[gen]])
    if not columns:
        # trivial group with no generators
        if n != 1:
            raise ValueError("A non-trivial table needs generators")
        return ConcreteGroup(
            mul=np.zeros((1, 1), dtype=np.int64),
            inv=np.zeros(1, dtype=np.int64),
            gens=(),
            element_words=(Word(),),
            generator_names=tuple(generator_names),
            label=label,
        )
    action = np.stack(columns)
    # regular right action starting from the identity point
    if identity != 0:
        swap = np.arange(n)
        swap[[0, identity]] = swap[[identity, 0]]
        action = swap[action[:, swap]]
    return group_from_action(action, generator_names, label=label)


def table_positions(group: ConcreteGroup, mul: np.ndarray, gens: Sequence[int]) -> np.ndarray:
    """For each element of ``group`` built by group_from_table, its index in the source table."""
    mul = np.asarray(mul, dtype=np.int64)
    n = mul.shape[0]
    identity = int(np.flatnonzero((mul == np.arange(n)).all(axis=1))[0])
    inv = np.argmax(mul == identity, axis=1)
    positions = np.empty(group.order, dtype=np.int64)
    for y, word in enumerate(group.element_words):
        x = identity
        for letter in word.letters:
            image = gens[abs(letter) - 1]
            x = int(mul[x, image if letter > 0 else inv[image]])
        positions[y] = x
    return positions
