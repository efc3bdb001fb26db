import logging
from typing import List, Optional, Sequence

from presentation import Presentation, Word
from utils.errors import EnumerationBudgetExceeded, EmptyPresentationError

logger = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 65536


def letter_column(letter: int) -> int:
    """Column of a signed letter: generator k -> 2(k-1), its inverse -> 2(k-1)+1."""
    return 2 * (abs(letter) - 1) + (0 if letter > 0 else 1)


class CosetTable:
    """Coset table over the trivial subgroup, filled by HLT scanning.

    Rows are cosets, columns are the letters ``[g1, g1^-1, g2, g2^-1, ...]``.
    Coincidences are merged immediately through the union-find array ``parent``
    (the smaller coset number survives). Coset 0 is the identity coset.
    """

    def __init__(self, rank: int, max_cosets: int = DEFAULT_MAX_COSETS):
        if max_cosets < 1:
            raise ValueError(f"max_cosets must be positive, got {max_cosets}")
        self.rank = rank
        self.width = 2 * rank
        self.max_cosets = max_cosets
        self.rows: List[List[Optional[int]]] = [[None] * self.width]
        self.parent: List[int] = [0]
        self.live_count = 1

    @property
    def defined_count(self) -> int:
        return len(self.rows)

    def is_live(self, coset: int) -> bool:
        return self.parent[coset] == coset

    def define(self, coset: int, column: int) -> int:
        if self.live_count >= self.max_cosets:
            raise EnumerationBudgetExceeded(self.max_cosets)
        new = len(self.rows)
        self.rows.append([None] * self.width)
        self.parent.append(new)
        self.live_count += 1
        self.rows[coset][column] = new
        self.rows[new][column ^ 1] = coset
        return new

    def rep(self, coset: int) -> int:
        parent = self.parent
        root = coset
        while parent[root] != root:
            root = parent[root]
        while parent[coset] != root:
            parent[coset], coset = root, parent[coset]
        return root

    def _merge(self, k: int, l: int, queue: List[int]):
        phi, psi = self.rep(k), self.rep(l)
        if phi != psi:
            mu, nu = min(phi, psi), max(phi, psi)
            self.parent[nu] = mu
            self.live_count -= 1
            queue.append(nu)

    def coincidence(self, alpha: int, beta: int):
        rows = self.rows
        queue: List[int] = []
        self._merge(alpha, beta, queue)
        head = 0
        while head < len(queue):
            gamma = queue[head]
            head += 1
            for column in range(self.width):
                delta = rows[gamma][column]
                if delta is None:
                    continue
                rows[delta][column ^ 1] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if rows[mu][column] is not None:
                    self._merge(nu, rows[mu][column], queue)
                elif rows[nu][column ^ 1] is not None:
                    self._merge(mu, rows[nu][column ^ 1], queue)
                else:
                    rows[mu][column] = nu
                    rows[nu][column ^ 1] = mu

    def scan_and_fill(self, alpha: int, relator: Sequence[int]):
        """Scan ``relator`` (as columns) from ``alpha``, defining cosets to close gaps."""
        rows = self.rows
        forward, backward = alpha, alpha
        i, j = 0, len(relator) - 1
        while True:
            while i <= j and rows[forward][relator[i]] is not None:
                forward = rows[forward][relator[i]]
                i += 1
            if i > j:
                if forward != backward:
                    self.coincidence(forward, backward)
                return
            while j >= i and rows[backward][relator[j] ^ 1] is not None:
                backward = rows[backward][relator[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(forward, backward)
                return
            if i == j:
                # deduction closes the scan
                rows[forward][relator[i]] = backward
                rows[backward][relator[i] ^ 1] = forward
                return
            self.define(forward, relator[i])

    def is_complete(self) -> bool:
        return all(
            None not in self.rows[c] for c in range(len(self.rows)) if self.is_live(c)
        )

    def live_cosets(self) -> List[int]:
        return [c for c in range(len(self.rows)) if self.is_live(c)]


def run_hlt(presentation: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate the cosets of the trivial subgroup with the HLT strategy.

    Cosets are processed in order; each live coset scans every relator in
    declaration order, then fills any remaining gaps in its row.
    """
    if presentation.rank == 0:
        raise EmptyPresentationError("Presentation has no generators")
    relators = [
        [letter_column(x) for x in relator.letters]
        for relator in presentation.relators
        if not relator.is_identity()
    ]
    table = CosetTable(presentation.rank, max_cosets)
    alpha = 0
    while alpha < table.defined_count:
        if table.is_live(alpha):
            for relator in relators:
                table.scan_and_fill(alpha, relator)
                if not table.is_live(alpha):
                    break
            if table.is_live(alpha):
                row = table.rows[alpha]
                for column in range(table.width):
                    if row[column] is None:
                        table.define(alpha, column)
        alpha += 1
    logger.debug(
        f"HLT finished: {table.live_count} live of {table.defined_count} defined cosets"
    )
    return table


def word_columns(word: Word) -> List[int]:
    return [letter_column(x) for x in word.letters]
