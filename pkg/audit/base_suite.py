import time
from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from audit.models import TheoremReport, Verdict, Witness
from classifiers import is_abelian, is_metahamiltonian
from enumeration import ConcreteGroup
from kernel import DEFAULT_MAX_ORDER, group_prime


class TheoremSuite(ABC):
    """Abstract base class for auditing one or more theorem statements on a group."""

    theorem_ids: Tuple[str, ...] = ()

    def __init__(self, max_order: int = DEFAULT_MAX_ORDER):
        """Initialize the TheoremSuite.

        Args:
            max_order: Largest group order for which subgroup lattices are enumerated
        """
        if max_order < 1:
            raise ValueError("max_order must be positive to initialize a theorem suite")
        self.max_order = max_order

    @abstractmethod
    def check(self, g: ConcreteGroup, label: str) -> List[TheoremReport]:
        """Audit the suite's statements on one group.

        Args:
            g: The group under audit
            label: Corpus label used in every report

        Returns:
            One TheoremReport per theorem id
        """
        pass

    def run(self, g: ConcreteGroup, label: Optional[str] = None) -> List[TheoremReport]:
        label = label or g.label
        start = time.perf_counter()
        reports = self.check(g, label)
        elapsed = time.perf_counter() - start
        return [r.model_copy(update={"elapsed": elapsed}) for r in reports]

    def _report(
        self,
        theorem: str,
        label: str,
        verdict: Verdict,
        witness: Optional[Witness] = None,
        message: str = "",
    ) -> TheoremReport:
        return TheoremReport(
            theorem=theorem, label=label, verdict=verdict, witness=witness, message=message
        )

    def _not_applicable(self, label: str, message: str) -> List[TheoremReport]:
        return [self._report(t, label, "not-applicable", message=message) for t in self.theorem_ids]

    def _metahamiltonian_p_group_gate(self, g: ConcreteGroup) -> Optional[str]:
        """Reason the group falls outside 'metahamiltonian p-group', or None."""
        if group_prime(g) is None:
            return "not a p-group"
        if is_abelian(g):
            return "abelian"
        if not is_metahamiltonian(g, self.max_order):
            return "not metahamiltonian"
        return None

    def _nonabelian_p_group_gate(self, g: ConcreteGroup) -> Optional[str]:
        if group_prime(g) is None:
            return "not a p-group"
        if is_abelian(g):
            return "abelian"
        return None
