from typing import Annotated, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

Verdict = Literal["holds", "fails", "not-applicable", "error"]

TOOL_VERSION = "0.1.0"

THEOREM_IDS = (
    "T2.2", "L2.3", "L2.4", "L2.5", "T2.6", "L2.7",
    "T3.1", "T3.2", "T3.3", "T3.4", "T3.5", "T3.6", "L3.7", "T3.8", "C3.9",
)


class Witness(BaseModel):
    """A re-checkable counterexample, expressed in words over the group's generators."""
    kind: Annotated[str, "which property the witness violates, e.g. 'non-normal-nonabelian'"]
    subgroup: List[str] = []
    elements: List[str] = []
    detail: str = ""


class TheoremReport(BaseModel):
    theorem: str
    label: str
    verdict: Verdict
    witness: Optional[Witness] = None
    message: str = ""
    # wall-clock seconds, never serialized
    elapsed: float = Field(default=0.0, exclude=True)

    @model_validator(mode="after")
    def fails_needs_witness(self):
        if self.verdict == "fails" and self.witness is None:
            raise ValueError(f"{self.theorem} on {self.label}: a failing verdict needs a witness")
        return self


class AuditMeta(BaseModel):
    corpus_caps: Dict[str, int]
    suite_filter: List[str]
    tool_version: str = TOOL_VERSION
    corpus_size: int


class AuditReport(BaseModel):
    meta: AuditMeta
    reports: List[TheoremReport]
    summary: Dict[str, Dict[str, int]]

    def has_failures(self) -> bool:
        return any(r.verdict in ("fails", "error") for r in self.reports)
