from typing import Annotated, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, model_validator


class A1Type(BaseModel):
    """Rédei type of a minimal non-abelian p-group."""
    kind: Annotated[str, "Q8, Mp(m,n) or Mp(m,n,1)"]
    p: int
    m: Optional[int] = None
    n: Optional[int] = None
    relations: List[str] = []

    @model_validator(mode="after")
    def check_side_conditions(self):
        if self.kind == "Mp(m,n)" and (self.m is None or self.m < 2):
            raise ValueError("Mp(m,n) requires m >= 2")
        if self.kind == "Mp(m,n,1)":
            if self.m is None or self.n is None or self.m < self.n:
                raise ValueError("Mp(m,n,1) requires m >= n")
            if self.p == 2 and self.m + self.n < 3:
                raise ValueError("Mp(m,n,1) requires m + n >= 3 for p = 2")
        return self

    def label(self) -> str:
        if self.kind == "Q8":
            return "Q8"
        if self.kind == "Mp(m,n)":
            return f"M{self.p}({self.m},{self.n})"
        return f"M{self.p}({self.m},{self.n},1)"


class MetahamiltonianResult(BaseModel):
    """Verdict of one metahamiltonian route; ``value`` is None for abelian input."""
    route: Literal["definition", "a1", "derived"]
    value: Optional[bool]
    witness: List[str] = []

    @property
    def applicable(self) -> bool:
        return self.value is not None


class Classification(BaseModel):
    order: int
    p: Optional[int] = None
    n: Optional[int] = None
    d: int
    c: Optional[int]
    derived_order: int
    derived_exponent: int
    derived_elementary_abelian: bool
    flags: Dict[str, Optional[bool]]
    a_degree: Union[int, Literal["not-applicable"]]
    a1_type: Optional[A1Type] = None
    metahamiltonian_witness: List[str] = []
