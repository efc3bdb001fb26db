from typing import Literal, Optional

from pydantic import BaseModel

PARAMETER_ORDER = ("p", "m", "n", "r", "s", "t", "variant")
DERIVED_ORDER = ("nu", "rho", "j", "l")


class FamilySpec(BaseModel):
    """A family id with its integer parameters.

    ``nu``, ``rho``, ``j`` and ``l`` are derived by the builder and never
    supplied by callers; ``variant`` picks ν=1 ("one") or the fixed
    non-residue ("nonresidue") for the type that offers the choice.
    """
    family: str
    p: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None
    variant: Optional[Literal["one", "nonresidue"]] = None
    nu: Optional[int] = None
    rho: Optional[int] = None
    j: Optional[int] = None
    l: Optional[int] = None

    def parameters(self) -> dict:
        return {k: getattr(self, k) for k in PARAMETER_ORDER if getattr(self, k) is not None}

    def derived(self) -> dict:
        return {k: getattr(self, k) for k in DERIVED_ORDER if getattr(self, k) is not None}

    def label(self) -> str:
        params = self.parameters()
        if not params:
            return self.family
        return f"{self.family}:" + ",".join(f"{k}={v}" for k, v in params.items())

    @classmethod
    def from_label(cls, label: str) -> "FamilySpec":
        """Inverse of ``label`` for primary labels such as ``A2Type9:p=3,m=1,n=1``."""
        family, _, rest = label.partition(":")
        params = {}
        for item in filter(None, rest.split(",")):
            key, _, value = item.partition("=")
            params[key] = value if key == "variant" else int(value)
        return cls(family=family, **params)
