"""Presentations of every named family, as DSL text with exponents evaluated.

Each Family lists its required parameters, the side conditions on them,
the DSL text, the expected order, and for A2 families the structural class
(I-V) the family belongs to.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from families.number_theory import (
    admissible_r, is_prime, smallest_primitive_root, smallest_quadratic_nonresidue,
    solve_j_type15, solve_j_type16, solve_l_type19,
)
from families.specs import FamilySpec

Condition = Tuple[str, Callable[[FamilySpec], bool]]


@dataclass(frozen=True)
class Family:
    family_id: str
    parameters: Tuple[str, ...]
    text: Callable[[FamilySpec], str]
    order: Callable[[FamilySpec], int]
    conditions: Tuple[Condition, ...] = ()
    fixed_prime: Optional[int] = None
    a2_class: Optional[str] = None
    derive: Callable[[FamilySpec], Dict[str, int]] = field(default=lambda spec: {})
    optional: Tuple[str, ...] = ()


def _odd(spec: FamilySpec) -> bool:
    return spec.p > 2


# C_n and C_n^m

def _cyclic_text(s):
    return f"gens a; rels a^{s.n}=1;"


def _elem_text(s):
    names = [f"a{i}" for i in range(1, s.m + 1)]
    rels = [f"{x}^{s.n}=1" for x in names]
    rels += [f"[{x},{y}]=1" for i, x in enumerate(names) for y in names[i + 1:]]
    return f"gens {','.join(names)}; rels {', '.join(rels)};"


def _dihedral_text(s):
    return f"gens r,s; rels r^{s.n // 2}=s^2=1, r^s=r^-1;"


def _mpmn_text(s):
    p, m, n = s.p, s.m, s.n
    return f"gens a,b; rels a^{p ** m}=b^{p ** n}=1, a^b=a^{1 + p ** (m - 1)};"


def _mpmn1_text(s):
    p, m, n = s.p, s.m, s.n
    return f"gens a,b; rels c:=[a,b], a^{p ** m}=b^{p ** n}=c^{p}=1, [c,a]=[c,b]=1;"


# Class I

def _t1(s):
    return f"gens a,b; rels a^8=b^{2 ** s.m}=1, a^b=a^-1;"


def _t2(s):
    return f"gens a,b; rels a^8=b^{2 ** s.m}=1, a^b=a^3;"


def _t3(s):
    return f"gens a,b; rels a^8=1, b^{2 ** s.m}=a^4, a^b=a^-1;"


def _t4(s):
    p = s.p
    return (
        "gens a1,b; rels a2:=[a1,b], a3:=[a2,b], "
        f"a1^{p}=a2^{p}=a3^{p}=b^{p ** s.m}=1, [a3,b]=1, [a1,a2]=[a1,a3]=[a2,a3]=1;"
    )


def _t5(s):
    p, m = s.p, s.m
    return (
        f"gens a1,b; rels a2:=[a1,b], a1^{p}=a2^{p}=b^{p ** (m + 1)}=1, "
        f"[a2,b]=b^{p ** m}, [a1,a2]=1;"
    )


def _t6(s):
    p = s.p
    return (
        f"gens a1,b; rels a2:=[a1,b], a1^{p * p}=a2^{p}=b^{p ** s.m}=1, "
        f"[a2,b]=a1^{s.nu * p}, [a1,a2]=1;"
    )


def _t7(s):
    return "gens a1,a2,b; rels a1^9=a2^3=1, b^3=a1^3, [a1,b]=a2, [a2,b]=a1^-3, [a2,a1]=1;"


# Class II

def _t8(s):
    return "gens a,b,x; rels a^4=x^2=1, b^2=a^2=[a,b], [x,a]=[x,b]=1;"


def _t9(s):
    p, n, m = s.p, s.n, s.m
    return (
        f"gens a,b,x; rels a^{p ** (n + 1)}=b^{p ** m}=x^{p}=1, [a,b]=a^{p ** n}, "
        "[x,a]=[x,b]=1;"
    )


def _t10(s):
    p, n, m = s.p, s.n, s.m
    return (
        f"gens a,b,x; rels c:=[a,b], a^{p ** n}=b^{p ** m}=c^{p}=x^{p}=1, "
        "[c,a]=[c,b]=[x,a]=[x,b]=1;"
    )


def _t11(s):
    return "gens a,b,x; rels a^4=1, b^2=x^2=a^2=[a,b], [x,a]=[x,b]=1;"


def _t12(s):
    p, n, m = s.p, s.n, s.m
    return (
        f"gens a,b,x; rels a^{p ** n}=b^{p ** m}=x^{p * p}=1, [a,b]=x^{p}, "
        "[x,a]=[x,b]=1;"
    )


# Class III

def _t13(s):
    return "gens a,b,c; rels a^4=b^4=1, c^2=a^2 b^2, [a,b]=b^2, [c,a]=a^2, [c,b]=1;"


def _t14(s):
    p, m = s.p, s.m
    return (
        f"gens a,b,d; rels a^{p ** m}=b^{p * p}=d^{p}=1, [a,b]=a^{p ** (m - 1)}, "
        f"[d,a]=b^{p}, [d,b]=1;"
    )


def _t15(s):
    p, m = s.p, s.m
    return (
        f"gens a,b,d; rels a^{p ** m}=b^{p * p}=d^{p * p}=1, [a,b]=d^{p}, "
        f"[d,a]=b^{s.j * p}, [d,b]=1;"
    )


def _t16(s):
    p, m = s.p, s.m
    return (
        f"gens a,b,d; rels a^{p ** m}=b^{p * p}=d^{p * p}=1, [a,b]=d^{p}, "
        f"[d,a]=b^{s.j * p} d^{p}, [d,b]=1;"
    )


# Class IV

def _t17(s):
    p, r, q, t = s.p, s.r, s.s, s.t
    return (
        f"gens a,b; rels a^{p ** (r + 2)}=1, b^{p ** (r + q + t)}=a^{p ** (r + q)}, "
        f"[a,b]=a^{p ** r};"
    )


def _t18(s):
    p = s.p
    return (
        f"gens a,b; rels c:=[a,b], a^{p * p}=b^{p * p}=c^{p}=1, "
        f"[c,a]=b^{s.nu * p}, [c,b]=a^{p};"
    )


def _t19(s):
    p = s.p
    return (
        f"gens a,b; rels c:=[a,b], a^{p * p}=b^{p * p}=c^{p}=1, "
        f"[c,a]=a^-{p} b^-{s.l * p}, [c,b]=a^-{p};"
    )


def _t20(s):
    return "gens a,b; rels c:=[a,b], a^9=b^9=c^3=1, [c,a]=b^-3, [c,b]=a^3;"


def _t21(s):
    return "gens a,b; rels c:=[a,b], a^9=b^9=c^3=1, [c,a]=b^-3, [c,b]=a^-3;"


# Class V

def _t22(s):
    return (
        "gens a,b,d; rels a^4=b^4=d^4=1, [a,b]=d^2, [d,a]=b^2 d^2, [d,b]=a^2 b^2, "
        "[a^2,b]=[b^2,a]=1;"
    )


def _nu_for_variant(s):
    return {"nu": 1 if s.variant == "one" else smallest_quadratic_nonresidue(s.p)}


def _type16_derived(s):
    if s.p == 2:
        return {"j": 1}
    return {"rho": smallest_primitive_root(s.p), "j": solve_j_type16(s.p, s.r)}


PRIME: Condition = ("p is prime", lambda s: is_prime(s.p))
ODD_PRIME: Condition = ("p >= 3", lambda s: s.p >= 3)
P_AT_LEAST_5: Condition = ("p >= 5", lambda s: s.p >= 5)
M_POSITIVE: Condition = ("m >= 1", lambda s: s.m >= 1)
N_POSITIVE: Condition = ("n >= 1", lambda s: s.n >= 1)
N_AT_LEAST_M: Condition = ("n >= m", lambda s: s.n >= s.m)
N_AT_LEAST_2_FOR_P2: Condition = ("n >= 2 if p=2", lambda s: s.p != 2 or s.n >= 2)
R_RANGE: Condition = ("1 <= r <= (p-1)/2", lambda s: s.r in admissible_r(s.p))


FAMILIES: Dict[str, Family] = {}


def _register(*families: Family):
    for family in families:
        FAMILIES[family.family_id] = family


_register(
    Family("Cyclic", ("n",), _cyclic_text, lambda s: s.n, (N_POSITIVE,)),
    Family(
        "ElemAbelianPower", ("n", "m"), _elem_text, lambda s: s.n ** s.m,
        (("n >= 2", lambda s: s.n >= 2), M_POSITIVE),
    ),
    Family(
        "Dihedral", ("n",), _dihedral_text, lambda s: s.n,
        (("n even and n >= 4", lambda s: s.n >= 4 and s.n % 2 == 0),),
    ),
    Family(
        "Q8", (), lambda s: "gens a,b; rels a^4=1, b^2=a^2, a^b=a^-1;", lambda s: 8,
        fixed_prime=2,
    ),
    Family(
        "MpMN", ("p", "m", "n"), _mpmn_text, lambda s: s.p ** (s.m + s.n),
        (PRIME, ("m >= 2", lambda s: s.m >= 2), N_POSITIVE),
    ),
    Family(
        "MpMN1", ("p", "m", "n"), _mpmn1_text, lambda s: s.p ** (s.m + s.n + 1),
        (PRIME, N_POSITIVE, ("m >= n", lambda s: s.m >= s.n),
         ("m+n >= 3 for p=2", lambda s: s.p != 2 or s.m + s.n >= 3)),
    ),
    Family("A2Type1", ("m",), _t1, lambda s: 2 ** (s.m + 3), (M_POSITIVE,), 2, "I"),
    Family("A2Type2", ("m",), _t2, lambda s: 2 ** (s.m + 3), (M_POSITIVE,), 2, "I"),
    Family("A2Type3", ("m",), _t3, lambda s: 2 ** (s.m + 3), (M_POSITIVE,), 2, "I"),
    Family(
        "A2Type4", ("p", "m"), _t4, lambda s: s.p ** (s.m + 3),
        (PRIME, ODD_PRIME, M_POSITIVE, ("p >= 5 for m=1", lambda s: s.m != 1 or s.p >= 5)),
        a2_class="I",
    ),
    Family(
        "A2Type5", ("p", "m"), _t5, lambda s: s.p ** (s.m + 3),
        (PRIME, ODD_PRIME, M_POSITIVE), a2_class="I",
    ),
    Family(
        "A2Type6", ("p", "m", "variant"), _t6, lambda s: s.p ** (s.m + 3),
        (PRIME, ODD_PRIME, M_POSITIVE), a2_class="I", derive=_nu_for_variant,
    ),
    Family("A2Type7", (), _t7, lambda s: 81, fixed_prime=3, a2_class="I"),
    Family("A2Type8", (), _t8, lambda s: 16, fixed_prime=2, a2_class="II"),
    Family(
        "A2Type9", ("p", "n", "m"), _t9, lambda s: s.p ** (s.n + s.m + 2),
        (PRIME, N_POSITIVE, M_POSITIVE), a2_class="II",
    ),
    Family(
        "A2Type10", ("p", "n", "m"), _t10, lambda s: s.p ** (s.n + s.m + 2),
        (PRIME, M_POSITIVE, N_AT_LEAST_M, N_AT_LEAST_2_FOR_P2), a2_class="II",
    ),
    Family("A2Type11", (), _t11, lambda s: 16, fixed_prime=2, a2_class="II"),
    Family(
        "A2Type12", ("p", "n", "m"), _t12, lambda s: s.p ** (s.n + s.m + 2),
        (PRIME, M_POSITIVE, N_AT_LEAST_M, N_AT_LEAST_2_FOR_P2), a2_class="II",
    ),
    Family("A2Type13", (), _t13, lambda s: 32, fixed_prime=2, a2_class="III"),
    Family(
        "A2Type14", ("p", "m"), _t14, lambda s: s.p ** (s.m + 3),
        (PRIME, ("m >= 2", lambda s: s.m >= 2), ("m >= 3 if p=2", lambda s: s.p != 2 or s.m >= 3)),
        a2_class="III",
    ),
    Family(
        "A2Type15", ("p", "m"), _t15, lambda s: s.p ** (s.m + 4),
        (PRIME, ("p > 2", _odd), M_POSITIVE), a2_class="III",
        derive=lambda s: {"j": solve_j_type15(s.p)},
    ),
    Family(
        "A2Type16", ("p", "m"), _t16, lambda s: s.p ** (s.m + 4),
        (PRIME, M_POSITIVE, ("r given only for odd p", lambda s: (s.p == 2) == (s.r is None)),
         ("1 <= r <= (p-1)/2", lambda s: s.p == 2 or s.r in admissible_r(s.p))),
        a2_class="III",
        derive=_type16_derived, optional=("r",),
    ),
    Family(
        "A2Type17", ("p", "r", "s", "t"), _t17, lambda s: s.p ** (2 * s.r + s.s + s.t + 2),
        (PRIME, ("r >= 2 for p=2, r >= 1 for p >= 3", lambda s: s.r >= (2 if s.p == 2 else 1)),
         ("t >= 0", lambda s: s.t >= 0), ("0 <= s <= 2", lambda s: 0 <= s.s <= 2),
         ("r+s >= 2", lambda s: s.r + s.s >= 2)),
        a2_class="IV",
    ),
    Family(
        "A2Type18", ("p",), _t18, lambda s: s.p ** 5, (PRIME, P_AT_LEAST_5), a2_class="IV",
        derive=lambda s: {"nu": smallest_quadratic_nonresidue(s.p)},
    ),
    Family(
        "A2Type19", ("p", "r"), _t19, lambda s: s.p ** 5, (PRIME, P_AT_LEAST_5, R_RANGE),
        a2_class="IV",
        derive=lambda s: {"rho": smallest_primitive_root(s.p), "l": solve_l_type19(s.p, s.r)},
    ),
    Family("A2Type20", (), _t20, lambda s: 243, fixed_prime=3, a2_class="IV"),
    Family("A2Type21", (), _t21, lambda s: 243, fixed_prime=3, a2_class="IV"),
    Family("A2Type22", (), _t22, lambda s: 64, fixed_prime=2, a2_class="V"),
)


def a2_families() -> List[Family]:
    return [f for f in FAMILIES.values() if f.a2_class is not None]
