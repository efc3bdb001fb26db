import logging
from typing import List

from utils.errors import NoAdmissibleParameterError, ParameterRangeError

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def _require_odd_prime(p: int, what: str):
    if not is_prime(p) or p == 2:
        raise ParameterRangeError(what, f"p must be an odd prime, got {p}")


def is_quadratic_residue(a: int, p: int) -> bool:
    """Euler's criterion for a non-zero residue a mod an odd prime p."""
    return pow(a % p, (p - 1) // 2, p) == 1


def smallest_quadratic_nonresidue(p: int) -> int:
    _require_odd_prime(p, "quadratic non-residue")
    return next(a for a in range(2, p) if not is_quadratic_residue(a, p))


def smallest_primitive_root(p: int) -> int:
    _require_odd_prime(p, "primitive root")
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and is_prime(q)]
    return next(
        g for g in range(2, p)
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors)
    )


def solve_j_type15(p: int) -> int:
    """Least j with both j and -4j quadratic non-residues mod p."""
    _require_odd_prime(p, "A2Type15")
    for j in range(1, p):
        if not is_quadratic_residue(j, p) and not is_quadratic_residue(-4 * j, p):
            return j
    raise NoAdmissibleParameterError(
        f"A2Type15: no j with j and -4j both quadratic non-residues modulo {p}"
    )


def admissible_r(p: int) -> List[int]:
    """r = 1, ..., (p-1)/2."""
    return list(range(1, (p - 1) // 2 + 1))


def _check_r(p: int, r: int, what: str):
    if r not in admissible_r(p):
        raise ParameterRangeError(what, f"1 <= r <= (p-1)/2, got r={r} for p={p}")


def solve_j_type16(p: int, r: int = 1) -> int:
    """j with 4j = 1 - ρ^(2r+1) mod p; j = 1 when p = 2."""
    if p == 2:
        return 1
    _require_odd_prime(p, "A2Type16")
    _check_r(p, r, "A2Type16")
    rho = smallest_primitive_root(p)
    return (1 - pow(rho, 2 * r + 1, p)) * pow(4, -1, p) % p


def solve_l_type19(p: int, r: int) -> int:
    """l with 4l = ρ^(2r+1) - 1 mod p."""
    _require_odd_prime(p, "A2Type19")
    _check_r(p, r, "A2Type19")
    rho = smallest_primitive_root(p)
    return (pow(rho, 2 * r + 1, p) - 1) * pow(4, -1, p) % p
