"""Twisted product on pairs of semiring elements.

(a, b) * (c, d) = (ac + bd, ad + bc) turns A x A into a commutative
semiring in which congruences of A are exactly the ideals that are
equivalences.
"""

from math import comb

from src.core.exceptions import ParameterError
from src.conf import messages
from src.entity.models import ElementPair, FiniteSemiring


def twisted_mul(A: FiniteSemiring, p: tuple[int, int], q: tuple[int, int]) -> ElementPair:
    """
    Twisted product of two pairs.

    Args:
        A: The semiring the components live in.
        p: The pair (a, b).
        q: The pair (c, d).

    Returns:
        (ac + bd, ad + bc).
    """
    a, b = p
    c, d = q
    return ElementPair(
        A.plus(A.times(a, c), A.times(b, d)),
        A.plus(A.times(a, d), A.times(b, c)),
    )


def twisted_pow(A: FiniteSemiring, p: tuple[int, int], n: int) -> ElementPair:
    """n-th twisted power; the zeroth power is (1, 0)."""
    if n < 0:
        raise ParameterError(messages.text(messages.parameter_range, name="n", minimum=0, value=n))
    result = ElementPair(A.one, A.zero)
    for _ in range(n):
        result = twisted_mul(A, result, p)
    return result


def scale(A: FiniteSemiring, k: int, x: int) -> int:
    """x added to itself k times; k = 0 gives zero."""
    total = A.zero
    for _ in range(k):
        total = A.plus(total, x)
    return total


def power(A: FiniteSemiring, x: int, k: int) -> int:
    result = A.one
    for _ in range(k):
        result = A.times(result, x)
    return result


def twisted_pow_binomial(A: FiniteSemiring, p: tuple[int, int], n: int) -> ElementPair:
    """
    n-th twisted power through the binomial closed form.

    Even-index terms C(n, i) a^(n-i) b^i go left, odd-index terms right; the
    integer coefficients act by repeated addition.
    """
    if n < 1:
        raise ParameterError(messages.text(messages.parameter_range, name="n", minimum=1, value=n))
    a, b = p
    sides = [A.zero, A.zero]
    for i in range(n + 1):
        term = scale(A, comb(n, i), A.times(power(A, a, n - i), power(A, b, i)))
        sides[i % 2] = A.plus(sides[i % 2], term)
    return ElementPair(*sides)


def twisted_orbit(A: FiniteSemiring, p: tuple[int, int]) -> list[ElementPair]:
    """
    Distinct twisted powers p^1, p^2, ... up to the first repetition.

    The sequence is eventually periodic on the finite pair semiring, so the
    returned list contains every power p^n with n >= 1.
    """
    seen: set[ElementPair] = set()
    orbit: list[ElementPair] = []
    current = ElementPair(*p)
    while current not in seen:
        seen.add(current)
        orbit.append(current)
        current = twisted_mul(A, current, p)
    return orbit
