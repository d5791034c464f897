"""Bounded checks over the naturals: the carrier is observed through 0..N."""

import logging
from itertools import product
from math import prod

from sympy import primefactors

from src.conf import constants, messages
from src.core.exceptions import WindowModeError
from src.entity.models import (
    ModularCongruence,
    NaturalsWindow,
    PairSystem,
    Polynomial,
    SqrtOverRelation,
    canonical_class_map,
)
from src.schemas.reports import HomCount, NullstellensatzReport
from src.services.geometry import zero_set
from src.services.polynomial import check_enumeration, evaluate, evaluate_with, monomials_up_to
from src.services.semiring import builtin

logger = logging.getLogger("workbench")


def radical_modulus(m: int) -> int:
    """
    The radical of mod m is mod rad(m).

    >>> radical_modulus(12)
    6
    >>> radical_modulus(1)
    1
    """
    return prod(primefactors(m))


def radical_congruence(rho: ModularCongruence) -> ModularCongruence:
    return ModularCongruence(rho.owner, radical_modulus(rho.modulus))


def window_quotient(rho: ModularCongruence):
    """N / mod m is zmod m; None for the improper congruence."""
    if not rho.proper:
        return None
    return builtin(constants.BUILTIN_ZMOD, rho.modulus, name=f"{rho.owner.name}/{rho.modulus}")


def hom_count_window(system: PairSystem, rho: ModularCongruence) -> HomCount:
    """Both sides of the point/homomorphism count, qualified by the window."""
    window: NaturalsWindow = system.ctx
    Z = zero_set(system, rho)
    points = len({tuple(v % rho.modulus for v in point) for point in Z.points})
    Q = window_quotient(rho)
    if Q is None:
        homs = 1
    else:
        homs = sum(
            all(
                evaluate_with(f, assignment, Q, lambda a: a % rho.modulus)
                == evaluate_with(g, assignment, Q, lambda a: a % rho.modulus)
                for f, g in system.pairs
            )
            for assignment in product(range(Q.size), repeat=system.num_vars)
        )
    logger.info(messages.text(messages.window_claim, window=window.bound))
    return HomCount(points=points, homs=homs, window=window.bound)


def monomial_support(system: PairSystem) -> list[tuple[int, ...]]:
    """
    Exponents of the monomial generators of a system of pairs (monomial, 0).

    Raises:
        WindowModeError: On any other pair shape.
    """
    exponents = []
    for pair in system.pairs:
        for f, g in (pair, pair[::-1]):
            if g.is_zero and len(f.terms) == 1:
                exponents.append(f.terms[0][0])
                break
        else:
            raise WindowModeError(messages.text(messages.window_system_shape))
    return exponents


def _divides(small: tuple[int, ...], large: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(small, large))


def outside_radical(
    system: PairSystem, degree_cap: int
) -> tuple[list[tuple[int, ...]], list[int]]:
    """
    Monomials up to the cap and the positions of those outside sqrt(M).

    M is the monomial ideal of the system; sqrt(M) is generated by the
    squarefree supports of its generators.

    >>> square = Polynomial(1, (((2,), 1),))
    >>> outside_radical(PairSystem("T", ((square, Polynomial(1)),), 1, NaturalsWindow(9)), 1)
    ([(0,), (1,)], [0])
    """
    radical_generators = [tuple(min(e, 1) for e in g) for g in monomial_support(system)]
    monomials = monomials_up_to(system.num_vars, degree_cap)
    outside = [
        i
        for i, e in enumerate(monomials)
        if not any(_divides(g, e) for g in radical_generators)
    ]
    return monomials, outside


def sqrt_over_window(
    system: PairSystem, rho: ModularCongruence, degree_cap: int, limit: int
) -> SqrtOverRelation:
    """
    sqrt(sigma/rho) over the naturals for monomial generators.

    Coefficients are taken modulo r = rad(m). Two polynomials are related
    exactly when their coefficients outside sqrt(M) agree modulo r, so the
    relation is already an equivalence: each coefficient vector is its own
    entry of ``kernels`` and holds the id of its block. ``functions`` numbers
    the value vectors modulo r on the windowed zero set.

    Raises:
        WindowModeError: On pairs other than (monomial, 0).
        BoundExceededError: If the enumeration exceeds ``limit``.
    """
    window: NaturalsWindow = system.ctx
    monomials, outside = outside_radical(system, degree_cap)
    r = radical_modulus(rho.modulus)
    check_enumeration(r ** len(monomials), limit)
    Z = zero_set(system, rho).sorted_points()

    polynomials, functions, blocks = [], [], []
    values: dict[tuple[int, ...], int] = {}
    for coefficients in product(range(r), repeat=len(monomials)):
        f = Polynomial.from_mapping(system.num_vars, dict(zip(monomials, coefficients)), 0)
        rkey = tuple(evaluate(f, point, window) % r for point in Z)
        polynomials.append(f)
        functions.append(values.setdefault(rkey, len(values)))
        blocks.append(tuple(coefficients[i] for i in outside))
    component_of = canonical_class_map(blocks)
    logger.info(messages.text(messages.window_claim, window=window.bound))
    return SqrtOverRelation(
        polynomials=tuple(polynomials),
        functions=tuple(functions),
        vector_of=tuple(range(len(polynomials))),
        kernels=tuple(frozenset({block}) for block in component_of),
        component_of=component_of,
        degree_cap=degree_cap,
        window=window.bound,
    )


def nullstellensatz_window(
    system: PairSystem, rho: ModularCongruence, degree_cap: int, limit: int
) -> NullstellensatzReport:
    """
    Window-mode comparison for monomial generators.

    With M the monomial ideal of the system, sigma relates polynomials
    agreeing outside M and sqrt(sigma) those agreeing outside sqrt(M), the
    ideal of the squarefree supports. Coefficients are compared modulo
    rad(m) on the left and values over the windowed zero set on the right.
    """
    window: NaturalsWindow = system.ctx
    monomials, outside = outside_radical(system, degree_cap)
    r = radical_modulus(rho.modulus)
    Z = zero_set(system, rho).sorted_points()
    total = r ** len(monomials)
    check_enumeration(total, limit)

    rkeys_by_lkey: dict[tuple, set] = {}
    lkeys_by_rkey: dict[tuple, set] = {}
    witnesses = []
    for coefficients in product(range(r), repeat=len(monomials)):
        f = Polynomial.from_mapping(system.num_vars, dict(zip(monomials, coefficients)), 0)
        lkey = tuple(coefficients[i] for i in outside)
        rkey = tuple(evaluate(f, point, window) % r for point in Z)
        rkeys_by_lkey.setdefault(lkey, set()).add(rkey)
        lkeys_by_rkey.setdefault(rkey, set()).add(lkey)
    inclusion = all(len(keys) == 1 for keys in rkeys_by_lkey.values())
    equality = inclusion and all(len(keys) == 1 for keys in lkeys_by_rkey.values())
    if not inclusion:
        left, right = sorted(next(keys for keys in rkeys_by_lkey.values() if len(keys) > 1))[:2]
        witnesses.append(f"values {left} ~ {right}")
        logger.error(messages.text(messages.nullstellensatz_violation, left=left, right=right))
    elif not equality:
        rkey = next(k for k, keys in lkeys_by_rkey.items() if len(keys) > 1)
        witnesses.append(f"values {rkey} on the zero set come from distinct coefficient classes")
    logger.info(messages.text(messages.window_claim, window=window.bound))
    return NullstellensatzReport(
        inclusion_holds=inclusion,
        equality_holds=equality,
        degree_cap=degree_cap,
        syntactic_count=total,
        zero_set_size=len(Z),
        window=window.bound,
        witnesses=witnesses,
    )

