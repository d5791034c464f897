"""Counting zero-set points modulo rho against algebra homomorphisms into B/rho."""

from itertools import product

from src.entity.models import Congruence, HomSet, PairSystem, Variety
from src.schemas.reports import HomCount
from src.services.congruence import quotient
from src.services.geometry import check_rho, is_window, zero_set
from src.services.polynomial import evaluate_with
from src.services.window import hom_count_window


def points_modulo(Z: Variety, rho: Congruence) -> set[tuple[int, ...]]:
    """Z / rho as tuples of least class representatives."""
    return {tuple(rho.representative(v) for v in point) for point in Z.points}


def hom_set(system: PairSystem, rho: Congruence) -> HomSet:
    """
    Homomorphisms S / T^c -> B / rho, one per assignment of the variables in
    B / rho that satisfies every pair of the system.

    An improper rho has the one-element quotient and a single homomorphism.
    """
    ctx = system.ctx
    check_rho(ctx, rho)
    if not rho.proper:
        return HomSet(None, frozenset({(0,) * system.num_vars}))
    Q, projection = quotient(rho)

    def coefficient(a: int) -> int:
        return projection[ctx.image(a)]

    assignments = frozenset(
        assignment
        for assignment in product(range(Q.size), repeat=system.num_vars)
        if all(
            evaluate_with(f, assignment, Q, coefficient)
            == evaluate_with(g, assignment, Q, coefficient)
            for f, g in system.pairs
        )
    )
    return HomSet(Q, assignments)


def hom_count(system: PairSystem, rho) -> HomCount:
    """
    #Z_rho(T)(B)/rho and #Hom(S/T^c, B/rho), computed on independent paths.

    In window mode the counts carry the window bound.
    """
    if is_window(system.ctx):
        return hom_count_window(system, rho)
    Z = zero_set(system, rho)
    return HomCount(points=len(points_modulo(Z, rho)), homs=len(hom_set(system, rho)))
