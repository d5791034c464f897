"""Zero sets, vanishing congruences and closures of rho-algebraic varieties."""

import logging
from itertools import product

from sympy import isprime

from src.conf import messages
from src.core.exceptions import ArityError, OwnerMismatchError, WindowModeError
from src.entity.models import (
    Congruence,
    FunctionSemiring,
    ModularCongruence,
    PairSystem,
    Polynomial,
    VanishingCongruence,
    Variety,
)
from src.schemas.reports import StarUnionReport
from src.services.congruence import generated_congruence, is_prime
from src.services.function_semiring import element_of, function_semiring, table_of
from src.services.polynomial import evaluate, poly_star

logger = logging.getLogger("workbench")


def is_window(ctx) -> bool:
    return getattr(ctx, "is_window", False)


def check_rho(ctx, rho) -> None:
    """
    rho must live on the target of ``ctx``.

    Raises:
        OwnerMismatchError: Otherwise.
    """
    if is_window(ctx):
        if isinstance(rho, ModularCongruence):
            return
        owner = getattr(rho.owner, "name", "?")
    else:
        owner = rho.owner.name
        if rho.owner is ctx.target or rho.owner == ctx.target:
            return
    raise OwnerMismatchError(
        messages.text(messages.owner_mismatch, left=owner, right=ctx.target.name)
    )


def require_finite(ctx, operation: str) -> None:
    if is_window(ctx):
        raise WindowModeError(
            messages.text(messages.window_complement, window=ctx.bound, operation=operation)
        )


def ambient_points(ctx, num_vars: int) -> list[tuple[int, ...]]:
    """B^n in lexicographic order, or the window box in window mode."""
    if is_window(ctx):
        return list(ctx.points(num_vars))
    return list(product(range(ctx.target.size), repeat=num_vars))


def rho_is_prime(rho) -> bool:
    if isinstance(rho, ModularCongruence):
        return isprime(rho.modulus)
    return is_prime(rho)


def satisfies(pairs, point: tuple[int, ...], ctx, rho) -> bool:
    return all(
        rho.related(evaluate(f, point, ctx), evaluate(g, point, ctx)) for f, g in pairs
    )


def zero_set(system: PairSystem, rho) -> Variety:
    """
    Z_rho(T)(B): the points where every pair of the system evaluates into rho.

    In window mode only the box 0..N is scanned and the variety carries the
    window bound.

    Raises:
        OwnerMismatchError: If rho does not live on B.
    """
    ctx = system.ctx
    check_rho(ctx, rho)
    points = frozenset(
        point
        for point in ambient_points(ctx, system.num_vars)
        if satisfies(system.pairs, point, ctx, rho)
    )
    return Variety(points, system.num_vars, ctx.bound if is_window(ctx) else None)


def generated_on_functions(
    system: PairSystem, fs: FunctionSemiring | None = None
) -> tuple[FunctionSemiring, Congruence]:
    """T^c computed on the function semiring from the tables of T."""
    require_finite(system.ctx, "generated congruence")
    fs = fs or function_semiring(system.ctx, system.num_vars)
    pairs = [(element_of(fs, f), element_of(fs, g)) for f, g in system.pairs]
    return fs, generated_congruence(fs, pairs)


def zero_set_of_congruence(fs: FunctionSemiring, sigma: Congruence, rho) -> Variety:
    """Points where every class of sigma takes values inside one rho-class."""
    points = []
    for position, point in enumerate(fs.points):
        if all(
            len({rho.class_of[fs.table(e)[position]] for e in members}) == 1
            for members in sigma.classes
        ):
            points.append(point)
    return Variety(frozenset(points), fs.num_vars)


def zero_set_of_generated(system: PairSystem, rho, fs: FunctionSemiring | None = None) -> Variety:
    """
    Z_rho(T^c)(B), which coincides with Z_rho(T)(B).

    Raises:
        WindowModeError: In window mode.
    """
    check_rho(system.ctx, rho)
    fs, sigma = generated_on_functions(system, fs)
    return zero_set_of_congruence(fs, sigma, rho)


def star_system(first: PairSystem, second: PairSystem) -> PairSystem:
    """T1 * T2: twisted products of every pair of T1 with every pair of T2."""
    if first.num_vars != second.num_vars:
        raise ArityError(
            messages.text(
                messages.arity_mismatch, expected=first.num_vars, actual=second.num_vars
            )
        )
    ring = first.ctx.coeff
    pairs = tuple(poly_star(ring, p, q) for p in first.pairs for q in second.pairs)
    return PairSystem(f"{first.name}*{second.name}", pairs, first.num_vars, first.ctx)


def star_union(first: PairSystem, second: PairSystem, rho) -> StarUnionReport:
    """
    Compare Z(T1 * T2) with Z(T1) | Z(T2).

    The union is always contained in the star zero set; the two agree when
    rho is prime.
    """
    star = zero_set(star_system(first, second), rho)
    union = zero_set(first, rho).points | zero_set(second, rho).points
    prime = rho_is_prime(rho)
    equal = star.points == union
    if prime and not equal:
        logger.error(f"Star zero set differs from the union for prime rho on {first.ctx.target.name}")
    return StarUnionReport(
        star=star.sorted_points(),
        union=sorted(union),
        rho_prime=prime,
        equal=equal,
    )


def vanishing(
    Y: Variety, rho: Congruence, ctx, fs: FunctionSemiring | None = None
) -> VanishingCongruence:
    """
    rho_B(Y) on the function semiring: functions are related exactly when
    their values are rho-related at every point of Y.

    Raises:
        WindowModeError: In window mode or for a windowed Y.
    """
    require_finite(ctx, "vanishing")
    Y.require_finite("vanishing")
    check_rho(ctx, rho)
    fs = fs or function_semiring(ctx, Y.num_vars)
    points = tuple(Y.sorted_points())
    position = {p: i for i, p in enumerate(fs.points)}
    indices = [position[p] for p in points]
    congruence = Congruence.from_keys(
        fs,
        (tuple(rho.class_of[f.table[i]] for i in indices) for f in fs.functions),
    )
    return VanishingCongruence(fs, congruence, points, rho)


def vanishing_contains(V: VanishingCongruence, f: Polynomial, g: Polynomial) -> bool:
    """Membership of a syntactic pair, decided by its tables."""
    return V.holds_on_tables(table_of(V.functions, f), table_of(V.functions, g))


def closure(Y: Variety, rho: Congruence, ctx, fs: FunctionSemiring | None = None) -> Variety:
    """Z_rho(rho_B(Y))(B), the closure of Y when rho is prime."""
    V = vanishing(Y, rho, ctx, fs)
    return zero_set_of_congruence(V.functions, V.congruence, rho)


def intersect_systems(systems: list[PairSystem]) -> PairSystem:
    """The union of several systems as one system; its zero set is the intersection."""
    first = systems[0]
    pairs = tuple(pair for system in systems for pair in system.pairs)
    name = "+".join(system.name for system in systems)
    return PairSystem(name, pairs, first.num_vars, first.ctx)
