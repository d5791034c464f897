"""The finite semiring of polynomial functions B^n -> B."""

import logging
from collections import deque
from itertools import product

from src.conf import messages
from src.conf.config import settings
from src.core.exceptions import BoundExceededError
from src.entity.models import (
    EmbeddedSemiring,
    FunctionSemiring,
    PolyFunction,
    Polynomial,
)
from src.services.polynomial import constant, evaluation_table, poly_add, poly_mul, variable

logger = logging.getLogger("workbench")


def function_points(ctx: EmbeddedSemiring, num_vars: int) -> tuple[tuple[int, ...], ...]:
    """
    All points of B^n in lexicographic order.

    Raises:
        BoundExceededError: If |B|^n exceeds ``MAX_FUNCTION_POINTS``.
    """
    count = ctx.target.size**num_vars
    if count > settings.MAX_FUNCTION_POINTS:
        raise BoundExceededError(
            messages.text(
                messages.bound_exceeded,
                what="|B|^n",
                value=count,
                bound=settings.MAX_FUNCTION_POINTS,
            )
        )
    return tuple(product(range(ctx.target.size), repeat=num_vars))


def _closure(found: dict, others: dict, op, combine) -> None:
    """
    Breadth-first fixpoint of ``found`` under ``op`` with every member of
    ``others``; witnesses are combined only for new tables.
    """
    queue = deque(found)
    while queue:
        table = queue.popleft()
        for other_table, other in others.items():
            new_table = tuple(map(op, table, other_table))
            if new_table in found:
                continue
            if len(found) >= settings.MAX_FUNCTIONS:
                raise BoundExceededError(
                    messages.text(
                        messages.bound_exceeded,
                        what="function count",
                        value=len(found) + 1,
                        bound=settings.MAX_FUNCTIONS,
                    )
                )
            found[new_table] = combine(found[table], other)
            queue.append(new_table)


def function_semiring(ctx: EmbeddedSemiring, num_vars: int, name: str = "F") -> FunctionSemiring:
    """
    Close the constants of A and the coordinate projections under pointwise
    + and * in B.

    Products of generators are collected first (the monomial functions);
    their additive closure is then the whole semiring. Every function keeps
    the first polynomial that reached it as its witness.

    Args:
        ctx: The embedding A -> B.
        num_vars: Number of variables n >= 0.
        name: Display name.

    Raises:
        BoundExceededError: If the point count or the function count exceeds
            its configured bound.
    """
    A, B = ctx.coeff, ctx.target
    points = function_points(ctx, num_vars)

    def tabulate(f: Polynomial) -> tuple[int, ...]:
        return evaluation_table(f, points, ctx)

    generators: dict[tuple[int, ...], Polynomial] = {}
    seeds = [constant(A, num_vars, a) for a in A.elements]
    seeds += [variable(A, num_vars, i) for i in range(1, num_vars + 1)]
    for f in seeds:
        generators.setdefault(tabulate(f), f)

    monomials = dict(generators)
    _closure(monomials, generators, B.times, lambda f, g: poly_mul(A, f, g))
    found = dict(monomials)
    _closure(found, monomials, B.plus, lambda f, g: poly_add(A, f, g))

    ordered = sorted(found)
    index = {table: i for i, table in enumerate(ordered)}
    logger.debug(f"Function semiring over {B.name} in {num_vars} variables: {len(ordered)} functions")
    return FunctionSemiring(
        ctx=ctx,
        num_vars=num_vars,
        points=points,
        functions=tuple(PolyFunction(table, found[table]) for table in ordered),
        monomials=tuple(sorted(index[table] for table in monomials)),
        generators=tuple(sorted(index[table] for table in generators)),
        name=name,
    )


def table_of(fs: FunctionSemiring, f: Polynomial) -> tuple[int, ...]:
    return evaluation_table(f, fs.points, fs.ctx)


def element_of(fs: FunctionSemiring, f: Polynomial) -> int:
    """Id of the function a polynomial induces; always present by closure."""
    return fs.index_of(table_of(fs, f))
