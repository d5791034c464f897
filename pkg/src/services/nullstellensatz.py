"""
The radical relation sqrt(sigma/rho) and the check of its generated
congruence against the radical vanishing congruence of Z_rho(sigma)(B).

Polynomials enter only through a degree-capped enumeration. Within the cap
two polynomials are related when they are coefficientwise sqrt(rho)-close
to a pair inside sqrt(sigma); membership in sqrt(sigma) is decided on the
function semiring.
"""

import logging
from itertools import product

from src.conf import messages
from src.conf.config import settings
from src.core.exceptions import UsageError
from src.entity.models import (
    Congruence,
    FunctionSemiring,
    PairSystem,
    Polynomial,
    SqrtOverRelation,
    canonical_class_map,
)
from src.schemas.reports import NullstellensatzReport
from src.services.congruence import radical
from src.services.function_semiring import element_of, function_semiring
from src.services.geometry import (
    check_rho,
    generated_on_functions,
    is_window,
    zero_set,
)
from src.services.polynomial import check_enumeration, monomials_up_to
from src.services.window import nullstellensatz_window, sqrt_over_window

logger = logging.getLogger("workbench")


def _require_cap(degree_cap: int | None) -> int:
    if degree_cap is None or degree_cap < 0:
        raise UsageError(messages.text(messages.degree_cap_missing))
    return degree_cap


def coefficient_congruence(ctx, root: Congruence) -> Congruence:
    """sqrt(rho) pulled back to the coefficients through the embedding."""
    A = ctx.coeff
    return Congruence.from_keys(A, (root.class_of[ctx.image(a)] for a in A.elements))


def _components(kernels: list[set[int]]) -> tuple[int, ...]:
    parent = list(range(len(kernels)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict[int, int] = {}
    for vector, classes in enumerate(kernels):
        for cls in classes:
            if cls in owner:
                a, b = find(vector), find(owner[cls])
                parent[max(a, b)] = min(a, b)
            else:
                owner[cls] = vector
    return canonical_class_map(find(v) for v in range(len(kernels)))


def sqrt_over(
    system: PairSystem,
    rho: Congruence,
    degree_cap: int | None,
    fs: FunctionSemiring | None = None,
    limit: int | None = None,
) -> SqrtOverRelation:
    """
    sqrt(sigma/rho) for sigma generated by the system, on every polynomial of
    total degree <= ``degree_cap``.

    The relation is not assumed transitive; ``component_of`` gives the
    blocks of the equivalence it generates within the cap.

    Raises:
        UsageError: Without a degree cap.
        BoundExceededError: If the enumeration exceeds ``limit``.
        WindowModeError: In window mode for systems other than monomial
            generators.
    """
    cap = _require_cap(degree_cap)
    limit = limit or settings.MAX_SYNTACTIC_POLYNOMIALS
    ctx = system.ctx
    check_rho(ctx, rho)
    if is_window(ctx):
        return sqrt_over_window(system, rho, cap, limit)
    A = ctx.coeff
    monomials = monomials_up_to(system.num_vars, cap)
    check_enumeration(A.size ** len(monomials), limit)

    fs, sigma = generated_on_functions(system, fs)
    root_sigma = radical(sigma)
    theta = coefficient_congruence(ctx, radical(rho))

    polynomials, functions, vector_of = [], [], []
    vectors: dict[tuple[int, ...], int] = {}
    kernels: list[set[int]] = []
    for coefficients in product(A.elements, repeat=len(monomials)):
        f = Polynomial.from_mapping(system.num_vars, dict(zip(monomials, coefficients)), A.zero)
        element = element_of(fs, f)
        vector = tuple(theta.class_of[c] for c in coefficients)
        if vector not in vectors:
            vectors[vector] = len(kernels)
            kernels.append(set())
        kernels[vectors[vector]].add(root_sigma.class_of[element])
        polynomials.append(f)
        functions.append(element)
        vector_of.append(vectors[vector])

    reached = len(set(functions))
    informative = reached == fs.size
    if not informative:
        logger.warning(
            messages.text(
                messages.degree_cap_uninformative, cap=cap, reached=reached, total=fs.size
            )
        )
    return SqrtOverRelation(
        polynomials=tuple(polynomials),
        functions=tuple(functions),
        vector_of=tuple(vector_of),
        kernels=tuple(frozenset(k) for k in kernels),
        component_of=_components(kernels),
        degree_cap=cap,
        informative=informative,
    )


def nullstellensatz_check(
    system: PairSystem,
    rho,
    degree_cap: int | None,
    fs: FunctionSemiring | None = None,
    limit: int | None = None,
) -> NullstellensatzReport:
    """
    Check that (sqrt(sigma/rho))^c lies inside sqrt(rho)_B(Z_rho(sigma)(B))
    and report whether the two agree within the cap.

    Inclusion is expected to hold on every instance; a violation is logged
    as a probable bug. Equality is reported as found.

    Raises:
        UsageError: Without a degree cap.
        WindowModeError: In window mode for systems other than monomial
            generators.
    """
    cap = _require_cap(degree_cap)
    limit = limit or settings.MAX_SYNTACTIC_POLYNOMIALS
    if is_window(system.ctx):
        check_rho(system.ctx, rho)
        return nullstellensatz_window(system, rho, cap, limit)

    fs = fs or function_semiring(system.ctx, system.num_vars)
    relation = sqrt_over(system, rho, cap, fs, limit)
    Z = zero_set(system, rho).sorted_points()
    root = radical(rho)
    first = {}
    for index, vector in enumerate(relation.vector_of):
        first.setdefault(vector, index)

    position = {p: i for i, p in enumerate(fs.points)}
    indices = [position[p] for p in Z]

    def rkey(vector: int) -> tuple[int, ...]:
        table = fs.table(relation.functions[first[vector]])
        return tuple(root.class_of[table[i]] for i in indices)

    keys = [rkey(vector) for vector in range(len(relation.kernels))]
    by_component: dict[int, dict[tuple, int]] = {}
    by_key: dict[tuple, dict[int, int]] = {}
    for vector, key in enumerate(keys):
        component = relation.component_of[vector]
        by_component.setdefault(component, {}).setdefault(key, vector)
        by_key.setdefault(key, {}).setdefault(component, vector)

    ring = system.ctx.coeff

    def show(vector: int) -> str:
        return relation.polynomials[first[vector]].render(ring)

    witnesses = []
    split = [found for found in by_component.values() if len(found) > 1]
    inclusion = not split
    if split:
        left, right = sorted(split[0].values())[:2]
        witnesses.append(f"{show(left)} ~ {show(right)}")
        logger.error(
            messages.text(messages.nullstellensatz_violation, left=show(left), right=show(right))
        )
    merged = [found for found in by_key.values() if len(found) > 1]
    equality = inclusion and not merged
    if inclusion and merged:
        left, right = sorted(merged[0].values())[:2]
        witnesses.append(f"{show(left)} ~ {show(right)}")
    return NullstellensatzReport(
        inclusion_holds=inclusion,
        equality_holds=equality,
        degree_cap=cap,
        syntactic_count=len(relation.polynomials),
        zero_set_size=len(Z),
        informative=relation.informative,
        witnesses=witnesses,
    )
