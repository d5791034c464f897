"""Congruence enumeration, the prime, semiprime, maximal and semimaximal
spectra, and the closed sets of the Zariski topology on prime congruences."""

import logging

from sympy.utilities.iterables import multiset_partitions

from src.conf import constants, messages
from src.conf.config import settings
from src.core.exceptions import BoundExceededError, UsageError
from src.entity.models import Congruence, Equivalence, FiniteSemiring
from src.services.congruence import (
    is_congruence,
    is_maximal,
    is_prime,
    is_semi_maximal,
    is_semi_prime,
)

logger = logging.getLogger("workbench")

PREDICATES = {
    constants.KIND_PRIME: is_prime,
    constants.KIND_SEMIPRIME: is_semi_prime,
    constants.KIND_MAXIMAL: is_maximal,
    constants.KIND_SEMIMAXIMAL: is_semi_maximal,
}


def check_bound(A: FiniteSemiring, max_size: int | None = None) -> None:
    bound = max_size or settings.MAX_ENUM_SIZE
    if A.size > bound:
        raise BoundExceededError(
            messages.text(
                messages.bound_exceeded, what="Carrier size", value=A.size, bound=bound
            )
        )


def enumerate_congruences(A: FiniteSemiring, max_size: int | None = None) -> list[Congruence]:
    """
    Every congruence of A, sorted by class signature.

    Args:
        A: The semiring.
        max_size: Overrides ``settings.MAX_ENUM_SIZE`` for this call.

    Raises:
        BoundExceededError: If the carrier is larger than the bound.
    """
    check_bound(A, max_size)
    found = []
    for blocks in multiset_partitions(list(range(A.size))):
        candidate = Equivalence.from_classes(A, blocks)
        if is_congruence(candidate):
            found.append(Congruence(A, candidate.class_of))
    found.sort(key=lambda rho: rho.signature)
    logger.debug(f"{A.name}: {len(found)} congruences")
    return found


def spectrum(
    A: FiniteSemiring,
    kind: str = constants.KIND_PRIME,
    max_size: int | None = None,
    congruences: list[Congruence] | None = None,
) -> list[Congruence]:
    """
    Congruences of the given kind: prime, semiprime, maximal or semimaximal.

    Raises:
        UsageError: On an unknown kind.
        BoundExceededError: If the carrier is larger than the bound.
    """
    predicate = PREDICATES.get(kind)
    if predicate is None:
        raise UsageError(messages.text(messages.spectrum_kind_unknown, kind=kind))
    if congruences is None:
        congruences = enumerate_congruences(A, max_size)
    return [rho for rho in congruences if predicate(rho)]


def zariski_closed(
    A: FiniteSemiring,
    sigma: Equivalence,
    max_size: int | None = None,
    primes: list[Congruence] | None = None,
) -> list[Congruence]:
    """V^co(sigma): the prime congruences containing sigma."""
    if primes is None:
        primes = spectrum(A, constants.KIND_PRIME, max_size)
    return [rho for rho in primes if sigma.refines(rho)]


def smallest_containing(
    A: FiniteSemiring,
    pairs,
    max_size: int | None = None,
    congruences: list[Congruence] | None = None,
) -> Congruence:
    """Intersection of every congruence containing ``pairs``."""
    if congruences is None:
        congruences = enumerate_congruences(A, max_size)
    pairs = list(pairs)
    keys = [[] for _ in range(A.size)]
    for rho in congruences:
        if all(rho.related(a, b) for a, b in pairs):
            for element, index in enumerate(rho.class_of):
                keys[element].append(index)
    return Congruence.from_keys(A, (tuple(key) for key in keys))
