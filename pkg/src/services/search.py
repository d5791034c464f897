"""Seeded search for maximal congruences that are not prime."""

import logging
import random

from src.conf import constants, messages
from src.conf.config import settings
from src.core.exceptions import ParameterError
from src.entity.models import SemiringTable
from src.schemas.reports import Counterexample, SearchReport
from src.services.congruence import is_prime, plus_closure
from src.services.semiring import classify_semiring, make_table, validate_axioms
from src.services.spectrum import enumerate_congruences, spectrum

logger = logging.getLogger("workbench")


def _associative(add: list[list[int]], size: int) -> bool:
    return all(
        add[add[a][b]][c] == add[a][add[b][c]]
        for a in range(size)
        for b in range(size)
        for c in range(size)
    )


def _symmetric_table(rng: random.Random, size: int, fixed) -> list[list[int]]:
    """Random symmetric table; ``fixed(a, b)`` pins an entry or returns None."""
    rows = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            value = fixed(a, b)
            if value is None:
                value = rng.randrange(size)
            rows[a][b] = rows[b][a] = value
    return rows


def random_semiring(
    rng: random.Random, size: int, attempts: int | None = None, name: str = "R"
) -> SemiringTable | None:
    """
    Rejection-sample a commutative semiring on ``size`` elements.

    Zero is id 0 and one is id 1. Addition tables are drawn until one is
    associative, then multiplication tables until the axioms pass.

    Returns:
        A validated table, or None when ``attempts`` addition draws fail.
    """
    attempts = attempts or settings.SEARCH_ATTEMPTS
    for _ in range(attempts):
        add = _symmetric_table(rng, size, lambda a, b: b if a == 0 else None)
        if not _associative(add, size):
            continue
        for _ in range(constants.SEARCH_MUL_ATTEMPTS):
            mul = _symmetric_table(
                rng, size, lambda a, b: 0 if a == 0 else (b if a == 1 else None)
            )
            table = make_table(name, size, add, mul, 0, 1)
            if validate_axioms(table).passed:
                return table
    return None


def describe_table(table: SemiringTable) -> str:
    """
    Compact one-line form of the operation tables.

    >>> from src.services.semiring import builtin
    >>> describe_table(builtin("boolean"))
    'add=01/11 mul=00/01'
    """

    def rows(tab) -> str:
        return "/".join("".join(str(v) for v in row) for row in tab)

    return f"add={rows(table.add)} mul={rows(table.mul)}"


def search_maximal_nonprime(
    seed: int,
    count: int = constants.SEARCH_DEFAULT_COUNT,
    sizes: tuple[int, int] = (constants.SEARCH_MIN_SIZE, constants.SEARCH_MAX_SIZE),
    max_size: int | None = None,
) -> SearchReport:
    """
    Sample random semirings and report maximal congruences that are not prime.

    A counterexample that is additively idempotent, or whose congruence
    satisfies rho = rho_+, contradicts known results and is flagged as a
    probable bug.

    Args:
        seed: Seed of the only random source.
        count: Number of samples.
        sizes: Inclusive range of carrier sizes.
        max_size: Enumeration bound override.

    Raises:
        ParameterError: On an empty or too small size range.
    """
    low, high = sizes
    if low < constants.SEARCH_MIN_SIZE or low > high:
        raise ParameterError(
            messages.text(
                messages.parameter_range,
                name="sizes",
                minimum=constants.SEARCH_MIN_SIZE,
                value=f"{low}-{high}",
            )
        )
    rng = random.Random(seed)
    checked = 0
    violations = 0
    found: list[Counterexample] = []
    for sample in range(count):
        size = rng.randint(low, high)
        table = random_semiring(rng, size, name=f"sample{sample}")
        if table is None:
            logger.warning(
                messages.text(
                    messages.search_attempts_exhausted,
                    size=size,
                    attempts=settings.SEARCH_ATTEMPTS,
                )
            )
            continue
        congruences = enumerate_congruences(table, max_size)
        idempotent = classify_semiring(table).additively_idempotent
        for rho in spectrum(table, constants.KIND_MAXIMAL, congruences=congruences):
            checked += 1
            if is_prime(rho):
                continue
            saturated = plus_closure(rho).same_partition(rho)
            if saturated:
                violations += 1
            if idempotent:
                logger.error(messages.text(messages.search_idempotent_bug))
            found.append(
                Counterexample(
                    sample=sample,
                    semiring=describe_table(table),
                    congruence=rho.signature,
                    plus_saturated=saturated,
                    additively_idempotent=idempotent,
                    probable_bug=idempotent or saturated,
                )
            )
    logger.info(f"Search seed={seed}: {checked} maximal congruences, {len(found)} not prime")
    return SearchReport(
        seed=seed,
        samples=count,
        sizes=sizes,
        maximal_checked=checked,
        counterexamples=found,
        plus_saturated_violations=violations,
    )
