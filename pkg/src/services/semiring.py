import logging
from itertools import combinations, product

from src.conf import constants, messages
from src.core.exceptions import ParameterError, StructureError
from src.entity.models import Ideal, SemiringTable
from src.schemas.reports import AxiomReport, AxiomViolation, SemiringFlags

logger = logging.getLogger("workbench")


def check_structure(table: SemiringTable) -> None:
    """
    Verify table shapes and that every entry is an element id.

    Raises:
        StructureError: On a wrong shape or an out-of-range entry.
    """
    size = table.size
    if size < 1:
        raise StructureError(
            messages.text(messages.parameter_range, name="size", minimum=1, value=size)
        )
    for element in (table.zero, table.one):
        if not 0 <= element < size:
            raise StructureError(
                messages.text(messages.element_out_of_range, value=element, last=size - 1)
            )
    if len(table.labels) != size:
        raise StructureError(
            messages.text(messages.table_shape_invalid, table="labels", size=size)
        )
    for title, rows in (("add", table.add), ("mul", table.mul)):
        if len(rows) != size or any(len(row) != size for row in rows):
            raise StructureError(
                messages.text(messages.table_shape_invalid, table=title, size=size)
            )
        for row, col in product(range(size), repeat=2):
            value = rows[row][col]
            if not 0 <= value < size:
                raise StructureError(
                    messages.text(
                        messages.table_entry_out_of_range,
                        table=title,
                        row=row,
                        col=col,
                        value=value,
                        last=size - 1,
                    )
                )


def validate_axioms(table: SemiringTable) -> AxiomReport:
    """
    Scan every pair and triple of elements for violated semiring axioms.

    Args:
        table: The semiring to check.

    Returns:
        AxiomReport listing each violated axiom once, with the first witness
        found in lexicographic order.

    Raises:
        StructureError: If the tables are malformed.
    """
    check_structure(table)
    A = table
    found: dict[str, tuple[int, ...]] = {}

    def violate(axiom: str, *witness: int) -> None:
        found.setdefault(axiom, witness)

    if A.one == A.zero:
        violate(constants.AXIOM_ONE_NOT_ZERO, A.one)
    for a in A.elements:
        if A.plus(a, A.zero) != a or A.plus(A.zero, a) != a:
            violate(constants.AXIOM_ADD_IDENTITY, a)
        if A.times(a, A.one) != a or A.times(A.one, a) != a:
            violate(constants.AXIOM_MUL_IDENTITY, a)
        if A.times(a, A.zero) != A.zero or A.times(A.zero, a) != A.zero:
            violate(constants.AXIOM_ZERO_ABSORB, a)
    for a, b in product(A.elements, repeat=2):
        if A.plus(a, b) != A.plus(b, a):
            violate(constants.AXIOM_ADD_COMM, a, b)
        if A.times(a, b) != A.times(b, a):
            violate(constants.AXIOM_MUL_COMM, a, b)
    for a, b, c in product(A.elements, repeat=3):
        if A.plus(A.plus(a, b), c) != A.plus(a, A.plus(b, c)):
            violate(constants.AXIOM_ADD_ASSOC, a, b, c)
        if A.times(A.times(a, b), c) != A.times(a, A.times(b, c)):
            violate(constants.AXIOM_MUL_ASSOC, a, b, c)
        if A.times(a, A.plus(b, c)) != A.plus(A.times(a, b), A.times(a, c)):
            violate(constants.AXIOM_DISTRIB_LEFT, a, b, c)
        if A.times(A.plus(a, b), c) != A.plus(A.times(a, c), A.times(b, c)):
            violate(constants.AXIOM_DISTRIB_RIGHT, a, b, c)
    violations = [
        AxiomViolation(axiom=axiom, witness=found[axiom])
        for axiom in constants.AXIOM_NAMES
        if axiom in found
    ]
    logger.debug(f"Axiom scan of {A.name}: {len(violations)} violated")
    return AxiomReport(passed=not violations, violations=violations)


def make_table(
    name: str, size: int, add, mul, zero: int, one: int, labels=()
) -> SemiringTable:
    """Build a table from callables or nested sequences."""
    if callable(add):
        add = [[add(a, b) for b in range(size)] for a in range(size)]
    if callable(mul):
        mul = [[mul(a, b) for b in range(size)] for a in range(size)]
    return SemiringTable(size, add, mul, zero, one, name=name, labels=tuple(labels))


def _require(kind: str, value: int | None, minimum: int) -> int:
    if value is None or value < minimum:
        raise ParameterError(
            messages.text(messages.builtin_parameter, kind=kind, minimum=minimum, value=value)
        )
    return value


def builtin(kind: str, parameter: int | None = None, name: str | None = None) -> SemiringTable:
    """
    Construct one of the builtin families.

    Args:
        kind: ``boolean``, ``zmod``, ``truncated_nat`` or ``minplus_chain``.
        parameter: Modulus n >= 2 for zmod, bound k >= 1 otherwise; ignored
            for boolean.
        name: Display name; defaults to ``kind`` plus parameter.

    Returns:
        The semiring table.

    Raises:
        ParameterError: On an unknown kind or an out-of-range parameter.

    >>> builtin("truncated_nat", 2).plus(1, 2)
    2
    """
    if kind == constants.BUILTIN_BOOLEAN:
        return make_table(
            name or "boolean", 2, lambda a, b: a | b, lambda a, b: a & b, 0, 1
        )
    if kind == constants.BUILTIN_ZMOD:
        n = _require(kind, parameter, constants.ZMOD_MIN_MODULUS)
        return make_table(
            name or f"zmod{n}",
            n,
            lambda a, b: (a + b) % n,
            lambda a, b: (a * b) % n,
            0,
            1 % n,
        )
    if kind == constants.BUILTIN_TRUNCATED_NAT:
        k = _require(kind, parameter, constants.CHAIN_MIN_LENGTH)
        return make_table(
            name or f"truncated_nat{k}",
            k + 1,
            lambda a, b: min(a + b, k),
            lambda a, b: min(a * b, k),
            0,
            1,
        )
    if kind == constants.BUILTIN_MINPLUS_CHAIN:
        k = _require(kind, parameter, constants.CHAIN_MIN_LENGTH)

        # id 0 is infinity, id i > 0 is the value i - 1
        def oplus(a: int, b: int) -> int:
            if a == 0 or b == 0:
                return a or b
            return min(a, b)

        def otimes(a: int, b: int) -> int:
            if a == 0 or b == 0:
                return 0
            return min(a - 1 + b - 1, k) + 1

        labels = [constants.INFINITY_LABEL] + [str(v) for v in range(k + 1)]
        return make_table(name or f"minplus_chain{k}", k + 2, oplus, otimes, 0, 1, labels)
    raise ParameterError(messages.text(messages.builtin_unknown, kind=kind))


def classify_semiring(table: SemiringTable) -> SemiringFlags:
    """
    Compute the structural flags of a validated semiring.

    Returns:
        SemiringFlags with semidomain, semifield, additive annihilation
        (a + c = b + c implies a = b) and additive idempotence.
    """
    A = table
    nonzero = [a for a in A.elements if a != A.zero]
    semidomain = all(A.times(a, b) != A.zero for a, b in product(nonzero, repeat=2))
    semifield = semidomain and all(
        any(A.times(a, b) == A.one for b in nonzero) for a in nonzero
    )
    annihilation = all(
        a == b
        for a, b, c in product(A.elements, repeat=3)
        if A.plus(a, c) == A.plus(b, c)
    )
    idempotent = all(A.plus(a, a) == a for a in A.elements)
    return SemiringFlags(
        semidomain=semidomain,
        semifield=semifield,
        additive_annihilation=annihilation,
        additively_idempotent=idempotent,
    )


def pair_id(table: SemiringTable, a: int, b: int) -> int:
    return a * table.size + b


def pair_semiring(table: SemiringTable) -> SemiringTable:
    """
    The semiring A x A with componentwise + and the twisted product.

    Element (a, b) gets id ``a * size + b``; zero is (0, 0), one is (1, 0).
    """
    A = table
    n = A.size
    carrier = list(product(A.elements, repeat=2))

    def add(p: int, q: int) -> int:
        (a, b), (c, d) = carrier[p], carrier[q]
        return pair_id(A, A.plus(a, c), A.plus(b, d))

    def mul(p: int, q: int) -> int:
        (a, b), (c, d) = carrier[p], carrier[q]
        return pair_id(
            A,
            A.plus(A.times(a, c), A.times(b, d)),
            A.plus(A.times(a, d), A.times(b, c)),
        )

    labels = [f"({A.label(a)},{A.label(b)})" for a, b in carrier]
    return make_table(
        f"{A.name}x{A.name}",
        n * n,
        add,
        mul,
        pair_id(A, A.zero, A.zero),
        pair_id(A, A.one, A.zero),
        labels,
    )


def ideal_check(table: SemiringTable, members) -> bool:
    """
    True iff ``members`` contains zero and is closed under addition and
    under multiplication by arbitrary elements.
    """
    members = frozenset(members)
    for element in members:
        if not 0 <= element < table.size:
            raise StructureError(
                messages.text(
                    messages.element_out_of_range, value=element, last=table.size - 1
                )
            )
    if table.zero not in members:
        return False
    for a, b in product(members, repeat=2):
        if table.plus(a, b) not in members:
            return False
    return all(table.times(r, a) in members for r in table.elements for a in members)


def enumerate_ideals(table: SemiringTable) -> list[Ideal]:
    """All ideals, ordered by size then members."""
    others = [e for e in table.elements if e != table.zero]
    ideals = []
    for k in range(len(others) + 1):
        for chosen in combinations(others, k):
            members = frozenset((table.zero,) + chosen)
            if ideal_check(table, members):
                ideals.append(Ideal(table, members))
    return ideals


def is_prime_ideal(ideal: Ideal) -> bool:
    """Proper ideal with ab in P implying a in P or b in P."""
    A = ideal.owner
    if A.one in ideal:
        return False
    return all(
        a in ideal or b in ideal
        for a, b in product(A.elements, repeat=2)
        if A.times(a, b) in ideal
    )


def relabel(table: SemiringTable, permutation) -> SemiringTable:
    """
    Transport the structure along a bijection of element ids.

    ``permutation[old] = new``; the result is isomorphic to ``table``.
    """
    inverse = [0] * table.size
    for old, new in enumerate(permutation):
        inverse[new] = old
    return make_table(
        table.name,
        table.size,
        lambda a, b: permutation[table.plus(inverse[a], inverse[b])],
        lambda a, b: permutation[table.times(inverse[a], inverse[b])],
        permutation[table.zero],
        permutation[table.one],
        [table.label(inverse[e]) for e in table.elements],
    )
