import logging
from collections import deque
from itertools import product
from typing import Callable

from src.conf import messages
from src.core.exceptions import (
    ImproperQuotientError,
    NotACongruenceError,
    NotAnIdealError,
)
from src.entity.models import (
    ChainLink,
    Congruence,
    ElementPair,
    Equivalence,
    FiniteSemiring,
    Ideal,
    NilRelations,
    PairRelation,
    SemiringTable,
    WitnessChain,
)
from src.schemas.reports import CongruenceClassification
from src.services import relations
from src.services.semiring import ideal_check, make_table
from src.services.twisted import twisted_mul, twisted_orbit

logger = logging.getLogger("workbench")


def propagation_sets(A: FiniteSemiring) -> tuple:
    """
    Elements whose translates and multiples are enough to propagate a merge.

    Function semirings expose additive generators (monomials) and
    multiplicative generators (constants and projections); tables use every
    element for both.
    """
    monomials = getattr(A, "monomials", None)
    if monomials is not None:
        return tuple(monomials), tuple(A.generators)
    elements = tuple(range(A.size))
    return elements, elements


def compatibility_witness(E: Equivalence) -> tuple[int, int, int] | None:
    """
    First triple (a, b, c) with a ~ b but a + c, b + c or ac, bc unrelated.

    Comparing every element to the least member of its class is enough,
    the relation being transitive.
    """
    A = E.owner
    adders, multipliers = propagation_sets(A)
    for members in E.classes:
        head = members[0]
        for element in members[1:]:
            for c in adders:
                if not E.related(A.plus(head, c), A.plus(element, c)):
                    return head, element, c
            for c in multipliers:
                if not E.related(A.times(head, c), A.times(element, c)):
                    return head, element, c
    return None


def is_congruence(E: Equivalence) -> bool:
    return compatibility_witness(E) is None


def as_congruence(E: Equivalence) -> Congruence:
    """
    Promote an equivalence to a congruence.

    Raises:
        NotACongruenceError: With the first incompatible triple.
    """
    witness = compatibility_witness(E)
    if witness is not None:
        A = E.owner
        a, b, c = (A.label(e) for e in witness)
        raise NotACongruenceError(
            messages.text(
                messages.not_a_congruence,
                semiring=A.name,
                witness=f"{a} ~ {b} but not after adding or multiplying {c}",
            )
        )
    return Congruence(E.owner, E.class_of)


def generated_congruence(
    A: FiniteSemiring, pairs, base: Equivalence | None = None
) -> Congruence:
    """
    Smallest congruence containing ``pairs`` (and ``base`` when given).

    Union-find fixpoint: every successful merge of a and b queues a + c ~ b + c
    and ac ~ bc for the propagation elements c.

    Args:
        A: The semiring.
        pairs: Iterable of element pairs.
        base: Optional equivalence whose classes are merged up front.

    Returns:
        The generated congruence.
    """
    parent = list(range(A.size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adders, multipliers = propagation_sets(A)
    queue = deque(ElementPair(*pair) for pair in pairs)
    if base is not None:
        queue.extend(
            ElementPair(members[0], element)
            for members in base.classes
            for element in members[1:]
        )
    while queue:
        a, b = queue.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        queue.extend(ElementPair(A.plus(a, c), A.plus(b, c)) for c in adders)
        queue.extend(ElementPair(A.times(a, c), A.times(b, c)) for c in multipliers)
    return Congruence(A, tuple(find(e) for e in range(A.size)))


def generated_congruence_literal(A: FiniteSemiring, pairs) -> Congruence:
    """(R^L)^e built from the relation calculus."""
    closed = relations.equivalence_closure(
        relations.translate_saturate(relations.relation(A, pairs))
    )
    return Congruence.from_pairs(A, closed.pairs)


def witness_chain(A: FiniteSemiring, pairs, target: tuple[int, int]) -> WitnessChain | None:
    """
    Shortest chain a = z_1, ..., z_n = b whose steps lie in R^L or its
    inverse.

    Neighbours are visited in increasing order, forward steps first, so the
    chain is deterministic.

    Returns:
        The chain, an empty chain when a = b, or None when (a, b) is not in
        the generated congruence.
    """
    start, goal = target
    endpoints = ElementPair(start, goal)
    if start == goal:
        return WitnessChain(endpoints)
    saturated = relations.translate_saturate(relations.relation(A, pairs))
    forward: dict[int, set[int]] = {}
    backward: dict[int, set[int]] = {}
    for u, v in saturated.pairs:
        if u != v:
            forward.setdefault(u, set()).add(v)
            backward.setdefault(v, set()).add(u)
    came_from: dict[int, ChainLink | None] = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node == goal:
            break
        steps = [(v, True) for v in sorted(forward.get(node, ()))]
        steps += [(v, False) for v in sorted(backward.get(node, ()))]
        for nxt, is_forward in steps:
            if nxt not in came_from:
                came_from[nxt] = ChainLink(node, nxt, is_forward)
                queue.append(nxt)
    if goal not in came_from:
        return None
    links = []
    node = goal
    while came_from[node] is not None:
        link = came_from[node]
        links.append(link)
        node = link.source
    return WitnessChain(endpoints, tuple(reversed(links)))


def verify_witness_chain(A: FiniteSemiring, pairs, chain: WitnessChain) -> bool:
    """Check every step against R^L in its flagged direction."""
    saturated = relations.translate_saturate(relations.relation(A, pairs))
    steps = chain.steps
    if steps[-1] != chain.endpoints.right:
        return False
    previous = chain.endpoints.left
    for link in chain.links:
        if link.source != previous:
            return False
        step = (link.source, link.target) if link.forward else (link.target, link.source)
        if step not in saturated:
            return False
        previous = link.target
    return True


def meet(rho: Congruence, sigma: Congruence) -> Congruence:
    relations.same_owner(rho, sigma)
    return Congruence.from_keys(rho.owner, zip(rho.class_of, sigma.class_of))


def join(rho: Congruence, sigma: Congruence) -> Congruence:
    """rho v sigma as the transitive closure of rho o sigma."""
    closed = relations.transitive_closure(relations.compose(rho, sigma))
    return Congruence.from_pairs(rho.owner, closed.pairs)


def join_generated(rho: Congruence, sigma: Congruence) -> Congruence:
    """rho v sigma as the congruence generated by rho u sigma."""
    return generated_congruence(rho.owner, relations.union(rho, sigma).pairs)


def plus_closure(rho: Congruence) -> Congruence:
    """rho_+ as a congruence."""
    return Congruence.from_pairs(rho.owner, relations.plus_saturate(rho).pairs)


def _orbit_hits(
    A: FiniteSemiring, accept: Callable[[ElementPair], bool], cache: dict
) -> Callable[[ElementPair], bool]:
    def hits(pair: ElementPair) -> bool:
        if pair not in cache:
            orbit = twisted_orbit(A, pair)
            result = any(accept(q) for q in orbit)
            if not result:
                # every power of an orbit member is a power of pair
                cache.update(dict.fromkeys(orbit, False))
            cache[pair] = result
        return cache[pair]

    return hits


def radical(rho: Congruence) -> Congruence:
    """
    sqrt(rho): (a, b) is in it iff some (a + c, b + c)^n with n >= 1 lies in
    rho. The twisted orbit is walked until it cycles, so the search is exact.
    """
    A = rho.owner
    hits = _orbit_hits(A, lambda q: rho.related(*q), {})
    elements = range(A.size)
    pairs = [
        (a, b)
        for a, b in product(elements, repeat=2)
        if any(hits(ElementPair(A.plus(a, c), A.plus(b, c))) for c in elements)
    ]
    return Congruence.from_pairs(A, pairs)


def radical_alt(rho: Congruence) -> Congruence:
    """sqrt(rho) as the pairs some twisted power of which lies in rho_+."""
    A = rho.owner
    saturated = plus_closure(rho)
    hits = _orbit_hits(A, lambda q: saturated.related(*q), {})
    pairs = [pair for pair in product(range(A.size), repeat=2) if hits(ElementPair(*pair))]
    return Congruence.from_pairs(A, pairs)


def nil_relations(A: FiniteSemiring) -> NilRelations:
    """
    R_nil, rho_nil = (R_nil)_+ and N_c = (R_nil)^c.

    R_nil holds the pairs some twisted power of which is diagonal.
    """
    hits = _orbit_hits(A, lambda q: q.left == q.right, {})
    r_nil = relations.relation(
        A, (pair for pair in product(range(A.size), repeat=2) if hits(ElementPair(*pair)))
    )
    rho_nil = Congruence.from_pairs(A, relations.plus_saturate(r_nil).pairs)
    n_c = generated_congruence(A, r_nil.pairs)
    return NilRelations(r_nil, rho_nil, n_c)


def flat(E: Equivalence) -> Congruence:
    """E^flat: the pairs all of whose translates ax + y, bx + y stay in E."""
    A = E.owner
    elements = range(A.size)
    pairs = [
        (a, b)
        for a, b in product(elements, repeat=2)
        if all(
            E.related(A.plus(A.times(a, x), y), A.plus(A.times(b, x), y))
            for x in elements
            for y in elements
        )
    ]
    return Congruence.from_pairs(A, pairs)


def representatives(rho: Equivalence) -> list[int]:
    return [members[0] for members in rho.classes]


def is_prime(rho: Congruence) -> bool:
    """
    Proper, and (a, b) * (c, d) in rho forces (a, b) or (c, d) in rho.

    Membership depends on classes only, so the scan runs over class
    representatives.
    """
    if not rho.proper:
        return False
    A = rho.owner
    reps = representatives(rho)
    off_diagonal = [(a, b) for a, b in product(reps, repeat=2) if a != b]
    for p, q in product(off_diagonal, repeat=2):
        if rho.related(*twisted_mul(A, p, q)):
            return False
    return True


def is_semi_prime(rho: Congruence) -> bool:
    """Proper, and ab ~ 0 forces a ~ 0 or b ~ 0."""
    if not rho.proper:
        return False
    A = rho.owner
    reps = representatives(rho)
    return all(
        rho.related(a, A.zero) or rho.related(b, A.zero)
        for a, b in product(reps, repeat=2)
        if rho.related(A.times(a, b), A.zero)
    )


def is_maximal(rho: Congruence) -> bool:
    """Proper, and adding any outside pair generates A x A."""
    if not rho.proper:
        return False
    A = rho.owner
    reps = representatives(rho)
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            if not generated_congruence(A, [(a, b)], base=rho).is_full:
                return False
    return True


def is_semi_maximal(rho: Congruence) -> bool:
    """Proper, and every a not ~ 0 has some b with ab ~ 1."""
    if not rho.proper:
        return False
    A = rho.owner
    reps = representatives(rho)
    return all(
        any(rho.related(A.times(a, b), A.one) for b in reps)
        for a in reps
        if not rho.related(a, A.zero)
    )


def classify(rho: Congruence) -> CongruenceClassification:
    root = radical(rho)
    saturated = plus_closure(rho)
    return CongruenceClassification(
        proper=rho.proper,
        prime=is_prime(rho),
        semi_prime=is_semi_prime(rho),
        maximal=is_maximal(rho),
        semi_maximal=is_semi_maximal(rho),
        radical=root.same_partition(rho),
        quasi_radical=root.same_partition(saturated),
        plus_saturated=saturated.same_partition(rho),
    )


def quotient(rho: Congruence) -> tuple[SemiringTable, tuple[int, ...]]:
    """
    A / rho with class ids as carrier.

    Returns:
        The quotient table, labelled by class representatives, and the
        projection map element -> class id.

    Raises:
        ImproperQuotientError: If rho identifies 1 and 0.
    """
    if not rho.proper:
        raise ImproperQuotientError(messages.text(messages.improper_quotient))
    A = rho.owner
    reps = representatives(rho)
    projection = rho.class_of
    table = make_table(
        f"{A.name}/~",
        len(reps),
        lambda i, j: projection[A.plus(reps[i], reps[j])],
        lambda i, j: projection[A.times(reps[i], reps[j])],
        projection[A.zero],
        projection[A.one],
        [A.label(r) for r in reps],
    )
    return table, projection


def relation_modulo(R, rho: Congruence) -> PairRelation:
    """The image R / rho on the quotient semiring."""
    relations.same_owner(R, rho)
    table, projection = quotient(rho)
    return relations.relation(table, ((projection[a], projection[b]) for a, b in R.pairs))


def congruence_of_ideal(ideal: Ideal) -> Congruence:
    """rho_J: a ~ b iff the translates a + J and b + J coincide."""
    A = ideal.owner
    if not ideal_check(A, ideal.members):
        raise NotAnIdealError(
            messages.text(
                messages.not_an_ideal, members=sorted(ideal.members), semiring=A.name
            )
        )
    return Congruence.from_keys(
        A, (frozenset(A.plus(a, j) for j in ideal.members) for a in A.elements)
    )


def ideal_of_congruence(sigma: Congruence) -> Ideal:
    """I_sigma: the class of zero."""
    A = sigma.owner
    return Ideal(A, frozenset(a for a in range(A.size) if sigma.related(a, A.zero)))


def ideal_congruence_maps(ideal: Ideal, sigma: Congruence) -> tuple[Congruence, Ideal]:
    relations.same_owner(ideal, sigma)
    return congruence_of_ideal(ideal), ideal_of_congruence(sigma)


def principal_relation(A: FiniteSemiring, a: int, b: int) -> tuple[PairRelation, Congruence]:
    """R(a, b) = {(ax + by + z, bx + ay + z)} and its saturation R(a, b)_+."""
    elements = range(A.size)
    R = relations.relation(
        A,
        (
            (
                A.plus(A.plus(A.times(a, x), A.times(b, y)), z),
                A.plus(A.plus(A.times(b, x), A.times(a, y)), z),
            )
            for x, y, z in product(elements, repeat=3)
        ),
    )
    return R, Congruence.from_pairs(A, relations.plus_saturate(R).pairs)
