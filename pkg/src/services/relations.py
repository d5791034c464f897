"""Relation calculus on a finite semiring: products, inverses, closures and
the two translation saturations R^L and R_+."""

from itertools import product

from src.conf import messages
from src.core.exceptions import OwnerMismatchError
from src.entity.models import ElementPair, FiniteSemiring, PairRelation


def relation(A: FiniteSemiring, pairs) -> PairRelation:
    return PairRelation(A, frozenset(pairs))


def identity(A: FiniteSemiring) -> PairRelation:
    return relation(A, ((a, a) for a in range(A.size)))


def full(A: FiniteSemiring) -> PairRelation:
    return relation(A, product(range(A.size), repeat=2))


def same_owner(R, S) -> None:
    """
    Raises:
        OwnerMismatchError: If ``R`` and ``S`` live on different semirings.
    """
    if R.owner is not S.owner and R.owner != S.owner:
        raise OwnerMismatchError(
            messages.text(messages.owner_mismatch, left=R.owner.name, right=S.owner.name)
        )


def union(R: PairRelation, S: PairRelation) -> PairRelation:
    same_owner(R, S)
    return relation(R.owner, R.pairs | S.pairs)


def intersection(R: PairRelation, S: PairRelation) -> PairRelation:
    same_owner(R, S)
    return relation(R.owner, R.pairs & S.pairs)


def compose(R: PairRelation, S: PairRelation) -> PairRelation:
    """R o S = {(a, c) : (a, b) in R and (b, c) in S for some b}."""
    same_owner(R, S)
    successors: dict[int, list[int]] = {}
    for b, c in S.pairs:
        successors.setdefault(b, []).append(c)
    return relation(
        R.owner, ((a, c) for a, b in R.pairs for c in successors.get(b, ()))
    )


def inverse(R: PairRelation) -> PairRelation:
    return relation(R.owner, ((b, a) for a, b in R.pairs))


def transitive_closure(R: PairRelation) -> PairRelation:
    """R^oo, the union of all powers R^n with n >= 1."""
    successors: dict[int, set[int]] = {}
    for a, b in R.pairs:
        successors.setdefault(a, set()).add(b)
    pairs = set()
    for start in successors:
        stack = list(successors[start])
        reached: set[int] = set()
        while stack:
            node = stack.pop()
            if node in reached:
                continue
            reached.add(node)
            stack.extend(successors.get(node, ()))
        pairs.update((start, node) for node in reached)
    return relation(R.owner, pairs)


def equivalence_closure(R: PairRelation) -> PairRelation:
    """R^e = (R u R^-1 u id)^oo."""
    return transitive_closure(union(union(R, inverse(R)), identity(R.owner)))


def translate_saturate(R: PairRelation) -> PairRelation:
    """R^L = {(ax + y, bx + y) : (a, b) in R, x, y in A}."""
    A = R.owner
    elements = range(A.size)
    return relation(
        A,
        (
            (A.plus(A.times(a, x), y), A.plus(A.times(b, x), y))
            for a, b in R.pairs
            for x in elements
            for y in elements
        ),
    )


def plus_saturate(R: PairRelation) -> PairRelation:
    """R_+ = {(a, b) : (a + c, b + c) in R for some c}."""
    A = R.owner
    elements = range(A.size)
    return relation(
        A,
        (
            (a, b)
            for a, b in product(elements, repeat=2)
            if any(ElementPair(A.plus(a, c), A.plus(b, c)) in R.pairs for c in elements)
        ),
    )
