import random
from itertools import product

import pytest

from src.core.exceptions import OwnerMismatchError
from src.services import relations
from src.services.semiring import builtin


def random_relation(A, rng, size):
    pairs = list(product(A.elements, repeat=2))
    return relations.relation(A, rng.sample(pairs, min(size, len(pairs))))


def test_inverse_is_involution():
    A = builtin("zmod", 4)
    R = relations.relation(A, {(0, 1), (2, 3), (1, 1)})

    assert relations.inverse(relations.inverse(R)) == R


def test_transitive_closure_two_step_chain():
    A = builtin("zmod", 4)
    R = relations.relation(A, {(0, 1), (1, 2)})

    closed = relations.transitive_closure(R)

    assert (0, 2) in closed
    assert (2, 0) not in closed


def test_equivalence_closure_of_empty_is_identity():
    A = builtin("zmod", 4)

    assert relations.equivalence_closure(relations.relation(A, ())) == relations.identity(A)


def test_compose():
    A = builtin("zmod", 4)
    R = relations.relation(A, {(0, 1), (2, 3)})
    S = relations.relation(A, {(1, 2), (3, 0)})

    assert set(relations.compose(R, S)) == {(0, 2), (2, 0)}


def test_owner_mismatch():
    R = relations.identity(builtin("zmod", 4))
    S = relations.identity(builtin("zmod", 5))

    with pytest.raises(OwnerMismatchError):
        relations.union(R, S)


def test_translate_saturate_identity():
    A = builtin("truncated_nat", 2)

    assert relations.translate_saturate(relations.identity(A)) == relations.identity(A)


def test_translate_saturate_zmod4():
    A = builtin("zmod", 4)

    saturated = relations.translate_saturate(relations.relation(A, {(0, 2)}))

    assert saturated.pairs == {(y, (2 * x + y) % 4) for x in range(4) for y in range(4)}


@pytest.mark.parametrize("kind, parameter", [("boolean", None), ("zmod", 6), ("truncated_nat", 3), ("minplus_chain", 2)])
def test_translate_saturate_is_idempotent(kind, parameter):
    A = builtin(kind, parameter)
    rng = random.Random(5)

    for size in range(1, 5):
        once = relations.translate_saturate(random_relation(A, rng, size))
        assert relations.translate_saturate(once) == once


def test_plus_saturate_boolean_identity_is_full():
    A = builtin("boolean")

    assert relations.plus_saturate(relations.identity(A)) == relations.full(A)


def test_plus_saturate_ring_identity():
    A = builtin("zmod", 6)

    assert relations.plus_saturate(relations.identity(A)) == relations.identity(A)
