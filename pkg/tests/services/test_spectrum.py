from itertools import combinations, product

import pytest

from src.conf import constants
from src.core.exceptions import BoundExceededError, UsageError
from src.entity.models import Congruence
from src.services.congruence import generated_congruence, join_generated, meet
from src.services.semiring import builtin
from src.services.spectrum import (
    enumerate_congruences,
    smallest_containing,
    spectrum,
    zariski_closed,
)

UP_TO_4 = [
    ("boolean", None),
    ("zmod", 3),
    ("zmod", 4),
    ("truncated_nat", 2),
    ("truncated_nat", 3),
    ("minplus_chain", 1),
    ("minplus_chain", 2),
]


def signatures(congruences):
    return [rho.signature for rho in congruences]


def test_enumerate_boolean():
    A = builtin("boolean")

    found = enumerate_congruences(A)

    assert signatures(found) == [(0, 0), (0, 1)]


def test_enumerate_truncated_nat():
    found = enumerate_congruences(builtin("truncated_nat", 2))

    assert signatures(found) == [(0, 0, 0), (0, 1, 1), (0, 1, 2)]


def test_enumerate_zmod6():
    found = enumerate_congruences(builtin("zmod", 6))

    assert signatures(found) == [
        (0, 0, 0, 0, 0, 0),
        (0, 1, 0, 1, 0, 1),
        (0, 1, 2, 0, 1, 2),
        (0, 1, 2, 3, 4, 5),
    ]


def test_enumerate_refuses_large_carrier():
    with pytest.raises(BoundExceededError):
        enumerate_congruences(builtin("zmod", 9))


def test_enumerate_bound_override():
    with pytest.raises(BoundExceededError):
        enumerate_congruences(builtin("zmod", 4), max_size=3)


def test_prime_spectrum_zmod6():
    primes = spectrum(builtin("zmod", 6), constants.KIND_PRIME)

    assert signatures(primes) == [(0, 1, 0, 1, 0, 1), (0, 1, 2, 0, 1, 2)]


def test_prime_spectrum_boolean():
    assert signatures(spectrum(builtin("boolean"))) == [(0, 1)]


def test_maximal_spectrum_truncated_nat():
    maximal = spectrum(builtin("truncated_nat", 2), constants.KIND_MAXIMAL)

    assert signatures(maximal) == [(0, 1, 1)]


def test_unknown_kind():
    with pytest.raises(UsageError):
        spectrum(builtin("boolean"), "radical")


@pytest.mark.parametrize("kind, parameter", UP_TO_4 + [("zmod", 6), ("truncated_nat", 4)])
def test_prime_spectrum_inside_semiprime(kind, parameter):
    A = builtin(kind, parameter)
    congruences = enumerate_congruences(A)

    primes = signatures(spectrum(A, constants.KIND_PRIME, congruences=congruences))
    semi = signatures(spectrum(A, constants.KIND_SEMIPRIME, congruences=congruences))
    maximal = signatures(spectrum(A, constants.KIND_MAXIMAL, congruences=congruences))
    semi_maximal = signatures(spectrum(A, constants.KIND_SEMIMAXIMAL, congruences=congruences))

    assert set(primes) <= set(semi)
    assert set(semi_maximal) <= set(semi)
    assert set(maximal) <= {rho.signature for rho in congruences if rho.proper}


def test_closed_sets_extremes():
    A = builtin("zmod", 6)
    primes = spectrum(A)

    assert zariski_closed(A, Congruence.identity(A)) == primes
    assert zariski_closed(A, Congruence.full(A)) == []


def test_closed_sets_union_zmod6():
    A = builtin("zmod", 6)
    mod2 = Congruence.from_classes(A, [(0, 2, 4), (1, 3, 5)])
    mod3 = Congruence.from_classes(A, [(0, 3), (1, 4), (2, 5)])

    union = signatures(zariski_closed(A, mod2)) + signatures(zariski_closed(A, mod3))

    assert sorted(union) == signatures(zariski_closed(A, meet(mod2, mod3)))
    assert len(union) == 2


@pytest.mark.parametrize("kind, parameter", UP_TO_4)
def test_zariski_axioms(kind, parameter):
    A = builtin(kind, parameter)
    congruences = enumerate_congruences(A)
    primes = spectrum(A, congruences=congruences)

    def closed(sigma):
        return {rho.signature for rho in zariski_closed(A, sigma, primes=primes)}

    for sigma, tau in product(congruences, repeat=2):
        assert closed(sigma) | closed(tau) == closed(meet(sigma, tau))
    for size in range(1, 4):
        for family in combinations(congruences, size):
            joined = family[0]
            for sigma in family[1:]:
                joined = join_generated(joined, sigma)
            common = set.intersection(*(closed(sigma) for sigma in family))
            assert common == closed(joined)


@pytest.mark.parametrize("kind, parameter", UP_TO_4)
def test_smallest_containing_matches_generation(kind, parameter):
    A = builtin(kind, parameter)
    congruences = enumerate_congruences(A)

    for pair in product(A.elements, repeat=2):
        oracle = smallest_containing(A, [pair], congruences=congruences)
        assert oracle.same_partition(generated_congruence(A, [pair]))
