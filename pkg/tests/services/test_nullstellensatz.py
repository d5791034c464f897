import random
from itertools import product

import pytest

from src.core.exceptions import BoundExceededError, UsageError, WindowModeError
from src.entity.models import (
    Congruence,
    EmbeddedSemiring,
    ModularCongruence,
    NaturalsWindow,
    PairSystem,
    Polynomial,
)
from src.services.congruence import radical
from src.services.function_semiring import function_semiring
from src.services.geometry import generated_on_functions
from src.services.nullstellensatz import nullstellensatz_check, sqrt_over
from src.services.polynomial import coeffwise_congruent, parse_system
from src.services.semiring import builtin
from src.services.spectrum import enumerate_congruences
from src.services.window import radical_modulus


def identity_ctx(kind, parameter=None):
    A = builtin(kind, parameter)
    return EmbeddedSemiring(A, A, tuple(A.elements))


def system(ctx, text, num_vars=1):
    return PairSystem("T", parse_system(text, ctx.coeff, num_vars), num_vars, ctx)


@pytest.fixture(scope="module")
def zmod3_line():
    ctx = identity_ctx("zmod", 3)
    return ctx, function_semiring(ctx, 1)


def test_improper_sigma(zmod3_line):
    ctx, fs = zmod3_line

    report = nullstellensatz_check(system(ctx, "1 = 0"), Congruence.identity(ctx.target), 2, fs)

    assert report.zero_set_size == 0
    assert report.inclusion_holds
    assert report.equality_holds


def test_point_ideal_over_field(zmod3_line):
    ctx, fs = zmod3_line

    report = nullstellensatz_check(system(ctx, "x = 0"), Congruence.identity(ctx.target), 2, fs)

    assert report.inclusion_holds
    assert report.equality_holds
    assert report.informative
    assert report.syntactic_count == 27
    assert report.zero_set_size == 1


def test_small_cap_is_flagged(zmod3_line):
    ctx, fs = zmod3_line

    relation = sqrt_over(system(ctx, "x = 0"), Congruence.identity(ctx.target), 1, fs)

    assert not relation.informative
    assert len(relation.polynomials) == 9


def test_reduced_rho_gives_radical_of_sigma(zmod3_line):
    ctx, fs = zmod3_line
    T = system(ctx, "x^2 = 1")
    rho = Congruence.identity(ctx.target)

    relation = sqrt_over(T, rho, 2, fs)
    root_sigma = radical(generated_on_functions(T, fs)[1])

    for i, j in product(range(len(relation.polynomials)), repeat=2):
        expected = root_sigma.related(relation.functions[i], relation.functions[j])
        assert relation.related(i, j) == expected


def test_relation_contains_coefficient_congruence():
    ctx = identity_ctx("zmod", 4)
    mod2 = Congruence.from_classes(ctx.target, [(0, 2), (1, 3)])

    relation = sqrt_over(system(ctx, "x = x"), mod2, 1)

    for i, j in product(range(len(relation.polynomials)), repeat=2):
        f, g = relation.polynomials[i], relation.polynomials[j]
        if i == j or coeffwise_congruent(f, g, mod2, ctx.coeff.zero):
            assert relation.related(i, j)
            assert relation.generated_related(i, j)


def test_cap_is_required(zmod3_line):
    ctx, fs = zmod3_line
    T = system(ctx, "x = 0")
    rho = Congruence.identity(ctx.target)

    with pytest.raises(UsageError):
        nullstellensatz_check(T, rho, None, fs)
    with pytest.raises(UsageError):
        sqrt_over(T, rho, -1, fs)


def test_syntactic_bound(zmod3_line):
    ctx, fs = zmod3_line

    with pytest.raises(BoundExceededError):
        sqrt_over(system(ctx, "x = 0"), Congruence.identity(ctx.target), 3, fs, limit=50)


@pytest.mark.parametrize(
    "kind, parameter, num_vars, cap, rounds",
    [
        ("zmod", 3, 1, 2, 15),
        ("zmod", 4, 1, 2, 8),
        ("zmod", 2, 2, 2, 10),
        ("truncated_nat", 2, 1, 2, 10),
        ("zmod", 6, 1, 1, 2),
    ],
)
def test_inclusion_on_random_instances(kind, parameter, num_vars, cap, rounds):
    ctx = identity_ctx(kind, parameter)
    ring = ctx.coeff
    fs = function_semiring(ctx, num_vars)
    congruences = enumerate_congruences(ctx.target)
    rng = random.Random(37)
    exponents = [e for e in product(range(3), repeat=num_vars) if sum(e) <= 2]

    def polynomial():
        mapping = {e: rng.randrange(ring.size) for e in exponents if rng.random() < 0.5}
        return Polynomial.from_mapping(num_vars, mapping, ring.zero)

    for _ in range(rounds):
        T = PairSystem("T", [(polynomial(), polynomial())], num_vars, ctx)
        report = nullstellensatz_check(T, rng.choice(congruences), cap, fs)
        assert report.inclusion_holds
        assert not report.witnesses or not report.equality_holds


@pytest.mark.parametrize("p", [2, 3, 5])
def test_window_example_equality(p):
    N = NaturalsWindow(50)

    report = nullstellensatz_check(system(N, "x = 0"), ModularCongruence(N, p), 3)

    assert report.inclusion_holds
    assert report.equality_holds
    assert report.window == 50
    assert report.syntactic_count == p**4


@pytest.mark.parametrize("text, modulus", [("x = 0", 4), ("x^2 = 0", 3), ("0 = x^3", 12)])
def test_window_monomial_generators(text, modulus):
    N = NaturalsWindow(50)

    report = nullstellensatz_check(system(N, text), ModularCongruence(N, modulus), 3)

    assert report.inclusion_holds
    assert report.equality_holds
    assert report.syntactic_count == radical_modulus(modulus) ** 4


def test_window_equality_can_fail():
    N = NaturalsWindow(10)

    report = nullstellensatz_check(system(N, "x1*x2 = 0", 2), ModularCongruence(N, 2), 2)

    assert report.inclusion_holds
    assert not report.equality_holds
    assert report.witnesses


def test_window_rejects_other_shapes():
    N = NaturalsWindow(50)

    with pytest.raises(WindowModeError):
        nullstellensatz_check(system(N, "x + 1 = 0"), ModularCongruence(N, 2), 3)
