import random
from itertools import combinations, product

import pytest

from src.conf.config import settings
from src.core.exceptions import OwnerMismatchError, WindowModeError
from src.entity.models import (
    Congruence,
    EmbeddedSemiring,
    ModularCongruence,
    NaturalsWindow,
    PairSystem,
    Polynomial,
    Variety,
)
from src.services.congruence import meet
from src.services.function_semiring import function_semiring
from src.services.geometry import (
    closure,
    intersect_systems,
    star_union,
    vanishing,
    vanishing_contains,
    zero_set,
    zero_set_of_generated,
)
from src.services.polynomial import parse_system
from src.services.semiring import builtin
from src.services.spectrum import enumerate_congruences


def identity_ctx(kind, parameter=None):
    A = builtin(kind, parameter)
    return EmbeddedSemiring(A, A, tuple(A.elements))


def system(ctx, text, num_vars=1, name="T"):
    return PairSystem(name, parse_system(text, ctx.coeff, num_vars), num_vars, ctx)


def random_system(rng, ctx, num_vars, pairs=1, degree=2):
    ring = ctx.coeff
    exponents = [e for e in product(range(degree + 1), repeat=num_vars) if sum(e) <= degree]

    def polynomial():
        mapping = {e: rng.randrange(ring.size) for e in exponents if rng.random() < 0.5}
        return Polynomial.from_mapping(num_vars, mapping, ring.zero)

    return PairSystem("T", [(polynomial(), polynomial()) for _ in range(pairs)], num_vars, ctx)


def subsets(points):
    for size in range(len(points) + 1):
        for chosen in combinations(points, size):
            yield Variety(frozenset(chosen), len(points[0]))


@pytest.fixture(scope="module")
def zmod5_line():
    ctx = identity_ctx("zmod", 5)
    return ctx, function_semiring(ctx, 1)


def test_square_roots_of_four(zmod5_line):
    ctx, fs = zmod5_line
    T = system(ctx, "x^2 = 4")
    rho = Congruence.identity(ctx.target)

    assert zero_set(T, rho).sorted_points() == [(2,), (3,)]
    assert zero_set_of_generated(T, rho, fs).sorted_points() == [(2,), (3,)]


def test_trivial_systems():
    ctx = identity_ctx("zmod", 4)
    rho = Congruence.from_classes(ctx.target, [(0, 2), (1, 3)])

    assert len(zero_set(system(ctx, "0 = 1", 2), rho)) == 0
    assert len(zero_set(system(ctx, "x1 + x2 = x1 + x2", 2), rho)) == 16


def test_owner_is_checked():
    ctx = identity_ctx("zmod", 5)
    other = builtin("zmod", 3)

    with pytest.raises(OwnerMismatchError):
        zero_set(system(ctx, "x = 1"), Congruence.identity(other))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_window_multiples(p):
    N = NaturalsWindow(50)
    T = system(N, "x = 0")

    Z = zero_set(T, ModularCongruence(N, p))

    assert Z.sorted_points() == [(v,) for v in range(0, 51, p)]
    assert Z.window == 50


def test_window_refuses_complement_and_generation():
    N = NaturalsWindow(50)
    T = system(N, "x = 0")
    rho = ModularCongruence(N, 2)

    with pytest.raises(WindowModeError):
        zero_set(T, rho).complement(N.points(1))
    with pytest.raises(WindowModeError):
        zero_set_of_generated(T, rho)


def test_generated_system_has_same_zero_set():
    ctx = identity_ctx("zmod", 6)
    fs = function_semiring(ctx, 1)
    congruences = enumerate_congruences(ctx.target)
    rng = random.Random(6)

    for _ in range(25):
        T = random_system(rng, ctx, 1, pairs=rng.randint(1, 2))
        rho = rng.choice(congruences)
        assert zero_set_of_generated(T, rho, fs) == zero_set(T, rho)


def test_star_union_over_field():
    ctx = identity_ctx("zmod", 5)
    rho = Congruence.identity(ctx.target)

    report = star_union(system(ctx, "x = 2"), system(ctx, "x = 3"), rho)

    assert report.star == [(2,), (3,)]
    assert report.union == [(2,), (3,)]
    assert report.rho_prime
    assert report.equal


def test_star_with_empty_zero_set():
    ctx = identity_ctx("zmod", 5)
    rho = Congruence.identity(ctx.target)

    report = star_union(system(ctx, "x^2 = 4"), system(ctx, "0 = 1"), rho)

    assert report.star == [(2,), (3,)]
    assert report.equal


def test_star_union_strict_without_primality():
    ctx = identity_ctx("truncated_nat", 2)
    rho = Congruence.identity(ctx.target)
    T = system(ctx, "x = 1")

    report = star_union(T, T, rho)

    assert not report.rho_prime
    assert report.union == [(1,)]
    assert report.star == [(1,), (2,)]
    assert not report.equal


@pytest.mark.parametrize("kind, parameter", [("zmod", 3), ("zmod", 5), ("boolean", None), ("zmod", 2)])
def test_star_union_equal_for_prime_rho(kind, parameter):
    ctx = identity_ctx(kind, parameter)
    rho = Congruence.identity(ctx.target)
    rng = random.Random(17)

    for _ in range(30):
        first = random_system(rng, ctx, 1, pairs=rng.randint(1, 2))
        second = random_system(rng, ctx, 1, pairs=rng.randint(1, 2))
        report = star_union(first, second, rho)
        assert report.rho_prime
        assert report.equal


def test_star_union_contains_union_for_any_rho():
    ctx = identity_ctx("truncated_nat", 3)
    rng = random.Random(23)
    congruences = enumerate_congruences(ctx.target)

    for _ in range(30):
        rho = rng.choice(congruences)
        report = star_union(random_system(rng, ctx, 1), random_system(rng, ctx, 1), rho)
        assert set(report.union) <= set(report.star)


def test_vanishing_extremes(zmod5_line):
    ctx, fs = zmod5_line
    rho = Congruence.identity(ctx.target)

    everything = vanishing(Variety(frozenset(), 1), rho, ctx, fs)
    pointwise = vanishing(Variety(frozenset(fs.points), 1), rho, ctx, fs)

    assert everything.congruence.is_full
    assert pointwise.congruence.is_identity


def test_vanishing_membership(zmod5_line):
    ctx, fs = zmod5_line
    V = vanishing(Variety(frozenset({(2,), (3,)}), 1), Congruence.identity(ctx.target), ctx, fs)
    (square, four), = parse_system("x^2 = 4", ctx.coeff, 1)
    (x, two), = parse_system("x = 2", ctx.coeff, 1)

    assert vanishing_contains(V, square, four)
    assert not vanishing_contains(V, x, two)


def test_closure_of_closed_and_full(zmod5_line):
    ctx, fs = zmod5_line
    rho = Congruence.identity(ctx.target)
    Z = zero_set(system(ctx, "x^2 = 4"), rho)
    everything = Variety(frozenset(fs.points), 1)

    assert closure(Z, rho, ctx, fs) == Z
    assert closure(everything, rho, ctx, fs) == everything


@pytest.mark.parametrize(
    "kind, parameter, num_vars",
    [("zmod", 3, 1), ("truncated_nat", 2, 1), ("boolean", None, 3), ("zmod", 2, 2), ("minplus_chain", 1, 1)],
)
def test_galois_connection(kind, parameter, num_vars):
    ctx = identity_ctx(kind, parameter)
    fs = function_semiring(ctx, num_vars)
    points = list(fs.points)
    Ys = list(subsets(points))

    for rho in enumerate_congruences(ctx.target):
        V = {Y: vanishing(Y, rho, ctx, fs).congruence for Y in Ys}
        for Y1, Y2 in product(Ys, repeat=2):
            if Y1.points <= Y2.points:
                assert V[Y2].refines(V[Y1])
            union = Variety(Y1.points | Y2.points, num_vars)
            assert V[union].same_partition(meet(V[Y1], V[Y2]))
        for Y in Ys:
            Ybar = closure(Y, rho, ctx, fs)
            assert Y.points <= Ybar.points
            assert closure(Ybar, rho, ctx, fs) == Ybar


def test_galois_connection_on_the_zmod3_plane(monkeypatch):
    # every function on the nine points is polynomial
    monkeypatch.setattr(settings, "MAX_FUNCTIONS", 3**9)
    ctx = identity_ctx("zmod", 3)
    fs = function_semiring(ctx, 2)
    rho = Congruence.identity(ctx.target)
    points = list(fs.points)

    def vanishing_on(chosen):
        return vanishing(Variety(frozenset(chosen), 2), rho, ctx, fs).congruence

    at_point = {p: vanishing_on({p}) for p in points}
    previous = {frozenset(): vanishing_on(())}
    assert fs.size == 3**9
    assert previous[frozenset()].is_full

    # each Y is its parent Y - {last point} plus one point
    for size in range(1, len(points) + 1):
        current = {}
        for chosen in combinations(points, size):
            Y = frozenset(chosen)
            parent = previous[Y - {chosen[-1]}]
            V = current[Y] = vanishing_on(Y)
            assert V.refines(parent)
            assert V.same_partition(meet(parent, at_point[chosen[-1]]))
            assert closure(Variety(Y, 2), rho, ctx, fs).points == Y
        previous = current
    assert previous[frozenset(points)].is_identity


@pytest.mark.parametrize("kind, parameter", [("zmod", 4), ("truncated_nat", 3), ("minplus_chain", 2)])
def test_systems_against_zero_sets(kind, parameter):
    ctx = identity_ctx(kind, parameter)
    fs = function_semiring(ctx, 1)
    rng = random.Random(29)
    congruences = enumerate_congruences(ctx.target)

    for _ in range(20):
        rho = rng.choice(congruences)
        T1 = random_system(rng, ctx, 1)
        T2 = random_system(rng, ctx, 1, pairs=2)
        Z1, Z2 = zero_set(T1, rho), zero_set(T2, rho)
        both = zero_set(intersect_systems([T1, T2]), rho)
        V = vanishing(Z1, rho, ctx, fs)

        assert both.points == Z1.points & Z2.points
        for f, g in T1.pairs:
            assert vanishing_contains(V, f, g)
