from itertools import product

import pytest

from src.core.exceptions import BoundExceededError, EmbeddingError
from src.entity.models import EmbeddedSemiring
from src.services.congruence import generated_congruence, is_congruence
from src.services.function_semiring import element_of, function_semiring, table_of
from src.services.polynomial import parse_polynomial
from src.services.semiring import builtin


def identity_ctx(kind, parameter=None):
    A = builtin(kind, parameter)
    return EmbeddedSemiring(A, A, tuple(A.elements))


@pytest.mark.parametrize(
    "kind, parameter, num_vars, size",
    [
        ("boolean", None, 1, 3),
        ("boolean", None, 2, 6),
        ("zmod", 2, 2, 16),
        ("zmod", 3, 1, 27),
        ("zmod", 4, 1, 64),
        ("zmod", 6, 1, 108),
        ("zmod", 6, 0, 6),
    ],
)
def test_function_counts(kind, parameter, num_vars, size):
    fs = function_semiring(identity_ctx(kind, parameter), num_vars)

    assert fs.size == size


def test_boolean_line():
    fs = function_semiring(identity_ctx("boolean"), 1)

    assert [f.table for f in fs.functions] == [(0, 0), (0, 1), (1, 1)]
    assert fs.zero == 0
    assert fs.one == 2
    assert fs.label(1) == "x"


def test_constants_only_through_embedding():
    boolean = builtin("boolean")
    chain = builtin("minplus_chain", 2)
    ctx = EmbeddedSemiring(boolean, chain, (chain.zero, chain.one))

    fs = function_semiring(ctx, 0)

    assert [f.table for f in fs.functions] == [(chain.zero,), (chain.one,)]


def test_embedding_is_checked():
    zmod2 = builtin("zmod", 2)
    zmod4 = builtin("zmod", 4)

    with pytest.raises(EmbeddingError):
        EmbeddedSemiring(zmod2, zmod4, (0, 1))


@pytest.mark.parametrize(
    "kind, parameter, num_vars",
    [("zmod", 3, 1), ("truncated_nat", 2, 1), ("minplus_chain", 1, 1), ("boolean", None, 2)],
)
def test_closure_and_witnesses(kind, parameter, num_vars):
    fs = function_semiring(identity_ctx(kind, parameter), num_vars)

    for a, b in product(range(fs.size), repeat=2):
        assert fs.plus(a, b) is not None
        assert fs.times(a, b) is not None
    for element, function in enumerate(fs.functions):
        assert table_of(fs, function.witness) == function.table
        assert element_of(fs, function.witness) == element


def test_monomials_of_zmod3_line():
    fs = function_semiring(identity_ctx("zmod", 3), 1)

    assert len(fs.monomials) == 7
    assert len(fs.generators) == 4


def test_point_bound():
    with pytest.raises(BoundExceededError):
        function_semiring(identity_ctx("zmod", 5), 3)


def test_function_count_bound(monkeypatch):
    monkeypatch.setattr("src.services.function_semiring.settings.MAX_FUNCTIONS", 10)

    with pytest.raises(BoundExceededError):
        function_semiring(identity_ctx("zmod", 3), 1)


def test_generated_congruence_on_functions():
    fs = function_semiring(identity_ctx("zmod", 3), 1)
    x_squared = element_of(fs, parse_polynomial("x^2", fs.ctx.coeff, 1))
    one = element_of(fs, parse_polynomial("1", fs.ctx.coeff, 1))

    sigma = generated_congruence(fs, [(x_squared, one)])

    assert is_congruence(sigma)
    assert sigma.related(x_squared, one)
    assert sigma.proper
