import pytest

from src.core.exceptions import UndefinedNameError
from src.repositories.base import BaseRepository
from src.services.semiring import builtin


@pytest.fixture
def repository():
    return BaseRepository("semiring")


@pytest.fixture
def boolean_instance():
    return builtin("boolean", name="B")


def test_create_and_get_by_name(repository, boolean_instance):
    result = repository.create("B", boolean_instance)

    assert result is boolean_instance
    assert repository.get_by_name("B") is boolean_instance


def test_get_by_name_missing(repository):
    assert repository.get_by_name("B") is None


def test_get_all_keeps_declaration_order(repository):
    first = builtin("zmod", 3, name="Z3")
    second = builtin("boolean", name="B")
    repository.create("Z3", first)
    repository.create("B", second)

    assert repository.get_all() == [first, second]
    assert repository.first() is first


def test_first_on_empty_repository(repository):
    assert repository.first() is None


def test_require_missing_names_the_kind(repository):
    with pytest.raises(UndefinedNameError) as error:
        repository.require("Q")

    assert error.value.message == "Undefined semiring 'Q'"
    assert error.value.exit_code == 2
