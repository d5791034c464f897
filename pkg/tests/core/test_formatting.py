from src.core.formatting import (
    key_values,
    render_members,
    render_pairs,
    render_partition,
    render_points,
    render_semiring,
    render_table,
    render_value,
)
from src.core.script_parser import parse_script
from src.entity.models import Congruence, NaturalsWindow
from src.repositories.workspace import WorkspaceRepository
from src.services.semiring import builtin, make_table


def test_render_semiring_parses_back_to_the_same_table():
    A = builtin("minplus_chain", 2, name="M")

    workspace = WorkspaceRepository.from_text(render_semiring(A))
    parsed = workspace.semirings.require("M")

    assert parsed.labels == A.labels
    assert parsed.add == A.add
    assert parsed.mul == A.mul
    assert (parsed.zero, parsed.one) == (A.zero, A.one)


def test_render_semiring_uses_ids_for_non_word_labels():
    A = make_table("P", 2, lambda a, b: a | b, lambda a, b: a & b, 0, 1, ["(0)", "(1)"])

    text = render_semiring(A)

    assert "elements 0 1" in text
    assert parse_script(text).declarations[0].elements == ("0", "1")


def test_render_semiring_lists_every_ordered_pair():
    lines = render_semiring(builtin("zmod", 3)).splitlines()

    assert sum(line.strip().startswith("add") for line in lines) == 9
    assert sum(line.strip().startswith("mul") for line in lines) == 9
    assert "  mul 2 1 = 2" in lines


def test_render_table_aligns_columns():
    A = builtin("minplus_chain", 1)

    assert render_table(A, A.plus) == [
        "inf   0   1",
        "  0   0   0",
        "  1   0   1",
    ]


def test_render_partition_orders_classes_by_least_member(zmod6):
    rho = Congruence.from_classes(zmod6, [(2, 5), (0, 3), (1, 4)])

    assert render_partition(rho) == "{0 3}{1 4}{2 5}"


def test_render_members_sorted(zmod6):
    assert render_members(zmod6, {4, 0, 2}) == "{0 2 4}"


def test_render_pairs_can_drop_the_diagonal(boolean):
    pairs = {(1, 0), (0, 0), (0, 1), (1, 1)}

    assert render_pairs(boolean, pairs) == "0~0, 0~1, 1~0, 1~1"
    assert render_pairs(boolean, pairs, diagonal=False) == "0~1, 1~0"


def test_render_points_sorted():
    window = NaturalsWindow(10)

    assert render_points(window, {(2, 0), (0, 7)}) == "(0 7)(2 0)"


def test_render_value():
    assert render_value(True) == "true"
    assert render_value(None) == "none"
    assert render_value(3) == "3"


def test_key_values_keeps_argument_order():
    assert key_values(homs=2, points=1) == "homs=2 points=1"
