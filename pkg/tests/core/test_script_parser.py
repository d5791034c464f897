import pytest

from src.core.exceptions import ParseError, UndefinedNameError
from src.core.script_parser import parse_script, tokenize
from src.entity.models import (
    CongruenceDecl,
    IdealDecl,
    PointsDecl,
    SemiringDecl,
    SystemDecl,
)


def test_tokenize_positions():
    tokens = tokenize("semiring A\n  end")

    assert [(t.text, t.line, t.column) for t in tokens] == [
        ("semiring", 1, 1),
        ("A", 1, 10),
        ("end", 2, 3),
    ]


def test_tokenize_skips_comments():
    assert [t.text for t in tokenize("# note\nrun spectrum # trailing")] == ["run", "spectrum"]


def test_tokenize_rejects_unknown_character():
    with pytest.raises(ParseError) as error:
        tokenize("semiring A\n  elements 0 ? 1")

    assert (error.value.line, error.value.column) == (2, 14)


def test_explicit_semiring_declaration(chain_script):
    script = parse_script(chain_script)
    decl = script.declarations[0]

    assert isinstance(decl, SemiringDecl)
    assert decl.kind == "explicit"
    assert decl.elements == ("0", "1", "t")
    assert (decl.zero, decl.one) == ("0", "1")
    assert ("1", "t", "t") in decl.add_entries
    assert len(decl.mul_entries) == 6


def test_full_script_declarations_and_directives(zmod6_script):
    script = parse_script(zmod6_script)

    assert script.names() == ["Z", "even", "three", "gen", "E", "J", "S", "Y"]
    builtin_decl, even, _, gen = script.declarations[:4]
    assert (builtin_decl.builtin_kind, builtin_decl.parameter) == ("zmod", 6)
    assert isinstance(even, CongruenceDecl)
    assert even.form == "partition"
    assert even.classes == (("0", "2", "4"), ("1", "3", "5"))
    assert gen.form == "pairs"
    assert gen.pairs == (("0", "2"),)
    assert [d.command for d in script.directives] == ["spectrum", "meet", "hom-count"]
    assert script.directives[1].options == (("congruences", "even,three"),)


def test_system_string_keeps_its_location():
    script = parse_script('semiring B builtin boolean end\nsystem S over B in B vars 2 = "x1 = x2"')
    decl = script.declarations[1]

    assert isinstance(decl, SystemDecl)
    assert decl.text == "x1 = x2"
    assert decl.num_vars == 2
    assert (decl.line, decl.column) == (2, 32)


def test_points_and_ideal_declarations():
    script = parse_script(
        "semiring B builtin boolean end\n"
        "ideal J on B = {0}\n"
        "points P over B in B vars 2 = (0 1) (1, 1)\n"
    )
    ideal, points = script.declarations[1:]

    assert isinstance(ideal, IdealDecl)
    assert ideal.members == ("0",)
    assert isinstance(points, PointsDecl)
    assert points.points == (("0", "1"), ("1", "1"))


@pytest.mark.parametrize(
    "literal, form",
    [("id", "identity"), ("all", "full"), ("0~1", "pairs"), ("{0 1}", "partition")],
)
def test_congruence_literal_forms(literal, form):
    script = parse_script(f"semiring B builtin boolean end\ncongruence r on B = {literal}")

    assert script.declarations[1].form == form


def test_naturals_and_modulus():
    script = parse_script("semiring N naturals end\ncongruence r on N = mod 12")

    assert script.declarations[0].kind == "naturals"
    assert script.declarations[1].modulus == 12


def test_search_directive_takes_target_word():
    script = parse_script("run search maximal-nonprime seed=3 sizes=2-3")
    directive = script.directives[0]

    assert directive.command == "search maximal-nonprime"
    assert directive.options == (("seed", "3"), ("sizes", "2-3"))


def test_undefined_semiring_reference():
    with pytest.raises(UndefinedNameError) as error:
        parse_script("congruence r on Q = id")

    assert error.value.line == 1
    assert error.value.exit_code == 2


def test_duplicate_name():
    with pytest.raises(ParseError, match="A"):
        parse_script("semiring A builtin boolean end\nsemiring A builtin boolean end")


def test_missing_end_reports_end_of_input():
    with pytest.raises(ParseError, match="end of input"):
        parse_script("semiring A\n  elements 0 1")


def test_directive_option_without_value():
    with pytest.raises(ParseError):
        parse_script("run spectrum kind=prime seed")


def test_unexpected_keyword():
    with pytest.raises(ParseError) as error:
        parse_script("semiring B builtin boolean end\nmonoid M")

    assert (error.value.line, error.value.column) == (2, 1)
