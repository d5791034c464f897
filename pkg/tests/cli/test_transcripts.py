import pytest

from src.cli.app import main

BOOLEAN = """
semiring B builtin boolean end
congruence r on B = {0}{1}
system S over B in B vars 1 = "x = 0"
"""

ZMOD3 = """
semiring T builtin zmod 3 end
congruence eq on T = {0}{1}{2}
points Y over T in T vars 1 = (0) (1)
"""

ZMOD4 = "semiring F builtin zmod 4 end"

ZMOD6 = """
semiring Z builtin zmod 6 end
congruence diag on Z = {0}{1}{2}{3}{4}{5}
congruence even on Z = {0 2 4}{1 3 5}
system S1 over Z in Z vars 1 = "x = 0"
system S2 over Z in Z vars 1 = "x = 3"
"""

# 1 * 1 = 0, so 1 is not a multiplicative identity
BROKEN = """
semiring A
  elements 0 1
  zero 0
  one 1
  add 0 0 = 0
  add 0 1 = 1
  add 1 0 = 1
  add 1 1 = 1
  mul 0 0 = 0
  mul 0 1 = 0
  mul 1 0 = 0
  mul 1 1 = 0
end
"""

TRANSCRIPTS = {
    "pair-semiring": (
        BOOLEAN,
        [],
        [
            "size=4 passed=true",
            "add",
            "(0,0) (0,1) (1,0) (1,1)",
            "(0,1) (0,1) (1,1) (1,1)",
            "(1,0) (1,1) (1,0) (1,1)",
            "(1,1) (1,1) (1,1) (1,1)",
            "mul",
            "(0,0) (0,0) (0,0) (0,0)",
            "(0,0) (1,0) (0,1) (1,1)",
            "(0,0) (0,1) (1,0) (1,1)",
            "(0,0) (1,1) (1,1) (1,1)",
        ],
    ),
    "ideals": (
        ZMOD4,
        [],
        ["{0} prime=false", "{0 2} prime=true", "{0 1 2 3} prime=false"],
    ),
    "plus": (BOOLEAN, ["--congruence", "r"], ["{0 1}"]),
    "nil": (
        ZMOD4,
        [],
        [
            "r_nil 0~2, 1~3, 2~0, 3~1",
            "rho_nil {0 2}{1 3}",
            "n_c {0 2}{1 3}",
            "reduced=false strongly_reduced=false",
        ],
    ),
    "vco": (
        ZMOD6,
        ["--congruence", "diag"],
        ["{0 2 4}{1 3 5}", "{0 3}{1 4}{2 5}", "count=2"],
    ),
    "topology-spec": (
        ZMOD6,
        [],
        [
            "p0 {0 2 4}{1 3 5}",
            "p1 {0 3}{1 4}{2 5}",
            "closed {}",
            "closed {p0}",
            "closed {p1}",
            "closed {p0 p1}",
        ],
    ),
    "principal": (
        ZMOD4,
        ["--pair", "0~2"],
        ["relation 0~2, 1~3, 2~0, 3~1", "saturated {0 2}{1 3}"],
    ),
    "irreducible": (
        ZMOD3,
        ["--points", "Y", "--congruence", "eq"],
        ["irreducible=false closed_sets=8"],
    ),
    "vanishing": (
        ZMOD3,
        ["--points", "Y", "--congruence", "eq", "--check", "x^2 = x; x = 0"],
        ["functions=27 classes=9 prime=false", "x^2 = x holds=true", "x = 0 holds=false"],
    ),
    "star-union": (
        ZMOD6,
        ["--system", "S1", "--system", "S2", "--congruence", "even"],
        [
            "rho_prime=true equal=true",
            "star (0)(1)(2)(3)(4)(5)",
            "union (0)(1)(2)(3)(4)(5)",
        ],
    ),
    "sqrt-over": (
        BOOLEAN,
        ["--congruence", "r", "--degree-cap", "1"],
        ["degree_cap=1 polynomials=4 vectors=1 components=1 informative=true"],
    ),
}


@pytest.mark.parametrize("command", list(TRANSCRIPTS))
def test_transcript(command, write_script, capsys):
    # Arrange
    script, arguments, expected = TRANSCRIPTS[command]
    path = write_script(script)

    # Act
    code = main([command, path, *arguments])

    # Assert
    assert code == 0
    assert capsys.readouterr().out.splitlines() == expected


def test_sqrt_over_transcript_in_window_mode(write_script, naturals_script, capsys):
    path = write_script(naturals_script)

    assert main(["sqrt-over", path, "--degree-cap", "2"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "degree_cap=2 polynomials=8 vectors=8 components=2 informative=true window=50"
    ]


def test_irreducible_singleton(write_script, capsys):
    path = write_script(ZMOD3 + "points P over T in T vars 1 = (2)\n")

    assert main(["irreducible", path, "--points", "P", "--congruence", "eq"]) == 0
    assert capsys.readouterr().out.splitlines() == ["irreducible=true closed_sets=8"]


def test_undefined_name_exits_with_usage_code(write_script, capsys):
    path = write_script(BOOLEAN)

    assert main(["plus", path, "--congruence", "nope"]) == 2

    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.splitlines()[-1] == "error[plus]: Undefined congruence 'nope'"


def test_located_parse_error_exits_with_usage_code(write_script, capsys):
    path = write_script("semiring A\n  elements 0 ?")

    assert main(["ideals", path]) == 2
    assert capsys.readouterr().err.startswith("error[ideals]: line 2, column 14: ")


def test_table_that_is_not_a_semiring_exits_with_domain_code(write_script, capsys):
    path = write_script(BROKEN)

    assert main(["spectrum", path]) == 1

    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.splitlines()[-1] == (
        "error[spectrum]: Semiring 'A' violates *-identity at (1); "
        "run 'axioms' for the full report"
    )


def test_axioms_still_reports_the_broken_table(write_script, capsys):
    path = write_script(BROKEN)

    assert main(["axioms", path]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "semiring=A passed=false",
        "violation *-identity (1)",
    ]
