from src.conf import messages
from src.core.exceptions import ParseError


def test_text_accepts_message_placeholder():
    rendered = messages.text(
        messages.parse_location, line=3, column=7, message="unexpected token"
    )

    assert rendered == "line 3, column 7: unexpected token"


def test_located_parse_error_is_prefixed():
    error = ParseError("missing 'end'", line=4, column=1)

    assert error.message == "line 4, column 1: missing 'end'"
    assert (error.line, error.column, error.exit_code) == (4, 1, 2)


def test_unlocated_parse_error_keeps_message():
    assert ParseError("empty script").message == "empty script"
