"""Tokenizer and recursive-descent parser for workbench scripts.

Grammar (keywords in quotes, ``word`` is a name or a number)::

    script      := (declaration | directive)*
    declaration := semiring | congruence | equivalence | ideal | system | points
    semiring    := 'semiring' NAME body 'end'
    body        := 'builtin' NAME NUMBER? | 'naturals'
                 | ('elements' word+ | 'zero' word | 'one' word
                    | 'add' word word '=' word | 'mul' word word '=' word)*
    congruence  := 'congruence' NAME 'on' NAME ('=' literal | 'pairs' pairlist)
    literal     := classes | 'id' | 'all' | 'mod' NUMBER | pairlist
    classes     := ('{' word* '}')+
    pairlist    := (word '~' word (',' word '~' word)*)?
    equivalence := 'equivalence' NAME 'on' NAME '=' classes
    ideal       := 'ideal' NAME 'on' NAME '=' '{' word* '}'
    system      := 'system' NAME 'over' NAME 'in' NAME 'vars' NUMBER '=' STRING
    points      := 'points' NAME 'over' NAME 'in' NAME 'vars' NUMBER '=' ('(' word* ')')*
    directive   := 'run' NAME (key '=' value)*      # rest of the line

Commas between words are optional separators. ``#`` starts a comment.
"""

import re
from typing import NamedTuple

from src.conf import constants, messages
from src.core.exceptions import ParseError, UndefinedNameError
from src.entity.models import (
    CongruenceDecl,
    Directive,
    EquivalenceDecl,
    IdealDecl,
    PointsDecl,
    SemiringDecl,
    SystemDecl,
    WorkbenchScript,
)

TOKEN_PATTERN = re.compile(
    r"""
    (?P<newline>\n)
    |(?P<space>[ \t\r]+)
    |(?P<comment>\#[^\n]*)
    |(?P<string>"[^"\n]*")
    |(?P<number>\d+)
    |(?P<name>[A-Za-z_][A-Za-z0-9_]*)
    |(?P<symbol>[{}()=~,;+*^-])
    |(?P<error>.)
    """,
    re.VERBOSE,
)

END = "end of input"


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1, column: int = 1) -> list[Token]:
    """
    Split ``text`` into tokens with 1-based positions.

    ``line`` and ``column`` give the position of the first character, so
    embedded strings can be tokenized with their location in the script.

    Raises:
        ParseError: On a character no token starts with.

    >>> [t.text for t in tokenize("x1^2 + 3")]
    ['x1', '^', '2', '+', '3']
    """
    tokens = []
    for match in TOKEN_PATTERN.finditer(text):
        kind = match.lastgroup
        value = match.group()
        if kind == "newline":
            line += 1
            column = 1
            continue
        if kind == "error":
            raise ParseError(
                messages.text(
                    messages.parse_unexpected, found=repr(value), expected="a token"
                ),
                line,
                column,
            )
        if kind not in ("space", "comment"):
            tokens.append(Token(kind, value, line, column))
        column += len(value)
    return tokens


class TokenStream:
    """Cursor over a token list with the matching helpers both parsers use."""

    def __init__(self, tokens: list[Token], end: tuple[int, int] = (1, 1)):
        self.tokens = tokens
        self.position = 0
        self.end = end

    def peek(self, offset: int = 0) -> Token | None:
        index = self.position + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def at(self, text: str, offset: int = 0) -> bool:
        token = self.peek(offset)
        return token is not None and token.text == text and token.kind != "string"

    def advance(self) -> Token:
        token = self.peek()
        if token is None:
            self.fail("more input")
        self.position += 1
        return token

    def fail(self, expected: str, token: Token | None = None):
        token = token or self.peek()
        if token is None:
            raise ParseError(
                messages.text(messages.parse_unexpected, found=END, expected=expected),
                *self.end,
            )
        raise ParseError(
            messages.text(
                messages.parse_unexpected, found=repr(token.text), expected=expected
            ),
            token.line,
            token.column,
        )

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(repr(text))
        return self.advance()

    def expect_kind(self, *kinds: str) -> Token:
        token = self.peek()
        if token is None or token.kind not in kinds:
            self.fail(" or ".join(kinds))
        return self.advance()

    def skip_commas(self) -> None:
        while self.at(","):
            self.advance()


SEMIRING_KEYWORDS = ("elements", "zero", "one", "add", "mul")
WORD = ("name", "number")


class ScriptParser:
    """Recursive-descent parser producing a WorkbenchScript."""

    def __init__(self, text: str):
        self.lines = text.splitlines()
        tokens = tokenize(text)
        self.stream = TokenStream(tokens, (len(self.lines) or 1, 1))
        self.kinds: dict[str, str] = {}
        self.declarations = []
        self.directives = []

    def parse(self) -> WorkbenchScript:
        handlers = {
            "semiring": self.semiring,
            "congruence": self.congruence,
            "equivalence": self.equivalence,
            "ideal": self.ideal,
            "system": self.system,
            "points": self.points,
            "run": self.directive,
        }
        while self.stream.peek() is not None:
            token = self.stream.peek()
            handler = handlers.get(token.text) if token.kind == "name" else None
            if handler is None:
                self.stream.fail("a declaration or 'run'")
            handler()
        return WorkbenchScript(tuple(self.declarations), tuple(self.directives))

    # names

    def declare(self, token: Token, kind: str) -> str:
        if token.text in self.kinds:
            raise ParseError(
                messages.text(messages.duplicate_name, name=token.text),
                token.line,
                token.column,
            )
        self.kinds[token.text] = kind
        return token.text

    def reference(self, kind: str) -> str:
        token = self.stream.expect_kind("name")
        if self.kinds.get(token.text) != kind:
            raise UndefinedNameError(
                messages.text(messages.undefined_name, kind=kind, name=token.text),
                token.line,
                token.column,
            )
        return token.text

    def word(self) -> str:
        return self.stream.expect_kind(*WORD).text

    def natural(self) -> int:
        return int(self.stream.expect_kind("number").text)

    # declarations

    def semiring(self) -> None:
        start = self.stream.expect("semiring")
        name = self.declare(self.stream.expect_kind("name"), "semiring")
        if self.stream.at("builtin"):
            self.stream.advance()
            kind = self.stream.expect_kind("name").text
            parameter = None
            if self.stream.peek() is not None and self.stream.peek().kind == "number":
                parameter = self.natural()
            self.stream.expect("end")
            self.declarations.append(
                SemiringDecl(name, "builtin", start.line, builtin_kind=kind, parameter=parameter)
            )
            return
        if self.stream.at(constants.NATURALS_KIND):
            self.stream.advance()
            self.stream.expect("end")
            self.declarations.append(SemiringDecl(name, constants.NATURALS_KIND, start.line))
            return
        elements: list[str] = []
        zero = one = None
        tables: dict[str, list[tuple[str, str, str]]] = {"add": [], "mul": []}
        while not self.stream.at("end"):
            keyword = self.stream.peek()
            if keyword is None or keyword.text not in SEMIRING_KEYWORDS:
                self.stream.fail("'elements', 'zero', 'one', 'add', 'mul' or 'end'")
            self.stream.advance()
            if keyword.text == "elements":
                while self.stream.peek() is not None and self.stream.peek().kind in WORD:
                    if self.stream.peek().text in SEMIRING_KEYWORDS + ("end",):
                        break
                    elements.append(self.word())
                    self.stream.skip_commas()
            elif keyword.text == "zero":
                zero = self.word()
            elif keyword.text == "one":
                one = self.word()
            else:
                left, right = self.word(), self.word()
                self.stream.expect("=")
                tables[keyword.text].append((left, right, self.word()))
        self.stream.expect("end")
        self.declarations.append(
            SemiringDecl(
                name,
                "explicit",
                start.line,
                elements=tuple(elements),
                zero=zero,
                one=one,
                add_entries=tuple(tables["add"]),
                mul_entries=tuple(tables["mul"]),
            )
        )

    def classes(self) -> tuple[tuple[str, ...], ...]:
        found = []
        while self.stream.at("{"):
            self.stream.advance()
            members = []
            while not self.stream.at("}"):
                members.append(self.word())
                self.stream.skip_commas()
            self.stream.expect("}")
            found.append(tuple(members))
        return tuple(found)

    def pair_list(self) -> tuple[tuple[str, str], ...]:
        pairs = []
        while self.stream.peek() is not None and self.stream.at("~", 1):
            left = self.word()
            self.stream.expect("~")
            pairs.append((left, self.word()))
            if not self.stream.at(","):
                break
            self.stream.advance()
        return tuple(pairs)

    def congruence(self) -> None:
        start = self.stream.expect("congruence")
        name = self.declare(self.stream.expect_kind("name"), "congruence")
        self.stream.expect("on")
        semiring = self.reference("semiring")
        if self.stream.at("pairs"):
            self.stream.advance()
            decl = CongruenceDecl(name, semiring, "pairs", start.line, pairs=self.pair_list())
        else:
            self.stream.expect("=")
            if self.stream.at("{"):
                decl = CongruenceDecl(
                    name, semiring, "partition", start.line, classes=self.classes()
                )
            elif self.stream.at("~", 1):
                decl = CongruenceDecl(name, semiring, "pairs", start.line, pairs=self.pair_list())
            elif self.stream.at("id"):
                self.stream.advance()
                decl = CongruenceDecl(name, semiring, "identity", start.line)
            elif self.stream.at("all"):
                self.stream.advance()
                decl = CongruenceDecl(name, semiring, "full", start.line)
            elif self.stream.at("mod"):
                self.stream.advance()
                decl = CongruenceDecl(
                    name, semiring, "modulus", start.line, modulus=self.natural()
                )
            else:
                self.stream.fail("a partition, a pair list, 'id', 'all' or 'mod'")
        self.declarations.append(decl)

    def equivalence(self) -> None:
        start = self.stream.expect("equivalence")
        name = self.declare(self.stream.expect_kind("name"), "equivalence")
        self.stream.expect("on")
        semiring = self.reference("semiring")
        self.stream.expect("=")
        self.declarations.append(EquivalenceDecl(name, semiring, self.classes(), start.line))

    def ideal(self) -> None:
        start = self.stream.expect("ideal")
        name = self.declare(self.stream.expect_kind("name"), "ideal")
        self.stream.expect("on")
        semiring = self.reference("semiring")
        self.stream.expect("=")
        classes = self.classes()
        if len(classes) != 1:
            self.stream.fail("exactly one '{...}' member list", self.stream.peek(-1))
        self.declarations.append(IdealDecl(name, semiring, classes[0], start.line))

    def header(self, keyword: str, kind: str) -> tuple:
        start = self.stream.expect(keyword)
        name = self.declare(self.stream.expect_kind("name"), kind)
        self.stream.expect("over")
        coeff = self.reference("semiring")
        self.stream.expect("in")
        target = self.reference("semiring")
        self.stream.expect("vars")
        num_vars = self.natural()
        self.stream.expect("=")
        return start, name, coeff, target, num_vars

    def system(self) -> None:
        _, name, coeff, target, num_vars = self.header("system", "system")
        literal = self.stream.expect_kind("string")
        # positions inside the string are reported relative to the script
        self.declarations.append(
            SystemDecl(
                name,
                coeff,
                target,
                num_vars,
                literal.text[1:-1],
                literal.line,
                literal.column + 1,
            )
        )

    def points(self) -> None:
        start, name, coeff, target, num_vars = self.header("points", "points")
        found = []
        while self.stream.at("("):
            self.stream.advance()
            coordinates = []
            while not self.stream.at(")"):
                coordinates.append(self.word())
                self.stream.skip_commas()
            self.stream.expect(")")
            found.append(tuple(coordinates))
        self.declarations.append(
            PointsDecl(name, coeff, target, num_vars, tuple(found), start.line)
        )

    def directive(self) -> None:
        start = self.stream.expect("run")
        command_token = self.stream.peek()
        if command_token is None or command_token.line != start.line:
            self.stream.fail("a command name")
        raw = self.lines[start.line - 1][start.column - 1 + len("run"):]
        raw = raw.split("#", 1)[0].split()
        command, options = raw[0], []
        # search maximal-nonprime takes its target as a second word
        words = raw[1:]
        if words and "=" not in words[0]:
            command = f"{command} {words[0]}"
            words = words[1:]
        for word in words:
            key, sep, value = word.partition("=")
            if not sep or not key:
                raise ParseError(
                    messages.text(messages.parse_unexpected, found=repr(word), expected="key=value"),
                    start.line,
                    start.column,
                )
            options.append((key, value))
        while self.stream.peek() is not None and self.stream.peek().line == start.line:
            self.stream.advance()
        self.directives.append(Directive(command, tuple(options), start.line))


def parse_script(text: str) -> WorkbenchScript:
    """
    Parse a workbench script.

    Raises:
        ParseError: On a syntax error, with line and column.
        UndefinedNameError: When a semiring is used before its declaration.
    """
    return ScriptParser(text).parse()
