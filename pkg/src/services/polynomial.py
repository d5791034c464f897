"""Sparse polynomials over a coefficient semiring, their evaluation in an
extension and the expression parser for systems of pairs."""

from itertools import product
from typing import Callable

from src.conf import constants, messages
from src.core.exceptions import ArityError, BoundExceededError, ParameterError, ParseError
from src.core.script_parser import TokenStream, tokenize
from src.entity.models import FiniteSemiring, Polynomial
from src.services.twisted import twisted_pow

PolynomialPair = tuple[Polynomial, Polynomial]


def _same_arity(f: Polynomial, g: Polynomial) -> None:
    if f.num_vars != g.num_vars:
        raise ArityError(
            messages.text(messages.arity_mismatch, expected=f.num_vars, actual=g.num_vars)
        )


def constant(ring: FiniteSemiring, num_vars: int, coefficient: int) -> Polynomial:
    return Polynomial.from_mapping(num_vars, {(0,) * num_vars: coefficient}, ring.zero)


def variable(ring: FiniteSemiring, num_vars: int, index: int) -> Polynomial:
    """The coordinate x_index, 1-based."""
    if not 1 <= index <= num_vars:
        raise ArityError(messages.text(messages.arity_mismatch, expected=num_vars, actual=index))
    exponent = tuple(1 if i == index - 1 else 0 for i in range(num_vars))
    return Polynomial(num_vars, ((exponent, ring.one),))


def poly_add(ring: FiniteSemiring, f: Polynomial, g: Polynomial) -> Polynomial:
    _same_arity(f, g)
    total = f.as_mapping()
    for exponent, coefficient in g.terms:
        total[exponent] = ring.plus(total.get(exponent, ring.zero), coefficient)
    return Polynomial.from_mapping(f.num_vars, total, ring.zero)


def poly_mul(ring: FiniteSemiring, f: Polynomial, g: Polynomial) -> Polynomial:
    _same_arity(f, g)
    product: dict = {}
    for e1, c1 in f.terms:
        for e2, c2 in g.terms:
            exponent = tuple(a + b for a, b in zip(e1, e2))
            product[exponent] = ring.plus(product.get(exponent, ring.zero), ring.times(c1, c2))
    return Polynomial.from_mapping(f.num_vars, product, ring.zero)


def poly_pow(ring: FiniteSemiring, f: Polynomial, k: int) -> Polynomial:
    result = constant(ring, f.num_vars, ring.one)
    for _ in range(k):
        result = poly_mul(ring, result, f)
    return result


def poly_star(ring: FiniteSemiring, p: PolynomialPair, q: PolynomialPair) -> PolynomialPair:
    """Twisted product of polynomial pairs."""
    (f1, g1), (f2, g2) = p, q
    return (
        poly_add(ring, poly_mul(ring, f1, f2), poly_mul(ring, g1, g2)),
        poly_add(ring, poly_mul(ring, f1, g2), poly_mul(ring, g1, f2)),
    )


def twisted_pow_poly(ring: FiniteSemiring, pair: PolynomialPair, m: int) -> PolynomialPair:
    if m < 1:
        raise ParameterError(messages.text(messages.parameter_range, name="m", minimum=1, value=m))
    result = pair
    for _ in range(m - 1):
        result = poly_star(ring, result, pair)
    return result


def evaluate_with(
    f: Polynomial,
    point: tuple[int, ...],
    target: FiniteSemiring,
    image: Callable[[int], int],
) -> int:
    """Evaluate in ``target`` with coefficients sent through ``image``."""
    if len(point) != f.num_vars:
        raise ArityError(
            messages.text(messages.arity_mismatch, expected=f.num_vars, actual=len(point))
        )
    total = target.zero
    for exponent, coefficient in f.terms:
        term = image(coefficient)
        for value, power in zip(point, exponent):
            for _ in range(power):
                term = target.times(term, value)
        total = target.plus(total, term)
    return total


def evaluate(f: Polynomial, point: tuple[int, ...], ctx) -> int:
    """
    f(P) in the target semiring of ``ctx``.

    Raises:
        ArityError: If the point has the wrong number of coordinates.
    """
    return evaluate_with(f, tuple(point), ctx.target, ctx.image)


def evaluation_table(f: Polynomial, points, ctx) -> tuple[int, ...]:
    return tuple(evaluate(f, point, ctx) for point in points)


def powers_commute(ctx, pair: PolynomialPair, m: int, point: tuple[int, ...]) -> bool:
    """(f, g)^m evaluated at P equals (f(P), g(P))^m."""
    powered = twisted_pow_poly(ctx.coeff, pair, m)
    left = (evaluate(powered[0], point, ctx), evaluate(powered[1], point, ctx))
    values = (evaluate(pair[0], point, ctx), evaluate(pair[1], point, ctx))
    return left == tuple(twisted_pow(ctx.target, values, m))


def coeffwise_congruent(f: Polynomial, g: Polynomial, theta, zero: int = 0) -> bool:
    """
    True iff every pair of corresponding coefficients lies in ``theta``;
    absent coefficients count as ``zero``.
    """
    _same_arity(f, g)
    left, right = f.as_mapping(), g.as_mapping()
    return all(
        theta.related(left.get(exponent, zero), right.get(exponent, zero))
        for exponent in set(left) | set(right)
    )


class PolynomialParser:
    """
    Recursive descent over::

        expr   := term ('+' term)*
        term   := factor ('*' factor)*
        factor := atom ('^' NUMBER)?
        atom   := element | 'x' NUMBER | 'x' | '(' expr ')'
    """

    def __init__(self, stream: TokenStream, ring, num_vars: int):
        self.stream = stream
        self.ring = ring
        self.num_vars = num_vars

    def expr(self) -> Polynomial:
        result = self.term()
        while self.stream.at("+"):
            self.stream.advance()
            result = poly_add(self.ring, result, self.term())
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.stream.at("*"):
            self.stream.advance()
            result = poly_mul(self.ring, result, self.factor())
        return result

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.stream.at("^"):
            self.stream.advance()
            exponent = int(self.stream.expect_kind("number").text)
            return poly_pow(self.ring, base, exponent)
        return base

    def atom(self) -> Polynomial:
        token = self.stream.peek()
        if token is None:
            self.stream.fail("an element, a variable or '('")
        if token.text == "(":
            self.stream.advance()
            inner = self.expr()
            self.stream.expect(")")
            return inner
        if token.kind == "name" and token.text.startswith(constants.VARIABLE_PREFIX):
            suffix = token.text[len(constants.VARIABLE_PREFIX):]
            if suffix == "" or suffix.isdigit():
                self.stream.advance()
                index = int(suffix) if suffix else 1
                if not 1 <= index <= self.num_vars:
                    raise ArityError(
                        messages.text(
                            messages.arity_mismatch, expected=self.num_vars, actual=index
                        ),
                        token.line,
                        token.column,
                    )
                return variable(self.ring, self.num_vars, index)
        if token.kind in ("name", "number"):
            element = self.ring.find_element(token.text)
            if element is None:
                raise ParseError(
                    messages.text(
                        messages.unknown_element, label=token.text, semiring=self.ring.name
                    ),
                    token.line,
                    token.column,
                )
            self.stream.advance()
            return constant(self.ring, self.num_vars, element)
        self.stream.fail("an element, a variable or '('")


def _stream(text: str, line: int, column: int) -> TokenStream:
    return TokenStream(tokenize(text, line, column), (line, column + len(text)))


def parse_polynomial(
    text: str, ring, num_vars: int, line: int = 1, column: int = 1
) -> Polynomial:
    """
    Parse one polynomial expression over ``ring``.

    Raises:
        ParseError: With the location of the offending token.
        ArityError: On a variable index above ``num_vars``.
    """
    stream = _stream(text, line, column)
    result = PolynomialParser(stream, ring, num_vars).expr()
    if stream.peek() is not None:
        stream.fail("'+', '*' or end of expression")
    return result


def parse_system(
    text: str, ring, num_vars: int, line: int = 1, column: int = 1
) -> list[PolynomialPair]:
    """Parse ``f = g; f' = g'; ...``; empty entries are skipped."""
    stream = _stream(text, line, column)
    parser = PolynomialParser(stream, ring, num_vars)
    pairs = []
    while stream.peek() is not None:
        if stream.at(";"):
            stream.advance()
            continue
        left = parser.expr()
        stream.expect("=")
        pairs.append((left, parser.expr()))
        if stream.peek() is not None:
            stream.expect(";")
    return pairs


def monomials_up_to(num_vars: int, cap: int) -> list[tuple[int, ...]]:
    """
    Exponent vectors of total degree <= cap, lowest degree first.

    >>> monomials_up_to(2, 1)
    [(0, 0), (0, 1), (1, 0)]
    """
    found = [e for e in product(range(cap + 1), repeat=num_vars) if sum(e) <= cap]
    return sorted(found, key=lambda e: (sum(e), e))


def check_enumeration(total: int, limit: int) -> None:
    """
    Raises:
        BoundExceededError: If a syntactic enumeration would exceed ``limit``.
    """
    if total > limit:
        raise BoundExceededError(
            messages.text(
                messages.bound_exceeded,
                what="syntactic polynomial count",
                value=total,
                bound=limit,
            )
        )
