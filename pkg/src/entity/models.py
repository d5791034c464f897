"""Immutable domain objects of the workbench.

Element ids are always ``0..size-1``; zero and one are explicit ids and
display labels are metadata only. Congruences and equivalences are stored
as canonical class maps (restricted growth strings), relations as pair sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Protocol, runtime_checkable

from src.conf import constants, messages
from src.core.exceptions import (
    ArityError,
    EmbeddingError,
    NotAnEquivalenceError,
    UsageError,
    WindowModeError,
)


@runtime_checkable
class FiniteSemiring(Protocol):
    """Anything the congruence algorithms can run on."""

    name: str

    @property
    def size(self) -> int: ...

    @property
    def zero(self) -> int: ...

    @property
    def one(self) -> int: ...

    def plus(self, a: int, b: int) -> int: ...

    def times(self, a: int, b: int) -> int: ...

    def label(self, element: int) -> str: ...


def canonical_class_map(keys: Iterable) -> tuple[int, ...]:
    """
    Relabel arbitrary class keys into a restricted growth string.

    >>> canonical_class_map(["b", "a", "b", "c"])
    (0, 1, 0, 2)
    """
    seen: dict = {}
    return tuple(seen.setdefault(key, len(seen)) for key in keys)


@dataclass(frozen=True)
class SemiringTable:
    """
    A finite commutative semiring given by its operation tables.

    Attributes:
        size: Number of elements; the carrier is ``range(size)``.
        add: ``size x size`` addition table.
        mul: ``size x size`` multiplication table.
        zero: Id of the additive identity.
        one: Id of the multiplicative identity.
        name: Display name.
        labels: Display label per element id.
    """

    size: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    name: str = "A"
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "add", tuple(tuple(row) for row in self.add))
        object.__setattr__(self, "mul", tuple(tuple(row) for row in self.mul))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(e) for e in range(self.size)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def elements(self) -> range:
        return range(self.size)

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def label(self, element: int) -> str:
        return self.labels[element]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {label: element for element, label in enumerate(self.labels)}

    def find_element(self, label: str) -> int | None:
        """Return the id carrying ``label``, or None."""
        return self._label_index.get(label)


class ElementPair(NamedTuple):
    left: int
    right: int


@dataclass(frozen=True)
class Ideal:
    owner: SemiringTable
    members: frozenset[int]

    def __contains__(self, element: int) -> bool:
        return element in self.members

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True)
class PairRelation:
    """A binary relation on a finite semiring."""

    owner: FiniteSemiring
    pairs: frozenset[ElementPair]

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", frozenset(ElementPair(*pair) for pair in self.pairs)
        )

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[ElementPair]:
        return iter(sorted(self.pairs))


@dataclass(frozen=True)
class Equivalence:
    """
    An equivalence relation stored as a canonical class map.

    ``class_of[e]`` is the class index of element ``e``; classes are numbered
    in order of their least element, so equal partitions compare equal.
    """

    owner: FiniteSemiring
    class_of: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "class_of", canonical_class_map(self.class_of))

    @classmethod
    def from_keys(cls, owner: FiniteSemiring, keys: Iterable):
        return cls(owner, tuple(keys))

    @classmethod
    def from_classes(cls, owner: FiniteSemiring, classes: Iterable[Iterable[int]]):
        """Build from explicit classes; elements not listed become singletons."""
        class_of = list(range(-owner.size, 0))
        for index, members in enumerate(classes):
            for element in members:
                class_of[element] = index
        return cls(owner, tuple(class_of))

    @classmethod
    def identity(cls, owner: FiniteSemiring):
        return cls(owner, tuple(range(owner.size)))

    @classmethod
    def full(cls, owner: FiniteSemiring):
        return cls(owner, (0,) * owner.size)

    @classmethod
    def from_pairs(cls, owner: FiniteSemiring, pairs: Iterable[tuple[int, int]]):
        """
        Build from a pair set that must already be an equivalence.

        Raises:
            NotAnEquivalenceError: If the pairs are not reflexive, symmetric
                and transitive.
        """
        pairs = frozenset(ElementPair(*pair) for pair in pairs)
        parent = list(range(owner.size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        result = cls(owner, tuple(find(e) for e in range(owner.size)))
        if result.pairs != pairs:
            raise NotAnEquivalenceError(
                messages.text(messages.not_an_equivalence, semiring=owner.name)
            )
        return result

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        grouped: dict[int, list[int]] = {}
        for element, index in enumerate(self.class_of):
            grouped.setdefault(index, []).append(element)
        return tuple(tuple(grouped[index]) for index in sorted(grouped))

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def signature(self) -> tuple[int, ...]:
        return self.class_of

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    @cached_property
    def pairs(self) -> frozenset[ElementPair]:
        return frozenset(
            ElementPair(a, b)
            for members in self.classes
            for a in members
            for b in members
        )

    def refines(self, other: Equivalence) -> bool:
        """True when this relation is contained in ``other``."""
        return all(
            other.class_of[members[0]] == other.class_of[e]
            for members in self.classes
            for e in members
        )

    def same_partition(self, other: Equivalence) -> bool:
        return self.class_of == other.class_of

    @property
    def is_identity(self) -> bool:
        return self.class_count == self.owner.size

    @property
    def is_full(self) -> bool:
        return self.class_count == 1

    def representative(self, element: int) -> int:
        """Least element of the class of ``element``."""
        return self.classes[self.class_of[element]][0]


@dataclass(frozen=True)
class Congruence(Equivalence):
    """An equivalence compatible with + and *; see services.congruence."""

    @property
    def proper(self) -> bool:
        return not self.related(self.owner.one, self.owner.zero)


class NilRelations(NamedTuple):
    """R_nil, its saturation rho_nil and the congruence N_c it generates."""

    r_nil: PairRelation
    rho_nil: Congruence
    n_c: Congruence

    @property
    def reduced(self) -> bool:
        return all(a == b for a, b in self.r_nil.pairs)

    @property
    def strongly_reduced(self) -> bool:
        return self.rho_nil.is_identity


class ChainLink(NamedTuple):
    source: int
    target: int
    forward: bool


@dataclass(frozen=True)
class WitnessChain:
    """
    Translation-saturated steps proving membership in a generated congruence.

    ``links`` is empty exactly when the endpoints coincide.
    """

    endpoints: ElementPair
    links: tuple[ChainLink, ...] = ()

    @property
    def steps(self) -> tuple[int, ...]:
        return (self.endpoints.left,) + tuple(link.target for link in self.links)


Exponent = tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    """
    Sparse polynomial with coefficients in a coefficient semiring.

    ``terms`` holds ``(exponent, coefficient)`` pairs without zero
    coefficients, sorted in graded lexicographic order (highest first).
    """

    num_vars: int
    terms: tuple[tuple[Exponent, int], ...] = ()

    def __post_init__(self):
        for exponent, _ in self.terms:
            if len(exponent) != self.num_vars:
                raise ArityError(
                    messages.text(
                        messages.arity_mismatch,
                        expected=self.num_vars,
                        actual=len(exponent),
                    )
                )
        ordered = sorted(
            ((tuple(e), c) for e, c in self.terms),
            key=lambda term: (sum(term[0]), term[0]),
            reverse=True,
        )
        object.__setattr__(self, "terms", tuple(ordered))

    @classmethod
    def from_mapping(cls, num_vars: int, mapping: dict[Exponent, int], zero: int):
        return cls(
            num_vars,
            tuple((e, c) for e, c in mapping.items() if c != zero),
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def as_mapping(self) -> dict[Exponent, int]:
        return dict(self.terms)

    def coefficient(self, exponent: Exponent, zero: int) -> int:
        return self.as_mapping().get(tuple(exponent), zero)

    def render(self, ring) -> str:
        """Format with the element labels of the coefficient ``ring``."""
        if self.is_zero:
            return ring.label(ring.zero)
        pieces = []
        for exponent, coefficient in self.terms:
            factors = []
            for index, power in enumerate(exponent, start=1):
                if power == 0:
                    continue
                name = constants.VARIABLE_PREFIX + (str(index) if self.num_vars > 1 else "")
                factors.append(name if power == 1 else f"{name}^{power}")
            if coefficient != ring.one or not factors:
                factors.insert(0, ring.label(coefficient))
            pieces.append("*".join(factors))
        return " + ".join(pieces)


@dataclass(frozen=True)
class EmbeddedSemiring:
    """
    Coefficient semiring ``coeff`` embedded into ``target``.

    Raises:
        EmbeddingError: If ``embedding`` is not an injective map preserving
            0, 1, + and *.
    """

    coeff: SemiringTable
    target: SemiringTable
    embedding: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "embedding", tuple(self.embedding))
        reason = self._violation()
        if reason:
            raise EmbeddingError(
                messages.text(
                    messages.embedding_invalid,
                    coeff=self.coeff.name,
                    target=self.target.name,
                    reason=reason,
                )
            )

    def _violation(self) -> str | None:
        A, B, phi = self.coeff, self.target, self.embedding
        if len(phi) != A.size or any(not 0 <= v < B.size for v in phi):
            return "map is not defined on every element"
        if len(set(phi)) != len(phi):
            return "map is not injective"
        if phi[A.zero] != B.zero or phi[A.one] != B.one:
            return "0 or 1 is not preserved"
        for a, b in product(A.elements, repeat=2):
            if phi[A.plus(a, b)] != B.plus(phi[a], phi[b]):
                return f"{A.label(a)} + {A.label(b)} is not preserved"
            if phi[A.times(a, b)] != B.times(phi[a], phi[b]):
                return f"{A.label(a)} * {A.label(b)} is not preserved"
        return None

    def image(self, coefficient: int) -> int:
        return self.embedding[coefficient]

    @property
    def is_window(self) -> bool:
        return False


@dataclass(frozen=True)
class NaturalsWindow:
    """
    The naturals with exact arithmetic, observed through the window 0..bound.

    It doubles as its own evaluation context: coefficients and values are
    plain integers.
    """

    bound: int
    name: str = "N"

    zero = 0
    one = 1

    @property
    def size(self) -> int:
        return self.bound + 1

    @property
    def coeff(self) -> NaturalsWindow:
        return self

    @property
    def target(self) -> NaturalsWindow:
        return self

    @property
    def is_window(self) -> bool:
        return True

    @staticmethod
    def plus(a: int, b: int) -> int:
        return a + b

    @staticmethod
    def times(a: int, b: int) -> int:
        return a * b

    @staticmethod
    def label(element: int) -> str:
        return str(element)

    @staticmethod
    def find_element(label: str) -> int | None:
        return int(label) if label.isdigit() else None

    @staticmethod
    def image(coefficient: int) -> int:
        return coefficient

    def points(self, num_vars: int) -> Iterator[tuple[int, ...]]:
        return product(range(self.bound + 1), repeat=num_vars)


@dataclass(frozen=True)
class ModularCongruence:
    """Congruence modulo ``modulus`` on the naturals."""

    owner: NaturalsWindow
    modulus: int

    def class_of(self, value: int) -> int:
        return value % self.modulus

    def related(self, a: int, b: int) -> bool:
        return a % self.modulus == b % self.modulus

    @property
    def proper(self) -> bool:
        return self.modulus != 1


EvaluationContext = EmbeddedSemiring | NaturalsWindow


@dataclass(frozen=True)
class PolyFunction:
    """A function B^n -> B tabulated over the point order of its semiring."""

    table: tuple[int, ...]
    witness: Polynomial


@dataclass(frozen=True, eq=False)
class FunctionSemiring:
    """
    The finite semiring of polynomial functions B^n -> B with coefficients
    from the embedded image of A.

    Element ids index ``functions``, which is sorted by table. ``monomials``
    are additive generators, ``generators`` (constants and projections) are
    multiplicative ones.
    """

    ctx: EmbeddedSemiring
    num_vars: int
    points: tuple[tuple[int, ...], ...]
    functions: tuple[PolyFunction, ...]
    monomials: tuple[int, ...]
    generators: tuple[int, ...]
    name: str = "F"

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {f.table: i for i, f in enumerate(self.functions)}

    @property
    def size(self) -> int:
        return len(self.functions)

    @property
    def zero(self) -> int:
        return self._index[(self.ctx.target.zero,) * len(self.points)]

    @property
    def one(self) -> int:
        return self._index[(self.ctx.target.one,) * len(self.points)]

    def index_of(self, table: tuple[int, ...]) -> int | None:
        return self._index.get(tuple(table))

    def table(self, element: int) -> tuple[int, ...]:
        return self.functions[element].table

    def plus(self, a: int, b: int) -> int:
        add = self.ctx.target.plus
        return self._index[tuple(map(add, self.table(a), self.table(b)))]

    def times(self, a: int, b: int) -> int:
        mul = self.ctx.target.times
        return self._index[tuple(map(mul, self.table(a), self.table(b)))]

    def label(self, element: int) -> str:
        return self.functions[element].witness.render(self.ctx.coeff)


@dataclass(frozen=True)
class PairSystem:
    """A non-empty system of polynomial rho-equations f = g."""

    name: str
    pairs: tuple[tuple[Polynomial, Polynomial], ...]
    num_vars: int
    ctx: EvaluationContext

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))
        if not self.pairs:
            raise UsageError(messages.text(messages.empty_system))
        for pair in self.pairs:
            for polynomial in pair:
                if polynomial.num_vars != self.num_vars:
                    raise ArityError(
                        messages.text(
                            messages.arity_mismatch,
                            expected=self.num_vars,
                            actual=polynomial.num_vars,
                        )
                    )


@dataclass(frozen=True)
class Variety:
    """A point set in B^n; ``window`` is set when B is the naturals window."""

    points: frozenset[tuple[int, ...]]
    num_vars: int
    window: int | None = None

    def sorted_points(self) -> list[tuple[int, ...]]:
        return sorted(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in self.points

    def __len__(self) -> int:
        return len(self.points)

    def require_finite(self, operation: str) -> None:
        if self.window is not None:
            raise WindowModeError(
                messages.text(
                    messages.window_complement, window=self.window, operation=operation
                )
            )

    def complement(self, ambient: Iterable[tuple[int, ...]]) -> Variety:
        self.require_finite("complement")
        return Variety(
            frozenset(tuple(p) for p in ambient) - self.points, self.num_vars
        )


@dataclass(frozen=True, eq=False)
class VanishingCongruence:
    """
    rho_B(Y) materialized on the function semiring.

    Two functions are related exactly when their rho-class vectors over
    ``points`` coincide.
    """

    functions: FunctionSemiring
    congruence: Congruence
    points: tuple[tuple[int, ...], ...]
    rho: Congruence

    @cached_property
    def _point_positions(self) -> tuple[int, ...]:
        position = {p: i for i, p in enumerate(self.functions.points)}
        return tuple(position[p] for p in self.points)

    def key(self, table: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self.rho.class_of[table[i]] for i in self._point_positions)

    def holds_on_tables(self, left: tuple[int, ...], right: tuple[int, ...]) -> bool:
        return self.key(left) == self.key(right)

    def holds(self, a: int, b: int) -> bool:
        return self.congruence.related(a, b)


@dataclass(frozen=True)
class ZariskiTopology:
    """
    Closed sets of B^n as bitmasks over ``points``; bit i stands for
    ``points[i]``.
    """

    points: tuple[tuple[int, ...], ...]
    num_vars: int
    closed: frozenset[int]

    @cached_property
    def _position(self) -> dict[tuple[int, ...], int]:
        return {p: i for i, p in enumerate(self.points)}

    @property
    def everything(self) -> int:
        return (1 << len(self.points)) - 1

    def mask_of(self, points: Iterable[tuple[int, ...]]) -> int:
        mask = 0
        for point in points:
            mask |= 1 << self._position[tuple(point)]
        return mask

    def variety(self, mask: int) -> Variety:
        return Variety(
            frozenset(p for i, p in enumerate(self.points) if mask >> i & 1),
            self.num_vars,
        )

    def is_closed(self, Y: Variety) -> bool:
        return self.mask_of(Y.points) in self.closed

    def smallest_closed(self, Y: Variety) -> Variety:
        """Intersection of all closed sets containing Y."""
        target = self.mask_of(Y.points)
        result = self.everything
        for mask in self.closed:
            if mask & target == target:
                result &= mask
        return self.variety(result)

    def members(self) -> list[Variety]:
        return [self.variety(mask) for mask in sorted(self.closed)]


@dataclass(frozen=True)
class SqrtOverRelation:
    """
    The radical relation sqrt(sigma/rho) on a degree-capped list of
    polynomials.

    Polynomials sharing a coefficient class vector share an entry of
    ``kernels``: the classes of sqrt(sigma) their functions fall into. Two
    polynomials are related when their kernels meet; ``component_of``
    numbers the blocks of the equivalence this relation generates and
    ``functions`` holds the function id each polynomial induces. ``window``
    is set for relations computed over the naturals.
    """

    polynomials: tuple[Polynomial, ...]
    functions: tuple[int, ...]
    vector_of: tuple[int, ...]
    kernels: tuple[frozenset[int], ...]
    component_of: tuple[int, ...]
    degree_cap: int
    informative: bool = True
    window: int | None = None

    def related(self, i: int, j: int) -> bool:
        return bool(self.kernels[self.vector_of[i]] & self.kernels[self.vector_of[j]])

    def generated_related(self, i: int, j: int) -> bool:
        return self.component_of[self.vector_of[i]] == self.component_of[self.vector_of[j]]


@dataclass(frozen=True)
class HomSet:
    """
    Algebra homomorphisms S/T^c -> B/rho, each given by the images of the
    variables. ``quotient`` is None when rho is improper.
    """

    quotient: SemiringTable | None
    assignments: frozenset[tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.assignments)


# Script syntax tree


@dataclass(frozen=True)
class SemiringDecl:
    name: str
    kind: str
    line: int
    builtin_kind: str | None = None
    parameter: int | None = None
    elements: tuple[str, ...] = ()
    zero: str | None = None
    one: str | None = None
    add_entries: tuple[tuple[str, str, str], ...] = ()
    mul_entries: tuple[tuple[str, str, str], ...] = ()


@dataclass(frozen=True)
class CongruenceDecl:
    name: str
    semiring: str
    form: str
    line: int
    classes: tuple[tuple[str, ...], ...] = ()
    pairs: tuple[tuple[str, str], ...] = ()
    modulus: int | None = None


@dataclass(frozen=True)
class EquivalenceDecl:
    name: str
    semiring: str
    classes: tuple[tuple[str, ...], ...]
    line: int


@dataclass(frozen=True)
class IdealDecl:
    name: str
    semiring: str
    members: tuple[str, ...]
    line: int


@dataclass(frozen=True)
class SystemDecl:
    name: str
    coeff: str
    target: str
    num_vars: int
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class PointsDecl:
    name: str
    coeff: str
    target: str
    num_vars: int
    points: tuple[tuple[str, ...], ...]
    line: int


@dataclass(frozen=True)
class Directive:
    command: str
    options: tuple[tuple[str, str], ...]
    line: int


Declaration = (
    SemiringDecl | CongruenceDecl | EquivalenceDecl | IdealDecl | SystemDecl | PointsDecl
)


@dataclass(frozen=True)
class WorkbenchScript:
    """Parsed script: declarations in source order plus run directives."""

    declarations: tuple[Declaration, ...] = ()
    directives: tuple[Directive, ...] = ()

    def names(self) -> list[str]:
        return [d.name for d in self.declarations]
