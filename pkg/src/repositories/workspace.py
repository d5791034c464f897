import logging

from src.conf import constants, messages
from src.conf.config import settings
from src.core.exceptions import (
    ArityError,
    EmbeddingError,
    NotAnIdealError,
    ParseError,
    UsageError,
)
from src.core.script_parser import parse_script
from src.entity.models import (
    CongruenceDecl,
    Congruence,
    EmbeddedSemiring,
    Equivalence,
    EquivalenceDecl,
    Ideal,
    IdealDecl,
    ModularCongruence,
    NaturalsWindow,
    PairSystem,
    PointsDecl,
    SemiringDecl,
    SemiringTable,
    SystemDecl,
    Variety,
    WorkbenchScript,
)
from src.repositories.base import BaseRepository
from src.services.congruence import as_congruence, generated_congruence
from src.services.polynomial import parse_system
from src.services.relations import equivalence_closure, relation
from src.services.semiring import builtin, ideal_check

logger = logging.getLogger("workbench")


class WorkspaceRepository:
    """
    Live objects of a parsed script, keyed by declared name.

    Declarations are resolved in source order, so a declaration may refer
    to any semiring declared above it.
    """

    def __init__(self, script: WorkbenchScript, window: int | None = None):
        """
        Resolve every declaration of ``script``.

        Args:
            script: The parsed script.
            window: Bound N for naturals semirings; defaults to
                ``settings.WINDOW``.

        Raises:
            ParseError: On unknown element labels or incomplete tables.
            NotACongruenceError: On an incompatible partition literal.
            NotAnIdealError: On a member list that is not an ideal.
            EmbeddingError: When a coefficient semiring does not embed.
        """
        self.script = script
        self.window = settings.WINDOW if window is None else window
        self.semirings: BaseRepository[SemiringTable | NaturalsWindow] = BaseRepository("semiring")
        self.congruences: BaseRepository[Congruence | ModularCongruence] = BaseRepository(
            "congruence"
        )
        self.literals: BaseRepository[tuple[tuple[int, int], ...]] = BaseRepository("pair list")
        self.equivalences: BaseRepository[Equivalence] = BaseRepository("equivalence")
        self.ideals: BaseRepository[Ideal] = BaseRepository("ideal")
        self.systems: BaseRepository[PairSystem] = BaseRepository("system")
        self.points: BaseRepository[Variety] = BaseRepository("points")
        self._contexts: dict[tuple[str, str], EmbeddedSemiring | NaturalsWindow] = {}
        self.point_contexts: dict[str, EmbeddedSemiring | NaturalsWindow] = {}
        handlers = {
            SemiringDecl: self._semiring,
            CongruenceDecl: self._congruence,
            EquivalenceDecl: self._equivalence,
            IdealDecl: self._ideal,
            SystemDecl: self._system,
            PointsDecl: self._points,
        }
        for decl in script.declarations:
            handlers[type(decl)](decl)

    @classmethod
    def from_text(cls, text: str, window: int | None = None) -> "WorkspaceRepository":
        return cls(parse_script(text), window)

    # elements

    @staticmethod
    def element(A, label: str, line: int) -> int:
        element = A.find_element(label)
        if element is None:
            raise ParseError(
                messages.text(messages.unknown_element, label=label, semiring=A.name), line, 1
            )
        return element

    def elements(self, A, labels, line: int) -> list[int]:
        return [self.element(A, label, line) for label in labels]

    def _classes(self, A, classes, line: int) -> list[list[int]]:
        seen: set[int] = set()
        resolved = []
        for members in classes:
            ids = self.elements(A, members, line)
            for label, element in zip(members, ids):
                if element in seen:
                    raise ParseError(
                        messages.text(messages.partition_duplicate, label=label), line, 1
                    )
                seen.add(element)
            resolved.append(ids)
        return resolved

    # declarations

    def _semiring(self, decl: SemiringDecl) -> None:
        if decl.kind == "builtin":
            table = builtin(decl.builtin_kind, decl.parameter, name=decl.name)
        elif decl.kind == constants.NATURALS_KIND:
            table = NaturalsWindow(self.window, decl.name)
        else:
            table = self._explicit_table(decl)
        self.semirings.create(decl.name, table)

    def _explicit_table(self, decl: SemiringDecl) -> SemiringTable:
        labels = list(decl.elements)
        index = {label: i for i, label in enumerate(labels)}

        def lookup(label: str) -> int:
            if label not in index:
                raise ParseError(
                    messages.text(messages.unknown_element, label=label, semiring=decl.name),
                    decl.line,
                    1,
                )
            return index[label]

        tables = {}
        for keyword, entries in (("add", decl.add_entries), ("mul", decl.mul_entries)):
            given = {}
            for a, b, c in entries:
                key, value = (lookup(a), lookup(b)), lookup(c)
                if given.setdefault(key, value) != value:
                    raise ParseError(
                        messages.text(
                            messages.table_conflict,
                            table=keyword,
                            semiring=decl.name,
                            left=a,
                            right=b,
                        ),
                        decl.line,
                        1,
                    )
            rows = []
            for a in range(len(labels)):
                row = []
                for b in range(len(labels)):
                    value = given.get((a, b))
                    if value is None:
                        raise ParseError(
                            messages.text(
                                messages.table_incomplete,
                                table=keyword,
                                semiring=decl.name,
                                left=labels[a],
                                right=labels[b],
                            ),
                            decl.line,
                            1,
                        )
                    row.append(value)
                rows.append(row)
            tables[keyword] = rows
        for which, label in (("zero", decl.zero), ("one", decl.one)):
            if label is None:
                raise ParseError(
                    messages.text(messages.identity_missing, semiring=decl.name, which=which),
                    decl.line,
                    1,
                )
        return SemiringTable(
            len(labels),
            tables["add"],
            tables["mul"],
            lookup(decl.zero),
            lookup(decl.one),
            name=decl.name,
            labels=tuple(labels),
        )

    def _congruence(self, decl: CongruenceDecl) -> None:
        A = self.semirings.require(decl.semiring)
        if isinstance(A, NaturalsWindow):
            if decl.form != "modulus" or not decl.modulus:
                raise UsageError(messages.text(messages.naturals_literal))
            self.congruences.create(decl.name, ModularCongruence(A, decl.modulus))
            return
        if decl.form == "modulus":
            raise UsageError(messages.text(messages.modulus_outside_naturals, semiring=A.name))
        if decl.form == "identity":
            rho = Congruence.identity(A)
        elif decl.form == "full":
            rho = Congruence.full(A)
        elif decl.form == "partition":
            classes = self._classes(A, decl.classes, decl.line)
            rho = as_congruence(Equivalence.from_classes(A, classes))
        else:
            pairs = tuple(
                (self.element(A, a, decl.line), self.element(A, b, decl.line))
                for a, b in decl.pairs
            )
            self.literals.create(decl.name, pairs)
            rho = generated_congruence(A, pairs)
            given = len(equivalence_closure(relation(A, pairs)).pairs)
            if len(rho.pairs) > given:
                logger.info(
                    messages.text(
                        messages.generation_enlarged,
                        name=decl.name,
                        given=given,
                        total=len(rho.pairs),
                    )
                )
        self.congruences.create(decl.name, rho)

    def _equivalence(self, decl: EquivalenceDecl) -> None:
        A = self.semirings.require(decl.semiring)
        classes = self._classes(A, decl.classes, decl.line)
        self.equivalences.create(decl.name, Equivalence.from_classes(A, classes))

    def _ideal(self, decl: IdealDecl) -> None:
        A = self.semirings.require(decl.semiring)
        members = frozenset(self.elements(A, decl.members, decl.line))
        if not ideal_check(A, members):
            raise NotAnIdealError(
                messages.text(
                    messages.not_an_ideal,
                    members="{" + " ".join(decl.members) + "}",
                    semiring=A.name,
                )
            )
        self.ideals.create(decl.name, Ideal(A, members))

    def context(self, coeff_name: str, target_name: str):
        """
        The evaluation context of coefficients ``coeff_name`` in
        ``target_name``; elements are matched by label.

        Raises:
            EmbeddingError: If some label is missing in the target or the
                label map is not a homomorphism.
        """
        key = (coeff_name, target_name)
        if key in self._contexts:
            return self._contexts[key]
        A = self.semirings.require(coeff_name)
        B = self.semirings.require(target_name)
        if isinstance(A, NaturalsWindow) or isinstance(B, NaturalsWindow):
            if A is not B:
                raise EmbeddingError(
                    messages.text(
                        messages.embedding_invalid,
                        coeff=A.name,
                        target=B.name,
                        reason="the naturals embed only into themselves",
                    )
                )
            ctx = A
        else:
            embedding = []
            for a in A.elements:
                image = B.find_element(A.label(a))
                if image is None:
                    raise EmbeddingError(
                        messages.text(
                            messages.embedding_invalid,
                            coeff=A.name,
                            target=B.name,
                            reason=f"no element labelled {A.label(a)}",
                        )
                    )
                embedding.append(image)
            ctx = EmbeddedSemiring(A, B, tuple(embedding))
        self._contexts[key] = ctx
        return ctx

    def _system(self, decl: SystemDecl) -> None:
        ctx = self.context(decl.coeff, decl.target)
        pairs = parse_system(decl.text, ctx.coeff, decl.num_vars, decl.line, decl.column)
        self.systems.create(decl.name, PairSystem(decl.name, pairs, decl.num_vars, ctx))

    def _points(self, decl: PointsDecl) -> None:
        ctx = self.context(decl.coeff, decl.target)
        found = set()
        for coordinates in decl.points:
            if len(coordinates) != decl.num_vars:
                raise ArityError(
                    messages.text(
                        messages.arity_mismatch, expected=decl.num_vars, actual=len(coordinates)
                    ),
                    decl.line,
                    1,
                )
            found.add(tuple(self.elements(ctx.target, coordinates, decl.line)))
        self.point_contexts[decl.name] = ctx
        window = ctx.bound if isinstance(ctx, NaturalsWindow) else None
        self.points.create(decl.name, Variety(frozenset(found), decl.num_vars, window))
