"""
Named workbench commands over a resolved script.

The CLI, script ``run`` directives and the HTTP routes all go through
``WorkbenchService.run``; every command returns its stdout lines.
"""

import logging

from pydantic import ValidationError

from src.conf import constants, messages
from src.conf.config import settings
from src.core.exceptions import StructureError, UsageError
from src.core.formatting import (
    key_values,
    render_members,
    render_pairs,
    render_partition,
    render_points,
    render_semiring,
    render_table,
)
from src.entity.models import (
    CongruenceDecl,
    EquivalenceDecl,
    IdealDecl,
    ModularCongruence,
    NaturalsWindow,
    SemiringDecl,
    SystemDecl,
)
from src.repositories.workspace import WorkspaceRepository
from src.schemas.commands import CommandOptions
from src.schemas.reports import (
    AxiomReport,
    CongruenceClassification,
    HomCount,
    NullstellensatzReport,
    SemiringFlags,
)
from src.services import congruence as cong
from src.services.geometry import (
    closure,
    require_finite,
    star_union,
    vanishing,
    vanishing_contains,
    zero_set,
)
from src.services.hom import hom_count
from src.services.nullstellensatz import nullstellensatz_check, sqrt_over
from src.services.polynomial import parse_system
from src.services.search import search_maximal_nonprime
from src.services.semiring import (
    classify_semiring,
    enumerate_ideals,
    is_prime_ideal,
    pair_semiring,
    validate_axioms,
)
from src.services.spectrum import enumerate_congruences, spectrum, zariski_closed
from src.services.topology import is_irreducible, materialize_topology
from src.services.window import radical_modulus

logger = logging.getLogger("workbench")


class WorkbenchService:
    """
    Service layer running workbench commands.

    Options name declared objects; when a command needs one semiring,
    congruence or system and none is named, the first declared one is used.
    """

    def __init__(self, workspace: WorkspaceRepository):
        """
        Initialize the WorkbenchService.

        Args:
            workspace: The resolved script objects.
        """
        self.workspace = workspace
        self.validated: set[str] = set()
        self.commands = {
            "axioms": self.axioms,
            "classify-semiring": self.classify_semiring,
            "pair-semiring": self.pair_semiring,
            "ideals": self.ideals,
            "congruences": self.congruences,
            "generate": self.generate,
            "witness": self.witness,
            "meet": self.meet,
            "join": self.join,
            "radical": self.radical,
            "plus": self.plus,
            "flat": self.flat,
            "nil": self.nil,
            "classify": self.classify,
            "spectrum": self.spectrum,
            "vco": self.vco,
            "topology-spec": self.topology_spec,
            "quotient": self.quotient,
            "ideal-maps": self.ideal_maps,
            "principal": self.principal,
            "variety": self.variety,
            "closure": self.closure,
            "irreducible": self.irreducible,
            "vanishing": self.vanishing,
            "star-union": self.star_union,
            "sqrt-over": self.sqrt_over,
            "nullstellensatz": self.nullstellensatz,
            "hom-count": self.hom_count,
            "search maximal-nonprime": self.search_maximal_nonprime,
            "show": self.show,
        }

    @classmethod
    def from_text(cls, text: str, window: int | None = None) -> "WorkbenchService":
        return cls(WorkspaceRepository.from_text(text, window))

    def run(self, command: str, options: CommandOptions | None = None) -> list[str]:
        """
        Run one command.

        Args:
            command: Command name, e.g. ``spectrum`` or ``hom-count``.
            options: Named inputs; defaults apply when omitted.

        Returns:
            The result lines, in a stable order.

        Raises:
            UsageError: On an unknown command or a missing option.
            WorkbenchError: Whatever the underlying operation raises.
        """
        handler = self.commands.get(command)
        if handler is None:
            raise UsageError(messages.text(messages.command_unknown, command=command))
        logger.debug(f"Running {command}")
        return handler(options or CommandOptions())

    def run_directives(self) -> list[str]:
        """Execute the script's ``run`` directives in order."""
        lines = []
        for directive in self.workspace.script.directives:
            try:
                options = CommandOptions(
                    **{key.replace("-", "_"): value for key, value in directive.options}
                )
            except ValidationError as error:
                raise UsageError(
                    messages.text(
                        messages.parse_location,
                        line=directive.line,
                        column=1,
                        message=error.errors()[0]["msg"],
                    )
                ) from error
            lines.append(f"# {directive.command}")
            lines.extend(self.run(directive.command, options))
        return lines

    # inputs

    def _checked(self, A, command: str):
        """
        Refuse an explicit table that is not a commutative semiring.

        ``axioms`` is the only command that accepts such a table.

        Raises:
            StructureError: Naming the first violated axiom and its witness.
        """
        if command == "axioms" or isinstance(A, NaturalsWindow) or A.name in self.validated:
            return A
        report = validate_axioms(A)
        if not report.passed:
            violation = report.violations[0]
            raise StructureError(
                messages.text(
                    messages.semiring_invalid,
                    semiring=A.name,
                    axiom=violation.axiom,
                    witness=" ".join(A.label(e) for e in violation.witness),
                )
            )
        self.validated.add(A.name)
        return A

    def _named(self, repository, name: str | None, command: str, option: str):
        if name is not None:
            return repository.require(name)
        found = repository.first()
        if found is None:
            raise UsageError(messages.text(messages.option_missing, command=command, option=option))
        return found

    def resolve_semiring(self, options: CommandOptions, command: str):
        A = self._named(self.workspace.semirings, options.semiring, command, "semiring")
        require_finite(A, command)
        return self._checked(A, command)

    def resolve_congruence(
        self, options: CommandOptions, command: str, index: int = 0, finite: bool = True
    ):
        names = options.congruences
        if index < len(names):
            rho = self.workspace.congruences.require(names[index])
        elif index == 0:
            rho = self._named(self.workspace.congruences, None, command, "congruences")
        else:
            raise UsageError(
                messages.text(messages.option_missing, command=command, option="congruences")
            )
        if finite:
            require_finite(rho.owner, command)
        self._checked(rho.owner, command)
        return rho

    def _checked_context(self, ctx, command: str):
        self._checked(ctx.coeff, command)
        self._checked(ctx.target, command)
        return ctx

    def resolve_system(self, options: CommandOptions, command: str, index: int = 0):
        names = options.systems
        if index < len(names):
            system = self.workspace.systems.require(names[index])
        elif index == 0:
            system = self._named(self.workspace.systems, None, command, "systems")
        else:
            raise UsageError(
                messages.text(messages.option_missing, command=command, option="systems")
            )
        self._checked_context(system.ctx, command)
        return system

    def resolve_points(self, options: CommandOptions, command: str):
        if options.points is None:
            raise UsageError(messages.text(messages.option_missing, command=command, option="points"))
        return (
            self.workspace.points.require(options.points),
            self._checked_context(self.workspace.point_contexts[options.points], command),
        )

    def _pairs(self, A, options: CommandOptions, command: str) -> tuple[tuple[int, int], ...]:
        """A declared pair-list congruence, or an inline ``a~b,c~d`` list."""
        if options.pairs is None:
            raise UsageError(messages.text(messages.option_missing, command=command, option="pairs"))
        literal = self.workspace.literals.get_by_name(options.pairs)
        if literal is not None:
            return literal
        return tuple(self._pair(A, word) for word in options.pairs.split(",") if word.strip())

    def _pair(self, A, text: str) -> tuple[int, int]:
        left, sep, right = text.strip().partition("~")
        if not sep:
            raise UsageError(messages.text(messages.parse_unexpected, found=repr(text), expected="a~b"))
        return (
            self.workspace.element(A, left.strip(), 1),
            self.workspace.element(A, right.strip(), 1),
        )

    # semiring-core

    def axiom_report(self, options: CommandOptions) -> AxiomReport:
        return validate_axioms(self.resolve_semiring(options, "axioms"))

    def axioms(self, options: CommandOptions) -> list[str]:
        A = self.resolve_semiring(options, "axioms")
        report = validate_axioms(A)
        lines = [key_values(semiring=A.name, passed=report.passed)]
        for violation in report.violations:
            witness = " ".join(A.label(e) for e in violation.witness)
            lines.append(f"violation {violation.axiom} ({witness})")
        return lines

    def semiring_flags(self, options: CommandOptions) -> SemiringFlags:
        return classify_semiring(self.resolve_semiring(options, "classify-semiring"))

    def classify_semiring(self, options: CommandOptions) -> list[str]:
        return [key_values(**self.semiring_flags(options).model_dump())]

    def pair_semiring(self, options: CommandOptions) -> list[str]:
        A = self.resolve_semiring(options, "pair-semiring")
        P = pair_semiring(A)
        lines = [key_values(size=P.size, passed=validate_axioms(P).passed)]
        lines += ["add"] + render_table(P, P.plus) + ["mul"] + render_table(P, P.times)
        return lines

    def ideals(self, options: CommandOptions) -> list[str]:
        A = self.resolve_semiring(options, "ideals")
        return [
            f"{render_members(A, ideal.members)} {key_values(prime=is_prime_ideal(ideal))}"
            for ideal in enumerate_ideals(A)
        ]

    # congruence

    def congruences(self, options: CommandOptions) -> list[str]:
        A = self.resolve_semiring(options, "congruences")
        found = enumerate_congruences(A, options.max_size)
        return [render_partition(rho) for rho in found] + [key_values(count=len(found))]

    def generate(self, options: CommandOptions) -> list[str]:
        A = self.resolve_semiring(options, "generate")
        pairs = self._pairs(A, options, "generate")
        if options.alt:
            rho = cong.generated_congruence_literal(A, pairs)
        else:
            rho = cong.generated_congruence(A, pairs)
        return [render_partition(rho), key_values(pairs=len(rho.pairs), classes=rho.class_count)]

    def witness(self, options: CommandOptions) -> list[str]:
        A = self.resolve_semiring(options, "witness")
        pairs = self._pairs(A, options, "witness")
        if options.pair is None:
            raise UsageError(messages.text(messages.option_missing, command="witness", option="pair"))
        chain = cong.witness_chain(A, pairs, self._pair(A, options.pair))
        if chain is None:
            return [key_values(member=False)]
        steps = " -> ".join(A.label(e) for e in chain.steps)
        return [
            key_values(member=True, verified=cong.verify_witness_chain(A, pairs, chain)),
            f"chain {steps}",
        ]

    def meet(self, options: CommandOptions) -> list[str]:
        rho = self.resolve_congruence(options, "meet")
        sigma = self.resolve_congruence(options, "meet", 1)
        return [render_partition(cong.meet(rho, sigma))]

    def join(self, options: CommandOptions) -> list[str]:
        rho = self.resolve_congruence(options, "join")
        sigma = self.resolve_congruence(options, "join", 1)
        return [render_partition(cong.join(rho, sigma))]

    def radical(self, options: CommandOptions) -> list[str]:
        rho = self.resolve_congruence(options, "radical", finite=False)
        if isinstance(rho, ModularCongruence):
            return [f"mod {radical_modulus(rho.modulus)}"]
        root = cong.radical_alt(rho) if options.alt else cong.radical(rho)
        return [render_partition(root)]

    def plus(self, options: CommandOptions) -> list[str]:
        rho = self.resolve_congruence(options, "plus")
        return [render_partition(cong.plus_closure(rho))]

    def flat(self, options: CommandOptions) -> list[str]:
        if options.equivalence is not None:
            E = self.workspace.equivalences.require(options.equivalence)
        else:
            E = self._named(self.workspace.equivalences, None, "flat", "equivalence")
        self._checked(E.owner, "flat")
        return [render_partition(cong.flat(E))]

    def nil(self, options: CommandOptions) -> list[str]:
        A = self.resolve_semiring(options, "nil")
        nil = cong.nil_relations(A)
        return [
            f"r_nil {render_pairs(A, nil.r_nil.pairs, diagonal=False)}",
            f"rho_nil {render_partition(nil.rho_nil)}",
            f"n_c {render_partition(nil.n_c)}",
            key_values(reduced=nil.reduced, strongly_reduced=nil.strongly_reduced),
        ]

    def classification(self, options: CommandOptions) -> CongruenceClassification:
        return cong.classify(self.resolve_congruence(options, "classify"))

    def classify(self, options: CommandOptions) -> list[str]:
        return [key_values(**self.classification(options).model_dump())]

    def spectrum(self, options: CommandOptions) -> list[str]:
        A = self.resolve_semiring(options, "spectrum")
        found = spectrum(A, options.kind, options.max_size)
        summary = key_values(kind=options.kind, count=len(found))
        return [render_partition(rho) for rho in found] + [summary]

    def vco(self, options: CommandOptions) -> list[str]:
        sigma = self.resolve_congruence(options, "vco")
        found = zariski_closed(sigma.owner, sigma, options.max_size)
        return [render_partition(rho) for rho in found] + [key_values(count=len(found))]

    def topology_spec(self, options: CommandOptions) -> list[str]:
        """Prime congruences and every closed set of their topology, primes given by index."""
        A = self.resolve_semiring(options, "topology-spec")
        congruences = enumerate_congruences(A, options.max_size)
        primes = spectrum(A, constants.KIND_PRIME, congruences=congruences)
        lines = [f"p{i} {render_partition(rho)}" for i, rho in enumerate(primes)]
        closed = {
            tuple(primes.index(rho) for rho in zariski_closed(A, sigma, primes=primes))
            for sigma in congruences
        }
        for members in sorted(closed, key=lambda found: (len(found), found)):
            lines.append("closed {" + " ".join(f"p{i}" for i in members) + "}")
        return lines

    def quotient(self, options: CommandOptions) -> list[str]:
        rho = self.resolve_congruence(options, "quotient")
        table, projection = cong.quotient(rho)
        A = rho.owner
        mapping = " ".join(f"{A.label(a)}->{table.label(c)}" for a, c in enumerate(projection))
        return render_semiring(table).splitlines() + [f"projection {mapping}"]

    def ideal_maps(self, options: CommandOptions) -> list[str]:
        if options.ideal is not None:
            ideal = self.workspace.ideals.require(options.ideal)
        else:
            ideal = self._named(self.workspace.ideals, None, "ideal-maps", "ideal")
        self._checked(ideal.owner, "ideal-maps")
        sigma = self.resolve_congruence(options, "ideal-maps")
        rho_j, i_sigma = cong.ideal_congruence_maps(ideal, sigma)
        return [
            f"rho_J {render_partition(rho_j)}",
            f"I_sigma {render_members(sigma.owner, i_sigma.members)}",
        ]

    def principal(self, options: CommandOptions) -> list[str]:
        A = self.resolve_semiring(options, "principal")
        if options.pair is None:
            raise UsageError(messages.text(messages.option_missing, command="principal", option="pair"))
        R, saturated = cong.principal_relation(A, *self._pair(A, options.pair))
        return [
            f"relation {render_pairs(A, R.pairs, diagonal=False)}",
            f"saturated {render_partition(saturated)}",
        ]

    def search_maximal_nonprime(self, options: CommandOptions) -> list[str]:
        if options.seed is None:
            raise UsageError(
                messages.text(messages.option_missing, command="search maximal-nonprime", option="seed")
            )
        report = search_maximal_nonprime(
            options.seed,
            options.count or constants.SEARCH_DEFAULT_COUNT,
            options.sizes or (constants.SEARCH_MIN_SIZE, constants.SEARCH_MAX_SIZE),
            options.max_size,
        )
        lines = [
            key_values(
                seed=report.seed,
                samples=report.samples,
                maximal_checked=report.maximal_checked,
                counterexamples=len(report.counterexamples),
                plus_saturated_violations=report.plus_saturated_violations,
            )
        ]
        for found in report.counterexamples:
            lines.append(
                key_values(
                    sample=found.sample,
                    congruence="".join(str(c) for c in found.congruence),
                    probable_bug=found.probable_bug,
                )
                + f" {found.semiring}"
            )
        return lines

    # geometry

    def variety(self, options: CommandOptions) -> list[str]:
        system = self.resolve_system(options, "variety")
        Z = zero_set(system, self.resolve_congruence(options, "variety", finite=False))
        summary = key_values(size=len(Z), window=Z.window) if Z.window else key_values(size=len(Z))
        return [summary, f"points {render_points(system.ctx.target, Z.points)}"]

    def closure(self, options: CommandOptions) -> list[str]:
        Y, ctx = self.resolve_points(options, "closure")
        closed = closure(Y, self.resolve_congruence(options, "closure"), ctx)
        return [key_values(size=len(closed)), f"points {render_points(ctx.target, closed.points)}"]

    def irreducible(self, options: CommandOptions) -> list[str]:
        Y, ctx = self.resolve_points(options, "irreducible")
        topology = materialize_topology(ctx, self.resolve_congruence(options, "irreducible"), Y.num_vars)
        return [key_values(irreducible=is_irreducible(Y, topology), closed_sets=len(topology.closed))]

    def vanishing(self, options: CommandOptions) -> list[str]:
        Y, ctx = self.resolve_points(options, "vanishing")
        V = vanishing(Y, self.resolve_congruence(options, "vanishing"), ctx)
        lines = [
            key_values(
                functions=V.functions.size,
                classes=V.congruence.class_count,
                prime=cong.is_prime(V.congruence),
            )
        ]
        if options.check is not None:
            for f, g in parse_system(options.check, ctx.coeff, Y.num_vars):
                lines.append(
                    f"{f.render(ctx.coeff)} = {g.render(ctx.coeff)} "
                    + key_values(holds=vanishing_contains(V, f, g))
                )
        return lines

    def star_union(self, options: CommandOptions) -> list[str]:
        first = self.resolve_system(options, "star-union")
        second = self.resolve_system(options, "star-union", 1)
        report = star_union(first, second, self.resolve_congruence(options, "star-union", finite=False))
        target = first.ctx.target
        return [
            key_values(rho_prime=report.rho_prime, equal=report.equal),
            f"star {render_points(target, report.star)}",
            f"union {render_points(target, report.union)}",
        ]

    def _degree_cap(self, options: CommandOptions) -> int:
        return settings.DEGREE_CAP if options.degree_cap is None else options.degree_cap

    def sqrt_over(self, options: CommandOptions) -> list[str]:
        system = self.resolve_system(options, "sqrt-over")
        rho = self.resolve_congruence(options, "sqrt-over", finite=False)
        relation = sqrt_over(system, rho, self._degree_cap(options))
        fields = dict(
            degree_cap=relation.degree_cap,
            polynomials=len(relation.polynomials),
            vectors=len(relation.kernels),
            components=len(set(relation.component_of)),
            informative=relation.informative,
        )
        if relation.window is not None:
            fields["window"] = relation.window
        return [key_values(**fields)]

    def nullstellensatz_report(self, options: CommandOptions) -> NullstellensatzReport:
        system = self.resolve_system(options, "nullstellensatz")
        rho = self.resolve_congruence(options, "nullstellensatz", finite=False)
        return nullstellensatz_check(system, rho, self._degree_cap(options))

    def nullstellensatz(self, options: CommandOptions) -> list[str]:
        report = self.nullstellensatz_report(options)
        fields = dict(
            inclusion=report.inclusion_holds,
            equality=report.equality_holds,
            degree_cap=report.degree_cap,
            polynomials=report.syntactic_count,
            zero_set=report.zero_set_size,
            informative=report.informative,
        )
        if report.window is not None:
            fields["window"] = report.window
        return [key_values(**fields)] + [f"witness {w}" for w in report.witnesses]

    def hom_count_report(self, options: CommandOptions) -> HomCount:
        system = self.resolve_system(options, "hom-count")
        return hom_count(system, self.resolve_congruence(options, "hom-count", finite=False))

    def hom_count(self, options: CommandOptions) -> list[str]:
        count = self.hom_count_report(options)
        if count.window is None:
            return [key_values(points=count.points, homs=count.homs)]
        return [key_values(points=count.points, homs=count.homs, window=count.window)]

    # script

    def show(self, options: CommandOptions) -> list[str]:
        """Re-emit every declaration as script text that parses back to it."""
        ws = self.workspace
        lines = []
        for decl in ws.script.declarations:
            if isinstance(decl, SemiringDecl):
                A = ws.semirings.require(decl.name)
                if isinstance(A, NaturalsWindow):
                    lines.append(f"semiring {A.name} {constants.NATURALS_KIND} end")
                else:
                    lines.extend(render_semiring(A).splitlines())
            elif isinstance(decl, CongruenceDecl):
                rho = ws.congruences.require(decl.name)
                if isinstance(rho, ModularCongruence):
                    literal = f"mod {rho.modulus}"
                else:
                    literal = render_partition(rho)
                lines.append(f"congruence {decl.name} on {decl.semiring} = {literal}")
            elif isinstance(decl, EquivalenceDecl):
                E = ws.equivalences.require(decl.name)
                lines.append(f"equivalence {decl.name} on {decl.semiring} = {render_partition(E)}")
            elif isinstance(decl, IdealDecl):
                ideal = ws.ideals.require(decl.name)
                members = render_members(ideal.owner, ideal.members)
                lines.append(f"ideal {decl.name} on {decl.semiring} = {members}")
            elif isinstance(decl, SystemDecl):
                system = ws.systems.require(decl.name)
                ring = system.ctx.coeff
                body = "; ".join(f"{f.render(ring)} = {g.render(ring)}" for f, g in system.pairs)
                lines.append(
                    f"system {decl.name} over {decl.coeff} in {decl.target} "
                    f'vars {decl.num_vars} = "{body}"'
                )
            else:
                Y = ws.points.require(decl.name)
                target = ws.point_contexts[decl.name].target
                lines.append(
                    f"points {decl.name} over {decl.coeff} in {decl.target} "
                    f"vars {decl.num_vars} = {render_points(target, Y.points)}"
                )
        return lines
