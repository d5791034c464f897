from pydantic import BaseModel, Field, model_validator

from src.conf import messages


class AxiomViolation(BaseModel):
    """One violated semiring axiom together with a witness tuple of element ids."""

    axiom: str
    witness: tuple[int, ...]


class AxiomReport(BaseModel):
    """
    Outcome of an exhaustive axiom scan.

    ``passed`` is true exactly when ``violations`` is empty.
    """

    passed: bool = Field(description=messages.schema_passed.get("en"))
    violations: list[AxiomViolation] = Field(
        default_factory=list, description=messages.schema_violations.get("en")
    )

    @model_validator(mode="after")
    def passed_matches_violations(self):
        if self.passed != (not self.violations):
            raise ValueError(messages.text(messages.passed_flag_mismatch))
        return self

    @property
    def violated_axioms(self) -> list[str]:
        return [v.axiom for v in self.violations]


class SemiringFlags(BaseModel):
    semidomain: bool
    semifield: bool
    additive_annihilation: bool
    additively_idempotent: bool


class CongruenceClassification(BaseModel):
    """
    Structural flags of a congruence.

    prime, semi_prime, maximal and semi_maximal all imply proper.
    """

    proper: bool
    prime: bool
    semi_prime: bool
    maximal: bool
    semi_maximal: bool
    radical: bool
    quasi_radical: bool
    plus_saturated: bool


class NilReport(BaseModel):
    r_nil: list[tuple[int, int]]
    rho_nil: tuple[int, ...]
    n_c: tuple[int, ...]
    reduced: bool
    strongly_reduced: bool


class StarUnionReport(BaseModel):
    star: list[tuple[int, ...]]
    union: list[tuple[int, ...]]
    rho_prime: bool
    equal: bool


class NullstellensatzReport(BaseModel):
    """
    Result of comparing the generated radical relation with the radical
    vanishing congruence of the zero set.
    """

    inclusion_holds: bool
    equality_holds: bool
    degree_cap: int
    syntactic_count: int
    zero_set_size: int
    informative: bool = True
    window: int | None = Field(default=None, description=messages.schema_window.get("en"))
    witnesses: list[str] = Field(default_factory=list)


class HomCount(BaseModel):
    points: int
    homs: int
    window: int | None = Field(default=None, description=messages.schema_window.get("en"))

    @property
    def equal(self) -> bool:
        return self.points == self.homs


class Counterexample(BaseModel):
    sample: int
    semiring: str
    congruence: tuple[int, ...]
    plus_saturated: bool
    additively_idempotent: bool
    probable_bug: bool


class SearchReport(BaseModel):
    seed: int
    samples: int
    sizes: tuple[int, int]
    maximal_checked: int
    counterexamples: list[Counterexample] = Field(default_factory=list)
    plus_saturated_violations: int = 0
