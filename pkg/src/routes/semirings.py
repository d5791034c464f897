import logging

from fastapi import APIRouter, Depends

from src.core.depend_service import ServiceFactory, get_workbench_factory
from src.schemas.commands import CommandResponse, QueryRequest
from src.schemas.reports import AxiomReport, SemiringFlags

router = APIRouter(prefix="/semirings", tags=["semirings"])
logger = logging.getLogger("uvicorn.error")


@router.post("/axioms", response_model=AxiomReport)
def check_axioms(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> AxiomReport:
    """
    Scan a declared semiring for violated axioms.

    Args:
        body: Script text and the name of the semiring to check.
        service_factory: Injected WorkbenchService factory.

    Returns:
        AxiomReport: Every violated axiom with one witness tuple.
    """
    service = service_factory(body.script, body.options.window)
    return service.axiom_report(body.options)


@router.post("/classify", response_model=SemiringFlags)
def classify_semiring(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> SemiringFlags:
    """
    Structural flags of a declared semiring.

    Returns:
        SemiringFlags: semidomain, semifield, additive annihilation and
        additive idempotence.
    """
    service = service_factory(body.script, body.options.window)
    return service.semiring_flags(body.options)


@router.post("/pair", response_model=CommandResponse)
def pair_semiring(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> CommandResponse:
    """The twisted pair semiring A x A as operation tables."""
    service = service_factory(body.script, body.options.window)
    return CommandResponse(command="pair-semiring", lines=service.run("pair-semiring", body.options))
