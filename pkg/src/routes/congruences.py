import logging

from fastapi import APIRouter, Depends

from src.core.depend_service import ServiceFactory, get_workbench_factory
from src.schemas.commands import CommandResponse, QueryRequest
from src.schemas.reports import CongruenceClassification

router = APIRouter(prefix="/congruences", tags=["congruences"])
logger = logging.getLogger("uvicorn.error")


def _run(command: str, body: QueryRequest, service_factory: ServiceFactory) -> CommandResponse:
    service = service_factory(body.script, body.options.window)
    return CommandResponse(command=command, lines=service.run(command, body.options))


@router.post("/list", response_model=CommandResponse)
def list_congruences(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> CommandResponse:
    """
    Enumerate every congruence of a declared semiring.

    Args:
        body: Script text; ``options.semiring`` picks the semiring and
            ``options.max_size`` loosens the carrier bound.
        service_factory: Injected WorkbenchService factory.

    Returns:
        CommandResponse: One partition per line and a final count line.
    """
    return _run("congruences", body, service_factory)


@router.post("/spectrum", response_model=CommandResponse)
def get_spectrum(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> CommandResponse:
    """
    Prime, semiprime, maximal or semimaximal congruences, per ``options.kind``.
    """
    return _run("spectrum", body, service_factory)


@router.post("/classify", response_model=CongruenceClassification)
def classify_congruence(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> CongruenceClassification:
    """
    Structural flags of a declared congruence.

    Returns:
        CongruenceClassification: proper, prime, semi-prime, maximal,
        semi-maximal, radical, quasi-radical and plus-saturated.
    """
    service = service_factory(body.script, body.options.window)
    return service.classification(body.options)


@router.post("/radical", response_model=CommandResponse)
def get_radical(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> CommandResponse:
    return _run("radical", body, service_factory)
