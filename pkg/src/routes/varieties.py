import logging

from fastapi import APIRouter, Depends

from src.core.depend_service import ServiceFactory, get_workbench_factory
from src.schemas.commands import CommandResponse, QueryRequest
from src.schemas.reports import HomCount, NullstellensatzReport

router = APIRouter(prefix="/varieties", tags=["varieties"])
logger = logging.getLogger("uvicorn.error")


@router.post("/zero-set", response_model=CommandResponse)
def get_zero_set(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> CommandResponse:
    """
    Zero set of a declared system modulo a declared congruence.

    Args:
        body: Script text; ``options.systems`` and ``options.congruences``
            pick the inputs.
        service_factory: Injected WorkbenchService factory.

    Returns:
        CommandResponse: A size line and the sorted points.
    """
    service = service_factory(body.script, body.options.window)
    return CommandResponse(command="variety", lines=service.run("variety", body.options))


@router.post("/hom-count", response_model=HomCount)
def get_hom_count(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> HomCount:
    """
    Count zero-set points modulo rho and homomorphisms into the quotient.

    Returns:
        HomCount: Both counts, with the window bound in window mode.
    """
    service = service_factory(body.script, body.options.window)
    count = service.hom_count_report(body.options)
    if count.window is not None:
        logger.info(f"hom-count verified for all values <= {count.window}")
    return count


@router.post("/nullstellensatz", response_model=NullstellensatzReport)
def check_nullstellensatz(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> NullstellensatzReport:
    """
    Compare the generated radical relation with the radical vanishing
    congruence of the zero set, within ``options.degree_cap``.
    """
    service = service_factory(body.script, body.options.window)
    return service.nullstellensatz_report(body.options)
