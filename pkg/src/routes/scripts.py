import logging

from fastapi import APIRouter, Depends

from src.core.depend_service import ServiceFactory, get_workbench_factory
from src.schemas.commands import CommandRequest, CommandResponse, QueryRequest

router = APIRouter(prefix="/scripts", tags=["scripts"])
logger = logging.getLogger("uvicorn.error")


@router.post("/run", response_model=CommandResponse)
def run_script(
    body: QueryRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> CommandResponse:
    """
    Execute the ``run`` directives of a script in order.

    Args:
        body: Script text; ``options.window`` sets the naturals window.
        service_factory: Injected WorkbenchService factory.

    Returns:
        CommandResponse: The transcript, one ``# command`` header per
        directive followed by its result lines.
    """
    service = service_factory(body.script, body.options.window)
    lines = service.run_directives()
    logger.info(f"Script run: {len(service.workspace.script.directives)} directives")
    return CommandResponse(command="run", lines=lines)


@router.post("/command", response_model=CommandResponse)
def run_command(
    body: CommandRequest, service_factory: ServiceFactory = Depends(get_workbench_factory)
) -> CommandResponse:
    """Run any single workbench command against the posted script."""
    service = service_factory(body.script, body.options.window)
    return CommandResponse(command=body.command, lines=service.run(body.command, body.options))
