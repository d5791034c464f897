"""Main application module for the semiring congruence workbench API.

This module configures:
- FastAPI application instance
- Mapping of workbench errors to HTTP responses
- Builtin semiring health checks
- CORS policies
- API route registration
"""

import logging

from fastapi import FastAPI, HTTPException, Request, status
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from src.conf import messages
from src.core.exceptions import UsageError, WorkbenchError
from src.routes import congruences, scripts, semirings, varieties
from src.services.semiring import builtin, validate_axioms

logger = logging.getLogger("uvicorn.error")

HEALTH_BUILTINS = (("boolean", None), ("zmod", 6), ("truncated_nat", 3), ("minplus_chain", 3))

app = FastAPI(
    title="Semiring congruence workbench v1.0",
    description="Congruences, spectra and zero sets of finite commutative semirings",
    version="1.0",
)


@app.exception_handler(WorkbenchError)
async def workbench_error_handler(request: Request, exc: WorkbenchError):
    """Report workbench errors with a localized message.

    Returns:
        JSONResponse: 422 for usage and parse errors, 400 for domain errors
    """
    code = (
        status.HTTP_422_UNPROCESSABLE_ENTITY
        if isinstance(exc, UsageError)
        else status.HTTP_400_BAD_REQUEST
    )
    logger.info(f"{request.url.path}: {exc.message}")
    return JSONResponse(status_code=code, content={"error": exc.message})


# CORS middleware configuration
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(semirings.router, prefix="/api")
app.include_router(congruences.router, prefix="/api")
app.include_router(varieties.router, prefix="/api")
app.include_router(scripts.router, prefix="/api")


@app.get("/")
def read_root():
    """Root endpoint providing API identification.

    Returns:
        dict: Basic API information
    """
    return {"message": messages.text(messages.api_root)}


@app.get("/healthchecker")
def healthchecker():
    """Builtin semiring health check.

    Verifies that every builtin family still satisfies the semiring axioms.

    Raises:
        HTTPException: 500 if some builtin fails validation
    """
    failed = [
        kind for kind, parameter in HEALTH_BUILTINS
        if not validate_axioms(builtin(kind, parameter)).passed
    ]
    if failed:
        logger.error(f"Builtins failed validation: {', '.join(failed)}")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail=messages.text(messages.api_unhealthy),
        )
    return {"message": messages.text(messages.api_healthy)}
