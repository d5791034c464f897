from typing import Callable

from src.services.workbench import WorkbenchService

ServiceFactory = Callable[[str, int | None], WorkbenchService]


def get_workbench_factory() -> ServiceFactory:
    """
    Dependency function that provides a WorkbenchService factory.

    Routes build one service per request from the posted script text, so
    the dependency hands out the constructor rather than an instance.

    Returns:
        A callable taking the script text and an optional window bound.
    """
    return WorkbenchService.from_text
