from typing import Generic, TypeVar

from src.conf import messages
from src.core.exceptions import UndefinedNameError

ModelType = TypeVar("ModelType")


class BaseRepository(Generic[ModelType]):
    def __init__(self, kind: str):
        """
        Initialize a BaseRepository.

        Args:
            kind: Kind of the stored objects, used in error messages.
        """
        self.kind = kind
        self.items: dict[str, ModelType] = {}

    def get_all(self) -> list[ModelType]:
        """
        Retrieve all stored objects in declaration order.

        Returns:
            A list of model instances.
        """
        return list(self.items.values())

    def get_by_name(self, name: str) -> ModelType | None:
        """
        Retrieve an object by its declared name.

        Args:
            name: The declared name.

        Returns:
            The instance if found, otherwise None.
        """
        return self.items.get(name)

    def require(self, name: str) -> ModelType:
        """
        Retrieve an object that must exist.

        Raises:
            UndefinedNameError: If nothing of this kind carries ``name``.
        """
        instance = self.get_by_name(name)
        if instance is None:
            raise UndefinedNameError(
                messages.text(messages.undefined_name, kind=self.kind, name=name)
            )
        return instance

    def create(self, name: str, instance: ModelType) -> ModelType:
        """
        Register a new instance under ``name``.

        Args:
            name: The declared name.
            instance: The instance to be added.

        Returns:
            The stored instance.
        """
        self.items[name] = instance
        return instance

    def first(self) -> ModelType | None:
        return next(iter(self.items.values()), None)
