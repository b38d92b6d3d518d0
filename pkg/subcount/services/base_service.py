"""
Base service class with precondition and model-building helpers.
Services are stateless; every operation is a pure function of its arguments.
"""
import logging
from typing import Any, Type, TypeVar

from pydantic import BaseModel, ValidationError as PydanticValidationError

from subcount.core.exceptions import InvalidArgumentError, InvalidInstanceError, from_pydantic

logger = logging.getLogger(__name__)

ModelType = TypeVar("ModelType", bound=BaseModel)


class BaseService:
    """
    Base service class.
    Provides precondition checks and pydantic model construction with domain errors.
    """

    def __init__(self):
        self.service_name = self.__class__.__name__
        logger.debug(f"Initialized {self.service_name}", extra={"service": self.service_name})

    def require(
            self,
            condition: bool,
            message: str,
            error: Type[InvalidInstanceError] = InvalidArgumentError,
            **details: Any
    ) -> None:
        """
        Enforce a precondition.

        Args:
            condition: Must hold
            message: Error message when it does not
            error: Exception class raised on failure
            details: Context attached to the exception

        Raises:
            InvalidArgumentError: (or the given subclass) if the condition fails
        """
        if not condition:
            logger.warning(f"{self.service_name}: {message}", extra={"details": details})
            raise error(message, details=details)

    def build(self, model: Type[ModelType], message: str, **fields: Any) -> ModelType:
        """
        Construct a domain model, translating pydantic failures.

        Args:
            model: Model class
            message: Summary used if validation fails
            fields: Model fields

        Returns:
            Validated model instance

        Raises:
            InvalidInstanceError: If validation fails
        """
        try:
            return model(**fields)
        except PydanticValidationError as e:
            logger.warning(
                f"{self.service_name}: {message}: {e.error_count()} error(s)",
                extra={"service": self.service_name},
            )
            raise from_pydantic(e, message) from e
