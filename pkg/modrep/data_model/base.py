import logging
from enum import Enum
from typing import Any, ClassVar, Dict, Set, Type, TypeVar

from pydantic import BaseModel as _BaseModel
from pydantic import ConfigDict, ValidationError, field_validator, model_validator

from ..util import issue_data_model_warning

T = TypeVar("T")

logger = logging.getLogger("modrep")


__all__ = [
    "BaseModel",
    "StrEnum",
    "field_validator",
    "model_validator",
]


class BaseModel(_BaseModel):
    """
    The base class for all modrep data models.

    Models are immutable. Unknown fields in raw data are dropped with a warning.
    """

    model_config = ConfigDict(
        validate_assignment=True, use_enum_values=True, frozen=True, extra="ignore"
    )

    IGNORE_FIELDS: ClassVar[Set[str]] = set()

    @model_validator(mode="before")
    def _warn_about_unknown_fields(  # type: ignore
        cls: Type["BaseModel"], values: Any  # type: ignore
    ) -> Any:
        # In some cases we get an instance instead of a dict.
        if not isinstance(values, dict):
            return values
        for key, value in values.items():
            if key not in cls.model_fields and key not in cls.IGNORE_FIELDS:
                issue_data_model_warning(cls, key, value)
        return values

    def __str__(self) -> str:
        return self.__repr__()

    def __getitem__(self, key):
        return self.model_dump()[key]

    @classmethod
    def from_json(cls: Type[T], json_data: Dict[str, Any]) -> T:
        try:
            return cls(**json_data)  # type: ignore
        except ValidationError:
            logger.error("Error validating raw JSON data for %s: %s", cls.__name__, json_data)
            raise

    def to_json(self) -> Dict[str, Any]:
        return self.jsonify(self)

    @classmethod
    def jsonify(cls, x: Any) -> Any:
        if isinstance(x, BaseModel):
            return {
                key: cls.jsonify(value)
                for key, value in x.model_dump(mode="json").items()
                if value is not None
            }
        elif isinstance(x, Enum):
            return cls.jsonify(x.value)
        elif isinstance(x, (str, float, int, bool)) or x is None:
            return x
        elif isinstance(x, dict):
            return {key: cls.jsonify(value) for key, value in x.items()}
        elif isinstance(x, (list, tuple, set)):
            return [cls.jsonify(x_i) for x_i in x]
        else:
            return x


class StrEnum(str, Enum):
    def __str__(self) -> str:
        return self.value
