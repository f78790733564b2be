from enum import Enum
import json
import typing


class CustomJsonEncoder(json.JSONEncoder):
    """Used for handling json encoding of internal models."""

    def default(self, obj: typing.Any) -> typing.Any:
        #  This will be found on pydantic based models, which are encoded as their field dicts.
        if hasattr(obj, "dict") and hasattr(obj, "__fields__"):
            return obj.dict()

        return super().default(obj)

    @classmethod
    def dumps(cls, data: typing.Any) -> str:
        """A shortcut for json.dumps(data, cls=CustomJsonEncoder)."""
        return json.dumps(data, cls=cls)


def to_cell(value: typing.Any) -> str:
    """
    Render a model field as a flat text cell for CSV and table output.

    Args:
        value (typing.Any): A field value.

    Returns:
        str: Enum values, lowercase booleans, fixed precision floats and `str` for everything else.
    """
    if isinstance(value, Enum):
        return str(value.value)

    if isinstance(value, bool):
        return "true" if value else "false"

    if isinstance(value, float):
        return f"{value:.3f}"

    return str(value)


__all__ = ["CustomJsonEncoder", "to_cell"]
