"""The base object used for forming value models."""
from enum import Enum


from pydantic import BaseModel


class CustomBase(BaseModel):
    """A custom version of `pydantic.BaseModel` used for immutable, hashable values."""

    class Config:
        """Config for customising the behaviour of CustomBase."""

        arbitrary_types_allowed = True
        frozen = True
        json_encoders = {
            Enum: lambda obj: obj.value,
        }


__all__ = ["CustomBase"]
