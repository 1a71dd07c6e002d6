"""
Contains base class for all components
"""

from typing import Type, TypeVar

from humps.main import camelize

# pylint: disable=no-name-in-module
from pydantic import BaseModel, ConfigDict

# pylint: disable=too-few-public-methods


class COM(BaseModel):
    """
    base class for all components

    Components are immutable values; every operation of sumloci is a pure function of them, so they may be shared
    between threads without any locking.
    """

    # pylint: disable=duplicate-code
    # basic configuration for pydantic's behaviour
    model_config = ConfigDict(
        alias_generator=camelize,
        populate_by_name=True,
        extra="forbid",
        frozen=True,
        use_attribute_docstrings=True,
    )


# pylint: disable=invalid-name
# Any type derived from COM including those that do not directly inherit from COM
TCom = TypeVar("TCom", bound=Type[COM])
