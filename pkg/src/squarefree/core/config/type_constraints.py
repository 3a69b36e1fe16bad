# -----------------------------------------------------------------------------
# /*
#  * Copyright (C) 2025 Squarefree
#  *
#  * This program is free software; you can redistribute it and/or modify
#  * it under the terms of the GNU General Public License as published by
#  * the Free Software Foundation; Version 2.
#  *
#  * This program is distributed in the hope that it will be useful,
#  * but WITHOUT ANY WARRANTY; without even the implied warranty of
#  * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  * GNU General Public License for more details.
#  *
#  * You should have received a copy of the GNU General Public License
#  * along with this program; if not, write to the Free Software Foundation.
#  */
# -----------------------------------------------------------------------------

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from squarefree.core.exceptions import ConfigurationError


class TypeConstraint(ABC):
    """Abstract base for type constraints.

    Subclasses implement `coerce`, which turns a raw value from a config
    source (TOML value, environment string, CLI argument) into the typed
    value, raising ConfigurationError when that is impossible.
    """

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Coerce and validate `value`."""


@dataclass
class RangeTypeConstraint(TypeConstraint):
    min_value: float | int | None = None
    max_value: float | int | None = None
    is_int: bool = False

    def coerce(self, value: Any) -> Any:
        if isinstance(value, bool):
            raise ConfigurationError(f"Value {value!r} is a bool, not a number")
        try:
            v = int(value) if self.is_int else float(value)
        except (ValueError, TypeError, OverflowError):
            raise ConfigurationError(
                f"Value {value!r} is not a valid {'int' if self.is_int else 'float'}"
            )

        if self.min_value is not None and v < self.min_value:
            raise ConfigurationError(f"{v} < min {self.min_value}")
        if self.max_value is not None and v > self.max_value:
            raise ConfigurationError(f"{v} > max {self.max_value}")

        return v

    def __str__(self) -> str:
        parts = []
        if self.min_value is not None:
            parts.append(f"min={self.min_value}")
        if self.max_value is not None:
            parts.append(f"max={self.max_value}")
        return f"{'int' if self.is_int else 'float'} range({', '.join(parts)})"


@dataclass(init=False)
class LiteralTypeConstraint(TypeConstraint):
    allowed: tuple[str, ...]
    lookup: dict[str, str]

    def __init__(self, allowed: Iterable[str] = ()):
        self.allowed = tuple(allowed)
        self.lookup = {value.lower(): value for value in self.allowed}

    def coerce(self, value: Any) -> str:
        if isinstance(value, str) and value.strip().lower() in self.lookup:
            return self.lookup[value.strip().lower()]
        raise ConfigurationError(f"{value!r} not one of allowed values: {list(self.allowed)}")

    def __str__(self) -> str:
        return f"one of {list(self.allowed)}"


class BoolConstraint(TypeConstraint):
    def coerce(self, value: Any) -> bool:
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in ("yes", "true", "t", "1", "on"):
            return True
        if text in ("no", "false", "f", "0", "off"):
            return False
        raise ConfigurationError(f"Cannot coerce {value!r} to bool")

    def __str__(self) -> str:
        return "bool"
