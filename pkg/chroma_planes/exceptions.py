# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
#
#   Copyright 2024 Valory AG
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
# ------------------------------------------------------------------------------

"""Exceptions."""

import typing as t


class ChromaPlanesException(Exception):
    """Base exception; `code` is the CLI exit code it maps to."""

    code: int = 1


class InvalidGraph(ChromaPlanesException):
    """Graph violates the simple-graph invariants."""

    code = 1


class ParseError(ChromaPlanesException):
    """Graph text could not be parsed."""

    code = 1

    def __init__(self, message: str, line: t.Optional[int] = None) -> None:
        """Initialize object."""
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class InvalidConfig(ChromaPlanesException):
    """Configuration value out of range or unknown."""

    code = 1


class PlaneError(ChromaPlanesException):
    """Operation refers to an unknown, empty or disconnected plane."""

    code = 1


class OracleLimitExceeded(ChromaPlanesException):
    """Instance is larger than the configured exact-search ceiling."""

    code = 3

    def __init__(self, n: int, ceiling: int) -> None:
        """Initialize object."""
        self.n = n
        self.ceiling = ceiling
        super().__init__(
            f"oracle limit: graph has {n} vertices, ceiling is {ceiling}"
        )


class BudgetExhausted(ChromaPlanesException):
    """Exact coloring search ran out of its node budget."""

    code = 3

    def __init__(
        self,
        budget: int,
        lower: t.Optional[int] = None,
        upper: t.Optional[int] = None,
    ) -> None:
        """Initialize object."""
        self.budget = budget
        self.lower = lower
        self.upper = upper
        bounds = "" if lower is None else f" (bounds {lower}..{upper})"
        super().__init__(f"budget exhausted after {budget} search nodes{bounds}")


class FillingError(ChromaPlanesException):
    """Chromatic filling cannot seed a plane."""

    code = 3
