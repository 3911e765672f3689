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

"""Types module."""

import enum
import typing as t


Edge = t.Tuple[int, int]
VertexSet = t.Tuple[int, ...]


def vertex_set(vertices: t.Iterable[int]) -> VertexSet:
    """Sorted, duplicate-free vertex tuple."""
    return tuple(sorted(set(vertices)))


class _StringEnum(enum.Enum):
    """Enum whose values are the user-facing labels."""

    @classmethod
    def from_string(cls, label: str) -> t.Any:
        """Load from string."""
        for member in cls:
            if member.value == label.strip():
                return member
        valid = ", ".join(member.value for member in cls)
        raise ValueError(f"Unknown {cls.__name__} '{label}'; valid values: {valid}")

    @classmethod
    def labels(cls) -> t.List[str]:
        """All labels in declaration order."""
        return [member.value for member in cls]


class PlacementMode(_StringEnum):
    """Reading of the placement criterion."""

    CAPACITY = "capacity4"
    STRICT = "strict-lemma2"


class ResidualPolicy(_StringEnum):
    """What happens to residual components that are not selected next."""

    PROCESS_ALL = "process-all"
    DISCARD = "discard-paper"


class OutputFormat(_StringEnum):
    """CLI output format."""

    JSON = "json"
    TABLE = "table"


class ClaimStatus(_StringEnum):
    """Verdict of one claim check."""

    HOLDS = "holds"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


class CheckStatus(_StringEnum):
    """Outcome of one validation check."""

    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class ClaimId(_StringEnum):
    """Claims tested by the harness."""

    L1 = "L1"
    C21 = "C2.1"
    C22 = "C2.2"
    C23 = "C2.3"
    C24 = "C2.4"
    C25 = "C2.5"
    C26 = "C2.6"
    L3 = "L3"
    C31 = "C3.1"
    C32 = "C3.2"
    C33 = "C3.3"
    T8 = "T8"
    FIG1 = "FIG1"


ASSIGNMENT_SCHEMA = {
    "type": "object",
    "required": ["capacity", "planes"],
    "properties": {
        "capacity": {"type": "integer", "minimum": 1},
        "planes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "vertices"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "vertices": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["v", "color"],
                            "properties": {
                                "v": {"type": "integer", "minimum": 0},
                                "color": {"type": "integer", "minimum": 0},
                            },
                        },
                    },
                },
            },
        },
    },
}
