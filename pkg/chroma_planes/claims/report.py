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

"""Aggregated claim ledger."""

import typing as t
from dataclasses import dataclass, field

from chroma_planes.claims.verdict import ClaimVerdict
from chroma_planes.constants import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_VIOLATED
from chroma_planes.resource import LocalResource
from chroma_planes.types import ClaimStatus


CORPUS_CELL = "corpus"


@dataclass
class ClaimTally(LocalResource):
    """Verdict counts for one label."""

    holds: int = 0
    violated: int = 0
    inconclusive: int = 0

    def add(self, status: ClaimStatus) -> None:
        """Count one verdict."""
        if status is ClaimStatus.HOLDS:
            self.holds += 1
        elif status is ClaimStatus.VIOLATED:
            self.violated += 1
        else:
            self.inconclusive += 1

    def merge(self, other: "ClaimTally") -> None:
        """Add another tally."""
        self.holds += other.holds
        self.violated += other.violated
        self.inconclusive += other.inconclusive

    @property
    def status(self) -> ClaimStatus:
        """Violated if any instance violated, holds if any held, else inconclusive."""
        if self.violated:
            return ClaimStatus.VIOLATED
        if self.holds:
            return ClaimStatus.HOLDS
        return ClaimStatus.INCONCLUSIVE


@dataclass
class SanityBlock(LocalResource):
    """Unconditional cross-checks run on every instance."""

    checked: int = 0
    skipped: int = 0
    chi_above_hadwiger: t.List[str] = field(default_factory=list)
    palette_bound: t.List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """No sanity violation."""
        return not self.chi_above_hadwiger and not self.palette_bound


@dataclass
class ReportSet(LocalResource):
    """Counts per cell and label, retained witnesses, errors and sanity results."""

    seed: int = 0
    instances: int = 0
    cells: t.List[str] = field(default_factory=list)
    labels: t.List[str] = field(default_factory=list)
    tallies: t.Dict[str, t.Dict[str, ClaimTally]] = field(default_factory=dict)
    summary: t.Dict[str, ClaimStatus] = field(default_factory=dict)
    violations: t.List[ClaimVerdict] = field(default_factory=list)
    errors: t.List[str] = field(default_factory=list)
    sanity: SanityBlock = field(default_factory=SanityBlock)

    def record(self, cell: str, verdict: ClaimVerdict) -> None:
        """Tally a verdict tree under a cell; keep it if anything in it was violated."""
        cell_tallies = self.tallies.setdefault(cell, {})
        for item in verdict.flatten():
            cell_tallies.setdefault(item.label, ClaimTally()).add(item.status)
        if verdict.any_violated:
            self.violations.append(verdict)

    def finalize(self) -> "ReportSet":
        """Compute the per-label summary over all cells."""
        totals: t.Dict[str, ClaimTally] = {label: ClaimTally() for label in self.labels}
        for cell_tallies in self.tallies.values():
            for label, tally in cell_tallies.items():
                totals.setdefault(label, ClaimTally()).merge(tally)
        self.summary = {label: tally.status for label, tally in sorted(totals.items())}
        return self

    @property
    def exit_code(self) -> int:
        """0 clean, 2 violations, 3 when any check errored."""
        if self.errors:
            return EXIT_INCONCLUSIVE
        if self.violations or not self.sanity.ok:
            return EXIT_VIOLATED
        return EXIT_OK

    def table(self) -> str:
        """Human-readable rendering; not a stable format."""
        header = f"{'label':<12}{'cell':<28}{'holds':>8}{'violated':>10}{'inconcl.':>10}"
        lines = [
            f"seed={self.seed} instances={self.instances} "
            f"violations={len(self.violations)} errors={len(self.errors)}",
            header,
            "-" * len(header),
        ]
        for cell in sorted(self.tallies):
            for label, tally in sorted(self.tallies[cell].items()):
                lines.append(
                    f"{label:<12}{cell:<28}{tally.holds:>8}"
                    f"{tally.violated:>10}{tally.inconclusive:>10}"
                )
        lines.append("")
        lines.extend(f"{label:<12}{status.value}" for label, status in self.summary.items())
        lines.append(
            f"sanity: {self.sanity.checked} checked, {self.sanity.skipped} skipped, "
            f"chi>h {len(self.sanity.chi_above_hadwiger)}, "
            f"palette bound {len(self.sanity.palette_bound)}"
        )
        lines.extend(f"error: {error}" for error in self.errors)
        return "\n".join(lines) + "\n"
