"""
This module implements tracker classes that keep track of the outcome of the checks run by
the verification suites.
"""

from __future__ import annotations

import logging
import time
from collections import defaultdict
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional

import pandas as pd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckRecord:
    """
    Outcome of a single check.

    `proven` marks checks of statements that are theorems: a failure there means the
    implementation is wrong. Conjecture checks only collect evidence.
    """

    suite: str
    name: str
    passed: bool
    detail: str = ""
    proven: bool = True


class Tracker:
    """
    Base class for all trackers. Defines the two interfacing methods `log_objective` and `finalize`.
    """

    def log_objective(self, obj=None):
        """
        Logs the provided object

        Args:
            obj (Any, optional): Object to be logged

        Raises:
            NotImplementedError: Override this method to provide a functional behavior.
        """
        raise NotImplementedError("Please override this method to provide functional behavior")

    def finalize(self, obj):
        pass


class CheckTracker(Tracker):
    """
    Logs `CheckRecord`s and the time span over which they were made. Invoking `finalize()` fixes
    the elapsed time; the tracker accepts no records afterwards.

    Passing checks are aggregated per (suite, name); only failures keep their individual details,
    so exhaustive sweeps over thousands of words stay small.
    """

    def __init__(self, max_failures_per_check: int = 20):
        self.max_failures_per_check = max_failures_per_check
        self.counts: Dict[tuple, List[int]] = defaultdict(lambda: [0, 0])
        self.proven: Dict[tuple, bool] = {}
        self.failures: List[CheckRecord] = []
        self.start: Optional[float] = None
        self.end: Optional[float] = None
        self.finalized = False

    def log_objective(self, obj: Optional[CheckRecord] = None):
        """
        Log one check outcome.

        Args:
            obj (CheckRecord): the outcome to record
        """
        if obj is None:
            raise ValueError("CheckTracker needs a CheckRecord to log")
        if self.finalized:
            raise RuntimeError("the tracker was finalized and accepts no further records")
        key = (obj.suite, obj.name)
        self.end = time.time()
        if self.start is None:
            self.start = self.end
        self.counts[key][0] += 1
        self.proven[key] = obj.proven
        if not obj.passed:
            self.counts[key][1] += 1
            if self.counts[key][1] <= self.max_failures_per_check:
                self.failures.append(obj)
            level = logging.WARNING if obj.proven else logging.INFO
            logger.log(level, f"[{obj.suite}] {obj.name} failed: {obj.detail}")

    def check(self, suite: str, name: str, passed: bool, detail: str = "", proven: bool = True) -> bool:
        """Shorthand for `log_objective(CheckRecord(...))`; returns `passed`."""
        self.log_objective(CheckRecord(suite, name, bool(passed), detail, proven))
        return bool(passed)

    def finalize(self, reference: Optional[float] = None):
        """
        Stop accepting records. The elapsed time is measured from the first record, or from
        `reference` if given.
        """
        if reference is not None:
            self.start = reference
        self.finalized = True

    @property
    def elapsed(self) -> float:
        if self.start is None or self.end is None:
            return 0.0
        return self.end - self.start

    @property
    def violated_theorems(self) -> List[CheckRecord]:
        return [record for record in self.failures if record.proven]

    @property
    def passed(self) -> bool:
        """True if no check of a proven statement failed."""
        return all(not self.proven[key] or failed == 0 for key, (_, failed) in self.counts.items())

    def rows(self) -> List[Dict[str, object]]:
        """One record per (suite, check) with the number of evaluations and failures."""
        return [
            {
                "suite": suite,
                "check": name,
                "kind": "theorem" if self.proven[(suite, name)] else "conjecture (evidence, not proof)",
                "evaluated": evaluated,
                "failed": failed,
                "status": "pass" if failed == 0 else "FAIL",
            }
            for (suite, name), (evaluated, failed) in self.counts.items()
        ]

    def as_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows(), columns=["suite", "check", "kind", "evaluated", "failed", "status"])

    def asdict(self, time_key="time"):
        """
        Output the content of the tracker as a single dictionary.

        Args:
            time_key (str, optional): Name of the key to save the elapsed time as. Defaults to "time".
                Pass None to leave the elapsed time out, e.g. for reproducible reports.

        Returns:
            dict: per-check summary, recorded failures and the elapsed time in seconds
        """
        summary = {
            "checks": self.rows(),
            "failures": [asdict(record) for record in self.failures],
            "passed": self.passed,
        }
        if time_key is not None:
            summary[time_key] = round(self.elapsed, 3)
        return summary
