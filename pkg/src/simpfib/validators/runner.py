"""Turning law checks into report records."""

import logging
import time
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from simpfib.core.enum import CheckStatus
from simpfib.core.errors import SimpfibError
from simpfib.core.parallel import run_partitions
from simpfib.dtos.report import CheckRecord, Report

logger = logging.getLogger(__name__)

# A check yields one outcome per case examined: None for a pass, a description
# of the counterexample for a failure.
Outcomes = Iterable[Optional[str]]
CheckResult = Tuple[int, Optional[str]]


def scan(outcomes: Outcomes) -> CheckResult:
    """Count cases up to and including the first failure."""
    checked = 0
    for outcome in outcomes:
        checked += 1
        if outcome is not None:
            return checked, outcome
    return checked, None


def run_check(name: str, dimension: int, outcomes: Callable[[], Outcomes]) -> CheckRecord:
    """Run one check; engine errors raised inside it become failure records."""
    start = time.perf_counter()
    try:
        checked, counterexample = scan(outcomes())
    except SimpfibError as exc:
        checked, counterexample = 0, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start

    status = CheckStatus.PASS if counterexample is None else CheckStatus.FAIL
    if status == CheckStatus.FAIL:
        logger.warning("Check %s failed in dimension %d: %s", name, dimension, counterexample)
    return CheckRecord(
        name=name,
        dimension=dimension,
        status=status,
        counterexample=counterexample,
        detail=f"{checked} cases",
        elapsed=round(elapsed, 6),
        checked=checked,
    )


def expect(condition: bool, describe: Callable[[], str]) -> Optional[str]:
    """Outcome helper: ``describe`` is only evaluated on failure."""
    return None if condition else describe()


def run_by_dimension(
    suite: str,
    dimensions: Sequence[int],
    records_for: Callable[[int], List[CheckRecord]],
    jobs: int = 1,
) -> Report:
    """One partition per dimension, merged in dimension order."""
    tasks = [lambda n=n: records_for(n) for n in dimensions]
    report = Report(suite=suite)
    for records in run_partitions(tasks, jobs):
        report.extend(records)
    return report
