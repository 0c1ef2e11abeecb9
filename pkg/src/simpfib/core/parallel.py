"""Run independent check partitions, keeping results in submission order."""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np

logger = logging.getLogger(__name__)

T = TypeVar("T")

JOBS_ENV_VAR = "SIMPFIB_JOBS"


def resolve_jobs(requested: Optional[int] = None) -> int:
    """Worker count: $SIMPFIB_JOBS, then ``requested``, then the CPU count."""
    env_value = os.environ.get(JOBS_ENV_VAR)
    if env_value:
        try:
            jobs = int(env_value)
        except ValueError:
            logger.warning("Ignoring non-integer %s=%r", JOBS_ENV_VAR, env_value)
        else:
            return max(1, jobs)
    if requested is not None:
        return max(1, requested)
    return os.cpu_count() or 1


def run_partitions(tasks: Sequence[Callable[[], T]], jobs: int = 1) -> List[T]:
    """Call every task and return the results in the order the tasks were given."""
    if jobs <= 1 or len(tasks) <= 1:
        return [task() for task in tasks]
    logger.debug("Running %d partitions on %d workers", len(tasks), jobs)
    with ThreadPoolExecutor(max_workers=min(jobs, len(tasks))) as executor:
        futures = [executor.submit(task) for task in tasks]
        return [future.result() for future in futures]


def partition_generators(seed: int, count: int) -> List[np.random.Generator]:
    """Independent generators, one per partition, derived from a single seed."""
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(count)]
