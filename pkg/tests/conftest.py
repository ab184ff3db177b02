"""Shared fixtures: the expensive whole-group sweeps, built once per session.

Several test modules consume the same S6 and S7 sweeps; building them
here keeps total runtime down and lets the acceptance tests charge the
construction cost against their stated time budgets.
"""

import time
from dataclasses import dataclass

import pytest

from invarr import verify


@dataclass(frozen=True)
class TimedSweep:
    report: verify.SweepReport
    elapsed: float


@pytest.fixture(scope="session")
def sweep6_oracle() -> TimedSweep:
    """All of S6 at full depth; every record carries the region oracle."""
    start = time.perf_counter()
    report = verify.sweep(6, depth="with_region_oracle")
    return TimedSweep(report, time.perf_counter() - start)


@pytest.fixture(scope="session")
def sweep7_polys() -> TimedSweep:
    """All of S7 with polynomials; the region oracle runs on a 1000-rank sample."""
    start = time.perf_counter()
    report = verify.sweep(7, depth="polys")
    return TimedSweep(report, time.perf_counter() - start)
