# suites/runner.py
import logging
from typing import Callable

import anyio
import anyio.to_thread

from environment import get_settings
from errors import PreconditionError, SWRError, UsageError
from serialization.documents import SuiteReport
from suites.cf_suites import cf_suite, col0_suite, egf_suite, hankel_suite
from suites.options import SuiteOptions
from suites.positivity_suites import (
    convolution_suite,
    interlace_suite,
    lcx3_suite,
    logconcave_suite,
    roots_suite,
    sm_suite,
    tp_suite,
    turan_suite,
)
from suites.triangle_suites import explicit_suite, factorization_suite, oracle_suite, production_suite, recurrence_suite

Suite = Callable[[SuiteOptions], SuiteReport]

# deterministic order used by "all" and by the report
SUITES: dict[str, Suite] = {
    "recurrence": recurrence_suite,
    "explicit": explicit_suite,
    "production": production_suite,
    "factorization": factorization_suite,
    "cf": cf_suite,
    "hankel": hankel_suite,
    "egf": egf_suite,
    "oracle": oracle_suite,
    "roots": roots_suite,
    "interlace": interlace_suite,
    "logconcave": logconcave_suite,
    "turan": turan_suite,
    "tp": tp_suite,
    "sm": sm_suite,
    "lcx3": lcx3_suite,
    "convolution": convolution_suite,
    "col0": col0_suite,
}

ALL = "all"


def resolve_suites(name: str) -> list[str]:
    if name == ALL:
        return list(SUITES)
    if name not in SUITES:
        raise UsageError(f"Unknown suite '{name}'; expected one of {', '.join(SUITES)} or {ALL}")
    return [name]


async def run_suites(names: list[str], options: SuiteOptions, skip_inapplicable: bool = False) -> list[SuiteReport]:
    """
    Run the named suites concurrently, at most SWR_MAX_THREADS at a time.

    Reports come back in the order of `names`. A suite that raises a usage
    error does not stop the others; the error of the first such suite in
    `names` order is re-raised once all have finished. With
    `skip_inapplicable`, a precondition error (a numeric-only suite run on
    symbolic parameters, say) is reported as a skipped suite instead.
    """
    limiter = anyio.CapacityLimiter(get_settings().max_threads)
    reports: list[SuiteReport | None] = [None] * len(names)
    errors: list[SWRError | None] = [None] * len(names)

    async def run_one(index: int, name: str):
        # debug
        logging.debug(f"Starting suite '{name}'")
        try:
            reports[index] = await anyio.to_thread.run_sync(SUITES[name], options, limiter=limiter)
        except PreconditionError as e:
            if not skip_inapplicable:
                errors[index] = e
                return
            logging.debug(f"Suite '{name}' skipped: {e}")
            reports[index] = SuiteReport(suite=name, passed=True, skipped=True, detail=str(e))
            return
        except SWRError as e:
            logging.debug(f"Suite '{name}' stopped: {e}")
            errors[index] = e
            return
        logging.debug(f"Suite '{name}' {'passed' if reports[index].passed else 'failed'}")

    async with anyio.create_task_group() as tg:
        for index, name in enumerate(names):
            tg.start_soon(run_one, index, name)

    for error in errors:
        if error is not None:
            raise error
    return reports
