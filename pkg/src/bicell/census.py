# -*- coding: utf-8 -*-
"""Census of closed-form polynomials across every instance up to a given n."""

import logging
import time
from functools import partial

from bicell.bicellular import (
    BicellularInstance,
    genus_distribution,
    poly_closed,
    valid_instances,
)
from bicell.parallel import ordered_map
from bicell.reporting import format_genus_counts
from bicell.schemas import CensusRow, Method
from bicell.zeros import imaginary_axis_check, log_concavity_check

logger = logging.getLogger(__name__)


def census_row(inst: BicellularInstance, timings: bool = False) -> CensusRow:
    """Compute one census row: polynomial, genus counts and both analytic checks.

    Args:
        inst: Closed-form instance.
        timings: Record wall time; off by default so output is reproducible.

    Returns:
        CensusRow for the instance.
    """
    started = time.perf_counter()
    poly = poly_closed(inst)
    genus = genus_distribution(inst, poly)
    imaginary = imaginary_axis_check(poly)
    concave = log_concavity_check(poly)
    elapsed = round((time.perf_counter() - started) * 1000)
    return CensusRow(
        n=inst.n,
        p=inst.p,
        mu=str(inst.mu),
        poly=str(poly),
        genus_counts=format_genus_counts(genus.counts),
        imag_axis=imaginary,
        log_concave=concave,
        method=Method.CLOSED,
        ms=elapsed if timings else None,
    )


def build_census(max_n: int, threads: int = 1, timings: bool = False) -> list[CensusRow]:
    """Rows for every closed-form instance with n <= max_n, ordered by n, p, then mu."""
    instances = list(valid_instances(max_n))
    logger.debug("Census over %d instances with n <= %d", len(instances), max_n)
    return ordered_map(partial(census_row, timings=timings), instances, threads)
