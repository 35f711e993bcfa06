"""Zero-set and density conditions on point sequences: Blaschke-type sums, Carleman's completeness criterion."""
from __future__ import annotations

import enum
import logging
import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from pwlab.core.band import SigmaBand
from pwlab.utils import InvalidArgumentError

logger = logging.getLogger(__name__)

# Relative variation allowed between the tail minima of the last two dyadic windows
STABILITY = 0.1
# Margins within this fraction of sigma / pi count as zero
MARGIN_TOLERANCE = 1e-12


class ExponentialSequence:
    """A finite list of frequencies ``lambda_n`` of the exponential system ``e^{i lambda_n t}``."""

    __slots__ = ('lambdas',)

    def __init__(self, lambdas: Iterable[float]):
        lambdas = np.array(list(lambdas), dtype=float)
        if lambdas.ndim != 1 or lambdas.size < 2:
            raise InvalidArgumentError(f'An exponential sequence needs at least 2 frequencies, got {lambdas.size}')
        if not np.all(np.isfinite(lambdas)):
            raise InvalidArgumentError('Frequencies must be finite')
        lambdas.setflags(write=False)
        self.lambdas = lambdas

    @classmethod
    def arithmetic(cls, step: float, count: int, start: int = 1) -> ExponentialSequence:
        """``lambda_n = step * n`` for ``n = start .. start + count - 1``."""
        return cls(step * np.arange(start, start + count))

    def __len__(self):
        return self.lambdas.size

    def __repr__(self):
        return f'<ExponentialSequence of {len(self)} frequencies>'


class BlaschkeEstimate(NamedTuple):
    #: Partial sum of ``|Im w_n| / (1 + |w_n|^2)``
    total: float
    #: Growth of the partial sums per unit of ``log n`` over the last dyadic window, ``~0`` for convergent sums
    log_slope: float


def blaschke_sum(points: Sequence[complex], horizon: int) -> BlaschkeEstimate:
    """
    Partial Blaschke-type sum ``sum_{n < horizon} |Im w_n| / (1 + |w_n|^2)`` with its growth against ``log n``.

    Zero sets of nonzero functions in the space keep this sum finite; a sum growing like ``log n`` is evidence that
    the points cannot all be zeros of one function.
    """
    if horizon < 1 or horizon > len(points):
        raise InvalidArgumentError(f'Horizon {horizon} must be between 1 and {len(points)}')
    w = np.asarray(points[:horizon], dtype=complex)
    terms = np.abs(w.imag) / (1 + np.abs(w) ** 2)
    partial = np.cumsum(terms)
    total = float(partial[-1])
    half = horizon // 2
    if half < 1 or horizon < 4:
        return BlaschkeEstimate(total, 0.)
    slope = (partial[-1] - partial[half - 1]) / (math.log(horizon) - math.log(half))
    return BlaschkeEstimate(total, float(slope))


class CarlemanStatus(enum.Enum):
    SATISFIED = 'satisfied'
    VIOLATED = 'violated'
    INCONCLUSIVE = 'inconclusive'


class CarlemanResult(NamedTuple):
    status: CarlemanStatus
    #: ``min n / lambda_n`` over the tail window minus ``sigma / pi``
    margin: float
    #: Minimum of ``n / lambda_n`` over the window before the tail
    previous_window: float


def carleman_check(seq: ExponentialSequence, band: SigmaBand) -> CarlemanResult:
    """
    Tests ``liminf n / lambda_n > sigma / pi``, which makes ``{e^{i lambda_n t}}`` complete in ``L^2[-sigma, sigma]``.

    Frequencies are sorted and counted from ``n = 1``; duplicates are dropped. The liminf is approximated by the
    minimum over the tail window ``[len/2, len)``; a positive margin is only reported as satisfied when it agrees with
    the previous dyadic window ``[len/4, len/2)`` to within 10%. Fewer than 4 distinct frequencies do not fill both
    windows and are always inconclusive.

    :raises InvalidArgumentError: for nonpositive frequencies
    """
    lambdas = np.unique(seq.lambdas)  # Sorted, duplicates removed
    if lambdas[0] <= 0:
        raise InvalidArgumentError(f'Frequencies must be positive, got {lambdas[0]}')
    count = lambdas.size
    ratios = np.arange(1, count + 1) / lambdas
    tail = float(ratios[count // 2:].min())
    critical = band.sigma / math.pi
    margin = tail - critical
    if count < 4:
        logger.debug('Carleman check on %d frequencies: too few for two windows', count)
        return CarlemanResult(CarlemanStatus.INCONCLUSIVE, margin, float(ratios.min()))
    previous = float(ratios[count // 4:count // 2].min())
    if margin <= MARGIN_TOLERANCE * critical:
        status = CarlemanStatus.VIOLATED
    elif abs(tail - previous) <= STABILITY * tail:
        status = CarlemanStatus.SATISFIED
    else:
        status = CarlemanStatus.INCONCLUSIVE
    logger.debug('Carleman check on %d frequencies: margin %.6g, %s', count, margin, status.value)
    return CarlemanResult(status, margin, previous)


def multiplier_fold_fraction(band: SigmaBand, b: complex, samples: int = 2048) -> float:
    """
    The fraction of ``[-sigma, sigma]`` on which ``e^{ibt}`` takes a value it also takes at a clearly distinct point.

    The band is sampled uniformly and compared through ``log e^{ibt} = ibt``: two samples farther apart than
    ``sigma / 32`` count as folded when their moduli ``-t Im b`` and their phases ``t Re b`` (mod ``2 pi``) are each
    within one sampling step. Injective multipliers fold only at isolated points, giving a fraction of a few samples.
    """
    b = complex(b)
    t = np.linspace(-band.sigma, band.sigma, samples)
    modulus, phase = -b.imag * t, b.real * t
    # Both are linear in t, so every sampling step has the same length
    slack = 1 + 1e-9
    modulus_step = abs(modulus[1] - modulus[0]) * slack
    phase_step = abs(phase[1] - phase[0]) * slack
    gap = int(math.ceil(samples / 64))
    index = np.arange(samples)
    folded = np.zeros(samples, dtype=bool)
    for start in range(0, samples, 512):
        rows = slice(start, min(start + 512, samples))
        turns = phase[rows, None] - phase[None, :]
        turns = np.abs(turns - 2 * math.pi * np.round(turns / (2 * math.pi)))
        close = (np.abs(modulus[rows, None] - modulus[None, :]) <= modulus_step) & (turns <= phase_step)
        distant = np.abs(index[rows, None] - index[None, :]) >= gap
        folded[rows] = np.any(close & distant, axis=1)
    return float(folded.mean())
