import math
from typing import List

import numpy as np

from pwlab.config import RunConfig
from pwlab.core import SigmaBand, GridSpec, SpectralFunction, make_grid, random_smooth
from pwlab.operators import AffineSymbol

PI_BAND = SigmaBand(math.pi)
UNIT_BAND = SigmaBand(1.)

# Slopes and shifts covering translations, reflections and contractions of both orientations
SLOPES = (1., -1., .5, -.5)
SHIFTS = (0j, 1 + 0j, 1j, 1 + 1j)
SYMBOLS = [AffineSymbol(a, b) for a in SLOPES for b in SHIFTS]


def random_functions(grid: GridSpec, count: int, seed: int = 1729) -> List[SpectralFunction]:
    rng = np.random.default_rng(seed)
    return [random_smooth(grid, rng) for _ in range(count)]


def exponential(grid: GridSpec, frequency: float) -> SpectralFunction:
    return SpectralFunction.from_callable(grid, lambda t: np.exp(1j * frequency * np.asarray(t, dtype=float)))


def relative_error(actual: SpectralFunction, expected: SpectralFunction) -> float:
    return (actual - expected).norm() / expected.norm()


def make_config(sigma: float, a: float, b: complex = 0j, **options) -> RunConfig:
    """A validated configuration with small random batteries, fast enough for unit tests."""
    raw = {'sigma': sigma, 'a': a, 'b': b, 'pairs': 4, 'lattice': 3, **options}
    config = RunConfig(raw)
    config.validate()
    return config


PI_GRID = make_grid(PI_BAND, 256)
UNIT_GRID = make_grid(UNIT_BAND, 256)
