from __future__ import annotations

import cmath
import math
from typing import List

import numpy as np

from pwlab.core.band import GridSpec, SigmaBand
from pwlab.core.functions import DEFAULT_GROWTH, INV_SQRT_2PI, SpectralFunction, eval_entire, inner_product
from pwlab.utils import InvalidArgumentError

# Below this distance from the removable singularity, kernel_value switches to its Taylor expansion
SINGULARITY_THRESHOLD = 1e-8


class KernelPoint:
    """The parameter ``w`` of the reproducing kernel ``k_w``, whose spectral side is ``e^{-i conj(w) t}``."""

    __slots__ = ('w',)

    def __init__(self, w: complex):
        w = complex(w)
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            raise InvalidArgumentError(f'Kernel point must be finite, got {w}')
        self.w = w

    def spectral_exponent(self) -> complex:
        """The exponent ``c`` such that the spectral kernel is ``e^{c t}``."""
        return -1j * self.w.conjugate()

    def __eq__(self, other):
        return type(self) == type(other) and self.w == other.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return f'<KernelPoint w={self.w!r}>'


def kernel_value(w: KernelPoint, z: complex, band: SigmaBand) -> complex:
    """``k_w(z) = sin(sigma (z - conj(w))) / (pi (z - conj(w)))``, with the limit ``sigma / pi`` at ``z = conj(w)``."""
    sigma = band.sigma
    u = complex(z) - w.w.conjugate()
    if abs(u) < SINGULARITY_THRESHOLD:
        x2 = (sigma * u) ** 2
        return sigma / math.pi * (1 - x2 / 6 + x2 * x2 / 120)
    return cmath.sin(sigma * u) / (math.pi * u)


def kernel_spectral(w: KernelPoint, grid: GridSpec) -> SpectralFunction:
    exponent = w.spectral_exponent()
    return SpectralFunction.from_callable(grid, lambda t: np.exp(exponent * np.asarray(t, dtype=float)))


def verify_reproducing(F: SpectralFunction, w: KernelPoint, growth: float = DEFAULT_GROWTH) -> float:
    """
    Residual of the reproducing identity ``f(w) = <f, k_w>``, read on the spectral side as
    ``|(1 / sqrt(2 pi)) <F, k^_w> - f(w)|``.

    :raises EvaluationOutOfRangeError: if ``w`` exceeds the growth bound
    """
    value = eval_entire(F, w.w, growth)
    pairing = INV_SQRT_2PI * inner_product(F, kernel_spectral(w, F.grid))
    return abs(pairing - value)


def kernel_lattice(size: int = 5, half_width: float = 2., half_height: float = 1.) -> List[KernelPoint]:
    """A ``size x size`` lattice of kernel points ``x + iy`` with ``|x| <= half_width``, ``|y| <= half_height``."""
    return [KernelPoint(complex(x, y))
            for y in np.linspace(-half_height, half_height, size)
            for x in np.linspace(-half_width, half_width, size)]
