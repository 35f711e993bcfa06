from __future__ import annotations

import math
from functools import lru_cache
from typing import Tuple

import numpy as np

from pwlab.utils import InvalidArgumentError

# Rows of evaluation points processed at once by the barycentric interpolant, bounds the temporary matrix size
_INTERPOLATION_CHUNK = 2048


class SigmaBand:
    """
    The half-bandwidth ``sigma > 0`` of the Paley-Wiener space, i.e. the spectral interval ``[-sigma, sigma]``.

    :param sigma: Spectral half-width in radians per unit length, must be positive and finite.
    """

    __slots__ = ('sigma',)

    def __init__(self, sigma: float):
        sigma = float(sigma)
        if not (sigma > 0 and math.isfinite(sigma)):
            raise InvalidArgumentError(f'Band half-width sigma must be positive and finite, got {sigma}')
        self.sigma = sigma

    @property
    def critical_shift(self) -> float:
        """The translation length ``pi / sigma`` at which ``e^{ibt}`` stops being injective on the band."""
        return math.pi / self.sigma

    def __eq__(self, other):
        return type(self) == type(other) and self.sigma == other.sigma

    def __hash__(self):
        return hash(self.sigma)

    def __repr__(self):
        return f'<SigmaBand sigma={self.sigma!r}>'


@lru_cache(maxsize=64)
def gauss_legendre_reference(n_nodes: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Gauss-Legendre nodes, weights and barycentric weights on ``[-1, 1]``, symmetrized so that ``-x_k`` is exactly a
    node. The barycentric weights use the closed form ``(-1)^j sqrt((1 - x_j^2) w_j)``.
    """
    nodes, weights = np.polynomial.legendre.leggauss(n_nodes)
    nodes = (nodes - nodes[::-1]) / 2
    weights = (weights + weights[::-1]) / 2
    bary = (-1.) ** np.arange(n_nodes) * np.sqrt((1 - nodes ** 2) * weights)
    for array in (nodes, weights, bary):
        array.setflags(write=False)
    return nodes, weights, bary


class GridSpec:
    """
    A Gauss-Legendre discretization of ``L^2[-sigma, sigma]``.

    Grids are identified by value: two grids are compatible if and only if their ``sigma`` and ``n_nodes`` match.
    Use :func:`make_grid` to construct one.
    """

    __slots__ = ('band', 'n_nodes', 'nodes', 'weights', '_bary')

    def __init__(self, band: SigmaBand, n_nodes: int):
        if n_nodes < 2:
            raise InvalidArgumentError(f'A grid needs at least 2 nodes, got {n_nodes}')
        reference_nodes, reference_weights, bary = gauss_legendre_reference(n_nodes)
        self.band = band
        self.n_nodes = n_nodes
        self.nodes = band.sigma * reference_nodes
        self.weights = band.sigma * reference_weights
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)
        self._bary = bary

    @property
    def sigma(self) -> float:
        return self.band.sigma

    def interpolate(self, values: np.ndarray, points: np.ndarray) -> np.ndarray:
        """
        Evaluates the barycentric Lagrange interpolant of ``values`` (samples at this grid's nodes) at ``points``.

        Points coinciding with a node return that node's value exactly.
        """
        points = np.asarray(points, dtype=float)
        result = np.empty(points.shape, dtype=complex)
        flat_points = points.ravel()
        flat_result = result.reshape(-1)
        for start in range(0, flat_points.size, _INTERPOLATION_CHUNK):
            chunk = flat_points[start:start + _INTERPOLATION_CHUNK]
            diff = chunk[:, None] - self.nodes[None, :]
            exact_rows, exact_cols = np.nonzero(diff == 0)
            diff[exact_rows, exact_cols] = 1.  # Placeholder, overwritten below
            kernel = self._bary[None, :] / diff
            chunk_result = (kernel @ values) / kernel.sum(axis=1)
            chunk_result[exact_rows] = values[exact_cols]
            flat_result[start:start + chunk.size] = chunk_result
        return result

    def __eq__(self, other):
        return type(self) == type(other) and self.band == other.band and self.n_nodes == other.n_nodes

    def __hash__(self):
        return hash((self.band, self.n_nodes))

    def __repr__(self):
        return f'<GridSpec sigma={self.sigma!r}, n_nodes={self.n_nodes}>'


def make_grid(band: SigmaBand, n_nodes: int) -> GridSpec:
    """
    Maps the ``n_nodes``-point Gauss-Legendre rule affinely from ``[-1, 1]`` to ``[-sigma, sigma]``.

    :raises InvalidArgumentError: if ``n_nodes < 2``
    """
    return GridSpec(band, n_nodes)


def gauss_legendre_panel(lower: float, upper: float, n_nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on an arbitrary interval ``[lower, upper]``."""
    reference_nodes, reference_weights, _ = gauss_legendre_reference(n_nodes)
    half = (upper - lower) / 2
    middle = (upper + lower) / 2
    return middle + half * reference_nodes, half * reference_weights
