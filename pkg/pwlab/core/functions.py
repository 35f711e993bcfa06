from __future__ import annotations

import csv
import logging
import math
from typing import Callable, Iterable, List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np

from pwlab.core.band import GridSpec, gauss_legendre_panel
from pwlab.utils import EvaluationOutOfRangeError, IncompatibleGridsError, InvalidArgumentError

logger = logging.getLogger(__name__)

#: Default growth bound for complex evaluation, as a multiple of ``1 / sigma``: ``|Im z| <= 10 / sigma``
DEFAULT_GROWTH = 10.

# Jump points closer than this (relative to sigma) are merged into one panel boundary
_BREAK_MERGE = 1e-12

INV_SQRT_2PI = 1 / math.sqrt(2 * math.pi)

Continuation = Callable[[np.ndarray], np.ndarray]


class SpectralFunction:
    """
    Samples of ``F`` in ``L^2[-sigma, sigma]`` at the nodes of a Gauss-Legendre grid, representing ``f = F^{-1} F``
    in the Paley-Wiener space.

    Besides the samples, the function knows where it can be evaluated exactly:

    * ``support`` - the half-width ``s``; ``F`` vanishes outside ``(-s, s)``
    * ``breaks`` - half-widths inside the band where ``F`` may jump (always includes ``support`` if ``s < sigma``)
    * a continuation evaluating ``F`` at arbitrary points of ``(-s, s)``, used for resampling ``F(t / a)`` and
      ``F(a t)`` and for quadrature over panels between jumps. Without an explicit continuation,
      the barycentric interpolant of the samples is used.

    Instances are immutable; all operators return new functions.

    :param grid: The grid the samples live on.
    :param values: Samples at ``grid.nodes``.
    :param support: Support half-width, defaults to the full band.
    :param breaks: Half-widths where the function may be discontinuous.
    :param continuation: Callable evaluating the function inside its support, vectorized over a float array.
    """

    __slots__ = ('grid', 'values', 'support', 'breaks', '_continuation')

    def __init__(self, grid: GridSpec, values: Union[Sequence[complex], np.ndarray], *,
                 support: Optional[float] = None, breaks: Iterable[float] = (),
                 continuation: Optional[Continuation] = None):
        values = np.array(values, dtype=complex)
        if values.shape != (grid.n_nodes,):
            raise InvalidArgumentError(f'Expected {grid.n_nodes} values for {grid!r}, got shape {values.shape}')
        values.setflags(write=False)
        sigma = grid.sigma
        support = sigma if support is None else min(float(support), sigma)
        if support <= 0:
            raise InvalidArgumentError(f'Support half-width must be positive, got {support}')
        all_breaks = {s for s in breaks if 0 < s < sigma * (1 - _BREAK_MERGE)}
        if support < sigma * (1 - _BREAK_MERGE):
            all_breaks.add(support)
        if continuation is None and all_breaks:
            raise InvalidArgumentError('A function with jumps inside the band needs an explicit continuation')
        self.grid = grid
        self.values = values
        self.support = support
        self.breaks: Tuple[float, ...] = tuple(sorted(all_breaks))
        self._continuation = continuation

    @classmethod
    def from_callable(cls, grid: GridSpec, func: Continuation) -> SpectralFunction:
        """Samples a smooth function given in closed form; the closed form is kept as the exact continuation."""
        return cls(grid, func(grid.nodes), continuation=func)

    @property
    def band(self):
        return self.grid.band

    @property
    def is_smooth(self) -> bool:
        """True if no jump lies inside the band, i.e. the plain grid rule integrates this function accurately."""
        return not self.breaks

    def sample(self, points: np.ndarray) -> np.ndarray:
        """
        Evaluates the function at arbitrary points, returning zero outside ``(-support, support)``.
        Points exactly at a truncated support edge count as outside (the indicator is of an open interval).
        """
        points = np.asarray(points, dtype=float)
        result = np.zeros(points.shape, dtype=complex)
        if self.support < self.grid.sigma:
            inside = np.abs(points) < self.support
        else:
            inside = np.abs(points) <= self.grid.sigma
        if not inside.any():
            return result
        if self._continuation is None:
            result[inside] = self.grid.interpolate(self.values, points[inside])
        else:
            result[inside] = self._continuation(points[inside])
        return result

    def norm(self) -> float:
        return math.sqrt(max(inner_product(self, self).real, 0.))

    def _combine(self, other: SpectralFunction, sign: float) -> SpectralFunction:
        check_same_grid(self, other)
        first, second = self, other
        return SpectralFunction(
            self.grid, first.values + sign * second.values,
            support=max(first.support, second.support), breaks=first.breaks + second.breaks,
            continuation=None if first.is_smooth and second.is_smooth and first._continuation is None
            and second._continuation is None else (lambda t: first.sample(t) + sign * second.sample(t)))

    def __add__(self, other: SpectralFunction) -> SpectralFunction:
        return self._combine(other, 1.)

    def __sub__(self, other: SpectralFunction) -> SpectralFunction:
        return self._combine(other, -1.)

    def __mul__(self, scalar: complex) -> SpectralFunction:
        inner = self
        return SpectralFunction(self.grid, scalar * self.values, support=self.support, breaks=self.breaks,
                                continuation=None if self._continuation is None
                                else (lambda t: scalar * inner.sample(t)))

    __rmul__ = __mul__

    def __neg__(self) -> SpectralFunction:
        return self * -1

    def __repr__(self):
        support = '' if self.support >= self.grid.sigma else f', support={self.support:.6g}'
        return f'<SpectralFunction sigma={self.grid.sigma!r}, n_nodes={self.grid.n_nodes}{support}>'


def check_same_grid(*functions: SpectralFunction) -> GridSpec:
    grid = functions[0].grid
    for function in functions[1:]:
        if function.grid != grid:
            raise IncompatibleGridsError(f'Spectral functions live on different grids: {grid!r} and {function.grid!r}')
    return grid


def quadrature_frame(functions: Sequence[SpectralFunction]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Builds a quadrature rule on which all ``functions`` are smooth, and samples them on it.

    Returns ``(nodes, weights, samples)`` with ``samples[i]`` the values of ``functions[i]`` at ``nodes``.
    When no function jumps inside the band, this is the grid itself and the stored values are used as they are.
    Otherwise the band is cut into panels at every jump point (mirrored at ``+-s``), each panel integrated with
    ``n_nodes`` Gauss-Legendre nodes; panels beyond the widest support are skipped.
    """
    grid = check_same_grid(*functions)
    sigma = grid.sigma
    cuts = sorted({s for function in functions for s in function.breaks})
    if not cuts:
        return grid.nodes, grid.weights, np.array([function.values for function in functions])

    merged: List[float] = []
    for cut in cuts:
        if not merged or cut - merged[-1] > _BREAK_MERGE * sigma:
            merged.append(cut)
    reach = max(function.support for function in functions)
    edges = [s for s in merged if s < reach] + [min(reach, sigma)]
    panels = [(-edges[0], edges[0])]
    for inner, outer in zip(edges[:-1], edges[1:]):
        panels.append((inner, outer))
        panels.append((-outer, -inner))
    logger.debug('Composite quadrature with %d panels for %d functions', len(panels), len(functions))

    parts = [gauss_legendre_panel(lower, upper, grid.n_nodes) for lower, upper in panels]
    nodes = np.concatenate([part[0] for part in parts])
    weights = np.concatenate([part[1] for part in parts])
    samples = np.array([function.sample(nodes) for function in functions])
    return nodes, weights, samples


def inner_product(F: SpectralFunction, G: SpectralFunction) -> complex:
    """
    The ``L^2[-sigma, sigma]`` inner product, linear in the first and conjugate-linear in the second argument.

    For smooth functions this is exactly ``sum_k weights_k F_k conj(G_k)``; functions with jumps inside the band are
    integrated panel-wise (see :func:`quadrature_frame`).

    :raises IncompatibleGridsError: if the functions live on different grids
    """
    _, weights, samples = quadrature_frame((F, G))
    return complex(np.sum(weights * samples[0] * np.conj(samples[1])))


def growth_bound(grid: GridSpec, growth: float = DEFAULT_GROWTH) -> float:
    return growth / grid.sigma


def eval_entire(F: SpectralFunction, z: complex, growth: float = DEFAULT_GROWTH) -> complex:
    """
    Evaluates ``f(z) = (1 / sqrt(2 pi)) * integral_{-sigma}^{sigma} F(t) e^{izt} dt`` by quadrature.

    :param growth: Evaluation is refused when ``|Im z| > growth / sigma``.
    :raises EvaluationOutOfRangeError: if ``z`` exceeds the growth bound
    """
    z = complex(z)
    bound = growth_bound(F.grid, growth)
    if abs(z.imag) > bound:
        raise EvaluationOutOfRangeError(f'|Im z| = {abs(z.imag):.6g} exceeds the growth bound {bound:.6g}')
    nodes, weights, samples = quadrature_frame((F,))
    return complex(INV_SQRT_2PI * np.sum(weights * samples[0] * np.exp(1j * z * nodes)))


def random_smooth(grid: GridSpec, rng: np.random.Generator, terms: int = 6) -> SpectralFunction:
    """
    A random smooth test function ``sum_k c_k e^{i mu_k t}`` with complex Gaussian coefficients and frequencies in
    ``[-4 pi / sigma, 4 pi / sigma]``, stored as samples only (resampling goes through barycentric interpolation).
    """
    frequencies = rng.uniform(-4 * math.pi / grid.sigma, 4 * math.pi / grid.sigma, size=terms)
    coefficients = rng.normal(size=terms) + 1j * rng.normal(size=terms)
    values = np.exp(1j * np.outer(grid.nodes, frequencies)) @ coefficients
    return SpectralFunction(grid, values)


def write_csv(F: SpectralFunction, stream: TextIO):
    """Writes the samples as ``node,re,im`` rows with a header."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(('node', 're', 'im'))
    for node, value in zip(F.grid.nodes, F.values):
        writer.writerow((repr(float(node)), repr(float(value.real)), repr(float(value.imag))))


def read_csv(grid: GridSpec, stream: TextIO) -> SpectralFunction:
    """
    Reads samples written by :func:`write_csv`; the nodes must match ``grid`` to within ``1e-12`` relative.

    :raises IncompatibleGridsError: if the file was written on a different grid
    """
    reader = csv.DictReader(stream)
    rows = list(reader)
    if len(rows) != grid.n_nodes:
        raise IncompatibleGridsError(f'File has {len(rows)} samples, {grid!r} needs {grid.n_nodes}')
    try:
        nodes = np.array([float(row['node']) for row in rows])
        values = np.array([complex(float(row['re']), float(row['im'])) for row in rows])
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidArgumentError(f'Malformed spectral CSV: {e}')
    if not np.allclose(nodes, grid.nodes, rtol=0, atol=1e-12 * grid.sigma):
        raise IncompatibleGridsError(f'File nodes do not match {grid!r}')
    return SpectralFunction(grid, values)
