"""
Least-squares distances from a target to the span of finitely many spectral functions: orbits of ``C_phi``, kernel
orbits of ``C_phi*`` and exponential systems.
"""
from __future__ import annotations

import logging
import math
from typing import List, NamedTuple, Sequence

import numpy as np
import scipy.linalg

from pwlab.certify.density import ExponentialSequence
from pwlab.core.band import GridSpec, SigmaBand
from pwlab.core.functions import SpectralFunction, check_same_grid, quadrature_frame
from pwlab.core.kernels import KernelPoint, kernel_spectral
from pwlab.operators.symbols import AffineSymbol, iterate_symbol
from pwlab.operators.weighted import apply_chat
from pwlab.utils import IncompatibleGridsError, InvalidArgumentError, SpanSolveError

logger = logging.getLogger(__name__)

DEFAULT_REG = 1e-12


class SpanSolution(NamedTuple):
    #: ``||target - P target|| / ||target||`` with ``P`` the projection onto the retained span
    residual: float
    #: Number of directions kept after regularization
    rank: int
    #: Condition number of the Gram matrix of the retained, normalized elements
    gram_condition: float


def solve_span(elements: Sequence[SpectralFunction], target: SpectralFunction,
               reg: float = DEFAULT_REG) -> SpanSolution:
    """
    Distance from ``target`` to ``span(elements)``, relative to ``||target||``.

    All functions are sampled on one quadrature frame; the weighted, column-normalized sample matrix is QR-factorized
    without pivoting and elements whose new direction has relative size ``|R_jj| <= reg`` are dropped. Since the
    factorization of a prefix of the elements does not depend on later ones, the residual is nonincreasing as elements
    are appended.

    :raises InvalidArgumentError: if ``reg < 0`` or the target vanishes
    :raises SpanSolveError: if the factorization fails or the samples are not finite
    """
    if reg < 0:
        raise InvalidArgumentError(f'Regularization must be nonnegative, got {reg}')
    if not elements:
        raise InvalidArgumentError('Cannot project onto the span of no elements')
    _, weights, samples = quadrature_frame(list(elements) + [target])
    root_weights = np.sqrt(weights)
    columns = (samples[:-1] * root_weights).T
    y = samples[-1] * root_weights
    if not (np.all(np.isfinite(columns)) and np.all(np.isfinite(y))):
        raise SpanSolveError('Span elements or target have non-finite samples')
    target_norm = np.linalg.norm(y)
    if target_norm == 0:
        raise InvalidArgumentError('Target function vanishes')

    norms = np.linalg.norm(columns, axis=0)
    nonzero = norms > 0
    if not nonzero.any():
        return SpanSolution(1., 0, 1.)
    columns = columns[:, nonzero] / norms[nonzero]
    try:
        q, r = scipy.linalg.qr(columns, mode='economic')
    except (ValueError, np.linalg.LinAlgError) as e:
        raise SpanSolveError(f'QR factorization failed: {e}')
    kept = np.abs(np.diag(r)) > max(reg, np.finfo(float).eps)
    basis = q[:, kept]
    residual_vector = y - basis @ (basis.conj().T @ y)
    residual_vector -= basis @ (basis.conj().T @ residual_vector)  # Second pass keeps the projection orthogonal
    residual = float(np.linalg.norm(residual_vector) / target_norm)

    singular_values = scipy.linalg.svdvals(r[np.ix_(kept, kept)]) if kept.any() else np.ones(1)
    smallest = singular_values[-1]
    condition = float((singular_values[0] / smallest) ** 2) if smallest > 0 else math.inf
    logger.debug('Span of %d elements: rank %d, Gram condition %.3g, residual %.6g',
                 len(elements), int(kept.sum()), condition, residual)
    return SpanSolution(min(residual, 1.), int(kept.sum()), condition)


def orbit_gram(elements: Sequence[SpectralFunction]) -> np.ndarray:
    """The Gram matrix ``[<elements[j], elements[i]>]_{i, j}``, without normalization."""
    _, weights, samples = quadrature_frame(list(elements))
    return np.conj(samples) @ (weights[:, None] * samples.T)


def span_singular_values(elements: Sequence[SpectralFunction]) -> np.ndarray:
    """
    Singular values, largest first, of the quadrature-weighted sample matrix: ``s_k^2`` are the Gram eigenvalues,
    computed without squaring the condition number.
    """
    _, weights, samples = quadrature_frame(list(elements))
    return scipy.linalg.svdvals(samples.T * np.sqrt(weights)[:, None])


def orbit_elements(phi: AffineSymbol, seed: SpectralFunction, N: int) -> List[SpectralFunction]:
    """``C_phi^n seed`` for ``n = 0..N``, each produced in one step as ``C_{phi^[n]} seed``."""
    if N < 1:
        raise InvalidArgumentError(f'Orbit length must be at least 1, got {N}')
    return [apply_chat(iterate_symbol(phi, n), seed) for n in range(N + 1)]


def kernel_orbit_elements(phi: AffineSymbol, w: KernelPoint, N: int, grid: GridSpec) -> List[SpectralFunction]:
    """``(C_phi*)^n k_w = k_{phi^[n](w)}`` for ``n = 0..N``, in closed form."""
    if N < 1:
        raise InvalidArgumentError(f'Orbit length must be at least 1, got {N}')
    return [kernel_spectral(KernelPoint(iterate_symbol(phi, n)(w.w)), grid) for n in range(N + 1)]


def exponential_elements(lambdas: Sequence[float], grid: GridSpec) -> List[SpectralFunction]:
    return [SpectralFunction.from_callable(grid, lambda t, frequency=frequency: np.exp(1j * frequency * t))
            for frequency in lambdas]


def orbit_residual(phi: AffineSymbol, seed: SpectralFunction, target: SpectralFunction, N: int,
                   reg: float = DEFAULT_REG) -> float:
    """Relative distance from ``target`` to ``span{C_phi^n seed : 0 <= n <= N}``."""
    return solve_span(orbit_elements(phi, seed, N), target, reg).residual


def adjoint_orbit_kernel_residual(phi: AffineSymbol, w: KernelPoint, target: SpectralFunction, N: int,
                                  reg: float = DEFAULT_REG) -> float:
    """Relative distance from ``target`` to ``span{k_{phi^[n](w)} : 0 <= n <= N}``, the ``C_phi*`` orbit of ``k_w``."""
    return solve_span(kernel_orbit_elements(phi, w, N, target.grid), target, reg).residual


def completeness_residual(seq: ExponentialSequence, band: SigmaBand, targets: Sequence[SpectralFunction],
                          reg: float = DEFAULT_REG) -> float:
    """
    The largest relative distance from any of ``targets`` to ``span{e^{i lambda_n t}}``.

    :raises IncompatibleGridsError: if the targets do not live on one grid of ``band``
    """
    if not targets:
        raise InvalidArgumentError('Completeness needs at least one target')
    grid = check_same_grid(*targets)
    if grid.band != band:
        raise IncompatibleGridsError(f'Targets live on {grid!r}, not on a grid of {band!r}')
    elements = exponential_elements(seq.lambdas, grid)
    return max(solve_span(elements, target, reg).residual for target in targets)
