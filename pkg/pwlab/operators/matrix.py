from __future__ import annotations

import csv
import logging
import math
from typing import List, TextIO

import numpy as np

from pwlab.core.band import GridSpec, SigmaBand
from pwlab.core.functions import SpectralFunction, quadrature_frame
from pwlab.operators.symbols import AffineSymbol
from pwlab.operators.weighted import CompositionOperator, chat, chat_adjoint
from pwlab.utils import IncompatibleGridsError, InvalidArgumentError

logger = logging.getLogger(__name__)

#: Minimum number of grid nodes per basis index ``M`` for matrix assembly
NODES_PER_BASIS_INDEX = 8


class OperatorMatrix:
    """
    A finite section of an operator on ``L^2[-sigma, sigma]`` in the orthonormal basis
    ``e_n(t) = e^{i pi n t / sigma} / sqrt(2 sigma)``, ``n = -M..M``, stored with index ``n + M``.
    """

    __slots__ = ('entries', 'basis_band')

    def __init__(self, entries: np.ndarray, basis_band: SigmaBand):
        entries = np.array(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] % 2 == 0:
            raise InvalidArgumentError(f'A finite section must be square of odd size 2M+1, got shape {entries.shape}')
        if not np.all(np.isfinite(entries)):
            raise InvalidArgumentError('Finite section has non-finite entries')
        entries.setflags(write=False)
        self.entries = entries
        self.basis_band = basis_band

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def M(self) -> int:
        return self.dim // 2

    def entry(self, m: int, n: int) -> complex:
        """The entry ``<A e_n, e_m>`` by basis indices in ``-M..M``."""
        return complex(self.entries[m + self.M, n + self.M])

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def __repr__(self):
        return f'<OperatorMatrix M={self.M}, sigma={self.basis_band.sigma!r}>'


def basis_function(n: int, grid: GridSpec) -> SpectralFunction:
    frequency = math.pi * n / grid.sigma
    scale = 1 / math.sqrt(2 * grid.sigma)
    return SpectralFunction.from_callable(grid, lambda t: scale * np.exp(1j * frequency * np.asarray(t, dtype=float)))


def exponential_basis(M: int, grid: GridSpec) -> List[SpectralFunction]:
    return [basis_function(n, grid) for n in range(-M, M + 1)]


def _check_section(M: int, band: SigmaBand, grid: GridSpec):
    if M < 1:
        raise InvalidArgumentError(f'Basis index bound M must be positive, got {M}')
    if grid.band != band:
        raise IncompatibleGridsError(f'{grid!r} does not discretize {band!r}')
    if grid.n_nodes < NODES_PER_BASIS_INDEX * M:
        raise InvalidArgumentError(f'Grid with {grid.n_nodes} nodes is too coarse for M={M}, '
                                   f'need at least {NODES_PER_BASIS_INDEX * M}')


def project(images: List[SpectralFunction], basis: List[SpectralFunction]) -> np.ndarray:
    """The matrix ``[<images[n], basis[m]>]_{m, n}``, integrated on one shared quadrature frame."""
    _, weights, samples = quadrature_frame(images + basis)
    image_samples = samples[:len(images)]
    basis_samples = samples[len(images):]
    return np.conj(basis_samples) @ (weights[:, None] * image_samples.T)


def assemble_matrix(op: CompositionOperator, M: int, band: SigmaBand, grid: GridSpec) -> OperatorMatrix:
    """
    The finite section ``entries[m][n] = <op(e_n), e_m>``, computed by quadrature.

    :raises InvalidArgumentError: if ``grid.n_nodes < 8 M``
    :raises IncompatibleGridsError: if the grid is not a discretization of ``band``
    """
    _check_section(M, band, grid)
    basis = exponential_basis(M, grid)
    logger.debug('Assembling %r section with M=%d on %r', op, M, grid)
    return OperatorMatrix(project([op(e) for e in basis], basis), band)


def assemble_commutator(phi: AffineSymbol, M: int, band: SigmaBand, grid: GridSpec) -> OperatorMatrix:
    """The finite section of the true commutator ``C_phi C_phi* - C_phi* C_phi`` (not of the sections' commutator)."""
    _check_section(M, band, grid)
    forward, adjoint = chat(phi), chat_adjoint(phi)
    basis = exponential_basis(M, grid)
    images = [forward(adjoint(e)) - adjoint(forward(e)) for e in basis]
    return OperatorMatrix(project(images, basis), band)


def commutator_residual(A: OperatorMatrix) -> float:
    """``||A A^H - A^H A||_F / ||A||_F^2``, the self-commutator of the section itself."""
    entries = A.entries
    adjoint = entries.conj().T
    scale = A.frobenius_norm() ** 2
    if scale == 0:
        return 0.
    return float(np.linalg.norm(entries @ adjoint - adjoint @ entries) / scale)


def normality_residual(phi: AffineSymbol, M: int, band: SigmaBand, grid: GridSpec) -> float:
    """
    Dimensionless normality defect of ``C_phi``: the section of its self-commutator over ``||section(C_phi)||_F^2``.

    Unlike :func:`commutator_residual` this is free of truncation effects for multiplication operators, whose
    commutator vanishes identically.
    """
    section = assemble_matrix(chat(phi), M, band, grid)
    commutator = assemble_commutator(phi, M, band, grid)
    return commutator.frobenius_norm() / section.frobenius_norm() ** 2


def write_csv(A: OperatorMatrix, stream: TextIO):
    """Writes entries row-major as ``row,col,re,im`` with zero-based indices."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(('row', 'col', 're', 'im'))
    for row in range(A.dim):
        for col in range(A.dim):
            value = A.entries[row, col]
            writer.writerow((row, col, repr(float(value.real)), repr(float(value.imag))))


def read_csv(stream: TextIO, basis_band: SigmaBand) -> OperatorMatrix:
    rows = list(csv.DictReader(stream))
    dim = math.isqrt(len(rows))
    if dim * dim != len(rows):
        raise InvalidArgumentError(f'Matrix CSV with {len(rows)} entries is not square')
    entries = np.zeros((dim, dim), dtype=complex)
    try:
        for row in rows:
            entries[int(row['row']), int(row['col'])] = complex(float(row['re']), float(row['im']))
    except (KeyError, IndexError, ValueError) as e:
        raise InvalidArgumentError(f'Malformed matrix CSV: {e}')
    return OperatorMatrix(entries, basis_band)
