from __future__ import annotations

import numpy as np

from pwlab.core.functions import SpectralFunction
from pwlab.operators.symbols import AffineSymbol
from pwlab.utils import InvalidArgumentError


def apply_chat(phi: AffineSymbol, F: SpectralFunction) -> SpectralFunction:
    """
    The spectral side of ``C_phi``: ``(1 / |a|) chi_{(-|a| sigma, |a| sigma)}(t) e^{ibt/a} F(t / a)``.

    The result lives on the same grid. For ``|a| = 1`` the samples are read off the grid directly (``-t`` is a node),
    for ``|a| < 1`` ``F`` is resampled through its continuation and the result jumps at ``+-|a| sigma``.
    """
    a, b = phi.a, phi.b
    scale = abs(a)
    edge = scale * F.grid.sigma

    def continuation(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        result = np.exp(1j * b / a * t) * F.sample(t / a) / scale
        if scale < 1:
            result[np.abs(t) >= edge] = 0
        return result

    return SpectralFunction(F.grid, continuation(F.grid.nodes), support=scale * F.support,
                            breaks=[scale * s for s in F.breaks], continuation=continuation)


def apply_chat_adjoint(phi: AffineSymbol, F: SpectralFunction) -> SpectralFunction:
    """The spectral side of ``C_phi*``: ``conj(e^{ibt}) F(a t) = e^{-i conj(b) t} F(a t)``."""
    a, b = phi.a, phi.b
    exponent = -1j * b.conjugate()

    def continuation(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        return np.exp(exponent * t) * F.sample(a * t)

    return SpectralFunction(F.grid, continuation(F.grid.nodes), support=F.support / abs(a),
                            breaks=[s / abs(a) for s in F.breaks], continuation=continuation)


class ConjugationTag:
    """
    Selects the conjugation ``(J_a f)(z) = conj(f(-a conj(z)))`` for ``a`` in ``{+1, -1}``.

    On the spectral side ``J_1`` is ``conj(F(t))`` and ``J_-1`` is ``conj(F(-t))``.
    """

    __slots__ = ('a',)

    def __init__(self, a: int):
        if a not in (1, -1):
            raise InvalidArgumentError(f'Conjugations J_a exist for a = +1 or -1 only, got {a}')
        self.a = int(a)

    @classmethod
    def for_symbol(cls, phi: AffineSymbol) -> ConjugationTag:
        """The conjugation ``C_phi`` is symmetric with respect to; contractions are not complex symmetric."""
        if abs(phi.a) != 1:
            raise InvalidArgumentError(f'C_phi with |a| = {abs(phi.a)} < 1 is not complex symmetric')
        return cls(int(phi.a))

    def __eq__(self, other):
        return type(self) == type(other) and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return f'<ConjugationTag a={self.a}>'


def apply_conjugation(tag: ConjugationTag, F: SpectralFunction) -> SpectralFunction:
    if tag.a == 1:
        values = np.conj(F.values)
    else:
        values = np.conj(F.values[::-1])
    sign = tag.a

    def continuation(t: np.ndarray) -> np.ndarray:
        return np.conj(F.sample(sign * np.asarray(t, dtype=float)))

    return SpectralFunction(F.grid, values, support=F.support, breaks=F.breaks, continuation=continuation)


def conjugate_kernel_point(tag: ConjugationTag, w: complex) -> complex:
    """``J_a k_w = k_{-a conj(w)}``: ``J_1`` maps ``k_w`` to ``k_{-conj(w)}``, ``J_-1`` maps it to ``k_{conj(w)}``."""
    return -tag.a * complex(w).conjugate()


class CompositionOperator:
    """
    ``C_phi`` or its adjoint, acting on spectral functions.

    Use :func:`chat` and :func:`chat_adjoint` to construct one.
    """

    __slots__ = ('symbol', 'is_adjoint')

    def __init__(self, symbol: AffineSymbol, is_adjoint: bool = False):
        self.symbol = symbol
        self.is_adjoint = is_adjoint

    def __call__(self, F: SpectralFunction) -> SpectralFunction:
        if self.is_adjoint:
            return apply_chat_adjoint(self.symbol, F)
        return apply_chat(self.symbol, F)

    def adjoint(self) -> CompositionOperator:
        return CompositionOperator(self.symbol, not self.is_adjoint)

    def power(self, F: SpectralFunction, n: int) -> SpectralFunction:
        """Applies the operator ``n`` times."""
        for _ in range(n):
            F = self(F)
        return F

    def __eq__(self, other):
        return type(self) == type(other) and self.symbol == other.symbol and self.is_adjoint == other.is_adjoint

    def __hash__(self):
        return hash((self.symbol, self.is_adjoint))

    def __repr__(self):
        star = '*' if self.is_adjoint else ''
        return f'<CompositionOperator C{star} a={self.symbol.a!r}, b={self.symbol.b!r}>'


def chat(phi: AffineSymbol) -> CompositionOperator:
    return CompositionOperator(phi)


def chat_adjoint(phi: AffineSymbol) -> CompositionOperator:
    return CompositionOperator(phi, is_adjoint=True)
