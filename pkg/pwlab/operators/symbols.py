from __future__ import annotations

import math
import numbers
from typing import Tuple

from pwlab.utils import AdjointNotCompositionError, InvalidArgumentError, NoFixedPointError


class AffineSymbol:
    """
    The symbol ``phi(z) = a z + b`` of a bounded composition operator: ``a`` real with ``0 < |a| <= 1``, ``b`` complex.

    :raises InvalidArgumentError: if ``a`` is complex, zero, non-finite or ``|a| > 1``
    """

    __slots__ = ('a', 'b')

    def __init__(self, a: float, b: complex = 0j):
        if isinstance(a, complex) or not isinstance(a, numbers.Real):
            raise InvalidArgumentError(f'Slope a must be real, got {a!r}')
        a = float(a)
        b = complex(b)
        if not (math.isfinite(a) and 0 < abs(a) <= 1):
            raise InvalidArgumentError(f'Slope must satisfy 0 < |a| <= 1 for a bounded operator, got {a}')
        if not (math.isfinite(b.real) and math.isfinite(b.imag)):
            raise InvalidArgumentError(f'Shift b must be finite, got {b}')
        self.a = a
        self.b = b

    @classmethod
    def identity(cls) -> AffineSymbol:
        return cls(1., 0j)

    @property
    def is_translation(self) -> bool:
        return self.a == 1

    @property
    def is_reflection(self) -> bool:
        return self.a == -1

    @property
    def is_contraction(self) -> bool:
        return abs(self.a) < 1

    def __call__(self, z: complex) -> complex:
        return self.a * z + self.b

    def compose(self, other: AffineSymbol) -> AffineSymbol:
        """``self o other``, i.e. ``z -> self(other(z))``."""
        return AffineSymbol(self.a * other.a, self.a * other.b + self.b)

    def __eq__(self, other):
        return type(self) == type(other) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f'<AffineSymbol a={self.a!r}, b={self.b!r}>'


def iterate_symbol(phi: AffineSymbol, n: int) -> AffineSymbol:
    """
    The ``n``-th iterate, in closed form: ``z + n b`` for ``a = 1``, otherwise ``a^n z + (1 - a^n) / (1 - a) b``.
    ``n = 0`` gives the identity.
    """
    if n < 0:
        raise InvalidArgumentError(f'Iteration count must be nonnegative, got {n}')
    if n == 0:
        return AffineSymbol.identity()
    if phi.a == 1:
        return AffineSymbol(1., n * phi.b)
    power = phi.a ** n
    return AffineSymbol(power, (1 - power) / (1 - phi.a) * phi.b)


def fixed_point(phi: AffineSymbol) -> complex:
    """
    ``b / (1 - a)``, attractive when ``|a| < 1``.

    :raises NoFixedPointError: for translations; ``unique_failure`` is set for the identity, where every point is fixed
    """
    if phi.a == 1:
        if phi.b == 0:
            raise NoFixedPointError('The identity symbol fixes every point, there is no unique fixed point',
                                    unique_failure=True)
        raise NoFixedPointError(f'Translation by {phi.b} has no fixed point')
    return phi.b / (1 - phi.a)


def adjoint_symbol(phi: AffineSymbol) -> AffineSymbol:
    """
    The symbol ``psi(z) = a z - a conj(b)`` with ``C_psi = C_phi*``, which exists only for ``|a| = 1``.

    :raises AdjointNotCompositionError: if ``|a| < 1``; ``f((z - conj(b)) / a) / a`` has type ``sigma / |a|``
        and leaves the space
    """
    if abs(phi.a) != 1:
        raise AdjointNotCompositionError(
            f'The adjoint of C_phi for |a| = {abs(phi.a)} < 1 is a weighted operator, not a composition operator',
            type_inflation=1 / abs(phi.a))
    return AffineSymbol(phi.a, -phi.a * phi.b.conjugate())


REFLECTION = AffineSymbol(-1., 0j)


def reflection_factorization(phi: AffineSymbol) -> Tuple[AffineSymbol, AffineSymbol]:
    """
    For ``a < 0`` returns ``(eta, psi)`` with ``eta(z) = -z`` and ``psi(z) = -a z + b``, so that
    ``phi = psi o eta`` and ``C_phi = C_eta C_psi``.
    """
    if phi.a > 0:
        raise InvalidArgumentError(f'Only symbols with a < 0 factor through the reflection, got a={phi.a}')
    return REFLECTION, AffineSymbol(-phi.a, phi.b)


def kernel_orbit_point(phi: AffineSymbol, w: complex, n: int, adjoint: bool = True) -> complex:
    """
    Index of the kernel reached after ``n`` steps of an orbit starting at ``k_w``.

    For the adjoint, ``(C_phi*)^n k_w = k_{phi^[n](w)}`` for every symbol. The forward orbit stays among kernels only
    for translations, where ``C_phi^n k_w = k_{w - n conj(b)}``.
    """
    w = complex(w)
    if adjoint:
        return iterate_symbol(phi, n)(w)
    if phi.a != 1:
        raise InvalidArgumentError('The forward orbit of a kernel consists of kernels only for translation symbols')
    return w - n * phi.b.conjugate()
