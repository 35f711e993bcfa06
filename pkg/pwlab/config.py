from __future__ import annotations

import math
from typing import Optional

from stereotype import BoolField, IntField, Model, StrField

from pwlab.classify import DEFAULT_EPS, RealnessTolerance
from pwlab.core.band import GridSpec, SigmaBand, make_grid
from pwlab.core.kernels import KernelPoint
from pwlab.fields import ComplexField, RealField
from pwlab.operators.symbols import AffineSymbol

OUTPUT_FORMATS = ('json', 'csv', 'text')


class RunConfig(Model):
    """
    Everything one command needs: the symbol ``phi(z) = az + b``, the band and the discretization.

    ``a`` may be any finite real here so that unbounded symbols can still be classified; commands that need the
    operator build it with :meth:`symbol`, which enforces ``0 < |a| <= 1``.
    """

    sigma: float = RealField(min_value=0)
    a: float = RealField()
    b: complex = ComplexField(default=0j)
    grid_nodes: int = IntField(default=256, min_value=2)
    basis_M: int = IntField(default=16, min_value=1)
    orbit_N: int = IntField(default=40, min_value=1)
    eps_real: float = RealField(default=DEFAULT_EPS, min_value=0)
    reg: float = RealField(default=1e-12, min_value=0)
    output: str = StrField(default='json', choices=OUTPUT_FORMATS)
    random_seed: int = IntField(default=1729, min_value=0)
    lattice: int = IntField(default=5, min_value=1)
    pairs: int = IntField(default=20, min_value=1)
    adjoint: bool = BoolField(default=False)
    seed_kernel: Optional[complex] = ComplexField(default=None, hide_none=True)
    seed_file: Optional[str] = StrField(default=None, hide_none=True, min_length=1)
    target_kernel: Optional[complex] = ComplexField(default=None, hide_none=True)

    def validate_sigma(self, value: float, _):
        if not (value > 0 and math.isfinite(value)):
            raise ValueError('Must be positive and finite')

    def validate_a(self, value: float, _):
        if not math.isfinite(value):
            raise ValueError('Must be finite')

    def validate_b(self, value: complex, _):
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise ValueError('Must be finite')

    def validate_seed_file(self, value: Optional[str], _):
        if value is not None and self.seed_kernel is not None:
            raise ValueError('Use either a seed kernel or a seed file, not both')

    @property
    def band(self) -> SigmaBand:
        return SigmaBand(self.sigma)

    def grid(self) -> GridSpec:
        return make_grid(self.band, self.grid_nodes)

    def symbol(self) -> AffineSymbol:
        """
        The symbol, with ``|a|`` within ``eps_real`` of one snapped to ``+-1`` as the classifier treats it.

        :raises InvalidArgumentError: for symbols outside ``0 < |a| <= 1``
        """
        a = self.a
        if a != 0 and self.tolerance().is_close(abs(a), 1):
            a = math.copysign(1., a)
        return AffineSymbol(a, self.b)

    def tolerance(self) -> RealnessTolerance:
        return RealnessTolerance(self.eps_real)

    def seed_point(self) -> KernelPoint:
        return KernelPoint(0j if self.seed_kernel is None else self.seed_kernel)
