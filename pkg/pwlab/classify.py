"""
Exact decision procedures for composition operators ``C_phi``, ``phi(z) = az + b``, on the Paley-Wiener space.

Every verdict is derived symbolically from ``(sigma, a, b)``; the only numerical judgement is whether ``b`` is real and
whether ``|a| = 1``, both decided with a visible :class:`RealnessTolerance`.
"""
from __future__ import annotations

import math
import numbers
from typing import List

from stereotype import FloatField, ListField, Model, StrField

from pwlab.core.band import SigmaBand
from pwlab.fields import ComplexField
from pwlab.utils import InvalidArgumentError

KERNELS_ALL = 'all'
KERNELS_NONE = 'none'
KERNELS_NOT_COVERED = 'not-covered'
KERNEL_VERDICTS = (KERNELS_ALL, KERNELS_NONE, KERNELS_NOT_COVERED)

DEFAULT_EPS = 1e-12


class RealnessTolerance:
    """Threshold on ``|Im b|`` and ``|1 - |a||`` below which ``b`` counts as real and ``|a|`` as one."""

    __slots__ = ('eps',)

    def __init__(self, eps: float = DEFAULT_EPS):
        eps = float(eps)
        if not eps >= 0:
            raise InvalidArgumentError(f'Realness tolerance must be nonnegative, got {eps}')
        self.eps = eps

    def is_real(self, value: complex) -> bool:
        return abs(complex(value).imag) <= self.eps

    def is_close(self, x: float, y: float) -> bool:
        return abs(x - y) <= self.eps

    def __repr__(self):
        return f'<RealnessTolerance eps={self.eps!r}>'


class Classification(Model):
    """
    The full decision record for one symbol; ``rule_citations`` holds one ``"<verdict>: <rule>"`` line per verdict.

    The operator-theoretic implications between verdicts are enforced by validation.
    """

    sigma: float
    a: float
    b: complex = ComplexField()
    eps: float = FloatField(min_value=0)
    bounded: bool
    cyclic: bool
    adjoint_cyclic: bool
    supercyclic: bool
    complex_symmetric: bool
    normal: bool
    self_adjoint: bool
    unitary: bool
    kernels_all_cyclic: str = StrField(choices=KERNEL_VERDICTS)
    adjoint_kernels_all_cyclic: str = StrField(choices=KERNEL_VERDICTS, default=KERNELS_NOT_COVERED)
    rule_citations: List[str] = ListField(StrField(min_length=1), default=list)

    def validate_unitary(self, value: bool, _):
        if value and not self.normal:
            raise ValueError('A unitary operator must be normal')

    def validate_normal(self, value: bool, _):
        if value and not self.complex_symmetric:
            raise ValueError('A normal operator must be complex symmetric')

    def validate_self_adjoint(self, value: bool, _):
        if value and not self.normal:
            raise ValueError('A self-adjoint operator must be normal')

    def validate_cyclic(self, value: bool, _):
        if value and not self.adjoint_cyclic:
            raise ValueError('Cyclic operators in this family have cyclic adjoints')

    def validate_supercyclic(self, value: bool, _):
        if value and self.bounded:
            raise ValueError('Bounded composition operators on the Paley-Wiener space are never supercyclic')

    def validate_kernels_all_cyclic(self, value: str, _):
        if value == KERNELS_ALL and not self.cyclic:
            raise ValueError('A cyclic vector can only exist for a cyclic operator')

    def validate_bounded(self, value: bool, _):
        if value:
            return
        verdicts = (self.cyclic, self.adjoint_cyclic, self.supercyclic, self.complex_symmetric, self.normal,
                    self.self_adjoint, self.unitary)
        if any(verdicts) or self.kernels_all_cyclic != KERNELS_NOT_COVERED:
            raise ValueError('An unbounded symbol cannot have other verdicts')

    @property
    def critical_shift(self) -> float:
        return math.pi / self.sigma


def multiplier_injective(band: SigmaBand, b: complex, eps: float = DEFAULT_EPS) -> bool:
    """
    Whether ``t -> e^{ibt}`` is injective on ``[-sigma, sigma]`` up to a null set: always for non-real ``b``
    (the modulus is strictly monotone), and for real ``b`` exactly when ``0 < |b| <= pi / sigma``.
    """
    b = complex(b)
    if abs(b.imag) > eps:
        return True
    return 0 < abs(b.real) <= band.critical_shift


def _real_slope(a) -> float:
    if isinstance(a, complex):
        if a.imag != 0:
            return math.nan
        a = a.real
    if not isinstance(a, numbers.Real):
        return math.nan
    return float(a)


def classify(band: SigmaBand, a: float, b: complex, tol: RealnessTolerance = RealnessTolerance()) -> Classification:
    """
    Decides every verdict for ``C_phi`` with ``phi(z) = az + b`` on the space of band ``sigma``.

    Total on its inputs: symbols outside ``a`` real, ``0 < |a| <= 1`` are reported as unbounded with all other
    verdicts false.
    """
    eps = tol.eps
    b = complex(b)
    slope = _real_slope(a)
    record = {
        'sigma': band.sigma, 'a': slope if math.isfinite(slope) else 0., 'b': b, 'eps': eps,
        'bounded': False, 'cyclic': False, 'adjoint_cyclic': False, 'supercyclic': False,
        'complex_symmetric': False, 'normal': False, 'self_adjoint': False, 'unitary': False,
        'kernels_all_cyclic': KERNELS_NOT_COVERED, 'adjoint_kernels_all_cyclic': KERNELS_NOT_COVERED,
    }
    citations = []
    finite_b = math.isfinite(b.real) and math.isfinite(b.imag)
    if not (math.isfinite(slope) and slope != 0 and (abs(slope) <= 1 or tol.is_close(abs(slope), 1)) and finite_b):
        citations.append('unbounded: C_phi is bounded only for phi(z) = az + b with a real, 0 < |a| <= 1')
        classification = Classification({**record, 'rule_citations': citations})
        classification.validate()
        return classification

    translation = tol.is_close(slope, 1)
    reflection = tol.is_close(slope, -1)
    contraction = not (translation or reflection)
    real_b = tol.is_real(b)
    critical = band.critical_shift

    record['bounded'] = True
    citations.append('bounded: phi(z) = az + b with a real and 0 < |a| <= 1')

    if translation:
        record['cyclic'] = multiplier_injective(band, b, eps)
        if record['cyclic']:
            citations.append('cyclic: C_phi is multiplication by e^{ibt}, injective on [-sigma, sigma] since b is '
                             'non-real or 0 < |b| <= pi/sigma')
        else:
            citations.append('not cyclic: e^{ibt} is not injective on [-sigma, sigma] for b = 0 or real b with '
                             '|b| > pi/sigma')
    elif reflection:
        citations.append('not cyclic: for a = -1 the orbit of any f has at most two elements')
    else:
        citations.append('not cyclic: for 0 < |a| < 1 every orbit element beyond the seed vanishes outside '
                         '[-|a| sigma, |a| sigma] on the spectral side')

    record['adjoint_cyclic'] = contraction or record['cyclic']
    if contraction:
        citations.append('adjoint cyclic: for 0 < |a| < 1 every reproducing kernel is a cyclic vector for C_phi*')
    elif record['cyclic']:
        citations.append('adjoint cyclic: C_phi* = J C_phi J is cyclic together with C_phi')
    else:
        citations.append('adjoint not cyclic: C_phi* = J C_phi J is cyclic only together with C_phi')

    citations.append('not supercyclic: composition operators on the Paley-Wiener space are never supercyclic')

    if contraction:
        citations.append('not complex symmetric: C_phi* is cyclic while C_phi is not, which a complex symmetric '
                         'operator cannot be')
        citations.append('not normal: a normal operator is complex symmetric')
        citations.append('not self-adjoint: a self-adjoint operator is normal')
        citations.append('not unitary: a unitary operator is normal')
    else:
        record['complex_symmetric'] = True
        if translation:
            citations.append('complex symmetric: C_phi is J-symmetric for (J_1 f)(z) = conj(f(-conj(z)))')
        else:
            citations.append('complex symmetric: C_phi is J-symmetric for (J_-1 f)(z) = conj(f(conj(z)))')
        record['normal'] = translation or real_b
        if translation:
            citations.append('normal: for a = 1, C_phi is the multiplication operator by e^{ibt}')
        elif real_b:
            citations.append('normal: for a = -1 and real b, C_phi is unitary')
        else:
            citations.append('not normal: for a = -1, C_phi is normal only for real b')
        record['self_adjoint'] = (translation and abs(b.real) <= eps) or (reflection and real_b)
        if record['self_adjoint']:
            citations.append('self-adjoint: a = 1 with b purely imaginary, or a = -1 with b real')
        else:
            citations.append('not self-adjoint: requires a = 1 with b purely imaginary, or a = -1 with b real')
        record['unitary'] = real_b
        if real_b:
            citations.append('unitary: |a| = 1 with real b')
        else:
            citations.append('not unitary: |a| = 1 but b is not real')

    if translation:
        on_threshold = real_b and abs(abs(b.real) - critical) <= eps * critical
        if on_threshold:
            kernels = KERNELS_NONE
            citations.append('kernels not cyclic: for |b| = pi/sigma the orbit {e^{ibnt} k_w} is orthogonal to '
                             'e^{-ibt} k_w')
        elif record['cyclic']:
            kernels = KERNELS_ALL
            citations.append('kernels all cyclic: every reproducing kernel is cyclic for non-real b or '
                             '0 < |b| < pi/sigma')
        else:
            kernels = KERNELS_NONE
            citations.append('kernels not cyclic: C_phi is not cyclic')
        record['kernels_all_cyclic'] = kernels
        record['adjoint_kernels_all_cyclic'] = kernels
        citations.append('adjoint kernels as for C_phi: J_1 k_w = k_{-conj(w)} and C_phi* = J_1 C_phi J_1')
    elif reflection:
        record['kernels_all_cyclic'] = record['adjoint_kernels_all_cyclic'] = KERNELS_NONE
        citations.append('kernels not cyclic: for a = -1 orbits have at most two elements')
    else:
        record['kernels_all_cyclic'] = KERNELS_NONE
        record['adjoint_kernels_all_cyclic'] = KERNELS_ALL
        citations.append('kernels not cyclic: C_phi is not cyclic')
        citations.append('adjoint kernels all cyclic: (C_phi*)^n k_w = k_{phi^[n](w)} accumulates at the attractive '
                         'fixed point b / (1 - a)')

    classification = Classification({**record, 'rule_citations': citations})
    classification.validate()
    return classification


def explain(c: Classification) -> List[str]:
    """One human-readable line per verdict, each naming the rule it follows from."""
    lines = [f'C_phi with phi(z) = {c.a!r} z + {c.b!r} on the band sigma = {c.sigma!r} (eps = {c.eps!r})']
    lines.extend(c.rule_citations)
    return lines
