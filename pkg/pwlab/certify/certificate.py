from __future__ import annotations

import math
from typing import Any, Dict, Optional

from stereotype import DictField, FloatField, Model, StrField, serializable

from pwlab.fields import ComplexField

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'
VERDICTS = (PASS, FAIL, INCONCLUSIVE)

#: The certificate passes when ``residual <= threshold``
BELOW = 'below'
#: The certificate passes when ``residual >= threshold``
ABOVE = 'above'
PREDICATES = (BELOW, ABOVE)


def predicate_holds(predicate: str, residual: Optional[float], threshold: float) -> bool:
    if residual is None or not math.isfinite(residual):
        return False
    if predicate == BELOW:
        return residual <= threshold
    return residual >= threshold


def decide_verdict(predicate: str, residual: Optional[float], threshold: float,
                   fail_threshold: Optional[float] = None) -> str:
    """
    ``pass`` when the predicate holds, ``fail`` when the residual is on the wrong side of ``fail_threshold``,
    ``inconclusive`` in between or when there is no residual.
    """
    if predicate_holds(predicate, residual, threshold):
        return PASS
    if residual is None or not math.isfinite(residual) or fail_threshold is None:
        return INCONCLUSIVE
    if predicate == BELOW and residual > fail_threshold:
        return FAIL
    if predicate == ABOVE and residual < fail_threshold:
        return FAIL
    return INCONCLUSIVE


class Certificate(Model):
    """
    Numerical evidence for one property of ``C_phi``: a residual compared against a threshold.

    ``expected`` is the verdict the classifier predicts (``None`` when the certificate is not tied to a verdict);
    a certificate is consistent unless its verdict contradicts that expectation. Inconclusive certificates never
    contradict anything.
    """

    name: str = StrField(min_length=1)
    sigma: float = FloatField(min_value=0)
    a: float
    b: complex = ComplexField()
    residual: Optional[float] = FloatField(min_value=0)
    threshold: float = FloatField(min_value=0)
    predicate: str = StrField(choices=PREDICATES, default=BELOW)
    fail_threshold: Optional[float] = FloatField(default=None, hide_none=True)
    verdict: str = StrField(choices=VERDICTS)
    expected: Optional[str] = StrField(choices=(PASS, FAIL), default=None, hide_none=True)
    params: Dict[str, Any] = DictField(default=dict)

    @serializable
    def consistent(self) -> bool:
        return self.expected is None or self.verdict == INCONCLUSIVE or self.verdict == self.expected

    def validate_verdict(self, value: str, _):
        if (value == PASS) != predicate_holds(self.predicate, self.residual, self.threshold):
            raise ValueError(f'Verdict {value} does not match residual {self.residual} {self.predicate} '
                             f'threshold {self.threshold}')
        if value == FAIL and self.residual is None:
            raise ValueError('A failed certificate needs a residual')

    @classmethod
    def build(cls, name: str, sigma: float, a: float, b: complex, residual: Optional[float], threshold: float, *,
              predicate: str = BELOW, fail_threshold: Optional[float] = None, expected: Optional[str] = None,
              params: Optional[Dict[str, Any]] = None) -> Certificate:
        """Creates and validates a certificate, deciding the verdict from the residual."""
        if residual is not None:
            residual = float(residual)
            if not math.isfinite(residual):
                residual = None
        certificate = cls({
            'name': name, 'sigma': sigma, 'a': a, 'b': b, 'residual': residual, 'threshold': threshold,
            'predicate': predicate, 'fail_threshold': fail_threshold,
            'verdict': decide_verdict(predicate, residual, threshold, fail_threshold),
            'expected': expected, 'params': params or {},
        })
        certificate.validate()
        return certificate
