from __future__ import annotations

import math
import re
from typing import Union

Number = Union[int, float, complex]


class PwlabError(Exception):
    pass


class InvalidArgumentError(PwlabError, ValueError):
    pass


class IncompatibleGridsError(PwlabError, ValueError):
    """Two spectral functions or a function and a grid do not share the same ``(sigma, n_nodes)``."""


class EvaluationOutOfRangeError(PwlabError, ArithmeticError):
    """
    The requested evaluation point lies outside the configured growth bound.

    Not a mathematical failure: the value exists, but ``e^{izt}`` would amplify quadrature error beyond what the
    default tolerances assume.
    """


class NoFixedPointError(PwlabError, ArithmeticError):
    """A translation symbol has no fixed point, or (for the identity) no unique one."""

    def __init__(self, message: str, unique_failure: bool = False):
        super().__init__(message)
        self.unique_failure = unique_failure


class AdjointNotCompositionError(PwlabError, ValueError):
    """
    The adjoint of a contractive composition operator is not itself a composition operator.

    ``type_inflation`` is the factor ``1 / |a| > 1`` by which the formula ``f((z - conj(b)) / a) / a`` would inflate
    the exponential type, pushing it out of the band.
    """

    def __init__(self, message: str, type_inflation: float):
        super().__init__(message)
        self.type_inflation = type_inflation


class SpanSolveError(PwlabError, ArithmeticError):
    pass


_PI_TERM = re.compile(r'^(?P<sign>[+-]?)(?P<coef>\d*\.?\d*(?:e[+-]?\d+)?)\*?pi(?:/(?P<den>\d*\.?\d+(?:e[+-]?\d+)?))?$')


def parse_real(text: Union[str, Number]) -> float:
    """
    Parses a real number, also accepting ``pi`` literals: ``pi``, ``-pi``, ``2pi``, ``2*pi``, ``pi/2``, ``0.5pi/3``.

    Non-strings are passed to ``float``, complex values with a nonzero imaginary part are rejected.
    """
    if isinstance(text, complex):
        if text.imag != 0:
            raise ValueError(f'Value {text!r} is not real')
        return float(text.real)
    if not isinstance(text, str):
        return float(text)
    cleaned = text.strip().replace(' ', '').lower()
    match = _PI_TERM.match(cleaned)
    if match is None:
        try:
            return float(cleaned)
        except ValueError:
            raise ValueError(f'Value {text!r} is not a real number')
    coef = float(match.group('coef')) if match.group('coef') else 1.
    value = coef * math.pi
    if match.group('den'):
        value /= float(match.group('den'))
    return -value if match.group('sign') == '-' else value


def parse_complex(text: Union[str, Number, list, tuple]) -> complex:
    """
    Parses a complex number from the forms accepted on the command line and in JSON reports:

    * numbers (``1``, ``0.5``, ``1+2j``)
    * pairs ``[re, im]`` or ``(re, im)``
    * ``"re,im"`` where each part may be a ``pi`` literal
    * ``"re+imi"`` / ``"re-imi"`` / ``"imi"`` / ``"i"`` (``j`` works in place of ``i``)
    """
    if isinstance(text, (list, tuple)):
        if len(text) != 2:
            raise ValueError(f'Complex pair must have exactly 2 items, got {len(text)}')
        return complex(parse_real(text[0]), parse_real(text[1]))
    if isinstance(text, bool):
        raise ValueError('Boolean is not a complex number')
    if isinstance(text, (int, float, complex)):
        return complex(text)
    if not isinstance(text, str):
        raise ValueError(f'Value {text!r} is not a complex number')

    cleaned = text.strip().replace(' ', '').lower()
    if not cleaned:
        raise ValueError('Empty complex number')
    if ',' in cleaned:
        parts = cleaned.split(',')
        if len(parts) != 2:
            raise ValueError(f'Value {text!r} must be "re,im"')
        return complex(parse_real(parts[0]), parse_real(parts[1]))

    if not cleaned.endswith(('i', 'j')) or cleaned.endswith('pi'):
        return complex(parse_real(cleaned), 0.)

    body = cleaned[:-1]
    # Split "re+im" at the last sign that isn't part of an exponent or the leading sign
    split_at = None
    for index in range(len(body) - 1, 0, -1):
        if body[index] in '+-' and body[index - 1] != 'e':
            split_at = index
            break
    if split_at is None:
        real_part, imag_part = '0', body
    else:
        real_part, imag_part = body[:split_at], body[split_at:]
    if imag_part in ('', '+'):
        imag_part = '1'
    elif imag_part == '-':
        imag_part = '-1'
    try:
        return complex(parse_real(real_part), parse_real(imag_part))
    except ValueError:
        raise ValueError(f'Value {text!r} is not a complex number')
