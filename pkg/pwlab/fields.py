from __future__ import annotations

from typing import Any, List, Optional

from stereotype import FloatField, Missing, Role, DEFAULT_ROLE
from stereotype.fields.annotations import AnnotationResolver
from stereotype.fields.base import Field

from pwlab.utils import parse_complex, parse_real


class ComplexField(Field):
    """
    Complex value (annotation ``complex``), accepting numbers, ``[re, im]`` pairs and strings such as ``"1,2"``,
    ``"1+2i"``, ``"i"`` or ``"pi/2,0"``. Serializes to a ``[re, im]`` pair.

    :param default: Means the field isn't required, used as default directly or called if callable
    :param hide_none: If the field's value is None, it will be hidden from serialized output
    :param primitive_name: Changes the key used to represent the field in serialized data - input or output
    :param to_primitive_name: Changes the key used to represent the field in serialized data - output only
    :param validators: Optional list of validator callbacks - they raise ``ValueError`` if the value is invalid
    """

    __slots__ = Field.__slots__
    type = complex
    type_repr = 'complex'
    atomic = True

    def __init__(self, *, default: Any = Missing, hide_none: bool = False,
                 primitive_name: Optional[str] = Missing, to_primitive_name: Optional[str] = Missing,
                 validators: Optional[List[Any]] = None):
        super().__init__(default=default, hide_none=hide_none, primitive_name=primitive_name,
                         to_primitive_name=to_primitive_name, validators=validators)

    def init_from_annotation(self, parser: AnnotationResolver):
        if parser.annotation is not complex:
            raise parser.incorrect_type(self)

    def convert(self, value: Any) -> Any:
        if value is Missing:
            return self._fill_missing()
        if value is None:
            return None
        return parse_complex(value)

    def to_primitive(self, value: Any, role: Role = DEFAULT_ROLE, context=None) -> Any:
        if value is None:
            return None
        return [value.real, value.imag]


class RealField(FloatField):
    """
    Floating point value (annotation ``float``) that also accepts ``pi`` literals: ``pi``, ``-pi/2``, ``2pi``.

    Takes the same options as :class:`stereotype.FloatField`.
    """

    __slots__ = FloatField.__slots__

    def convert(self, value: Any) -> Any:
        if value is Missing:
            return self._fill_missing()
        if value is None:
            return None
        if isinstance(value, bool):
            raise TypeError('Boolean is not a real number')
        return parse_real(value)
