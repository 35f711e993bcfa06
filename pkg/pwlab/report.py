from __future__ import annotations

from typing import List, Optional

from stereotype import IntField, ListField, Model, ModelField, StrField, serializable

from pwlab.certify.certificate import Certificate
from pwlab.classify import Classification
from pwlab.config import RunConfig

COMMANDS = ('classify', 'certify', 'orbit', 'matrix')


class Envelope(Model):
    """Provenance of a report: the command, its configuration and everything else needed to reproduce it."""

    command: str = StrField(choices=COMMANDS)
    config: RunConfig
    random_seed: int = IntField(min_value=0)
    golden_path: Optional[str] = StrField(default=None, hide_none=True)


class Report(Model):
    envelope: Envelope
    classification: Optional[Classification] = ModelField(default=None, hide_none=True)
    certificates: List[Certificate] = ListField(ModelField(), default=list)

    @serializable
    def consistent(self) -> bool:
        return all(certificate.consistent for certificate in self.certificates)
