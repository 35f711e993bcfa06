from __future__ import annotations

import logging
import os
from typing import Dict, List, Optional

from stereotype import IntField, Model, StrField, ValidationError, ConversionError

from pwlab.fields import RealField

logger = logging.getLogger(__name__)

#: Environment variable overriding the location of the golden threshold table
GOLDEN_ENV = 'PWLAB_GOLDEN'
PACKAGED_GOLDEN = os.path.join(os.path.dirname(__file__), 'golden_thresholds.txt')

_COLUMNS = ('name', 'N', 'grid', 'sigma', 'threshold')


class GoldenThreshold(Model):
    name: str = StrField(min_length=1)
    N: int = IntField(min_value=0)
    grid: int = IntField(min_value=2)
    sigma: float = RealField(min_value=0)
    threshold: float = RealField(min_value=0)

    def matches(self, N: int, grid: int, sigma: float) -> bool:
        return self.N == N and self.grid == grid and self.on_band(sigma)

    def on_band(self, sigma: float) -> bool:
        return abs(self.sigma - sigma) <= 1e-12 * self.sigma


def golden_path() -> str:
    return os.environ.get(GOLDEN_ENV) or PACKAGED_GOLDEN


def load_golden(path: Optional[str] = None) -> Dict[str, List[GoldenThreshold]]:
    """
    Reads the whitespace-separated table ``name N grid sigma threshold``; ``#`` starts a comment.

    A name may be pinned on several bands, its rows are kept in file order.

    :raises OSError: if the file cannot be read
    :raises stereotype.DataError: if a row is malformed or repeats a name on the same band, with the line number as the
        error path
    """
    path = path or golden_path()
    table: Dict[str, List[GoldenThreshold]] = {}
    with open(path, encoding='utf-8') as stream:
        for number, line in enumerate(stream, 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            values = line.split()
            if len(values) != len(_COLUMNS):
                raise ConversionError.new(f'Expected {len(_COLUMNS)} columns, got {len(values)}', f'line {number}')
            try:
                row = GoldenThreshold(dict(zip(_COLUMNS, values)))
                row.validate()
            except ConversionError as e:
                raise e.wrapped(f'line {number}')
            except ValidationError as e:
                raise ValidationError([((f'line {number}',) + field_path, error)
                                       for field_path, error in e.error_list])
            rows = table.setdefault(row.name, [])
            if any(other.on_band(row.sigma) for other in rows):
                raise ValidationError([((f'line {number}', 'sigma'), f'{row.name} is already pinned at this band')])
            rows.append(row)
    logger.debug('Loaded %d golden thresholds from %s', sum(len(rows) for rows in table.values()), path)
    return table


def closest_row(rows: List[GoldenThreshold], sigma: float) -> GoldenThreshold:
    """The row pinned at ``sigma``, otherwise the one with the nearest band."""
    return min(rows, key=lambda row: abs(row.sigma - sigma))
