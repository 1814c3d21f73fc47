"""
Realizable Matroids
Matroids of finite vector configurations over ℚ or GF(p), pushed to a tract, and the localizations of their one-vector extensions
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from errors import ExtensionError, ParseError
from matroids.tmatroid import TMatroid
from matroids.tvec import GroundSet, TVector
from tracts.core import Tract, TractValue
from tracts.kernels.gfp import PrimeField

logger = logging.getLogger(__name__)

Number = Union[int, Fraction, str]


class _Field:
    """Exact scalar arithmetic: ℚ via Fraction, or GF(p) on residues"""

    def __init__(self, p: Optional[int] = None):
        self.p = p

    def coerce(self, x: Number):
        if self.p is None:
            return Fraction(x)
        value = Fraction(x)
        if value.denominator != 1:
            raise ParseError(f"GF({self.p}) coordinates must be integers, got {x!r}")
        return int(value) % self.p

    def is_zero(self, x) -> bool:
        return x == 0

    def inv(self, x):
        return 1 / x if self.p is None else pow(x, self.p - 2, self.p)

    def reduce(self, x):
        return x if self.p is None else x % self.p


def _field_for(tract: Tract) -> _Field:
    return _Field(tract.p) if isinstance(tract, PrimeField) else _Field()


def _row_reduce(columns: List[List], field: _Field) -> List[List]:
    """Reduced row echelon form of the matrix with these columns; zero rows dropped"""
    if not columns:
        return []
    rows = [[columns[j][i] for j in range(len(columns))] for i in range(len(columns[0]))]
    pivot_row = 0
    for col in range(len(columns)):
        pivot = next((r for r in range(pivot_row, len(rows)) if not field.is_zero(rows[r][col])), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        scale = field.inv(rows[pivot_row][col])
        rows[pivot_row] = [field.reduce(v * scale) for v in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and not field.is_zero(rows[r][col]):
                factor = rows[r][col]
                rows[r] = [field.reduce(a - factor * b) for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows[:pivot_row]


def determinant(matrix: Sequence[Sequence], field: _Field):
    rows = [list(r) for r in matrix]
    n = len(rows)
    det = field.reduce(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if not field.is_zero(rows[r][col])), None)
        if pivot is None:
            return field.reduce(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = field.reduce(-det)
        det = field.reduce(det * rows[col][col])
        inv = field.inv(rows[col][col])
        for r in range(col + 1, n):
            factor = field.reduce(rows[r][col] * inv)
            if not field.is_zero(factor):
                rows[r] = [field.reduce(a - factor * b) for a, b in zip(rows[r], rows[col])]
    return det


def _to_tract(tract: Tract, x, field: _Field) -> TractValue:
    if field.is_zero(x):
        return tract.zero
    if field.p is not None:
        return tract.value(str(x))
    if tract.kind == "krasner":
        return tract.one
    if tract.kind in ("sign", "phase"):
        return tract.one if x > 0 else -tract.one
    raise ParseError(f"rational configurations cannot be pushed to {tract.name}", position="tract")


class Configuration:
    """Labelled vectors reduced to coordinates of their span"""

    def __init__(self, tract: Tract, vectors: Mapping[str, Sequence[Number]]):
        if not vectors:
            raise ParseError("configuration needs at least one vector")
        lengths = {len(v) for v in vectors.values()}
        if len(lengths) != 1:
            raise ParseError("configuration vectors have different lengths")
        self.tract = tract
        self.field = _field_for(tract)
        self.ground = GroundSet(vectors)
        self.raw = {e: [self.field.coerce(x) for x in v] for e, v in vectors.items()}
        reduced = _row_reduce([self.raw[e] for e in self.ground], self.field)
        self.rank = len(reduced)
        self.coords: Dict[str, List] = {e: [row[j] for row in reduced] for j, e in enumerate(self.ground)}

    def coordinates_of(self, vector: Sequence[Number]) -> List:
        """Coordinates of an extra vector in the same reduced system; raises if it leaves the span"""
        columns = [self.raw[e] for e in self.ground] + [[self.field.coerce(x) for x in vector]]
        reduced = _row_reduce(columns, self.field)
        if len(reduced) > self.rank:
            raise ExtensionError("new vector is not in the span of the configuration; it would be a coloop")
        return [row[-1] for row in reduced]

    def functionals(self) -> List[Tuple[Tuple[str, ...], Callable[[Sequence], object]]]:
        """One determinant functional per independent (d-1)-subset"""
        out = []
        d = self.rank
        for S in combinations(self.ground.labels, d - 1):
            fixed = [self.coords[s] for s in S]
            if d > 1 and len(_row_reduce(fixed, self.field)) < d - 1:
                continue
            out.append((S, lambda v, fixed=fixed: determinant([*fixed, list(v)], self.field)))
        return out

    def cocircuit_vectors(self) -> Dict[frozenset, Tuple[TVector, Callable]]:
        found: Dict[frozenset, Tuple[TVector, Callable]] = {}
        for S, f in self.functionals():
            Y = TVector(self.ground, self.tract, [_to_tract(self.tract, f(self.coords[e]), self.field) for e in self.ground])
            found.setdefault(Y.support(), (Y, f))
        return found


def matroid_from_vectors(tract: Tract, vectors: Mapping[str, Sequence[Number]]) -> TMatroid:
    """
    The left matroid of a vector configuration. Cocircuits are the sign, support
    or residue patterns of the determinant functionals vanishing on spanning
    hyperplanes; circuits come from duality.
    """
    config = Configuration(tract, vectors)
    if config.rank == 0:
        raise ParseError("configuration spans the zero space")
    cocircuits = [Y for Y, _ in config.cocircuit_vectors().values()]
    logger.debug("configuration of rank %d has %d cocircuits", config.rank, len(cocircuits))
    return TMatroid(config.ground, tract, "right", cocircuits).dual


def extension_sigma(tract: Tract, vectors: Mapping[str, Sequence[Number]], p_vector: Sequence[Number],
                    p: str = "p"):
    """
    σ of the configuration extended by p_vector: for the functional f of a
    hyperplane, the cocircuit (f(v_e))_e maps to f(v_p).
    """
    from extensions.localization import check_equivariance

    config = Configuration(tract, vectors)
    base = matroid_from_vectors(tract, vectors)
    vp = config.coordinates_of(p_vector)
    raw: Dict[TVector, TractValue] = {}
    for Y, f in config.cocircuit_vectors().values():
        raw[Y] = _to_tract(tract, f(vp), config.field)
    return check_equivariance(base, raw, p=p, allow_zero=True)
