"""
Cellular Homology
Boundary matrices of a face-word complex and their Smith normal form over the integers
"""
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional
import logging

from sympy import Matrix, isprime, zeros

from .complex import Complex, HEAD, TAIL
from .errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass
class ChainComplex:
    """d2: faces x edges (signed occurrence counts), d1: edges x vertices (head minus tail)"""
    d2: Matrix
    d1: Matrix

    def is_complex(self) -> bool:
        if self.d2.rows == 0 or self.d1.cols == 0:
            return True
        return (self.d2 * self.d1).is_zero_matrix


def chain_complex(c: Complex) -> ChainComplex:
    edge_index = {e: i for i, e in enumerate(c.edges)}
    d2 = zeros(len(c.faces), len(c.edges))
    for f, word in enumerate(c.words):
        for s in word:
            d2[f, edge_index[abs(s)]] += 1 if s > 0 else -1
    d1 = zeros(len(c.edges), c.vertex_count)
    for e, i in edge_index.items():
        d1[i, c.vertex_of((e, HEAD))] += 1
        d1[i, c.vertex_of((e, TAIL))] -= 1
    return ChainComplex(d2=d2, d1=d1)


# Moves the least nonzero entry of the block starting at [s, s] to [s, s]
def _move_least_to_start(matr: Matrix, s: int) -> bool:
    pos = None
    num = 0
    for i in range(s, matr.rows):
        for j in range(s, matr.cols):
            if matr[i, j] != 0 and (pos is None or abs(matr[i, j]) < num):
                pos = (i, j)
                num = abs(matr[i, j])
    if pos is None:
        return False
    if pos[0] != s:
        matr.row_swap(s, pos[0])
    if pos[1] != s:
        matr.col_swap(s, pos[1])
    if matr[s, s] < 0:
        matr.row_op(s, lambda val, col: -val)
    return True


# Reduces row s and column s against the pivot; True once both are zero
def _reduce_edging(matr: Matrix, s: int) -> bool:
    pivot = matr[s, s]
    clean = True
    for i in range(s + 1, matr.rows):
        if matr[i, s] != 0:
            q = matr[i, s] // pivot
            matr.row_op(i, lambda val, col: val - q * matr[s, col])
            clean = clean and matr[i, s] == 0
    for j in range(s + 1, matr.cols):
        if matr[s, j] != 0:
            q = matr[s, j] // pivot
            matr.col_op(j, lambda val, row: val - q * matr[row, s])
            clean = clean and matr[s, j] == 0
    return clean


# Adds a row whose entries the pivot does not divide; True if one was found
def _fix_divisibility(matr: Matrix, s: int) -> bool:
    pivot = matr[s, s]
    for i in range(s + 1, matr.rows):
        for j in range(s + 1, matr.cols):
            if matr[i, j] % pivot != 0:
                matr.row_op(s, lambda val, col: val + matr[i, col])
                return True
    return False


def invariant_factors(matrix: Matrix) -> List[int]:
    """Nonzero diagonal of the Smith normal form, each dividing the next"""
    matr = matrix.copy()
    factors = []
    for s in range(min(matr.rows, matr.cols)):
        if not _move_least_to_start(matr, s):
            break
        while True:
            if not _reduce_edging(matr, s):
                _move_least_to_start(matr, s)
                continue
            if _fix_divisibility(matr, s):
                _move_least_to_start(matr, s)
                continue
            break
        factors.append(int(abs(matr[s, s])))
    return factors


def _rank(factors: List[int], p: Optional[int]) -> int:
    if p is None or p == 0:
        return len(factors)
    return sum(1 for d in factors if d % p != 0)


@dataclass
class HomologyReport:
    """Betti numbers by degree; torsion of H1 only for integer coefficients"""
    coefficients: str
    h0: int
    h1: int
    h2: int
    torsion: List[int] = field(default_factory=list)
    euler_characteristic: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def coefficient_name(p: Optional[int]) -> str:
    if p is None:
        return 'Z'
    if p == 0:
        return 'Q'
    return f"Z/{p}"


def homology(c: Complex, p: Optional[int] = None) -> HomologyReport:
    """
    Homology with coefficients Z (p None), Q (p = 0) or Z/p (p prime).

    Field ranks follow from the integer invariant factors: a factor counts
    toward the rank over Z/p unless p divides it.
    """
    if p is not None and p != 0 and not isprime(p):
        raise ValidationError(f"coefficient modulus must be prime, got {p}")
    chain = chain_complex(c)
    f1 = invariant_factors(chain.d1)
    f2 = invariant_factors(chain.d2)
    r1, r2 = _rank(f1, p), _rank(f2, p)
    vertices, edges, faces = c.vertex_count, len(c.edges), len(c.faces)
    report = HomologyReport(
        coefficients=coefficient_name(p),
        h0=vertices - r1,
        h1=edges - r1 - r2,
        h2=faces - r2,
        torsion=[d for d in f2 if d > 1] if p is None else [],
        euler_characteristic=c.euler_characteristic(),
    )
    logger.debug(f"H_*({report.coefficients}): {report.h0}, {report.h1} + torsion {report.torsion}, {report.h2}")
    return report
