#!/usr/bin/env python3
"""
Exact zero-testing kernel behind count_intersections.

Each system polynomial is expanded as F = sum_k F_k(s, t) * x^i_k y^j_k. A
point q of Q becomes the coefficient vector (F_k(q))_k and a point p of P the
monomial vector (x_p^i_k y_p^j_k)_k, and F(p, q) is their dot product. Both
vectors are rescaled to Gaussian integers (nonzero scalings do not change
which products vanish), so the test runs on Python ints or, when the sizes
provably fit, on numpy int64 matrix products.

Points q whose coefficient vectors are proportional define the same curve;
only one representative per class is tested.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from algebra import XY, GaussRational, Polynomial, coefficient_decompose
from .points import PointSet

GaussInt = Tuple[int, int]
INT64_SAFE = 2 ** 62


def _lcm(values) -> int:
    result = 1
    for value in values:
        result = result * value // math.gcd(result, value)
    return result


def _gauss_mul(a: GaussInt, b: GaussInt) -> GaussInt:
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _gauss_pow(a: GaussInt, e: int) -> GaussInt:
    result = (1, 0)
    for _ in range(e):
        result = _gauss_mul(result, a)
    return result


def _integer_vector(values: Sequence[GaussRational]) -> List[GaussInt]:
    scale = _lcm(v.denominator() for v in values)
    return [v.scaled_integers(scale) for v in values]


def _normalized(values: Sequence[GaussRational]) -> Tuple[GaussRational, ...]:
    pivot = next((v for v in values if v), None)
    if pivot is None:
        return tuple(values)
    inverse = pivot.inverse()
    return tuple(v * inverse for v in values)


@dataclass(frozen=True)
class ChunkTask:
    """Work unit: every P row against a block of representative Q columns."""

    p_re: Tuple[Tuple[Tuple[int, ...], ...], ...]      # [poly][p][k]
    p_im: Tuple[Tuple[Tuple[int, ...], ...], ...]
    columns: Tuple[Tuple[int, Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]], ...]
    real: bool
    use_numpy: bool


ChunkResult = List[Tuple[int, Tuple[int, ...]]]


def _zero_mask_numpy(task: ChunkTask) -> np.ndarray:
    n_p = len(task.p_re[0])
    mask = np.ones((n_p, len(task.columns)), dtype=bool)
    for poly in range(len(task.p_re)):
        m_re = np.array(task.p_re[poly], dtype=np.int64)
        c_re = np.array([column[1][poly] for column in task.columns], dtype=np.int64).T
        value_re = m_re @ c_re
        if task.real:
            mask &= value_re == 0
            continue
        m_im = np.array(task.p_im[poly], dtype=np.int64)
        c_im = np.array([column[2][poly] for column in task.columns], dtype=np.int64).T
        value_re = value_re - m_im @ c_im
        value_im = m_re @ c_im + m_im @ c_re
        mask &= (value_re == 0) & (value_im == 0)
    return mask


def _incident_python(task: ChunkTask, column) -> Tuple[int, ...]:
    _, c_re, c_im = column
    polys = range(len(task.p_re))
    incident = []
    for p in range(len(task.p_re[0])):
        for poly in polys:
            row_re, vec_re = task.p_re[poly][p], c_re[poly]
            if task.real:
                if sum(map(int.__mul__, row_re, vec_re)):
                    break
                continue
            row_im, vec_im = task.p_im[poly][p], c_im[poly]
            real_part = sum(map(int.__mul__, row_re, vec_re)) - sum(map(int.__mul__, row_im, vec_im))
            if real_part:
                break
            if sum(map(int.__mul__, row_re, vec_im)) + sum(map(int.__mul__, row_im, vec_re)):
                break
        else:
            incident.append(p)
    return tuple(incident)


def run_chunk(task: ChunkTask) -> ChunkResult:
    """Incident P indices for every representative column of the chunk."""
    if not task.columns or not task.p_re or not task.p_re[0]:
        return [(column[0], ()) for column in task.columns]
    if task.use_numpy:
        mask = _zero_mask_numpy(task)
        return [(column[0], tuple(int(p) for p in np.flatnonzero(mask[:, j])))
                for j, column in enumerate(task.columns)]
    return [(column[0], _incident_python(task, column)) for column in task.columns]


class CountKernel:
    """
    Prepared form of a polynomial system against fixed point sets P and Q.

    Args:
        system: one or two nonzero polynomials in x, y, s, t
        P: points substituted for (x, y)
        Q: points substituted for (s, t)
    """

    def __init__(self, system: Sequence[Polynomial], P: PointSet, Q: PointSet):
        self.system = list(system)
        self.P = P
        self.Q = Q
        self.supports: List[List[Tuple[int, int]]] = []
        self.coefficients: List[List[Polynomial]] = []
        for F in self.system:
            decomposition = coefficient_decompose(F, XY)
            self.supports.append(decomposition.indices())
            self.coefficients.append([c for _, c in decomposition])

        self.p_re, self.p_im = self._p_rows()
        self.class_keys: List[tuple] = []
        self.class_members: List[List[int]] = []
        self.class_vectors: List[Tuple[tuple, tuple]] = []
        self._classify_q()

    def _p_rows(self):
        p_re, p_im = [], []
        for support in self.supports:
            top = max(i + j for i, j in support)
            rows_re, rows_im = [], []
            for x_p, y_p in self.P:
                scale = _lcm((x_p.denominator(), y_p.denominator()))
                X, Y, D = x_p.scaled_integers(scale), y_p.scaled_integers(scale), (scale, 0)
                row = [_gauss_mul(_gauss_mul(_gauss_pow(X, i), _gauss_pow(Y, j)), _gauss_pow(D, top - i - j))
                       for i, j in support]
                rows_re.append(tuple(v[0] for v in row))
                rows_im.append(tuple(v[1] for v in row))
            p_re.append(tuple(rows_re))
            p_im.append(tuple(rows_im))
        return tuple(p_re), tuple(p_im)

    def _classify_q(self):
        index: Dict[tuple, int] = {}
        for q_index, (s_q, t_q) in enumerate(self.Q):
            assignment = {"s": s_q, "t": t_q}
            vectors = [[c.substitute(assignment).constant_value() for c in coefficients]
                       for coefficients in self.coefficients]
            key = tuple(_normalized(vector) for vector in vectors)
            if key not in index:
                index[key] = len(self.class_keys)
                self.class_keys.append(key)
                self.class_members.append([])
                integer = [_integer_vector(vector) for vector in key]
                self.class_vectors.append((tuple(tuple(v[0] for v in vec) for vec in integer),
                                           tuple(tuple(v[1] for v in vec) for vec in integer)))
            self.class_members[index[key]].append(q_index)

    def degenerate_classes(self) -> List[int]:
        """Classes whose coefficient vectors vanish for every polynomial."""
        return [c for c, key in enumerate(self.class_keys) if all(not any(vec) for vec in key)]

    def is_real(self) -> bool:
        rows = all(not any(any(row) for row in poly) for poly in self.p_im)
        columns = all(not any(any(vec) for vec in vectors[1]) for vectors in self.class_vectors)
        return rows and columns

    def fits_int64(self) -> bool:
        largest_row = max((abs(v) for part in (self.p_re, self.p_im) for poly in part for row in poly for v in row),
                          default=0)
        largest_column = max((abs(v) for vectors in self.class_vectors for part in vectors
                              for vec in part for v in vec), default=0)
        width = max((len(support) for support in self.supports), default=1)
        return 2 * width * largest_row * largest_column < INT64_SAFE

    def tasks(self, chunk_size: int, use_numpy: bool = True) -> List[ChunkTask]:
        real = self.is_real()
        numpy_ok = use_numpy and self.fits_int64()
        tasks = []
        for start in range(0, len(self.class_vectors), chunk_size):
            columns = tuple((c, vectors[0], vectors[1])
                            for c, vectors in enumerate(self.class_vectors[start:start + chunk_size], start))
            tasks.append(ChunkTask(self.p_re, self.p_im, columns, real, numpy_ok))
        return tasks

    def expand(self, results: Sequence[ChunkResult]) -> List[List[int]]:
        """Per-q incident P indices from per-class chunk results."""
        incident: List[List[int]] = [[] for _ in range(len(self.Q))]
        for chunk in results:
            for class_id, p_indices in chunk:
                for q_index in self.class_members[class_id]:
                    incident[q_index] = list(p_indices)
        return incident
