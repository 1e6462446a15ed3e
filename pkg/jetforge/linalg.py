# -*- coding: utf-8 -*-

"""
jetforge.linalg
~~~~~~~~~~~~~~~

系数域上的精确高斯消元。

稠密矩阵用于线性部分与Jacobian矩阵；稀疏行（列下标到非零元素的dict）用于局部成员判定中的张成空间计算。
"""

import logging

from .poly import Monomial, partial_derivative

logger = logging.getLogger(__name__)


def row_reduce(matrix, field, track=False):
    """把稠密矩阵化为约化行阶梯形。

    :param matrix: 行的列表，每行是域元素的列表
    :param track: 为True时同时返回变换矩阵T，使得 T * matrix = rref

    :return: (rref, pivots) 或者 (rref, pivots, T)；pivots为主元所在列的列表
    """
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    transform = [[field.one if i == j else field.zero for j in range(nrows)] for i in range(nrows)]

    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = None
        for i in range(r, nrows):
            if not field.is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            continue

        rows[r], rows[pivot] = rows[pivot], rows[r]
        transform[r], transform[pivot] = transform[pivot], transform[r]

        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, a) for a in rows[r]]
        transform[r] = [field.mul(inv, a) for a in transform[r]]

        for i in range(nrows):
            if i == r or field.is_zero(rows[i][c]):
                continue
            factor = rows[i][c]
            rows[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(rows[i], rows[r])]
            transform[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(transform[i], transform[r])]

        pivots.append(c)
        r += 1

    if track:
        return rows, pivots, transform
    return rows, pivots


def rank(matrix, field):
    if not matrix:
        return 0
    return len(row_reduce(matrix, field)[1])


class SparseEchelon(object):
    """稀疏行的增量阶梯形，用于判断向量是否落在若干向量张成的空间中。

    :param field: 系数域
    :param key: 列的排序键；每行的主元取键最大的列
    """
    def __init__(self, field, key=None):
        self.field = field
        self.key = key or (lambda c: c)
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def _pivot(self, row):
        return max(row, key=self.key)

    def add(self, row):
        """加入一行；若它已在张成空间中则返回False。"""
        field = self.field
        row = self._reduce_leading(row)
        if not row:
            return False
        col = self._pivot(row)
        inv = field.inv(row[col])
        self.rows[col] = dict((c, field.mul(inv, a)) for c, a in row.items())
        return True

    def _reduce_leading(self, row):
        field = self.field
        row = dict((c, a) for c, a in row.items() if not field.is_zero(a))
        while row:
            col = self._pivot(row)
            basis = self.rows.get(col)
            if basis is None:
                return row
            factor = row[col]
            for c, a in basis.items():
                v = field.sub(row.get(c, field.zero), field.mul(factor, a))
                if field.is_zero(v):
                    row.pop(c, None)
                else:
                    row[c] = v
        return row

    def contains(self, row):
        return not self._reduce_leading(row)


def jacobian(polys, variables):
    """Jacobian矩阵，第k行第l列为 d polys[k] / d variables[l] 。"""
    return [[partial_derivative(f, v) for v in variables] for f in polys]


def jacobian_rank_at(polys, variables, values=None):
    """Jacobian矩阵在点处的秩。

    :param values: JetVar到域元素的dict，缺省为原点
    """
    polys = list(polys)
    if not polys or not variables:
        return 0
    field = polys[0].field
    values = values or {}
    matrix = [[d.evaluate(values) for d in row] for row in jacobian(polys, variables)]
    return rank(matrix, field)


def linear_part_matrix(polys, variables):
    """各多项式一次项系数组成的矩阵，即Jacobian矩阵在原点处的值。"""
    return [[f.coefficient(Monomial.of(v)) for v in variables] for f in polys]
