# -*- coding: utf-8 -*-

"""
jetforge.series
~~~~~~~~~~~~~~~

t的截断幂级数及其上的代入运算。

把 x[0][j] 代换为 x[0][j] + x[1][j] t + ... + x[m][j] t^m 并在 t^(m+1) 处截断，
t^i 的系数即为 F_i 。
"""

import logging

from .exceptions import InvalidArgument
from .poly import Poly, JetVar
from .compat import is_integer

logger = logging.getLogger(__name__)


class TruncatedSeries(object):
    """系数为多项式的截断幂级数 c_0 + c_1 t + ... + c_m t^m 。"""
    __slots__ = ('field', 'm', 'coeffs')

    def __init__(self, field, m, coeffs=None):
        self.field = field
        self.m = m
        coeffs = list(coeffs or [])[:m + 1]
        while len(coeffs) < m + 1:
            coeffs.append(Poly.zero(field))
        self.coeffs = coeffs

    @classmethod
    def constant(cls, field, m, poly):
        return cls(field, m, [poly])

    @classmethod
    def generic_jet(cls, field, m, index):
        """x[0][index] + x[1][index] t + ... + x[m][index] t^m"""
        return cls(field, m, [Poly.variable(field, JetVar(i, index)) for i in range(m + 1)])

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        return TruncatedSeries(self.field, self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, Poly):
            return TruncatedSeries(self.field, self.m, [c * other for c in self.coeffs])

        m = self.m
        out = [Poly.zero(self.field) for _ in range(m + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(m + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.field, m, out)

    def __pow__(self, n):
        result = TruncatedSeries.constant(self.field, self.m, Poly.constant(self.field, 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


class _PowerCache(object):
    def __init__(self, series):
        self.series = series
        self.cache = {}

    def power(self, index, n):
        key = (index, n)
        if key not in self.cache:
            self.cache[key] = self.series[index] ** n
        return self.cache[key]


def evaluate_at_series(f, series, m):
    """用Horner格式在截断级数处求 f 的值。

    :param f: 只含第0层变量的多项式
    :param series: 坐标下标到 :class:`TruncatedSeries` 的dict
    :param int m: 级数的截断阶
    """
    field = f.field
    indices = sorted(set(v.index for v in f.variables()))
    cache = _PowerCache(series)

    terms = [(dict((v.index, e) for v, e in mono.items), c) for mono, c in f.items()]
    return _horner(field, m, terms, indices, 0, cache)


def _horner(field, m, terms, indices, pos, cache):
    if not terms:
        return TruncatedSeries(field, m)

    if pos == len(indices):
        c = field.zero
        for _, coeff in terms:
            c = field.add(c, coeff)
        return TruncatedSeries.constant(field, m, Poly.constant(field, c))

    index = indices[pos]
    groups = {}
    for exps, c in terms:
        groups.setdefault(exps.get(index, 0), []).append((exps, c))

    # f = (...((c_k) s^(k-k') + c_k') s^(k'-k'') + ...) s^(k_min)
    degrees = sorted(groups, reverse=True)
    acc = None
    prev = degrees[0]
    for deg in degrees:
        inner = _horner(field, m, groups[deg], indices, pos + 1, cache)
        if acc is None:
            acc = inner
        else:
            acc = acc * cache.power(index, prev - deg) + inner
        prev = deg
    if prev:
        acc = acc * cache.power(index, prev)
    return acc


def expand_in_t(f, m):
    """计算 [F_0, ..., F_m] 。

    F_i 是把 x[0][j] 代换为 sum_i x[i][j] t^i 并截断到 t^m 之后 t^i 的系数；
    F_i 的每个单项式的权重都是 i，且 F_0 = f 。

    :param f: 只含第0层变量的 :class:`Poly <jetforge.poly.Poly>`
    :param int m: 截断阶，m >= 0

    :raises InvalidArgument: f 含有非第0层变量，或者 m < 0
    """
    if not is_integer(m) or m < 0:
        raise InvalidArgument('m', m, 'jet order must be a nonnegative integer')
    if f.max_level() > 0:
        raise InvalidArgument('f', str(f), 'only level-0 variables may be expanded in t')

    field = f.field
    indices = sorted(set(v.index for v in f.variables()))
    series = dict((j, TruncatedSeries.generic_jet(field, m, j)) for j in indices)
    result = evaluate_at_series(f, series, m).coeffs

    logger.debug("expand in t done, terms: {0}, m: {1}, sizes: {2}".format(
        len(f), m, [len(F) for F in result]))
    return result


def compose_with_jet(f, values, m):
    """把点值截断级数（系数为域元素）代入 f ，返回长度为 m+1 的域元素列表。

    :param values: 坐标下标到长度 m+1 的域元素列表的dict，即一个 m-jet 的坐标
    """
    if f.max_level() > 0:
        raise InvalidArgument('f', str(f), 'only level-0 variables may be composed with a jet')

    field = f.field
    series = {}
    for index, coeffs in values.items():
        series[index] = TruncatedSeries(field, m, [Poly.constant(field, c) for c in coeffs])
    for v in f.variables():
        if v.index not in series:
            series[v.index] = TruncatedSeries(field, m)

    out = evaluate_at_series(f, series, m).coeffs
    return [c.constant_term() for c in out]
