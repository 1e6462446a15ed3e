# -*- coding: utf-8 -*-

"""
jetforge.jets
~~~~~~~~~~~~~

jet理想的构造、截断映射、平凡jet、平凡jet上的纤维以及态射在jet上的诱导映射。

设 X ⊂ A^N 由理想 I = (f_1, ..., f_r) 定义。X 的 m 阶jet概形 X_m 位于 A^{N(m+1)} 中，
由所有 F_{g,i}（g 为生成元下标，0 <= i <= m）定义，其中 F_{g,i} 是
f_g(x_0 + x_1 t + ... + x_m t^m) 中 t^i 的系数。

点都是 k-有理点，坐标取自系数域。
"""

import logging
from collections import OrderedDict, namedtuple

from .compat import is_integer
from .exceptions import InvalidArgument, NotOnScheme, FieldMismatch
from .poly import Poly, JetVar
from .series import expand_in_t
from . import groebner

logger = logging.getLogger(__name__)


def _check_order(name, m):
    if not is_integer(m) or m < 0:
        raise InvalidArgument(name, m, 'jet order must be a nonnegative integer')


class AmbientIdeal(object):
    """A^N 中的理想 I_X 。

    :param field: 系数域
    :param int nvars: 环境维数N
    :param generators: 只含第0层变量的非零 :class:`Poly <jetforge.poly.Poly>` 列表；空列表表示零理想，即 X = A^N
    :param names: 可选的环境变量名，只用于输出
    """
    def __init__(self, field, nvars, generators=(), names=None):
        if not is_integer(nvars) or nvars < 0:
            raise InvalidArgument('nvars', nvars, 'ambient dimension must be a nonnegative integer')

        generators = list(generators)
        for k, f in enumerate(generators):
            if not isinstance(f, Poly):
                raise InvalidArgument('generators', f, 'generator {0} is not a polynomial'.format(k + 1))
            if f.field != field:
                raise FieldMismatch(str(field), str(f.field))
            if f.is_zero():
                raise InvalidArgument('generators', str(f),
                                      'generator {0} is zero; give an empty list for the zero ideal'.format(k + 1))
            for v in f.variables():
                if v.level != 0 or v.index > nvars:
                    raise InvalidArgument('generators', str(f),
                                          'generator {0} uses {1}, which is not an ambient coordinate'.format(k + 1, v))

        if names is not None:
            names = tuple(names)
            if len(names) != nvars:
                raise InvalidArgument('names', names, 'expected {0} variable names'.format(nvars))

        self.field = field
        self.nvars = nvars
        self.generators = generators
        self.names = names

    @property
    def N(self):
        return self.nvars

    def __len__(self):
        return len(self.generators)

    def is_zero(self):
        return not self.generators

    def variables(self):
        return [JetVar(0, j) for j in range(1, self.nvars + 1)]

    def point_values(self, point):
        """把长度为N的坐标序列转换为 JetVar(0, j) 到域元素的dict。"""
        point = list(point)
        if len(point) != self.nvars:
            raise InvalidArgument('point', point, 'expected {0} coordinates'.format(self.nvars))
        return dict((JetVar(0, j + 1), self.field.convert(a)) for j, a in enumerate(point))

    def contains_point(self, point):
        values = self.point_values(point)
        return all(self.field.is_zero(f.evaluate(values)) for f in self.generators)

    def contains_origin(self):
        return all(self.field.is_zero(f.constant_term()) for f in self.generators)

    def translate(self, vector):
        """把点 a 平移到原点：返回由 f(x + a) 生成的理想。"""
        values = self.point_values(vector)
        mapping = dict((v, Poly.variable(self.field, v) + Poly.constant(self.field, a))
                       for v, a in values.items() if not self.field.is_zero(a))
        if not mapping:
            return self

        generators = [f.substitute(mapping) for f in self.generators]
        logger.debug("translate ideal done, vector: {0}".format([self.field.to_string(a) for a in
                                                                   [values[v] for v in self.variables()]]))
        return AmbientIdeal(self.field, self.nvars, [f for f in generators if not f.is_zero()], self.names)

    def __str__(self):
        if not self.generators:
            return '(0)'
        return '({0})'.format(', '.join(f.to_string(self.names) for f in self.generators))

    def __repr__(self):
        return 'AmbientIdeal({0}, N={1}, {2})'.format(self.field, self.nvars, self)


class JetIdeal(object):
    """X_m 在 A^{N(m+1)} 中的理想。

    `jet_generators` 是 (生成元下标g, 层i) 到 F_{g,i} 的有序dict，按 (g, i) 字典序排列；
    F_{g,i} 可能为零（正特征时），零多项式同样保存。生成元下标从0开始。
    """
    def __init__(self, base, m, jet_generators):
        self.base = base
        self.m = m
        self.jet_generators = jet_generators

    @property
    def field(self):
        return self.base.field

    @property
    def nvars(self):
        return self.base.nvars * (self.m + 1)

    def items(self):
        return self.jet_generators.items()

    def get(self, g, i):
        return self.jet_generators[(g, i)]

    def generators(self):
        """非零的 F_{g,i} ，按 (g, i) 排序。"""
        return [F for F in self.jet_generators.values() if not F.is_zero()]

    def zero_entries(self):
        return [key for key, F in self.jet_generators.items() if F.is_zero()]

    def is_zero(self):
        return not self.generators()

    def variables(self):
        return [JetVar(i, j) for i in range(self.m + 1) for j in range(1, self.base.nvars + 1)]

    def contains_point(self, point):
        if point.m != self.m or point.nvars != self.base.nvars:
            raise InvalidArgument('point', point, 'point lives on a different jet grid')
        values = point.values()
        return all(self.field.is_zero(F.evaluate(values)) for F in self.generators())

    def __len__(self):
        return len(self.jet_generators)


class JetPoint(object):
    """X_m 的一个k-有理点，即一个 m-jet 。

    :param field: 系数域
    :param int nvars: 环境维数N
    :param int m: jet阶
    :param coordinates: JetVar 到域元素的dict，缺省的坐标为0
    """
    def __init__(self, field, nvars, m, coordinates=None):
        _check_order('m', m)
        self.field = field
        self.nvars = nvars
        self.m = m

        coords = {}
        for v, a in (coordinates or {}).items():
            if not isinstance(v, JetVar):
                v = JetVar(*v)
            if v.level > m or v.index > nvars:
                raise InvalidArgument('coordinates', str(v), 'outside the {0}x{1} jet grid'.format(m + 1, nvars))
            a = field.convert(a)
            if not field.is_zero(a):
                coords[v] = a
        self._coords = coords

    @classmethod
    def from_levels(cls, field, levels):
        """由每层坐标的列表构造：`levels[i][j-1]` 是 x[i][j] 的值。"""
        levels = [list(row) for row in levels]
        if not levels:
            raise InvalidArgument('levels', levels, 'a jet needs at least its level-0 coordinates')
        nvars = len(levels[0])
        if any(len(row) != nvars for row in levels):
            raise InvalidArgument('levels', levels, 'every level must have the same number of coordinates')
        coords = dict((JetVar(i, j + 1), a) for i, row in enumerate(levels) for j, a in enumerate(row))
        return cls(field, nvars, len(levels) - 1, coords)

    def value(self, level, index):
        return self._coords.get(JetVar(level, index), self.field.zero)

    def values(self):
        return dict(self._coords)

    def level(self, i):
        return [self.value(i, j) for j in range(1, self.nvars + 1)]

    def levels(self):
        return [self.level(i) for i in range(self.m + 1)]

    def __eq__(self, other):
        return (isinstance(other, JetPoint) and self.field == other.field and self.nvars == other.nvars and
                self.m == other.m and self._coords == other._coords)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'JetPoint(m={0}, {1})'.format(self.m, [[self.field.to_string(a) for a in row]
                                                       for row in self.levels()])


def jetify(I, m):
    """构造 X_m 的理想 (F_{g,i} : g, i <= m)。

    :param I: :class:`AmbientIdeal`
    :param int m: jet阶
    :return: :class:`JetIdeal`
    """
    _check_order('m', m)
    logger.debug("Start to jetify, ideal: {0}, m: {1}".format(I, m))

    jet_generators = OrderedDict()
    for g, f in enumerate(I.generators):
        for i, F in enumerate(expand_in_t(f, m)):
            jet_generators[(g, i)] = F

    result = JetIdeal(I, m, jet_generators)
    logger.debug("jetify done, nonzero generators: {0}, zero entries: {1}".format(
        len(result.generators()), len(result.zero_entries())))
    return result


def truncate_point(I, point, m):
    """截断映射 psi_{m',m}：只保留层号 <= m 的坐标。

    :param point: X_{m'} 上的 :class:`JetPoint`
    :param int m: 目标阶，0 <= m <= m'

    :raises NotOnScheme: point 不在 X_{m'} 上
    """
    _check_order('m', m)
    if m > point.m:
        raise InvalidArgument('m', m, 'cannot truncate an order-{0} jet to order {1}'.format(point.m, m))
    if not jetify(I, point.m).contains_point(point):
        raise NotOnScheme('point is not on X_{0}'.format(point.m), {'point': repr(point)})

    coords = dict((v, a) for v, a in point.values().items() if v.level <= m)
    return JetPoint(point.field, point.nvars, m, coords)


def trivial_jet(I, x, m):
    """平凡jet x_m = sigma_m(x)：第0层坐标为 x ，更高层全为0。

    :raises NotOnScheme: x 不在 X 上
    """
    _check_order('m', m)
    if not I.contains_point(x):
        raise NotOnScheme('point is not on X', {'point': [str(a) for a in x]})
    coords = dict((v, a) for v, a in I.point_values(x).items())
    return JetPoint(I.field, I.nvars, m, coords)


FiberEntry = namedtuple('FiberEntry', ['generator', 'level', 'poly', 'is_zero'])


class FiberIdeal(object):
    """截断映射 psi_{m',m} 在平凡jet x_m 上的纤维，嵌在 A^{N(m'-m)} 中（变量为第 m+1..m' 层）。

    `entries` 是 :class:`FiberEntry` 的列表，零多项式保留并带有 `is_zero` 标记。
    """
    def __init__(self, field, nvars, m, m_prime, entries, point=None):
        self.field = field
        self.nvars = nvars
        self.m = m
        self.m_prime = m_prime
        self.entries = entries
        self.point = point

    @property
    def ambient_dim(self):
        return self.nvars * (self.m_prime - self.m)

    def generators(self):
        return [e.poly for e in self.entries if not e.is_zero]

    @property
    def is_free(self):
        """纤维理想为零，即纤维同构于 A^{N(m'-m)} 。"""
        return all(e.is_zero for e in self.entries)

    def variables(self):
        return [JetVar(i, j) for i in range(self.m + 1, self.m_prime + 1) for j in range(1, self.nvars + 1)]

    def dimension(self):
        if self.is_free:
            return self.ambient_dim
        return groebner.krull_dimension(self.generators(), self.ambient_dim)


def fiber_over_trivial_jet(I, m, m_prime, point=None):
    """psi_{m',m}^{-1}(x_m) 的定义方程：把 F_{g,i}（m < i <= m'）中层号 <= m 的变量
    代为平凡jet x_m 的坐标（缺省 x 为原点，此时全部代为0）。

    :param I: :class:`AmbientIdeal`
    :param point: X 上的点，长度为N的序列；None表示原点
    :return: :class:`FiberIdeal`
    """
    _check_order('m', m)
    if not is_integer(m_prime) or m_prime <= m:
        raise InvalidArgument('m_prime', m_prime, 'need 0 <= m < m_prime')

    field = I.field
    if point is None:
        if not I.contains_origin():
            raise NotOnScheme('origin is not on X')
        base_values = {}
    else:
        if not I.contains_point(point):
            raise NotOnScheme('point is not on X', {'point': [str(a) for a in point]})
        base_values = dict((v, a) for v, a in I.point_values(point).items() if not field.is_zero(a))

    logger.debug("Start to compute fiber, ideal: {0}, m: {1}, m_prime: {2}".format(I, m, m_prime))

    J = jetify(I, m_prime)
    entries = []
    for (g, i), F in J.items():
        if i <= m:
            continue
        mapping = {}
        for v in F.variables():
            if v.level <= m:
                mapping[v] = Poly.constant(field, base_values.get(v, field.zero) if v.level == 0 else field.zero)
        G = F.substitute(mapping) if mapping else F
        entries.append(FiberEntry(g, i, G, G.is_zero()))

    fiber = FiberIdeal(field, I.nvars, m, m_prime, entries, point)
    logger.debug("fiber done, nonzero entries: {0}, free: {1}".format(len(fiber.generators()), fiber.is_free))
    return fiber


class JetMorphism(object):
    """多项式映射 f: A^N -> A^P 诱导的 f_m: (A^N)_m -> (A^P)_m 。

    分量 (q, i) 是 expand_in_t(f_q, m)[i]，q 从1开始编号，与目标坐标 x[i][q] 对应。
    """
    def __init__(self, field, source_dim, polys, m, components):
        self.field = field
        self.source_dim = source_dim
        self.polys = polys
        self.m = m
        self.components = components

    @property
    def target_dim(self):
        return len(self.polys)

    def component(self, q, i):
        return self.components[(q, i)]

    def apply(self, point):
        """把 m-jet 映为 m-jet：f_m(alpha) = f o alpha 。"""
        if point.m != self.m or point.nvars != self.source_dim:
            raise InvalidArgument('point', point, 'point lives on a different jet grid')
        values = point.values()
        coords = dict((JetVar(i, q), F.evaluate(values)) for (q, i), F in self.components.items())
        return JetPoint(self.field, self.target_dim, self.m, coords)


def jet_of_morphism(polys, m, nvars=None):
    """构造 f_m 。

    :param polys: 只含第0层变量的多项式列表 (f_1, ..., f_P)
    :param int m: jet阶
    :param nvars: 源空间维数N；缺省取多项式中出现的最大坐标下标
    """
    _check_order('m', m)
    polys = list(polys)
    if not polys:
        raise InvalidArgument('polys', polys, 'a morphism needs at least one component')

    field = polys[0].field
    for f in polys:
        if f.field != field:
            raise FieldMismatch(str(field), str(f.field))

    used = max([v.index for f in polys for v in f.variables()] or [1])
    nvars = used if nvars is None else nvars
    if used > nvars:
        raise InvalidArgument('nvars', nvars, 'components use coordinate {0}'.format(used))

    components = OrderedDict()
    for q, f in enumerate(polys):
        for i, F in enumerate(expand_in_t(f, m)):
            components[(q + 1, i)] = F
    return JetMorphism(field, nvars, polys, m, components)


def compose_morphisms(g, f):
    """(g o f)_m ：先把 g 的多项式与 f 的多项式复合，再取jet。"""
    if g.m != f.m:
        raise InvalidArgument('g', g.m, 'morphisms have different jet orders {0} and {1}'.format(g.m, f.m))
    if g.source_dim != f.target_dim:
        raise InvalidArgument('g', g.source_dim, 'source of g does not match target of f')

    mapping = dict((JetVar(0, q + 1), fq) for q, fq in enumerate(f.polys))
    return jet_of_morphism([gq.substitute(mapping) for gq in g.polys], f.m, f.source_dim)


def jet_scheme_dimension(I, m):
    """X_m 的（整体）Krull维数。"""
    J = jetify(I, m)
    return groebner.krull_dimension(J.generators(), J.nvars)
