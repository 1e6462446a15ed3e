# -*- coding: utf-8 -*-

"""
jetforge.poly
~~~~~~~~~~~~~

jet变量上的稀疏多元多项式，系数取自 :class:`FieldSpec <jetforge.field.FieldSpec>` 。

变量 `x[i][j]` 由 :class:`JetVar` 表示，i 为层（jet阶），j 为环境坐标的下标。
JetVar之间的全序是先按层、再按下标升序；单项式序为基于这一全序的分次反字典序（grevlex），
层号小的变量较大，即 x[0][1] > x[0][2] > ... > x[1][1] > ...

单项式只保存非零指数，多项式只保存非零系数，因此两个相等的多项式总有相同的项表。
"""

import logging
from collections import namedtuple

from .compat import is_integer
from .exceptions import FieldMismatch, InvalidArgument
from .field import RATIONALS
from . import defaults

logger = logging.getLogger(__name__)


class Infinity(object):
    """零多项式的阶。它大于任何整数，但本身不是数。"""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Infinity, cls).__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __hash__(self):
        return hash('jetforge.INFINITY')

    def __repr__(self):
        return 'INFINITY'

    __str__ = __repr__


INFINITY = Infinity()


class JetVar(namedtuple('JetVar', ['level', 'index'])):
    """jet变量 x[level][index]，level >= 0，index >= 1。"""
    __slots__ = ()

    def __new__(cls, level, index):
        if not is_integer(level) or level < 0:
            raise InvalidArgument('level', level, 'jet level must be a nonnegative integer')
        if not is_integer(index) or index < 1:
            raise InvalidArgument('index', index, 'coordinate index must be a positive integer')
        return super(JetVar, cls).__new__(cls, level, index)

    def __str__(self):
        return '{0}[{1}][{2}]'.format(defaults.jet_symbol, self.level, self.index)

    def shifted(self, level):
        """同一坐标在另一层上的变量。"""
        return JetVar(level, self.index)


class Monomial(object):
    """稀疏单项式，保存 (JetVar, 指数) 对，按 JetVar 升序排列。

    :param exponents: JetVar到正整数的dict，或者 (JetVar, 指数) 的序列
    """
    __slots__ = ('_items', '_degree', '_hash', '_key')

    def __init__(self, exponents=()):
        if isinstance(exponents, dict):
            exponents = exponents.items()

        acc = {}
        for var, exp in exponents:
            if not isinstance(var, JetVar):
                var = JetVar(*var)
            if not is_integer(exp) or exp < 0:
                raise InvalidArgument('exponent', exp, 'exponents must be nonnegative integers')
            if exp:
                acc[var] = acc.get(var, 0) + exp

        self._set(tuple(sorted(acc.items())))

    def _set(self, items):
        self._items = items
        self._degree = sum(e for _, e in items)
        self._hash = hash(items)
        self._key = None

    @classmethod
    def _from_sorted(cls, items):
        m = cls.__new__(cls)
        m._set(items)
        return m

    @classmethod
    def of(cls, var, exp=1):
        return cls._from_sorted(((var, exp),) if exp else ())

    @property
    def items(self):
        return self._items

    @property
    def degree(self):
        return self._degree

    @property
    def weight(self):
        return sum(v.level * e for v, e in self._items)

    def variables(self):
        return [v for v, _ in self._items]

    def exponent(self, var):
        for v, e in self._items:
            if v == var:
                return e
        return 0

    def as_dict(self):
        return dict(self._items)

    def max_level(self):
        if not self._items:
            return -1
        return max(v.level for v, _ in self._items)

    def min_level(self):
        if not self._items:
            return None
        return min(v.level for v, _ in self._items)

    def is_one(self):
        return not self._items

    def __mul__(self, other):
        if not other._items:
            return self
        if not self._items:
            return other
        acc = dict(self._items)
        for v, e in other._items:
            acc[v] = acc.get(v, 0) + e
        return Monomial._from_sorted(tuple(sorted(acc.items())))

    def __pow__(self, n):
        if n == 0:
            return ONE
        return Monomial._from_sorted(tuple((v, e * n) for v, e in self._items))

    def divides(self, other):
        theirs = dict(other._items)
        for v, e in self._items:
            if theirs.get(v, 0) < e:
                return False
        return True

    def __floordiv__(self, other):
        """精确除法，要求 other 整除 self。"""
        acc = dict(self._items)
        for v, e in other._items:
            left = acc.get(v, 0) - e
            if left < 0:
                raise InvalidArgument('divisor', str(other), 'monomial does not divide {0}'.format(self))
            if left:
                acc[v] = left
            else:
                del acc[v]
        return Monomial._from_sorted(tuple(sorted(acc.items())))

    def lcm(self, other):
        acc = dict(self._items)
        for v, e in other._items:
            if acc.get(v, 0) < e:
                acc[v] = e
        return Monomial._from_sorted(tuple(sorted(acc.items())))

    def is_coprime(self, other):
        mine = set(v for v, _ in self._items)
        return not any(v in mine for v, _ in other._items)

    def without(self, var):
        return Monomial._from_sorted(tuple((v, e) for v, e in self._items if v != var))

    def grevlex_key(self):
        """分次反字典序的排序键，键越大单项式越大。"""
        if self._key is None:
            tail = tuple((-v.level, -v.index, -e) for v, e in reversed(self._items))
            self._key = (self._degree, tail + ((1, 0, 0),))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._items == other._items

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self.grevlex_key() < other.grevlex_key()

    def __gt__(self, other):
        return self.grevlex_key() > other.grevlex_key()

    def __hash__(self):
        return self._hash

    def to_string(self, names=None):
        if not self._items:
            return '1'
        parts = []
        for v, e in self._items:
            if names is not None and v.level == 0 and v.index <= len(names):
                name = names[v.index - 1]
            else:
                name = str(v)
            parts.append(name if e == 1 else '{0}^{1}'.format(name, e))
        return '*'.join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return 'Monomial({0})'.format(self.to_string())


ONE = Monomial()


class Poly(object):
    """域 `field` 上的稀疏多项式，创建之后不再修改。

    :param field: :class:`FieldSpec <jetforge.field.FieldSpec>`
    :param terms: :class:`Monomial` 到系数的dict，系数会被转换为域中的规范元素，零系数被丢弃
    """
    __slots__ = ('field', '_terms', '_hash')

    def __init__(self, field, terms=None):
        self.field = field
        self._terms = {}
        self._hash = None

        for mono, c in (terms or {}).items():
            if not isinstance(mono, Monomial):
                mono = Monomial(mono)
            c = field.add(self._terms.get(mono, field.zero), field.convert(c))
            if field.is_zero(c):
                self._terms.pop(mono, None)
            else:
                self._terms[mono] = c

    @classmethod
    def _make(cls, field, terms):
        p = cls.__new__(cls)
        p.field = field
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, field):
        return cls._make(field, {})

    @classmethod
    def constant(cls, field, c):
        return cls(field, {ONE: c})

    @classmethod
    def variable(cls, field, var):
        return cls._make(field, {Monomial.of(var): field.one})

    @classmethod
    def monomial(cls, field, mono, c=None):
        c = field.one if c is None else field.convert(c)
        if field.is_zero(c):
            return cls.zero(field)
        return cls._make(field, {mono: c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return list(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if is_integer(other):
            other = Poly.constant(self.field, other)
        return isinstance(other, Poly) and self.field == other.field and self._terms == other._terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(str(self.field), str(other.field))
            return other
        return Poly.constant(self.field, other)

    def __add__(self, other):
        other = self._coerce(other)
        field = self.field
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            s = field.add(terms.get(mono, field.zero), c)
            if field.is_zero(s):
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return Poly._make(field, terms)

    __radd__ = __add__

    def __neg__(self):
        field = self.field
        return Poly._make(field, dict((m, field.neg(c)) for m, c in self._terms.items()))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        field = self.field
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 * m2
                s = field.add(terms.get(mono, field.zero), field.mul(c1, c2))
                if field.is_zero(s):
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        return Poly._make(field, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if not is_integer(n) or n < 0:
            raise InvalidArgument('exponent', n, 'exponents must be nonnegative integers')
        result = Poly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        """数乘。"""
        field = self.field
        c = field.convert(c)
        if field.is_zero(c):
            return Poly.zero(field)
        return Poly._make(field, dict((m, field.mul(c, a)) for m, a in self._terms.items()))

    def mul_term(self, mono, c):
        """乘以单项 c * mono。"""
        field = self.field
        if field.is_zero(c):
            return Poly.zero(field)
        return Poly._make(field, dict((m * mono, field.mul(c, a)) for m, a in self._terms.items()))

    def coefficient(self, mono):
        return self._terms.get(mono, self.field.zero)

    def degree(self):
        """全次数，零多项式返回 -1。"""
        if not self._terms:
            return -1
        return max(m.degree for m in self._terms)

    def ord(self):
        """最低次数；零多项式返回 :data:`INFINITY` 。"""
        if not self._terms:
            return INFINITY
        return min(m.degree for m in self._terms)

    def homogeneous_part(self, d):
        return Poly._make(self.field, dict((m, c) for m, c in self._terms.items() if m.degree == d))

    def truncate(self, bound):
        """丢弃次数 >= bound 的项。"""
        return Poly._make(self.field, dict((m, c) for m, c in self._terms.items() if m.degree < bound))

    def is_homogeneous(self):
        return len(set(m.degree for m in self._terms)) <= 1

    def constant_term(self):
        return self._terms.get(ONE, self.field.zero)

    def leading_term(self):
        """grevlex序下的首项 (单项式, 系数)。"""
        if not self._terms:
            raise InvalidArgument('poly', '0', 'the zero polynomial has no leading term')
        mono = max(self._terms, key=Monomial.grevlex_key)
        return mono, self._terms[mono]

    @property
    def LM(self):
        return self.leading_term()[0]

    @property
    def LC(self):
        return self.leading_term()[1]

    def monic(self):
        if not self._terms:
            return self
        return self.scale(self.field.inv(self.LC))

    def variables(self):
        result = set()
        for m in self._terms:
            result.update(m.variables())
        return sorted(result)

    def max_level(self):
        if not self._terms:
            return -1
        return max(m.max_level() for m in self._terms)

    def sorted_terms(self):
        """按grevlex降序排列的 (单项式, 系数) 列表，用于规范输出。"""
        return sorted(self._terms.items(), key=lambda t: t[0].grevlex_key(), reverse=True)

    def evaluate(self, values):
        """在点处求值，`values` 为JetVar到域元素的映射，缺省的坐标按0处理。"""
        field = self.field
        total = field.zero
        for mono, c in self._terms.items():
            term = c
            for v, e in mono.items:
                x = values.get(v, field.zero)
                if field.is_zero(x):
                    term = field.zero
                    break
                term = field.mul(term, _field_pow(field, x, e))
            total = field.add(total, term)
        return total

    def substitute(self, mapping):
        """把变量替换为多项式，`mapping` 中不出现的变量保持不变。"""
        field = self.field
        result = Poly.zero(field)
        powers = {}
        for mono, c in self._terms.items():
            kept = []
            term = Poly._make(field, {ONE: c})
            for v, e in mono.items:
                if v in mapping:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = self._coerce(mapping[v]) ** e
                    term = term * powers[key]
                else:
                    kept.append((v, e))
            if kept:
                term = term.mul_term(Monomial._from_sorted(tuple(kept)), field.one)
            result = result + term
        return result

    def to_string(self, names=None):
        if not self._terms:
            return '0'
        field = self.field
        out = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            negative = field.kind == RATIONALS and c < 0
            mag = field.neg(c) if negative else c
            coeff = field.to_string(mag)
            if mono.is_one():
                body = coeff
            elif coeff == '1':
                body = mono.to_string(names)
            else:
                body = '{0}*{1}'.format(coeff, mono.to_string(names))

            if i == 0:
                out.append('-' + body if negative else body)
            else:
                out.append(('- ' if negative else '+ ') + body)
        return ' '.join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return 'Poly({0}, {1})'.format(self.field, self.to_string())


def _field_pow(field, x, e):
    result = field.one
    while e:
        if e & 1:
            result = field.mul(result, x)
        e >>= 1
        if e:
            x = field.mul(x, x)
    return result


def order(f):
    """多项式的阶：各项次数的最小值，零多项式为 :data:`INFINITY` 。"""
    return f.ord()


def weight(mono):
    """单项式的权重：各变量层号乘以指数之和。"""
    return mono.weight


def initial_form(f):
    """初始形式：次数恰为 ord(f) 的所有项之和。

    :raises InvalidArgument: f 为零多项式
    """
    if f.is_zero():
        raise InvalidArgument('f', '0', 'the zero polynomial has no initial form')
    return f.homogeneous_part(f.ord())


def partial_derivative(f, var):
    """形式偏导数，指数系数在域中约化（因此在 F_p 上 d(x^p)/dx = 0）。"""
    field = f.field
    terms = {}
    for mono, c in f.items():
        e = mono.exponent(var)
        if not e:
            continue
        c = field.mul(c, field.from_int(e))
        if field.is_zero(c):
            continue
        rest = mono.without(var)
        if e > 1:
            rest = rest * Monomial.of(var, e - 1)
        terms[rest] = field.add(terms.get(rest, field.zero), c)
    return Poly._make(field, dict((m, c) for m, c in terms.items() if not field.is_zero(c)))


def poly_sum(field, polys):
    total = Poly.zero(field)
    for p in polys:
        total = total + p
    return total
