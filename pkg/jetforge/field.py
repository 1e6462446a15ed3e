# -*- coding: utf-8 -*-

"""
jetforge.field
~~~~~~~~~~~~~~

系数域：有理数域 Q 与素域 F_p。所有运算都是精确的，不使用浮点数。

Q 的元素统一用 :class:`fractions.Fraction` 表示；F_p 的元素用 `[0, p)` 内的整数表示。
"""

import re
from fractions import Fraction

from .compat import is_integer, string_types
from .exceptions import InvalidArgument, CoefficientNotInField
from . import defaults


RATIONALS = 'Q'
PRIME_FIELD = 'Fp'

_FIELD_DECL_RE = re.compile(r'^\s*(Q|QQ|Fp|GF)\s*(\d+)?\s*$')


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class FieldSpec(object):
    """系数域描述。

    :param str kind: :data:`RATIONALS` 或 :data:`PRIME_FIELD`
    :param int p: 素数模，仅对 `PRIME_FIELD` 有效，要求 2 <= p < 2^31
    """
    def __init__(self, kind, p=None):
        if kind == RATIONALS:
            if p is not None:
                raise InvalidArgument('p', p, 'the rational field takes no modulus')
        elif kind == PRIME_FIELD:
            if not is_integer(p) or p < 2 or p >= defaults.max_prime or not is_prime(p):
                raise InvalidArgument('p', p, 'modulus must be a prime in [2, 2^31)')
        else:
            raise InvalidArgument('kind', kind, 'unknown field kind')

        self.kind = kind
        self.p = p

    @classmethod
    def rationals(cls):
        return cls(RATIONALS)

    @classmethod
    def prime_field(cls, p):
        return cls(PRIME_FIELD, p)

    @classmethod
    def parse(cls, text):
        """解析 `Q` 或者 `Fp 5` 形式的域声明。"""
        m = _FIELD_DECL_RE.match(text)
        if not m:
            raise InvalidArgument('field', text, 'field must be declared as "Q" or "Fp <prime>"')

        kind, p = m.groups()
        if kind in ('Q', 'QQ'):
            if p is not None:
                raise InvalidArgument('field', text, 'the rational field takes no modulus')
            return cls.rationals()

        if p is None:
            raise InvalidArgument('field', text, 'a prime field needs its modulus, e.g. "Fp 5"')
        return cls.prime_field(int(p))

    @property
    def characteristic(self):
        return 0 if self.kind == RATIONALS else self.p

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.kind == other.kind and self.p == other.p

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __str__(self):
        if self.kind == RATIONALS:
            return 'Q'
        return 'Fp {0}'.format(self.p)

    def __repr__(self):
        return 'FieldSpec({0!r}, {1!r})'.format(self.kind, self.p)

    def convert(self, value):
        """把整数、分数或者 `a/b` 字符串转换为域中的规范元素。

        :raises CoefficientNotInField: 分母在 F_p 中为0
        """
        if isinstance(value, string_types):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise InvalidArgument('value', value, 'not a rational literal')

        if isinstance(value, bool):
            value = int(value)

        if self.kind == RATIONALS:
            if is_integer(value) or isinstance(value, Fraction):
                return Fraction(value)
            raise InvalidArgument('value', value, 'coefficients must be integers or fractions')

        if is_integer(value):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise CoefficientNotInField('{0} is not defined in {1}'.format(value, self))
            return (value.numerator * pow(den, self.p - 2, self.p)) % self.p
        raise InvalidArgument('value', value, 'coefficients must be integers or fractions')

    def add(self, a, b):
        if self.kind == RATIONALS:
            return a + b
        return (a + b) % self.p

    def sub(self, a, b):
        if self.kind == RATIONALS:
            return a - b
        return (a - b) % self.p

    def neg(self, a):
        if self.kind == RATIONALS:
            return -a
        return (-a) % self.p

    def mul(self, a, b):
        if self.kind == RATIONALS:
            return a * b
        return (a * b) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError('inverse of zero in {0}'.format(self))
        if self.kind == RATIONALS:
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        """整数 n 在域中的像，用于求导时的指数系数。"""
        if self.kind == RATIONALS:
            return Fraction(n)
        return n % self.p

    def to_string(self, a):
        """系数的精确字符串表示（Q 中写作 `a/b`）。"""
        if self.kind == RATIONALS:
            if a.denominator == 1:
                return str(a.numerator)
            return '{0}/{1}'.format(a.numerator, a.denominator)
        return str(a)

    def random_element(self, rng, bound=5):
        """随机元素，供测试使用。"""
        if self.kind == RATIONALS:
            return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        return rng.randrange(self.p)
