# -*- coding: utf-8 -*-

"""
jetforge.parser
~~~~~~~~~~~~~~~

多项式表达式的解析与输出。

文法：整数、`a/b` 形式的有理系数、环境变量名、显式jet变量 `x[i][j]` ，
运算符 `+ - * ^` 以及括号。 `^` 后只能跟非负整数字面量；不支持省略乘号。
"""

import re
import logging
from fractions import Fraction

from .compat import to_unicode
from .exceptions import PolyParseError, UnknownVariable, NegativeExponent, CoefficientNotInField, InvalidArgument
from .poly import Poly, JetVar
from . import defaults

logger = logging.getLogger(__name__)


_TOKEN_RE = re.compile(r'(?:(\d+)|([_A-Za-z][_A-Za-z0-9]*)|(.))')

NUMBER = 'number'
IDENT = 'ident'
OP = 'op'
END = 'end'

_OPERATORS = set('+-*^/()[]')


class _Token(object):
    __slots__ = ('kind', 'text', 'pos')

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos

    def __repr__(self):
        return '{0}({1!r}@{2})'.format(self.kind, self.text, self.pos)


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        number, ident, other = m.groups()
        start = m.start(m.lastindex)
        if number is not None:
            tokens.append(_Token(NUMBER, number, start))
        elif ident is not None:
            tokens.append(_Token(IDENT, ident, start))
        elif other is not None:
            if other not in _OPERATORS:
                raise PolyParseError("unexpected character '{0}'".format(other), start)
            tokens.append(_Token(OP, other, start))
        pos = m.end()

    tokens.append(_Token(END, '', len(text.rstrip()) if text.strip() else 0))
    return tokens


class _Parser(object):
    def __init__(self, text, field, names, nvars):
        self.text = text
        self.field = field
        self.names = dict((name, i + 1) for i, name in enumerate(names))
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def current(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        tok = self.current
        if tok.kind == OP and tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op):
        if not self.accept(op):
            self.fail("expected '{0}'".format(op))

    def fail(self, message, tok=None, klass=PolyParseError):
        tok = tok or self.current
        found = 'end of input' if tok.kind == END else "'{0}'".format(tok.text)
        raise klass('{0}, found {1}'.format(message, found), tok.pos)

    def parse(self):
        if self.current.kind == END:
            self.fail('empty expression')
        result = self.expr()
        if self.current.kind != END:
            self.fail('unexpected token')
        return result

    def expr(self):
        result = self.term()
        while True:
            if self.accept('+'):
                result = result + self.term()
            elif self.accept('-'):
                result = result - self.term()
            else:
                return result

    def term(self):
        result = self.unary()
        while self.accept('*'):
            result = result * self.unary()
        return result

    def unary(self):
        if self.accept('-'):
            return -self.unary()
        if self.accept('+'):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept('^'):
            return base ** self.exponent()
        return base

    def exponent(self):
        tok = self.current
        if tok.kind == OP and tok.text == '-':
            self.fail('negative exponent', tok, NegativeExponent)
        if self.accept('('):
            tok = self.current
            if tok.kind == OP and tok.text == '-':
                self.fail('negative exponent', tok, NegativeExponent)
            n = self.integer('exponent must be a nonnegative integer literal')
            self.expect(')')
            return n
        return self.integer('exponent must be a nonnegative integer literal')

    def integer(self, message):
        tok = self.current
        if tok.kind != NUMBER:
            self.fail(message)
        self.advance()
        return int(tok.text)

    def atom(self):
        tok = self.current

        if tok.kind == NUMBER:
            self.advance()
            value = Fraction(int(tok.text))
            if self.accept('/'):
                den_tok = self.current
                den = self.integer('a rational coefficient needs an integer denominator')
                if den == 0:
                    raise PolyParseError('zero denominator', den_tok.pos)
                value = Fraction(int(tok.text), den)
            try:
                return Poly.constant(self.field, value)
            except CoefficientNotInField as e:
                raise CoefficientNotInField(e.message, tok.pos)

        if tok.kind == IDENT:
            self.advance()
            if self.current.kind == OP and self.current.text == '[':
                if tok.text != defaults.jet_symbol:
                    self.fail("only '{0}' takes jet indices".format(defaults.jet_symbol), tok, UnknownVariable)
                return Poly.variable(self.field, self.jet_var(tok))
            if tok.text in self.names:
                return Poly.variable(self.field, JetVar(0, self.names[tok.text]))
            raise UnknownVariable("unknown variable '{0}'".format(tok.text), tok.pos)

        if self.accept('('):
            result = self.expr()
            self.expect(')')
            return result

        self.fail("expected a number, a variable or '('")

    def jet_var(self, tok):
        self.expect('[')
        level = self.integer('jet level must be a nonnegative integer')
        self.expect(']')
        self.expect('[')
        index_tok = self.current
        index = self.integer('coordinate index must be a positive integer')
        self.expect(']')
        if index < 1 or (self.nvars is not None and index > self.nvars):
            raise UnknownVariable('coordinate index {0} out of range 1..{1}'.format(index, self.nvars),
                                  index_tok.pos)
        return JetVar(level, index)


def parse_poly(text, field, names=(), nvars=None):
    """把表达式解析为规范的 :class:`Poly <jetforge.poly.Poly>` 。

    用法 ::

        >>> f = parse_poly('x^2 - y^3', FieldSpec.rationals(), names=('x', 'y'))
        >>> str(f)
        'x[0][1]^2 - x[0][2]^3'

    :param str text: 表达式
    :param field: 系数域
    :param names: 环境变量名序列，第k个名字对应 x[0][k]
    :param nvars: 环境维数N；为None时取 `len(names)` ，若也没有名字则不检查下标范围

    :raises PolyParseError: 语法错误，`position` 给出出错位置
    :raises UnknownVariable: 未声明的变量
    :raises NegativeExponent: 负指数
    :raises CoefficientNotInField: 系数不在域中，如 F_5 上的 1/5
    """
    text = to_unicode(text)
    names = tuple(names)
    if nvars is None and names:
        nvars = len(names)

    if len(set(names)) != len(names):
        raise InvalidArgument('names', names, 'variable names must be unique')

    result = _Parser(text, field, names, nvars).parse()
    logger.debug("Parse poly done, text: {0}, terms: {1}".format(text, len(result)))
    return result


def format_poly(f, names=None):
    """输出多项式；给出 `names` 时第0层变量用环境变量名表示。"""
    return f.to_string(names)
