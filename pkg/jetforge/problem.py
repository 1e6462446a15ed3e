# -*- coding: utf-8 -*-

"""
jetforge.problem
~~~~~~~~~~~~~~~~

问题文件的解析。问题文件是按行组织的纯文本： ::

    # the cusp
    field Q
    vars x y
    gen x^2 - y^3
    reduced
    translate 0 0

`#` 之后为注释；`field` 为 `Q` 或者 `Fp <p>` ，缺省为 `Q` ；`vars` 必须出现在 `gen` 之前；
`reduced` 断言 X 是约化的；`translate a b ...` 给出要平移到原点的点。
"""

import re
import logging

from .compat import to_unicode
from .exceptions import ProblemFileError, PolyParseError, InvalidArgument
from .field import FieldSpec
from .parser import parse_poly
from .jets import AmbientIdeal

logger = logging.getLogger(__name__)


_NAME_RE = re.compile(r'^[_A-Za-z][_A-Za-z0-9]*$')

_DIRECTIVES = ('field', 'vars', 'gen', 'reduced', 'translate')


class ProblemFile(object):
    """解析后的问题文件。

    :param field: :class:`FieldSpec <jetforge.field.FieldSpec>`
    :param names: 环境变量名的元组
    :param generators: (行号, 表达式在行中的起始列, 表达式) 的列表
    :param bool reduced: 是否断言 X 约化
    :param translate: 平移向量（域元素的列表）或None
    """
    def __init__(self, field, names, generators, reduced=False, translate=None):
        self.field = field
        self.names = tuple(names)
        self.generators = generators
        self.reduced = reduced
        self.translate = translate

    @property
    def nvars(self):
        return len(self.names)

    def polynomials(self):
        """把所有生成元解析为多项式；解析错误带上行号与列号。"""
        result = []
        for line, column, text in self.generators:
            try:
                result.append(parse_poly(text, self.field, self.names))
            except PolyParseError as e:
                raise e.at_line(line, column)
        return result

    def ideal(self, translate=None):
        """构造 :class:`AmbientIdeal <jetforge.jets.AmbientIdeal>` ，零生成元被丢弃。

        :param translate: 覆盖文件中的平移向量；缺省使用文件中的
        """
        polys = self.polynomials()
        nonzero = [f for f in polys if not f.is_zero()]
        if len(nonzero) != len(polys):
            logger.debug("dropped {0} zero generators".format(len(polys) - len(nonzero)))

        ideal = AmbientIdeal(self.field, self.nvars, nonzero, self.names)
        vector = translate if translate is not None else self.translate
        if vector is not None:
            ideal = ideal.translate(vector)
        return ideal


def parse_problem(text):
    """解析问题文件的内容。

    :raises ProblemFileError: 格式错误，`line` 为出错的行号（从1开始）
    """
    text = to_unicode(text)

    field = None
    names = None
    generators = []
    reduced = False
    translate = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue

        parts = stripped.split(None, 1)
        keyword = parts[0]
        rest = parts[1] if len(parts) > 1 else ''

        if keyword not in _DIRECTIVES:
            raise ProblemFileError("unknown directive '{0}'".format(keyword), lineno)

        if keyword == 'field':
            if field is not None:
                raise ProblemFileError('field declared twice', lineno)
            try:
                field = FieldSpec.parse(rest)
            except InvalidArgument as e:
                raise ProblemFileError(e.message, lineno)

        elif keyword == 'vars':
            if names is not None:
                raise ProblemFileError('vars declared twice', lineno)
            names = tuple(rest.split())
            if not names:
                raise ProblemFileError('vars needs at least one name', lineno)
            for name in names:
                if not _NAME_RE.match(name):
                    raise ProblemFileError("invalid variable name '{0}'".format(name), lineno)
            if len(set(names)) != len(names):
                raise ProblemFileError('variable names must be unique', lineno)

        elif keyword == 'gen':
            if names is None:
                raise ProblemFileError('gen before vars', lineno)
            if not rest.strip():
                raise ProblemFileError('gen needs an expression', lineno)
            column = len(line) - len(rest)
            generators.append((lineno, column, rest))

        elif keyword == 'reduced':
            if rest:
                raise ProblemFileError('reduced takes no arguments', lineno)
            reduced = True

        elif keyword == 'translate':
            translate = rest.split()
            if not translate:
                raise ProblemFileError('translate needs coordinates', lineno)
            translate = (lineno, translate)

    if names is None:
        raise ProblemFileError('missing vars declaration')
    field = field or FieldSpec.rationals()

    if translate is not None:
        lineno, values = translate
        if len(values) != len(names):
            raise ProblemFileError('translate needs {0} coordinates, got {1}'.format(len(names), len(values)), lineno)
        try:
            translate = [field.convert(a) for a in values]
        except (InvalidArgument, PolyParseError) as e:
            raise ProblemFileError(e.message, lineno)

    problem = ProblemFile(field, names, generators, reduced, translate)
    logger.debug("parse problem done, field: {0}, vars: {1}, generators: {2}".format(
        field, names, len(generators)))
    return problem

