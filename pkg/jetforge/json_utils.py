# -*- coding: utf-8 -*-

"""
jetforge.json_utils
~~~~~~~~~~~~~~~~~~~

JSON格式的输出与解析。系数一律写成字符串以保持精确；输出用 `sort_keys` 与固定缩进，
因此解析后再输出得到的文本与原文完全相同。
"""

import logging
from collections import OrderedDict, namedtuple

from .compat import json, to_unicode
from .exceptions import InvalidArgument
from .field import FieldSpec
from .poly import Poly, Monomial, JetVar
from .models import FlatnessWitness, ExponentData, WITNESS_ELEMENT, FIBER_JUMP

logger = logging.getLogger(__name__)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def loads(body):
    try:
        return json.loads(to_unicode(body))
    except ValueError as e:
        raise InvalidArgument('body', '<json>', 'malformed JSON: {0}'.format(e))


def _find_key(obj, key):
    try:
        return obj[key]
    except (KeyError, TypeError):
        raise InvalidArgument(key, None, "missing key '{0}'".format(key))


def _find_key_with_default(obj, key, default_value):
    if obj.get(key) is None:
        return default_value
    return obj[key]


def to_terms(f):
    """多项式的项列表，按grevlex降序排列。"""
    return [{'coeff': f.field.to_string(c),
             'monomial': [{'level': v.level, 'index': v.index, 'exp': e} for v, e in mono.items]}
            for mono, c in f.sorted_terms()]


def parse_terms(field, terms):
    result = {}
    for term in terms:
        mono = Monomial([(JetVar(_find_key(item, 'level'), _find_key(item, 'index')), _find_key(item, 'exp'))
                         for item in _find_key(term, 'monomial')])
        if mono in result:
            raise InvalidArgument('terms', str(mono), 'monomial listed twice')
        result[mono] = field.convert(_find_key(term, 'coeff'))
    return Poly(field, result)


#: :func:`parse_jet_ideal` 的结果，`entries` 为 (生成元, 层) 到多项式的有序dict
JetIdealRecord = namedtuple('JetIdealRecord', ['field', 'names', 'nvars', 'm', 'entries'])


def to_jet_ideal(J):
    """jet理想：每个 (生成元, 层) 一个对象，零多项式的 `terms` 为空列表。"""
    base = J.base
    return to_jet_ideal_record(JetIdealRecord(J.field, base.names, base.nvars, J.m, OrderedDict(J.items())))


def to_jet_ideal_record(record):
    return {'field': str(record.field),
            'vars': list(record.names) if record.names is not None else None,
            'nvars': record.nvars,
            'm': record.m,
            'jet_generators': [{'generator': g, 'level': i, 'terms': to_terms(F)}
                               for (g, i), F in record.entries.items()]}


def parse_jet_ideal(body):
    """解析 :func:`to_jet_ideal` 的输出，返回 :class:`JetIdealRecord` ；
    :func:`to_jet_ideal_record` 再输出得到相同的对象。"""
    obj = loads(body) if not isinstance(body, dict) else body
    field = FieldSpec.parse(_find_key(obj, 'field'))
    entries = OrderedDict()
    for item in _find_key(obj, 'jet_generators'):
        key = (_find_key(item, 'generator'), _find_key(item, 'level'))
        entries[key] = parse_terms(field, _find_key(item, 'terms'))
    return JetIdealRecord(field, _find_key_with_default(obj, 'vars', None), _find_key(obj, 'nvars'),
                          _find_key(obj, 'm'), entries)


def to_witness(w):
    obj = {'kind': w.kind,
           'field': str(w.field),
           'nvars': w.nvars,
           'm': w.m,
           'm_prime': w.m_prime,
           'd': w.d}

    if w.kind == FIBER_JUMP:
        obj['fiber_dim'] = w.fiber_dim
        obj['dim_at_origin'] = w.dim_at_origin
        return obj

    obj['F'] = to_terms(w.F)
    obj['source_generator'] = w.source_generator
    obj['level_used'] = w.level_used
    if w.exponent_data is not None:
        data = w.exponent_data
        obj['exponent_data'] = {'exponents': [{'index': j, 'exp': e} for j, e in data.exponents],
                                'j0': data.j0,
                                'e': data.e,
                                's': data.s}
    return obj


def parse_witness(body):
    """由 :func:`to_witness` 的输出重建 :class:`FlatnessWitness <jetforge.models.FlatnessWitness>` 。"""
    obj = loads(body) if not isinstance(body, dict) else body
    kind = _find_key(obj, 'kind')
    field = FieldSpec.parse(_find_key(obj, 'field'))
    args = (field, _find_key(obj, 'nvars'), _find_key(obj, 'm'), _find_key(obj, 'm_prime'), _find_key(obj, 'd'))

    if kind == FIBER_JUMP:
        return FlatnessWitness(FIBER_JUMP, *args,
                               fiber_dim=_find_key(obj, 'fiber_dim'),
                               dim_at_origin=_find_key_with_default(obj, 'dim_at_origin', None))

    if kind != WITNESS_ELEMENT:
        raise InvalidArgument('kind', kind, 'unknown witness kind')

    data = None
    raw = _find_key_with_default(obj, 'exponent_data', None)
    if raw is not None:
        exponents = tuple((_find_key(item, 'index'), _find_key(item, 'exp')) for item in _find_key(raw, 'exponents'))
        data = ExponentData(exponents, _find_key(raw, 'j0'), _find_key(raw, 'e'), _find_key(raw, 's'))

    return FlatnessWitness(WITNESS_ELEMENT, *args,
                           F=parse_terms(field, _find_key(obj, 'F')),
                           source_generator=_find_key(obj, 'source_generator'),
                           level_used=_find_key(obj, 'level_used'),
                           exponent_data=data)


def to_verification(report):
    return {'passed': report.passed,
            'bound': report.bound,
            'checks': [{'name': c.name, 'passed': c.passed, 'detail': c.detail} for c in report.checks]}


def to_smoothness(report):
    return {'m': report.m,
            'jacobian_rank': report.jacobian_rank,
            'codim_expected': report.codim_expected,
            'generator_count': report.generator_count,
            'verdict': report.verdict,
            'notes': report.notes}


def to_fiber(fiber):
    return {'m': fiber.m,
            'm_prime': fiber.m_prime,
            'ambient_dim': fiber.ambient_dim,
            'free': fiber.is_free,
            'entries': [{'generator': e.generator, 'level': e.level, 'terms': to_terms(e.poly)}
                        for e in fiber.entries]}


def to_tangent(report):
    return {'fiber_dim': report.fiber_dim,
            'embdim': report.embdim,
            'dim_at_origin': report.dim_at_origin,
            'singular': report.singular}
