# -*- coding: utf-8 -*-

"""
兼容Python版本
"""

import six

try:
    import simplejson as json
except (ImportError, SyntaxError):
    import json


string_types = six.string_types
integer_types = six.integer_types


def to_unicode(data):
    """把输入转换为unicode，要求输入是unicode或者utf-8编码的bytes。"""
    if isinstance(data, six.binary_type):
        return data.decode('utf-8')
    return data


def is_integer(value):
    """判断是否为整数（排除bool）。"""
    return isinstance(value, integer_types) and not isinstance(value, bool)
