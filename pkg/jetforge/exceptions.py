# -*- coding: utf-8 -*-

"""
jetforge.exceptions
~~~~~~~~~~~~~~~~~~~

异常类。
"""


JET_CLIENT_ERROR_STATUS = -1
JET_PARSE_ERROR_STATUS = -2
JET_GEOMETRY_ERROR_STATUS = -3
JET_IDEAL_ERROR_STATUS = -4
JET_WITNESS_ERROR_STATUS = -5


class JetError(Exception):
    status = JET_CLIENT_ERROR_STATUS
    code = 'JetError'

    def __init__(self, message, details=None):
        Exception.__init__(self, message)

        #: 错误信息
        self.message = message

        #: 详细错误信息，是一个string到任意值的dict
        self.details = details or {}

    def __str__(self):
        error = {'status': self.status,
                 'code': self.code,
                 'message': self.message}
        if self.details:
            error['details'] = self.details
        return str(error)

    def to_dict(self):
        return {'status': self.status,
                'code': self.code,
                'message': self.message,
                'details': dict((k, str(v)) for k, v in self.details.items())}


class ClientError(JetError):
    status = JET_CLIENT_ERROR_STATUS
    code = 'ClientError'


class InvalidArgument(ClientError):
    code = 'InvalidArgument'

    def __init__(self, name, value, message):
        super(InvalidArgument, self).__init__(message, {'ArgumentName': name, 'ArgumentValue': value})
        self.name = name
        self.value = value


class FieldMismatch(ClientError):
    code = 'FieldMismatch'

    def __init__(self, left, right):
        super(FieldMismatch, self).__init__('field mismatch: {0} vs {1}'.format(left, right),
                                            {'left': left, 'right': right})


class CharacteristicError(ClientError):
    code = 'CharacteristicError'


class PolyParseError(JetError):
    status = JET_PARSE_ERROR_STATUS
    code = 'PolyParseError'

    def __init__(self, message, position=None, line=None, column=None):
        details = {}
        if position is not None:
            details['position'] = position
        if line is not None:
            details['line'] = line
        if column is not None:
            details['column'] = column
        super(PolyParseError, self).__init__(message, details)

        #: 出错位置，从0开始计数
        self.position = position

        #: 出错的行号和列号（均从1开始），仅在解析问题文件时给出
        self.line = line
        self.column = column

    def at_line(self, line, column_offset=0):
        """返回一个带行列信息的同类异常，`column_offset` 为表达式在行中的起始位置。"""
        column = None
        if self.position is not None:
            column = column_offset + self.position + 1
        return type(self)(self.message, self.position, line, column)


class UnknownVariable(PolyParseError):
    code = 'UnknownVariable'


class NegativeExponent(PolyParseError):
    code = 'NegativeExponent'


class CoefficientNotInField(PolyParseError):
    code = 'CoefficientNotInField'


class ProblemFileError(JetError):
    status = JET_PARSE_ERROR_STATUS
    code = 'ProblemFileError'

    def __init__(self, message, line=None):
        super(ProblemFileError, self).__init__(message, {'line': line} if line is not None else None)
        self.line = line


class NotOnScheme(JetError):
    status = JET_GEOMETRY_ERROR_STATUS
    code = 'NotOnScheme'


class IdealError(JetError):
    status = JET_IDEAL_ERROR_STATUS
    code = 'IdealError'


class ZeroIdeal(IdealError):
    code = 'ZeroIdeal'


class UnitIdeal(IdealError):
    code = 'UnitIdeal'


class EmbeddingError(IdealError):
    code = 'EmbeddingError'


class WitnessError(JetError):
    status = JET_WITNESS_ERROR_STATUS
    code = 'WitnessError'


class SmoothOrigin(WitnessError):
    code = 'SmoothOrigin'


class NoWitnessFound(WitnessError):
    code = 'NoWitnessFound'


class WitnessRefused(WitnessError):
    code = 'WitnessRefused'
