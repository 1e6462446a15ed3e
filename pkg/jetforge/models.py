# -*- coding: utf-8 -*-

"""
jetforge.models
~~~~~~~~~~~~~~~

判定与构造操作的返回值类型。
"""

from collections import namedtuple


SMOOTH = 'Smooth'
SINGULAR = 'Singular'
INCONCLUSIVE = 'Inconclusive'

FIBER_JUMP = 'FiberJump'
WITNESS_ELEMENT = 'WitnessElement'


class EmbeddingResult(object):
    """原点处的极小嵌入。

    :param int embdim: 嵌入维数，即N减去线性部分的秩
    :param ideal: 在 embdim 个变量中的新理想 :class:`AmbientIdeal <jetforge.jets.AmbientIdeal>`
    :param bool exact: 是否成功消去所有主元变量；为False时 `ideal` 保持原表示
    :param eliminated: 被消去的原坐标下标列表
    :param kept: 保留的原坐标下标列表，第k个对应新理想的坐标 k+1
    """
    def __init__(self, embdim, ideal, exact=True, eliminated=None, kept=None):
        self.embdim = embdim
        self.ideal = ideal
        self.exact = exact
        self.eliminated = eliminated or []
        self.kept = kept or []


class SmoothnessReport(object):
    """X_m 在平凡jet 0_m 处的Jacobian判据结果。

    :param point: :class:`JetPoint <jetforge.jets.JetPoint>` 0_m
    :param int jacobian_rank: jet理想的Jacobian矩阵在 0_m 处的秩
    :param codim_expected: 参与比较的余维数；没有用到时为None
    :param str verdict: :data:`SMOOTH` 、 :data:`SINGULAR` 或者 :data:`INCONCLUSIVE`
    :param notes: 说明文字的列表
    """
    def __init__(self, point, jacobian_rank, codim_expected, verdict, notes=None, generator_count=0):
        self.point = point
        self.jacobian_rank = jacobian_rank
        self.codim_expected = codim_expected
        self.verdict = verdict
        self.notes = notes or []

        #: jet理想中非零生成元的个数
        self.generator_count = generator_count

    @property
    def m(self):
        return self.point.m

    def __repr__(self):
        return 'SmoothnessReport(m={0}, rank={1}, codim={2}, verdict={3})'.format(
            self.m, self.jacobian_rank, self.codim_expected, self.verdict)


#: 正特征见证中选用的指数信息：f 的最低次单项式 prod x[0][j]^e_j （exponents 为 ((j, e_j), ...)），
#: 以及选中的坐标 j0、指数 e = e_{j0} 与层 s
ExponentData = namedtuple('ExponentData', ['exponents', 'j0', 'e', 's'])


class FlatnessWitness(object):
    """截断映射 psi_{m',m} 非平坦的证据。

    `kind` 为 :data:`WITNESS_ELEMENT` 时，F 属于 X_{m'} 的理想与 M·R_{m'} ，但不属于 M·I' + I·R_{m'} ；
    为 :data:`FIBER_JUMP` 时，0_m 上的纤维同构于 A^{N(m'-m)} ，维数 `fiber_dim` 超过 (m'-m)·dim(X,0)。

    所有多项式都以极小嵌入后的坐标表示，`nvars` 为嵌入维数。
    """
    def __init__(self, kind, field, nvars, m, m_prime, d,
                 F=None, source_generator=None, level_used=None, exponent_data=None,
                 fiber_dim=None, dim_at_origin=None):
        self.kind = kind
        self.field = field
        self.nvars = nvars
        self.m = m
        self.m_prime = m_prime

        #: 理想的阶（在给定生成元上取最小值）
        self.d = d

        self.F = F
        self.source_generator = source_generator
        self.level_used = level_used
        self.exponent_data = exponent_data

        self.fiber_dim = fiber_dim
        self.dim_at_origin = dim_at_origin

    @property
    def is_fiber_jump(self):
        return self.kind == FIBER_JUMP

    def __repr__(self):
        if self.is_fiber_jump:
            return 'FlatnessWitness(FiberJump, m={0}, m_prime={1}, fiber_dim={2})'.format(
                self.m, self.m_prime, self.fiber_dim)
        return 'FlatnessWitness(WitnessElement, m={0}, m_prime={1}, F={2})'.format(self.m, self.m_prime, self.F)


WitnessCheck = namedtuple('WitnessCheck', ['name', 'passed', 'detail'])


class VerificationReport(object):
    """见证的逐项检查结果。

    :param witness: 被检查的 :class:`FlatnessWitness`
    :param checks: :class:`WitnessCheck` 的列表
    :param bound: 局部成员判定用的次数界D，FiberJump时为None
    """
    def __init__(self, witness, checks, bound=None):
        self.witness = witness
        self.checks = checks
        self.bound = bound

    @property
    def passed(self):
        return bool(self.checks) and all(c.passed for c in self.checks)

    def failed(self):
        return [c for c in self.checks if not c.passed]

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


class TangentReport(object):
    """pi_1 在原点上的纤维与嵌入维数、dim(X,0) 的比较。"""
    def __init__(self, fiber_dim, embdim, dim_at_origin, fiber):
        self.fiber_dim = fiber_dim
        self.embdim = embdim
        self.dim_at_origin = dim_at_origin
        self.fiber = fiber

    @property
    def singular(self):
        return self.fiber_dim > self.dim_at_origin


class SweepEntry(object):
    """sweep中一个 (m, m') 的结果；`witness` 为None时 `error` 给出原因。"""
    def __init__(self, m, m_prime, witness=None, report=None, error=None):
        self.m = m
        self.m_prime = m_prime
        self.witness = witness
        self.report = report
        self.error = error

    @property
    def not_flat(self):
        return self.report is not None and self.report.passed
