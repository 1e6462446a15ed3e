# -*- coding: utf-8 -*-

"""
jetforge.criteria
~~~~~~~~~~~~~~~~~

原点处的光滑性判据与截断映射的非平坦见证。

所有判定都在原点进行；奇点不在原点时先用 :meth:`AmbientIdeal.translate <jetforge.jets.AmbientIdeal.translate>` 平移。

* :func:`jet_smoothness_report` ：X_m 在 0_m 处的Jacobian判据。
* :func:`flat_witness_char0` ：特征0下，原点奇异时每个 psi_{m',m} 都有见证元素 F_{f,m+1} 。
* :func:`flat_witness_charp` ：特征p下（X约化），纤维跳跃或者由最低次单项式构造的见证元素。
* :func:`verify_witness` ：独立地重新检查见证，包括次数截断的局部成员判定。
"""

import logging

from .exceptions import (InvalidArgument, NotOnScheme, ZeroIdeal, EmbeddingError, CharacteristicError,
                         SmoothOrigin, NoWitnessFound, WitnessRefused, WitnessError)
from .compat import is_integer
from .poly import Poly, Monomial, JetVar, initial_form
from .series import expand_in_t
from .linalg import row_reduce, rank, jacobian_rank_at, linear_part_matrix
from .jets import AmbientIdeal, JetPoint, jetify, fiber_over_trivial_jet
from .groebner import krull_dimension, local_membership_mod_degree, LocalIdealSpec
from .models import (EmbeddingResult, SmoothnessReport, FlatnessWitness, ExponentData, WitnessCheck,
                     VerificationReport, TangentReport, SweepEntry,
                     SMOOTH, SINGULAR, INCONCLUSIVE, FIBER_JUMP, WITNESS_ELEMENT)
from .task_queue import run_tasks
from . import defaults

logger = logging.getLogger(__name__)


def _check_pair(m, m_prime):
    if not is_integer(m) or m < 0:
        raise InvalidArgument('m', m, 'jet order must be a nonnegative integer')
    if not is_integer(m_prime) or m_prime <= m:
        raise InvalidArgument('m_prime', m_prime, 'need 0 <= m < m_prime')


def _linear_rank(polys, nvars):
    if not polys:
        return 0
    variables = [JetVar(0, j) for j in range(1, nvars + 1)]
    return rank(linear_part_matrix(polys, variables), polys[0].field)


def embedding_dimension_at_origin(I, strict=False):
    """原点处的嵌入维数与极小嵌入。

    对生成元的线性部分做高斯消元，主元变量 x_p 满足 x_p = phi_p（phi_p 的线性部分只含非主元变量），
    按依赖顺序把 phi_p 代入所有生成元即得到 embdim 个变量中的新理想。若某个主元变量出现在
    自身的（或循环依赖的）phi 中，多项式代换无法完成：此时返回原表示并把 `exact` 置为False，
    `strict` 为True时改为抛出异常。

    :param I: :class:`AmbientIdeal <jetforge.jets.AmbientIdeal>`
    :return: :class:`EmbeddingResult <jetforge.models.EmbeddingResult>`

    :raises NotOnScheme: 原点不在 X 上
    :raises EmbeddingError: `strict` 为True且无法完成代换
    """
    if not I.contains_origin():
        raise NotOnScheme('origin is not on X', {'ideal': str(I)})

    field = I.field
    N = I.nvars
    variables = I.variables()

    if I.is_zero():
        return EmbeddingResult(N, I, True, [], list(range(1, N + 1)))

    rref, pivots, transform = row_reduce(linear_part_matrix(I.generators, variables), field, track=True)
    embdim = N - len(pivots)
    if not pivots:
        return EmbeddingResult(N, I, True, [], list(range(1, N + 1)))

    # phi_p = x_p - h_k with h_k the k-th combination of generators
    phi = {}
    for k, c in enumerate(pivots):
        h = Poly.zero(field)
        for l, a in enumerate(transform[k]):
            if not field.is_zero(a):
                h = h + I.generators[l].scale(a)
        phi[c + 1] = Poly.variable(field, JetVar(0, c + 1)) - h

    pivot_vars = set(JetVar(0, p) for p in phi)
    resolved = {}
    pending = dict(phi)
    while pending:
        progress = False
        for p in sorted(pending):
            deps = set(pending[p].variables()) & pivot_vars
            if all(v in resolved for v in deps):
                resolved[JetVar(0, p)] = pending[p].substitute(dict((v, resolved[v]) for v in deps))
                del pending[p]
                progress = True
        if not progress:
            break

    if pending:
        message = 'cannot eliminate coordinates {0} polynomially'.format(sorted(pending))
        if strict:
            raise EmbeddingError(message, {'ideal': str(I)})
        logger.warning("embedding reduction kept the original presentation: {0}".format(message))
        return EmbeddingResult(embdim, I, False, [], list(range(1, N + 1)))

    kept = [j for j in range(1, N + 1) if JetVar(0, j) not in pivot_vars]
    renumber = dict((JetVar(0, j), Poly.variable(field, JetVar(0, k + 1))) for k, j in enumerate(kept))

    generators = []
    for f in I.generators:
        g = f.substitute(resolved).substitute(renumber)
        if not g.is_zero():
            generators.append(g)

    names = None
    if I.names is not None:
        names = [I.names[j - 1] for j in kept]

    ideal = AmbientIdeal(field, embdim, generators, names)
    logger.debug("embedding reduction done, embdim: {0}, eliminated: {1}, ideal: {2}".format(
        embdim, sorted(phi), ideal))
    return EmbeddingResult(embdim, ideal, True, sorted(phi), kept)


def ord_ideal(I):
    """(d, g)：给定生成元的最小阶及第一个取到它的生成元下标（从0开始）。

    d 只是在给定生成元上的最小值，生成元组不"极小"时可能大于理想真正的阶。

    :raises ZeroIdeal: 零理想
    """
    if I.is_zero():
        raise ZeroIdeal('the zero ideal has no finite order')

    d, g = None, None
    for k, f in enumerate(I.generators):
        o = f.ord()
        if d is None or o < d:
            d, g = o, k
    return d, g


def jet_smoothness_report(I, m):
    """X_m 在平凡jet 0_m 处的Jacobian判据。

    * jet理想为零：Smooth（X_m 为仿射空间）。
    * Jacobian秩等于非零jet生成元个数：Smooth（完全交）。
    * 秩为0而理想非零：Singular。
    * 其余情形：秩小于整体余维数 N(m+1) - dim X_m 时 Singular ，否则 Inconclusive（局部余维数未知）。

    :param I: 原点在其上的 :class:`AmbientIdeal <jetforge.jets.AmbientIdeal>`
    :param int m: jet阶
    """
    if not I.contains_origin():
        raise NotOnScheme('origin is not on X', {'ideal': str(I)})

    J = jetify(I, m)
    point = JetPoint(I.field, I.nvars, m)
    gens = J.generators()
    notes = []

    if not gens:
        notes.append('jet ideal is zero, X_{0} is affine space of dimension {1}'.format(m, J.nvars))
        return SmoothnessReport(point, 0, 0, SMOOTH, notes, 0)

    r = jacobian_rank_at(gens, J.variables())

    if r == len(gens):
        notes.append('jacobian rows are independent, complete intersection of codimension {0}'.format(r))
        verdict, codim = SMOOTH, r
    elif r == 0:
        notes.append('jacobian matrix vanishes at 0_{0} while the jet ideal is nonzero'.format(m))
        verdict, codim = SINGULAR, None
    else:
        codim = J.nvars - krull_dimension(gens, J.nvars)
        notes.append('codimension taken from the global krull dimension of X_{0}'.format(m))
        if r < codim:
            verdict = SINGULAR
        else:
            notes.append('codimension at 0_{0} is unknown, lower dimensional components through 0_{0} '
                         'can raise it above {1}'.format(m, codim))
            verdict = INCONCLUSIVE

    if I.field.characteristic:
        notes.append('reducedness is not checked in characteristic {0}'.format(I.field.characteristic))

    report = SmoothnessReport(point, r, codim, verdict, notes, len(gens))
    logger.debug("smoothness report done, m: {0}, rank: {1}, verdict: {2}".format(m, r, verdict))
    return report


def _minimal_singular_model(I):
    """极小嵌入后的理想与 (d, g)；原点光滑时抛出 SmoothOrigin 。"""
    emb = embedding_dimension_at_origin(I)
    J = emb.ideal
    if J.is_zero():
        raise SmoothOrigin('origin is a smooth point of X, every truncation is flat')

    linear = _linear_rank(J.generators, J.nvars)
    if linear == len(J.generators):
        raise SmoothOrigin('origin is a smooth point of X (complete intersection), every truncation is flat')
    if linear:
        raise EmbeddingError('could not reach a minimal embedding at the origin', {'ideal': str(I)})

    d, g = ord_ideal(J)
    if d < 2:
        raise SmoothOrigin('ideal has order {0} at the origin'.format(d))
    return J, d, g


def _divisible_by_low_level(F, m):
    """F 的每个单项式都含有层号 <= m 的变量，即 F ∈ M·R_{m'} 。"""
    return all(mono.min_level() is not None and mono.min_level() <= m for mono in F.monomials())


def _has_high_level(form, m):
    return any(v.level > m for v in form.variables())


def flat_witness_char0(I, m, m_prime):
    """特征0下 psi_{m',m} 的非平坦见证：F = F_{f,m+1}，f 为阶最小的生成元。

    :raises CharacteristicError: 系数域不是特征0
    :raises SmoothOrigin: 原点光滑，不存在见证
    """
    if I.field.characteristic != 0:
        raise CharacteristicError('flat_witness_char0 needs characteristic 0, got {0}'.format(I.field))
    _check_pair(m, m_prime)
    logger.debug("Start to construct witness, char: 0, m: {0}, m_prime: {1}".format(m, m_prime))

    J, d, g = _minimal_singular_model(I)
    f = J.generators[g]
    F = expand_in_t(f, m + 1)[m + 1]

    if F.is_zero() or F.ord() != d:
        raise NoWitnessFound('F_{0} of generator {1} does not have order {2}'.format(m + 1, g + 1, d))
    if not _divisible_by_low_level(F, m):
        raise NoWitnessFound('F_{0} is not in M*R_{1}'.format(m + 1, m_prime))
    if not _has_high_level(initial_form(F), m):
        raise NoWitnessFound('initial form of F_{0} has no variable of level > {1}'.format(m + 1, m))

    w = FlatnessWitness(WITNESS_ELEMENT, J.field, J.nvars, m, m_prime, d,
                        F=F, source_generator=g, level_used=m + 1)
    logger.debug("witness done, F: {0}".format(F))
    return w


def _certificate_monomial(exponent_data):
    items = [(JetVar(0, j), e) for j, e in exponent_data.exponents if j != exponent_data.j0]
    items.append((JetVar(exponent_data.s, exponent_data.j0), exponent_data.e))
    return Monomial(items)


def _source_monomial(exponent_data):
    return Monomial([(JetVar(0, j), e) for j, e in exponent_data.exponents])


def _fiber_jump(J, m, m_prime, d):
    fiber = fiber_over_trivial_jet(J, m, m_prime)
    if not fiber.is_free:
        raise NoWitnessFound('fiber over 0_{0} is not an affine space'.format(m))

    dim_x = krull_dimension(J.generators, J.nvars)
    fiber_dim = fiber.ambient_dim
    if fiber_dim <= (m_prime - m) * dim_x:
        raise NoWitnessFound('fiber dimension {0} does not exceed {1}*dim(X,0) = {2}'.format(
            fiber_dim, m_prime - m, (m_prime - m) * dim_x))

    return FlatnessWitness(FIBER_JUMP, J.field, J.nvars, m, m_prime, d,
                           fiber_dim=fiber_dim, dim_at_origin=dim_x)


def _charp_candidates(J, d, m, m_prime):
    for g, f in enumerate(J.generators):
        if f.ord() != d:
            continue
        lowest = [mono for mono, _ in f.sorted_terms() if mono.degree == d]
        for mono in lowest:
            exponents = tuple((v.index, e) for v, e in mono.items)
            for j0, e in exponents:
                # smallest s with s*e > m, so that F_{se} lies beyond R_m
                s = m // e + 1
                if s * e > m_prime:
                    continue
                yield g, f, mono, ExponentData(exponents, j0, e, s)


def flat_witness_charp(I, m, m_prime, reduced=False):
    """特征p下 psi_{m',m} 的非平坦见证。

    X 约化（由调用者断言）且 m' < d(m+1) 时，0_m 上的纤维是 A^{N(m'-m)} ，返回纤维跳跃；
    否则对阶为 d 的生成元 f 、其最低次单项式 prod x[0][j]^e_j 和非零指数 e = e_{j0}，
    取满足 s*e > m 的最小 s ，检查 F = F_{f,se} 。证书单项式 x[s][j0]^e prod_{j != j0} x[0][j]^e_j
    在 F 中的系数与 prod x[0][j]^e_j 在 f 中的系数相同。

    :param bool reduced: 调用者断言 X 是约化的
    :raises CharacteristicError: 系数域特征为0
    :raises WitnessRefused: m = 0（除 m' = 1 且 X 约化的切空间情形外）
    :raises NoWitnessFound: 没有候选通过检查，输入可能非约化或者截断映射平坦
    """
    field = I.field
    if field.characteristic == 0:
        raise CharacteristicError('flat_witness_charp needs a prime field, got {0}'.format(field))
    _check_pair(m, m_prime)
    logger.debug("Start to construct witness, char: {0}, m: {1}, m_prime: {2}, reduced: {3}".format(
        field.characteristic, m, m_prime, reduced))

    if m == 0 and not (m_prime == 1 and reduced):
        raise WitnessRefused('m = 0 in positive characteristic is open; only (m, m_prime) = (0, 1) for a reduced X '
                             'is decided, through the tangent space')

    J, d, g = _minimal_singular_model(I)

    if not reduced:
        logger.warning("X is not asserted reduced, fiber dimension comparisons are skipped")
    elif m_prime < d * (m + 1):
        w = _fiber_jump(J, m, m_prime, d)
        logger.debug("witness done, fiber jump, fiber_dim: {0}, dim_at_origin: {1}".format(
            w.fiber_dim, w.dim_at_origin))
        return w

    for g, f, mono, data in _charp_candidates(J, d, m, m_prime):
        level = data.s * data.e
        F = expand_in_t(f, level)[level]
        if F.is_zero() or F.ord() != d:
            continue
        if not _divisible_by_low_level(F, m):
            continue
        if not any(mono2.weight > m for mono2 in initial_form(F).monomials()):
            continue
        if F.coefficient(_certificate_monomial(data)) != f.coefficient(mono):
            continue

        w = FlatnessWitness(WITNESS_ELEMENT, field, J.nvars, m, m_prime, d,
                            F=F, source_generator=g, level_used=level, exponent_data=data)
        logger.debug("witness done, F: {0}, s: {1}, e: {2}".format(F, data.s, data.e))
        return w

    raise NoWitnessFound('no witness found - input may be non-reduced or the truncation flat',
                         {'m': m, 'm_prime': m_prime, 'd': d})


def flatness_witness(I, m, m_prime, reduced=False):
    """按特征分派到 :func:`flat_witness_char0` 或 :func:`flat_witness_charp` 。"""
    if I.field.characteristic == 0:
        return flat_witness_char0(I, m, m_prime)
    return flat_witness_charp(I, m, m_prime, reduced)


def _check(checks, name, passed, detail):
    checks.append(WitnessCheck(name, bool(passed), detail))


def verify_witness(w, I, D=None):
    """独立地重新检查见证，失败的检查作为报告条目给出，不抛出异常。

    见证元素：阶、是否为jet生成元、M·R_{m'} 整除性、初始形式（特征0检查层号 > m 的变量，
    特征p检查权重 > m 的单项式与证书系数），以及 local_membership_mod_degree 返回False。
    纤维跳跃：重新计算纤维、纤维维数与不等式。

    :param w: :class:`FlatnessWitness <jetforge.models.FlatnessWitness>`
    :param I: 构造见证时使用的理想（平移之后、极小嵌入之前）
    :param D: 局部成员判定的次数界，缺省为 d + defaults.verify_bound_margin

    :return: :class:`VerificationReport <jetforge.models.VerificationReport>`
    """
    checks = []
    logger.debug("Start to verify witness, {0}".format(w))

    try:
        J = embedding_dimension_at_origin(I).ideal
        d0, _ = ord_ideal(J)
    except (NotOnScheme, ZeroIdeal) as e:
        _check(checks, 'ideal', False, e.message)
        return VerificationReport(w, checks)

    _check(checks, 'embedding', J.nvars == w.nvars and J.field == w.field,
           'embedding dimension {0}, witness uses {1}'.format(J.nvars, w.nvars))
    if not checks[-1].passed:
        return VerificationReport(w, checks)

    m, m_prime = w.m, w.m_prime
    _check(checks, 'levels', is_integer(m) and is_integer(m_prime) and 0 <= m < m_prime,
           'm = {0}, m_prime = {1}'.format(m, m_prime))
    if not checks[-1].passed:
        return VerificationReport(w, checks)

    if w.kind == FIBER_JUMP:
        _check(checks, 'fiber_range', m_prime < d0 * (m + 1),
               'm_prime = {0}, d*(m+1) = {1}'.format(m_prime, d0 * (m + 1)))
        fiber = fiber_over_trivial_jet(J, m, m_prime)
        _check(checks, 'fiber_free', fiber.is_free,
               '{0} nonzero fiber equations'.format(len(fiber.generators())))
        _check(checks, 'fiber_dimension', w.fiber_dim == fiber.ambient_dim,
               'claimed {0}, N*(m_prime-m) = {1}'.format(w.fiber_dim, fiber.ambient_dim))
        dim_x = krull_dimension(J.generators, J.nvars)
        _check(checks, 'dimension_inequality', fiber.ambient_dim > (m_prime - m) * dim_x,
               '{0} > {1}*{2}'.format(fiber.ambient_dim, m_prime - m, dim_x))
        report = VerificationReport(w, checks)
        logger.debug("verify witness done, passed: {0}".format(report.passed))
        return report

    F = w.F
    D = defaults.get(D, d0 + defaults.verify_bound_margin)

    if F is None or F.is_zero():
        _check(checks, 'order', False, 'witness element is missing or zero')
        return VerificationReport(w, checks, D)

    _check(checks, 'order', F.ord() == w.d == d0, 'ord F = {0}, d = {1}, ord I = {2}'.format(F.ord(), w.d, d0))

    source = w.source_generator
    is_generator = (is_integer(source) and 0 <= source < len(J.generators) and is_integer(w.level_used) and
                    m < w.level_used <= m_prime and
                    expand_in_t(J.generators[source], w.level_used)[w.level_used] == F)
    _check(checks, 'jet_generator', is_generator,
           'F = F_{{{0},{1}}} of X_{2}'.format(source, w.level_used, m_prime))

    _check(checks, 'maximal_ideal', _divisible_by_low_level(F, m),
           'every monomial has a variable of level <= {0}'.format(m))

    form = initial_form(F)
    if w.field.characteristic == 0:
        _check(checks, 'initial_form', _has_high_level(form, m),
               'initial form involves a variable of level > {0}'.format(m))
    else:
        _check(checks, 'initial_form', any(mono.weight > m for mono in form.monomials()),
               'initial form has a monomial of weight > {0}'.format(m))
        data = w.exponent_data
        if data is not None and is_generator:
            cert = _certificate_monomial(data)
            c_f = J.generators[source].coefficient(_source_monomial(data))
            _check(checks, 'certificate_coefficient', not w.field.is_zero(c_f) and F.coefficient(cert) == c_f,
                   'coefficient of {0} is {1}'.format(cert, w.field.to_string(F.coefficient(cert))))
        else:
            _check(checks, 'certificate_coefficient', False, 'exponent data missing')

    if D <= F.ord():
        _check(checks, 'local_membership', False, 'bound D = {0} does not exceed ord F'.format(D))
    else:
        spec = LocalIdealSpec.from_jet_ideals(jetify(J, m), jetify(J, m_prime))
        member = local_membership_mod_degree(F, spec, D)
        _check(checks, 'local_membership', not member,
               'F not in M*I\' + I*R_{0} modulo degree {1}'.format(m_prime, D) if not member else
               'not excluded at degree bound {0}'.format(D))

    report = VerificationReport(w, checks, D)
    logger.debug("verify witness done, passed: {0}, failed: {1}".format(
        report.passed, [c.name for c in report.failed()]))
    return report


def tangent_space_report(I):
    """pi_1^{-1}(0) 的维数（即切空间维数）与嵌入维数、dim(X,0) 的比较。

    dim(X,0) 取整体Krull维数。
    """
    if not I.contains_origin():
        raise NotOnScheme('origin is not on X', {'ideal': str(I)})

    fiber = fiber_over_trivial_jet(I, 0, 1)
    level1 = [JetVar(1, j) for j in range(1, I.nvars + 1)]
    gens = fiber.generators()
    fiber_dim = I.nvars - (rank(linear_part_matrix(gens, level1), I.field) if gens else 0)

    embdim = embedding_dimension_at_origin(I).embdim
    dim_x = krull_dimension(I.generators, I.nvars, field=I.field)

    report = TangentReport(fiber_dim, embdim, dim_x, fiber)
    logger.debug("tangent report done, fiber_dim: {0}, embdim: {1}, dim: {2}".format(fiber_dim, embdim, dim_x))
    return report


def flatness_pairs(field, max_level):
    low = 0 if field.characteristic == 0 else 1
    return [(m, mp) for m in range(low, max_level + 1) for mp in range(m + 1, max_level + 1)]


def sweep_flatness(I, max_level=None, reduced=False, num_threads=None, verify_bound=None):
    """对所有 (m, m') 构造并验证见证：特征0时 0 <= m < m' <= max_level ，特征p时 1 <= m 。

    各对在 :class:`TaskQueue <jetforge.task_queue.TaskQueue>` 上并发处理，结果按 (m, m') 排序。
    见证相关的异常记在 :class:`SweepEntry <jetforge.models.SweepEntry>` 中，其他异常直接抛出。
    """
    max_level = defaults.get(max_level, defaults.sweep_max_level)
    num_threads = defaults.get(num_threads, defaults.sweep_num_threads)
    pairs = flatness_pairs(I.field, max_level)
    logger.debug("Start to sweep, pairs: {0}, threads: {1}".format(len(pairs), num_threads))

    def work(pair):
        m, m_prime = pair
        try:
            w = flatness_witness(I, m, m_prime, reduced)
        except WitnessError as e:
            return SweepEntry(m, m_prime, error=e)
        return SweepEntry(m, m_prime, w, verify_witness(w, I, verify_bound))

    entries = sorted(run_tasks(pairs, work, num_threads), key=lambda e: (e.m, e.m_prime))
    logger.debug("sweep done, not flat: {0}/{1}".format(sum(1 for e in entries if e.not_flat), len(entries)))
    return entries
