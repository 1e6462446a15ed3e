# -*- coding: utf-8 -*-

"""
jetforge.groebner
~~~~~~~~~~~~~~~~~

Gröbner基与相关判定，作为见证验证时的独立判定器。

单项式序固定为 :mod:`jetforge.poly` 中的分次反字典序（grevlex）。
Buchberger算法采用normal选对策略与Gebauer-Möller准则。
"""

import logging

from .exceptions import InvalidArgument, FieldMismatch, UnitIdeal
from .poly import Poly, Monomial, JetVar, ONE
from .linalg import SparseEchelon
from . import defaults

logger = logging.getLogger(__name__)


GREVLEX = 'grevlex'


def _common_field(polys, field=None):
    for f in polys:
        if field is None:
            field = f.field
        elif f.field != field:
            raise FieldMismatch(str(field), str(f.field))
    return field


def _subtract_multiple(field, terms, g, mu, coef):
    """terms -= coef * mu * g ，原地修改。"""
    for m2, c2 in g.items():
        mono = m2 * mu
        v = field.sub(terms.get(mono, field.zero), field.mul(coef, c2))
        if field.is_zero(v):
            terms.pop(mono, None)
        else:
            terms[mono] = v


def _divide(field, f, divisors):
    """多元带余除法，对余项的每一项都做约化。

    :param divisors: 非零多项式列表
    :return: (商的单项dict列表, 余项)
    """
    heads = [(g, g.LM, field.inv(g.LC)) for g in divisors]
    quotients = [{} for _ in divisors]
    p = f.terms
    remainder = {}

    while p:
        mono = max(p, key=Monomial.grevlex_key)
        c = p[mono]
        for k, (g, lm, inv) in enumerate(heads):
            if lm.divides(mono):
                mu = mono // lm
                coef = field.mul(c, inv)
                _subtract_multiple(field, p, g, mu, coef)
                q = field.add(quotients[k].get(mu, field.zero), coef)
                if field.is_zero(q):
                    quotients[k].pop(mu, None)
                else:
                    quotients[k][mu] = q
                break
        else:
            remainder[mono] = c
            del p[mono]

    return quotients, Poly._make(field, remainder)


def division(f, divisors):
    """f = sum(q_k * g_k) + r ，r 的任何一项都不被任何 LM(g_k) 整除。

    零除式对应的商为零。

    :return: (商的列表, 余项)
    """
    divisors = list(divisors)
    field = _common_field(divisors, f.field)
    nonzero = [k for k, g in enumerate(divisors) if not g.is_zero()]

    quotients, remainder = _divide(field, f, [divisors[k] for k in nonzero])
    result = [Poly.zero(field) for _ in divisors]
    for k, q in zip(nonzero, quotients):
        result[k] = Poly._make(field, q)
    return result, remainder


class GroebnerBasis(object):
    """约化Gröbner基。

    :param field: 系数域
    :param elements: 首一、互相约化的多项式列表，按首项单项式升序排列
    :param generators: 计算时输入的生成元
    :param cofactors: 可选，`cofactors[k][l]` 满足 elements[k] = sum_l cofactors[k][l] * generators[l]
    """
    order = GREVLEX

    def __init__(self, field, elements, generators=None, cofactors=None):
        self.field = field
        self.elements = elements
        self.generators = generators or []
        self.cofactors = cofactors

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_zero(self):
        return not self.elements

    def is_unit(self):
        return any(g.LM.is_one() for g in self.elements)

    def leading_monomials(self):
        return [g.LM for g in self.elements]

    def normal_form(self, f):
        return _divide(self.field, f, self.elements)[1]

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def lift(self, f):
        """用生成元表示 f ；f 不在理想中时返回None。需要在计算时保留余因子。"""
        if self.cofactors is None:
            raise InvalidArgument('with_cofactors', False, 'basis was computed without cofactors')

        field = self.field
        quotients, remainder = _divide(field, f, self.elements)
        if not remainder.is_zero():
            return None

        result = [Poly.zero(field) for _ in self.generators]
        for q, rep in zip(quotients, self.cofactors):
            q = Poly._make(field, q)
            if q.is_zero():
                continue
            for l, c in enumerate(rep):
                if not c.is_zero():
                    result[l] = result[l] + q * c
        return result


class _Element(object):
    __slots__ = ('poly', 'lm', 'rep')

    def __init__(self, poly, rep):
        self.poly = poly
        self.lm = poly.LM
        self.rep = rep


def _normalize(field, poly, rep):
    inv = field.inv(poly.LC)
    if rep is not None:
        rep = [c.scale(inv) for c in rep]
    return _Element(poly.scale(inv), rep)


def _spoly(field, a, b):
    lcm = a.lm.lcm(b.lm)
    mu_a = lcm // a.lm
    mu_b = lcm // b.lm
    s = a.poly.mul_term(mu_a, field.one) - b.poly.mul_term(mu_b, field.one)
    rep = None
    if a.rep is not None:
        rep = [ca.mul_term(mu_a, field.one) - cb.mul_term(mu_b, field.one) for ca, cb in zip(a.rep, b.rep)]
    return s, rep


def _reduce_element(field, poly, rep, basis):
    quotients, remainder = _divide(field, poly, [e.poly for e in basis])
    if rep is not None and not remainder.is_zero():
        rep = list(rep)
        for q, e in zip(quotients, basis):
            if not q:
                continue
            q = Poly._make(field, q)
            rep = [c - q * ce for c, ce in zip(rep, e.rep)]
    return remainder, rep


def _update(G, P, f):
    """Gebauer-Möller：加入 f 时删去多余的旧对并只保留必要的新对。"""
    lmf = f.lm
    n = len(G)

    def lcm_of(i, j):
        return G[i].lm.lcm(G[j].lm)

    kept = set()
    for i, j in P:
        L = lcm_of(i, j)
        if not lmf.divides(L) or L == G[i].lm.lcm(lmf) or L == G[j].lm.lcm(lmf):
            kept.add((i, j))

    by_lcm = {}
    for i in range(n):
        by_lcm.setdefault(G[i].lm.lcm(lmf), []).append(i)

    minimal = []
    for L in sorted(by_lcm, key=Monomial.grevlex_key):
        if all(not L_.divides(L) for L_ in minimal):
            minimal.append(L)

    for L in minimal:
        # product criterion: a coprime pair reduces to zero
        if not any(G[i].lm.is_coprime(lmf) for i in by_lcm[L]):
            kept.add((min(by_lcm[L]), n))

    G.append(f)
    return kept


def _select(G, P):
    return min(P, key=lambda p: (G[p[0]].lm.lcm(G[p[1]].lm).grevlex_key(), p))


def buchberger(gens, with_cofactors=False, field=None):
    """计算约化Gröbner基。

    :param gens: 多项式列表，零多项式被忽略
    :param with_cofactors: 是否记录每个基元素关于输入生成元的表示
    :param field: gens 为空时需要给出系数域

    :return: :class:`GroebnerBasis`
    """
    gens = list(gens)
    field = _common_field(gens, field)
    if field is None:
        raise InvalidArgument('field', None, 'cannot infer the field of an empty generator list')

    logger.debug("Start to compute groebner basis, generators: {0}, with_cofactors: {1}".format(
        len(gens), with_cofactors))

    G = []
    P = set()
    for l, f in enumerate(gens):
        if f.is_zero():
            continue
        rep = None
        if with_cofactors:
            rep = [Poly.constant(field, 1) if k == l else Poly.zero(field) for k in range(len(gens))]
        P = _update(G, P, _normalize(field, f, rep))

    reductions = 0
    while P:
        pair = _select(G, P)
        P.remove(pair)
        s, rep = _spoly(field, G[pair[0]], G[pair[1]])
        r, rep = _reduce_element(field, s, rep, G)
        reductions += 1
        if not r.is_zero():
            P = _update(G, P, _normalize(field, r, rep))

    # minimalize, then interreduce
    minimal = []
    for e in sorted(G, key=lambda e: e.lm.grevlex_key()):
        if all(not m.lm.divides(e.lm) for m in minimal):
            minimal.append(e)

    reduced = []
    for k, e in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r, rep = _reduce_element(field, e.poly, e.rep, others)
        reduced.append(_normalize(field, r, rep))

    basis = GroebnerBasis(field, [e.poly for e in reduced], gens,
                          [e.rep for e in reduced] if with_cofactors else None)
    logger.debug("groebner basis done, size: {0}, s-polynomials reduced: {1}".format(len(basis), reductions))
    return basis


def normal_form(f, basis):
    """f 模 `basis` 的正规形式；`basis` 可以是 :class:`GroebnerBasis` 或者生成元列表。"""
    if not isinstance(basis, GroebnerBasis):
        basis = buchberger(basis, field=f.field)
    return basis.normal_form(f)


def ideal_membership(f, gens):
    """f 是否属于 (gens) 。"""
    return normal_form(f, list(gens)).is_zero()


def lift(f, gens):
    """返回 [q_1, ..., q_r] 使得 f = sum q_l * gens[l]；f 不在理想中时返回None。"""
    return buchberger(gens, with_cofactors=True, field=f.field).lift(f)


def _min_hitting_set_size(supports):
    supports = sorted(set(frozenset(s) for s in supports), key=len)
    minimal = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)

    best = [len(set().union(*minimal)) if minimal else 0]

    def search(remaining, chosen):
        if chosen >= best[0]:
            return
        if not remaining:
            best[0] = chosen
            return
        smallest = min(remaining, key=len)
        for v in sorted(smallest):
            search([s for s in remaining if v not in s], chosen + 1)

    search(minimal, 0)
    return best[0]


def krull_dimension(gens, nvars, field=None):
    """仿射簇的维数：nvars 减去首项理想的生成元支撑集的最小碰集大小，
    即模首项理想独立的变量子集的最大基数。

    :param gens: 生成元列表，零多项式被忽略
    :param int nvars: 多项式环的变量个数

    :raises UnitIdeal: 理想为整个环
    """
    gens = [f for f in gens if not f.is_zero()]
    if not gens:
        return nvars

    basis = buchberger(gens, field=field)
    if basis.is_unit():
        raise UnitIdeal('the ideal is the whole ring, its variety is empty')

    used = set()
    for lm in basis.leading_monomials():
        used.update(lm.variables())
    if len(used) > nvars:
        raise InvalidArgument('nvars', nvars, 'generators use {0} variables'.format(len(used)))

    cover = _min_hitting_set_size([lm.variables() for lm in basis.leading_monomials()])
    logger.debug("krull dimension done, nvars: {0}, cover: {1}".format(nvars, cover))
    return nvars - cover


class LocalIdealSpec(object):
    """J = M·I' + I·R_{m'} 的有限生成元表示。

    M 为由第 0..m 层全部变量生成的极大理想，I' 为 X_{m'} 的理想，I 为 X_m 的理想。

    :param generators: J 的生成元
    :param int maximal_ideal_level_bound: m
    """
    def __init__(self, generators, maximal_ideal_level_bound):
        self.generators = [g for g in generators if not g.is_zero()]
        self.maximal_ideal_level_bound = maximal_ideal_level_bound

    @classmethod
    def from_jet_ideals(cls, jet_ideal, jet_ideal_prime):
        """由 X_m 与 X_{m'} 的jet理想构造，生成元为
        {x[l][j] * F : l <= m, F 属于 I' 的生成元} 与 I 的生成元之并。"""
        m = jet_ideal.m
        if jet_ideal_prime.m <= m:
            raise InvalidArgument('jet_ideal_prime', jet_ideal_prime.m, 'need m < m_prime')

        field = jet_ideal.field
        nvars = jet_ideal.base.nvars
        generators = []
        for F in jet_ideal_prime.generators():
            for l in range(m + 1):
                for j in range(1, nvars + 1):
                    generators.append(F.mul_term(Monomial.of(JetVar(l, j)), field.one))
        generators.extend(jet_ideal.generators())
        return cls(generators, m)

    def __len__(self):
        return len(self.generators)


def _monomials_up_to(variables, degree):
    """变量集合上次数 <= degree 的全部单项式。"""
    result = [ONE]
    frontier = [(ONE, 0)]
    for _ in range(degree):
        nxt = []
        for mono, start in frontier:
            for k in range(start, len(variables)):
                m2 = mono * Monomial.of(variables[k])
                result.append(m2)
                nxt.append((m2, k))
        frontier = nxt
    return result


def local_membership_mod_degree(F, J, D=None):
    """判断 F 的次数 < D 的截断是否落在 {mu * g 的截断} 张成的k-线性空间中，
    g 取遍 J 的生成元，mu 取遍满足 deg(mu) + ord(g) < D 的单项式。

    返回False时 F 在原点处的局部环中不属于 J（可靠的非成员证明）；返回True只说明在该次数界下未被排除。

    :param F: 非零多项式
    :param J: :class:`LocalIdealSpec`
    :param D: 次数界，缺省为 ord(F) + defaults.local_membership_margin

    :raises InvalidArgument: F 为零或者 D <= ord(F)
    """
    if F.is_zero():
        raise InvalidArgument('F', '0', 'the zero polynomial is trivially a member')
    D = defaults.get(D, F.ord() + defaults.local_membership_margin)
    if D <= F.ord():
        raise InvalidArgument('D', D, 'degree bound must exceed ord(F) = {0}'.format(F.ord()))

    field = _common_field(J.generators, F.field)

    # multipliers in variables outside F and J specialize to zero, so they add nothing
    variables = set(F.variables())
    for g in J.generators:
        variables.update(g.variables())
    variables = sorted(variables)

    echelon = SparseEchelon(field, key=Monomial.grevlex_key)
    cache = {}
    for g in J.generators:
        room = D - 1 - g.ord()
        if room < 0:
            continue
        if room not in cache:
            cache[room] = _monomials_up_to(variables, room)
        for mu in cache[room]:
            row = g.mul_term(mu, field.one).truncate(D)
            if not row.is_zero():
                echelon.add(row.terms)

    target = F.truncate(D)
    member = echelon.contains(target.terms)
    logger.debug("local membership done, D: {0}, generators: {1}, rank: {2}, member: {3}".format(
        D, len(J.generators), len(echelon), member))
    return member
