# -*- coding: utf-8 -*-

import random
import itertools
import unittest
from fractions import Fraction

import jetforge
from jetforge import FieldSpec, Poly, Monomial, JetVar, AmbientIdeal, parse_poly


QQ = FieldSpec.rationals()
F2 = FieldSpec.prime_field(2)
F3 = FieldSpec.prime_field(3)
F5 = FieldSpec.prime_field(5)

XY = ('x', 'y')
XYZ = ('x', 'y', 'z')


class NonlocalObject(object):
    def __init__(self, value):
        self.var = value


def var(level, index, field=QQ):
    return Poly.variable(field, JetVar(level, index))


def poly(text, field=QQ, names=XY):
    return parse_poly(text, field, names)


def ideal(texts, field=QQ, names=XY):
    return AmbientIdeal(field, len(names), [poly(t, field, names) for t in texts], names)


def cusp(field=QQ):
    return ideal(['x^2 - y^3'], field)


def node(field=QQ):
    return ideal(['x*y'], field)


def whitney_umbrella(field=QQ):
    return ideal(['x^2 - y^2*z'], field, XYZ)


def affine_space(n, field=QQ):
    return AmbientIdeal(field, n, [], XYZ[:n])


def smooth_conic(field=QQ):
    """y = x^2 + 1 moved so that (0, 1) sits at the origin."""
    return ideal(['y - x^2 - 1'], field).translate([0, 1])


def unit_circle_at_one(field=QQ):
    """x^2 + y^2 = 1 moved so that (1, 0) sits at the origin."""
    return ideal(['x^2 + y^2 - 1'], field).translate([1, 0])


def frobenius_line(p):
    """(x^p) over F_p, whose jet schemes are flat over each other between multiples of p."""
    field = FieldSpec.prime_field(p)
    return AmbientIdeal(field, 1, [poly('x^{0}'.format(p), field, ('x',))], ('x',))


def random_monomial(rng, nvars, max_degree, levels=(0,)):
    degree = rng.randint(0, max_degree)
    exps = {}
    for _ in range(degree):
        v = JetVar(rng.choice(levels), rng.randint(1, nvars))
        exps[v] = exps.get(v, 0) + 1
    return Monomial(exps)


def random_poly(rng, field, nvars=3, max_degree=4, max_terms=5, constant=True):
    """随机多项式，只含第0层变量；constant为False时没有常数项。"""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = random_monomial(rng, nvars, max_degree)
        if not constant and mono.is_one():
            continue
        terms[mono] = field.random_element(rng)
    return Poly(field, terms)


def random_nonzero_poly(rng, field, nvars=3, max_degree=4, max_terms=5, constant=True):
    while True:
        f = random_poly(rng, field, nvars, max_degree, max_terms, constant)
        if not f.is_zero():
            return f


def random_homogeneous(rng, field, variables, degree, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = Monomial([(rng.choice(variables), 1) for _ in range(degree)])
        terms[mono] = field.random_element(rng)
    return Poly(field, terms)


def naive_expand(f, m):
    """[F_0, ..., F_m] by enumerating, for every term, the level picked in each factor of its monomial."""
    field = f.field
    acc = [{} for _ in range(m + 1)]
    for mono, c in f.items():
        factors = []
        for v, e in mono.items:
            factors.extend([v.index] * e)
        for levels in itertools.product(range(m + 1), repeat=len(factors)):
            total = sum(levels)
            if total > m:
                continue
            key = Monomial([(JetVar(level, index), 1) for level, index in zip(levels, factors)])
            acc[total][key] = field.add(acc[total].get(key, field.zero), c)
    return [Poly(field, terms) for terms in acc]


def sympy_symbol(v):
    import sympy
    return sympy.Symbol('x_{0}_{1}'.format(v.level, v.index))


def to_sympy(f):
    import sympy
    expr = sympy.Integer(0)
    for mono, c in f.items():
        c = Fraction(c)
        term = sympy.Rational(c.numerator, c.denominator)
        for v, e in mono.items:
            term = term * sympy_symbol(v) ** e
        expr = expr + term
    return expr


def from_sympy(expr, variables, field=QQ):
    """sympy表达式转回多项式，variables 为表达式中可能出现的JetVar列表。"""
    import sympy
    expr = sympy.expand(expr)
    if expr == 0:
        return Poly.zero(field)
    if expr.is_number:
        c = sympy.Rational(expr)
        return Poly.constant(field, Fraction(int(c.p), int(c.q)))
    symbols = [sympy_symbol(v) for v in variables]
    terms = {}
    for exps, c in sympy.Poly(expr, *symbols).terms():
        c = sympy.Rational(c)
        mono = Monomial([(v, e) for v, e in zip(variables, exps) if e])
        terms[mono] = Fraction(int(c.p), int(c.q))
    return Poly(field, terms)


def sympy_expand_in_t(f, m):
    import sympy
    t = sympy.Symbol('t')
    indices = sorted(set(v.index for v in f.variables()))
    subs = dict((sympy_symbol(JetVar(0, j)), sum(sympy_symbol(JetVar(i, j)) * t ** i for i in range(m + 1)))
                for j in indices)
    expr = sympy.expand(to_sympy(f).subs(subs, simultaneous=True))
    variables = [JetVar(i, j) for i in range(m + 1) for j in indices]
    return [from_sympy(expr.coeff(t, i), variables, f.field) for i in range(m + 1)]


class JetTestCase(unittest.TestCase):
    SEED = 20200612

    def setUp(self):
        self.rng = random.Random(self.SEED)

    def assertPolyEqual(self, a, b):
        self.assertEqual(a, b, '{0} != {1}'.format(a, b))

    def assertWeightHomogeneous(self, F, weight):
        for mono in F.monomials():
            self.assertEqual(mono.weight, weight, '{0} in {1}'.format(mono, F))

    def assertVerified(self, w, I, D=None):
        report = jetforge.verify_witness(w, I, D)
        self.assertTrue(report.passed, 'failed checks: {0}'.format(
            [(c.name, c.detail) for c in report.failed()]))
        return report
