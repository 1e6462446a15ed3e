# -*- coding: utf-8 -*-

import unittest

from jetforge.poly import (Poly, Monomial, JetVar, INFINITY, ONE, order, weight, initial_form,
                           partial_derivative)
from jetforge.field import FieldSpec
from jetforge.exceptions import InvalidArgument, FieldMismatch

from unittests.common import JetTestCase, QQ, F2, F5, var, poly, random_poly


x0, y0 = JetVar(0, 1), JetVar(0, 2)
x1, y1 = JetVar(1, 1), JetVar(1, 2)


class TestMonomial(unittest.TestCase):
    def test_sparse_exponents(self):
        m = Monomial({x0: 2, y0: 0, x1: 1})
        self.assertEqual(m.items, ((x0, 2), (x1, 1)))
        self.assertEqual(m.degree, 3)
        self.assertEqual(m.exponent(y0), 0)
        self.assertEqual(Monomial([(x0, 1), (x0, 2)]), Monomial.of(x0, 3))
        self.assertRaises(InvalidArgument, Monomial, {x0: -1})

    def test_weight(self):
        self.assertEqual(weight(Monomial.of(x0, 5)), 0)
        self.assertEqual(weight(Monomial([(JetVar(1, 1), 1), (JetVar(2, 3), 1)])), 3)
        for p in (2, 3, 5):
            for i in range(4):
                self.assertEqual(Monomial.of(JetVar(i, 1), p).weight, p * i)

    def test_division(self):
        a = Monomial({x0: 2, y0: 1})
        b = Monomial({x0: 1})
        self.assertTrue(b.divides(a))
        self.assertFalse(a.divides(b))
        self.assertEqual(a // b, Monomial({x0: 1, y0: 1}))
        self.assertRaises(InvalidArgument, b.__floordiv__, a)
        self.assertEqual(a.lcm(Monomial({y0: 3})), Monomial({x0: 2, y0: 3}))
        self.assertTrue(Monomial({x0: 1}).is_coprime(Monomial({y0: 4})))
        self.assertEqual((a * b) // a, b)

    def test_jetvar_order(self):
        variables = [JetVar(1, 1), JetVar(0, 2), JetVar(2, 1), JetVar(0, 1), JetVar(1, 2)]
        self.assertEqual(sorted(variables),
                         [JetVar(0, 1), JetVar(0, 2), JetVar(1, 1), JetVar(1, 2), JetVar(2, 1)])
        self.assertRaises(InvalidArgument, JetVar, -1, 1)
        self.assertRaises(InvalidArgument, JetVar, 0, 0)

    def test_grevlex(self):
        x, y, z = JetVar(0, 1), JetVar(0, 2), JetVar(0, 3)

        def mono(**exps):
            return Monomial(dict((dict(x=x, y=y, z=z)[k], e) for k, e in exps.items()))

        # higher degree first, then the smaller power of the last variable
        self.assertTrue(mono(z=3) > mono(x=2))
        self.assertTrue(mono(y=2) > mono(x=1, z=1))
        self.assertTrue(mono(x=2) > mono(x=1, y=1))
        self.assertTrue(mono(x=1, z=1) > mono(y=1, z=1))
        self.assertTrue(mono(y=1, z=1) > mono(z=2))
        self.assertTrue(Monomial.of(x0) > Monomial.of(x1))
        self.assertTrue(ONE < Monomial.of(x1))


class TestPoly(JetTestCase):
    def test_canonical(self):
        f = Poly(QQ, {Monomial.of(x0): 1, Monomial.of(y0): 0})
        self.assertEqual(len(f), 1)
        self.assertTrue((var(0, 1) + 1 - (var(0, 1) + 1)).is_zero())
        self.assertEqual((var(0, 1) + 1 - (var(0, 1) + 1)).terms, {})
        self.assertEqual(var(0, 1) * var(0, 1), Poly.monomial(QQ, Monomial.of(x0, 2)))

    def test_frobenius(self):
        f = var(0, 1, F2) + var(0, 2, F2)
        self.assertEqual(f ** 2, var(0, 1, F2) ** 2 + var(0, 2, F2) ** 2)
        g = var(0, 1, F5) + 1
        self.assertEqual(g ** 5, var(0, 1, F5) ** 5 + 1)

    def test_field_mismatch(self):
        self.assertRaises(FieldMismatch, lambda: var(0, 1, QQ) + var(0, 1, F5))
        self.assertRaises(FieldMismatch, lambda: var(0, 1, F2) * var(0, 1, F5))

    def test_ring_axioms(self):
        for field in (QQ, F5):
            for _ in range(1000):
                a, b, c = [random_poly(self.rng, field, nvars=2, max_degree=3, max_terms=4) for _ in range(3)]
                self.assertEqual(a + b, b + a)
                self.assertEqual(a * b, b * a)
                self.assertEqual((a + b) + c, a + (b + c))
                self.assertEqual((a * b) * c, a * (b * c))
                self.assertEqual(a * (b + c), a * b + a * c)
                self.assertTrue((a - a).is_zero())

    def test_ord(self):
        self.assertEqual(order(poly('x^2 - y^3')), 2)
        self.assertEqual(order(Poly.zero(QQ)), INFINITY)
        F1 = poly('2*x*x[1][1] - 3*y^2*x[1][2]')
        self.assertEqual(F1.ord(), 2)
        self.assertEqual(poly('x^2 + 1').ord(), 0)

        self.assertTrue(INFINITY > 10 ** 9)
        self.assertTrue(3 < INFINITY)
        self.assertFalse(INFINITY < 3)
        self.assertEqual(INFINITY, INFINITY)
        self.assertNotEqual(INFINITY, 0)

    def test_initial_form(self):
        self.assertEqual(initial_form(poly('x^2 - y^3')), poly('x^2'))
        self.assertEqual(initial_form(poly('2*x*x[1][1] - 3*y^2*x[1][2]')), poly('2*x*x[1][1]'))
        f = poly('x^2 + 3*x*y - y^2')
        self.assertEqual(initial_form(f), f)
        self.assertRaises(InvalidArgument, initial_form, Poly.zero(QQ))

    def test_partial_derivative(self):
        self.assertEqual(partial_derivative(poly('x^2 - y^3'), x0), poly('2*x'))
        self.assertEqual(partial_derivative(poly('x^2 - y^3'), y0), poly('-3*y^2'))
        self.assertTrue(partial_derivative(Poly.constant(QQ, 7), x0).is_zero())
        for p in (2, 3, 5):
            field = FieldSpec.prime_field(p)
            self.assertTrue(partial_derivative(var(0, 1, field) ** p, x0).is_zero())

    def test_partial_derivative_is_first_order_term(self):
        eps = JetVar(0, 9)
        for field in (QQ, F5):
            for _ in range(100):
                f = random_poly(self.rng, field, nvars=3, max_degree=4)
                for v in (x0, y0, JetVar(0, 3)):
                    shifted = f.substitute({v: Poly.variable(field, v) + Poly.variable(field, eps)})
                    rest = shifted - f - partial_derivative(f, v) * Poly.variable(field, eps)
                    for mono in rest.monomials():
                        self.assertTrue(mono.exponent(eps) >= 2)

    def test_evaluate_and_substitute(self):
        f = poly('x^2 - y^3')
        self.assertEqual(f.evaluate({x0: QQ.convert(8), y0: QQ.convert(4)}), 0)
        self.assertEqual(f.evaluate({x0: QQ.convert(1)}), 1)
        g = f.substitute({x0: poly('y^2')})
        self.assertEqual(g, poly('y^4 - y^3'))

    def test_truncate_and_parts(self):
        f = poly('1 + x + x*y + y^3')
        self.assertEqual(f.truncate(2), poly('1 + x'))
        self.assertEqual(f.homogeneous_part(2), poly('x*y'))
        self.assertEqual(f.constant_term(), 1)
        self.assertEqual(f.degree(), 3)
        self.assertEqual(Poly.zero(QQ).degree(), -1)
        self.assertFalse(f.is_homogeneous())
        self.assertTrue(poly('x*y - y^2').is_homogeneous())

    def test_leading_term(self):
        f = poly('x*y + 3*y^2 + x^2*y')
        self.assertEqual(f.LM, Monomial({x0: 2, y0: 1}))
        self.assertEqual(poly('2*x*y + 3*y^2').monic(), poly('x*y + 3/2*y^2'))
        self.assertEqual(poly('y + x').LM, Monomial.of(x0))
        self.assertRaises(InvalidArgument, Poly.zero(QQ).leading_term)

    def test_variables_and_levels(self):
        f = poly('x[2][1]*y + x[1][2]')
        self.assertEqual(f.variables(), [y0, y1, JetVar(2, 1)])
        self.assertEqual(f.max_level(), 2)
        self.assertEqual(Poly.zero(QQ).max_level(), -1)

    def test_to_string(self):
        self.assertEqual(str(poly('x^2 - y^3')), '-x[0][2]^3 + x[0][1]^2')
        self.assertEqual(poly('x^2 - y^3').to_string(('x', 'y')), '-y^3 + x^2')
        self.assertEqual(str(poly('1/2*x - 1')), '1/2*x[0][1] - 1')
        self.assertEqual(str(Poly.zero(QQ)), '0')
        self.assertEqual(str(poly('4*x + 1', F5)), '4*x[0][1] + 1')


if __name__ == '__main__':
    unittest.main()
