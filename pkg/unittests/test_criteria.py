# -*- coding: utf-8 -*-

import unittest

from jetforge.criteria import (embedding_dimension_at_origin, ord_ideal, jet_smoothness_report,
                               flat_witness_char0, flat_witness_charp, flatness_witness, verify_witness,
                               tangent_space_report, flatness_pairs, sweep_flatness)
from jetforge.models import SMOOTH, SINGULAR, INCONCLUSIVE, FIBER_JUMP, WITNESS_ELEMENT, ExponentData, FlatnessWitness
from jetforge.series import expand_in_t
from jetforge.jets import AmbientIdeal
from jetforge.exceptions import (NotOnScheme, ZeroIdeal, EmbeddingError, CharacteristicError, SmoothOrigin,
                                 NoWitnessFound, WitnessRefused, InvalidArgument)

from unittests.common import (JetTestCase, QQ, F5, XYZ, var, poly, ideal, cusp, node, whitney_umbrella,
                              affine_space, smooth_conic, unit_circle_at_one, frobenius_line)


def _singular_corpus(field=QQ):
    return [('cusp', cusp(field)), ('node', node(field)), ('whitney', whitney_umbrella(field))]


def _smooth_corpus():
    return [('A1', affine_space(1)), ('A2', affine_space(2)),
            ('conic', smooth_conic()), ('circle', unit_circle_at_one())]


class TestEmbedding(JetTestCase):
    def test_singular_origin_is_unchanged(self):
        I = cusp()
        emb = embedding_dimension_at_origin(I)
        self.assertEqual(emb.embdim, 2)
        self.assertTrue(emb.exact)
        self.assertTrue(emb.ideal is I)
        self.assertEqual(emb.eliminated, [])

    def test_graph_is_eliminated(self):
        emb = embedding_dimension_at_origin(ideal(['x - y^2']))
        self.assertEqual(emb.embdim, 1)
        self.assertTrue(emb.exact)
        self.assertEqual(emb.eliminated, [1])
        self.assertEqual(emb.kept, [2])
        self.assertTrue(emb.ideal.is_zero())
        self.assertEqual(emb.ideal.nvars, 1)
        self.assertEqual(emb.ideal.names, ('y',))

    def test_partial_elimination(self):
        # z = x^2 leaves the cusp in the remaining coordinates
        emb = embedding_dimension_at_origin(ideal(['z - x^2', 'x^2 - y^3'], names=XYZ))
        self.assertEqual(emb.embdim, 2)
        self.assertEqual(emb.eliminated, [3])
        self.assertEqual(emb.ideal.generators, [poly('x^2 - y^3')])

    def test_zero_ideal(self):
        emb = embedding_dimension_at_origin(affine_space(2))
        self.assertEqual(emb.embdim, 2)
        self.assertTrue(emb.exact)

    def test_cyclic_substitution_falls_back(self):
        I = unit_circle_at_one()
        emb = embedding_dimension_at_origin(I)
        self.assertEqual(emb.embdim, 1)
        self.assertFalse(emb.exact)
        self.assertTrue(emb.ideal is I)
        self.assertRaises(EmbeddingError, embedding_dimension_at_origin, I, True)

    def test_off_origin(self):
        self.assertRaises(NotOnScheme, embedding_dimension_at_origin, ideal(['x - 1']))


class TestOrdIdeal(JetTestCase):
    def test_known_values(self):
        self.assertEqual(ord_ideal(ideal(['x^3', 'y^2 - x^5'])), (2, 1))
        self.assertEqual(ord_ideal(cusp()), (2, 0))
        for p in (2, 3, 5):
            self.assertEqual(ord_ideal(frobenius_line(p)), (p, 0))

    def test_zero_ideal(self):
        self.assertRaises(ZeroIdeal, ord_ideal, affine_space(2))


class TestJetSmoothness(JetTestCase):
    def test_singular_corpus(self):
        for name, I in _singular_corpus():
            for m in (1, 2, 3):
                report = jet_smoothness_report(I, m)
                self.assertEqual(report.verdict, SINGULAR, '{0} at m={1}'.format(name, m))
                self.assertEqual(report.jacobian_rank, 0)
                self.assertEqual(report.m, m)

    def test_smooth_corpus(self):
        for name, I in _smooth_corpus():
            for m in (1, 2, 3):
                report = jet_smoothness_report(I, m)
                self.assertEqual(report.verdict, SMOOTH, '{0} at m={1}'.format(name, m))
                self.assertEqual(report.jacobian_rank, report.generator_count)

    def test_conic_rank(self):
        report = jet_smoothness_report(smooth_conic(), 3)
        self.assertEqual(report.jacobian_rank, 4)
        self.assertEqual(report.codim_expected, 4)

    def test_zero_ideal(self):
        report = jet_smoothness_report(AmbientIdeal(QQ, 2, []), 5)
        self.assertEqual(report.verdict, SMOOTH)
        self.assertEqual(report.jacobian_rank, 0)
        self.assertEqual(report.generator_count, 0)

    def test_frobenius_line(self):
        for p in (2, 3, 5):
            report = jet_smoothness_report(frobenius_line(p), p)
            self.assertEqual(report.verdict, SINGULAR)
            self.assertEqual(report.generator_count, 2)

    def test_char_p_note(self):
        report = jet_smoothness_report(cusp(F5), 1)
        self.assertTrue(any('reducedness' in note for note in report.notes))
        self.assertFalse(any('reducedness' in note for note in jet_smoothness_report(cusp(), 1).notes))

    def test_off_origin(self):
        self.assertRaises(NotOnScheme, jet_smoothness_report, ideal(['x - 1']), 1)

    def test_lower_dimensional_component(self):
        # plane z = 1 plus the space cusp {y = 0, x^2 = z^3}, which alone passes through the origin
        I = ideal(['y*(z - 1)', '(x^2 - z^3)*(z - 1)'], names=XYZ)
        report = jet_smoothness_report(I, 0)
        self.assertEqual(report.jacobian_rank, 1)
        self.assertEqual(report.codim_expected, 1)
        self.assertEqual(report.verdict, INCONCLUSIVE)
        self.assertTrue(any('unknown' in note for note in report.notes))


class TestWitnessChar0(JetTestCase):
    def test_cusp_tangent_pair(self):
        w = flat_witness_char0(cusp(), 0, 1)
        self.assertEqual(w.kind, WITNESS_ELEMENT)
        self.assertEqual(w.d, 2)
        self.assertEqual(w.level_used, 1)
        self.assertEqual(w.source_generator, 0)
        self.assertPolyEqual(w.F, poly('2*x*x[1][1] - 3*y^2*x[1][2]'))
        self.assertVerified(w, cusp())

    def test_node(self):
        w = flat_witness_char0(node(), 1, 2)
        self.assertPolyEqual(w.F, poly('x*x[2][2] + x[1][1]*x[1][2] + x[2][1]*y'))
        self.assertVerified(w, node())

    def test_corpus(self):
        for name, I in _singular_corpus():
            for m in range(0, 4):
                for m_prime in range(m + 1, 5):
                    w = flat_witness_char0(I, m, m_prime)
                    self.assertEqual(w.level_used, m + 1)
                    self.assertEqual(w.F.ord(), 2)
                    self.assertTrue(w.F.max_level() <= m + 1)
                    report = self.assertVerified(w, I)
                    self.assertEqual(report.bound, 4)

    def test_witness_is_a_jet_generator(self):
        w = flat_witness_char0(whitney_umbrella(), 2, 3)
        self.assertEqual(w.F, expand_in_t(poly('x^2 - y^2*z', names=XYZ), 3)[3])

    def test_smooth_origin(self):
        for name, I in _smooth_corpus():
            self.assertRaises(SmoothOrigin, flat_witness_char0, I, 1, 2)

    def test_bad_arguments(self):
        self.assertRaises(CharacteristicError, flat_witness_char0, cusp(F5), 1, 2)
        self.assertRaises(InvalidArgument, flat_witness_char0, cusp(), 2, 2)
        self.assertRaises(InvalidArgument, flat_witness_char0, cusp(), -1, 1)

    def test_dispatch(self):
        self.assertEqual(flatness_witness(cusp(), 1, 3).kind, WITNESS_ELEMENT)
        self.assertEqual(flatness_witness(cusp(F5), 1, 2, reduced=True).kind, FIBER_JUMP)


class TestWitnessCharP(JetTestCase):
    def test_reduced_corpus(self):
        for name, I in (('cusp', cusp(F5)), ('node', node(F5))):
            for m in range(1, 5):
                for m_prime in range(m + 1, 6):
                    w = flat_witness_charp(I, m, m_prime, reduced=True)
                    if m_prime < 2 * (m + 1):
                        self.assertEqual(w.kind, FIBER_JUMP, '{0} ({1}, {2})'.format(name, m, m_prime))
                        self.assertEqual(w.fiber_dim, 2 * (m_prime - m))
                        self.assertEqual(w.dim_at_origin, 1)
                    else:
                        self.assertEqual(w.kind, WITNESS_ELEMENT, '{0} ({1}, {2})'.format(name, m, m_prime))
                        self.assertEqual(w.level_used, 2)
                    self.assertVerified(w, I)

    def test_cusp_certificate(self):
        w = flat_witness_charp(cusp(F5), 1, 4, reduced=True)
        self.assertEqual(w.exponent_data, ExponentData(((1, 2),), 1, 2, 1))
        self.assertPolyEqual(w.F, expand_in_t(poly('x^2 - y^3', F5), 2)[2])
        self.assertEqual(w.F.coefficient(poly('x[1][1]^2', F5).LM), 1)
        self.assertVerified(w, cusp(F5))

    def test_node_certificate(self):
        w = flat_witness_charp(node(F5), 1, 5, reduced=True)
        self.assertPolyEqual(w.F, poly('x*x[2][2] + x[1][1]*x[1][2] + x[2][1]*y', F5))
        self.assertEqual(w.exponent_data.j0, 1)
        self.assertEqual(w.exponent_data.s, 2)

    def test_without_reducedness(self):
        w = flat_witness_charp(cusp(F5), 1, 2)
        self.assertEqual(w.kind, WITNESS_ELEMENT)
        self.assertVerified(w, cusp(F5))

    def test_order_zero(self):
        self.assertRaises(WitnessRefused, flat_witness_charp, cusp(F5), 0, 2, True)
        self.assertRaises(WitnessRefused, flat_witness_charp, cusp(F5), 0, 1)

        w = flat_witness_charp(cusp(F5), 0, 1, reduced=True)
        self.assertEqual(w.kind, FIBER_JUMP)
        self.assertEqual(w.fiber_dim, 2)
        self.assertVerified(w, cusp(F5))

    def test_frobenius_decoy(self):
        # F_i of x^p vanishes unless p | i, so nothing between pq and pq + r can serve
        for p in (2, 3, 5):
            for q in (1, 2):
                for r in range(1, p):
                    self.assertRaises(NoWitnessFound, flat_witness_charp, frobenius_line(p), p * q, p * q + r)

    def test_bad_arguments(self):
        self.assertRaises(CharacteristicError, flat_witness_charp, cusp(), 1, 2)
        self.assertRaises(SmoothOrigin, flat_witness_charp, affine_space(2, F5), 1, 2)
        self.assertRaises(InvalidArgument, flat_witness_charp, cusp(F5), 3, 2)


class TestVerifyWitness(JetTestCase):
    def test_wrong_level(self):
        I = cusp()
        w = flat_witness_char0(I, 1, 2)
        w.F = expand_in_t(I.generators[0], 1)[1]
        report = verify_witness(w, I)
        self.assertFalse(report.passed)
        failed = set(c.name for c in report.failed())
        self.assertTrue(set(['jet_generator', 'initial_form', 'local_membership']) <= failed)
        self.assertTrue(report.check('order').passed)

    def test_wrong_ideal(self):
        w = flat_witness_char0(cusp(), 1, 2)
        self.assertFalse(verify_witness(w, node()).passed)
        report = verify_witness(w, ideal(['x - 1']))
        self.assertEqual([c.name for c in report.failed()], ['ideal'])

    def test_small_bound(self):
        w = flat_witness_char0(cusp(), 1, 2)
        report = verify_witness(w, cusp(), D=2)
        self.assertEqual([c.name for c in report.failed()], ['local_membership'])

    def test_larger_bound(self):
        w = flat_witness_char0(cusp(), 0, 1)
        report = self.assertVerified(w, cusp(), D=5)
        self.assertEqual(report.bound, 5)

    def test_tampered_fiber_jump(self):
        I = cusp(F5)
        w = flat_witness_charp(I, 2, 3, reduced=True)
        w.fiber_dim += 1
        report = verify_witness(w, I)
        self.assertEqual([c.name for c in report.failed()], ['fiber_dimension'])
        self.assertTrue(report.bound is None)

    def test_missing_certificate(self):
        I = cusp(F5)
        w = flat_witness_charp(I, 1, 4, reduced=True)
        w.exponent_data = None
        report = verify_witness(w, I)
        self.assertEqual([c.name for c in report.failed()], ['certificate_coefficient'])
        self.assertRaises(KeyError, report.check, 'fiber_free')

    def test_tampered_levels(self):
        I = cusp(F5)
        w = flat_witness_charp(I, 1, 2, reduced=True)
        w.m_prime = 1
        report = verify_witness(w, I)
        self.assertFalse(report.passed)
        self.assertEqual([c.name for c in report.failed()], ['levels'])

        w = flat_witness_char0(cusp(), 1, 2)
        w.m_prime = 1
        self.assertEqual([c.name for c in verify_witness(w, cusp()).failed()], ['levels'])
        w.m, w.m_prime = None, 2
        self.assertEqual([c.name for c in verify_witness(w, cusp()).failed()], ['levels'])

    def test_tampered_source(self):
        w = flat_witness_char0(cusp(), 1, 2)
        w.source_generator, w.level_used = '0', None
        report = verify_witness(w, cusp())
        self.assertEqual([c.name for c in report.failed()], ['jet_generator'])

    def test_frobenius_jet_generator(self):
        for p in (2, 3):
            I = frobenius_line(p)
            for q in (1, 2):
                for r in range(1, p):
                    F = var(q, 1, I.field) ** p
                    self.assertEqual(expand_in_t(I.generators[0], p * q)[p * q], F)
                    w = FlatnessWitness(WITNESS_ELEMENT, I.field, 1, p * q, p * q + r, p,
                                        F=F, source_generator=0, level_used=p * q)
                    report = verify_witness(w, I)
                    self.assertFalse(report.passed)
                    failed = set(c.name for c in report.failed())
                    self.assertTrue(set(['jet_generator', 'initial_form']) <= failed, str(failed))
                    self.assertTrue(report.check('order').passed)
                    self.assertTrue(report.check('maximal_ideal').passed)


class TestTangentSpace(JetTestCase):
    def test_corpus(self):
        expected = [
            (cusp(), (2, 2, 1), True),
            (node(), (2, 2, 1), True),
            (whitney_umbrella(), (3, 3, 2), True),
            (affine_space(1), (1, 1, 1), False),
            (affine_space(2), (2, 2, 2), False),
            (smooth_conic(), (1, 1, 1), False),
            (unit_circle_at_one(), (1, 1, 1), False),
        ]
        for I, dims, singular in expected:
            report = tangent_space_report(I)
            self.assertEqual((report.fiber_dim, report.embdim, report.dim_at_origin), dims, str(I))
            self.assertEqual(report.singular, singular)

    def test_fiber_is_free_at_singular_points(self):
        self.assertTrue(tangent_space_report(cusp()).fiber.is_free)
        self.assertFalse(tangent_space_report(smooth_conic()).fiber.is_free)


class TestSweep(JetTestCase):
    def test_pairs(self):
        self.assertEqual(flatness_pairs(QQ, 2), [(0, 1), (0, 2), (1, 2)])
        self.assertEqual(flatness_pairs(F5, 3), [(1, 2), (1, 3), (2, 3)])
        self.assertEqual(flatness_pairs(QQ, 0), [])

    def test_char0(self):
        entries = sweep_flatness(cusp(), max_level=3, num_threads=2)
        self.assertEqual([(e.m, e.m_prime) for e in entries], flatness_pairs(QQ, 3))
        for e in entries:
            self.assertTrue(e.not_flat)
            self.assertTrue(e.error is None)

    def test_char_p(self):
        entries = sweep_flatness(node(F5), max_level=4, reduced=True, num_threads=3)
        self.assertEqual(len(entries), 6)
        for e in entries:
            self.assertTrue(e.not_flat, '({0}, {1})'.format(e.m, e.m_prime))
        kinds = dict(((e.m, e.m_prime), e.witness.kind) for e in entries)
        self.assertEqual(kinds[(1, 4)], WITNESS_ELEMENT)
        self.assertEqual(kinds[(2, 4)], FIBER_JUMP)

    def test_smooth(self):
        entries = sweep_flatness(smooth_conic(), max_level=2, num_threads=1)
        self.assertEqual(len(entries), 3)
        for e in entries:
            self.assertFalse(e.not_flat)
            self.assertTrue(isinstance(e.error, SmoothOrigin))

    def test_decoy(self):
        entries = sweep_flatness(frobenius_line(3), max_level=5)
        by_pair = dict(((e.m, e.m_prime), e) for e in entries)
        self.assertTrue(isinstance(by_pair[(3, 4)].error, NoWitnessFound))
        self.assertTrue(isinstance(by_pair[(3, 5)].error, NoWitnessFound))


if __name__ == '__main__':
    unittest.main()
