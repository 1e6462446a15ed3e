# -*- coding: utf-8 -*-

import os
import json
import shutil
import tempfile
import unittest

import six
from mock import patch

from jetforge.cli import main, EXIT_OK, EXIT_NEGATIVE, EXIT_INCONCLUSIVE, EXIT_ERROR
from jetforge import json_utils

from unittests.common import JetTestCase


CUSP = 'field Q\nvars x y\ngen x^2 - y^3\n'
NODE = 'vars x y\ngen x*y\n'
CONIC = 'vars x y\ngen y - x^2\n'
CIRCLE = 'vars x y\ngen x^2 + y^2 - 1\n'
CUSP_F5 = 'field Fp 5\nvars x y\ngen x^2 - y^3\nreduced\n'
DOUBLE_POINT_F2 = 'field Fp 2\nvars x\ngen x^2\n'
FROBENIUS_F3 = 'field Fp 3\nvars x\ngen x^3\n'
BAD_GEN = 'vars x y\ngen x^2 + z\n'


class TestCli(JetTestCase):
    def setUp(self):
        super(TestCli, self).setUp()
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def problem(self, text, name='problem.txt'):
        path = os.path.join(self.tmpdir, name)
        with open(path, 'w') as f:
            f.write(text)
        return path

    def run_cli(self, *argv):
        with patch('sys.stdout', new_callable=six.StringIO) as out:
            with patch('sys.stderr', new_callable=six.StringIO) as err:
                code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_jetify(self):
        code, out, _ = self.run_cli('jetify', self.problem(DOUBLE_POINT_F2), '5')
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[1], 'generator 1: x^2')
        self.assertEqual(lines[2:], ['  F[0] (weight 0) = x^2',
                                     '  F[1] = 0',
                                     '  F[2] (weight 2) = x[1][1]^2',
                                     '  F[3] = 0',
                                     '  F[4] (weight 4) = x[2][1]^2',
                                     '  F[5] = 0'])

    def test_jetify_frobenius_presentation(self):
        for p in (2, 3, 5):
            path = self.problem('field Fp {0}\nvars x\ngen x^{0}\n'.format(p))
            for q in (1, 2):
                for r in range(1, p):
                    m = p * q + r
                    code, out, _ = self.run_cli('jetify', path, str(m))
                    self.assertEqual(code, EXIT_OK)
                    nonzero = [line for line in out.splitlines() if '(weight' in line]
                    expected = ['  F[0] (weight 0) = x^{0}'.format(p)]
                    expected += ['  F[{0}] (weight {0}) = x[{1}][1]^{2}'.format(p * i, i, p) for i in range(1, q + 1)]
                    self.assertEqual(nonzero, expected)
                    zero = [line for line in out.splitlines() if line.endswith('] = 0')]
                    self.assertEqual(len(zero), m + 1 - (q + 1))

    def test_jetify_zero_ideal(self):
        code, out, _ = self.run_cli('jetify', self.problem('vars x y\n'), '2')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines()[-1], 'zero ideal: X_2 is the affine space A^6')

    def test_jetify_json(self):
        code, out, _ = self.run_cli('jetify', self.problem(CUSP), '1', '--json')
        self.assertEqual(code, EXIT_OK)
        obj = json.loads(out)
        self.assertEqual(obj['field'], 'Q')
        self.assertEqual(obj['m'], 1)
        self.assertEqual(len(obj['jet_generators']), 2)

        self.assertEqual(json_utils.dumps(json_utils.loads(out)) + '\n', out)
        record = json_utils.parse_jet_ideal(out)
        self.assertEqual(len(record.entries), 2)
        self.assertEqual(record.names, ['x', 'y'])
        self.assertEqual(json_utils.dumps(json_utils.to_jet_ideal_record(record)) + '\n', out)

    def test_smooth(self):
        code, out, _ = self.run_cli('smooth', self.problem(CUSP), '1')
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertEqual(out.splitlines()[-1], 'Singular')

        code, out, _ = self.run_cli('smooth', self.problem(CONIC), '2')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines()[-1], 'Smooth')

        code, out, _ = self.run_cli('smooth', self.problem(CUSP), '0')
        self.assertEqual(code, EXIT_NEGATIVE)

        code, out, _ = self.run_cli('smooth', self.problem('vars x y\ngen x - y^2\n'), '3')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith('embedding dimension at the origin: 1\n'))

        code, out, _ = self.run_cli('smooth', self.problem(FROBENIUS_F3), '1')
        self.assertEqual(code, EXIT_NEGATIVE)

        code, out, _ = self.run_cli('smooth', self.problem(NODE), '2', '--json')
        obj = json.loads(out)
        self.assertEqual(obj['verdict'], 'Singular')
        self.assertEqual(obj['embdim'], 2)
        self.assertTrue(obj['embedding_exact'])

    def test_translate(self):
        path = self.problem(CIRCLE)
        code, out, _ = self.run_cli('smooth', path, '1', '--translate', '1,0')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue('(presentation kept)' in out.splitlines()[0])

        code, _, err = self.run_cli('smooth', path, '1')
        self.assertEqual(code, EXIT_ERROR)
        self.assertTrue(err.startswith('error: '))
        self.assertTrue('NotOnScheme' in err)

    def test_flatness(self):
        code, out, _ = self.run_cli('flatness', self.problem(CUSP), '1', '2')
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertEqual(out.splitlines()[-1], 'NOT FLAT')

        code, out, _ = self.run_cli('flatness', self.problem(CONIC), '1', '2')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith('NO WITNESS FOUND: '))

        code, out, _ = self.run_cli('flatness', self.problem(FROBENIUS_F3), '3', '4')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith('NO WITNESS FOUND: '))

        code, out, _ = self.run_cli('flatness', self.problem('vars x\n'), '0', '3')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith('NO WITNESS FOUND: '))

    def test_flatness_char_p(self):
        path = self.problem(CUSP_F5)
        code, out, _ = self.run_cli('flatness', path, '1', '2')
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertTrue(out.startswith('witness: fiber jump over 0_1, fiber = A^2'))

        code, out, _ = self.run_cli('flatness', path, '1', '4', '--json')
        self.assertEqual(code, EXIT_NEGATIVE)
        obj = json.loads(out)
        self.assertEqual(obj['verdict'], 'NOT FLAT')
        self.assertEqual(obj['witness']['kind'], 'WitnessElement')
        self.assertEqual(obj['witness']['exponent_data']['s'], 1)
        self.assertTrue(obj['verification']['passed'])

        code, _, err = self.run_cli('flatness', path, '0', '2')
        self.assertEqual(code, EXIT_ERROR)
        self.assertTrue('WitnessRefused' in err)

    def test_flatness_bad_pair(self):
        code, out, _ = self.run_cli('flatness', self.problem(CUSP), '2', '1', '--json')
        self.assertEqual(code, EXIT_ERROR)
        self.assertEqual(json.loads(out)['error']['code'], 'InvalidArgument')

    def test_witness_out_and_verify(self):
        cusp = self.problem(CUSP)
        witness = os.path.join(self.tmpdir, 'witness.json')
        code, _, _ = self.run_cli('flatness', cusp, '1', '3', '--witness-out', witness)
        self.assertEqual(code, EXIT_NEGATIVE)

        code, out, _ = self.run_cli('verify', cusp, '--witness', witness)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines()[-1], 'PASSED')

        code, out, _ = self.run_cli('verify', self.problem(NODE, 'node.txt'), '--witness', witness)
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertEqual(out.splitlines()[-1], 'FAILED')

        code, out, _ = self.run_cli('verify', cusp, '--witness', witness, '--verify-bound', '2', '--json')
        self.assertEqual(code, EXIT_NEGATIVE)
        obj = json.loads(out)
        self.assertEqual(obj['bound'], 2)
        self.assertEqual([c['name'] for c in obj['checks'] if not c['passed']], ['local_membership'])

    def test_tangent(self):
        code, out, _ = self.run_cli('tangent', self.problem(CUSP))
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[:3], ['dim pi_1^-1(0) = 2', 'embdim(X,0) = 2', 'dim(X,0) = 1'])
        self.assertTrue(lines[3].startswith('  note: dim(X,0) is the global dimension'))
        self.assertEqual(lines[4:], ['singular'])

        code, out, _ = self.run_cli('tangent', self.problem(CONIC), '--json')
        self.assertEqual(json.loads(out), {'fiber_dim': 1, 'embdim': 1, 'dim_at_origin': 1, 'singular': False})

    def test_lower_dimensional_component(self):
        path = self.problem('vars x y z\ngen y*(z - 1)\ngen (x^2 - z^3)*(z - 1)\n')
        code, out, _ = self.run_cli('smooth', path, '0')
        self.assertEqual(code, EXIT_INCONCLUSIVE)
        self.assertEqual(out.splitlines()[-1], 'Inconclusive')

        code, out, _ = self.run_cli('tangent', path)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(any('global dimension' in line for line in out.splitlines()))

    def test_fiber(self):
        code, out, _ = self.run_cli('fiber', self.problem(CUSP), '0', '1')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue('fiber ideal is zero: fiber = A^2' in out.splitlines())
        self.assertEqual(out.splitlines()[-1], 'dim X_1 = 2')

        code, out, _ = self.run_cli('fiber', self.problem(CONIC), '0', '1', '--json')
        obj = json.loads(out)
        self.assertFalse(obj['free'])
        self.assertEqual(obj['dimension'], 1)

    def test_stdin(self):
        with patch('sys.stdin', six.StringIO(CUSP)):
            code, out, _ = self.run_cli('tangent', '-')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines()[-1], 'singular')

    def test_parse_error(self):
        path = self.problem(BAD_GEN)
        code, _, err = self.run_cli('smooth', path, '1')
        self.assertEqual(code, EXIT_ERROR)
        self.assertTrue('UnknownVariable' in err)

        code, out, _ = self.run_cli('smooth', path, '1', '--json')
        self.assertEqual(code, EXIT_ERROR)
        error = json.loads(out)['error']
        self.assertEqual(error['code'], 'UnknownVariable')
        self.assertEqual(error['details']['line'], '2')
        self.assertEqual(error['details']['column'], '11')

    def test_missing_file(self):
        code, _, err = self.run_cli('tangent', os.path.join(self.tmpdir, 'nothing.txt'))
        self.assertEqual(code, EXIT_ERROR)
        self.assertTrue(err.startswith('error: '))

    def test_usage_error(self):
        with patch('sys.stderr', new_callable=six.StringIO):
            self.assertRaises(SystemExit, main, ['nosuchcommand', 'x'])
            self.assertRaises(SystemExit, main, ['smooth'])

    def test_sweep(self):
        code, out, _ = self.run_cli('sweep', self.problem(CUSP), '--max-level', '2', '--threads', '2')
        self.assertEqual(code, EXIT_NEGATIVE)
        lines = out.splitlines()
        self.assertEqual(len(lines), 3)
        for line in lines:
            self.assertTrue('NOT FLAT' in line)

        code, out, _ = self.run_cli('sweep', self.problem(CONIC), '--max-level', '2', '--json')
        self.assertEqual(code, EXIT_OK)
        entries = json.loads(out)
        self.assertEqual([(e['m'], e['m_prime']) for e in entries], [(0, 1), (0, 2), (1, 2)])
        self.assertTrue(all(e['verdict'] == 'NO WITNESS FOUND' for e in entries))


if __name__ == '__main__':
    unittest.main()
