import io
import json
import math
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from mockito import unstub, when

from OptimalKernelLibrary import cli
from OptimalKernelLibrary.cli import (EXIT_DATA, EXIT_OK, EXIT_USAGE,
                                      EXIT_VERIFICATION, main, read_config)
from OptimalKernelLibrary.errors import DataError, UsageError


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        rc = main(list(argv))
    return rc, stdout.getvalue(), stderr.getvalue()


def data_rows(tsv):
    lines = [line for line in tsv.splitlines() if not line.startswith('#')]
    return lines[0], lines[1:]


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write(self, name, content):
        path = os.path.join(self.directory, name)
        with open(path, 'w', encoding='utf-8') as output:
            output.write(content)
        return path


class KernelCommandTests(CliTestCase):

    def test_json_descriptor(self):
        rc, out, _ = run('kernel', '--m', '1', '--format', 'json')
        self.assertEqual(rc, EXIT_OK)
        descriptor = json.loads(out)
        self.assertAlmostEqual(descriptor['theta'], math.sqrt(5), places=14)
        self.assertIn('v2_printed', descriptor)

    def test_table(self):
        rc, out, _ = run('kernel', '--m', '2', '--format', 'tsv',
                         '--count', '5')
        self.assertEqual(rc, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'y\tK(y)')
        self.assertEqual(len(lines), 6)

    def test_both_formats_by_default(self):
        rc, out, _ = run('kernel', '--beta', '3/2', '--count', '3')
        self.assertEqual(rc, EXIT_OK)
        table, _, descriptor = out.partition('\n\n')
        self.assertEqual(len(table.splitlines()), 4)
        self.assertEqual(json.loads(descriptor)['type'], 'frac')

    def test_derivative_kernel_reports_qp_alternative(self):
        rc, out, _ = run('kernel', '--m', '1', '--r', '1', '--format',
                         'json')
        self.assertEqual(rc, EXIT_OK)
        descriptor = json.loads(out)
        self.assertEqual(descriptor['r'], 1)
        self.assertIn('qp_alternative', descriptor)
        self.assertIn('printed_theta', descriptor)

    def test_derivative_alternative_reuses_the_free_theta_solution(self):
        when(cli).higher_order_kernel(1, 1).thenRaise(
            AssertionError('free theta solved twice'))
        try:
            rc, out, _ = run('kernel', '--m', '1', '--r', '1', '--format',
                             'json')
        finally:
            unstub()
        self.assertEqual(rc, EXIT_OK)
        residuals = json.loads(out)['qp_alternative']['moment_residuals']
        self.assertTrue(residuals)

    def test_output_file(self):
        path = os.path.join(self.directory, 'kernel.json')
        rc, out, _ = run('kernel', '--m', '1', '--format', 'json',
                         '--output', path)
        self.assertEqual((rc, out), (EXIT_OK, ''))
        with open(path, encoding='utf-8') as source:
            self.assertEqual(json.load(source)['m'], 1)

    def test_usage_errors(self):
        for argv in ([], ['kernel'], ['kernel', '--m', '1', '--beta', '2'],
                     ['kernel', '--beta', '2', '--r', '1'],
                     ['kernel', '--m', 'one'], ['kernel', '--bogus'],
                     ['kernel', '--m', '1', '--format', 'xml'],
                     ['kernel', '--m', '0']):
            rc, _, err = run(*argv)
            self.assertEqual(rc, EXIT_USAGE, argv)
            self.assertTrue(err.startswith('[ ERROR ] '), argv)

    def test_order_error_message(self):
        _, _, err = run('kernel')
        self.assertEqual(err, '[ ERROR ] Exactly one of --m and --beta must '
                              'be given.\n')


class VerifyCommandTests(CliTestCase):

    def test_closed_form_passes(self):
        rc, out, _ = run('verify', '--m', '1', '--trials', '20')
        self.assertEqual(rc, EXIT_OK)
        report = json.loads(out)
        self.assertTrue(report['passed'])
        self.assertEqual(report['subject'], 'poly kernel m=1')

    def test_frac_kernel_passes(self):
        rc, out, _ = run('verify', '--beta', '1.5', '--trials', '20')
        self.assertEqual(rc, EXIT_OK)
        self.assertTrue(json.loads(out)['passed'])

    def test_printed_support_fails(self):
        rc, out, _ = run('verify', '--m', '2', '--paper-literal-theta',
                         '--trials', '20')
        self.assertEqual(rc, EXIT_VERIFICATION)
        self.assertFalse(json.loads(out)['passed'])


class EstimateCommandTests(CliTestCase):

    def setUp(self):
        CliTestCase.setUp(self)
        self.data = self.write('data.csv', 'x\n0.5\n1\n1.5\n2.5\n')

    def test_fixed_bandwidth_on_grid(self):
        rc, out, _ = run('estimate', '--input', self.data, '--m', '1',
                         '--h', '0.5', '--grid=-4:4:81')
        self.assertEqual(rc, EXIT_OK)
        header, rows = data_rows(out)
        self.assertEqual(header, 'x\tfhat')
        self.assertEqual(len(rows), 81)
        self.assertEqual(rows[0], '-4\t0')
        self.assertIn('# h: 0.5', out)

    def test_default_grid_covers_data_and_support(self):
        rc, out, _ = run('estimate', '--input', self.data, '--column', 'x',
                         '--m', '1', '--h', '0.5', '--grid-count', '11')
        self.assertEqual(rc, EXIT_OK)
        _, rows = data_rows(out)
        self.assertEqual(len(rows), 11)
        first = float(rows[0].split('\t')[0])
        self.assertAlmostEqual(first, 0.5 - 0.5 * math.sqrt(5), places=12)

    def test_json_output_with_rule(self):
        rc, out, _ = run('estimate', '--input', self.data, '--m', '1',
                         '--h-rule', 'power:1,0.2', '--grid=-2:4:13',
                         '--format', 'json')
        self.assertEqual(rc, EXIT_OK)
        estimate = json.loads(out)
        self.assertAlmostEqual(estimate['meta']['h'], 4 ** -0.2, places=14)

    def test_recursive(self):
        rc, out, _ = run('estimate', '--input', self.data, '--m', '1',
                         '--h-rule', 'power:1,0.2', '--recursive',
                         '--format', 'json')
        self.assertEqual(rc, EXIT_OK)
        self.assertTrue(json.loads(out)['meta']['recursive'])

    def test_derivative(self):
        rc, out, _ = run('estimate', '--input', self.data, '--m', '1',
                         '--h', '0.5', '--deriv', '1', '--format', 'json')
        self.assertEqual(rc, EXIT_OK)
        self.assertEqual(json.loads(out)['meta']['r'], 1)

    def test_log_and_interval_transforms(self):
        rc, out, _ = run('estimate', '--input', self.data, '--m', '1',
                         '--h', '0.5', '--log-transform', '--format', 'json')
        self.assertEqual(rc, EXIT_OK)
        estimate = json.loads(out)
        self.assertEqual(estimate['meta']['transform'], 'log')
        self.assertGreater(min(estimate['grid']), 0)
        rc, out, _ = run('estimate', '--input', self.data, '--m', '1',
                         '--h', '0.5', '--interval', '0:3', '--format',
                         'json')
        self.assertEqual(rc, EXIT_OK)
        grid = json.loads(out)['grid']
        self.assertGreater(min(grid), 0)
        self.assertLess(max(grid), 3)

    def test_usage_errors(self):
        for extra in (['--h', '0.5', '--h-rule', 'fixed:0.5'], [],
                      ['--h', '0.5', '--deriv', '1', '--log-transform'],
                      ['--h', '0.5', '--recursive', '--interval', '0:3'],
                      ['--h-rule', 'power:1,0.5', '--deriv', '1'],
                      ['--h', '0']):
            rc, _, _ = run('estimate', '--input', self.data, '--m', '1',
                           *extra)
            self.assertEqual(rc, EXIT_USAGE, extra)
        rc, _, _ = run('estimate', '--m', '1', '--h', '0.5')
        self.assertEqual(rc, EXIT_USAGE)
        rc, _, _ = run('estimate', '--input', self.data, '--beta', '1.5',
                       '--h', '0.5', '--deriv', '1')
        self.assertEqual(rc, EXIT_USAGE)

    def test_data_errors(self):
        missing = os.path.join(self.directory, 'missing.csv')
        rc, _, err = run('estimate', '--input', missing, '--m', '1', '--h',
                         '0.5')
        self.assertEqual(rc, EXIT_DATA)
        self.assertIn('does not exist', err)
        negative = self.write('negative.csv', '-1\n2\n')
        rc, _, _ = run('estimate', '--input', negative, '--m', '1', '--h',
                       '0.5', '--log-transform')
        self.assertEqual(rc, EXIT_DATA)


class MiseCommandTests(CliTestCase):

    def test_table(self):
        rc, out, _ = run('mise', '--m', '1', '--form', 'legendre', '--target',
                         'normal', '--seed', '7', '--n', '256,1024',
                         '--replications', '2')
        self.assertEqual(rc, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], 'n\tmise')
        self.assertEqual([line.split('\t')[0] for line in lines[1:]],
                         ['256', '1024', 'slope'])

    def test_deterministic(self):
        argv = ('mise', '--beta', '1.5', '--target', 'mixture', '--seed',
                '3', '--n', '128,512', '--replications', '2')
        self.assertEqual(run(*argv), run(*(argv + ('--workers', '2'))))

    def test_required_options(self):
        rc, _, err = run('mise', '--m', '1', '--target', 'normal')
        self.assertEqual(rc, EXIT_USAGE)
        self.assertIn('--seed is required', err)
        rc, _, err = run('mise', '--m', '1', '--seed', '1')
        self.assertEqual(rc, EXIT_USAGE)
        rc, _, _ = run('mise', '--m', '1', '--seed', '1', '--target',
                       'cauchy', '--n', '128')
        self.assertEqual(rc, EXIT_USAGE)


class ConfigTests(CliTestCase):

    def test_read_config(self):
        path = self.write('run.conf', '# verification\n'
                                      'm = 2\n'
                                      '--paper-literal-theta = yes\n\n'
                                      'trials=10\n')
        self.assertEqual(read_config(path), {'m': '2',
                                             'paper_literal_theta': 'yes',
                                             'trials': '10'})

    def test_read_config_errors(self):
        with self.assertRaises(DataError):
            read_config(os.path.join(self.directory, 'missing.conf'))
        with self.assertRaisesRegex(UsageError, 'line 2'):
            read_config(self.write('bad.conf', 'm = 1\nbogus\n'))

    def test_config_supplies_defaults(self):
        path = self.write('run.conf', 'm = 1\ntrials = 10\n')
        rc, out, _ = run('--config', path, 'verify')
        self.assertEqual(rc, EXIT_OK)
        self.assertEqual(json.loads(out)['subject'], 'poly kernel m=1')

    def test_flags_override_config(self):
        path = self.write('run.conf', 'm = 3\ntrials = 10\n')
        rc, out, _ = run('--config', path, 'verify', '--m', '1')
        self.assertEqual(rc, EXIT_OK)
        self.assertEqual(json.loads(out)['subject'], 'poly kernel m=1')

    def test_boolean_config_value(self):
        path = self.write('run.conf', 'm = 2\ntrials = 10\n'
                                      'paper-literal-theta = true\n')
        rc, _, _ = run('--config', path, 'verify')
        self.assertEqual(rc, EXIT_VERIFICATION)

    def test_config_errors(self):
        rc, _, err = run('--config', self.write('run.conf', 'foo = 1\n'),
                         'verify', '--m', '1')
        self.assertEqual(rc, EXIT_USAGE)
        self.assertIn('Unknown config key(s): foo.', err)
        rc, _, _ = run('--config', os.path.join(self.directory, 'no.conf'),
                       'verify', '--m', '1')
        self.assertEqual(rc, EXIT_DATA)
