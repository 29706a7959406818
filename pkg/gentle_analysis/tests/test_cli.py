import unittest, os, io, shutil, tempfile
from unittest import mock

from gentle_analysis import cli, SurfaceData
from gentle_analysis.misctools.utils import InvariantViolation


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class CommandLineTestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.dirs = {}
        for name, args in (('p2_0', ['--name', 'p2', '--cut', '0']),
                           ('p2_2', ['--name', 'p2', '--cut', '2']),
                           ('bm0', ['--name', 'bm0', '--s', '3', '--r', '0'])):
            out = os.path.join(self.tmp, name)
            code, _, err = run(['family'] + args + ['--out', out])
            self.assertEqual(code, 0, err)
            self.dirs[name] = out

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def path(self, fixture, key):
        return os.path.join(self.dirs[fixture], SurfaceData.FILE_NAMES[key])

    def algebra_args(self, fixture, suffix=''):
        return ['--surface' + suffix, self.path(fixture, 'surface'),
                '--cut' + suffix, self.path(fixture, 'cut'),
                '--a' + suffix, self.path(fixture, 'a'),
                '--b' + suffix, self.path(fixture, 'b')]

    def test_family_files(self):
        for key in SurfaceData.FILE_NAMES:
            self.assertTrue(os.path.isfile(self.path('p2_2', key)))
        code, out, _ = run(['family', '--name', 'p2', '--cut', '1', '--out',
                            os.path.join(self.tmp, 'again')])
        self.assertEqual(code, 0)
        self.assertEqual(len(out.splitlines()), 5)
        self.assertTrue(out.startswith('wrote='))

    def test_validate(self):
        code, out, _ = run(['validate', '--surface', self.path('p2_0', 'surface')])
        self.assertEqual(code, 0)
        self.assertEqual(out, 'valid genus=1 boundaries=1 marked_points=2 punctures=0 '
                              'arcs=5 triangles=4 internal=3\n')

    def test_quiver(self):
        code, out, _ = run(['quiver', '--surface', self.path('p2_0', 'surface')])
        lines = out.splitlines()
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], 'vertices=1,2,3,4,5')
        self.assertEqual(lines[1], 'arrow=0 1->2 triangle=0 slot=0')
        self.assertEqual(lines[-1], 'internal=6,7,8')

    def test_invariant(self):
        code, out, _ = run(['invariant'] + self.algebra_args('p2_2'))
        self.assertEqual((code, out), (0, 'gcd=2\n'))
        code, out, _ = run(['invariant'] + self.algebra_args('p2_2') + ['--format', 'machine'])
        self.assertEqual(code, 0)
        self.assertEqual(SurfaceData.parse_report(out), {'gcd': 2, 'degrees': [-2, 2]})

    def test_degree(self):
        args = ['degree', '--surface', self.path('p2_2', 'surface'), '--cut', self.path('p2_2', 'cut')]
        self.assertEqual(run(args + ['--curve', self.path('p2_2', 'c')])[:2], (0, 'degree=2\n'))
        self.assertEqual(run(args + ['--curve', self.path('p2_2', 'a')])[:2], (0, 'degree=-2\n'))

    def test_ag(self):
        args = ['ag', '--surface', self.path('p2_0', 'surface'), '--cut', self.path('p2_0', 'cut')]
        self.assertEqual(run(args)[:2], (0, 'ag=(4,6):1 formula=(4,6)\n'))
        args = ['ag', '--surface', self.path('bm0', 'surface'), '--cut', self.path('bm0', 'cut')]
        self.assertEqual(run(args)[:2], (0, 'ag=(3,5):1 formula=(3,5)\n'))

    def test_equiv(self):
        same = ['equiv'] + self.algebra_args('p2_2') + self.algebra_args('p2_2', '2')
        self.assertEqual(run(same)[:2], (0, 'equivalent=true\n'))
        differ = ['equiv'] + self.algebra_args('p2_0') + self.algebra_args('p2_2', '2')
        self.assertEqual(run(differ)[:2], (0, 'equivalent=false\n'))
        self.assertEqual(run(differ + ['--advisory'])[:2],
                         (0, 'ag_equal=true necessary_condition_only=true\n'))
        mixed = ['equiv'] + self.algebra_args('bm0') + self.algebra_args('p2_0', '2')
        self.assertEqual(run(mixed)[:2], (0, 'equivalent=false\n'))

    def test_cuts_report(self):
        args = ['cuts', '--enumerate', self.path('p2_0', 'surface'),
                '--a', self.path('p2_0', 'a'), '--b', self.path('p2_0', 'b'), '--report']
        code, out, err = run(args)
        self.assertEqual(code, 0, err)
        lines = out.splitlines()
        self.assertEqual(len(lines), 28)
        self.assertEqual(lines[-1], 'attained=0,1,2')
        self.assertIn('cut=100 gcd=2 ag=(4,6):1', lines)
        self.assertIn('cut=122 gcd=0 ag=(4,6):1', lines)

    def test_cuts_listing(self):
        code, out, _ = run(['cuts', '--enumerate', self.path('p2_0', 'surface')])
        lines = out.splitlines()
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], 'cut=000')
        self.assertEqual(lines[-1], 'count=27')
        code, _, err = run(['cuts', '--enumerate', self.path('p2_0', 'surface'), '--report'])
        self.assertEqual(code, 1)
        self.assertTrue(err.startswith('error: '))

    def test_machine_reports_are_deterministic(self):
        args = ['cuts', '--enumerate', self.path('p2_0', 'surface'),
                '--a', self.path('p2_0', 'a'), '--b', self.path('p2_0', 'b'), '--report',
                '--format', 'machine']
        first, second = run(args), run(args + ['--threads', '2'])
        self.assertEqual(first[1], second[1])
        report = SurfaceData.parse_report(first[1])
        self.assertEqual(report['attained'], [0, 1, 2])
        self.assertEqual(len(report['cuts']), 27)
        self.assertEqual(report['cuts'][0]['ag'], [[4, 6, 1]])

    def test_oracle(self):
        code, out, _ = run(['oracle', '--normal-form', '2', '1'])
        self.assertEqual((code, out), (0, 'word=2313\n'))
        code, out, err = run(['oracle', '--word', '3121321312', '--move', 'M60', '--position', '2',
                              '--samples', '50'])
        self.assertEqual(code, 0, err)
        self.assertEqual(out.splitlines()[1], 'after=32 preserved=50/50')
        code, _, err = run(['oracle', '--word', '3121321312', '--move', 'M33', '--position', '0'])
        self.assertEqual(code, 1)
        self.assertIn('pattern mismatch', err)

    def test_help_goes_to_stdout(self):
        code, out, err = run(['--help'])
        self.assertEqual((code, err), (0, ''))
        self.assertTrue(out.startswith('usage: gentle-analysis'))
        code, out, _ = run(['oracle', '--help'])
        self.assertEqual(code, 0)
        self.assertIn('--normal-form', out)

    def test_package_exports(self):
        import gentle_analysis
        self.assertEqual(gentle_analysis.__all__, ['triangulation', 'misctools', 'modeling'])

    def test_bad_input(self):
        code, out, err = run(['validate', '--surface', os.path.join(self.tmp, 'missing.tri')])
        self.assertEqual((code, out), (1, ''))
        self.assertTrue(err.startswith('error: cannot read'))
        self.assertEqual(run(['frobnicate'])[0], 1)
        self.assertEqual(run(['validate', '--surface', self.path('p2_0', 'surface'),
                              '--format', 'xml'])[0], 1)
        broken = os.path.join(self.tmp, 'broken.tri')
        with open(broken, 'w') as f:
            f.write('{"edges": [], "triangles": [], "extra": 1}')
        code, _, err = run(['validate', '--surface', broken])
        self.assertEqual(code, 1)
        self.assertIn('unknown field extra', err)
        code, _, err = run(['invariant', '--surface', self.path('p2_0', 'surface'),
                            '--cut', self.path('p2_0', 'cut'), '--a', self.path('p2_0', 'a'),
                            '--b', self.path('p2_0', 'a')])
        self.assertEqual(code, 1)
        self.assertIn('not a basis', err)

    def test_invariant_violation_exit_code(self):
        with mock.patch('gentle_analysis.cli.cmd_validate', side_effect=InvariantViolation('boom')):
            code, _, err = run(['validate', '--surface', self.path('p2_0', 'surface')])
        self.assertEqual(code, 2)
        self.assertEqual(err, 'error: invariant violation: boom\n')

    def test_verbose_logs_to_stderr(self):
        code, out, err = run(['validate', '--surface', self.path('p2_0', 'surface'), '--verbose'])
        self.assertEqual(code, 0)
        self.assertIn('[DEBUG]: ', err)
        self.assertNotIn('[DEBUG]', out)


if __name__ == '__main__':
    unittest.main()
