import unittest
from collections import Counter

from gentle_analysis.misctools.utils import SurfaceError
from gentle_analysis.misctools.family_definitions import (FAMILIES, p2_example, nested_example,
                                                          bm_lambda0_prime, bm_lambda0,
                                                          bm_presentation, family_fixture,
                                                          attained_values)
from gentle_analysis.misctools.homology import homology_of
from gentle_analysis.triangulation.grading import (cut_algebra, is_gentle, cycle_rank,
                                                   find_isomorphism)
from gentle_analysis.triangulation.curves import (classify_triangles, degree, UNCONTRACTIBLE,
                                                  HOMOTOPIC_TO_BOUNDARY)
from gentle_analysis.modeling.invariants import gcd_invariant
from gentle_analysis.modeling.threads import ag_invariant

max_s = 9
max_s_isomorphism = max_s


def bm0_parameters(max_s=max_s):
    return [(s, r) for s in range(3, max_s + 1) for r in range(s // 2)]


def all_fixtures():
    fixtures = [p2_example(k) for k in range(3)] + [nested_example(k) for k in range(3)]
    fixtures += [bm_lambda0_prime(s) for s in range(2, max_s + 1)]
    fixtures += [bm_lambda0(s, r) for s, r in bm0_parameters()]
    return fixtures


class FixtureTestCase(unittest.TestCase):
    def setUp(self):
        self.fixtures = all_fixtures()

    def test_fixture_invariants(self):
        for fx in self.fixtures:
            fx.check()
            self.assertEqual(homology_of(fx.quiver).rank, 2)
            classes = classify_triangles(fx.surface)
            self.assertEqual(sum(1 for c in classes.values() if c == UNCONTRACTIBLE), 2)
            self.assertEqual(degree(fx.c, fx.quiver, fx.degree), 2, '%s: d(c)' % fx)

    def test_ag_degenerate(self):
        for fx in self.fixtures:
            ag = ag_invariant(cut_algebra(fx.quiver, fx.degree))
            self.assertEqual(sum(ag.values()), 1, '%s: %s' % (fx, dict(ag)))

    def test_marked_points(self):
        self.assertEqual(p2_example(0).marked_points, 2)
        self.assertEqual(nested_example(0).marked_points, 4)
        self.assertEqual(bm_lambda0_prime(4).marked_points, 3)
        self.assertEqual(bm_lambda0(7, 2).marked_points, 5)

    def test_nested_boundary_region(self):
        classes = classify_triangles(nested_example(0).surface)
        self.assertEqual(classes[3], HOMOTOPIC_TO_BOUNDARY)

    def test_bound(self):
        for fx in self.fixtures:
            g = gcd_invariant(fx.surface, fx.quiver, fx.degree, fx.a, fx.b)
            self.assertTrue(2 * g <= fx.marked_points + 2, '%s: gcd %d' % (fx, g))


class TwoCycleFamilyTestCase(unittest.TestCase):
    def test_lambda0_prime(self):
        for s in range(2, max_s + 1):
            fx = bm_lambda0_prime(s)
            self.assertEqual(fx.marked_points, s - 1)
            self.assertEqual(gcd_invariant(fx.surface, fx.quiver, fx.degree, fx.a, fx.b), 0)
            pres = cut_algebra(fx.quiver, fx.degree)
            self.assertEqual(len(pres.arrows), s + 3)
        fx = bm_lambda0_prime(4)
        self.assertEqual(degree(fx.a, fx.quiver, fx.degree), 0)
        self.assertEqual(degree(fx.b, fx.quiver, fx.degree), 0)

    def test_lambda0(self):
        for s, r in bm0_parameters():
            fx = bm_lambda0(s, r)
            self.assertEqual(fx.marked_points, s - 2)
            self.assertEqual(degree(fx.a, fx.quiver, fx.degree), -(r + 1), 'd(a) for %s' % ((s, r),))
            self.assertEqual(degree(fx.b, fx.quiver, fx.degree), 0, 'd(b) for %s' % ((s, r),))
            self.assertEqual(gcd_invariant(fx.surface, fx.quiver, fx.degree, fx.a, fx.b), r + 1)

    def test_pairwise_distinct(self):
        seen = {}
        for s, r in bm0_parameters(7):
            fx = bm_lambda0(s, r)
            seen.setdefault(fx.marked_points, Counter())[
                gcd_invariant(fx.surface, fx.quiver, fx.degree, fx.a, fx.b)] += 1
        for p, values in seen.items():
            self.assertTrue(all(k == 1 for k in values.values()), 'p=%d: %s' % (p, dict(values)))

    def test_cut_algebras_match_presentations(self):
        for s in range(2, max_s_isomorphism + 1):
            fx = bm_lambda0_prime(s)
            pres = cut_algebra(fx.quiver, fx.degree)
            self.assertIsNotNone(find_isomorphism(pres, bm_presentation('bm0prime', s)),
                                 'bm0prime s=%d' % s)
        for s, r in bm0_parameters(max_s_isomorphism):
            fx = bm_lambda0(s, r)
            pres = cut_algebra(fx.quiver, fx.degree)
            self.assertIsNotNone(find_isomorphism(pres, bm_presentation('bm0', s, r, modified=True)),
                                 'bm0 s=%d r=%d' % (s, r))

    def test_out_of_range(self):
        with self.assertRaises(SurfaceError):
            bm_lambda0_prime(1)
        with self.assertRaises(SurfaceError):
            bm_lambda0(2, 0)
        with self.assertRaises(SurfaceError):
            bm_lambda0(5, 2)
        with self.assertRaises(SurfaceError):
            p2_example(3)


class PresentationTestCase(unittest.TestCase):
    def test_displayed_quivers(self):
        pres = bm_presentation('bm0', 2, 0)
        self.assertEqual((len(pres.vertices), len(pres.arrows)), (3, 4))
        self.assertEqual(set(pres.label(a) for f, t in pres.relations for a in (f, t)),
                         {'alpha_1', 'alpha_2', 'beta', 'gamma'})
        self.assertTrue(pres.is_relation(2, 1))
        self.assertTrue(pres.is_relation(0, 3))
        prime = bm_presentation('bm0prime', 2)
        self.assertEqual((len(prime.vertices), len(prime.arrows), len(prime.relations)), (4, 5, 2))

    def test_gentle_rank_two(self):
        for s in range(1, 8):
            outputs = [bm_presentation('bm0prime', s)]
            outputs += [bm_presentation('bm0', s, r) for r in range(s)]
            outputs += [bm_presentation('bm0', s, r, modified=True) for r in range((s - 1) // 2 + 1)]
            for pres in outputs:
                self.assertTrue(is_gentle(pres), pres)
                self.assertEqual(cycle_rank(pres), 2)

    def test_errors(self):
        with self.assertRaises(SurfaceError):
            bm_presentation('bm0', 3, 3)
        with self.assertRaises(SurfaceError):
            bm_presentation('bm0prime', 3, 1)
        with self.assertRaises(SurfaceError):
            bm_presentation('bm1', 3)


class CoverageTestCase(unittest.TestCase):
    def test_attained(self):
        self.assertEqual(attained_values(1), {0, 1})
        self.assertEqual(attained_values(2), {0, 1, 2})
        self.assertEqual(attained_values(5), {0, 1, 2, 3})
        for p in range(1, 8):
            values = attained_values(p)
            self.assertTrue(set(range((p + 1) // 2 + 1)) <= values, 'p=%d: %s' % (p, values))

    def test_family_fixture(self):
        self.assertEqual(family_fixture('bm0', s=5, r=1).spec.r, 1)
        self.assertEqual(family_fixture('p2', cut=2).spec.cut, 2)
        self.assertEqual(set(FAMILIES), {'p2', 'nested', 'bm0', 'bm0prime'})
        with self.assertRaises(SurfaceError):
            family_fixture('bm0prime')
        with self.assertRaises(SurfaceError):
            family_fixture('annulus')


if __name__ == '__main__':
    unittest.main()
