import unittest

from gentle_analysis.misctools.utils import SurfaceError
from gentle_analysis.misctools.family_definitions import p2_example, p2_gamma, nested_example
from gentle_analysis.triangulation.surface import CrossingWord, polygon
from gentle_analysis.triangulation.grading import DegreeMap, enumerate_admissible_cuts
from gentle_analysis.triangulation.curves import (ArrowChain, chain_of, degree, reverse, arcs_to_word,
                                                  classify_triangles, decompose_chain,
                                                  HOMOTOPIC_TO_BOUNDARY, BASED_ON_BOUNDARY,
                                                  UNCONTRACTIBLE)


class ChainTestCase(unittest.TestCase):
    def setUp(self):
        self.fx = p2_example(0)
        self.quiver = self.fx.quiver

    def test_p2_chains(self):
        self.assertEqual(chain_of(self.fx.a, self.quiver), ArrowChain({1: -1, 5: 1, 6: -1}))
        self.assertEqual(chain_of(self.fx.b, self.quiver), ArrowChain({2: -1, 3: 1, 6: 1}))
        self.assertEqual(chain_of(p2_gamma(), self.quiver), ArrowChain({0: 1, 4: -1}))

    def test_reverse_negates(self):
        for curve in (self.fx.a, self.fx.b, self.fx.c, p2_gamma()):
            self.assertEqual(chain_of(reverse(curve), self.quiver), -chain_of(curve, self.quiver))

    def test_p2_degrees(self):
        expected = {0: (0, 0), 1: (-1, 1), 2: (-2, 2)}
        for cut, (da, db) in expected.items():
            fx = p2_example(cut)
            self.assertEqual(degree(fx.a, fx.quiver, fx.degree), da)
            self.assertEqual(degree(fx.b, fx.quiver, fx.degree), db)
            self.assertEqual(degree(fx.c, fx.quiver, fx.degree), 2)

    def test_linearity_over_all_cuts(self):
        for d in enumerate_admissible_cuts(self.quiver):
            da = degree(self.fx.a, self.quiver, d)
            db = degree(self.fx.b, self.quiver, d)
            self.assertEqual(degree(p2_gamma(), self.quiver, d), da + db)
            self.assertEqual(degree(reverse(self.fx.a), self.quiver, d), -da)
            self.assertEqual(degree(self.fx.c, self.quiver, d), 2)

    def test_not_degree1(self):
        zero = DegreeMap({a.id: 0 for a in self.quiver.arrows})
        with self.assertRaisesRegex(SurfaceError, 'not a degree-1 map'):
            degree(self.fx.a, self.quiver, zero)

    def test_invalid_words(self):
        s = self.fx.surface
        with self.assertRaisesRegex(SurfaceError, 'leaves through its entry side'):
            CrossingWord([(0, 1, 1)]).validate(s)
        with self.assertRaisesRegex(SurfaceError, 'crosses a boundary side'):
            CrossingWord([(3, 0, 1)]).validate(s)
        with self.assertRaisesRegex(SurfaceError, 'broken crossing word'):
            CrossingWord([(0, 0, 1)]).validate(s)
        with self.assertRaises(SurfaceError):
            chain_of(CrossingWord([(9, 0, 1)]), self.quiver)

    def test_chain_arithmetic(self):
        x = ArrowChain({0: 2, 1: -1})
        self.assertEqual(x - x, ArrowChain())
        self.assertFalse(x - x)
        self.assertEqual(list((2 * x).dense(3)), [4, -2, 0])
        self.assertEqual(ArrowChain.from_vector([0, 3, 0]), ArrowChain({1: 3}))
        with self.assertRaises(SurfaceError):
            x.dense(1)


class ArcSequenceTestCase(unittest.TestCase):
    def setUp(self):
        self.fx = p2_example(0)

    def test_unique_word(self):
        self.assertEqual(arcs_to_word(self.fx.surface, [2, 3, 4]), self.fx.a)

    def test_ambiguous(self):
        with self.assertRaisesRegex(SurfaceError, 'ambiguous arc sequence'):
            arcs_to_word(self.fx.surface, [1, 2])

    def test_no_curve(self):
        with self.assertRaisesRegex(SurfaceError, 'no curve'):
            arcs_to_word(self.fx.surface, [1, 5])
        with self.assertRaisesRegex(SurfaceError, 'no curve'):
            arcs_to_word(self.fx.surface, [6, 1])


class ClassificationTestCase(unittest.TestCase):
    def test_p2(self):
        fx = p2_example(0)
        classes = classify_triangles(fx.surface)
        self.assertEqual(classes, {0: UNCONTRACTIBLE, 1: UNCONTRACTIBLE, 2: BASED_ON_BOUNDARY,
                                   3: HOMOTOPIC_TO_BOUNDARY})
        bb, uc = decompose_chain(chain_of(fx.a, fx.quiver), classes, fx.quiver)
        self.assertEqual(bb, ArrowChain({6: -1}))
        self.assertEqual(uc, ArrowChain({1: -1, 5: 1}))

    def test_nested(self):
        fx = nested_example(0)
        classes = classify_triangles(fx.surface)
        self.assertEqual(classes[3], HOMOTOPIC_TO_BOUNDARY)
        self.assertEqual(sorted(t for t, c in classes.items() if c == UNCONTRACTIBLE), [0, 1])
        inner = fx.quiver.internal_triangles[3][0]
        with self.assertRaisesRegex(SurfaceError, 'invalid curve'):
            decompose_chain(ArrowChain({inner: 1}), classes, fx.quiver)

    def test_unsupported(self):
        with self.assertRaisesRegex(SurfaceError, 'unsupported profile'):
            classify_triangles(polygon(5))


if __name__ == '__main__':
    unittest.main()
