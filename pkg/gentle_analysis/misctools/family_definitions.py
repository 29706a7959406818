#! /usr/bin/env python
"""
==================
family_definitions
==================

Graded triangulations of the torus with one boundary component realizing
known surface algebras, each with an admissible cut and a pair of curves
(a, b) whose classes form a basis of H1.

Family names (str):
  * p2        - the 5-arc triangulation with p = 2 and its cuts 0, 1, 2
  * nested    - the same with the boundary pushed behind an internal triangle, p = 4
  * bm0prime  - Lambda'_0(s, 0), s >= 2, p = s - 1
  * bm0       - Lambda_0(s, r), s >= 3, 0 <= r <= [s/2] - 1, p = s - 2

Triangles list their sides counterclockwise.  In bm0prime the arcs are
1..s+2 and the outer triangles (i+1, i, B_i) carry the alpha_i; bm0 uses
arcs 1..s+1 with an interior ladder (2i+2, 2i+1, 2i) and a boundary
triangle on every arc 2i+1 for i <= r.

bm_presentation gives the displayed quivers with relations, for comparison
with the cut algebras up to relabeling.
"""
import logging
from collections import namedtuple

from gentle_analysis.misctools.utils import SurfaceError, InvariantViolation
from gentle_analysis.misctools.homology import homology_of, class_coordinates
from gentle_analysis.triangulation.surface import (TriangulatedSurface, CrossingWord, ARC, BOUNDARY,
                                                   build_quiver, boundary_loop, profile)
from gentle_analysis.triangulation.grading import DegreeMap, GentlePresentation, is_admissible_cut
from gentle_analysis.triangulation.curves import chain_of
from gentle_analysis.modeling.invariants import gcd_invariant

_default_log = logging.getLogger('gentle_analysis.families')

FAMILIES = ('p2', 'nested', 'bm0prime', 'bm0')

FamilySpec = namedtuple('FamilySpec', ['family', 'cut', 's', 'r'])

# slot of the degree-1 angle in each internal triangle, per cut index
P2_CUTS = {0: (1, 2, 2), 1: (1, 2, 0), 2: (1, 0, 0)}


class GradedFixture(object):
    """surface + cut + basis curves (a, b) + boundary loop c"""

    def __init__(self, spec, surface, choices, a, b, log=_default_log):
        self.spec = spec
        self.surface = surface
        self.logger = log
        self.quiver = build_quiver(surface, log=log)
        self.degree = DegreeMap.from_choices(self.quiver, choices)
        self.a = CrossingWord(a).validate(surface)
        self.b = CrossingWord(b).validate(surface)
        self.c = boundary_loop(surface, 0)

    @property
    def name(self):
        return self.spec.family

    @property
    def marked_points(self):
        return profile(self.surface).marked_points

    def check(self):
        """admissible cut, torus with one boundary, (a, b) a basis of H1"""
        if not is_admissible_cut(self.quiver, self.degree):
            raise InvariantViolation("{0}: cut is not admissible".format(self.spec))
        prof = profile(self.surface)
        if (prof.genus, prof.boundaries, prof.punctures) != (1, 1, 0):
            raise InvariantViolation("{0}: profile {1}".format(self.spec, prof))
        h1 = homology_of(self.quiver)
        chain_a = chain_of(self.a, self.quiver)
        chain_b = chain_of(self.b, self.quiver)
        if class_coordinates(h1, chain_a, (chain_a, chain_b)) != (1, 0):
            raise InvariantViolation("{0}: a is not the first basis vector".format(self.spec))
        self.logger.debug("fixture {0} checked: p={1}".format(self.spec, prof.marked_points))
        return self

    def __repr__(self):
        return "GradedFixture({0})".format(self.spec)


def _edges(arcs, boundary):
    return [(e, ARC) for e in arcs] + [(e, BOUNDARY) for e in boundary]


def p2_example(cut, log=_default_log):
    if cut not in P2_CUTS:
        raise SurfaceError("p2 cut {0} not supported: choose 0, 1 or 2".format(cut))
    surface = TriangulatedSurface(
        _edges(range(1, 6), (6, 7)),
        [(0, (1, 2, 4)), (1, (3, 1, 2)), (2, (4, 3, 5)), (3, (5, 6, 7))], log=log)
    a = [(1, 2, 0), (2, 1, 0), (0, 2, 1)]
    b = [(0, 0, 2), (2, 0, 1), (1, 0, 1)]
    return GradedFixture(FamilySpec('p2', cut, None, None), surface, P2_CUTS[cut], a, b, log=log)


def p2_gamma():
    """a third simple curve on the p2 triangulation, in the class a + b"""
    return CrossingWord([(0, 0, 1), (1, 2, 1)])


def nested_example(cut, log=_default_log):
    if cut not in P2_CUTS:
        raise SurfaceError("nested cut {0} not supported: choose 0, 1 or 2".format(cut))
    surface = TriangulatedSurface(
        _edges(range(1, 8), range(8, 12)),
        [(0, (1, 2, 4)), (1, (3, 1, 2)), (2, (4, 3, 5)), (3, (5, 6, 7)),
         (4, (6, 8, 9)), (5, (7, 10, 11))], log=log)
    a = [(1, 2, 0), (2, 1, 0), (0, 2, 1)]
    b = [(0, 0, 2), (2, 0, 1), (1, 0, 1)]
    return GradedFixture(FamilySpec('nested', cut, None, None), surface, P2_CUTS[cut] + (0,),
                         a, b, log=log)


def bm_lambda0_prime(s, log=_default_log):
    s = int(s)
    if s < 2:
        raise SurfaceError("bm0prime needs s >= 2, got {0}".format(s))
    TA, TB = 0, 1
    triangles = [(TA, (s + 2, s + 1, s)), (TB, (s + 2, s + 1, 1))]
    for i in range(1, s):
        triangles.append((1 + i, (i + 1, i, s + 2 + i)))
    surface = TriangulatedSurface(_edges(range(1, s + 3), range(s + 3, 2 * s + 2)), triangles, log=log)
    a = [(TA, 1, 0), (TB, 0, 1)]
    b = [(TA, 2, 0), (TB, 0, 2)] + [(1 + i, 1, 0) for i in range(1, s)]
    return GradedFixture(FamilySpec('bm0prime', None, s, 0), surface, (2, 2), a, b, log=log)


def bm_lambda0(s, r, log=_default_log):
    s, r = int(s), int(r)
    if s < 3 or not 0 <= r <= s // 2 - 1:
        raise SurfaceError("bm0 needs s >= 3 and 0 <= r <= [s/2]-1, got s={0}, r={1}".format(s, r))
    TA, TB = 0, 1
    triangles = [(TA, (1, s + 1, s)), (TB, (2, 1, s + 1))]
    ladder = [2 + i for i in range(r)]
    for i in range(1, r + 1):
        triangles.append((1 + i, (2 * i + 2, 2 * i + 1, 2 * i)))
    boundary = iter(range(s + 2, 2 * s))
    tid = 2 + r
    for i in range(1, r + 1):
        triangles.append((tid, (2 * i + 1, next(boundary), next(boundary))))
        tid += 1
    outer = {}
    for j in range(2 * r + 2, s):
        outer[j] = tid
        triangles.append((tid, (j + 1, j, next(boundary))))
        tid += 1
    surface = TriangulatedSurface(_edges(range(1, s + 2), range(s + 2, 2 * s)), triangles, log=log)

    b = [(TA, 1, 0), (TB, 1, 2)]
    forward = [(TA, 2, 0), (TB, 1, 0)] + [(t, 2, 0) for t in ladder] + \
        [(outer[j], 1, 0) for j in range(2 * r + 2, s)]
    a = CrossingWord(forward).reversed()
    return GradedFixture(FamilySpec('bm0', None, s, r), surface, (2,) * (2 + r), a, b, log=log)


def family_fixture(name, cut=0, s=None, r=0, log=_default_log):
    """fixture by family name, the way the command line asks for it"""
    if name not in FAMILIES:
        raise SurfaceError("family {0} not supported: choose one of {1}".format(name, ', '.join(FAMILIES)))
    if name == 'p2':
        return p2_example(cut, log=log)
    if name == 'nested':
        return nested_example(cut, log=log)
    if s is None:
        raise SurfaceError("family {0} needs s".format(name))
    if name == 'bm0prime':
        return bm_lambda0_prime(s, log=log)
    return bm_lambda0(s, r, log=log)


def bm_presentation(family, s, r=0, modified=False):
    """
    The displayed quivers with relations.  Arrow ids: alpha_i -> i - 1,
    then beta, gamma (and delta for bm0prime).  Relations are (first, then).
    """
    s, r = int(s), int(r)
    if s < 1:
        raise SurfaceError("presentation needs s >= 1, got {0}".format(s))
    alpha = {i: i - 1 for i in range(1, s + 1)}
    beta, gamma, delta = s, s + 1, s + 2
    labels = {alpha[i]: 'alpha_{0}'.format(i) for i in alpha}
    labels.update({beta: 'beta', gamma: 'gamma'})
    arrows = [(alpha[i], i + 1, i) for i in range(1, s + 1)]
    if family == 'bm0':
        limit = (s - 1) // 2 if modified else s - 1
        if not 0 <= r <= limit:
            raise SurfaceError("bm0 presentation needs 0 <= r <= {0}, got {1}".format(limit, r))
        vertices = range(1, s + 2)
        arrows += [(beta, 1, s + 1), (gamma, 1, s + 1)]
        relations = [(beta, alpha[s]), (alpha[1], gamma)]
        if modified:
            relations += [(alpha[2 * i + 1], alpha[2 * i]) for i in range(1, r + 1)]
        else:
            relations += [(alpha[i + 1], alpha[i]) for i in range(1, r + 1)]
    elif family == 'bm0prime':
        if r != 0:
            raise SurfaceError("bm0prime presentation is defined for r = 0 only")
        vertices = range(1, s + 3)
        arrows += [(beta, s + 1, 1), (gamma, s + 2, s + 1), (delta, s + 2, s + 1)]
        labels[delta] = 'delta'
        relations = [(gamma, alpha[s]), (delta, beta)]
    else:
        raise SurfaceError("presentation family {0} not supported".format(family))
    return GentlePresentation(list(vertices), arrows, relations, labels=labels)


def attained_values(p, log=_default_log):
    """
    gcd invariants realized by the two families at p marked points; every
    integer in [0, (p + 1) / 2] must be among them.
    """
    p = int(p)
    if p < 1:
        raise SurfaceError("attained_values needs p >= 1, got {0}".format(p))
    fixtures = [bm_lambda0_prime(p + 1, log=log)]
    fixtures += [bm_lambda0(p + 2, r, log=log) for r in range((p + 2) // 2)]
    values = set()
    for fx in fixtures:
        values.add(gcd_invariant(fx.surface, fx.quiver, fx.degree, fx.a, fx.b))
    missing = [v for v in range((p + 1) // 2 + 1) if v not in values]
    if missing:
        raise InvariantViolation("p={0}: values {1} not attained".format(p, missing))
    log.debug("attained at p={0}: {1}".format(p, sorted(values)))
    return values
