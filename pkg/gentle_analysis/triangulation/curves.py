#! /usr/bin/env python
"""
======
curves
======

Closed curves on a triangulated surface, given as crossing words, and
their image in the free abelian group on the arrows: every step through an
angle adds the arrow of that angle, with sign +1 when the arrow runs from
the entry arc to the exit arc and -1 otherwise.

Also the classification of triangles of a torus with one boundary
component into homotopic-to-boundary, based-on-boundary and the two
uncontractible ones.
"""
import logging
from collections import Counter

import numpy as np

from gentle_analysis.misctools.utils import SurfaceError, InvariantViolation
from gentle_analysis.triangulation.surface import Step, CrossingWord, profile
from gentle_analysis.triangulation.grading import is_degree1

_default_log = logging.getLogger('gentle_analysis.curves')

HOMOTOPIC_TO_BOUNDARY = 'HomotopicToBoundary'
BASED_ON_BOUNDARY = 'BasedOnBoundary'
UNCONTRACTIBLE = 'Uncontractible'


class ArrowChain(object):
    """Sparse integer combination of arrow ids."""

    def __init__(self, coefficients=None):
        coefficients = dict(coefficients or {})
        self.coefficients = {int(a): int(c) for a, c in coefficients.items() if c != 0}

    @classmethod
    def from_vector(cls, vec):
        return cls({a: c for a, c in enumerate(vec)})

    def __getitem__(self, arrow):
        return self.coefficients.get(arrow, 0)

    def items(self):
        return sorted(self.coefficients.items())

    def __iter__(self):
        return iter(self.items())

    def __add__(self, other):
        total = Counter(self.coefficients)
        total.update(other.coefficients)
        return ArrowChain(total)

    def __neg__(self):
        return ArrowChain({a: -c for a, c in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return ArrowChain({a: int(k) * c for a, c in self.coefficients.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ArrowChain) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def __bool__(self):
        return bool(self.coefficients)

    def __repr__(self):
        terms = ["{0:+d}*[{1}]".format(c, a) for a, c in self.items()]
        return "ArrowChain({0})".format(' '.join(terms) if terms else '0')

    def dense(self, size):
        if any(a < 0 or a >= size for a in self.coefficients):
            raise SurfaceError("chain uses an arrow outside 0..{0}".format(size - 1))
        v = np.zeros(size, dtype=object)
        for a, c in self.coefficients.items():
            v[a] = c
        return v

    def pair(self, d):
        return sum(c * d[a] for a, c in self.coefficients.items())


def chain_of(curve, quiver):
    curve.validate(quiver.surface)
    total = Counter()
    for s in curve:
        if s.exit == (s.entry + 1) % 3:
            slot, sign = s.entry, 1
        else:
            slot, sign = s.exit, -1
        a = quiver.arrow_at(s.triangle, slot)
        if a is None:
            raise InvariantViolation("no arrow at slot {0} of triangle {1}".format(slot, s.triangle))
        total[a] += sign
    return ArrowChain(total)


def degree(curve, quiver, d):
    if not is_degree1(quiver, d):
        raise SurfaceError("not a degree-1 map")
    return chain_of(curve, quiver).pair(d)


def reverse(curve):
    return curve.reversed()


def arcs_to_word(surface, arcs):
    """
    Crossing word of the closed curve that crosses the cyclic arc sequence
    `arcs` in order.  The only freedom is which side of the first arc the
    curve starts from; both working is an ambiguity.
    """
    arcs = [int(x) for x in arcs]
    if not arcs:
        return CrossingWord([])
    for x in arcs:
        if not surface.is_arc(x):
            raise SurfaceError("no curve: {0} is not an arc".format(x))
    n = len(arcs)
    found = []
    for start in surface.occurrences(arcs[0]):
        t, i = start
        steps = []
        for k in range(n):
            sides = surface.sides(t)
            nxt = arcs[(k + 1) % n]
            if nxt == arcs[k] or nxt not in sides:
                break
            j = sides.index(nxt)
            steps.append(Step(t, i, j))
            t, i = surface.twin(t, j)
        else:
            if (t, i) == start:
                found.append(CrossingWord(steps))
    if not found:
        raise SurfaceError("no curve crosses arcs {0} in this order".format(arcs))
    if len(found) > 1:
        raise SurfaceError("ambiguous arc sequence {0}".format(arcs))
    return found[0]


def classify_triangles(surface, log=_default_log):
    """
    Peel triangles hanging off the rest by at most one arc; what is peeled
    is homotopic to the boundary.  A remaining triangle touching the
    boundary or the peeled region is based on the boundary, the others
    are uncontractible.
    """
    prof = profile(surface)
    if (prof.genus, prof.boundaries, prof.punctures) != (1, 1, 0):
        raise SurfaceError("unsupported profile: g={0}, b={1}".format(prof.genus, prof.boundaries))

    def open_sides(t, peeled):
        return [k for k in range(3) if surface.is_arc(surface.side(t, k))
                and surface.twin(t, k)[0] not in peeled]

    peeled = set()
    changed = True
    while changed:
        changed = False
        for t in surface.triangle_ids:
            if t not in peeled and len(open_sides(t, peeled)) <= 1:
                peeled.add(t)
                changed = True

    classes = {}
    for t in surface.triangle_ids:
        if t in peeled:
            classes[t] = HOMOTOPIC_TO_BOUNDARY
        elif len(open_sides(t, peeled)) < 3:
            classes[t] = BASED_ON_BOUNDARY
        else:
            classes[t] = UNCONTRACTIBLE
    n_uc = sum(1 for c in classes.values() if c == UNCONTRACTIBLE)
    if n_uc != 2:
        raise InvariantViolation("{0} uncontractible triangles, expected 2".format(n_uc))
    log.debug("triangle classes: {0}".format(classes))
    return classes


def decompose_chain(chain, classes, quiver):
    """split a chain into its based-on-boundary and uncontractible parts"""
    bb, uc = {}, {}
    for a, c in chain.items():
        cls = classes[quiver.arrows[a].triangle]
        if cls == HOMOTOPIC_TO_BOUNDARY:
            raise SurfaceError("invalid curve: weight {0} on arrow {1} of a triangle homotopic "
                               "to the boundary".format(c, a))
        if cls == UNCONTRACTIBLE:
            uc[a] = c
        else:
            bb[a] = c
    return ArrowChain(bb), ArrowChain(uc)
