#! /usr/bin/env python
"""
=======
grading
=======

Degree maps on the arrows of a triangulation quiver, admissible cuts and
the degree-zero cut algebra as a gentle presentation.

A cut is described by its choice vector: for each internal triangle (in
quiver order) the slot 0, 1 or 2 of the angle that carries degree 1.
"""
import itertools
import logging
from collections import namedtuple, Counter

import numpy as np

from gentle_analysis.misctools.utils import SurfaceError

_default_log = logging.getLogger('gentle_analysis.grading')

PresArrow = namedtuple('PresArrow', ['id', 'source', 'target'])


class DegreeMap(object):
    """
    Total integer grading on arrow ids.  Looking up an arrow that has no
    degree is an error, never an implicit 0.
    """

    def __init__(self, degrees):
        try:
            self.degrees = {int(a): int(v) for a, v in dict(degrees).items()}
        except (TypeError, ValueError) as err:
            raise SurfaceError("malformed degree map: {0}".format(err))

    @classmethod
    def from_choices(cls, quiver, choices):
        choices = [int(c) for c in choices]
        if len(choices) != len(quiver.internal_triangles):
            raise SurfaceError("cut needs {0} choices, got {1}".format(
                len(quiver.internal_triangles), len(choices)))
        degrees = {a.id: 0 for a in quiver.arrows}
        for cycle, c in zip(quiver.internal_triangles, choices):
            if c not in (0, 1, 2):
                raise SurfaceError("cut choice {0} not in 0..2".format(c))
            degrees[cycle[c]] = 1
        return cls(degrees)

    def __getitem__(self, arrow):
        try:
            return self.degrees[arrow]
        except KeyError:
            raise SurfaceError("missing degree for arrow {0}".format(arrow))

    def __eq__(self, other):
        return isinstance(other, DegreeMap) and self.degrees == other.degrees

    def __hash__(self):
        return hash(frozenset(self.degrees.items()))

    def __repr__(self):
        return "DegreeMap({0})".format(dict(sorted(self.degrees.items())))

    def items(self):
        return sorted(self.degrees.items())

    def check_total(self, quiver):
        ids = set(a.id for a in quiver.arrows)
        missing = sorted(ids - set(self.degrees))
        if missing:
            raise SurfaceError("missing degree for arrow {0}".format(missing[0]))
        extra = sorted(set(self.degrees) - ids)
        if extra:
            raise SurfaceError("degree given for unknown arrow {0}".format(extra[0]))
        return self

    def vector(self, quiver):
        """degrees as an integer array indexed by arrow id"""
        self.check_total(quiver)
        return np.array([self.degrees[a.id] for a in quiver.arrows], dtype=object)

    def choices(self, quiver):
        if not is_admissible_cut(quiver, self):
            raise SurfaceError("non-admissible cut")
        return tuple(next(k for k in range(3) if self.degrees[cycle[k]] == 1)
                     for cycle in quiver.internal_triangles)

    def choice_string(self, quiver):
        return ''.join(str(c) for c in self.choices(quiver))


def is_degree1(quiver, d):
    d.check_total(quiver)
    return all(sum(d[a] for a in cycle) == 1 for cycle in quiver.internal_triangles)


def is_admissible_cut(quiver, d):
    if not is_degree1(quiver, d):
        return False
    for a in quiver.arrows:
        v = d[a.id]
        if v not in (0, 1):
            return False
        if v and quiver.internal_index(a.id) is None:
            return False
    return True


def enumerate_admissible_cuts(quiver):
    """all 3^#Q2 cuts, choice vectors in lexicographic order"""
    for choices in itertools.product(range(3), repeat=len(quiver.internal_triangles)):
        yield DegreeMap.from_choices(quiver, choices)


class GentlePresentation(object):
    """
    Quiver with length-2 monomial relations.  Relations are (first, then)
    pairs of arrow ids with target(first) == source(then).
    """

    def __init__(self, vertices, arrows, relations, labels=None):
        self.vertices = tuple(vertices)
        self.arrows = tuple(PresArrow(*a) for a in arrows)
        self.relations = tuple(sorted(set(tuple(r) for r in relations)))
        self.labels = dict(labels or {})
        self._arrow = {a.id: a for a in self.arrows}
        if len(self._arrow) != len(self.arrows):
            raise SurfaceError("malformed presentation: duplicate arrow id")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise SurfaceError("malformed presentation: arrow {0} has an unknown endpoint".format(a.id))
        for first, then in self.relations:
            if first not in self._arrow or then not in self._arrow:
                raise SurfaceError("malformed presentation: relation on unknown arrow")
            if self._arrow[first].target != self._arrow[then].source:
                raise SurfaceError("malformed presentation: relation ({0}, {1}) is not a path".format(first, then))

    def arrow(self, a):
        return self._arrow[a]

    def outgoing(self, v):
        return [a for a in self.arrows if a.source == v]

    def incoming(self, v):
        return [a for a in self.arrows if a.target == v]

    def is_relation(self, first, then):
        return (first, then) in set(self.relations)

    def label(self, a):
        return self.labels.get(a, str(a))

    def __repr__(self):
        return "GentlePresentation({0} vertices, {1} arrows, {2} relations)".format(
            len(self.vertices), len(self.arrows), len(self.relations))


def cut_algebra(quiver, d, log=_default_log):
    """degree-zero part of the Jacobian algebra of the cut d"""
    if not is_admissible_cut(quiver, d):
        raise SurfaceError("non-admissible cut")
    arrows = [(a.id, a.source, a.target) for a in quiver.arrows if d[a.id] == 0]
    relations = []
    for cycle in quiver.internal_triangles:
        k = next(k for k in range(3) if d[cycle[k]] == 1)
        relations.append((cycle[(k + 1) % 3], cycle[(k + 2) % 3]))
    pres = GentlePresentation(quiver.vertices, arrows, relations)
    log.debug("cut algebra: {0}".format(pres))
    return pres


def is_gentle(pres):
    for v in pres.vertices:
        if len(pres.incoming(v)) > 2 or len(pres.outgoing(v)) > 2:
            return False
    rel = set(pres.relations)
    for a in pres.arrows:
        after = pres.outgoing(a.target)
        before = pres.incoming(a.source)
        if sum(1 for b in after if (a.id, b.id) in rel) > 1:
            return False
        if sum(1 for b in after if (a.id, b.id) not in rel) > 1:
            return False
        if sum(1 for c in before if (c.id, a.id) in rel) > 1:
            return False
        if sum(1 for c in before if (c.id, a.id) not in rel) > 1:
            return False
    return True


def is_connected(pres):
    if not pres.vertices:
        return False
    nbrs = {v: set() for v in pres.vertices}
    for a in pres.arrows:
        nbrs[a.source].add(a.target)
        nbrs[a.target].add(a.source)
    seen, stack = {pres.vertices[0]}, [pres.vertices[0]]
    while stack:
        for w in nbrs[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(pres.vertices)


def cycle_rank(pres):
    """l with #arrows - #vertices = l - 1"""
    if not pres.vertices:
        raise SurfaceError("disconnected quiver: no vertices")
    if not is_connected(pres):
        raise SurfaceError("disconnected quiver")
    return len(pres.arrows) - len(pres.vertices) + 1


def _arrow_counts(pres):
    return Counter((a.source, a.target) for a in pres.arrows)


def _match_arrows(pres, other, vmap):
    """arrow bijection over parallel classes that carries relations onto relations"""
    groups = {}
    for a in pres.arrows:
        groups.setdefault((a.source, a.target), []).append(a.id)
    targets = {}
    for b in other.arrows:
        targets.setdefault((b.source, b.target), []).append(b.id)
    keys = sorted(groups)
    options = [list(itertools.permutations(targets[(vmap[s], vmap[t])])) for s, t in keys]
    rel = set(other.relations)
    for pick in itertools.product(*options):
        amap = {}
        for key, perm in zip(keys, pick):
            amap.update(zip(groups[key], perm))
        if all((amap[f], amap[t]) in rel for f, t in pres.relations):
            return amap
    return None


def find_isomorphism(pres, other):
    """
    Vertex bijection f with an arrow bijection over it that matches the
    relations, or None.  Exhaustive search pruned by in/out degrees.
    """
    if (len(pres.vertices), len(pres.arrows), len(pres.relations)) != \
            (len(other.vertices), len(other.arrows), len(other.relations)):
        return None
    count, count2 = _arrow_counts(pres), _arrow_counts(other)

    def signature(p, v):
        return (len(p.incoming(v)), len(p.outgoing(v)))

    sig = {v: signature(pres, v) for v in pres.vertices}
    sig2 = {w: signature(other, w) for w in other.vertices}
    if sorted(sig.values()) != sorted(sig2.values()):
        return None
    order = sorted(pres.vertices, key=lambda v: -(sig[v][0] + sig[v][1]))

    def extend(vmap, used):
        if len(vmap) == len(order):
            return dict(vmap) if _match_arrows(pres, other, vmap) is not None else None
        v = order[len(vmap)]
        for w in other.vertices:
            if w in used or sig2[w] != sig[v]:
                continue
            if count[(v, v)] != count2[(w, w)]:
                continue
            if any(count[(v, u)] != count2[(w, x)] or count[(u, v)] != count2[(x, w)]
                   for u, x in vmap.items()):
                continue
            vmap[v] = w
            used.add(w)
            found = extend(vmap, used)
            if found is not None:
                return found
            del vmap[v]
            used.discard(w)
        return None

    return extend({}, set())
