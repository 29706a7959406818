#! /usr/bin/env python
"""
=======
surface
=======

Triangulations of oriented marked surfaces with all marked points on the
boundary, glued from triangles whose sides are listed counterclockwise.

Conventions:

  * side k of a triangle runs from corner k to corner k+1
  * an arc glued between side k of t and side j of t' identifies corner k
    of t with corner j+1 of t' and corner k+1 of t with corner j of t'
  * arrow slot k of a triangle is the angle s_k -> s_{k+1}; it exists iff
    both sides are arcs.  Arrow ids are dense in (triangle, slot) order.

Contains

TriangulatedSurface - validated gluing data with twins, vertices, boundary cycles
CrossingWord        - a closed curve as a cyclic sequence of angle crossings
Quiver              - arcs, angles and internal-triangle 3-cycles

profile, build_quiver, boundary_loop, flip, polygon
"""
import logging
from collections import namedtuple

from gentle_analysis.misctools.utils import SurfaceError, InvariantViolation

_default_log = logging.getLogger('gentle_analysis.surface')

ARC = 'arc'
BOUNDARY = 'boundary'

Edge = namedtuple('Edge', ['id', 'kind'])
Triangle = namedtuple('Triangle', ['id', 'sides'])
Arrow = namedtuple('Arrow', ['id', 'source', 'target', 'triangle', 'slot'])
Step = namedtuple('Step', ['triangle', 'entry', 'exit'])
SurfaceProfile = namedtuple('SurfaceProfile',
                            ['genus', 'boundaries', 'marked_points', 'punctures',
                             'arcs', 'triangles', 'internal'])


class _UnionFind(object):
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


class TriangulatedSurface(object):
    """
    Glued oriented triangles.

    edges: iterable of (id, kind) with kind 'arc' or 'boundary'
    triangles: iterable of (id, (e0, e1, e2)), sides counterclockwise
    punctured: accept interior marked points (closed gluings such as the
               once-punctured torus); otherwise they are an error
    """

    def __init__(self, edges, triangles, punctured=False, log=_default_log):
        self.logger = log
        self.punctured = bool(punctured)
        try:
            self.edges = tuple(Edge(int(e), str(kind)) for e, kind in edges)
            self.triangles = tuple(Triangle(int(t), tuple(int(s) for s in sides))
                                   for t, sides in triangles)
        except (TypeError, ValueError) as err:
            raise SurfaceError("malformed document: {0}".format(err))
        self._validate()
        self.logger.debug("surface: {0} edges, {1} triangles, {2} vertices, "
                          "{3} boundary cycles".format(len(self.edges), len(self.triangles),
                                                       self.n_vertices, len(self.boundary_cycles)))

    # ------------------------------------------------------------------ checks

    def _validate(self):
        self._kind = {}
        for e in self.edges:
            if e.id < 0:
                raise SurfaceError("malformed document: negative edge id {0}".format(e.id))
            if e.kind not in (ARC, BOUNDARY):
                raise SurfaceError("malformed document: unknown edge kind '{0}'".format(e.kind))
            if e.id in self._kind:
                raise SurfaceError("malformed document: duplicate edge id {0}".format(e.id))
            self._kind[e.id] = e.kind
        if not self.triangles:
            raise SurfaceError("malformed document: no triangles")

        self._sides = {}
        self._where = {e.id: [] for e in self.edges}
        for t in self.triangles:
            if t.id < 0 or t.id in self._sides:
                raise SurfaceError("malformed document: bad or duplicate triangle id {0}".format(t.id))
            if len(t.sides) != 3:
                raise SurfaceError("malformed document: triangle {0} needs 3 sides".format(t.id))
            if len(set(t.sides)) != 3:
                raise SurfaceError("repeated side in triangle {0}".format(t.id))
            for k, s in enumerate(t.sides):
                if s not in self._kind:
                    raise SurfaceError("malformed document: triangle {0} uses unknown edge {1}".format(t.id, s))
                self._where[s].append((t.id, k))
            self._sides[t.id] = t.sides

        for e in self.edges:
            n = len(self._where[e.id])
            if e.kind == ARC and n != 2:
                raise SurfaceError("arc multiplicity: arc {0} appears {1} times".format(e.id, n))
            if e.kind == BOUNDARY and n != 1:
                raise SurfaceError("boundary multiplicity: segment {0} appears {1} times".format(e.id, n))

        self._twin = {}
        for e in self.arcs:
            first, second = self._where[e]
            self._twin[first] = second
            self._twin[second] = first

        seen = {self.triangles[0].id}
        stack = [self.triangles[0].id]
        while stack:
            t = stack.pop()
            for k in range(3):
                if (t, k) in self._twin:
                    u = self._twin[(t, k)][0]
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
        if len(seen) != len(self.triangles):
            raise SurfaceError("disconnected gluing: {0} of {1} triangles reachable".format(
                len(seen), len(self.triangles)))

        corners = [(t.id, k) for t in self.triangles for k in range(3)]
        uf = _UnionFind(corners)
        for (t, k), (u, j) in self._twin.items():
            uf.union((t, k), (u, (j + 1) % 3))
            uf.union((t, (k + 1) % 3), (u, j))
        self._vertex = {c: uf.find(c) for c in corners}
        self.n_vertices = len(set(self._vertex.values()))

        self.boundary_sides = tuple((t.id, k) for t in self.triangles for k in range(3)
                                    if self._kind[t.sides[k]] == BOUNDARY)
        on_boundary = set(self._vertex[c] for c in self.boundary_sides)
        self.punctures = self.n_vertices - len(on_boundary)
        if self.punctures and not self.punctured:
            raise SurfaceError("interior marked point: {0} vertices off the boundary".format(self.punctures))
        self.boundary_cycles = self._trace_boundary()

    def _next_boundary(self, t, k):
        # rotate about the end vertex of boundary side (t, k) to the next segment
        u, j = t, (k + 1) % 3
        for _ in range(3 * len(self.triangles) + 1):
            if self._kind[self._sides[u][j]] == BOUNDARY:
                return (u, j)
            u, j = self._twin[(u, j)]
            j = (j + 1) % 3
        raise InvariantViolation("boundary tracing did not close at side {0}".format((t, k)))

    def _trace_boundary(self):
        cycles, used = [], set()
        for side in self.boundary_sides:
            if side in used:
                continue
            cycle = [side]
            used.add(side)
            nxt = self._next_boundary(*side)
            while nxt != side:
                if nxt in used:
                    raise InvariantViolation("boundary cycles overlap at {0}".format(nxt))
                cycle.append(nxt)
                used.add(nxt)
                nxt = self._next_boundary(*nxt)
            cycles.append(tuple(cycle))
        return tuple(cycles)

    # --------------------------------------------------------------- accessors

    @property
    def arcs(self):
        return tuple(e.id for e in self.edges if e.kind == ARC)

    @property
    def triangle_ids(self):
        return tuple(t.id for t in self.triangles)

    def kind(self, edge):
        return self._kind[edge]

    def is_arc(self, edge):
        return self._kind.get(edge) == ARC

    def sides(self, triangle):
        try:
            return self._sides[triangle]
        except KeyError:
            raise SurfaceError("unknown triangle {0}".format(triangle))

    def side(self, triangle, k):
        return self.sides(triangle)[k % 3]

    def occurrences(self, edge):
        return tuple(self._where[edge])

    def twin(self, triangle, k):
        """(t', j) glued to side k of triangle across an arc"""
        try:
            return self._twin[(triangle, k % 3)]
        except KeyError:
            raise SurfaceError("side {0} of triangle {1} is not an arc".format(k, triangle))

    def vertex(self, triangle, corner):
        return self._vertex[(triangle, corner % 3)]

    def is_internal(self, triangle):
        return all(self.is_arc(s) for s in self.sides(triangle))

    def __eq__(self, other):
        return (isinstance(other, TriangulatedSurface) and self.edges == other.edges
                and self.triangles == other.triangles and self.punctured == other.punctured)

    def __hash__(self):
        return hash((self.edges, self.triangles, self.punctured))


class CrossingWord(object):
    """
    Closed curve as a cyclic sequence of Steps (triangle, entry, exit): the
    curve enters the triangle through side `entry` and leaves through `exit`.
    """

    def __init__(self, steps):
        try:
            self.steps = tuple(Step(int(s[0]), int(s[1]), int(s[2])) for s in steps)
        except (TypeError, ValueError, IndexError) as err:
            raise SurfaceError("malformed curve: {0}".format(err))

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other):
        return isinstance(other, CrossingWord) and self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        return "CrossingWord({0})".format(list(map(tuple, self.steps)))

    def reversed(self):
        return CrossingWord([Step(s.triangle, s.exit, s.entry) for s in reversed(self.steps)])

    def validate(self, surface):
        n = len(self.steps)
        for idx, s in enumerate(self.steps):
            sides = surface.sides(s.triangle)
            if s.entry not in (0, 1, 2) or s.exit not in (0, 1, 2):
                raise SurfaceError("malformed curve: side index out of range in step {0}".format(idx))
            if s.entry == s.exit:
                raise SurfaceError("step {0} leaves through its entry side".format(idx))
            if not (surface.is_arc(sides[s.entry]) and surface.is_arc(sides[s.exit])):
                raise SurfaceError("step {0} crosses a boundary side".format(idx))
            nxt = self.steps[(idx + 1) % n]
            if surface.twin(s.triangle, s.exit) != (nxt.triangle, nxt.entry):
                raise SurfaceError("broken crossing word: step {0} does not lead into step {1}".format(
                    idx, (idx + 1) % n))
        return self


class Quiver(object):
    """
    Q0 = arcs, Q1 = angles between arcs, Q2 = internal triangles with their
    arrow triples (alpha, beta, gamma) = (slot 0, slot 1, slot 2).
    """

    def __init__(self, surface, vertices, arrows, internal_triangles):
        self.surface = surface
        self.vertices = tuple(vertices)
        self.arrows = tuple(arrows)
        self.internal_triangles = tuple(tuple(c) for c in internal_triangles)
        self._at = {(a.triangle, a.slot): a.id for a in self.arrows}
        self._cycle_of = {}
        for n, cycle in enumerate(self.internal_triangles):
            for a in cycle:
                if a in self._cycle_of:
                    raise InvariantViolation("arrow {0} lies in two internal triangles".format(a))
                self._cycle_of[a] = n

    @property
    def n_arrows(self):
        return len(self.arrows)

    def arrow_at(self, triangle, slot):
        return self._at.get((triangle, slot % 3))

    def internal_index(self, arrow):
        """index of the internal 3-cycle containing arrow, or None"""
        return self._cycle_of.get(arrow)


def profile(surface):
    """genus, boundary components and marked points from Euler characteristic"""
    V = surface.n_vertices
    E = len(surface.edges)
    F = len(surface.triangles)
    chi = V - E + F
    b = len(surface.boundary_cycles)
    two_g = 2 - b - chi
    if two_g < 0 or two_g % 2:
        raise InvariantViolation("Euler characteristic {0} with {1} boundary cycles".format(chi, b))
    g = two_g // 2
    p = len(surface.boundary_sides)
    arcs = len(surface.arcs)
    internal = sum(1 for t in surface.triangle_ids if surface.is_internal(t))
    expected = 6 * g - 6 + 3 * b + p + 3 * surface.punctures
    if arcs != expected:
        raise InvariantViolation("arc count {0} != 6g-6+3b+p+3P = {1}".format(arcs, expected))
    return SurfaceProfile(g, b, p, surface.punctures, arcs, F, internal)


def build_quiver(surface, log=_default_log):
    arrows, internal = [], []
    for t in surface.triangles:
        ids = []
        for slot in range(3):
            s, s1 = t.sides[slot], t.sides[(slot + 1) % 3]
            if surface.is_arc(s) and surface.is_arc(s1):
                ids.append(len(arrows))
                arrows.append(Arrow(len(arrows), s, s1, t.id, slot))
        if len(ids) == 3:
            internal.append(tuple(ids))
    quiver = Quiver(surface, surface.arcs, arrows, internal)

    prof = profile(surface)
    if prof.arcs:
        lhs = quiver.n_arrows - len(quiver.vertices) - len(quiver.internal_triangles)
        rhs = 2 * prof.genus + prof.boundaries + prof.punctures - 2
        if lhs != rhs:
            raise InvariantViolation("#Q1-#Q0-#Q2 = {0} but 2g+b-2 = {1}".format(lhs, rhs))
    log.debug("quiver: {0} vertices, {1} arrows, {2} internal triangles".format(
        len(quiver.vertices), quiver.n_arrows, len(quiver.internal_triangles)))
    return quiver


def _cancel_turns(steps):
    """
    Remove U-turns (t, e, e): the curve re-enters the previous triangle
    through the side it left by, so the neighbours merge into one step.
    """
    steps = list(steps)
    while True:
        u = next((n for n, s in enumerate(steps) if s.entry == s.exit), None)
        if u is None:
            return steps
        if len(steps) <= 2:
            return []
        start = (u - 1) % len(steps)
        steps = steps[start:] + steps[:start]
        prev, nxt = steps[0], steps[2]
        if prev.triangle != nxt.triangle or prev.exit != nxt.entry:
            raise InvariantViolation("U-turn at {0} is not between matching steps".format(steps[1]))
        steps = [Step(prev.triangle, prev.entry, nxt.exit)] + steps[3:]


def boundary_loop(surface, component=0):
    """
    Crossing word of a loop parallel to boundary cycle `component`, pushed
    off the boundary so that it crosses the angles next to it.
    """
    cycles = surface.boundary_cycles
    if not 0 <= component < len(cycles):
        raise SurfaceError("component out of range: {0} not in [0, {1})".format(component, len(cycles)))
    t, k = cycles[component][0]
    sides = surface.sides(t)
    if surface.is_arc(sides[(k + 2) % 3]):
        state = (t, (k + 2) % 3)
    elif surface.is_arc(sides[(k + 1) % 3]):
        state = (t, (k + 1) % 3)
    else:
        raise SurfaceError("contractible boundary loop")

    start, walk = state, []
    for _ in range(6 * len(surface.triangles) + 1):
        t, i = state
        sides = surface.sides(t)
        if surface.is_arc(sides[(i + 1) % 3]):
            j = (i + 1) % 3
        elif surface.is_arc(sides[(i + 2) % 3]):
            j = (i + 2) % 3
        else:
            j = i
        walk.append(Step(t, i, j))
        state = surface.twin(t, j)
        if state == start:
            break
    else:
        raise InvariantViolation("boundary walk did not close")

    steps = _cancel_turns(walk)
    if not steps:
        raise SurfaceError("contractible boundary loop")
    surface.logger.debug("boundary loop {0}: walk of {1} steps reduced to {2}".format(
        component, len(walk), len(steps)))
    return CrossingWord(steps)


def flip(surface, arc):
    """
    Replace arc by the other diagonal of the quadrilateral around it.
    (e, a, b), (e, c, d) become (e, d, a), (e, b, c); ids are kept.
    """
    if not surface.is_arc(arc):
        raise SurfaceError("arc not flippable: {0} is not an arc".format(arc))
    (t1, i1), (t2, i2) = surface.occurrences(arc)
    s1, s2 = surface.sides(t1), surface.sides(t2)
    a, b = s1[(i1 + 1) % 3], s1[(i1 + 2) % 3]
    c, d = s2[(i2 + 1) % 3], s2[(i2 + 2) % 3]
    if d == a or b == c:
        raise SurfaceError("arc not flippable: {0} would give a self-folded triangle".format(arc))
    new = {t1: (arc, d, a), t2: (arc, b, c)}
    triangles = [(t.id, new.get(t.id, t.sides)) for t in surface.triangles]
    return TriangulatedSurface([tuple(e) for e in surface.edges], triangles,
                               punctured=surface.punctured, log=surface.logger)


def polygon(n):
    """Fan triangulation of a disc with n boundary marked points."""
    if n < 3:
        raise SurfaceError("polygon needs at least 3 marked points, got {0}".format(n))
    edges = [(k, BOUNDARY) for k in range(n)] + [(n + k - 2, ARC) for k in range(2, n - 1)]
    triangles = []
    for k in range(1, n - 1):
        left = 0 if k == 1 else n + k - 2
        right = n - 1 if k == n - 2 else n + k - 1
        triangles.append((k - 1, (left, k, right)))
    return TriangulatedSurface(edges, triangles)
