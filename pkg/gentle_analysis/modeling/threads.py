#! /usr/bin/env python
"""
=======
threads
=======

Permitted and forbidden threads of a gentle presentation and the AG
invariant built from them.

Every arrow end at a vertex gets a side +1 or -1: the (at most two)
incoming arrows sit on different sides, as do the outgoing ones.  An
incoming arrow b and an outgoing arrow c share a side exactly when bc is a
relation.  At each vertex v and side s there are two junctions

    P(v, s) = (in(v, s), out(v, -s))    a permitted passage
    F(v, s) = (in(v, s), out(v, s))     a forbidden passage

and a thread runs from a junction with no incoming arrow to one with no
outgoing arrow (possibly the same one, for a trivial thread).

The invariant walks permitted thread -> forbidden thread ending on the
opposite side of its end -> permitted thread starting where that forbidden
thread starts, until the walk closes, and records (number of permitted
threads, number of arrows on the forbidden ones).  Closed cycles of
relations add (0, length).
"""
import itertools
import logging
from collections import Counter

from gentle_analysis.misctools.utils import SurfaceError, InvariantViolation
from gentle_analysis.triangulation.grading import is_gentle

_default_log = logging.getLogger('gentle_analysis.threads')

SIDES = (1, -1)


class ThreadModel(object):
    def __init__(self, pres, log=_default_log):
        if not is_gentle(pres):
            raise SurfaceError("non-gentle input")
        self.pres = pres
        self.logger = log
        self.side_in = {}
        self.side_out = {}
        rel = set(pres.relations)
        for v in pres.vertices:
            ins, outs = pres.incoming(v), pres.outgoing(v)
            for e_in, s_out in itertools.product(itertools.permutations(SIDES, len(ins)),
                                                 itertools.permutations(SIDES, len(outs))):
                if all((s_out[j] == e_in[i]) == ((b.id, c.id) in rel)
                       for i, b in enumerate(ins) for j, c in enumerate(outs)):
                    break
            else:
                raise SurfaceError("non-gentle input: no side assignment at vertex {0}".format(v))
            for b, e in zip(ins, e_in):
                self.side_in[b.id] = e
            for c, s in zip(outs, s_out):
                self.side_out[c.id] = s
        self.ins = {(a.target, self.side_in[a.id]): a for a in pres.arrows}
        self.outs = {(a.source, self.side_out[a.id]): a for a in pres.arrows}
        self._limit = len(pres.arrows) + 1

    def starts(self):
        """junctions with no incoming arrow, where both kinds of thread begin"""
        return [(v, s) for v in self.pres.vertices for s in SIDES if (v, s) not in self.ins]

    def permitted_thread(self, start):
        """arrows of the permitted thread starting at P(start) and its end junction"""
        v, s = start
        arrows = []
        a = self.outs.get((v, -s))
        while a is not None:
            arrows.append(a.id)
            if len(arrows) > self._limit:
                raise InvariantViolation("permitted thread from {0} does not end".format(start))
            v, s = a.target, self.side_in[a.id]
            a = self.outs.get((v, -s))
        return arrows, (v, s)

    def forbidden_thread(self, start):
        v, s = start
        arrows = []
        a = self.outs.get((v, s))
        while a is not None:
            arrows.append(a.id)
            if len(arrows) > self._limit:
                raise InvariantViolation("forbidden thread from {0} does not end".format(start))
            v, s = a.target, self.side_in[a.id]
            a = self.outs.get((v, s))
        return arrows, (v, s)

    def forbidden_thread_ending(self, end):
        """start junction and length of the forbidden thread ending at F(end)"""
        v, s = end
        length = 0
        a = self.ins.get((v, s))
        while a is not None:
            length += 1
            if length > self._limit:
                raise InvariantViolation("forbidden thread to {0} does not start".format(end))
            v, s = a.source, self.side_out[a.id]
            a = self.ins.get((v, s))
        return (v, s), length

    def forbidden_cycles(self):
        """lengths of the closed cycles of relations"""
        covered = set()
        for start in self.starts():
            covered.update(self.forbidden_thread(start)[0])
        lengths = []
        for a in self.pres.arrows:
            if a.id in covered:
                continue
            n, b = 0, a
            while b.id not in covered:
                covered.add(b.id)
                n += 1
                b = self.outs[(b.target, self.side_in[b.id])]
            lengths.append(n)
        return lengths


def ag_invariant(pres, log=_default_log):
    """AG invariant as a Counter {(n, m): multiplicity}"""
    model = ThreadModel(pres, log=log)
    result = Counter()
    visited = set()
    for start in model.starts():
        if start in visited:
            continue
        n = m = 0
        j = start
        while j not in visited:
            visited.add(j)
            n += 1
            _, (v, s) = model.permitted_thread(j)
            j, length = model.forbidden_thread_ending((v, -s))
            m += length
        if j != start:
            raise InvariantViolation("thread walk from {0} closed at {1}".format(start, j))
        result[(n, m)] += 1
    for length in model.forbidden_cycles():
        result[(0, length)] += 1
    log.debug("AG invariant: {0}".format(format_pairs(result)))
    return result


def format_pairs(counter):
    """'(n,m):k' terms sorted lexicographically, comma separated"""
    return ','.join("({0},{1}):{2}".format(n, m, k) for (n, m), k in sorted(counter.items()))
