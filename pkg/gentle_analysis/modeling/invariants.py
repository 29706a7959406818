#! /usr/bin/env python
"""
==========
invariants
==========

Derived invariants of surface algebras of the torus with one boundary
component:

gcd_invariant            gcd(|d(a)|, |d(b)|) over a homology basis (a, b)
derived_equivalent_torus equality of gcd invariants
sl2_orbit_witness        M in SL(2, Z) with M (m, n) = (m', n') when gcds agree
ag_formula               (p + d(c), p + 2 d(c)) from the boundary loop c
advisory_ag_equal        AG comparison, a necessary condition only
bound_check              0 <= gcd <= (p + 2) / 2 over every admissible cut
"""
import logging
from collections import namedtuple
from multiprocessing import Pool

import numpy as np

from gentle_analysis.misctools.utils import (SurfaceError, InvariantViolation, gcd0, exgcd,
                                             inv_2x2_det1)
from gentle_analysis.misctools.homology import homology_of, class_coordinates
from gentle_analysis.triangulation.surface import profile, boundary_loop, build_quiver
from gentle_analysis.triangulation.grading import is_admissible_cut, enumerate_admissible_cuts
from gentle_analysis.triangulation.curves import chain_of, degree
from gentle_analysis.modeling.threads import ag_invariant

_default_log = logging.getLogger('gentle_analysis.invariants')

AdvisoryResult = namedtuple('AdvisoryResult', ['equal', 'necessary_condition_only'])
BoundReport = namedtuple('BoundReport', ['marked_points', 'bound', 'values', 'attained'])


def require_torus(surface):
    prof = profile(surface)
    if (prof.genus, prof.boundaries, prof.punctures) != (1, 1, 0):
        raise SurfaceError("unsupported profile: g={0}, b={1}, punctures={2}; need a torus "
                           "with one boundary component".format(prof.genus, prof.boundaries,
                                                                prof.punctures))
    return prof


def basis_chains(surface, quiver, a, b, h1=None):
    """chains of a and b after checking that their classes form a basis of H1"""
    require_torus(surface)
    h1 = h1 if h1 is not None else homology_of(quiver)
    chain_a, chain_b = chain_of(a, quiver), chain_of(b, quiver)
    class_coordinates(h1, chain_a, (chain_a, chain_b))
    return chain_a, chain_b


def gcd_invariant(surface, quiver, d, a, b, h1=None, log=_default_log):
    chain_a, chain_b = basis_chains(surface, quiver, a, b, h1=h1)
    if not is_admissible_cut(quiver, d):
        raise SurfaceError("non-admissible cut")
    da, db = chain_a.pair(d), chain_b.pair(d)
    log.debug("d(a) = {0}, d(b) = {1}".format(da, db))
    return gcd0(da, db)


def derived_equivalent_torus(first, second):
    """each argument is (surface, d, a, b)"""
    values = []
    for surface, d, a, b in (first, second):
        values.append(gcd_invariant(surface, build_quiver(surface), d, a, b))
    return values[0] == values[1]


def sl2_orbit_witness(m, n, m2, n2):
    """
    Witness M in SL(2, Z) with M (m, n)^T = (m2, n2)^T, through the common
    normal form (g, 0)^T, or None when the gcds differ.
    """
    g, E1 = exgcd(m, n)
    g2, E2 = exgcd(m2, n2)
    if g != g2:
        return None
    M = inv_2x2_det1(E2).dot(E1)
    if M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] != 1:
        raise InvariantViolation("orbit witness has determinant != 1")
    if list(M.dot(np.array([m, n], dtype=object))) != [m2, n2]:
        raise InvariantViolation("orbit witness does not map ({0}, {1}) to ({2}, {3})".format(m, n, m2, n2))
    return M


def ag_formula(surface, quiver, d):
    prof = require_torus(surface)
    if not is_admissible_cut(quiver, d):
        raise SurfaceError("non-admissible cut")
    dc = degree(boundary_loop(surface, 0), quiver, d)
    return (prof.marked_points + dc, prof.marked_points + 2 * dc)


def advisory_ag_equal(pres, other):
    return AdvisoryResult(ag_invariant(pres) == ag_invariant(other), True)


def _cut_gcd(args):
    chain_a, chain_b, d = args
    return gcd0(chain_a.pair(d), chain_b.pair(d))


def bound_check(surface, quiver, a, b, threads=0, log=_default_log):
    """
    gcd invariant of every admissible cut, in cut order, each checked
    against (p + 2) / 2.  threads > 0 spreads the cuts over a process pool.
    """
    prof = require_torus(surface)
    chain_a, chain_b = basis_chains(surface, quiver, a, b)
    jobs = [(chain_a, chain_b, d) for d in enumerate_admissible_cuts(quiver)]
    if threads > 0:
        pool = Pool(processes=threads)
        values = pool.map(_cut_gcd, jobs)
        pool.close()
        pool.join()
    else:
        values = [_cut_gcd(job) for job in jobs]
    p = prof.marked_points
    for d_job, v in zip(jobs, values):
        if not 0 <= 2 * v <= p + 2:
            raise InvariantViolation("gcd {0} of cut {1} exceeds (p+2)/2 = {2}".format(
                v, d_job[2].choice_string(quiver), (p + 2) / 2.0))
    log.debug("bound check: {0} cuts, attained {1}".format(len(values), sorted(set(values))))
    return BoundReport(p, (p + 2) / 2.0, values, sorted(set(values)))
