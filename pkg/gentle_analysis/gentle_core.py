#! /usr/bin/env python

"""
Contains

GradedAlgebra - a triangulated surface with a cut and a basis (a, b):
                gcd invariant, AG invariant, AG formula, cut algebra

CutSurvey - gcd, AG invariant and AG formula of every admissible cut,
            serially or over a process pool, one record per cut
"""

import logging
import time
from collections import namedtuple
from multiprocessing import Pool

from gentle_analysis.misctools.utils import SurfaceError, InvariantViolation, gcd0
from gentle_analysis.misctools.homology import homology_of
from gentle_analysis.triangulation.surface import build_quiver, boundary_loop
from gentle_analysis.triangulation.grading import (enumerate_admissible_cuts, is_admissible_cut,
                                                   cut_algebra)
from gentle_analysis.triangulation.curves import chain_of
from gentle_analysis.modeling.invariants import require_torus, basis_chains
from gentle_analysis.modeling.threads import ag_invariant

_default_log = logging.getLogger('gentle_analysis.core')

CutRecord = namedtuple('CutRecord', ['cut', 'gcd', 'ag', 'formula'])


class GradedAlgebra(object):
    def __init__(self, surface, degree, a=None, b=None, log=_default_log):
        """
        surface - TriangulatedSurface
        degree  - DegreeMap, an admissible cut of the surface quiver
        a, b    - CrossingWords whose classes form a basis of H1; needed for gcd()
        """
        self.surface = surface
        self.degree = degree
        self.a = a
        self.b = b
        self.logger = log
        self.quiver = build_quiver(surface, log=log)
        if not is_admissible_cut(self.quiver, degree):
            raise SurfaceError("non-admissible cut")
        self._h1 = None

    @property
    def h1(self):
        if self._h1 is None:
            self._h1 = homology_of(self.quiver, log=self.logger)
        return self._h1

    @property
    def cut(self):
        return self.degree.choice_string(self.quiver)

    def presentation(self):
        return cut_algebra(self.quiver, self.degree, log=self.logger)

    def degrees(self):
        """(d(a), d(b))"""
        if self.a is None or self.b is None:
            raise SurfaceError("the gcd invariant needs both curves a and b")
        chain_a, chain_b = basis_chains(self.surface, self.quiver, self.a, self.b, h1=self.h1)
        return chain_a.pair(self.degree), chain_b.pair(self.degree)

    def gcd(self):
        return gcd0(*self.degrees())

    def ag(self):
        return ag_invariant(self.presentation(), log=self.logger)

    def ag_formula(self):
        prof = require_torus(self.surface)
        dc = chain_of(boundary_loop(self.surface, 0), self.quiver).pair(self.degree)
        return (prof.marked_points + dc, prof.marked_points + 2 * dc)


def survey_single_cut(args):
    """
    One cut of a survey.  args is a dict with the quiver, the cut and the
    precomputed chains of a, b and the boundary loop c.
    """
    quiver, d = args["quiver"], args["degree"]
    chain_a, chain_b, chain_c = args["chains"]
    p = args["marked_points"]
    dc = chain_c.pair(d)
    return CutRecord(d.choice_string(quiver),
                     gcd0(chain_a.pair(d), chain_b.pair(d)),
                     ag_invariant(cut_algebra(quiver, d)),
                     (p + dc, p + 2 * dc))


class CutSurvey(object):
    def __init__(self, surface, a, b, **kwargs):
        """
        Invariants of every admissible cut of a torus with one boundary

        kwarg options:
        threads - worker processes for the cut loop; 0 (default) runs serially
        cross_check - default True, compare every AG invariant with the
                      AG formula and every gcd with the (p+2)/2 bound
        log - logger, default 'gentle_analysis.core'

        main method:
        * survey
        """
        self.surface = surface
        self.a = a
        self.b = b

        if "threads" in kwargs:
            self.threads = kwargs["threads"]
        else:
            self.threads = 0
        if "cross_check" in kwargs:
            self.cross_check = kwargs["cross_check"]
        else:
            self.cross_check = True
        if "log" in kwargs:
            self.logger = kwargs["log"]
        else:
            self.logger = _default_log

        self.profile = require_torus(surface)
        self.quiver = build_quiver(surface, log=self.logger)
        chain_a, chain_b = basis_chains(surface, self.quiver, a, b)
        chain_c = chain_of(boundary_loop(surface, 0), self.quiver)
        self.chains = (chain_a, chain_b, chain_c)
        self.records = []

    def survey(self):
        jobs = [{"quiver": self.quiver, "degree": d, "chains": self.chains,
                 "marked_points": self.profile.marked_points}
                for d in enumerate_admissible_cuts(self.quiver)]
        t0 = time.time()
        if self.threads > 0:
            pool = Pool(processes=self.threads)
            self.records = pool.map(survey_single_cut, jobs)
            pool.close()
            pool.join()
        else:
            self.records = [survey_single_cut(job) for job in jobs]
        self.logger.info("surveyed {0} cuts with {1} threads in {2:.2f}s".format(
            len(self.records), self.threads, time.time() - t0))
        if self.cross_check:
            self.check()
        return self.records

    def check(self):
        p = self.profile.marked_points
        for rec in self.records:
            if not 0 <= 2 * rec.gcd <= p + 2:
                raise InvariantViolation("cut {0}: gcd {1} exceeds (p+2)/2".format(rec.cut, rec.gcd))
            if dict(rec.ag) != {rec.formula: 1}:
                raise InvariantViolation("cut {0}: AG invariant {1} disagrees with formula {2}".format(
                    rec.cut, dict(rec.ag), rec.formula))

    @property
    def attained(self):
        return sorted(set(rec.gcd for rec in self.records))
