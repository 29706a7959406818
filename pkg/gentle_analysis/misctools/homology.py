#! /usr/bin/env python
"""
========
homology
========

The chain complex of a triangulation quiver

    Z^Q2 --d1--> Z^Q1 --d0--> Z^Q0,   d1(tau) = alpha + beta + gamma,
                                      d0(alpha) = t(alpha) - s(alpha)

with H0 and H1 computed exactly through Smith normal forms, and the
coordinates of cycle classes in a basis of two chosen curves.
"""
import logging

import numpy as np

from gentle_analysis.misctools.utils import (SurfaceError, InvariantViolation,
                                             smith_normal_form, snf_diagonal)
from gentle_analysis.triangulation.surface import profile

_default_log = logging.getLogger('gentle_analysis.homology')


def matmul(A, B):
    """object-dtype product that keeps the shape when an inner dimension is 0"""
    if A.shape[1] == 0:
        return np.zeros((A.shape[0],) + B.shape[1:], dtype=object)
    return A.dot(B)


def _dense(chain, size):
    if hasattr(chain, 'dense'):
        return chain.dense(size)
    v = np.array(chain, dtype=object).reshape(-1)
    if v.shape[0] != size:
        raise SurfaceError("malformed chain: {0} entries for {1} arrows".format(v.shape[0], size))
    return v


class ChainComplex(object):
    def __init__(self, d0, d1):
        self.d0 = d0
        self.d1 = d1
        if d0.shape[1] != d1.shape[0]:
            raise InvariantViolation("chain complex dimensions do not match")
        if any(x != 0 for x in matmul(d0, d1).flat):
            raise InvariantViolation("d0 d1 != 0")

    @property
    def sizes(self):
        """(#Q0, #Q1, #Q2)"""
        return self.d0.shape[0], self.d0.shape[1], self.d1.shape[1]


def chain_complex(quiver):
    m0, m1, m2 = len(quiver.vertices), quiver.n_arrows, len(quiver.internal_triangles)
    index = {v: i for i, v in enumerate(quiver.vertices)}
    d0 = np.zeros((m0, m1), dtype=object)
    for a in quiver.arrows:
        d0[index[a.target], a.id] += 1
        d0[index[a.source], a.id] -= 1
    d1 = np.zeros((m1, m2), dtype=object)
    for n, cycle in enumerate(quiver.internal_triangles):
        for a in cycle:
            d1[a, n] += 1
    return ChainComplex(d0, d1)


class H1Structure(object):
    """
    H1 of a chain complex with reduction data: a cycle x has kernel
    coordinates y = (V0inv x)[r0:], and its class is (Uc y)[rc:].
    """

    def __init__(self, complex_, rank, basis, h0_rank, h0_torsion,
                 V0inv, r0, Uc, rc, log=_default_log):
        self.complex = complex_
        self.rank = rank
        self.basis = basis
        self.h0_rank = h0_rank
        self.h0_torsion = h0_torsion
        self._V0inv = V0inv
        self._r0 = r0
        self._Uc = Uc
        self._rc = rc
        self.logger = log

    def is_cycle(self, chain):
        x = _dense(chain, self.complex.d0.shape[1])
        return all(v == 0 for v in matmul(self.complex.d0, x.reshape(-1, 1)).flat)

    def coordinates(self, chain):
        """class of a cycle in the internal basis of H1"""
        x = _dense(chain, self.complex.d0.shape[1])
        if not self.is_cycle(x):
            raise SurfaceError("not a cycle")
        y = matmul(self._V0inv, x.reshape(-1, 1))[self._r0:, :]
        z = matmul(self._Uc, y)[self._rc:, 0]
        return tuple(int(v) for v in z)


def homology(complex_, profile, log=_default_log):
    m0, m1, m2 = complex_.sizes

    _, D0, V0, _, V0inv = smith_normal_form(complex_.d0, return_inverses=True)
    diag0 = snf_diagonal(D0)
    r0 = sum(1 for d in diag0 if d != 0)
    h0_rank = m0 - r0
    h0_torsion = [d for d in diag0 if d > 1]
    if m0 and (h0_rank != 1 or h0_torsion):
        raise InvariantViolation("H0 is not Z: rank {0}, torsion {1}".format(h0_rank, h0_torsion))

    K = V0[:, r0:]
    C = matmul(V0inv, complex_.d1)[r0:, :]
    Uc, Dc, _, Ucinv, _ = smith_normal_form(C, return_inverses=True)
    diagc = snf_diagonal(Dc)
    rc = sum(1 for d in diagc if d != 0)
    if rc != m2:
        raise InvariantViolation("d1 is not injective: rank {0} on {1} triangles".format(rc, m2))
    torsion = [d for d in diagc if d > 1]
    if torsion:
        raise InvariantViolation("torsion in H1: {0}".format(torsion))

    rank = K.shape[1] - rc
    expected = 2 * profile.genus + profile.boundaries + profile.punctures - 1
    if m0 and rank != expected:
        raise InvariantViolation("H1 rank {0} != 2g+b-1 = {1}".format(rank, expected))
    basis = [matmul(K, Ucinv[:, [rc + l]])[:, 0] for l in range(rank)]
    log.debug("homology: H0 rank {0}, H1 rank {1} (d0 rank {2}, boundaries {3})".format(
        h0_rank, rank, r0, rc))
    return H1Structure(complex_, rank, basis, h0_rank, h0_torsion, V0inv, r0, Uc, rc, log=log)


def homology_of(quiver, log=_default_log):
    return homology(chain_complex(quiver), profile(quiver.surface), log=log)


def class_coordinates(h1, cycle, basis):
    """(lam, mu) with [cycle] = lam [a] + mu [b] for basis = (a, b)"""
    if h1.rank != 2:
        raise SurfaceError("unsupported profile: H1 has rank {0}, need 2".format(h1.rank))
    a, b = basis
    ca, cb = h1.coordinates(a), h1.coordinates(b)
    cz = h1.coordinates(cycle)
    det = ca[0] * cb[1] - ca[1] * cb[0]
    if abs(det) != 1:
        raise SurfaceError("not a basis: class determinant {0}".format(det))
    lam = (cz[0] * cb[1] - cz[1] * cb[0]) * det
    mu = (ca[0] * cz[1] - ca[1] * cz[0]) * det
    return lam, mu
