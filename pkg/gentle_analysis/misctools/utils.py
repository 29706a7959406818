#! /usr/bin/env python
"""
=====
utils
=====

Shared helpers for the gentle_analysis package:

  * error classes (SurfaceError for bad input, InvariantViolation for
    internal consistency failures)
  * logging setup used by the command line front end
  * exact integer linear algebra: extended Euclid, Smith normal form,
    Bareiss determinant

All matrices are numpy arrays with dtype=object so entries are Python ints
and never overflow.
"""
import logging
import math
import sys

import numpy as np


class SurfaceError(ValueError):
    """Bad input: malformed documents, invalid surfaces, cuts, curves or words."""


class InvariantViolation(AssertionError):
    """An identity that must hold for every valid input failed."""


LOG_FORMAT = "[%(levelname)s]: %(message)s"


def configure_logging(level=logging.WARNING, stream=sys.stderr):
    """Attach one formatted stream handler to the package logger."""
    log = logging.getLogger('gentle_analysis')
    log.setLevel(level)
    for handler in list(log.handlers):
        log.removeHandler(handler)
    sh = logging.StreamHandler(stream=stream)
    sh.setLevel(level)
    sh.setFormatter(logging.Formatter(LOG_FORMAT))
    log.addHandler(sh)
    return log


def gcd0(m, n):
    """gcd on absolute values with gcd(0, n) = |n| and gcd(0, 0) = 0"""
    return math.gcd(abs(int(m)), abs(int(n)))


def intmatrix(rows, shape=None):
    """
    Object-dtype integer matrix.  An explicit shape is needed for empty
    matrices, since np.array([]) loses the column count.
    """
    M = np.array(rows, dtype=object)
    if shape is not None:
        M = M.reshape(shape)
    if M.ndim != 2:
        raise SurfaceError("malformed matrix: expected 2 dimensions, got {0}".format(M.ndim))
    return M


def identity(n):
    M = np.zeros((n, n), dtype=object)
    for i in range(n):
        M[i, i] = 1
    return M


def exgcd(a, b):
    """
    Extended Euclid.

    Returns (g, E) with E a 2x2 object matrix of determinant 1 such that
    E @ [a, b] = [g, 0] and g = gcd(|a|, |b|) >= 0.  For a = b = 0, E is the
    identity.
    """
    a, b = int(a), int(b)
    if a != 0 and b % a == 0:
        # a | b: keep E[0, 1] = 0 so clearing never mixes a finished pivot
        s = 1 if a > 0 else -1
        return abs(a), np.array([[s, 0], [-s * (b // a), s]], dtype=object)
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    flips = 0
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
        flips += 1
    # each step has determinant -1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
        flips += 1
    if flips % 2:
        x1, y1 = -x1, -y1
    return r0, np.array([[x0, y0], [x1, y1]], dtype=object)


def inv_2x2_det1(M):
    """Matrix inverse of a 2x2 matrix with determinant 1."""
    if M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] != 1:
        raise InvariantViolation("inv_2x2_det1: determinant is not 1")
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]], dtype=object)


def int_det(M):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    A = [[int(x) for x in row] for row in np.asarray(M, dtype=object)]
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise SurfaceError("int_det: matrix is not square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


class _Reducer(object):
    """
    Bookkeeping for smith_normal_form: every row operation on D is also
    applied to U (and its inverse to Uinv), every column operation to V
    (and Vinv), so that U @ M @ V == D holds after each step.
    """

    def __init__(self, M):
        m, n = M.shape
        self.D = M.copy()
        self.U, self.Uinv = identity(m), identity(m)
        self.V, self.Vinv = identity(n), identity(n)

    def rows(self, i, k, E):
        Einv = inv_2x2_det1(E)
        for A in (self.D, self.U):
            A[[i, k], :] = E.dot(A[[i, k], :])
        self.Uinv[:, [i, k]] = self.Uinv[:, [i, k]].dot(Einv)

    def cols(self, i, k, E):
        R = E.T
        Rinv = inv_2x2_det1(E).T
        for A in (self.D, self.V):
            A[:, [i, k]] = A[:, [i, k]].dot(R)
        self.Vinv[[i, k], :] = Rinv.dot(self.Vinv[[i, k], :])

    def swap_rows(self, i, k):
        if i != k:
            for A in (self.D, self.U):
                A[[i, k], :] = A[[k, i], :]
            self.Uinv[:, [i, k]] = self.Uinv[:, [k, i]]

    def swap_cols(self, i, k):
        if i != k:
            for A in (self.D, self.V):
                A[:, [i, k]] = A[:, [k, i]]
            self.Vinv[[i, k], :] = self.Vinv[[k, i], :]

    def add_col(self, src, dst):
        # column dst += column src
        for A in (self.D, self.V):
            A[:, dst] = A[:, dst] + A[:, src]
        self.Vinv[src, :] = self.Vinv[src, :] - self.Vinv[dst, :]

    def negate_row(self, i):
        for A in (self.D, self.U):
            A[i, :] = -A[i, :]
        self.Uinv[:, i] = -self.Uinv[:, i]

    def clear(self, i):
        """Zero row i and column i outside the pivot (i, i)."""
        m, n = self.D.shape
        while True:
            for k in range(i + 1, m):
                if self.D[k, i] != 0:
                    _, E = exgcd(self.D[i, i], self.D[k, i])
                    self.rows(i, k, E)
            for k in range(i + 1, n):
                if self.D[i, k] != 0:
                    _, E = exgcd(self.D[i, i], self.D[i, k])
                    self.cols(i, k, E)
            if all(self.D[k, i] == 0 for k in range(i + 1, m)):
                return


def smith_normal_form(M, return_inverses=False):
    """
    Smith normal form of an integer matrix.

    Returns (U, D, V), or (U, D, V, Uinv, Vinv) with return_inverses, such
    that U @ M @ V == D, U and V are unimodular, D is diagonal with
    nonnegative entries d_0 | d_1 | ... and the zero entries last.

    Row and column clearing by 2x2 extended-Euclid steps, then a
    divisibility pass: when d_i does not divide d_j, column j is added to
    column i and position i is cleared again, which replaces d_i by
    gcd(d_i, d_j).
    """
    M = np.array(M, dtype=object)
    if M.ndim != 2:
        raise SurfaceError("smith_normal_form: expected a 2-dimensional matrix")
    red = _Reducer(M)
    m, n = M.shape
    rank = 0
    for i in range(min(m, n)):
        nonzero = [(abs(red.D[r, c]), r, c)
                   for r in range(i, m) for c in range(i, n) if red.D[r, c] != 0]
        if not nonzero:
            break
        _, r, c = min(nonzero)
        red.swap_rows(i, r)
        red.swap_cols(i, c)
        red.clear(i)
        rank += 1

    for i in range(rank):
        for j in range(i + 1, rank):
            if red.D[j, j] % red.D[i, i] != 0:
                red.add_col(j, i)
                red.clear(i)
        if red.D[i, i] < 0:
            red.negate_row(i)

    if return_inverses:
        return red.U, red.D, red.V, red.Uinv, red.Vinv
    return red.U, red.D, red.V


def snf_diagonal(D):
    """Diagonal entries of a Smith form as Python ints."""
    return [int(D[i, i]) for i in range(min(D.shape))]


def snf_rank(D):
    return sum(1 for d in snf_diagonal(D) if d != 0)
