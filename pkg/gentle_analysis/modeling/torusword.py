#! /usr/bin/env python
"""
=========
torusword
=========

Word calculus on the once-punctured torus.  A loop is an even-length word
in three involutions i1, i2, i3 (the letters 1, 2, 3 are the three arcs of
the ideal triangulation it crosses); free homotopy is cyclic equivalence
by even rotations.

A word is pushed into the Markoff quiver lattice with the six arrows

    a12, a23, a31   (first triangle)    a'12, a'23, a'31   (second triangle)

in that order, under the convention a_kl = -a_lk.  Letter pairs at even
offsets cross the first triangle, pairs at odd offsets the second.

The four local moves rewrite a loop into a homotopic one; their degree
invariance is the independent check on degree linearity.
"""
import logging
import itertools

import numpy as np

from gentle_analysis.misctools.utils import SurfaceError
from gentle_analysis.triangulation.surface import (TriangulatedSurface, CrossingWord, Step,
                                                   ARC)

_default_log = logging.getLogger('gentle_analysis.torusword')

LETTERS = (1, 2, 3)
ARROW_NAMES = ('a12', 'a23', 'a31', "a'12", "a'23", "a'31")
_ARROW_INDEX = {(1, 2): 0, (2, 3): 1, (3, 1): 2}
_PHI = {1: (0, 0), 2: (0, 1), 3: (1, 1)}

# patterns and replacements in role indices (1 -> i1, 2 -> i2, 3 -> i3)
MOVES = {
    'M33': ((1, 2, 1, 3, 1), (1, 3, 1, 2, 1)),
    'M42': ((1, 2, 1, 3, 2, 3), (1, 3, 1, 3)),
    'M51': ((1, 2, 1, 3, 2, 1, 2), (1, 3, 2)),
    'M60': ((2, 1, 3, 2, 1, 3), ()),
}


def parse_word(text):
    """digit string such as '121312' to a word"""
    word = tuple(int(c) for c in str(text).strip() if not c.isspace())
    if any(c not in LETTERS for c in word):
        raise SurfaceError("bad word '{0}': letters must be 1, 2 or 3".format(text))
    return word


def word_string(word):
    return ''.join(str(c) for c in word)


def reduce_word(word):
    """cancel adjacent equal letters until none are left"""
    out = []
    for c in word:
        if c not in LETTERS:
            raise SurfaceError("bad letter {0}".format(c))
        if out and out[-1] == c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def is_reduced(word):
    return all(word[k] != word[k + 1] for k in range(len(word) - 1))


def cyclic_reduce(word):
    if len(word) % 2:
        raise SurfaceError("odd length: {0} letters".format(len(word)))
    w = reduce_word(word)
    while len(w) >= 2 and w[0] == w[-1]:
        w = reduce_word(w[2:] + w[:2])
    return w


def is_cyclically_reduced(word):
    return is_reduced(word) and not (len(word) >= 2 and word[0] == word[-1])


def _check_loop(word):
    if len(word) % 2:
        raise SurfaceError("odd length: {0} letters".format(len(word)))
    if not is_cyclically_reduced(word):
        raise SurfaceError("word {0} is not cyclically reduced".format(word_string(word)))


class MarkoffChain(object):
    """integer coefficients on (a12, a23, a31, a'12, a'23, a'31)"""

    def __init__(self, coefficients=None):
        if coefficients is None:
            coefficients = np.zeros(6, dtype=int)
        self.coefficients = np.array(coefficients, dtype=int).reshape(6)

    @classmethod
    def arrow(cls, k, l, primed=False):
        """the signed arrow between letters k and l"""
        if (k, l) in _ARROW_INDEX:
            idx, sign = _ARROW_INDEX[(k, l)], 1
        elif (l, k) in _ARROW_INDEX:
            idx, sign = _ARROW_INDEX[(l, k)], -1
        else:
            raise SurfaceError("no arrow between equal letters {0}, {1}".format(k, l))
        v = np.zeros(6, dtype=int)
        v[idx + 3 * int(primed)] = sign
        return cls(v)

    def __add__(self, other):
        return MarkoffChain(self.coefficients + other.coefficients)

    def __sub__(self, other):
        return MarkoffChain(self.coefficients - other.coefficients)

    def __eq__(self, other):
        return isinstance(other, MarkoffChain) and bool(np.all(self.coefficients == other.coefficients))

    def __hash__(self):
        return hash(tuple(self.coefficients))

    def __repr__(self):
        return "MarkoffChain({0})".format(list(self.coefficients))

    def pair(self, d):
        return int(np.dot(self.coefficients, d.coefficients))


class MarkoffDegree(object):
    """degree-1 map on the Markoff quiver: each triangle's angles sum to 1"""

    def __init__(self, coefficients):
        self.coefficients = np.array(coefficients, dtype=int).reshape(6)
        if self.coefficients[:3].sum() != 1 or self.coefficients[3:].sum() != 1:
            raise SurfaceError("not a degree-1 map: triangle sums {0}, {1}".format(
                self.coefficients[:3].sum(), self.coefficients[3:].sum()))

    def __repr__(self):
        return "MarkoffDegree({0})".format(list(self.coefficients))


def random_markoff_degree(rng, low=-3, high=3):
    """uniform pair of entries per triangle, third forced, resampled until in range"""
    values = []
    for _ in range(2):
        while True:
            x, y = rng.randint(low, high + 1, size=2)
            z = 1 - x - y
            if low <= z <= high:
                break
        values.extend([int(x), int(y), int(z)])
    return MarkoffDegree(values)


def chain_A(word):
    if len(word) % 2:
        raise SurfaceError("odd length: {0} letters".format(len(word)))
    total = MarkoffChain()
    p = len(word) // 2
    for k in range(p):
        total = total + MarkoffChain.arrow(word[2 * k], word[2 * k + 1])
    for k in range(p - 1):
        total = total + MarkoffChain.arrow(word[2 * k + 1], word[2 * k + 2], primed=True)
    return total


def chain_Acyc(word):
    total = chain_A(word)
    if word:
        total = total + MarkoffChain.arrow(word[-1], word[0], primed=True)
    return total


def abelianize(word):
    """(lam, mu) with i2i3 -> (1, 0), i1i2 -> (0, 1), i1i3 -> (1, 1)"""
    if len(word) % 2:
        raise SurfaceError("odd length: {0} letters".format(len(word)))
    lam = mu = 0
    for k in range(0, len(word), 2):
        (x0, y0), (x1, y1) = _PHI[word[k]], _PHI[word[k + 1]]
        lam += x1 - x0
        mu += y1 - y0
    return lam, mu


def normal_form_word(lam, mu):
    """cyclic reduction of (i2 i3)^lam (i1 i2)^mu"""
    if lam == 0 and mu == 0:
        raise SurfaceError("(0, 0) has no normal-form loop")
    a = (2, 3) if lam > 0 else (3, 2)
    b = (1, 2) if mu > 0 else (2, 1)
    return cyclic_reduce(a * abs(lam) + b * abs(mu))


def degree_word(word, d):
    if not word:
        raise SurfaceError("empty word")
    _check_loop(word)
    return chain_Acyc(word).pair(d)


def markoff_surface():
    """ideal triangulation of the once-punctured torus: (1,2,3) glued to (1,2,3)"""
    edges = [(e, ARC) for e in LETTERS]
    return TriangulatedSurface(edges, [(0, (1, 2, 3)), (1, (1, 2, 3))], punctured=True)


def word_to_curve(word):
    """crossing word on markoff_surface(); step k lies in triangle k % 2"""
    if not word:
        raise SurfaceError("empty word")
    _check_loop(word)
    n = len(word)
    return CrossingWord([Step(k % 2, word[k] - 1, word[(k + 1) % n] - 1) for k in range(n)])


def _sign(roles):
    inversions = sum(1 for i, j in itertools.combinations(range(3), 2) if roles[i] > roles[j])
    return -1 if inversions % 2 else 1


def _turn(x, v, y):
    return 1 if (x, v, y) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


def _rebuild(replacement, complement, start):
    seq = tuple(replacement) + tuple(complement)
    if start % 2:
        seq = seq[-1:] + seq[:-1]
    return cyclic_reduce(seq)


def apply_move(word, move, position, roles=(1, 2, 3), v_length=None, log=_default_log):
    """
    Rewrite the cyclic word at `position` with one of M33, M42, M51, M60,
    the letter roles (i1, i2, i3) given by `roles`.  For M60 `position` is
    the start of the six-letter core and v is grown outward to maximal
    length; v_length, when given, must be that maximum.
    """
    word = tuple(word)
    _check_loop(word)
    if move not in MOVES:
        raise SurfaceError("unknown move '{0}'".format(move))
    roles = tuple(int(r) for r in roles)
    if sorted(roles) != list(LETTERS):
        raise SurfaceError("roles {0} are not a permutation of 1, 2, 3".format(roles))
    pattern, replacement = MOVES[move]
    pattern = [roles[k - 1] for k in pattern]
    replacement = [roles[k - 1] for k in replacement]
    n = len(word)
    c = int(position) % n if n else 0
    if len(pattern) > n or [word[(c + k) % n] for k in range(len(pattern))] != pattern:
        raise SurfaceError("pattern mismatch: {0} does not match at {1}".format(move, position))

    if move != 'M60':
        L = len(pattern)
        complement = [word[(c + L + k) % n] for k in range(n - L)]
        new = _rebuild(replacement, complement, c)
    else:
        m = 0
        while n - 6 - 2 * m >= 2 and word[(c - 1 - m) % n] == word[(c + 6 + m) % n]:
            m += 1
        if m == 0 or n - 6 - 2 * m < 2:
            raise SurfaceError("pattern mismatch: M60 needs a nonempty v and letters around it")
        if v_length is not None and v_length != m:
            if v_length < m:
                raise SurfaceError("non-maximal v: length {0}, maximal {1}".format(v_length, m))
            raise SurfaceError("pattern mismatch: v of length {0} does not fit".format(v_length))
        x, v1, y = word[(c - 1 - m) % n], word[(c - m) % n], word[(c + 6 + m) % n]
        if _turn(x, v1, y) != _sign(roles):
            raise SurfaceError("pattern mismatch: letters {0} around v turn against roles {1}".format(
                (x, v1, y), roles))
        rest = n - 6 - 2 * m
        complement = [word[(c + 6 + m + k) % n] for k in range(rest)]
        new = _rebuild((), complement, c - m)
    log.debug("{0}{1} at {2}: {3} -> {4}".format(move, roles, position, word_string(word),
                                                  word_string(new)))
    return new
