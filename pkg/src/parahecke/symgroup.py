"""Symmetric group combinatorics in one-line notation.

Conventions: a permutation ``w`` of {1..n} is the tuple ``(w(1), ..., w(n))``
and products compose right to left, ``(w*v)(i) = w(v(i))``.  The simple
reflection ``s_i`` swaps i and i+1, so ``s_i * w`` swaps the *values* i and
i+1 in the one-line word while ``w * s_i`` swaps the *positions* i and i+1.

Hot loops elsewhere in the package work on plain tuples and the module
level helpers (``length``, ``ldes``, ``rdes``, ``lmul``, ``rmul``); the
``Permutation`` class is a thin tuple subclass for the public API.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .coeffs import LaurentPoly

__all__ = [
    "Permutation", "Composition", "SizeMismatch",
    "length", "ldes", "rdes", "lmul", "rmul", "compose", "inverse",
    "identity", "simple", "from_word", "reduced_word", "bruhat_leq",
    "all_perms", "subset_J", "runs", "longest_element", "parabolic_elements",
    "poincare", "coset_predicates",
]


class SizeMismatch(ValueError):
    """Two permutations (or a permutation and a subset) live in different S_n."""


# ---------------------------------------------------------------------------
# tuple-level helpers

@lru_cache(maxsize=None)
def length(w):
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


@lru_cache(maxsize=None)
def rdes(w):
    """Right descent set {i : w(i) > w(i+1)}."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


@lru_cache(maxsize=None)
def ldes(w):
    """Left descent set: i such that i+1 appears before i."""
    pos = [0] * (len(w) + 1)
    for k, v in enumerate(w):
        pos[v] = k
    return frozenset(i for i in range(1, len(w)) if pos[i + 1] < pos[i])


def lmul(i, w):
    """s_i * w: swap the values i and i+1."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def rmul(w, i):
    """w * s_i: swap positions i and i+1."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def compose(w, v):
    if len(w) != len(v):
        raise SizeMismatch("cannot multiply permutations of sizes %d and %d" % (len(w), len(v)))
    return tuple(w[x - 1] for x in v)


@lru_cache(maxsize=None)
def inverse(w):
    inv = [0] * len(w)
    for k, v in enumerate(w):
        inv[v - 1] = k + 1
    return tuple(inv)


def identity(n):
    return tuple(range(1, n + 1))


def simple(i, n):
    if not 1 <= i < n:
        raise ValueError("generator s_%d does not exist in S_%d" % (i, n))
    return rmul(identity(n), i)


def from_word(word, n):
    """Product s_{i1} s_{i2} ... s_{ik} as a tuple."""
    w = identity(n)
    for i in reversed(word):
        if not 1 <= i < n:
            raise ValueError("generator s_%d does not exist in S_%d" % (i, n))
        w = lmul(i, w)
    return w


@lru_cache(maxsize=None)
def reduced_word(w):
    """Reduced word, built by repeatedly peeling off the smallest left descent."""
    word = []
    w = tuple(w)
    while True:
        d = ldes(w)
        if not d:
            return tuple(word)
        i = min(d)
        word.append(i)
        w = lmul(i, w)


def bruhat_leq(x, y):
    """Strong Bruhat order by the sorted-prefix criterion."""
    if len(x) != len(y):
        raise SizeMismatch("Bruhat comparison across different n")
    if length(x) > length(y):
        return False
    for k in range(1, len(x)):
        a = sorted(x[:k])
        b = sorted(y[:k])
        if any(ai > bi for ai, bi in zip(a, b)):
            return False
    return True


def all_perms(n):
    """All of S_n in lexicographic order of one-line notation."""
    return list(itertools.permutations(range(1, n + 1)))


# ---------------------------------------------------------------------------
# parabolic subgroups

def subset_J(parts):
    """J(mu): all generators except the partial sums of mu."""
    parts = tuple(parts)
    n = sum(parts)
    cuts = set(itertools.accumulate(parts[:-1]))
    return frozenset(i for i in range(1, n) if i not in cuts)


def runs(J):
    """Maximal intervals [a, b] of consecutive generator indices in J."""
    out = []
    for i in sorted(J):
        if out and out[-1][1] == i - 1:
            out[-1][1] = i
        else:
            out.append([i, i])
    return [tuple(r) for r in out]


@lru_cache(maxsize=None)
def _longest(n, J):
    w = list(range(1, n + 1))
    for a, b in runs(J):
        w[a - 1:b + 1] = reversed(w[a - 1:b + 1])
    return tuple(w)


def longest_element(n, J=None):
    """Longest element of the parabolic subgroup W_J (of S_n when J is None)."""
    J = frozenset(range(1, n)) if J is None else frozenset(J)
    if any(not 1 <= i < n for i in J):
        raise ValueError("J must lie in {1..n-1}")
    return _longest(n, J)


@lru_cache(maxsize=None)
def _parabolic(n, J):
    blocks = []
    start = 1
    for a, b in runs(J):
        blocks.extend([(k,) for k in range(start, a)])
        blocks.append(tuple(range(a, b + 2)))
        start = b + 2
    blocks.extend([(k,) for k in range(start, n + 1)])
    elems = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        elems.append(tuple(itertools.chain.from_iterable(choice)))
    elems.sort()
    return tuple(elems)


def parabolic_elements(n, J):
    """All elements of W_J, lexicographically ordered."""
    return _parabolic(n, frozenset(J))


@lru_cache(maxsize=None)
def _poincare(n, J):
    acc = {}
    for w in _parabolic(n, J):
        k = 2 * length(w)
        acc[k] = acc.get(k, 0) + 1
    return LaurentPoly(acc)


def poincare(n, J=None):
    """W_J(q^2) = sum over W_J of q^{2 l(w)}."""
    J = frozenset(range(1, n)) if J is None else frozenset(J)
    return _poincare(n, J)


def coset_predicates(w, J):
    """Descent-set tests for the six coset-representative families."""
    w = tuple(w)
    J = frozenset(J)
    L, R = ldes(w), rdes(w)
    return {
        "inXJJ": not (L & J) and not (R & J),
        "inXtildeJJ": J <= (L & R),
        "inXJ": not (R & J),
        "inXtildeJ": J <= R,
        "inXJinv": not (L & J),
        "inXtildeJinv": J <= L,
    }


# ---------------------------------------------------------------------------
# public value types

class Permutation(tuple):
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ()

    def __new__(cls, oneline):
        t = tuple(int(v) for v in oneline)
        if sorted(t) != list(range(1, len(t) + 1)):
            raise ValueError("%r is not a permutation of 1..%d" % (t, len(t)))
        return super().__new__(cls, t)

    @classmethod
    def identity(cls, n):
        return cls(identity(n))

    @classmethod
    def simple(cls, i, n):
        return cls(simple(i, n))

    @classmethod
    def from_word(cls, word, n):
        return cls(from_word(word, n))

    @property
    def n(self):
        return len(self)

    def length(self):
        return length(tuple(self))

    def left_descents(self):
        return ldes(tuple(self))

    def right_descents(self):
        return rdes(tuple(self))

    def inverse(self):
        return Permutation(inverse(tuple(self)))

    def reduced_word(self):
        return list(reduced_word(tuple(self)))

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return Permutation(compose(tuple(self), tuple(other)))

    def __rmul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return Permutation(compose(tuple(other), tuple(self)))

    def __call__(self, i):
        return self[i - 1]

    def to_json(self):
        return list(self)

    def __str__(self):
        return "".join(map(str, self)) if len(self) < 10 else " ".join(map(str, self))

    def __repr__(self):
        return "Permutation(%s)" % str(self)


class Composition(tuple):
    """A composition mu = (mu_1, ..., mu_d) of n with positive parts."""

    __slots__ = ()

    def __new__(cls, parts):
        if isinstance(parts, str):
            parts = [p for p in parts.replace(" ", "").split(",") if p]
        t = tuple(int(p) for p in parts)
        if not t or any(p < 1 for p in t):
            raise ValueError("a composition needs at least one part, all parts positive: %r" % (t,))
        return super().__new__(cls, t)

    @property
    def n(self):
        return sum(self)

    @property
    def d(self):
        return len(self)

    @property
    def J(self):
        return subset_J(self)

    def blocks(self):
        """Position blocks [(1..mu_1), (mu_1+1 .. mu_1+mu_2), ...]."""
        out, start = [], 1
        for p in self:
            out.append(tuple(range(start, start + p)))
            start += p
        return out

    def block_of(self):
        """Map position -> block index (0-based)."""
        m = {}
        for a, b in enumerate(self.blocks()):
            for i in b:
                m[i] = a
        return m

    def to_json(self):
        return list(self)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return "Composition(%s)" % str(self)
