"""Partitions, tableaux, Robinson-Schensted and the two RSK maps on double cosets.

Tableaux are tuples of row tuples (English convention, first row on top).
A standard tableau has a descent at i when i+1 sits in a strictly lower
row than i.

The bar map relabels a standard tableau with entries 1..n by blocks of
mu.  The first mu_1 integers become 1, the next mu_2 become 2, and so on.
The result is semistandard whenever no descent of the standard tableau
falls in J(mu); the converse fails (1235/46 for mu = (2,2,2) has descent 3
and still relabels to 1123/23).  Going back, a semistandard tableau of
weight mu has a unique standard lift with J-free descents.  Entries equal
to a are filled with the a-th block from left to right.

On a double coset D:

    rsk_min(D) = (bar P(r-(D)), bar Q(r-(D)))
    rsk_max(D) = (bar P(r+(D))^t, bar Q(r+(D))^t)
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .symgroup import Composition, subset_J

__all__ = [
    "Partition", "Tableau", "rs", "rs_inverse", "bar_map", "j_free", "standard_lift",
    "rsk_min", "rsk_max", "dominance", "mu_ord", "kostka", "sstab", "stab",
    "predicted_cells", "cellular_index", "cellular_pair", "shape_of",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive parts."""

    __slots__ = ()

    def __new__(cls, parts):
        t = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in t) or any(a < b for a, b in zip(t, t[1:])):
            raise ValueError("%r is not a partition" % (t,))
        return super().__new__(cls, t)

    @property
    def size(self):
        return sum(self)

    def conjugate(self):
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def rows(self):
        return len(self)

    def to_json(self):
        return list(self)


def dominance(lam, nu):
    """lam >= nu in dominance order (partial sums of lam dominate those of nu)."""
    lam, nu = Partition(lam), Partition(nu)
    if lam.size != nu.size:
        raise ValueError("dominance needs partitions of the same size")
    a = b = 0
    for i in range(max(len(lam), len(nu))):
        a += lam[i] if i < len(lam) else 0
        b += nu[i] if i < len(nu) else 0
        if a < b:
            return False
    return True


def mu_ord(mu):
    return Partition(sorted(mu, reverse=True))


def partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield Partition((k,) + tuple(rest))


class Tableau(tuple):
    """Rows of a (semi)standard tableau."""

    __slots__ = ()

    def __new__(cls, rows):
        t = tuple(tuple(int(v) for v in r) for r in rows if len(r))
        return super().__new__(cls, t)

    @property
    def shape(self):
        return Partition(len(r) for r in self)

    def entries(self):
        return [v for r in self for v in r]

    def transpose(self):
        if not self:
            return self
        return Tableau(tuple(r[j] for r in self if j < len(r)) for j in range(len(self[0])))

    def is_standard(self):
        if sorted(self.entries()) != list(range(1, len(self.entries()) + 1)):
            return False
        return self._strict_rows() and self._strict_cols()

    def is_semistandard(self):
        rows_ok = all(a <= b for r in self for a, b in zip(r, r[1:]))
        return rows_ok and self._strict_cols()

    def _strict_rows(self):
        return all(a < b for r in self for a, b in zip(r, r[1:]))

    def _strict_cols(self):
        for i in range(1, len(self)):
            for j, v in enumerate(self[i]):
                if j >= len(self[i - 1]) or self[i - 1][j] >= v:
                    return False
        return True

    def row_of(self):
        return {v: i for i, r in enumerate(self) for v in r}

    def descents(self):
        """{i : i+1 lies in a strictly lower row than i} (standard tableaux)."""
        pos = self.row_of()
        n = len(pos)
        return frozenset(i for i in range(1, n) if pos[i + 1] > pos[i])

    def weight(self, d):
        cnt = [0] * d
        for v in self.entries():
            cnt[v - 1] += 1
        return tuple(cnt)

    def to_json(self):
        return [list(r) for r in self]

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self)


# ---------------------------------------------------------------------------
# Robinson-Schensted

def _insert(rows, v):
    """Row-insert v; returns the row index where the shape grew."""
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x > v:
                row[j], v = v, x
                break
        else:
            row.append(v)
            return i
    rows.append([v])
    return len(rows) - 1


@lru_cache(maxsize=None)
def _rs(w):
    P, Q = [], []
    for k, v in enumerate(w, start=1):
        i = _insert(P, v)
        if i == len(Q):
            Q.append([])
        Q[i].append(k)
    return Tableau(P), Tableau(Q)


def rs(w):
    """(P(w), Q(w)) by row insertion of w(1), ..., w(n); Q records positions."""
    return _rs(tuple(w))


def rs_inverse(P, Q):
    """The permutation with RS pair (P, Q)."""
    P = [list(r) for r in P]
    Q = [list(r) for r in Q]
    n = sum(len(r) for r in P)
    w = [0] * n
    pos = {v: (i, j) for i, r in enumerate(Q) for j, v in enumerate(r)}
    for k in range(n, 0, -1):
        i, j = pos[k]
        if j != len(P[i]) - 1 or j != len(Q[i]) - 1:
            raise ValueError("P and Q have different shapes")
        v = P[i].pop()
        Q[i].pop()
        for r in range(i - 1, -1, -1):
            row = P[r]
            # largest entry smaller than v is bumped out
            jj = max(t for t, x in enumerate(row) if x < v)
            row[jj], v = v, row[jj]
        w[k - 1] = v
        if not P[i]:
            P.pop(i)
            Q.pop(i)
    return tuple(w)


def shape_of(w):
    return rs(w)[0].shape


# ---------------------------------------------------------------------------
# bar map and its lift

def _labels(mu):
    lab, k = {}, 1
    for a, p in enumerate(mu, start=1):
        for _ in range(p):
            lab[k] = a
            k += 1
    return lab


def bar_map(t, mu):
    """Relabel by blocks of mu; None when the result is not semistandard."""
    mu = Composition(mu)
    t = Tableau(t)
    lab = _labels(mu)
    out = Tableau(tuple(lab[v] for v in r) for r in t)
    return out if out.is_semistandard() else None


def j_free(t, mu):
    """True when no descent of the standard tableau t lies in J(mu)."""
    return not (Tableau(t).descents() & subset_J(Composition(mu)))


def standard_lift(S, mu):
    """The unique standard tableau with J-free descents whose bar image is S."""
    mu = Composition(mu)
    S = Tableau(S)
    if S.weight(len(mu)) != tuple(mu) or not S.is_semistandard():
        raise ValueError("%s is not semistandard of weight %s" % (S, mu))
    start = {a: s for a, s in zip(range(1, len(mu) + 1),
                                  itertools.accumulate((1,) + tuple(mu[:-1])))}
    cells = sorted(((v, j, i) for i, r in enumerate(S) for j, v in enumerate(r)))
    rows = [list(r) for r in S]
    nxt = dict(start)
    for v, j, i in cells:
        rows[i][j] = nxt[v]
        nxt[v] += 1
    return Tableau(rows)


# ---------------------------------------------------------------------------
# RSK on double cosets

def rsk_min(D):
    P, Q = rs(D.rmin)
    bP, bQ = bar_map(P, D.mu), bar_map(Q, D.mu)
    if bP is None or bQ is None:
        raise AssertionError("minimal representative gave a non-semistandard image")
    return bP, bQ


def rsk_max(D):
    P, Q = rs(D.rplus)
    bP, bQ = bar_map(P.transpose(), D.mu), bar_map(Q.transpose(), D.mu)
    if bP is None or bQ is None:
        raise AssertionError("maximal representative gave a non-semistandard image")
    return bP, bQ


# ---------------------------------------------------------------------------
# enumeration

def sstab(lam, mu):
    """All semistandard tableaux of shape lam and weight mu."""
    lam = Partition(lam)
    mu = Composition(mu)
    out = []

    def place(a, rows):
        # rows: current filling as a list of lists; add all a's as a horizontal strip
        if a > len(mu):
            if [len(r) for r in rows] == list(lam):
                out.append(Tableau(rows))
            return
        cur = [len(r) for r in rows] + [0] * (len(lam) - len(rows))
        for strip in _horizontal_strips(cur, lam, mu[a - 1]):
            new = [list(r) for r in rows] + [[] for _ in range(len(lam) - len(rows))]
            for i, k in enumerate(strip):
                new[i].extend([a] * k)
            place(a + 1, [r for r in new if r])

    place(1, [])
    return out


def _horizontal_strips(cur, lam, total):
    """Ways to add `total` boxes, at most one per column, staying inside lam."""
    m = len(lam)

    def rec(i, left):
        if i == m:
            if left == 0:
                yield ()
            return
        cap = lam[i] - cur[i]
        if i > 0:
            cap = min(cap, cur[i - 1] - cur[i])
        for k in range(min(cap, left) + 1):
            for rest in rec(i + 1, left - k):
                yield (k,) + rest

    return list(rec(0, total))


def stab(lam):
    """All standard tableaux of shape lam."""
    lam = Partition(lam)
    return sstab(lam, (1,) * lam.size)


def kostka(lam, mu):
    """Number of semistandard tableaux of shape lam and weight mu."""
    lam = Partition(lam)
    if lam.size != sum(mu):
        raise ValueError("shape and weight have different sizes")
    return len(sstab(lam, mu))


# ---------------------------------------------------------------------------
# cells predicted by RSK

def predicted_cells(mu, basis="KLdagger"):
    """Cell partitions {side: [set of DoubleCoset]} read off the RSK tableaux.

    KLdagger groups by Q (left), P (right) and shape (two-sided) of
    rsk_min; KLplus does the same with rsk_max.
    """
    from .parabolic import enumerate_cosets
    f = rsk_min if basis == "KLdagger" else rsk_max
    keys = {"L": lambda P, Q: Q, "R": lambda P, Q: P, "LR": lambda P, Q: P.shape}
    groups = {s: {} for s in keys}
    for D in enumerate_cosets(mu):
        P, Q = f(D)
        for s, k in keys.items():
            groups[s].setdefault(k(P, Q), set()).add(D)
    return {s: sorted((frozenset(g) for g in groups[s].values()), key=min) for s in keys}


def cellular_pair(D, kind="Cdagger"):
    """The tableau pair (S, T) indexing D in the chosen cellular basis."""
    return rsk_min(D) if kind == "Cdagger" else rsk_max(D)


def cellular_index(S, T, kind="Cdagger", check=None):
    """The cellular basis element C_{S,T} (kind "C") or Cdag_{S,T} (kind "Cdagger")."""
    from .parabolic import algebra, kl_basis_dagger, kl_basis_plus
    S, T = Tableau(S), Tableau(T)
    if S.shape != T.shape:
        raise ValueError("S and T have different shapes")
    d = max(S.entries() + T.entries())
    mu = Composition(S.weight(d))
    if T.weight(d) != tuple(mu):
        raise ValueError("S and T have different weights")
    s, t = standard_lift(S, mu), standard_lift(T, mu)
    alg = algebra(mu)
    if kind == "Cdagger":
        w = rs_inverse(s, t)
        D = alg.coset_by_rmin.get(w)
        if D is None:
            raise AssertionError("lifted pair does not give a minimal representative")
        elt = kl_basis_dagger(D)
    elif kind == "C":
        w = rs_inverse(s.transpose(), t.transpose())
        x = alg.rplus_to_rmin().get(w)
        if x is None:
            raise AssertionError("lifted pair does not give a maximal representative")
        D = alg.coset_by_rmin[x]
        elt = kl_basis_plus(D)
    else:
        raise ValueError("kind must be C or Cdagger")
    if check if check is not None else mu.n <= 5:
        other = cellular_index(T, S, kind, check=False)
        if elt.iota() != other:
            raise AssertionError("iota(C_{S,T}) != C_{T,S}")
    return elt
