"""The parabolic Hecke algebra H^mu(S_n) = e_J H(S_n) e_J.

Double cosets W_J x W_J are keyed by their minimal representative x
(descent sets disjoint from J on both sides).  Two cosets coincide exactly
when their contingency matrices agree; entry (a, b) counts the positions of
block a sent into block b.  This gives a fast enumeration and a fast
``coset_of`` lookup.

Elements are stored in the spanning set m_x = e_J T_x e_J (basis "Tmin").
The projection rule is e_J T_y e_J = q^{l(y)-l(x)} m_x for y in the coset of x.
The lift back to H(S_n) is

    m_x = W_L(q^2) / W_J(q^2)^2 * sum_{w in D} q^{l(w)-l(x)} T_w,

where L = J ∩ xJx^{-1}.  Products use (m_x)(Z) = project(T_x * lift(Z)),
so only the right factor is ever lifted.

The two Kazhdan-Lusztig bases of H^mu come straight from the KL table of S_n:

* "KLplus":   C_{r+(D)} = sum_{D'} p_{r+(D'), r+(D)} T_{D'}
* "KLdagger": e C^dag_{r-(D)} e = sum_{D'} a_{D',D} m_{r-(D')},
  with a_{D',D} = sum_{y in D'} (-1)^{l(y)} q^{l(y)-l(r-(D'))} bar(p_{y, r-(D)}).

Cell preorders are computed with the full spanning set {m_y} as
multipliers.  The products are formed in KL coordinates of H(S_n) through
the W-graph action, using 1_J = sum_{w in W_J} q^{l(w)} T_w in place of e_J.
The two differ by the nonzero scalar W_J(q^2), which does not change arrows.
"""

from __future__ import annotations

import itertools
import threading
from functools import lru_cache

from .coeffs import LaurentPoly, RatFunc, is_in_qZq, is_in_qinvZqinv
from .config import instance_bound
from .hecke import (
    BoundExceeded, CellData, HeckeElt, _acc, bar_T, kl_C, kl_Cdagger,
    kl_table, lgen, rgen, wgraph_act,
)
from .symgroup import (
    Composition, compose, identity, inverse, ldes, length, lmul, parabolic_elements,
    poincare, rdes, rmul, _longest,
)

__all__ = [
    "DoubleCoset", "ParaElt", "ParaAlgebra", "algebra", "enumerate_cosets",
    "coset_of", "para_project", "para_mult", "para_lift", "kl_basis_plus",
    "kl_basis_dagger", "kl_basis_minus_experimental", "para_cells",
    "cell_module", "dagger_annihilation", "BASES",
]

BASES = ("Tmin", "TD", "KLplus", "KLdagger")
VERIFY_UP_TO = 5


def _mono(k):
    return LaurentPoly.monomial(k)


def _times_qpow(c, k):
    if not k:
        return c
    if isinstance(c, LaurentPoly):
        return c.shift(k)
    return c * RatFunc.from_laurent(_mono(k))


def _vadd(u, v, scale=None):
    out = dict(u)
    for w, c in v.items():
        _acc(out, w, c if scale is None else c * scale)
    return out


def _vshift(v, k):
    return {w: c.shift(k) for w, c in v.items()}


def contingency(w, mu):
    """M[a][b] = #{i in block a : w(i) in block b}."""
    blk = _block_map(tuple(mu))
    d = len(mu)
    M = [[0] * d for _ in range(d)]
    for i, v in enumerate(w, start=1):
        M[blk[i]][blk[v]] += 1
    return tuple(tuple(r) for r in M)


@lru_cache(maxsize=None)
def _block_map(mu):
    m, pos = {}, 1
    for a, p in enumerate(mu):
        for _ in range(p):
            m[pos] = a
            pos += 1
    return m


def _rmin_from_matrix(M, mu):
    starts = list(itertools.accumulate((0,) + tuple(mu[:-1])))
    next_val = [s + 1 for s in starts]
    w, pos = [], 1
    for a in range(len(mu)):
        for b in range(len(mu)):
            for _ in range(M[a][b]):
                w.append(next_val[b])
                next_val[b] += 1
                pos += 1
    return tuple(w)


def _matrices(mu):
    """All nonnegative integer matrices with row and column sums mu."""
    d = len(mu)
    out = []

    def rows(a, colrem, acc):
        if a == d:
            if all(c == 0 for c in colrem):
                out.append(tuple(acc))
            return
        for row in _compositions(mu[a], colrem):
            rows(a + 1, [c - r for c, r in zip(colrem, row)], acc + [row])

    rows(0, list(mu), [])
    return out


def _compositions(total, caps):
    if not caps:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0]) + 1):
        for rest in _compositions(total - first, caps[1:]):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# double cosets

class DoubleCoset:
    """A double coset W_J x W_J, keyed by its minimal representative x."""

    __slots__ = ("mu", "rmin", "_alg")

    def __init__(self, mu, rmin, _alg=None):
        self.mu = Composition(mu)
        self.rmin = tuple(rmin)
        self._alg = _alg or algebra(self.mu)
        if self.rmin not in self._alg.index:
            raise ValueError("%s is not a minimal double coset representative for mu=%s"
                             % (self.rmin, self.mu))

    @property
    def rplus(self):
        return self._alg.rplus(self.rmin)

    @property
    def L(self):
        return self._alg.L(self.rmin)

    @property
    def size(self):
        return self._alg.size(self.rmin)

    def members(self):
        return self._alg.members(self.rmin)

    def __contains__(self, w):
        return self._alg.rmin_of(tuple(w)) == self.rmin

    def __eq__(self, other):
        return isinstance(other, DoubleCoset) and self.mu == other.mu and self.rmin == other.rmin

    def __lt__(self, other):
        return (tuple(self.mu), self.rmin) < (tuple(other.mu), other.rmin)

    def __hash__(self):
        return hash((tuple(self.mu), self.rmin))

    def to_json(self):
        return list(self.rmin)

    def __repr__(self):
        return "DoubleCoset(mu=%s, rmin=%s)" % (self.mu, "".join(map(str, self.rmin)))


class ParaAlgebra:
    """Per-composition data: cosets, projection/lift, structure constants, KL bases."""

    def __init__(self, mu):
        self.mu = Composition(mu)
        self.n = self.mu.n
        self.J = self.mu.J
        self.WJ = poincare(self.n, self.J)
        self.WJ_rf = RatFunc.from_laurent(self.WJ)
        mats = _matrices(tuple(self.mu))
        reps = sorted(_rmin_from_matrix(M, self.mu) for M in mats)
        self.rmins = reps
        self.index = {x: k for k, x in enumerate(reps)}
        self._by_matrix = {M: _rmin_from_matrix(M, self.mu) for M in mats}
        self.cosets = [DoubleCoset(self.mu, x, _alg=self) for x in reps]
        self.coset_by_rmin = {D.rmin: D for D in self.cosets}
        self._rplus, self._L, self._members = {}, {}, {}
        self._rplus_to_rmin = None
        self._lock = threading.Lock()
        self._struct = {}
        self._plus, self._dagger = {}, {}
        self._actions = {}

    # -- coset data -------------------------------------------------------
    def rmin_of(self, w):
        return self._by_matrix[contingency(w, self.mu)]

    def L(self, x):
        r = self._L.get(x)
        if r is None:
            xi = inverse(x)
            r = frozenset(i for i in self.J if xi[i] == xi[i - 1] + 1 and xi[i - 1] in self.J)
            self._L[x] = r
        return r

    def rplus(self, x):
        r = self._rplus.get(x)
        if r is None:
            wJ = _longest(self.n, self.J)
            wL = _longest(self.n, self.L(x))
            r = compose(compose(compose(wJ, wL), x), wJ)
            self._rplus[x] = r
        return r

    def rplus_to_rmin(self):
        if self._rplus_to_rmin is None:
            self._rplus_to_rmin = {self.rplus(x): x for x in self.rmins}
        return self._rplus_to_rmin

    def size(self, x):
        nJ = _group_order(self.n, self.J)
        return nJ * nJ // _group_order(self.n, self.L(x))

    def members(self, x):
        """Sorted elements of the coset, each written once as v x u with v in X^J_L."""
        r = self._members.get(x)
        if r is None:
            L = self.L(x)
            WJ = parabolic_elements(self.n, self.J)
            left = [v for v in WJ if not (rdes(v) & L)]
            r = sorted(compose(compose(v, x), u) for v in left for u in WJ)
            self._members[x] = r
        return r

    def factor(self, w):
        """w = w1 * x * w2 with x = rmin, w2 in W_J and w1 in X^J_L."""
        w = tuple(w)
        x = self.rmin_of(w)
        u = list(w)
        for blk in self.mu.blocks():
            vals = sorted(w[i - 1] for i in blk)
            for i, v in zip(blk, vals):
                u[i - 1] = v
        u = tuple(u)
        w2 = compose(inverse(u), w)
        w1 = compose(u, inverse(x))
        return x, w1, w2

    # -- projection and lift ---------------------------------------------
    def project(self, vec):
        """e_J (sum c_w T_w) e_J in the spanning set m_x; returns {rmin: coeff}."""
        out = {}
        for w, c in vec.items():
            x = self.rmin_of(w)
            _acc(out, x, _times_qpow(c, length(w) - length(x)))
        return out

    def lift_scalar(self, x):
        """W_L(q^2) / W_J(q^2)^2."""
        return RatFunc.from_laurent(poincare(self.n, self.L(x))) / (self.WJ_rf * self.WJ_rf)

    def coset_sum(self, x):
        """sum_{w in D} q^{l(w)-l(x)} T_w as a Laurent dict."""
        lx = length(x)
        return {w: _mono(length(w) - lx) for w in self.members(x)}

    def lift(self, terms):
        """Tmin coordinates -> HeckeElt."""
        out = {}
        for x, c in terms.items():
            s = RatFunc.coerce(c) * self.lift_scalar(x)
            for w, m in self.coset_sum(x).items():
                _acc(out, w, s * RatFunc.from_laurent(m))
        return HeckeElt._raw(self.n, out)

    def td_scalar(self, x):
        """T_D = c_D * m_x with c_D = W_J^2 / W_L * q^{l(r-) - l(r+)}."""
        return (self.WJ_rf * self.WJ_rf / RatFunc.from_laurent(poincare(self.n, self.L(x)))
                * RatFunc.from_laurent(_mono(length(x) - length(self.rplus(x)))))

    # -- structure constants ------------------------------------------------
    def struct(self, y, x, side="L"):
        """project(T_y * S_x) (side L) or project(S_x * T_y) (side R), Laurent dict."""
        key = (side, y, x)
        r = self._struct.get(key)
        if r is None:
            vec = self.coset_sum(x)
            if side == "L":
                for i in reversed(_word(y)):
                    vec = lgen(i, vec)
            else:
                for i in _word(y):
                    vec = rgen(vec, i)
            r = self.project(vec)
            with self._lock:
                r = self._struct.setdefault(key, r)
        return r

    def mult_tmin(self, a, b):
        """Product of two Tmin coordinate dicts (RatFunc or Laurent coefficients)."""
        out = {}
        for x, bx in b.items():
            sb = RatFunc.coerce(bx) * self.lift_scalar(x)
            for y, ay in a.items():
                s = sb * RatFunc.coerce(ay)
                for z, c in self.struct(y, x, "L").items():
                    _acc(out, z, s * RatFunc.from_laurent(c))
        return out

    def left_mult_rep(self, y, b):
        """m_y * b in Tmin coordinates."""
        return self.mult_tmin({y: RatFunc(1)}, b)

    def right_mult_rep(self, b, y):
        """b * m_y in Tmin coordinates."""
        out = {}
        for x, bx in b.items():
            s = RatFunc.coerce(bx) * self.lift_scalar(x)
            for z, c in self.struct(y, x, "R").items():
                _acc(out, z, s * RatFunc.from_laurent(c))
        return out

    # -- KL bases ---------------------------------------------------------------
    def plus_expansion(self, x):
        """{rmin(D'): p_{r+(D'), r+(D)}} for D = coset of x (TD coordinates)."""
        r = self._plus.get(x)
        if r is None:
            rp = self.rplus(x)
            tab = kl_table(self.n)
            back = self.rplus_to_rmin()
            lr = length(rp)
            r = {}
            for y, P in tab.interval(rp).items():
                x2 = back.get(y)
                if x2 is not None:
                    r[x2] = LaurentPoly({2 * k + length(y) - lr: c for k, c in enumerate(P) if c})
            with self._lock:
                r = self._plus.setdefault(x, r)
        return r

    def dagger_expansion(self, x):
        """{rmin(D'): a_{D',D}} for D = coset of x (Tmin coordinates)."""
        r = self._dagger.get(x)
        if r is None:
            tab = kl_table(self.n)
            lx = length(x)
            r = {}
            for y, P in tab.interval(x).items():
                ly = length(y)
                sgn = -1 if ly % 2 else 1
                x2 = self.rmin_of(y)
                shift = ly - length(x2)
                # bar(p_{y,x}) = q^{l(x)-l(y)} P(q^{-2})
                term = LaurentPoly({lx - ly - 2 * k + shift: sgn * c for k, c in enumerate(P) if c})
                _acc(r, x2, term)
            with self._lock:
                r = self._dagger.setdefault(x, r)
        return r

    def nodes(self, basis):
        """The H(S_n) elements indexing basis vectors: r-(D) for KLdagger, r+(D) for KLplus."""
        return self.rmins if basis == "KLdagger" else [self.rplus(x) for x in self.rmins]

    # -- one_J and KL-coordinate actions -----------------------------------
    def apply_oneJ(self, vec, side, act):
        """Multiply by 1_J = sum_{w in W_J} q^{l(w)} T_w on the given side.

        ``act(i, v)`` multiplies v by T_i on that side.  Each block S_k is
        handled through the factorisation 1_{S_k} = D_2 D_3 ... D_k with
        D_m = sum_j q^j T_{m-1} ... T_{m-j} (mirrored for the right side).
        """
        start = 1
        for p in self.mu:
            for m in range(p, 1, -1):
                u = vec
                r = u
                for g in range(1, m):
                    t = act(start + g - 1, r)
                    r = _vadd(u, _vshift(t, 1))
                vec = r
            start += p
        return vec

    def kl_products(self, basis, side):
        """For each node x and multiplier y: W_J(q^2) * (m_y . B_x) (side L) or (B_x . m_y) (side R).

        Returns {x: {y: {node: LaurentPoly}}} in KL coordinates of the chosen
        basis, restricted to the nodes of H^mu.
        """
        key = (basis, side)
        r = self._actions.get(key)
        if r is not None:
            return r
        kb = "Cdagger" if basis == "KLdagger" else "C"
        nodes = self.nodes(basis)
        nodeset = set(nodes)
        tab = kl_table(self.n)
        left = side == "L"

        def act(i, v):
            return wgraph_act(i, v, side, kb, tab)

        mults = self.rmins
        out = {}
        for x in nodes:
            start = {x: LaurentPoly.const(1)}
            if basis == "KLdagger":
                start = self.apply_oneJ(start, side, act)
            cache = {identity(self.n): start}

            def get(y):
                v = cache.get(y)
                if v is None:
                    if left:
                        i = min(ldes(y))
                        v = act(i, get(lmul(i, y)))
                    else:
                        i = min(rdes(y))
                        v = act(i, get(rmul(y, i)))
                    cache[y] = v
                return v

            row = {}
            for y in mults:
                v = get(y)
                if basis == "KLplus":
                    v = self.apply_oneJ(v, side, act)
                    stray = [w for w in v if w not in nodeset]
                    if stray:
                        raise AssertionError("1_J T_y C_{r+} has support outside the maximal "
                                             "representatives: %s" % (stray[:3],))
                else:
                    v = {w: c for w, c in v.items() if w in nodeset}
                row[y] = v
            out[x] = row
        with self._lock:
            return self._actions.setdefault(key, out)


@lru_cache(maxsize=None)
def _group_order(n, J):
    from math import factorial
    from .symgroup import runs
    o = 1
    for a, b in runs(J):
        o *= factorial(b - a + 2)
    return o


@lru_cache(maxsize=None)
def _word(y):
    from .symgroup import reduced_word
    return reduced_word(y)


_ALGEBRAS = {}
_ALG_LOCK = threading.Lock()


def algebra(mu):
    mu = Composition(mu)
    a = _ALGEBRAS.get(mu)
    if a is None:
        a = ParaAlgebra(mu)
        with _ALG_LOCK:
            a = _ALGEBRAS.setdefault(mu, a)
    return a


def _bounded(mu, bound):
    mu = Composition(mu)
    b = instance_bound(bound)
    if mu.n > b:
        raise BoundExceeded("n = %d exceeds the instance bound %d" % (mu.n, b))
    return mu


# ---------------------------------------------------------------------------
# ParaElt

class ParaElt:
    """Element of H^mu(S_n) as coefficients on one of the four bases.

    Internally ``terms`` maps minimal representatives to RatFunc; ``items()``
    yields ``(DoubleCoset, coeff)`` pairs in lexicographic order.
    """

    __slots__ = ("mu", "basis", "terms")

    def __init__(self, mu, basis, terms=None):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        self.mu = Composition(mu)
        self.basis = basis
        alg = algebra(self.mu)
        t = {}
        for k, c in (terms or {}).items():
            x = k.rmin if isinstance(k, DoubleCoset) else tuple(k)
            if x not in alg.index:
                raise ValueError("%s is not a coset key for mu=%s" % (x, self.mu))
            c = RatFunc.coerce(c)
            if c:
                t[x] = c
        self.terms = t

    @classmethod
    def _raw(cls, mu, basis, terms):
        obj = cls.__new__(cls)
        obj.mu = mu
        obj.basis = basis
        obj.terms = {x: RatFunc.coerce(c) for x, c in terms.items() if c}
        return obj

    @property
    def algebra(self):
        return algebra(self.mu)

    @classmethod
    def unit(cls, mu):
        return cls(mu, "Tmin", {identity(Composition(mu).n): 1})

    @classmethod
    def m(cls, mu, x):
        """The spanning element e_J T_x e_J (x is reduced to its minimal representative)."""
        alg = algebra(mu)
        x = tuple(x)
        r = alg.rmin_of(x)
        return cls(mu, "Tmin", {r: RatFunc.from_laurent(_mono(length(x) - length(r)))})

    def coeff(self, key):
        x = key.rmin if isinstance(key, DoubleCoset) else tuple(key)
        return self.terms.get(x, RatFunc(0))

    def items(self):
        alg = self.algebra
        return [(alg.coset_by_rmin[x], c) for x, c in sorted(self.terms.items())]

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if not isinstance(other, ParaElt) or self.mu != other.mu:
            raise ValueError("elements of different parabolic algebras")

    def __add__(self, other):
        self._check(other)
        if other.basis != self.basis:
            other = other.to_basis(self.basis)
        out = dict(self.terms)
        for x, c in other.terms.items():
            _acc(out, x, c)
        return ParaElt._raw(self.mu, self.basis, out)

    def __neg__(self):
        return ParaElt._raw(self.mu, self.basis, {x: -c for x, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = RatFunc.coerce(c)
        return ParaElt._raw(self.mu, self.basis, {x: a * c for x, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ParaElt):
            return para_mult(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, ParaElt) or self.mu != other.mu:
            return NotImplemented
        if other.basis != self.basis:
            other = other.to_basis(self.basis)
        return self.terms == other.terms

    def __hash__(self):
        t = self.to_basis("Tmin")
        return hash((tuple(self.mu), frozenset(t.terms.items())))

    # -- conversions ------------------------------------------------------------
    def to_basis(self, basis):
        if basis == self.basis:
            return self
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        return _from_tmin(self.mu, _to_tmin(self), basis)

    def bar(self):
        alg = self.algebra
        t = _to_tmin(self)
        out = {}
        for x, c in t.items():
            cb = c.bar()
            for w, a in bar_T(x).items():
                _acc(out, w, cb * RatFunc.from_laurent(a))
        return ParaElt._raw(self.mu, "Tmin", alg.project(out)).to_basis(self.basis)

    def iota(self):
        t = _to_tmin(self)
        alg = self.algebra
        out = {}
        for x, c in t.items():
            _acc(out, alg.rmin_of(inverse(x)), c)
        return ParaElt._raw(self.mu, "Tmin", out).to_basis(self.basis)

    def to_json(self):
        return {"n": self.mu.n, "mu": list(self.mu), "basis": self.basis,
                "terms": [{"rmin": list(x), "coeff": c.to_json()}
                          for x, c in sorted(self.terms.items())]}

    def __str__(self):
        if not self.terms:
            return "0"
        tag = {"Tmin": "m", "TD": "T", "KLplus": "C", "KLdagger": "B"}[self.basis]
        return " + ".join("(%s)%s[%s]" % (c, tag, "".join(map(str, x)))
                          for x, c in sorted(self.terms.items()))

    __repr__ = __str__


def _to_tmin(elt):
    alg = elt.algebra
    if elt.basis == "Tmin":
        return dict(elt.terms)
    if elt.basis == "TD":
        return {x: c * alg.td_scalar(x) for x, c in elt.terms.items()}
    if elt.basis == "KLdagger":
        out = {}
        for x, c in elt.terms.items():
            for x2, a in alg.dagger_expansion(x).items():
                _acc(out, x2, c * RatFunc.from_laurent(a))
        return out
    if elt.basis == "KLplus":
        td = {}
        for x, c in elt.terms.items():
            for x2, p in alg.plus_expansion(x).items():
                _acc(td, x2, c * RatFunc.from_laurent(p))
        return {x: c * alg.td_scalar(x) for x, c in td.items()}
    raise ValueError(elt.basis)


def _triangular_solve(vec, expansion, key_len):
    """Write vec = sum_D c_D expansion(D); expansion(D) has leading term at D."""
    vec = dict(vec)
    out = {}
    while vec:
        x = max(vec, key=lambda k: (key_len(k), k))
        exp = expansion(x)
        lead = RatFunc.from_laurent(exp[x])
        c = vec[x] / lead
        out[x] = c
        for x2, a in exp.items():
            _acc(vec, x2, -(c * RatFunc.from_laurent(a)))
        if x in vec:
            raise AssertionError("triangular solve did not clear the leading term")
    return out


def _from_tmin(mu, t, basis):
    alg = algebra(mu)
    if basis == "Tmin":
        return ParaElt._raw(alg.mu, basis, t)
    if basis == "TD":
        return ParaElt._raw(alg.mu, basis, {x: c / alg.td_scalar(x) for x, c in t.items()})
    if basis == "KLdagger":
        return ParaElt._raw(alg.mu, basis, _triangular_solve(
            t, alg.dagger_expansion, length))
    if basis == "KLplus":
        td = {x: c / alg.td_scalar(x) for x, c in t.items()}
        return ParaElt._raw(alg.mu, basis, _triangular_solve(
            td, alg.plus_expansion, lambda x: length(alg.rplus(x))))
    raise ValueError(basis)


# ---------------------------------------------------------------------------
# public operations

def enumerate_cosets(mu, bound=None):
    """All double cosets S_mu \\ S_n / S_mu, ordered by minimal representative."""
    mu = _bounded(mu, bound)
    return list(algebra(mu).cosets)


def coset_of(w, mu):
    """(D, w1, w2) with w = w1 * rmin(D) * w2 and lengths adding up."""
    alg = algebra(mu)
    x, w1, w2 = alg.factor(tuple(w))
    return alg.coset_by_rmin[x], w1, w2


def para_project(h, mu):
    """e_J h e_J in the Tmin spanning set."""
    alg = algebra(mu)
    if isinstance(h, HeckeElt):
        if h.n != alg.n:
            raise ValueError("HeckeElt lives in H(S_%d), mu has size %d" % (h.n, alg.n))
        terms = h.terms
    else:
        terms = h
    return ParaElt._raw(alg.mu, "Tmin", alg.project(terms))


def para_lift(a):
    """The element of H(S_n) represented by a."""
    return a.algebra.lift(_to_tmin(a))


def para_mult(a, b):
    """Product in H^mu; the result is returned in a's basis."""
    a._check(b)
    alg = a.algebra
    t = alg.mult_tmin(_to_tmin(a), _to_tmin(b))
    return ParaElt._raw(alg.mu, "Tmin", t).to_basis(a.basis)


def _leading_checks(exp, x, lead, lower_ok, what):
    if exp.get(x) != lead:
        raise AssertionError("%s: leading coefficient %s, expected %s" % (what, exp.get(x), lead))
    for x2, c in exp.items():
        if x2 != x and not lower_ok(c):
            raise AssertionError("%s: coefficient %s at %s violates membership" % (what, c, x2))


def kl_basis_plus(D, check=None):
    """C_{r+(D)} expanded over the standard basis T_{D'} (basis "TD")."""
    alg = D._alg
    x = D.rmin
    exp = alg.plus_expansion(x)
    _leading_checks(exp, x, LaurentPoly.const(1), is_in_qinvZqinv, "C_{r+}")
    elt = ParaElt._raw(alg.mu, "TD", exp)
    if check if check is not None else alg.n <= VERIFY_UP_TO:
        rp = alg.rplus(x)
        acc = {}
        for x2, p in exp.items():
            lr = length(alg.rplus(x2))
            for w in alg.members(x2):
                _acc(acc, w, p.shift(length(w) - lr))
        h = HeckeElt._raw(alg.n, acc)
        if h.bar() != h:
            raise AssertionError("assembled C_{r+(D)} is not bar-invariant")
        if h != kl_C(rp, check=False):
            raise AssertionError("assembled C_{r+(D)} differs from the KL element")
        for i in alg.J:
            if h.lmul_gen(i) != h.scale(_mono(1)) or h.rmul_gen(i) != h.scale(_mono(1)):
                raise AssertionError("C_{r+(D)} is not absorbed by e_J")
    return elt


def kl_basis_dagger(D, check=None):
    """e_J C^dag_{r-(D)} e_J expanded over the spanning set (basis "Tmin")."""
    alg = D._alg
    x = D.rmin
    exp = alg.dagger_expansion(x)
    lead = LaurentPoly.const(-1 if length(x) % 2 else 1)
    _leading_checks(exp, x, lead, is_in_qZq, "e C^dag e")
    elt = ParaElt._raw(alg.mu, "Tmin", exp)
    if check if check is not None else alg.n <= VERIFY_UP_TO:
        if elt.bar() != elt:
            raise AssertionError("e C^dag_{r-(D)} e is not bar-invariant")
    return elt


def kl_basis_minus_experimental(D):
    """e_J C_{r-(D)} e_J in the spanning set; experimental, not used by any check."""
    alg = D._alg
    return ParaElt._raw(alg.mu, "Tmin", alg.project(kl_C(D.rmin, check=False).terms))


def dagger_annihilation(mu):
    """{w: e_J C^dag_w e_J is zero} for all w in S_n."""
    alg = algebra(mu)
    from .symgroup import all_perms
    return {w: not alg.project(kl_Cdagger(w, check=False).terms) for w in all_perms(alg.n)}


def para_cells(mu, basis="KLdagger", side=None, bound=None):
    """Cell preorders of H^mu for the chosen KL basis.

    Returns ``{"L": CellData, "R": CellData, "LR": CellData}`` over DoubleCoset
    nodes, or just the requested side.
    """
    mu = _bounded(mu, bound)
    if basis not in ("KLplus", "KLdagger"):
        raise ValueError("basis must be KLplus or KLdagger")
    alg = algebra(mu)
    nodes = alg.nodes(basis)
    to_coset = dict(zip(nodes, alg.cosets))
    arrows = {}
    for s in ("L", "R"):
        prod = alg.kl_products(basis, s)
        arrows[s] = {to_coset[x]: {to_coset[z] for v in prod[x].values() for z in v}
                     for x in nodes}
    both = {D: arrows["L"][D] | arrows["R"][D] for D in alg.cosets}
    res = {"L": CellData(alg.cosets, arrows["L"]), "R": CellData(alg.cosets, arrows["R"]),
           "LR": CellData(alg.cosets, both)}
    return res if side is None else res[side]


def cell_module(mu, basis, cell, side="L"):
    """Matrices of every multiplier m_y on the quotient I_{<=cell} / I_{<cell}.

    ``cell`` is a collection of DoubleCosets forming a cell for the chosen
    side.  Returns ``{y: matrix}`` where ``matrix[i][j]`` is the coefficient
    of basis element i in m_y . (basis element j) modulo the strictly lower
    ideal, with cells ordered lexicographically.
    """
    alg = algebra(mu)
    cells = para_cells(mu, basis, side)
    cell = sorted(cell)
    cset = frozenset(cell)
    if cells.cell_of.get(cell[0]) != cset:
        raise ValueError("not a %s-cell of the %s basis" % (side, basis))
    lower = cells.lower_ideal(cset)
    nodes = alg.nodes(basis)
    node_of = dict(zip(alg.rmins, nodes))
    coset_of_node = dict(zip(nodes, alg.cosets))
    prod = alg.kl_products(basis, side)
    inv_wj = RatFunc(1) / alg.WJ_rf
    mats = {}
    for y in alg.rmins:
        M = [[RatFunc(0)] * len(cell) for _ in cell]
        for j, D in enumerate(cell):
            v = prod[node_of[D.rmin]][y]
            for z, c in v.items():
                Dz = coset_of_node[z]
                if Dz not in lower:
                    raise AssertionError("product leaves the ideal generated by the cell")
                if Dz in cset:
                    M[cell.index(Dz)][j] = RatFunc.from_laurent(c) * inv_wj
        mats[y] = M
    return mats
