"""The Hecke algebra H(S_n) with the standard basis {T_w}.

Multiplication rule: for a simple reflection s,

    T_s T_w = T_{sw}                        if l(sw) > l(w)
    T_s T_w = (q - q^{-1}) T_w + T_{sw}     otherwise.

So T_s^2 = (q - q^{-1}) T_s + 1 and T_s^{-1} = T_s - (q - q^{-1}).

Two bar-invariant bases are built from one table of Kazhdan-Lusztig
polynomials.  ``C_w = T_w + sum_{x<w} p_{x,w} T_x`` with p in q^{-1}Z[q^{-1}],
and ``Cdag_w`` is its image under the involution T_i -> -T_i, q -> q^{-1}.
The table stores the classical polynomials P_{x,w}(u) as integer tuples.
The relation is p_{x,w} = q^{l(x)-l(w)} P_{x,w}(q^2).

The table is filled by the usual induction on length: pick s in L(w),
put v = sw, then

    C_w = C_s C_v - sum_{z < v, sz < z} mu(z, v) C_z.

Here mu(z, v) is the top coefficient of P_{z,v}, of degree (l(v)-l(z)-1)/2.
Longest elements of standard parabolic subgroups skip the recursion.  For
those, P_{x,w} = 1 on the whole subgroup.

Left and right multiplication by T_s on either KL basis is available in KL
coordinates through the W-graph formulas (``wgraph_act``).  The cell code
here and in ``parabolic`` is built on them.
"""

from __future__ import annotations

import threading
from collections import deque

from .coeffs import LaurentPoly, RatFunc, is_in_qinvZqinv
from .config import instance_bound
from .symgroup import (
    SizeMismatch, all_perms, identity, inverse, ldes, length, lmul, rdes,
    rmul, parabolic_elements, poincare, _longest,
)

__all__ = [
    "HeckeElt", "KLTable", "kl_table", "kl_C", "kl_Cdagger", "h_mult",
    "q_symmetriser", "q_antisymmetriser", "wgraph_act", "sn_cells",
    "CellData", "BoundExceeded", "QMQ_L", "QMQ",
]

QMQ_L = LaurentPoly({1: 1, -1: -1})      # q - q^{-1}
QMQ = RatFunc.from_laurent(QMQ_L)
_Q_L = LaurentPoly.monomial(1)
_QINV_L = LaurentPoly.monomial(-1)
_MQINV_L = LaurentPoly.monomial(-1, -1)


class BoundExceeded(ValueError):
    """The requested instance is larger than the configured bound."""


# ---------------------------------------------------------------------------
# sparse vector kernels; coefficients may be LaurentPoly or RatFunc

def _acc(d, k, c):
    v = d.get(k)
    if v is None:
        d[k] = c
    else:
        v = v + c
        if v:
            d[k] = v
        else:
            del d[k]


def lgen(i, vec, qmq=QMQ_L):
    """T_i * vec in the standard basis."""
    out = {}
    for w, c in vec.items():
        sw = lmul(i, w)
        _acc(out, sw, c)
        if i in ldes(w):
            _acc(out, w, c * qmq)
    return out


def rgen(vec, i, qmq=QMQ_L):
    """vec * T_i in the standard basis."""
    out = {}
    for w, c in vec.items():
        ws = rmul(w, i)
        _acc(out, ws, c)
        if i in rdes(w):
            _acc(out, w, c * qmq)
    return out


def lgen_inv(i, vec, qmq=QMQ_L):
    """T_i^{-1} * vec."""
    out = {}
    for w, c in vec.items():
        sw = lmul(i, w)
        _acc(out, sw, c)
        if i not in ldes(w):
            _acc(out, w, -(c * qmq))
    return out


def rgen_inv(vec, i, qmq=QMQ_L):
    """vec * T_i^{-1}."""
    out = {}
    for w, c in vec.items():
        ws = rmul(w, i)
        _acc(out, ws, c)
        if i not in rdes(w):
            _acc(out, w, -(c * qmq))
    return out


def _scaled_into(out, vec, c):
    for w, a in vec.items():
        _acc(out, w, a * c)


# bar(T_w) = T_{i1}^{-1} ... T_{ik}^{-1}, cached per permutation
_BAR_T = {}
_BAR_LOCK = threading.Lock()


def bar_T(w):
    """bar(T_w) as a dict with LaurentPoly coefficients."""
    r = _BAR_T.get(w)
    if r is not None:
        return r
    if length(w) == 0:
        r = {w: LaurentPoly.const(1)}
    else:
        i = min(ldes(w))
        r = lgen_inv(i, bar_T(lmul(i, w)))
    with _BAR_LOCK:
        return _BAR_T.setdefault(w, r)


# ---------------------------------------------------------------------------
# HeckeElt

class HeckeElt:
    """Element of H(S_n) as a sparse map permutation -> RatFunc."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        t = {}
        if terms:
            for w, c in terms.items():
                w = tuple(w)
                if len(w) != n:
                    raise SizeMismatch("permutation %r is not in S_%d" % (w, n))
                c = RatFunc.coerce(c)
                if c:
                    t[w] = c
        self.terms = t

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = {w: RatFunc.coerce(c) for w, c in terms.items() if c}
        return obj

    @classmethod
    def T(cls, w, coeff=1):
        w = tuple(w)
        return cls(len(w), {w: coeff})

    @classmethod
    def one(cls, n):
        return cls.T(identity(n))

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def gen(cls, i, n):
        return cls.one(n).lmul_gen(i)

    # -- access -----------------------------------------------------------
    def coeff(self, w):
        return self.terms.get(tuple(w), RatFunc(0))

    def items(self):
        return sorted(self.terms.items())

    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if self.n != other.n:
            raise SizeMismatch("H(S_%d) and H(S_%d) elements cannot be combined" % (self.n, other.n))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return HeckeElt._raw(self.n, out)

    def __neg__(self):
        return HeckeElt._raw(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = RatFunc.coerce(c)
        return HeckeElt._raw(self.n, {w: a * c for w, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return h_mult(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def lmul_gen(self, i, inverse=False):
        f = lgen_inv if inverse else lgen
        return HeckeElt._raw(self.n, f(i, self.terms, QMQ))

    def rmul_gen(self, i, inverse=False):
        f = rgen_inv if inverse else rgen
        return HeckeElt._raw(self.n, f(self.terms, i, QMQ))

    # -- involutions -----------------------------------------------------
    def bar(self):
        out = {}
        for w, c in self.terms.items():
            _scaled_into(out, bar_T(w), c.bar())
        return HeckeElt._raw(self.n, out)

    def dagger(self):
        return HeckeElt._raw(self.n, {w: (c.bar() if length(w) % 2 == 0 else -c.bar())
                                      for w, c in self.terms.items()})

    def iota(self):
        return HeckeElt._raw(self.n, {inverse(w): c for w, c in self.terms.items()})

    def involution(self, kind):
        if kind == "bar":
            return self.bar()
        if kind == "dagger":
            return self.dagger()
        if kind == "iota":
            return self.iota()
        raise ValueError("unknown involution %r" % kind)

    # -- comparison / output ---------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def to_json(self):
        return {"n": self.n, "basis": "T",
                "terms": [{"perm": list(w), "coeff": c.to_json()} for w, c in self.items()]}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            parts.append("(%s)T[%s]" % (c, "".join(map(str, w))))
        return " + ".join(parts)

    __repr__ = __str__


def h_mult(a, b):
    """Product in H(S_n), applying reduced words of a's support to b."""
    a._check(b)
    cache = {identity(a.n): b.terms}

    def left_T(w):
        r = cache.get(w)
        if r is None:
            i = min(ldes(w))
            r = lgen(i, left_T(lmul(i, w)), QMQ)
            cache[w] = r
        return r

    out = {}
    for w, c in a.terms.items():
        _scaled_into(out, left_T(w), c)
    return HeckeElt._raw(a.n, out)


# ---------------------------------------------------------------------------
# Kazhdan-Lusztig table

def _padd(a, b, shift=0, scale=1):
    """a + scale * u^shift * b for polynomials stored as coefficient lists."""
    need = max(len(a), len(b) + shift)
    if len(a) < need:
        a.extend([0] * (need - len(a)))
    for k, c in enumerate(b):
        a[k + shift] += scale * c
    return a


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _support_gens(w):
    """Generators i with {w(1..i)} != {1..i}."""
    out, m = [], 0
    for i in range(1, len(w)):
        m = max(m, w[i - 1])
        if m > i:
            out.append(i)
    return frozenset(out)


class KLTable:
    """Grow-only memo of Kazhdan-Lusztig polynomials for S_n."""

    def __init__(self, n):
        self.n = n
        self.P = {}          # w -> {x: tuple of coefficients of P_{x,w}(u)}
        self._mu = {}        # w -> tuple of (z, mu(z, w)) for z < w, mu != 0
        self._lock = threading.Lock()

    def interval(self, w):
        """{x: P_{x,w}} for all x <= w."""
        w = tuple(w)
        r = self.P.get(w)
        if r is None:
            r = self._compute(w)
        return r

    def _store(self, w, P):
        with self._lock:
            return self.P.setdefault(w, P)

    def _compute(self, w):
        r = self.P.get(w)
        if r is not None:
            return r
        n = self.n
        supp = _support_gens(w)
        if w == _longest(n, supp):
            return self._store(w, {x: (1,) for x in parabolic_elements(n, supp)})
        i = min(ldes(w))
        v = lmul(i, w)
        Pv = self._compute(v)
        lw = length(w)
        acc = {}
        for x, P in Pv.items():
            sx = lmul(i, x)
            if i in ldes(x):
                _padd(acc.setdefault(x, []), P, 1)
                _padd(acc.setdefault(sx, []), P, 1)
            else:
                _padd(acc.setdefault(x, []), P, 0)
                _padd(acc.setdefault(sx, []), P, 0)
        for z, m in self.mu_list(v):
            if i not in ldes(z):
                continue
            Pz = self._compute(z)
            sh = (lw - length(z)) // 2
            for x, P in Pz.items():
                _padd(acc.setdefault(x, []), P, sh, -m)
        out = {}
        for x, lst in acc.items():
            t = _trim(lst)
            if t:
                out[x] = t
        return self._store(w, out)

    def mu_list(self, w):
        """All (z, mu(z, w)) with z < w and mu(z, w) != 0, sorted by z."""
        w = tuple(w)
        r = self._mu.get(w)
        if r is not None:
            return r
        Pw = self.interval(w)
        lw = length(w)
        out = []
        for z, P in Pw.items():
            d = lw - length(z)
            if d % 2 == 1:
                k = (d - 1) // 2
                if k < len(P) and P[k]:
                    out.append((z, P[k]))
        out.sort()
        r = tuple(out)
        with self._lock:
            return self._mu.setdefault(w, r)

    def klpoly(self, x, w):
        """Classical P_{x,w}(u) as a coefficient tuple (empty when x is not <= w)."""
        return self.interval(w).get(tuple(x), ())

    def p(self, x, w):
        """p_{x,w} = q^{l(x)-l(w)} P_{x,w}(q^2) as a LaurentPoly."""
        P = self.klpoly(x, w)
        s = length(tuple(x)) - length(tuple(w))
        return LaurentPoly({2 * k + s: c for k, c in enumerate(P) if c})

    def mu(self, z, w):
        z, w = tuple(z), tuple(w)
        d = length(w) - length(z)
        if d <= 0 or d % 2 == 0:
            return 0
        P = self.klpoly(z, w)
        k = (d - 1) // 2
        return P[k] if k < len(P) else 0

    def fill(self):
        """Compute the whole table (n <= 7 is practical)."""
        for w in all_perms(self.n):
            self.interval(w)
        return self


_TABLES = {}
_TABLES_LOCK = threading.Lock()


def kl_table(n):
    t = _TABLES.get(n)
    if t is None:
        with _TABLES_LOCK:
            t = _TABLES.setdefault(n, KLTable(n))
    return t


VERIFY_BAR_UP_TO = 5


def _check_kl(elt, w, kind):
    if elt.bar() != elt:
        raise AssertionError("%s_%s is not bar-invariant" % (kind, w))


def kl_C(w, check=None):
    """C_w = T_w + sum_{x<w} p_{x,w} T_x."""
    w = tuple(w)
    n = len(w)
    tab = kl_table(n)
    terms = {}
    lw = length(w)
    for x, P in tab.interval(w).items():
        p = LaurentPoly({2 * k + length(x) - lw: c for k, c in enumerate(P) if c})
        if x != w and not is_in_qinvZqinv(p):
            raise AssertionError("p_{%s,%s} = %s not in q^-1 Z[q^-1]" % (x, w, p))
        terms[x] = p
    elt = HeckeElt._raw(n, terms)
    if check if check is not None else n <= VERIFY_BAR_UP_TO:
        _check_kl(elt, w, "C")
    return elt


def kl_Cdagger(w, check=None):
    """Cdag_w = (-1)^{l(w)} T_w + sum_{x<w} (-1)^{l(x)} bar(p_{x,w}) T_x."""
    w = tuple(w)
    n = len(w)
    tab = kl_table(n)
    terms = {}
    lw = length(w)
    for x, P in tab.interval(w).items():
        sgn = -1 if length(x) % 2 else 1
        terms[x] = LaurentPoly({lw - length(x) - 2 * k: sgn * c for k, c in enumerate(P) if c})
    elt = HeckeElt._raw(n, terms)
    if check if check is not None else n <= VERIFY_BAR_UP_TO:
        _check_kl(elt, w, "Cdag")
    return elt


# ---------------------------------------------------------------------------
# symmetrisers

def q_symmetriser(n, J):
    """e_J = W_J(q^2)^{-1} sum_{w in W_J} q^{l(w)} T_w."""
    J = frozenset(J)
    if any(not 1 <= i < n for i in J):
        raise ValueError("J must lie in {1..n-1}")
    inv = RatFunc(1) / RatFunc.from_laurent(poincare(n, J))
    return HeckeElt._raw(n, {w: RatFunc.from_laurent(LaurentPoly.monomial(length(w))) * inv
                             for w in parabolic_elements(n, J)})


def q_antisymmetriser(n, k, offset=1):
    """sum_{w in S_k} (-1)^{l(w)} q^{l(w_k)-l(w)} T_w, with S_k on generators offset..offset+k-2."""
    if k < 1 or offset < 1 or offset + k - 1 > n:
        raise ValueError("antisymmetriser on %d strands at offset %d does not fit in S_%d" % (k, offset, n))
    K = frozenset(range(offset, offset + k - 1))
    top = k * (k - 1) // 2
    return HeckeElt._raw(n, {w: LaurentPoly.monomial(top - length(w), -1 if length(w) % 2 else 1)
                             for w in parabolic_elements(n, K)})


# ---------------------------------------------------------------------------
# W-graph action in KL coordinates

def wgraph_act(i, vec, side="L", basis="C", table=None):
    """Multiply by T_i on the given side, in coordinates of the chosen KL basis.

    ``vec`` maps permutations to LaurentPoly coefficients.  For the C basis,
    with s = s_i on the left:

        T_s C_w = q C_w                                        if s in L(w)
        T_s C_w = C_{sw} + sum mu(z,w) C_z - q^{-1} C_w        otherwise,

    the sum running over z < w with s in L(z).  For Cdag, T_s = q - Cdag_s
    gives -q^{-1} Cdag_w, resp. q Cdag_w - Cdag_{sw} - sum mu(z,w) Cdag_z.
    Right multiplication uses right descents and w s_i instead.
    """
    if not vec:
        return {}
    n = len(next(iter(vec)))
    tab = table or kl_table(n)
    out = {}
    left = side == "L"
    dagger = basis != "C"
    for w, c in vec.items():
        des = ldes(w) if left else rdes(w)
        if i in des:
            _acc(out, w, -c.shift(-1) if dagger else c.shift(1))
            continue
        ws = lmul(i, w) if left else rmul(w, i)
        if dagger:
            _acc(out, w, c.shift(1))
            _acc(out, ws, -c)
        else:
            _acc(out, w, -c.shift(-1))
            _acc(out, ws, c)
        for z, m in tab.mu_list(w):
            if i in (ldes(z) if left else rdes(z)):
                _acc(out, z, c * (-m if dagger else m))
    return out


# ---------------------------------------------------------------------------
# cells of S_n

class CellData:
    """Preorder reachability and cell partition for one side.

    ``reach[x]`` is the set of y with y <= x, i.e. y reachable from x by
    arrows; ``cells`` are the strongly connected components.
    """

    def __init__(self, nodes, arrows):
        self.nodes = sorted(nodes)
        self.arrows = {x: frozenset(arrows.get(x, ())) for x in self.nodes}
        self.reach = _reachability(self.nodes, self.arrows)
        self.cells = _components(self.nodes, self.reach)
        self.cell_of = {x: c for c in self.cells for x in c}

    def leq(self, y, x):
        """y <= x in the preorder."""
        return y in self.reach[x]

    def partition(self):
        return [sorted(c) for c in self.cells]

    def lower_ideal(self, cell):
        x = next(iter(cell))
        return self.reach[x]

    def strictly_lower(self, cell):
        return self.lower_ideal(cell) - frozenset(cell)


def _reachability(nodes, arrows):
    reach = {}
    for x in nodes:
        seen = {x}
        dq = deque([x])
        while dq:
            y = dq.popleft()
            for z in arrows[y]:
                if z not in seen:
                    seen.add(z)
                    dq.append(z)
        reach[x] = frozenset(seen)
    return reach


def _components(nodes, reach):
    done, cells = set(), []
    for x in nodes:
        if x in done:
            continue
        c = frozenset(y for y in reach[x] if x in reach[y])
        done |= c
        cells.append(c)
    cells.sort(key=lambda c: min(c))
    return cells


def sn_cells(n, basis="C", bound=None):
    """Left, right and two-sided cells of S_n from multiplication by the C_s.

    Returns ``{"L": CellData, "R": CellData, "LR": CellData}``.  Arrows come
    from the W-graph products C_s C_w and C_w C_s; all nonzero
    coefficients there are 1, mu-values or q + q^{-1}, so no cancellation
    can occur and the arrow sets are read off directly.  ``basis`` picks C
    or Cdag; the two give the same arrows by construction, the argument is
    kept so callers can state which basis they mean.
    """
    bound = instance_bound(bound)
    if n > bound:
        raise BoundExceeded("n = %d exceeds the instance bound %d" % (n, bound))
    if basis not in ("C", "Cdagger"):
        raise ValueError("basis must be C or Cdagger")
    tab = kl_table(n)
    perms = all_perms(n)
    arrows = {"L": {}, "R": {}}
    for w in perms:
        mus = tab.mu_list(w)
        for side, des, mul in (("L", ldes, lambda i, w: lmul(i, w)),
                               ("R", rdes, lambda i, w: rmul(w, i))):
            tgt = {w}
            dw = des(w)
            for i in range(1, n):
                if i in dw:
                    continue
                tgt.add(mul(i, w))
                for z, _ in mus:
                    if i in des(z):
                        tgt.add(z)
            arrows[side][w] = tgt
    both = {w: arrows["L"][w] | arrows["R"][w] for w in perms}
    return {"L": CellData(perms, arrows["L"]), "R": CellData(perms, arrows["R"]),
            "LR": CellData(perms, both)}
