"""The Schur-Weyl kernel I^mu_N inside H^mu(S_n) and its candidate generators.

For mu with d parts and N < d, the kernel has a basis of Kazhdan-Lusztig
elements e C^dag_w e, one for each coset whose RSK shape has more than N
rows.  Equivalently the shape is dominated by the hook (n-N, 1^N).

Two candidate generators are compared:

* Y = e C^dag_{w~} e, where w~ is the product of the transpositions
  (mu_1+..+mu_i, mu_1+..+mu_{N+1-i}+1) for 2i <= N+1;
* X = e T_gamma C^dag_{w_{N+1}} T_gamma^{-1} e, where T_gamma moves strand a
  of the antisymmetriser to the first position of block a.

``check_conjectures`` decides X = Y, bar(X) = X and whether each candidate
generates the kernel as a two-sided ideal.  Generation is tested by closing
span{Z} under multiplication by the spanning set on both sides.  Because
Z lies in the kernel, the closure stops as soon as its rank reaches the
kernel dimension.
"""

from __future__ import annotations

import itertools
import random
import time
import warnings
from fractions import Fraction

from .coeffs import LaurentPoly, PoleError, RatFunc
from .hecke import HeckeElt, _acc, kl_C, lgen, lgen_inv, rgen, rgen_inv
from .parabolic import ParaElt, algebra, kl_basis_dagger, _bounded
from .symgroup import Composition, identity, length, parabolic_elements
from .tableaux import Partition, Tableau, dominance, kostka, mu_ord, partitions, rs, rsk_min, sstab

__all__ = [
    "KernelSpec", "ideal_cosets", "ideal_basis", "ideal_dim", "tilde_w_hook", "Y",
    "gamma_word", "gamma_element", "gamma_prime_word", "X", "X_bar",
    "check_conjectures", "one_dim_checks", "tilde_w_mu", "centrality_probe",
    "Echelon", "EVAL_POINTS", "EXACT_RANK_BOUND", "check_eval_point",
]

EVAL_POINTS = (Fraction(7, 3), Fraction(11, 5), Fraction(13, 7))
EXACT_RANK_BOUND = 60


class KernelSpec:
    """A composition mu with d parts and a rank N (the kernel needs d > N)."""

    def __init__(self, mu, N):
        self.mu = Composition(mu)
        self.N = int(N)
        if self.N < 1:
            raise ValueError("N must be positive")
        self.n = self.mu.n
        self.d = self.mu.d
        self.hook = Partition((self.n - self.N,) + (1,) * self.N) if self.n > self.N else None

    def to_json(self):
        return {"mu": list(self.mu), "N": self.N}

    def __repr__(self):
        return "KernelSpec(mu=%s, N=%d)" % (self.mu, self.N)


def _require_top(spec):
    if spec.d != spec.N + 1:
        raise ValueError("this construction needs d = N + 1 (mu has %d parts, N = %d)"
                         % (spec.d, spec.N))


def _in_kernel_shape(lam, spec):
    return len(lam) > spec.N


def ideal_cosets(spec):
    """Cosets whose RSK shape has more than N rows."""
    if spec.d <= spec.N:
        warnings.warn("mu has %d <= N = %d parts; the kernel is zero" % (spec.d, spec.N))
        return []
    alg = algebra(spec.mu)
    out = []
    for D in alg.cosets:
        lam = rsk_min(D)[0].shape
        if dominance(spec.hook, lam) != _in_kernel_shape(lam, spec):
            raise AssertionError("hook criterion disagrees with the row count for %s" % (lam,))
        if _in_kernel_shape(lam, spec):
            out.append(D)
    return out


def ideal_basis(spec):
    """KL-dagger basis of the kernel: unit vectors B_D, D in ideal_cosets(spec)."""
    return [ParaElt._raw(spec.mu, "KLdagger", {D.rmin: RatFunc(1)}) for D in ideal_cosets(spec)]


def ideal_dim(spec):
    """sum of kostka(lam, mu)^2 over lam >= mu^ord with more than N rows."""
    if spec.d <= spec.N:
        return 0
    mo = mu_ord(spec.mu)
    return sum(kostka(lam, spec.mu) ** 2 for lam in partitions(spec.n)
               if dominance(lam, mo) and dominance(spec.hook, lam))


# ---------------------------------------------------------------------------
# Y

def _block_starts(mu):
    return list(itertools.accumulate((1,) + tuple(mu[:-1])))


def tilde_w_hook(spec):
    """The involution w~_{N+1}, cross-checked against the hook tableau."""
    _require_top(spec)
    mu, N, n = spec.mu, spec.N, spec.n
    partial = list(itertools.accumulate(mu))
    w = list(range(1, n + 1))
    i = 1
    while 2 * i <= N + 1:
        a = partial[i - 1]
        b = partial[N - i] + 1
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
        i += 1
    w = tuple(w)
    # the standard hook tableau with first column 1, mu_1+1, ..., mu_1+..+mu_N+1
    col = _block_starts(mu)
    t = Tableau([[1] + [v for v in range(2, n + 1) if v not in col]] + [[v] for v in col[1:]])
    if rs(w) != (t, t):
        raise AssertionError("RS of w~ is not the expected hook tableau pair")
    alg = algebra(mu)
    D = alg.coset_by_rmin.get(w)
    if D is None:
        raise AssertionError("w~ is not a minimal double coset representative")
    (S,) = sstab(spec.hook, mu)
    if rsk_min(D) != (S, S):
        raise AssertionError("RSK of the w~ coset is not the unique hook pair")
    return w


def Y(spec):
    """Y = e C^dag_{w~} e in the Tmin spanning set."""
    w = tilde_w_hook(spec)
    return kl_basis_dagger(algebra(spec.mu).coset_by_rmin[w], check=False)


# ---------------------------------------------------------------------------
# X

def gamma_word(mu, N):
    """Generator indices of T_gamma, left to right."""
    mu = Composition(mu)
    word = []
    s = 0
    for a in range(1, N + 1):
        s += mu[a - 1]
        word.extend(range(s, a, -1))
    if any(i >= mu.n for i in word):
        raise ValueError("T_gamma needs generators outside S_%d" % mu.n)
    return word


def gamma_element(mu, N):
    """T_gamma as a HeckeElt."""
    mu = Composition(mu)
    h = HeckeElt.one(mu.n)
    for i in reversed(gamma_word(mu, N)):
        h = h.lmul_gen(i)
    return h


def gamma_prime_word(mu, N, entries):
    """Word of T_gamma' sending strand a to position entries[a-1] in block a."""
    mu = Composition(mu)
    starts = _block_starts(mu)
    word = []
    for a, ia in enumerate(entries):
        lo, hi = starts[a], starts[a] + mu[a] - 1
        if not lo <= ia <= hi:
            raise ValueError("entry %d is outside block %d" % (ia, a + 1))
        word.extend(range(ia - 1, lo - 1, -1))
    return word + gamma_word(mu, N)


def _antisym(n, k, coeff):
    """sum_{w in S_k} coeff^{l(w)} T_w, built as D_2 D_3 ... D_k applied to 1."""
    vec = {identity(n): LaurentPoly.const(1)}
    for m in range(k, 1, -1):
        u = vec
        r = u
        for g in range(1, m):
            t = coeff(g, r)
            r = dict(u)
            for w, c in t.items():
                _acc(r, w, c)
        vec = r
    return vec


def _csym(n, k):
    """C^dag_{w_k} = sum (-1)^{l(w)} q^{l(w_k)-l(w)} T_w as a Laurent dict."""
    top = k * (k - 1) // 2
    return {w: LaurentPoly.monomial(top - length(w), -1 if length(w) % 2 else 1)
            for w in parabolic_elements(n, range(1, k))}


def _csym_bar(n, k):
    """bar(C^dag_{w_k}) computed factor by factor: q^{-top} prod_m sum_j (-q)^j T^{-1}...T^{-1}."""
    top = k * (k - 1) // 2
    mq = LaurentPoly.monomial(1, -1)
    vec = _antisym(n, k, lambda g, r: {w: c * mq for w, c in lgen_inv(g, r).items()})
    return {w: c.shift(-top) for w, c in vec.items()}


def _sandwich(vec, word, inverse_right, left_inverse=False):
    """T_word * vec * (T_word)^{-1} (literal) or * T_{reversed word} (inverse-free)."""
    for i in reversed(word):
        vec = lgen_inv(i, vec) if left_inverse else lgen(i, vec)
    for i in reversed(word):
        if inverse_right == "inverse":
            vec = rgen_inv(vec, i)
        elif inverse_right == "reverse":
            vec = rgen(vec, i)
        else:
            raise ValueError(inverse_right)
    return vec


def X(spec, form="free", entries=None):
    """X in the Tmin spanning set.

    ``form`` is "free" for e T_gamma C T_{gamma^{-1}} e, "literal" for
    e T_gamma C T_gamma^{-1} e, or "both", which computes both and checks
    that they agree.  ``entries`` selects a T_gamma' variant.
    """
    _require_top(spec)
    alg = algebra(spec.mu)
    word = (gamma_word(spec.mu, spec.N) if entries is None
            else gamma_prime_word(spec.mu, spec.N, entries))
    base = _csym(spec.n, spec.N + 1)
    forms = ("free", "literal") if form == "both" else (form,)
    res = {}
    for f in forms:
        vec = _sandwich(base, word, "reverse" if f == "free" else "inverse")
        res[f] = alg.project(vec)
    if form == "both" and res["free"] != res["literal"]:
        raise AssertionError("inverse-free and literal forms of X differ")
    return ParaElt._raw(spec.mu, "Tmin", res[forms[0]])


def X_bar(spec):
    """bar(X) = e bar(T_gamma) bar(C^dag) bar(T_gamma^{-1}) e."""
    _require_top(spec)
    alg = algebra(spec.mu)
    word = gamma_word(spec.mu, spec.N)
    vec = _sandwich(_csym_bar(spec.n, spec.N + 1), word, "reverse", left_inverse=True)
    return ParaElt._raw(spec.mu, "Tmin", alg.project(vec))


# ---------------------------------------------------------------------------
# exact / evaluated row echelon

def check_eval_point(point, n):
    """Reject q = 0 and points where q^2 is a root of unity of order 2..n."""
    x = Fraction(point)
    if x == 0:
        return False
    q2 = x * x
    return not any(q2 ** k == 1 for k in range(2, n + 1) if q2 != 1)


class Echelon:
    """Incremental row echelon form over Q(q) (exact) or Q (at a point)."""

    def __init__(self, point=None):
        self.point = point
        self.rows = []          # (pivot, row dict) with row[pivot] == 1

    def _coerce(self, vec):
        if self.point is None:
            return {k: RatFunc.coerce(c) for k, c in vec.items() if c}
        out = {}
        for k, c in vec.items():
            v = RatFunc.coerce(c).eval(self.point)
            if v:
                out[k] = v
        return out

    def reduce(self, vec):
        v = self._coerce(vec)
        for p, row in self.rows:
            c = v.get(p)
            if c:
                for k, a in row.items():
                    nv = v.get(k, 0) - c * a
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        return v

    def add(self, vec):
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p] if self.point is not None else RatFunc(1) / v[p]
        self.rows.append((p, {k: c * inv for k, c in v.items()}))
        return True

    @property
    def rank(self):
        return len(self.rows)


def _points(n, seed):
    pts = [p for p in EVAL_POINTS if check_eval_point(p, n)]
    rng = random.Random(seed)
    while len(pts) < 3:
        p = Fraction(rng.randint(2, 97), rng.randint(1, 97))
        if check_eval_point(p, n) and p not in pts:
            pts.append(p)
    return pts


def generated_rank(alg, Z, target, rank_mode="exact", seed=0):
    """Rank of the two-sided ideal generated by Z (Tmin dict), stopping at ``target``."""
    if rank_mode == "exact":
        ech = [Echelon()]
    else:
        ech = [Echelon(p) for p in _points(alg.n, seed)]
    exact_vectors = []

    def offer(v):
        while True:
            try:
                flags = [e.add(v) for e in ech]
                break
            except PoleError:
                raise
        if flags[0]:
            exact_vectors.append(v)
        return flags[0]

    if not Z:
        return 0
    queue = [Z]
    offer(Z)
    k = 0
    while k < len(queue) and ech[0].rank < target:
        v = queue[k]
        k += 1
        for y in alg.rmins:
            for prod in (alg.left_mult_rep(y, v), alg.right_mult_rep(v, y)):
                if offer(prod):
                    queue.append(prod)
                if ech[0].rank >= target:
                    break
            if ech[0].rank >= target:
                break
    ranks = {e.rank for e in ech}
    if len(ranks) != 1 and ech[0].rank < target:
        raise ArithmeticError("inconsistent ranks across evaluation points: %s" % sorted(ranks))
    if rank_mode != "exact":
        conf = Echelon()
        if sum(conf.add(v) for v in exact_vectors) != ech[0].rank:
            raise ArithmeticError("exact confirmation of the evaluated rank failed")
    return ech[0].rank


# ---------------------------------------------------------------------------
# the conjecture check

def _kernel_coords(elt, spec):
    """KL-dagger coordinates of elt and whether they stay inside the kernel."""
    kl = elt.to_basis("KLdagger")
    inside = {D.rmin for D in ideal_cosets(spec)}
    return kl, all(x in inside for x in kl.terms)


def check_conjectures(spec, rank_mode="auto", seed=0, bound=None):
    """Report on X = Y, bar(X) = X and generation of the kernel by X and Y."""
    t0 = time.perf_counter()
    _require_top(spec)
    _bounded(spec.mu, bound)
    alg = algebra(spec.mu)
    if rank_mode == "auto":
        rank_mode = "exact" if len(alg.cosets) <= EXACT_RANK_BOUND else "eval"
    if rank_mode not in ("exact", "eval"):
        raise ValueError("rank mode must be exact, eval or auto")
    dim = ideal_dim(spec)
    if dim != len(ideal_cosets(spec)):
        raise AssertionError("kernel dimension count disagrees with the coset count")
    x = X(spec, form="both")
    y = Y(spec)
    xkl, x_in = _kernel_coords(x, spec)
    ykl, y_in = _kernel_coords(y, spec)
    xy = xkl == ykl
    barx = X_bar(spec) == x
    yrank = generated_rank(alg, y.terms, dim, rank_mode, seed) if y_in else None
    if xy:
        xrank = yrank
    else:
        xrank = generated_rank(alg, x.terms, dim, rank_mode, seed) if x_in else None
    return {
        "mu": list(spec.mu), "N": spec.N, "idealDim": dim,
        "xyEqual": bool(xy), "barInvariantX": bool(barx),
        "xGenerates": bool(x_in and xrank == dim),
        "yGenerates": bool(y_in and yrank == dim),
        "xInIdeal": bool(x_in), "yInIdeal": bool(y_in),
        "rankMode": rank_mode,
        "elapsedMs": int(round(1000 * (time.perf_counter() - t0))),
    }


def centrality_probe(spec):
    """Cosets y with [X, m_y] != 0 (reported, never asserted)."""
    alg = algebra(spec.mu)
    x = X(spec).terms
    bad = []
    for yy in alg.rmins:
        a = alg.left_mult_rep(yy, x)
        b = alg.right_mult_rep(x, yy)
        if a != b:
            bad.append(yy)
    return bad


# ---------------------------------------------------------------------------
# one-dimensional representations

def tilde_w_mu(mu):
    """The folding involution for a weakly decreasing mu."""
    mu = Composition(mu)
    if list(mu) != sorted(mu, reverse=True):
        raise ValueError("the folding construction needs mu weakly decreasing")
    n = mu.n
    w = list(range(1, n + 1))
    blocks = mu.blocks()
    lo, hi = 0, len(blocks) - 1
    while hi > lo:
        src, dst = blocks[hi], blocks[lo]
        k = len(src)
        for a, b in zip(src, dst[-k:]):
            w[a - 1], w[b - 1] = b, a
        lo += 1
        hi -= 1
    return tuple(w)


def one_dim_checks(mu):
    """Trivial representation on C_{w_n} and the mu^ord eigenvector property."""
    mu = Composition(mu)
    alg = algebra(mu)
    n = mu.n
    w0 = tuple(range(n, 0, -1))
    cw0 = alg.project(kl_C(w0, check=False).terms)
    trivial = all(
        alg.left_mult_rep(y, cw0) == {x: RatFunc.coerce(c) * RatFunc.from_laurent(
            LaurentPoly.monomial(length(y))) for x, c in cw0.items()}
        for y in alg.rmins)
    lam = mu_ord(mu)
    Ds = [D for D in alg.cosets if rsk_min(D)[0].shape == lam]
    if len(Ds) != 1:
        raise AssertionError("expected a single coset of shape mu^ord")
    D = Ds[0]
    folding = None
    if list(mu) == sorted(mu, reverse=True):
        folding = tilde_w_mu(mu) == D.rmin
    B = kl_basis_dagger(D, check=False).terms
    lead = RatFunc.coerce(B[D.rmin])
    eigen = True
    alphas = {}
    for y in alg.rmins:
        P = alg.left_mult_rep(y, B)
        alpha = P.get(D.rmin, RatFunc(0)) / lead
        alphas[y] = alpha
        if P != {x: RatFunc.coerce(c) * alpha for x, c in B.items() if alpha}:
            eigen = False
    return {"mu": list(mu), "trivialRep": bool(trivial), "tildeW": list(D.rmin),
            "foldingAgrees": folding, "eigen": bool(eigen),
            "alphaUnit": alphas[identity(n)] == RatFunc(1)}
