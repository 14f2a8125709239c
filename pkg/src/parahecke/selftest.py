"""Replays the reference examples shipped with the package.

Each check returns True or raises; ``run_all`` collects the outcomes so the
command line can print one line per example.
"""

from __future__ import annotations

from .coeffs import LaurentPoly, RatFunc
from .hecke import HeckeElt, kl_C, kl_Cdagger, q_antisymmetriser, sn_cells
from .parabolic import (
    ParaElt, algebra, cell_module, enumerate_cosets, kl_basis_dagger, kl_basis_plus, para_cells,
)
from .schurweyl import (
    KernelSpec, X, Y, check_conjectures, one_dim_checks, tilde_w_hook, tilde_w_mu,
)
from .symgroup import Composition, compose, from_word, simple, subset_J
from .tableaux import (
    Tableau, bar_map, dominance, kostka, predicted_cells, rs, rsk_max, rsk_min, shape_of,
    standard_lift, j_free,
)

q = LaurentPoly.monomial(1)
one = LaurentPoly.const(1)


def _m(mu, pairs, basis="Tmin"):
    n = Composition(mu).n
    return ParaElt(mu, basis, {from_word(w, n): c for w, c in pairs})


def _coset(mu, word):
    return algebra(mu).coset_by_rmin[from_word(word, Composition(mu).n)]


def check_bar_swaps_powers():
    p = LaurentPoly.monomial(-1) + LaurentPoly.monomial(-3)
    return p.bar() == q + q ** 3


def check_s1s2_is_231():
    return compose(simple(1, 3), simple(2, 3)) == (2, 3, 1)


def check_quadratic_relation():
    s = HeckeElt.gen(1, 2)
    return s * s == s.scale(q - q ** -1) + HeckeElt.one(2)


def check_kl_polynomial_13_12321():
    c = kl_C(from_word([1, 2, 3, 2, 1], 4))
    return c.coeff(from_word([1, 3], 4)) == RatFunc.from_laurent(q ** -1 + q ** -3)


def check_cdagger_s():
    return kl_Cdagger(simple(1, 2)) == HeckeElt.T((2, 1), -1) + HeckeElt.T((1, 2), q)


def check_antisymmetriser_coefficients():
    a = q_antisymmetriser(3, 3)
    want = {(): q ** 3, (1,): -q ** 2, (2,): -q ** 2, (1, 2): q, (2, 1): q, (1, 2, 1): -one}
    return all(a.coeff(from_word(w, 3)) == RatFunc.from_laurent(c) for w, c in want.items())


def check_J_of_222():
    return subset_J((2, 2, 2)) == frozenset({1, 3, 5})


def check_coset_counts():
    return (len(enumerate_cosets((2, 2))) == 3 and len(enumerate_cosets((2, 1, 1))) == 7
            and {D.rmin for D in enumerate_cosets((2, 1, 1))} == {
                from_word(w, 4) for w in ([], [2], [3], [2, 3], [3, 2], [2, 3, 2], [2, 1, 3, 2])})


def check_rplus_of_2132():
    return _coset((2, 1, 1), [2, 1, 3, 2]).rplus == from_word([1, 2, 1, 3, 2, 1], 4)


def check_plus_basis_22():
    mu = (2, 2)
    got = [kl_basis_plus(_coset(mu, w)) for w in ([], [2], [2, 1, 3, 2])]
    want = [
        _m(mu, [([], 1)], "TD"),
        _m(mu, [([2], 1), ([], RatFunc.from_laurent(q ** -1 + q ** -3))], "TD"),
        _m(mu, [([2, 1, 3, 2], 1), ([2], RatFunc.from_laurent(q ** -1)),
                ([], RatFunc.from_laurent(q ** -4))], "TD"),
    ]
    return got == want


def check_dagger_basis_22():
    mu = (2, 2)
    rf = RatFunc.from_laurent
    return (kl_basis_dagger(_coset(mu, [])) == _m(mu, [([], 1)])
            and kl_basis_dagger(_coset(mu, [2])) == _m(mu, [([2], -1), ([], rf(q))])
            and kl_basis_dagger(_coset(mu, [2, 1, 3, 2])) == _m(
                mu, [([2, 1, 3, 2], 1), ([2], rf(-q - q ** 3)), ([], rf(q ** 2))]))


def check_dagger_basis_121():
    mu = (1, 2, 1)
    rf = RatFunc.from_laurent
    want = _m(mu, [([1, 2, 3, 2, 1], -1), ([1, 2, 3], rf(q ** 2)), ([3, 2, 1], rf(q ** 2)),
                   ([1, 3], rf(q - q ** 3)), ([1], rf(-q ** 2)), ([3], rf(-q ** 2)),
                   ([], rf(q ** 3))])
    return kl_basis_dagger(_coset(mu, [1, 2, 3, 2, 1])) == want


def check_iota_fixes_unit():
    u = ParaElt.unit((2, 1, 1))
    return u.iota() == u


def check_rs_231():
    return rs((2, 3, 1)) == (Tableau([[1, 3], [2]]), Tableau([[1, 2], [3]]))


def check_bar_map_222():
    t = Tableau([[1, 2, 3, 5], [4, 6]])
    S = Tableau([[1, 1, 2, 3], [2, 3]])
    lift = standard_lift(S, (2, 2, 2))
    return (bar_map(t, (2, 2, 2)) == S and bar_map(lift, (2, 2, 2)) == S
            and lift == Tableau([[1, 2, 4, 6], [3, 5]]) and j_free(lift, (2, 2, 2)))


def check_rsk_tables_211():
    D = _coset((2, 1, 1), [2, 3])
    return (rsk_min(D) == (Tableau([[1, 1, 3], [2]]), Tableau([[1, 1, 2], [3]]))
            and D.rplus == from_word([1, 2, 3, 1], 4)
            and rsk_max(D) == (Tableau([[1, 1, 2], [3]]), Tableau([[1, 1, 3], [2]])))


def check_kostka_31_211():
    return kostka((3, 1), (2, 1, 1)) == 2


def check_cells_211():
    mu = (2, 1, 1)
    label = {_coset(mu, w): i for i, w in enumerate(
        ([], [2], [3], [2, 3], [3, 2], [2, 3, 2], [2, 1, 3, 2]), start=1)}

    def named(part):
        return sorted(sorted(label[D] for D in c) for c in part)

    plus = para_cells(mu, "KLplus")
    dag = para_cells(mu, "KLdagger")
    return (named(plus["LR"].partition()) == [[1], [2, 4, 5, 6], [3], [7]]
            and named(plus["L"].partition()) == [[1], [2, 5], [3], [4, 6], [7]]
            and named(dag["LR"].partition()) == [[1], [2, 3, 4, 5], [6], [7]]
            and named(dag["L"].partition()) == [[1], [2, 5], [3, 4], [6], [7]]
            and all(named(plus[s].partition()) == named(predicted_cells(mu, "KLplus")[s])
                    for s in ("L", "R", "LR")))


def check_two_sided_order_S4():
    cells = sn_cells(4)["LR"]
    perms = [w for c in cells.partition() for w in c]
    return all(cells.leq(a, b) == dominance(shape_of(b), shape_of(a)) for a in perms for b in perms)


def check_trivial_and_bottom_reps():
    r = one_dim_checks((2, 2))
    return r["trivialRep"] and r["eigen"] and r["alphaUnit"] and r["tildeW"] == [3, 4, 1, 2]


def check_module_dims_222():
    mu = (2, 2, 2)
    cells = para_cells(mu, "KLdagger", "L")
    by_shape = {}
    for c in cells.partition():
        lam = rsk_min(min(c))[0].shape
        mats = cell_module(mu, "KLdagger", c)
        by_shape.setdefault(lam, set()).add(len(mats[tuple(range(1, 7))]))
    order = [(6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (2, 2, 2)]
    return [by_shape[lam] for lam in order] == [{k} for k in (1, 2, 3, 1, 1, 2, 1)]


def check_tilde_w():
    return (tilde_w_hook(KernelSpec((2, 2), 1)) == (1, 3, 2, 4)
            and tilde_w_hook(KernelSpec((2, 2, 2), 2)) == (1, 5, 3, 4, 2, 6)
            and tilde_w_hook(KernelSpec((2, 2, 2, 2), 3)) == (1, 7, 3, 5, 4, 6, 2, 8))


def check_tilde_w_322():
    return tilde_w_mu((3, 2, 2)) == (1, 6, 7, 4, 5, 2, 3)


def check_X_equals_Y_22():
    s = KernelSpec((2, 2), 1)
    return X(s, form="both") == Y(s) == _m((2, 2), [([2], -1), ([], RatFunc.from_laurent(q))])


def check_conjecture_222():
    r = check_conjectures(KernelSpec((2, 2, 2), 2), rank_mode="exact")
    return r["xyEqual"] and r["barInvariantX"] and r["xGenerates"] and r["idealDim"] == 6


def check_conjecture_hooks():
    for mu in ((1, 1, 1), (2, 1, 1), (3, 1, 1, 1)):
        r = check_conjectures(KernelSpec(mu, len(mu) - 1), rank_mode="exact")
        if not r["xyEqual"]:
            return False
    return True


CHECKS = [
    ("bar swaps q and q^-1", check_bar_swaps_powers),
    ("s1 s2 = 231", check_s1s2_is_231),
    ("quadratic relation", check_quadratic_relation),
    ("p_{13,12321} = q^-1 + q^-3", check_kl_polynomial_13_12321),
    ("C^dag_s = -T_s + q", check_cdagger_s),
    ("antisymmetriser on S_3", check_antisymmetriser_coefficients),
    ("J(2,2,2) = {1,3,5}", check_J_of_222),
    ("coset counts for (2,2) and (2,1,1)", check_coset_counts),
    ("r+ of the coset of s2s1s3s2", check_rplus_of_2132),
    ("plus basis for (2,2)", check_plus_basis_22),
    ("dagger basis for (2,2)", check_dagger_basis_22),
    ("dagger basis of 12321 for (1,2,1)", check_dagger_basis_121),
    ("iota fixes the unit", check_iota_fixes_unit),
    ("RS of 231", check_rs_231),
    ("bar map and standard lift for (2,2,2)", check_bar_map_222),
    ("RSK pairs of D4 for (2,1,1)", check_rsk_tables_211),
    ("kostka((3,1),(2,1,1)) = 2", check_kostka_31_211),
    ("cells of (2,1,1)", check_cells_211),
    ("two-sided order on S_4 is dominance", check_two_sided_order_S4),
    ("one-dimensional modules for (2,2)", check_trivial_and_bottom_reps),
    ("cell module dimensions for (2,2,2)", check_module_dims_222),
    ("hook involutions", check_tilde_w),
    ("folding involution for (3,2,2)", check_tilde_w_322),
    ("X = Y for (2,2), N = 1", check_X_equals_Y_22),
    ("kernel of (2,2,2), N = 2", check_conjecture_222),
    ("X = Y for (m,1,...,1)", check_conjecture_hooks),
]


def run_all():
    out = []
    for name, fn in CHECKS:
        try:
            ok = bool(fn())
            err = None
        except Exception as exc:  # a crash is a failure, reported with its message
            ok, err = False, "%s: %s" % (type(exc).__name__, exc)
        row = {"name": name, "ok": ok}
        if err:
            row["error"] = err
        out.append(row)
    return out
