import itertools

import pytest
from hypothesis import given, strategies as st

from parahecke.coeffs import LaurentPoly, RatFunc, is_in_qinvZqinv, is_in_qZq
from parahecke.hecke import HeckeElt, h_mult, kl_C, q_symmetriser, sn_cells
from parahecke.parabolic import (
    BASES, ParaElt, algebra, cell_module, coset_of, dagger_annihilation, enumerate_cosets,
    kl_basis_dagger, kl_basis_plus, para_cells, para_lift, para_mult,
    para_project,
)
from parahecke.symgroup import (
    all_perms, bruhat_leq, compose, coset_predicates, from_word, identity, length,
    parabolic_elements, poincare, subset_J,
)
from parahecke.tableaux import dominance, kostka, partitions, predicted_cells, rsk_max, rsk_min

q = LaurentPoly.monomial(1)
rq = RatFunc.from_laurent


def compositions(n):
    for k in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            b = (0,) + cuts + (n,)
            yield tuple(b[i + 1] - b[i] for i in range(k))


SMALL = [mu for n in range(2, 6) for mu in compositions(n)]
N4 = list(compositions(4))


def brute_cosets(mu):
    n = sum(mu)
    WJ = parabolic_elements(n, subset_J(mu))
    seen, out = set(), []
    for w in all_perms(n):
        if w in seen:
            continue
        orbit = {compose(compose(u, w), v) for u in WJ for v in WJ}
        seen |= orbit
        out.append(orbit)
    return out


@pytest.mark.parametrize("mu", SMALL)
def test_cosets_match_brute_force(mu):
    cosets = enumerate_cosets(mu)
    orbits = brute_cosets(mu)
    assert len(cosets) == len(orbits)
    assert [D.rmin for D in cosets] == sorted(D.rmin for D in cosets)
    by_min = {min(o, key=length): o for o in orbits}
    J = subset_J(mu)
    for D in cosets:
        orbit = by_min[D.rmin]
        assert set(D.members()) == orbit and D.size == len(orbit)
        assert D.rplus == max(orbit, key=length)
        assert coset_predicates(D.rmin, J)["inXJJ"]
        assert coset_predicates(D.rplus, J)["inXtildeJJ"]
        assert orbit == {w for w in all_perms(sum(mu))
                         if bruhat_leq(D.rmin, w) and bruhat_leq(w, D.rplus)}


def test_coset_counts():
    assert len(enumerate_cosets((2, 2))) == 3
    assert len(enumerate_cosets((2, 2, 2))) == 21
    rmins = {D.rmin for D in enumerate_cosets((2, 1, 1))}
    assert rmins == {from_word(w, 4) for w in
                     ([], [2], [3], [2, 3], [3, 2], [2, 3, 2], [2, 1, 3, 2])}


@pytest.mark.parametrize("mu", [(2, 2), (2, 1, 1), (1, 2, 1)])
def test_coset_factorisation_is_length_additive(mu):
    for w in all_perms(4):
        D, w1, w2 = coset_of(w, mu)
        assert compose(compose(w1, D.rmin), w2) == w
        assert length(w) == length(w1) + length(D.rmin) + length(w2)


def test_rplus_factorisation_211():
    D = next(D for D in enumerate_cosets((2, 1, 1)) if D.rmin == from_word([2, 1, 3, 2], 4))
    assert D.rplus == from_word([1, 2, 1, 3, 2, 1], 4)
    E, w1, w2 = coset_of(D.rplus, (2, 1, 1))
    assert E == D and length(w1) + length(D.rmin) + length(w2) == 6


@pytest.mark.parametrize("n", [3, 4, 5])
def test_order_compatibility_of_representatives(n):
    for mu in compositions(n):
        cosets = enumerate_cosets(mu)
        for a in cosets:
            for b in cosets:
                assert bruhat_leq(a.rmin, b.rmin) == bruhat_leq(a.rplus, b.rplus)


# ---------------------------------------------------------------------------
# projection, lift and products against direct Hecke computations

def sandwich(mu, h):
    """e_J h e_J computed directly in H(S_n)."""
    e = q_symmetriser(sum(mu), subset_J(mu))
    return h_mult(h_mult(e, h), e)


@pytest.mark.parametrize("mu", N4)
def test_lift_of_mx_is_eTe(mu):
    alg = algebra(mu)
    for x in alg.rmins:
        assert para_lift(ParaElt.m(mu, x)) == sandwich(mu, HeckeElt.T(x))


@pytest.mark.parametrize("mu", [(2, 2), (2, 1, 1), (3, 2), (2, 1, 2), (1, 3, 1)])
def test_standard_basis_scalar(mu):
    """T_D = sum_{w in D} q^{l(w)-l(r+)} T_w equals the stated multiple of e T_x e."""
    alg = algebra(mu)
    n = sum(mu)
    WJ = rq(poincare(n, subset_J(mu)))
    for D in enumerate_cosets(mu):
        x = D.rmin
        TD = HeckeElt(n, {w: q ** (length(w) - length(D.rplus)) for w in D.members()})
        scalar = WJ * WJ / rq(poincare(n, D.L)) * rq(q ** (length(x) - length(D.rplus)))
        assert alg.td_scalar(x) == scalar
        assert para_lift(ParaElt(mu, "TD", {x: 1})) == TD
        assert TD == sandwich(mu, HeckeElt.T(x)).scale(scalar)


hecke4 = st.dictionaries(
    st.permutations([1, 2, 3, 4]).map(tuple),
    st.integers(-3, 3).map(lambda k: q ** k), max_size=4,
).map(lambda d: HeckeElt(4, d))


@given(hecke4, st.sampled_from([(2, 2), (2, 1, 1), (1, 2, 1)]))
def test_projection_matches_sandwich(h, mu):
    assert para_lift(para_project(h, mu)) == sandwich(mu, h)


def test_projection_respects_quadratic_relation():
    s = HeckeElt.gen(2, 4)
    lhs = para_project(s * s, (2, 2))
    rhs = para_project(s, (2, 2)).scale(rq(q - q ** -1)) + para_project(HeckeElt.one(4), (2, 2))
    assert lhs == rhs


@pytest.mark.parametrize("mu", [(2, 2), (2, 1, 1), (1, 2, 1), (3, 1)])
def test_structure_constants_match_hecke(mu):
    alg = algebra(mu)
    for x in alg.rmins:
        for y in alg.rmins:
            a, b = ParaElt.m(mu, x), ParaElt.m(mu, y)
            assert para_lift(para_mult(a, b)) == h_mult(para_lift(a), para_lift(b))


def test_square_of_eTe():
    mu = (2, 2)
    m = ParaElt.m(mu, from_word([2], 4))
    direct = h_mult(sandwich(mu, HeckeElt.gen(2, 4)), sandwich(mu, HeckeElt.gen(2, 4)))
    assert para_lift(para_mult(m, m)) == direct


para22 = st.dictionaries(
    st.sampled_from([(1, 2, 3, 4), (1, 3, 2, 4), (3, 4, 1, 2)]),
    st.integers(-2, 2).map(lambda k: rq(q ** k)), max_size=3,
).map(lambda d: ParaElt((2, 2), "Tmin", d))


@given(para22, para22, para22)
def test_para_mult_associative_with_unit(a, b, c):
    assert para_mult(para_mult(a, b), c) == para_mult(a, para_mult(b, c))
    u = ParaElt.unit((2, 2))
    assert para_mult(u, a) == a and para_mult(a, u) == a


@pytest.mark.parametrize("mu", [(2, 1, 1), (2, 2, 1)])
@pytest.mark.parametrize("basis", BASES)
def test_basis_conversions_round_trip(mu, basis):
    alg = algebra(mu)
    for x in alg.rmins:
        a = ParaElt(mu, basis, {x: rq(q ** 2 - 1)})
        for other in BASES:
            b = a.to_basis(other)
            assert b.to_basis(basis).terms == a.terms


def test_mu_mismatch_raises():
    with pytest.raises(ValueError):
        para_mult(ParaElt.unit((2, 2)), ParaElt.unit((2, 1, 1)))


# ---------------------------------------------------------------------------
# the two KL bases

def test_plus_basis_22():
    mu = (2, 2)
    cos = {D.rmin: D for D in enumerate_cosets(mu)}
    e, s2, s2132 = identity(4), from_word([2], 4), from_word([2, 1, 3, 2], 4)
    assert kl_basis_plus(cos[e]).terms == {e: rq(q ** 0)}
    assert kl_basis_plus(cos[s2]).terms == {s2: rq(q ** 0), e: rq(q ** -1 + q ** -3)}
    assert kl_basis_plus(cos[s2132]).terms == {s2132: rq(q ** 0), s2: rq(q ** -1),
                                              e: rq(q ** -4)}


def test_dagger_basis_examples():
    cos = {D.rmin: D for D in enumerate_cosets((2, 2))}
    w = lambda *word: from_word(list(word), 4)
    assert kl_basis_dagger(cos[w()]).terms == {w(): rq(q ** 0)}
    assert kl_basis_dagger(cos[w(2)]).terms == {w(2): rq(-q ** 0), w(): rq(q)}
    assert kl_basis_dagger(cos[w(2, 1, 3, 2)]).terms == {
        w(2, 1, 3, 2): rq(q ** 0), w(2): rq(-q - q ** 3), w(): rq(q ** 2)}
    D = next(D for D in enumerate_cosets((1, 2, 1)) if D.rmin == w(1, 2, 3, 2, 1))
    assert kl_basis_dagger(D).terms == {
        w(1, 2, 3, 2, 1): rq(-q ** 0), w(1, 2, 3): rq(q ** 2), w(3, 2, 1): rq(q ** 2),
        w(1, 3): rq(q - q ** 3), w(1): rq(-q ** 2), w(3): rq(-q ** 2), w(): rq(q ** 3)}


@pytest.mark.parametrize("mu", SMALL)
def test_kl_bases_bar_invariant_and_unitriangular(mu):
    for D in enumerate_cosets(mu):
        p = kl_basis_plus(D, check=True)
        assert p.bar() == p
        assert p.terms[D.rmin] == 1
        assert all(is_in_qinvZqinv(c) for x, c in p.terms.items() if x != D.rmin)
        assert all(bruhat_leq(x, D.rmin) for x in p.terms)
        d = kl_basis_dagger(D, check=True)
        assert d.bar() == d
        assert d.terms[D.rmin] == (-1) ** length(D.rmin)
        assert all(is_in_qZq(c) for x, c in d.terms.items() if x != D.rmin)
        assert all(bruhat_leq(x, D.rmin) for x in d.terms)


@pytest.mark.parametrize("mu", [(2, 2), (2, 1, 1), (1, 2, 1)])
def test_kl_bases_are_unique_under_mutation(mu):
    """Changing any lower coefficient by +-q^{-1} (resp. +-q) breaks bar-invariance."""
    for D in enumerate_cosets(mu):
        p = kl_basis_plus(D)
        d = kl_basis_dagger(D)
        for x in p.terms:
            if x == D.rmin:
                continue
            for delta in (rq(q ** -1), rq(-q ** -1)):
                t = dict(p.terms)
                t[x] = t[x] + delta
                assert ParaElt(mu, "TD", t).bar() != ParaElt(mu, "TD", t)
        for x in d.terms:
            if x == D.rmin:
                continue
            for delta in (rq(q), rq(-q)):
                t = dict(d.terms)
                t[x] = t[x] + delta
                assert ParaElt(mu, "Tmin", t).bar() != ParaElt(mu, "Tmin", t)


@pytest.mark.parametrize("mu", [(2, 2), (2, 1, 1), (1, 2, 1), (2, 2, 1), (3, 1, 1), (1, 3, 1)])
def test_annihilation_outside_XJJ(mu):
    J = subset_J(mu)
    killed = dagger_annihilation(mu)
    for w, zero in killed.items():
        assert zero == (not coset_predicates(w, J)["inXJJ"])
    assert sum(not z for z in killed.values()) == len(enumerate_cosets(mu))


@pytest.mark.parametrize("mu", [(2, 2), (2, 1, 1), (1, 2, 1), (2, 2, 1), (3, 1, 1)])
def test_plus_basis_lifts_to_C_of_longest_representative(mu):
    for D in enumerate_cosets(mu):
        c = kl_C(D.rplus)
        assert para_lift(kl_basis_plus(D)) == c
        ratio = sandwich(mu, c).coeff(D.rplus) / c.coeff(D.rplus)
        assert ratio and sandwich(mu, c) == c.scale(ratio)


def test_iota_fixes_unit():
    u = ParaElt.unit((2, 1, 1))
    assert u.iota() == u


# ---------------------------------------------------------------------------
# cells

@pytest.mark.parametrize("mu", SMALL)
@pytest.mark.parametrize("basis", ["KLplus", "KLdagger"])
def test_cells_match_rsk_prediction(mu, basis):
    cells = para_cells(mu, basis)
    pred = predicted_cells(mu, basis)
    for s in ("L", "R", "LR"):
        assert [frozenset(c) for c in cells[s].partition()] == pred[s]


@pytest.mark.parametrize("mu", SMALL)
@pytest.mark.parametrize("basis", ["KLplus", "KLdagger"])
def test_cells_are_sn_cells_intersected(mu, basis):
    n = sum(mu)
    sn = sn_cells(n)
    cells = para_cells(mu, basis)
    rep = (lambda D: D.rplus) if basis == "KLplus" else (lambda D: D.rmin)
    cosets = enumerate_cosets(mu)
    for s in ("L", "R", "LR"):
        for D in cosets:
            same = {E for E in cosets if rep(E) in sn[s].cell_of[rep(D)]}
            assert cells[s].cell_of[D] == same


@pytest.mark.parametrize("mu", SMALL)
def test_plus_preorder_is_restriction_of_sn_preorder(mu):
    sn = sn_cells(sum(mu))
    cells = para_cells(mu, "KLplus")
    cosets = enumerate_cosets(mu)
    for s in ("L", "R", "LR"):
        for a in cosets:
            for b in cosets:
                assert cells[s].leq(a, b) == sn[s].leq(a.rplus, b.rplus)


@pytest.mark.parametrize("mu", SMALL)
def test_dagger_preorder_respects_shape_order(mu):
    lr = para_cells(mu, "KLdagger")["LR"]
    plus = para_cells(mu, "KLplus")["LR"]
    cosets = enumerate_cosets(mu)
    for a in cosets:
        for b in cosets:
            if lr.leq(a, b):
                assert dominance(rsk_min(b)[0].shape, rsk_min(a)[0].shape)
            # plus basis: reverse dominance on the RSK2 shapes
            assert plus.leq(a, b) == dominance(rsk_max(a)[0].shape, rsk_max(b)[0].shape)


def test_cells_example_211():
    mu = (2, 1, 1)
    label = {}
    for i, word in enumerate(([], [2], [3], [2, 3], [3, 2], [2, 3, 2], [2, 1, 3, 2]), start=1):
        label[from_word(word, 4)] = i

    def named(part):
        return sorted(sorted(label[D.rmin] for D in c) for c in part)

    plus = para_cells(mu, "KLplus")
    dag = para_cells(mu, "KLdagger")
    assert named(plus["LR"].partition()) == [[1], [2, 4, 5, 6], [3], [7]]
    assert named(plus["L"].partition()) == [[1], [2, 5], [3], [4, 6], [7]]
    assert named(dag["LR"].partition()) == [[1], [2, 3, 4, 5], [6], [7]]
    assert named(dag["L"].partition()) == [[1], [2, 5], [3, 4], [6], [7]]


def test_identity_coset_tops_the_dagger_order():
    lr = para_cells((2, 1, 1), "KLdagger")["LR"]
    top = next(D for D in enumerate_cosets((2, 1, 1)) if D.rmin == identity(4))
    assert lr.cell_of[top] == {top}
    assert all(lr.leq(D, top) for D in enumerate_cosets((2, 1, 1)))


@pytest.mark.parametrize("mu", [(2, 2), (2, 1, 1), (2, 2, 1), (3, 1, 1), (1, 2, 2)])
@pytest.mark.parametrize("basis", ["KLplus", "KLdagger"])
def test_cell_module_dimensions(mu, basis):
    n = sum(mu)
    left = para_cells(mu, basis, "L")
    lr = para_cells(mu, basis, "LR")
    shape = (lambda D: rsk_min(D)[0].shape) if basis == "KLdagger" else (
        lambda D: rsk_max(D)[0].shape)
    total = 0
    for two in lr.partition():
        lefts = [c for c in left.partition() if set(c) <= set(two)]
        dims = {len(c) for c in lefts}
        assert dims == {kostka(shape(min(two)), mu)}
        total += dims.pop() ** 2
        for c in lefts:
            mats = cell_module(mu, basis, c)
            unit = mats[identity(n)]
            k = len(c)
            assert unit == [[RatFunc(int(i == j)) for j in range(k)] for i in range(k)]
    assert total == len(enumerate_cosets(mu))


def test_cell_module_dimensions_222():
    mu = (2, 2, 2)
    left = para_cells(mu, "KLdagger", "L")
    by_shape = {}
    for c in left.partition():
        by_shape.setdefault(rsk_min(min(c))[0].shape, set()).add(len(c))
    order = [(6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (2, 2, 2)]
    assert [by_shape[lam] for lam in order] == [{1}, {2}, {3}, {1}, {1}, {2}, {1}]
    assert sum(kostka(lam, mu) ** 2 for lam in partitions(6)) == 21


def test_trivial_module_acts_by_q_length():
    mu = (2, 1, 1)
    alg = algebra(mu)
    w0 = (4, 3, 2, 1)
    c = para_project(kl_C(w0), mu)
    for y in alg.rmins:
        assert para_mult(ParaElt.m(mu, y), c) == c.scale(rq(q ** length(y)))
