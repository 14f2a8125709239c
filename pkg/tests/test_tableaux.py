import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from parahecke.parabolic import enumerate_cosets, kl_basis_dagger, kl_basis_plus
from parahecke.symgroup import all_perms, inverse
from parahecke.tableaux import (
    Partition, Tableau, bar_map, cellular_index, cellular_pair, dominance, j_free, kostka, mu_ord,
    partitions, rs, rs_inverse, rsk_max, rsk_min, sstab, stab, standard_lift,
)


def compositions(n):
    for k in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            b = (0,) + cuts + (n,)
            yield tuple(b[i + 1] - b[i] for i in range(k))


SMALL = [mu for n in range(1, 6) for mu in compositions(n)]


# Knuth's RSK on a two-line array, written out independently of the library

def knuth_rsk(pairs):
    P, Q = [], []
    for top, bottom in sorted(pairs):
        v, r = bottom, 0
        while True:
            if r == len(P):
                P.append([v])
                Q.append([top])
                break
            row = P[r]
            j = next((k for k, x in enumerate(row) if x > v), None)
            if j is None:
                row.append(v)
                Q[r].append(top)
                break
            row[j], v = v, row[j]
            r += 1
    return Tableau(P), Tableau(Q)


def two_line_array(w, mu):
    block = {}
    pos = 1
    for a, p in enumerate(mu, start=1):
        for _ in range(p):
            block[pos] = a
            pos += 1
    return [(block[i], block[v]) for i, v in enumerate(w, start=1)]


@pytest.mark.parametrize("mu", SMALL)
def test_rsk_min_matches_knuth_oracle(mu):
    for D in enumerate_cosets(mu):
        assert rsk_min(D) == knuth_rsk(two_line_array(D.rmin, mu))


@pytest.mark.parametrize("mu", SMALL)
def test_rsk_maps_are_bijections_onto_tableau_pairs(mu):
    n = sum(mu)
    targets = {(S, T) for lam in partitions(n) for S in sstab(lam, mu) for T in sstab(lam, mu)}
    cosets = enumerate_cosets(mu)
    assert len(cosets) == len(targets) == sum(kostka(lam, mu) ** 2 for lam in partitions(n))
    assert {rsk_min(D) for D in cosets} == targets
    assert {rsk_max(D) for D in cosets} == targets


@pytest.mark.parametrize("n", range(1, 6))
def test_rs_roundtrip_and_symmetry(n):
    for w in all_perms(n):
        P, Q = rs(w)
        assert P.is_standard() and Q.is_standard() and P.shape == Q.shape
        assert rs_inverse(P, Q) == w
        assert rs(inverse(w)) == (Q, P)


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_tableaux_count(n):
    assert sum(len(stab(lam)) ** 2 for lam in partitions(n)) == factorial(n)


def test_rs_of_231():
    assert rs((2, 3, 1)) == (Tableau([[1, 3], [2]]), Tableau([[1, 2], [3]]))
    assert rs((1, 2, 3)) == (Tableau([[1, 2, 3]]), Tableau([[1, 2, 3]]))


@pytest.mark.parametrize("mu", [(2, 2, 2), (3, 1, 2), (1, 2, 1, 2), (2, 4), (1,) * 6])
def test_lift_inverts_bar_on_j_free_tableaux(mu):
    n = sum(mu)
    for lam in partitions(n):
        for t in stab(lam):
            S = bar_map(t, mu)
            if j_free(t, mu):
                assert S is not None and S.is_semistandard()
                assert standard_lift(S, mu) == t
            if S is not None:
                assert j_free(standard_lift(S, mu), mu)


def test_bar_map_example_222():
    S = Tableau([[1, 1, 2, 3], [2, 3]])
    assert bar_map(Tableau([[1, 2, 3, 5], [4, 6]]), (2, 2, 2)) == S
    assert standard_lift(S, (2, 2, 2)) == Tableau([[1, 2, 4, 6], [3, 5]])


def test_bar_map_failure_value():
    assert bar_map(Tableau([[1], [2]]), (2,)) is None


def test_single_row_always_maps():
    assert bar_map(Tableau([[1, 2, 3, 4]]), (1, 3)) == Tableau([[1, 2, 2, 2]])


def test_rsk_example_211():
    D = next(D for D in enumerate_cosets((2, 1, 1)) if D.rmin == (1, 3, 4, 2))
    assert rsk_min(D) == (Tableau([[1, 1, 3], [2]]), Tableau([[1, 1, 2], [3]]))
    assert rsk_max(D) == (Tableau([[1, 1, 2], [3]]), Tableau([[1, 1, 3], [2]]))


def test_kostka_example():
    assert kostka((3, 1), (2, 1, 1)) == 2
    assert [kostka(lam, (2, 2, 2)) for lam in
            [(6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (2, 2, 2)]] == [1, 2, 3, 1, 1, 2, 1]


weights = st.lists(st.integers(1, 3), min_size=1, max_size=4).filter(lambda m: sum(m) <= 7)


@given(weights, st.randoms())
def test_kostka_ignores_weight_order(mu, rnd):
    nu = list(mu)
    rnd.shuffle(nu)
    for lam in partitions(sum(mu)):
        assert kostka(lam, mu) == kostka(lam, nu)
        assert (kostka(lam, mu) > 0) == dominance(lam, mu_ord(mu))


@given(weights)
def test_sstab_entries_are_semistandard(mu):
    for lam in partitions(sum(mu)):
        for S in sstab(lam, mu):
            assert S.is_semistandard() and S.shape == lam
            assert S.weight(len(mu)) == tuple(mu)


def test_partition_helpers():
    lam = Partition((3, 1))
    assert lam.conjugate() == (2, 1, 1) and lam.size == 4
    assert dominance((3, 1), (2, 2)) and not dominance((2, 2), (3, 1))
    assert len(list(partitions(6))) == 11
    with pytest.raises(ValueError):
        Partition((1, 2))


@pytest.mark.parametrize("mu", [(2, 1, 1), (2, 2), (1, 2, 1), (2, 1, 2)])
@pytest.mark.parametrize("kind", ["C", "Cdagger"])
def test_cellular_index_roundtrip(mu, kind):
    for D in enumerate_cosets(mu):
        S, T = cellular_pair(D, kind)
        elt = cellular_index(S, T, kind, check=True)
        expected = kl_basis_plus(D) if kind == "C" else kl_basis_dagger(D)
        assert elt == expected


def test_cellular_index_example_211():
    elt = cellular_index([[1, 1, 3], [2]], [[1, 1, 2], [3]], "Cdagger")
    D = next(D for D in enumerate_cosets((2, 1, 1)) if D.rmin == (1, 3, 4, 2))
    assert elt == kl_basis_dagger(D)
