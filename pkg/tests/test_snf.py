from __future__ import annotations

import random
from math import gcd

import pytest

from looptorsion import snf


def sparse(mat):
    return [{j: v for j, v in enumerate(row) if v} for row in mat]


def random_matrix(rng, m, n, lo=-6, hi=6, density=0.7):
    return [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(n)] for _ in range(m)]


def test_snf_fixed_examples():
    assert snf.smith_normal_form(sparse([[2, 0], [0, 4]]), 2) == ([2, 4], 2)
    assert snf.smith_normal_form(sparse([[2, 4], [4, 8]]), 2) == ([2], 1)
    assert snf.smith_normal_form(sparse([[1, 0], [0, 0]]), 2) == ([1], 1)
    assert snf.smith_normal_form([], 5) == ([], 0)


def test_snf_divisibility_chain_holds():
    rng = random.Random(23)
    for _ in range(60):
        mat = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        invs, rank = snf.smith_normal_form(sparse(mat), len(mat[0]))
        assert len(invs) == rank
        assert all(d > 0 for d in invs)
        for a, b in zip(invs, invs[1:]):
            assert b % a == 0


def test_snf_matches_dense_oracle_on_random_matrices():
    rng = random.Random(29)
    for _ in range(80):
        mat = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), lo=-9, hi=9)
        invs, _ = snf.smith_normal_form(sparse(mat), len(mat[0]))
        assert invs == snf.invariant_factors_dense(mat)


def test_snf_known_diagonalization():
    # 2x2 with determinant 12 and content 2: invariants (2, 6)
    mat = [[2, 4], [4, 14]]
    assert snf.smith_normal_form(sparse(mat), 2)[0] == [2, 6]
    assert snf.invariant_factors_dense(mat) == [2, 6]


def test_rank_exact_agrees_with_modular_rank_away_from_torsion():
    rng = random.Random(31)
    for _ in range(40):
        mat = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        rows = sparse(mat)
        invs, rank = snf.smith_normal_form(rows, len(mat[0]))
        assert snf.rank_exact(rows) == rank
        for p in (101, 1_000_003):
            expected = sum(1 for d in invs if d % p)
            assert snf.rank_mod_p(rows, len(mat[0]), p) == expected


def test_rank_mod_p_detects_torsion_drop():
    rows = sparse([[2, 0], [0, 3]])
    assert snf.rank_mod_p(rows, 2, 2) == 1
    assert snf.rank_mod_p(rows, 2, 3) == 1
    assert snf.rank_mod_p(rows, 2, 5) == 2


def test_rank_mod_p_sparse_and_dense_paths_agree():
    rng = random.Random(37)
    for _ in range(25):
        mat = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        rows = sparse(mat)
        for p in (2, 13, 97):
            assert snf._rank_sparse_mod_p(rows, p) == snf._rank_dense_mod_p(rows, len(mat[0]), p)


def test_rank_mod_p_rejects_huge_prime():
    with pytest.raises(ValueError):
        snf.rank_mod_p([{0: 1}], 1, 1 << 61)


def test_order_in_quotient_examples():
    # lattice spanned by (2,0) and (0,3) in Z^2
    rows = sparse([[2, 0], [0, 3]])
    assert snf.order_in_quotient(rows, {0: 1}) == 2
    assert snf.order_in_quotient(rows, {0: 1, 1: 1}) == 6
    assert snf.order_in_quotient(rows, {0: 2}) == 1
    # support outside the column span of the lattice: infinite order
    assert snf.order_in_quotient(sparse([[2, 0, 0]]), {2: 1}) is None


def test_order_in_quotient_agrees_with_naive_search():
    rng = random.Random(41)
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        mat = random_matrix(rng, m, n, lo=-5, hi=5)
        rows = sparse(mat)
        vec = {j: rng.randint(-4, 4) for j in range(n) if rng.random() < 0.8}
        vec = {j: v for j, v in vec.items() if v}
        if not vec:
            continue
        order = snf.order_in_quotient(rows, dict(vec))
        naive = snf.naive_order_in_quotient(rows, n, dict(vec), 60)
        if order is not None and order <= 60:
            assert naive == order
        else:
            assert naive is None


def test_triangular_basis_membership():
    basis = snf.triangular_lattice_basis(sparse([[2, 2, 0], [0, 4, 4]]), 3)
    assert snf.in_lattice(basis, [2, 2, 0])
    assert snf.in_lattice(basis, [2, 6, 4])
    assert not snf.in_lattice(basis, [1, 1, 0])
    assert not snf.in_lattice(basis, [2, 2, 1])


def test_eliminator_handles_non_unit_pivots():
    # no +-1 entries anywhere; forces the gcd-reduction path
    mat = [[6, 10], [15, 4]]
    det = abs(6 * 4 - 10 * 15)
    invs, rank = snf.smith_normal_form(sparse(mat), 2)
    assert rank == 2
    assert invs[0] * invs[1] == det
    assert invs[0] == gcd(gcd(6, 10), gcd(15, 4))
    assert invs == snf.invariant_factors_dense(mat)
