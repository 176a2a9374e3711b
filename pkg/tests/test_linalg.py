from itertools import product as iproduct
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from tamesym.errors import AmbientMismatch, InvalidPrime
from tamesym.fields import Field
from tamesym.linalg import (
    MatrixF,
    MatrixZ,
    Subspace,
    det_bareiss,
    intersect,
    kernel,
    kernel_additive_map,
    rank_mod_p,
    rref,
    smith_normal_form,
)

F2 = Field.finite(2)
QQ = Field.rationals()


# ---------------------------------------------------------------------------
# rref

def test_rref_identity_f2():
    m = MatrixF.from_int_rows(F2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    rank, red, pivots = rref(m)
    assert rank == 3 and red == m and pivots == (0, 1, 2)


def test_rref_zero_q():
    m = MatrixF.from_int_rows(QQ, [[0, 0, 0, 0], [0, 0, 0, 0]])
    rank, _, pivots = rref(m)
    assert rank == 0 and pivots == ()


def test_rref_cartan_mod2():
    # the k=1, s=2 Cartan matrix reduced mod 2
    m = MatrixF.from_int_rows(F2, [[4, 2], [2, 3]])
    rank, red, _ = rref(m)
    assert rank == 1
    assert red.entries == ((0, 1), (0, 0))


# ---------------------------------------------------------------------------
# kernel

def test_kernel_identity():
    m = MatrixF.from_int_rows(QQ, [[1, 0], [0, 1]])
    assert kernel(m).dim == 0


def test_kernel_zero_map_dim5():
    m = MatrixF.from_int_rows(QQ, [[0] * 5])
    assert kernel(m).dim == 5


def test_kernel_f2_enumeration_oracle():
    m = MatrixF.from_int_rows(F2, [[1, 1], [1, 1]])
    ker = kernel(m)
    # oracle: enumerate all 4 vectors of F_2^2
    solutions = []
    for v in iproduct(range(2), repeat=2):
        imgs = [(v[0] + v[1]) % 2, (v[0] + v[1]) % 2]
        if all(x == 0 for x in imgs):
            solutions.append(v)
    assert sorted(solutions) == [(0, 0), (1, 1)]
    assert ker.dim == 1
    assert ker.basis == ((1, 1),)


# ---------------------------------------------------------------------------
# subspaces

def test_subspace_canonical():
    s1 = Subspace.from_vectors(QQ, 3, [[1, 1, 0], [0, 1, 1]])
    s2 = Subspace.from_vectors(QQ, 3, [[1, 2, 1], [2, 3, 1], [1, 1, 0]])
    assert s1 == s2  # same space, different spanning sets, identical record


def test_intersect_self_and_zero():
    s = Subspace.from_vectors(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    assert intersect(s, s) == s
    z = Subspace.zero(QQ, 3)
    assert intersect(s, z) == z


def test_intersect_coordinate_subspaces():
    e12 = Subspace.from_vectors(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    e23 = Subspace.from_vectors(QQ, 3, [[0, 1, 0], [0, 0, 1]])
    expected = Subspace.from_vectors(QQ, 3, [[0, 1, 0]])
    assert intersect(e12, e23) == expected


def test_intersect_dimension_formula():
    s1 = Subspace.from_vectors(QQ, 4, [[1, 1, 0, 0], [0, 0, 1, 1]])
    s2 = Subspace.from_vectors(QQ, 4, [[1, 1, 1, 1], [1, 0, 0, 0]])
    meet = intersect(s1, s2)
    join = s1.sum_with(s2)
    assert meet.dim == s1.dim + s2.dim - join.dim


def test_ambient_mismatch():
    s1 = Subspace.from_vectors(QQ, 3, [[1, 0, 0]])
    s2 = Subspace.from_vectors(QQ, 4, [[1, 0, 0, 0]])
    with pytest.raises(AmbientMismatch):
        intersect(s1, s2)


# ---------------------------------------------------------------------------
# Smith normal form

def _minor_gcd_divisors(mat):
    """Oracle: d_k = gcd of k x k minors; divisors are d_k / d_{k-1}."""
    from itertools import combinations

    m = MatrixZ.from_rows(mat)
    n = min(m.rows, m.cols)
    dets_prev = 1
    out = []
    for k in range(1, n + 1):
        g = 0
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                sub = MatrixZ.from_rows(
                    [[m.entries[r][c] for c in cols] for r in rows]
                )
                g = gcd(g, abs(det_bareiss(sub)))
        if g == 0:
            break
        out.append(g // dets_prev)
        dets_prev = g
    return tuple(out)


def test_snf_2x2_cartan():
    m = MatrixZ.from_rows([[4, 2], [2, 3]])
    snf = smith_normal_form(m)
    assert snf.divisors == (1, 8)
    assert _minor_gcd_divisors([[4, 2], [2, 3]]) == (1, 8)
    assert abs(det_bareiss(m)) == 8  # 4ks with k=1, s=2


def test_snf_3x3_cartan():
    rows = [[2, 1, 1], [1, 2, 1], [1, 1, 2]]
    snf = smith_normal_form(MatrixZ.from_rows(rows))
    assert snf.divisors == (1, 1, 4)
    assert _minor_gcd_divisors(rows) == (1, 1, 4)
    assert abs(det_bareiss(MatrixZ.from_rows(rows))) == 4  # 4abc at a=b=c=1


def test_snf_1x1():
    assert smith_normal_form(MatrixZ.from_rows([[5]])).divisors == (5,)


def test_snf_cokernel_free_rank():
    snf = smith_normal_form(MatrixZ.from_rows([[1, 0], [0, 0]]))
    assert snf.rank == 1 and snf.cokernel_free_rank == 1


# ---------------------------------------------------------------------------
# rank mod p

def test_rank_mod_p_examples():
    assert rank_mod_p(MatrixZ.from_rows([[4, 2], [2, 3]]), 2) == 1
    assert rank_mod_p(MatrixZ.from_rows([[4, 2], [2, 4]]), 2) == 0
    assert rank_mod_p(MatrixZ.from_rows([[5]]), 5) == 0


def test_rank_mod_p_invalid():
    with pytest.raises(InvalidPrime):
        rank_mod_p(MatrixZ.from_rows([[1]]), 4)


def test_kernel_additive_map_examples():
    # zero map -> full space
    assert kernel_additive_map(MatrixF.from_int_rows(F2, [[0, 0], [0, 0]])).dim == 2
    # Frobenius on F_4 as an F_2-linear map of dim 2: x -> x^2 swaps g, g+1
    # basis (1, g): 1 -> 1, g -> g+1: columns (1,0), (1,1)
    frob = MatrixF.from_int_rows(F2, [[1, 1], [0, 1]])
    assert kernel_additive_map(frob).dim == 0
    # squaring on span{T} with T^2 = 0: the 1x1 zero map
    assert kernel_additive_map(MatrixF.from_int_rows(F2, [[0]])).dim == 1


# ---------------------------------------------------------------------------
# property tests

small_int = st.integers(min_value=-9, max_value=9)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small_int, min_size=4, max_size=4), min_size=4, max_size=4))
def test_rref_idempotent_and_rank_nullity(rows):
    for field in (QQ, F2, Field.finite(5)):
        m = MatrixF.from_int_rows(field, rows)
        rank, red, _ = rref(m)
        rank2, red2, _ = rref(red)
        assert red2 == red and rank2 == rank
        assert kernel(m).dim + rank == m.cols


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small_int, min_size=4, max_size=4), min_size=4, max_size=4))
def test_snf_chain_and_det(rows):
    m = MatrixZ.from_rows(rows)
    snf = smith_normal_form(m)
    for i in range(len(snf.divisors) - 1):
        assert snf.divisors[i + 1] % snf.divisors[i] == 0
    det = det_bareiss(m)
    if det != 0:
        prod = 1
        for d in snf.divisors:
            prod *= d
        assert prod == abs(det)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.lists(small_int, min_size=4, max_size=4), min_size=4, max_size=4),
    st.sampled_from([2, 3, 5, 7, 11, 13]),
)
def test_rank_mod_p_matches_rref(rows, p):
    m = MatrixZ.from_rows(rows)
    field = Field.finite(p)
    direct, _, _ = rref(MatrixF.from_int_rows(field, rows))
    assert rank_mod_p(m, p) == direct


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(small_int, min_size=3, max_size=3), min_size=1, max_size=4))
def test_subspace_canonicity_under_shuffle(rows):
    s1 = Subspace.from_vectors(QQ, 3, rows)
    s2 = Subspace.from_vectors(QQ, 3, list(reversed(rows)))
    assert s1 == s2


@settings(max_examples=20, deadline=None)
@given(
    st.lists(st.lists(small_int, min_size=4, max_size=4), min_size=1, max_size=3),
    st.lists(st.lists(small_int, min_size=4, max_size=4), min_size=1, max_size=3),
)
def test_intersection_dim_formula_random(rows1, rows2):
    s1 = Subspace.from_vectors(QQ, 4, rows1)
    s2 = Subspace.from_vectors(QQ, 4, rows2)
    meet = intersect(s1, s2)
    join = s1.sum_with(s2)
    assert meet.dim + join.dim == s1.dim + s2.dim
    assert s1.contains_subspace(meet) and s2.contains_subspace(meet)
