import pytest

from tamesym.build import (
    build_algebra,
    cartan_matrix,
    multiply,
    radical_power_dims,
    socle,
)
from tamesym.catalog import make_entry
from tamesym.errors import ConsistencyError, TruncationError
from tamesym.fields import Field
from tamesym.presentation import parse_presentation

F2 = Field.finite(2)
QQ = Field.rationals()


def build(text):
    return build_algebra(parse_presentation(text))


C1 = """
field char=2
vertices 1
arrow X 0 0
arrow Y 0 0
commutative
relation X^2
relation Y^2
"""

SEMISIMPLE = "field char=0\nvertices 1\n"


def test_c1_dim_and_basis():
    a = build(C1)
    assert a.dim == 4
    assert [a.label(i) for i in range(4)] == ["e0", "X", "Y", "X*Y"]


def test_d1a1_k2_dim8():
    e = make_entry("D1A1", {"k": 2}, QQ)
    a = e.build()
    assert a.dim == 8  # 4k with the single Cartan entry [4k]
    assert cartan_matrix(a).entries == ((8,),)


def test_a1_32_dim5():
    e = make_entry("A1", {"m": 3, "n": 2}, QQ)
    assert e.build().dim == 5


def test_identity_multiplication():
    a = build(C1)
    u = a.unit()
    for i in range(a.dim):
        b = a.basis_element(i)
        assert multiply(a, u, b) == b
        assert multiply(a, b, u) == b


def test_d1a1_xx_is_zero():
    a = make_entry("D1A1", {"k": 2}, F2).build()
    x = a.basis_element(a.index_of((0,)))
    assert multiply(a, x, x) == a.zero()


def test_sd1a1_xx_is_yxy():
    # X^2 = (YX)^{k-1} Y, k = 2 -> YXY
    a = make_entry("SD1A1", {"k": 2}, F2).build()
    x = a.basis_element(a.index_of((0,)))
    sq = multiply(a, x, x)
    names = [a.label(i) for i, c in enumerate(sq) if not a.field.is_zero(c)]
    assert names == ["Y*X*Y"] or sq == [
        a.field.one if a.label(i) == "X*X" else a.field.zero for i in range(a.dim)
    ]
    # either the word YXY survives as a basis monomial or X*X itself is the
    # chosen normal form; both encode the same relation, so verify equality:
    yxy = multiply(a, multiply(a, a.basis_element(a.index_of((1,))), x),
                   a.basis_element(a.index_of((1,))))
    assert sq == yxy


def test_cartan_sd2b1():
    a = make_entry("SD2B1", {"k": 1, "t": 2, "c": 0}, F2).build()
    assert cartan_matrix(a).entries == ((4, 2), (2, 3))


def test_cartan_sd3k_211():
    a = make_entry("SD3K", {"a": 2, "b": 1, "c": 1}, F2).build()
    assert cartan_matrix(a).entries == ((3, 2, 1), (2, 3, 1), (1, 1, 2))


def test_cartan_sums_to_dim():
    for fam, params, fld in [
        ("D2B", {"k": 2, "s": 2, "c": 0}, QQ),
        ("Q3K", {"a": 3, "b": 2, "c": 1}, F2),
        ("D3R", {"k": 1, "s": 3, "t": 2, "u": 2}, QQ),
    ]:
        a = make_entry(fam, params, fld).build()
        assert sum(sum(r) for r in cartan_matrix(a).entries) == a.dim


def test_radical_powers_c1():
    a = build(C1)
    assert radical_power_dims(a) == (4, 3, 1, 0)


def test_radical_powers_semisimple():
    a = build(SEMISIMPLE)
    assert a.dim == 1
    assert radical_power_dims(a) == (1, 0)


def test_radical_powers_a1_32_oracle():
    # brute-force oracle: monomials 1, X, Y, X^2, S with S = X^3 = Y^2,
    # XY = 0, X*S = Y*S = 0
    # J  = {X, Y, X^2, S}        dim 4
    # J^2 = {X^2, S}             dim 2
    # J^3 = {S}                  dim 1
    a = make_entry("A1", {"m": 3, "n": 2}, QQ).build()
    assert radical_power_dims(a) == (5, 4, 2, 1, 0)


def test_socle_c1():
    a = build(C1)
    s = socle(a)
    assert s.dim == 1
    # oracle: multiply all basis monomials; only X*Y kills everything
    xy = a.basis_element(a.index_of((0, 1)))
    for i in range(1, a.dim):
        b = a.basis_element(i)
        assert multiply(a, xy, b) == a.zero() or a.basis_keys[i][0] == "e"
    assert s.contains_vector(xy)


def test_socle_semisimple_is_everything():
    a = build(SEMISIMPLE)
    assert socle(a).dim == a.dim


def test_socle_d3k_dim3():
    a = make_entry("D3K", {"a": 2, "b": 1, "c": 1}, F2).build()
    assert socle(a).dim == 3


def test_vertex_grading():
    a = make_entry("SD2B1", {"k": 1, "t": 2, "c": 0}, F2).build()
    for i in range(a.dim):
        for j in range(a.dim):
            if a.ends[i] != a.starts[j]:
                assert a.mult[i][j] == ()


def test_associativity_full_small():
    for fam, params, fld in [
        ("SD1A1", {"k": 2}, F2),
        ("Q1A1", {"k": 2}, QQ),
        ("SD2B2", {"k": 2, "t": 2, "c": 1}, F2),
        ("Q3A1", {"d": "g"}, Field.finite(2, 2)),
    ]:
        a = make_entry(fam, params, fld).build()
        for i in range(a.dim):
            x = a.basis_element(i)
            for j in range(a.dim):
                y = a.basis_element(j)
                xy = multiply(a, x, y)
                for k in range(a.dim):
                    z = a.basis_element(k)
                    assert multiply(a, xy, z) == multiply(a, x, multiply(a, y, z))


def test_infinite_dimensional_raises():
    with pytest.raises(TruncationError):
        build("field char=0\nvertices 1\narrow X 0 0\n")


def test_expected_dim_consistency():
    pres = parse_presentation(C1)
    with pytest.raises(ConsistencyError):
        build_algebra(pres, expected_dim=5)


def test_block_scale_build_defect5():
    # k = 2^{5-2} = 8: dim 32, must build fast and exactly
    a = make_entry("D1A1", {"k": 8}, F2).build()
    assert a.dim == 32
    a = make_entry("Q3K", {"a": 8, "b": 2, "c": 2}, F2).build()
    assert a.dim == 48


def test_arrow_images_when_arrow_reducible():
    # SD2B2 with t = 2 has relation gamma*beta - eta, so eta stays a basis
    # word; all arrows of catalog algebras survive as basis monomials
    a = make_entry("SD2B2", {"k": 2, "t": 2, "c": 0}, F2).build()
    assert all(idx is not None for idx in a.arrow_indices)
