import pytest

from tamesym.build import cartan_matrix
from tamesym.catalog import (
    BlockSpec,
    list_families,
    make_entry,
    tame_block_entries,
)
from tamesym.errors import CharConstraint, ParameterConstraint
from tamesym.fields import Field
from tamesym.invariants import centre, comm_radical
from tamesym.linalg import det_bareiss

F2 = Field.finite(2)
F3 = Field.finite(3)
F4 = Field.finite(2, 2)
QQ = Field.rationals()


def test_list_families_complete():
    fams = list_families()
    assert len(fams) == 18
    by_name = {f["name"]: f for f in fams}
    assert by_name["D2B"]["special_biserial"] == "c == 0"
    assert by_name["B1"]["char_two_only"] is True
    assert by_name["SD1A2"]["char_two_only"] is True
    assert by_name["Q3K"]["rep_type"] == "quaternion"
    assert by_name["D3R"]["n_simples"] == 3


def test_make_entry_d1a1_relations():
    e = make_entry("D1A1", {"k": 2}, F2)
    assert len(e.presentation.relations) == 3
    assert e.special_biserial is True


def test_q3a1_needs_scalar_outside_prime_field_of_two():
    with pytest.raises(ParameterConstraint):
        make_entry("Q3A1", {"d": 1}, F2)
    with pytest.raises(ParameterConstraint):
        make_entry("Q3A1", {"d": 0}, F4)
    e = make_entry("Q3A1", {"d": "g"}, F4)
    assert e.params == (("d", "g"),)


def test_sd3k_constraint():
    with pytest.raises(ParameterConstraint):
        make_entry("SD3K", {"a": 1, "b": 1, "c": 1}, F2)


def test_char_constraints():
    with pytest.raises(CharConstraint):
        make_entry("B1", {}, F3)
    with pytest.raises(CharConstraint):
        make_entry("D1A2", {"k": 2, "d": 0}, QQ)
    with pytest.raises(CharConstraint):
        make_entry("D2B", {"k": 2, "s": 1, "c": 1}, QQ)
    # c = 0 is fine in any characteristic
    make_entry("D2B", {"k": 2, "s": 1, "c": 0}, QQ)


def test_parameter_normalization_constraints():
    with pytest.raises(ParameterConstraint):
        make_entry("A1", {"m": 2, "n": 2}, QQ)  # m+n > 4 fails
    with pytest.raises(ParameterConstraint):
        make_entry("D2B", {"k": 1, "s": 2, "c": 0}, QQ)  # k >= s fails (strict)
    make_entry("D2B", {"k": 1, "s": 2, "c": 0}, QQ, strict=False)
    with pytest.raises(ParameterConstraint):
        make_entry("Q2B1", {"k": 1, "s": 2, "a": 1, "c": 0}, QQ)  # s >= 3
    with pytest.raises(ParameterConstraint):
        make_entry("SD2B2", {"k": 1, "t": 2, "c": 0}, QQ)  # k+t >= 4
    with pytest.raises(ParameterConstraint):
        make_entry("Q2B1", {"k": 1, "s": 3, "a": 0, "c": 0}, QQ)  # a != 0
    with pytest.raises(ParameterConstraint):
        make_entry("SD1A2", {"k": 2, "c": 0, "d": 0}, F2)  # (c,d) != (0,0)
    with pytest.raises(ParameterConstraint):
        make_entry("Q3K", {"a": 2, "b": 2, "c": 1}, QQ)  # excluded triple


def test_unknown_family_and_params():
    with pytest.raises(ParameterConstraint):
        make_entry("Z9", {}, QQ)
    with pytest.raises(ParameterConstraint):
        make_entry("C1", {"k": 1}, QQ)


def test_blocks_dihedral_n3_two_simples():
    entries = tame_block_entries(BlockSpec("dihedral", 3, 2))
    assert [e.label for e in entries] == ["D2B(k=1,s=2,c=0)", "D2B(k=1,s=2,c=1)"]


def test_blocks_semidihedral_n4_three_simples():
    (e,) = tame_block_entries(BlockSpec("semidihedral", 4, 3))
    assert e.label == "SD3K(a=4,b=2,c=1)"


def test_blocks_quaternion_n3_one_simple():
    (e,) = tame_block_entries(BlockSpec("quaternion", 3, 1))
    assert e.label == "Q1A1(k=2)"


def test_blocks_defect_bounds():
    with pytest.raises(ParameterConstraint):
        tame_block_entries(BlockSpec("semidihedral", 3, 1))  # needs n >= 4
    with pytest.raises(ParameterConstraint):
        tame_block_entries(BlockSpec("dihedral", 2, 2))  # needs n >= 3
    # dihedral defect 2 with 3 simples is D3K(1,1,1), explicitly allowed
    (e,) = tame_block_entries(BlockSpec("dihedral", 2, 3))
    assert e.label == "D3K(a=1,b=1,c=1)"


def test_one_simple_dims_smallest_parameters():
    for char in (0, 2, 3):
        field = QQ if char == 0 else Field.finite(char)
        assert make_entry("C1", {}, field).build().dim == 4
        assert make_entry("D1A1", {"k": 2}, field).build().dim == 8
        assert make_entry("A1", {"m": 3, "n": 2}, field).build().dim == 5
        if char == 2:
            assert make_entry("B1", {}, field).build().dim == 4
            assert make_entry("SD1A2", {"k": 2, "c": 1, "d": 0}, field).build().dim == 8
            assert make_entry("Q1A2", {"k": 2, "c": 0, "d": 1}, field).build().dim == 8


def test_cartan_grid_2b_families():
    for (k, s) in ((1, 2), (2, 3), (3, 4)):
        for fam, key in (("SD2B1", "t"), ("SD2B2", "t"), ("Q2B1", "s")):
            if fam == "Q2B1" and s < 3:
                continue  # Q2B1 degenerates below s = 3 (hence the constraint)
            params = {"k": k, key: s, "c": 0}
            if fam == "Q2B1":
                params["a"] = 1
            e = make_entry(fam, params, F2, strict=False)
            c = cartan_matrix(e.build())
            assert c.entries == ((4 * k, 2 * k), (2 * k, k + s))
            assert abs(det_bareiss(c)) == 4 * k * s


def test_cartan_grid_3k_families():
    for (a, b, c) in ((2, 1, 1), (3, 2, 1), (4, 3, 2)):
        for fam in ("D3K", "SD3K", "Q3K"):
            if fam == "Q3K" and b < 2:
                continue
            e = make_entry(fam, {"a": a, "b": b, "c": c}, F2)
            mat = cartan_matrix(e.build())
            assert mat.entries == ((a + b, a, b), (a, a + c, c), (b, c, b + c))
            assert abs(det_bareiss(mat)) == 4 * a * b * c


def test_det_grid_up_to_4():
    for k in range(1, 5):
        for s in range(1, 5):
            e = make_entry("SD2B1", {"k": k, "t": max(s, 2), "c": 0}, F2)
            assert abs(det_bareiss(cartan_matrix(e.build()))) == 4 * k * max(s, 2)


def test_every_entry_indecomposable():
    # no nontrivial central idempotent: Z local, i.e. dim Z/rad(Z) == 1
    cases = [
        ("A1", {"m": 3, "n": 2}, QQ), ("C1", {}, F2), ("D2B", {"k": 2, "s": 2, "c": 1}, F2),
        ("D3R", {"k": 1, "s": 2, "t": 2, "u": 2}, F3),
        ("SD3K", {"a": 2, "b": 2, "c": 2}, QQ), ("Q3A1", {"d": "g"}, F4),
    ]
    for fam, params, fld in cases:
        z, _ = centre(make_entry(fam, params, fld).build())
        assert z.dim - comm_radical(z).dim == 1


def test_entry_labels_are_canonical():
    e1 = make_entry("SD1A2", {"k": 2, "c": "1", "d": 0}, F2)
    e2 = make_entry("SD1A2", {"k": 2, "c": 1, "d": 0}, F2)
    assert e1.params == e2.params
