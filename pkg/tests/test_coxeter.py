import pytest

from dualbraid import coxeter_group, parse_type, word_image
from dualbraid.exact import GoldenInt, mat_identity, mat_mul, matrix_rank
from dualbraid.presentation import dual_atoms


def test_enumeration_matches_order():
    for name in ["A3", "B3", "D4", "I2(7)", "H3"]:
        ct = parse_type(name)
        group = coxeter_group(ct)
        depth = group.enumerate_group()
        assert len(depth) == ct.group_order
        assert max(depth.values()) == ct.num_reflections


def test_reflection_basics():
    for name in ["A4", "B4", "D4", "I2(9)", "H3", "F4"]:
        ct = parse_type(name)
        group = coxeter_group(ct)
        refs = list(group.reflections)
        assert len(refs) == ct.num_reflections
        assert len(set(refs)) == len(refs)
        for t in refs:
            assert group.mul(t, t) == group.identity
            assert group.refl_length(t) == 1
        assert group.refl_length(group.identity) == 0


def test_coxeter_element_has_full_reflection_length():
    for name in ["A5", "B4", "D5", "I2(10)", "H3", "F4", "E6"]:
        ct = parse_type(name)
        group = coxeter_group(ct)
        assert group.refl_length(group.coxeter_element) == ct.rank


def test_mul_convention_and_inverse():
    group = coxeter_group(parse_type("B3"))
    a, b = group.simples[0], group.simples[1]
    ab = group.mul(a, b)
    assert group.mul(ab, group.inv(ab)) == group.identity
    # mul(u, v) applies u first; folding a word left to right matches
    # multiplying the images in the same order
    word = dual_atoms(parse_type("B3"))[:3]
    img = group.identity
    for atom in word:
        img = group.mul(img, group.atom_image(atom))
    assert word_image(group, word) == img


def test_atom_images_are_distinct_reflections():
    for name in ["A4", "B3", "D4", "I2(8)"]:
        ct = parse_type(name)
        group = coxeter_group(ct)
        images = [group.atom_image(a) for a in dual_atoms(ct)]
        assert len(set(images)) == ct.num_reflections
        assert set(images) == set(group.reflections)


def test_refl_length_equals_fixed_space_codimension():
    # the cycle-type count and the rank of (matrix - identity) are
    # independent routes to the same statistic
    from dualbraid.coxeter import signed_perm_matrix

    ct = parse_type("B3")
    group = coxeter_group(ct)
    ident = mat_identity(ct.rank)
    for u in group.enumerate_group():
        mat = signed_perm_matrix(group, u)
        diff = [
            [mat[i][j] - ident[i][j] for j in range(ct.rank)]
            for i in range(ct.rank)
        ]
        assert group.refl_length(u) == matrix_rank(diff)


def test_golden_int_arithmetic():
    phi = GoldenInt(0, 1)
    assert phi * phi == phi + 1
    assert (phi - 1) * phi == GoldenInt(1, 0)
    assert phi.conjugate() == GoldenInt(1, -1)
    assert (phi * phi.conjugate()) == GoldenInt(-1, 0)
    assert phi.norm() == -1
    assert (phi * phi).exact_div(phi) == phi
    with pytest.raises(ArithmeticError):
        GoldenInt(1, 1).exact_div(GoldenInt(2, 0))
    assert GoldenInt(6, 3).exact_div(3) == GoldenInt(2, 1)
    assert GoldenInt.coerce(5) == GoldenInt(5, 0)
    assert 2 * phi - phi == phi


def test_matrix_helpers():
    ident = mat_identity(3)
    assert matrix_rank(ident) == 3
    assert mat_mul(ident, ident) == ident
    singular = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert matrix_rank(singular) == 2
    assert matrix_rank([[GoldenInt(0, 1), GoldenInt(1, 1)]]) == 1


def test_matrix_group_h3_reflections():
    from dualbraid.coxeter import MatrixGroup

    ct = parse_type("H3")
    group = MatrixGroup(ct)
    assert len(list(group.reflections)) == 15
    c = group.coxeter_element
    assert group.refl_length(c) == 3
    power = group.identity
    for _ in range(ct.coxeter_number):
        power = group.mul(power, c)
    assert power == group.identity
