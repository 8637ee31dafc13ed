import random

import pytest
from dalg import (GF, QQ, EndOperator, MatrixOverField, Tensor2,
                  averaging_difference, bracket_from_operator, check_identities,
                  classify_direct, classify_operator, conjugate, dual_basis,
                  gf2t_operator, l2, matrix_unit, matrix_units,
                  operator_from_bracket, real_example, real_operator,
                  trace_form, v2, vc)
from dalg.linalg import DimensionMismatchError


def test_trace_form_on_matrix_units():
    assert trace_form(matrix_unit(QQ, 2, 0, 1),
                      matrix_unit(QQ, 2, 1, 0)) == QQ.one()
    assert trace_form(matrix_unit(QQ, 2, 0, 0),
                      matrix_unit(QQ, 2, 1, 1)) == QQ.zero()
    with pytest.raises(DimensionMismatchError):
        trace_form(matrix_unit(QQ, 2, 0, 0), matrix_unit(QQ, 3, 0, 0))


def test_trace_form_symmetry_and_invariance():
    rng = random.Random(2)
    f = GF(7)
    for _ in range(15):
        x, y, z = (MatrixOverField(
            f, [[f.random_scalar(rng) for _ in range(3)] for _ in range(3)])
            for _ in range(3))
        assert trace_form(x, y) == trace_form(y, x)
        assert trace_form(x * y, z) == trace_form(x, y * z)
        assert trace_form(x, y * z) == trace_form(y, z * x)


def test_dual_basis_of_matrix_units_swaps_indices():
    units = matrix_units(QQ, 2)
    duals = dual_basis(units)
    for p in range(2):
        for q in range(2):
            assert duals[p * 2 + q] == matrix_unit(QQ, 2, q, p)


def test_dual_basis_one_dimensional():
    one = MatrixOverField.identity(QQ, 1)
    assert dual_basis([one]) == [one]


def test_dual_basis_random_change_of_basis():
    rng = random.Random(9)
    f = GF(5)
    while True:
        basis = [MatrixOverField(
            f, [[f.random_scalar(rng) for _ in range(2)] for _ in range(2)])
            for _ in range(4)]
        try:
            duals = dual_basis(basis)
            break
        except ValueError:
            continue
    for i in range(4):
        for j in range(4):
            expected = f.one() if i == j else f.zero()
            assert trace_form(basis[i], duals[j]) == expected


def test_dual_basis_rejects_dependent_input():
    u = matrix_unit(QQ, 2, 0, 0)
    with pytest.raises(ValueError):
        dual_basis([u, u, matrix_unit(QQ, 2, 0, 1), matrix_unit(QQ, 2, 1, 0)])


def test_conjugate_involution_and_multiplications():
    rng = random.Random(4)
    for field in (QQ, GF(5)):
        R = EndOperator.random(field, 2, rng)
        assert conjugate(conjugate(R)) == R
        e = MatrixOverField(field, [[field.random_scalar(rng) for _ in range(2)]
                                    for _ in range(2)])
        right_mult = EndOperator.from_action(field, 2, lambda m: m * e)
        left_mult = EndOperator.from_action(field, 2, lambda m: e * m)
        assert conjugate(right_mult) == left_mult


def test_real_operator_is_symmetric():
    R = real_operator()
    assert conjugate(R) == R


def test_bracket_from_operator_examples():
    # scaled identity gives alpha * v (x) u
    R = EndOperator.identity(QQ, 2, scale=3)
    V = bracket_from_operator(R)
    for i in range(2):
        for j in range(2):
            assert V.basis_bracket(i, j) == Tensor2.from_terms(QQ, 2, [(j, i, 3)])
    assert bracket_from_operator(EndOperator.zero(QQ, 2)).is_zero_bracket()
    assert bracket_from_operator(real_operator()) == real_example()


def test_operator_from_bracket_examples():
    assert operator_from_bracket(
        bracket_from_operator(EndOperator.zero(QQ, 2))).is_zero()
    V = vc(3, 1)
    assert bracket_from_operator(operator_from_bracket(V)) == V
    rep = check_identities(operator_from_bracket(l2()))
    assert rep.skew and rep.rota_baxter


def test_roundtrip_random_both_directions():
    rng = random.Random(23)
    for field in (QQ, GF(5)):
        for n in (2, 3):
            for _ in range(10):
                R = EndOperator.random(field, n, rng)
                assert operator_from_bracket(bracket_from_operator(R)) == R
    # converse direction from random structure constants
    for _ in range(10):
        f = GF(5)
        coords = [[Tensor2(f, 2, [f.random_scalar(rng) for _ in range(4)])
                   for _ in range(2)] for _ in range(2)]
        from dalg import DoubleAlgebra
        V = DoubleAlgebra(f, 2, coords)
        assert bracket_from_operator(operator_from_bracket(V)) == V


def test_check_identities_right_multiplication():
    rng = random.Random(31)
    f = GF(5)
    e = MatrixOverField(f, [[f.random_scalar(rng) for _ in range(2)]
                            for _ in range(2)])
    R = EndOperator.from_action(f, 2, lambda m: m * e)
    assert check_identities(R).left_avg


def test_real_operator_identities():
    R = real_operator()
    rep = check_identities(R)
    assert rep.symmetric and rep.averaging
    assert R.compose(R) == R.scale(QQ.scalar(2))
    flags = classify_operator(R)
    assert flags.is_commutative and flags.is_associative


def test_gf2t_operator_identities():
    R = gf2t_operator()
    rep = check_identities(R)
    assert rep.symmetric and rep.averaging
    assert R.compose(R).is_zero()
    assert classify_operator(R).is_commutative


def test_classify_operator_examples():
    assert classify_operator(operator_from_bracket(l2())).is_lie
    zero_flags = classify_operator(EndOperator.zero(QQ, 2))
    assert all((zero_flags.is_skew, zero_flags.is_symmetric, zero_flags.is_lie,
                zero_flags.is_associative, zero_flags.is_commutative))


def test_classify_operator_matches_direct_on_catalog():
    for V in (l2(), v2(), vc(), real_example()):
        assert classify_operator(operator_from_bracket(V)) == classify_direct(V)


def test_averaging_difference():
    assert averaging_difference(real_operator()).is_zero()
    T = operator_from_bracket(v2())
    D = averaging_difference(T)
    rep = check_identities(D)
    assert rep.skew and rep.rota_baxter
    assert conjugate(D) == -D


def test_triple_equivalences_on_randoms():
    rng = random.Random(41)
    for _ in range(25):
        R = EndOperator.random(GF(3), 2, rng)
        rep = check_identities(R)
        assert rep.left_triple_consistent()
        assert rep.dual_triple_consistent()
