import random

import pytest
from dalg import (GF, QQ, DoubleAlgebra, Tensor2, Tensor3, classify_direct,
                  commutator_algebra, dual_algebra, dyangian, extend, gf2t_example,
                  l2, l2_dual, l2n, make_example, module_ext, opposite_algebra,
                  p1_quotient, phi_algebra, real_example, tensor_product, v2, vc)
from dalg.algebra import bracket_is_skew, bracket_is_symmetric
from dalg.ideals import is_ideal
from dalg.linalg import MatrixOverField, Subspace


def test_bracket_examples():
    V = vc(2, 1)
    assert V.bracket((1, 2), (3, 4)) == Tensor2.from_terms(
        QQ, 2, [(0, 0, 3), (0, 1, 4), (1, 0, 6), (1, 1, 8)])
    W = v2()
    assert W.basis_bracket(0, 0) == Tensor2.basis_elem(QQ, 2, 0, 1)
    assert W.basis_bracket(0, 1).is_zero()
    assert W.bracket((0, 0), (1, 1)).is_zero()


def test_extend_examples():
    V = vc(2, 1)
    out = extend(V, "L-left", (1, 0), Tensor2.basis_elem(QQ, 2, 0, 1))
    assert out == Tensor3.basis_elem(QQ, 2, 0, 0, 1)

    W = v2()
    out = extend(W, "R-right", Tensor2.basis_elem(QQ, 2, 1, 0), (1, 0))
    assert out == Tensor3.basis_elem(QQ, 2, 1, 0, 1)

    Z = DoubleAlgebra.zero(QQ, 2)
    for kind in ("L-left", "R-left"):
        assert extend(Z, kind, (1, 1), Tensor2.basis_elem(QQ, 2, 0, 0)).is_zero()
    for kind in ("L-right", "R-right"):
        assert extend(Z, kind, Tensor2.basis_elem(QQ, 2, 0, 0), (1, 1)).is_zero()
    with pytest.raises(ValueError):
        extend(Z, "middle", (1, 0), Tensor2.zero(QQ, 2))


def test_classify_known_examples():
    assert classify_direct(l2()).is_lie
    flags = classify_direct(v2())
    assert flags.is_associative and not flags.is_commutative
    zero_flags = classify_direct(DoubleAlgebra.zero(QQ, 3))
    assert all((zero_flags.is_skew, zero_flags.is_symmetric, zero_flags.is_lie,
                zero_flags.is_associative, zero_flags.is_commutative))


def test_flag_structure_invariants():
    for name in ("vc", "v2", "phi", "l2", "l2_dual", "real", "gf2t", "p1(3)"):
        flags = classify_direct(make_example(name))
        if flags.is_commutative:
            assert flags.is_associative and flags.is_symmetric
        if flags.is_lie:
            assert flags.is_skew


def test_commutator_examples():
    assert commutator_algebra(v2()) == l2()
    assert commutator_algebra(vc()).is_zero_bracket()
    assert commutator_algebra(DoubleAlgebra.zero(QQ, 2)).is_zero_bracket()


def test_commutator_of_associative_is_lie():
    candidates = [vc(), v2(), phi_algebra(MatrixOverField(QQ, [[0, 1], [0, 0]])),
                  make_example("module_ext"), opposite_algebra(v2()),
                  real_example(), gf2t_example(),
                  tensor_product(v2(), vc())]
    for V in candidates:
        assert classify_direct(V).is_associative
        assert classify_direct(commutator_algebra(V)).is_lie


def test_opposite_and_dual():
    assert dual_algebra(l2()) == l2_dual()
    assert classify_direct(l2_dual()).is_lie
    assert classify_direct(opposite_algebra(v2())).is_associative
    assert classify_direct(opposite_algebra(l2())).is_lie
    for name in ("vc", "v2", "l2", "l2_dual", "real", "p1(3)"):
        V = make_example(name)
        assert opposite_algebra(opposite_algebra(V)) == V
        assert dual_algebra(dual_algebra(V)) == V


def test_tensor_closure():
    assert classify_direct(tensor_product(l2(), vc())).is_lie
    assert classify_direct(tensor_product(v2(), vc())).is_associative
    assert classify_direct(tensor_product(vc(), vc())).is_commutative


def test_tensor_with_unit_line_is_identity():
    assert tensor_product(l2(), vc(1, 1)) == l2()


def test_phi_algebra_validation():
    good = MatrixOverField(QQ, [[0, 1], [0, 0]])
    flags = classify_direct(phi_algebra(good))
    assert flags.is_associative and flags.is_commutative
    with pytest.raises(ValueError):
        phi_algebra(MatrixOverField.identity(QQ, 2))


def test_module_ext_base_case_is_v2():
    assert make_example("module_ext") == v2()
    flags = classify_direct(make_example("module_ext"))
    assert flags.is_associative and not flags.is_commutative


def test_module_ext_validation():
    # phi(a1) = 0, phi(a2) = a1 fails phi(a2 a1) = a2 phi(a1)
    mult = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]  # 2-dim: a1 unit, a2^2 = 0
    bad_phi = MatrixOverField(QQ, [[0, 1], [0, 0]])
    with pytest.raises(ValueError, match="phi does not commute"):
        module_ext(mult, [bad_phi])
    good_phi = MatrixOverField.identity(QQ, 2)
    V = module_ext(mult, [good_phi])
    assert classify_direct(V).is_associative
    with pytest.raises(ValueError, match="independent"):
        module_ext(mult, [good_phi, good_phi])
    non_assoc = [[[0, 1], [1, 0]], [[1, 0], [0, 0]]]
    with pytest.raises(ValueError, match="not associative"):
        module_ext(non_assoc, [good_phi])


def test_p1_quotient_tables():
    P = p1_quotient(3)
    # divided-difference oracle: [[t^a, t^b]] is the quotient of
    # (x^a - y^a)(x^b - y^b) by (y - x) in the polynomial ring Q[x, y]
    def oracle(a, b, D):
        import sympy
        x, y = sympy.symbols("x y")
        numerator = sympy.expand((x ** a - y ** a) * (x ** b - y ** b))
        quotient = sympy.simplify(sympy.cancel(numerator / (y - x)))
        poly = sympy.Poly(quotient, x, y) if quotient != 0 else None
        terms = []
        if poly is not None:
            for (dx, dy), coef in poly.terms():
                if dx < D and dy < D:
                    terms.append((dx, dy, int(coef)))
        return Tensor2.from_terms(QQ, D, terms)

    for a in range(3):
        for b in range(3):
            assert P.basis_bracket(a, b) == oracle(a, b, 3)
    # frozen values from that oracle
    assert P.basis_bracket(2, 1) == Tensor2.from_terms(
        QQ, 3, [(0, 2, 1), (2, 0, -1)])
    assert P.basis_bracket(0, 1).is_zero()
    assert P.basis_bracket(1, 1) == Tensor2.from_terms(
        QQ, 3, [(0, 1, 1), (1, 0, -1)])


def test_p1_quotients_are_lie():
    for D in range(1, 6):
        assert classify_direct(p1_quotient(D)).is_lie


def test_truncation_kernel_is_ideal():
    for D, E in ((3, 5), (2, 4), (4, 5)):
        big = p1_quotient(E)
        kernel = Subspace.from_vectors(
            QQ, E, [tuple(1 if t == r else 0 for t in range(E))
                    for r in range(D, E)])
        assert is_ideal(big, kernel)


def _random_algebra(field, n, rng, density=3):
    table = {}
    for _ in range(density):
        i, j = rng.randrange(n), rng.randrange(n)
        k, l = rng.randrange(n), rng.randrange(n)
        table[(i, j)] = table.get((i, j), Tensor2.zero(field, n)) + \
            Tensor2.from_terms(field, n, [(k, l, field.random_scalar(rng))])
    return DoubleAlgebra.from_table(field, n, table)


def _lie_identity_dense(V):
    n = V.n
    basis = [tuple(V.field.one() if t == i else V.field.zero() for t in range(n))
             for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = extend(V, "L-left", basis[i], V.basis_bracket(j, k)) \
                    - extend(V, "R-left", basis[j],
                             V.basis_bracket(i, k)).permute((1, 2))
                rhs = extend(V, "L-right", V.basis_bracket(i, j), basis[k])
                if lhs != rhs:
                    return False
    return True


def _associative_identities_dense(V):
    n = V.n
    basis = [tuple(V.field.one() if t == i else V.field.zero() for t in range(n))
             for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if extend(V, "L-left", basis[i], V.basis_bracket(j, k)) != \
                        extend(V, "L-right", V.basis_bracket(i, j), basis[k]):
                    return False
                if extend(V, "R-left", basis[i], V.basis_bracket(j, k)) != \
                        extend(V, "R-right", V.basis_bracket(i, j), basis[k]):
                    return False
    return True


def test_sparse_classifier_matches_dense_extension_route():
    catalog = [l2(), l2_dual(), v2(), vc(), real_example(), p1_quotient(3),
               make_example("phi"), DoubleAlgebra.zero(QQ, 2)]
    rng = random.Random(17)
    randoms = [_random_algebra(GF(3), 2, rng) for _ in range(12)] + \
              [_random_algebra(GF(5), 2, rng) for _ in range(12)] + \
              [_random_algebra(QQ, 2, rng) for _ in range(6)]
    for V in catalog + randoms:
        flags = classify_direct(V)
        assert flags.is_lie == (bracket_is_skew(V) and _lie_identity_dense(V))
        assert flags.is_associative == _associative_identities_dense(V)
        assert flags.is_commutative == (
            flags.is_associative and bracket_is_symmetric(V))


def test_dyangian_dimension_and_name():
    V = dyangian(2, 4)
    assert V.n == 16
    assert classify_direct(l2n(1)).is_lie
