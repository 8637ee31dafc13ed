import random

import numpy as np
import pytest
from dalg import (GF, EndOperator, bracket_from_operator, check_identities,
                  classify_direct, classify_operator, run_sweep)
from dalg.linalg import MatrixOverField, Subspace, kernel_basis, rref
from dalg.sweep import (_intersect_int, _kernel_int, _operators_for_range,
                        _rref_int, operator_flags_batch)


def test_full_sweep_gf2_n1_counts():
    report = run_sweep(GF(2), 1, mode="full")
    assert report.total == 2
    # over GF(2) the only Rota-Baxter scalar at n=1 is zero:
    # r^2 = 2 r^2 forces r = 0
    assert report.counts["skew_rota_baxter"] == 1
    assert report.counts["skew"] == 2
    assert not report.violations


def test_full_sweep_requires_prime_field_and_cap():
    with pytest.raises(ValueError):
        run_sweep(GF(3), 2, mode="full")
    from dalg import QQ
    with pytest.raises(ValueError):
        run_sweep(QQ, 2, mode="full")
    with pytest.raises(ValueError):
        run_sweep(GF(2), 2, mode="sample")  # sample mode needs a count


def test_batch_flags_match_generic_routes():
    rng = random.Random(97)
    for p in (2, 3, 5):
        ops = np.array([[[rng.randrange(p) for _ in range(4)]
                         for _ in range(4)] for _ in range(25)])
        flags = operator_flags_batch(ops, p, 2)
        field = GF(p)
        for i in range(ops.shape[0]):
            R = EndOperator.from_rows(
                field, 2, [[int(x) for x in row] for row in ops[i]])
            rep = check_identities(R)
            op_flags = classify_operator(R)
            direct = classify_direct(bracket_from_operator(R))
            assert bool(flags["left_avg"][i]) == rep.left_avg
            assert bool(flags["left_avg_mixed"][i]) == rep.left_avg_mixed
            assert bool(flags["left_avg_conj"][i]) == rep.left_avg_conj
            assert bool(flags["dual_left_avg"][i]) == rep.dual_left_avg
            assert bool(flags["dual_left_avg_mixed"][i]) == rep.dual_left_avg_mixed
            assert bool(flags["dual_left_avg_conj"][i]) == rep.dual_left_avg_conj
            assert bool(flags["skew"][i]) == rep.skew
            assert bool(flags["symmetric"][i]) == rep.symmetric
            assert bool(flags["rota_baxter"][i]) == rep.rota_baxter
            assert bool(flags["averaging"][i]) == rep.averaging
            assert bool(flags["lie_op"][i]) == op_flags.is_lie
            assert bool(flags["assoc_op"][i]) == op_flags.is_associative
            assert bool(flags["comm_op"][i]) == op_flags.is_commutative
            assert bool(flags["lie_direct"][i]) == direct.is_lie
            assert bool(flags["associative_direct"][i]) == direct.is_associative
            assert bool(flags["commutative_direct"][i]) == direct.is_commutative


def test_batch_line_ideals_match_generic_is_ideal():
    from dalg.ideals import enumerate_subspaces, is_ideal
    rng = random.Random(3)
    p = 3
    ops = np.array([[[rng.randrange(p) for _ in range(4)]
                     for _ in range(4)] for _ in range(20)])
    flags = operator_flags_batch(ops, p, 2)
    field = GF(p)
    for i in range(ops.shape[0]):
        V = bracket_from_operator(EndOperator.from_rows(
            field, 2, [[int(x) for x in row] for row in ops[i]]))
        lines = [s for s in enumerate_subspaces(field, 2, [1])
                 if is_ideal(V, s)]
        assert bool(flags["has_proper_ideal"][i]) == bool(lines)
        assert bool(flags["bracket_nonzero"][i]) == (not V.is_zero_bracket())


def test_int_linalg_helpers_match_generic():
    rng = random.Random(12)
    p = 3
    field = GF(p)
    for _ in range(25):
        rows = [[rng.randrange(p) for _ in range(4)] for _ in range(3)]
        m = MatrixOverField(field, rows)
        reduced, rank = rref(m)
        int_rows, pivots = _rref_int(rows, p)
        assert len(int_rows) == rank
        assert [[x.payload for x in r] for r in reduced.rows[:rank]] == int_rows
        kernel_generic = kernel_basis(m)
        kernel_ints = _kernel_int(rows, p, 4)
        assert len(kernel_ints) == kernel_generic.dim
        for vec in kernel_ints:
            assert kernel_generic.contains_vector(vec)
        other = [[rng.randrange(p) for _ in range(4)] for _ in range(2)]
        inter = _intersect_int(_rref_int(rows, p)[0], _rref_int(other, p)[0], p)
        a = Subspace.from_vectors(field, 4, rows)
        b = Subspace.from_vectors(field, 4, other)
        assert len(inter) == a.intersect(b).dim


def test_operator_range_enumeration_is_exhaustive():
    ops = _operators_for_range(2, 2, 0, 16)
    seen = {tuple(int(x) for x in op.reshape(-1)) for op in ops}
    assert len(seen) == 16


def test_sample_sweep_deterministic_and_worker_independent():
    a = run_sweep(GF(3), 2, mode="sample", samples=4000, seed=11, chunk_size=1000)
    b = run_sweep(GF(3), 2, mode="sample", samples=4000, seed=11, chunk_size=1000,
                  workers=2)
    assert a.counts == b.counts
    assert a.violations == b.violations
    assert a.witnesses == b.witnesses
    c = run_sweep(GF(3), 2, mode="sample", samples=4000, seed=12, chunk_size=1000)
    assert c.counts != a.counts or c.witnesses != a.witnesses


def test_full_gf2_sweep_clean(gf2_sweep):
    assert gf2_sweep.total == 65536
    assert not gf2_sweep.violations
    counts = gf2_sweep.counts
    assert counts["symmetric_averaging"] <= counts["left_averaging_pair"]
    assert counts["skew_rota_baxter"] <= counts["skew"]
    assert counts["simple_associative"] <= counts["left_averaging_pair"]
    # the commutative counts agree between the two routes
    assert counts["commutative_direct"] == counts["symmetric_averaging"]
    # witnesses really carry the flags they are filed under
    for key, attr in (("skew_rota_baxter", "is_lie"),
                      ("left_averaging_pair", "is_associative"),
                      ("symmetric_averaging", "is_commutative")):
        R = EndOperator.from_rows(GF(2), 2, gf2_sweep.witnesses[key])
        assert getattr(classify_operator(R), attr)


def test_gf3_sample_sweep_clean(gf3_sample_sweep):
    assert gf3_sample_sweep.total == 100_000
    assert not gf3_sample_sweep.violations


def test_sweep_report_json_shape(gf2_sweep):
    payload = gf2_sweep.to_json()
    assert set(payload) == {"run", "checks", "counts"}
    assert all(c["status"] == "pass" for c in payload["checks"])
