"""Acceptance gate: one test per criterion, exact tolerances, stated runtimes.

Each test prints a single pass line on success (visible with ``pytest -s``);
a failed assertion marks the criterion red.  The sweep-based criteria share
the session-scoped full GF(2) sweep and the seeded GF(3) sample sweep.
"""

import random
import time

from dalg import (GF, QQ, EndOperator,
                  bracket_from_operator, check_identities, classify_direct,
                  commutator_algebra, conjugate, dual_algebra,
                  exhaustive_ideal_search, gf2t_operator, l2, l2_dual, l2n,
                  make_example, opposite_algebra, operator_from_bracket,
                  projective_1d_ideal_search, real_example, real_operator,
                  simplicity_report, tensor_product, v2, vc)


def _ok(num, text):
    print(f"[acceptance] criterion {num:2d}: PASS - {text}")


def _violations(report, names):
    return [v for v in report.violations if v["check"] in names]


def test_criterion_01_operator_bracket_round_trip():
    start = time.perf_counter()
    rng = random.Random(20260811)
    checked = 0
    for field, count in ((GF(5), 200), (QQ, 50)):
        for k in range(count):
            n = 2 if k % 2 == 0 else 3
            R = EndOperator.random(field, n, rng)
            # bracket_from_operator evaluates both closed forms of the
            # correspondence and raises unless they agree exactly
            V = bracket_from_operator(R)
            assert operator_from_bracket(V) == R
            checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 250
    assert elapsed < 10.0
    _ok(1, f"250 exact round trips with both closed forms agreeing "
           f"({elapsed:.2f}s < 10s)")


def test_criterion_02_classification_agreement(gf2_sweep, gf3_sample_sweep):
    assert gf2_sweep.total == 65536 and gf2_sweep.mode == "full"
    assert gf3_sample_sweep.total == 100_000
    bad = _violations(gf2_sweep, {"classification_agreement"}) + \
        _violations(gf3_sample_sweep, {"classification_agreement"})
    assert bad == []
    elapsed = gf2_sweep.elapsed + gf3_sample_sweep.elapsed
    assert elapsed < 120.0
    _ok(2, f"operator and bracket classifications agree on 65536 GF(2) + "
           f"100000 GF(3) operators ({elapsed:.1f}s < 120s)")


def test_criterion_03_no_simple_lie_at_desk_scale(gf2_sweep):
    bad = _violations(gf2_sweep, {"lie_proper_ideal", "no_simple_lie"})
    assert bad == []
    count = gf2_sweep.counts["skew_rota_baxter"]
    assert count > 0
    _ok(3, f"every one of the {count} skew Rota-Baxter operators over GF(2) "
           f"yields an algebra with a nonzero proper ideal")


def test_criterion_04_simple_associative_is_commutative(gf2_sweep):
    bad = _violations(gf2_sweep, {"simple_associative_commutative"})
    assert bad == []
    simple = gf2_sweep.counts["simple_associative"]
    assert simple > 0
    _ok(4, f"all {simple} simple associative algebras in the GF(2) sweep are "
           f"commutative with symmetric operators")


def test_criterion_05_triple_equivalences(gf2_sweep, gf3_sample_sweep):
    names = {"left_triple_equivalence", "dual_triple_equivalence"}
    bad = _violations(gf2_sweep, names) + _violations(gf3_sample_sweep, names)
    assert bad == []
    _ok(5, "the two left-averaging identity triples are equivalent on all "
           "165536 operators tested")


def test_criterion_06_averaging_difference_is_rota_baxter(gf2_sweep,
                                                          gf3_sample_sweep):
    names = {"averaging_difference_rota_baxter"}
    bad = _violations(gf2_sweep, names) + _violations(gf3_sample_sweep, names)
    assert bad == []
    pairs = gf2_sweep.counts["left_averaging_pair"]
    _ok(6, f"T - T* is skew Rota-Baxter for all {pairs} left-averaging pairs "
           f"over GF(2) (and all sampled GF(3) pairs)")


def test_criterion_07_structural_consequences(gf2_sweep, gf3_sample_sweep):
    names = {"subalgebra_closed", "image_right_ideal", "kernel_left_submodule",
             "kernel_image_product", "injective_scalar", "full_sum_injective",
             "image_action_proper", "dichotomy_split_type",
             "dichotomy_nilpotent_type", "dichotomy_characteristic",
             "rb_image_contains_identity", "two_bracket_expressions"}
    bad = _violations(gf2_sweep, names) + _violations(gf3_sample_sweep, names)
    assert bad == []
    _ok(7, "subalgebra/right-ideal/submodule structure, the injective-scalar "
           "law, and the full-sum law hold for every associative-pair "
           "operator in both sweeps")


def test_criterion_08_real_example():
    start = time.perf_counter()
    R = real_operator()
    V = bracket_from_operator(R)
    assert V == real_example()
    flags = classify_direct(V)
    assert flags.is_commutative and flags.is_associative and flags.is_symmetric
    assert R.compose(R) == R.scale(QQ.scalar(2))
    search = projective_1d_ideal_search(V)
    assert search.lines == () and not search.all_lines
    assert simplicity_report(V).kind == "simple"
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _ok(8, f"displayed operator reproduces the displayed table, R^2 = 2R, "
           f"commutative, simple over Q ({elapsed:.3f}s < 1s)")


def test_criterion_09_gf2t_example():
    R = gf2t_operator()
    rep = check_identities(R)
    assert rep.symmetric and rep.averaging
    assert R.compose(R).is_zero()
    V = bracket_from_operator(R)
    search = projective_1d_ideal_search(V)
    assert search.lines == () and not search.all_lines
    assert simplicity_report(V).kind == "simple"
    # dichotomy placement: nilpotent type, characteristic divides dimension
    assert R.image_subspace() == conjugate(R).image_subspace()
    assert R.kernel_subspace().contains_subspace(R.image_subspace())
    assert V.field.characteristic() == 2 and V.n % 2 == 0
    _ok(9, "GF(2)(t) operator is symmetric averaging with R^2 = 0, its "
           "algebra is simple, and it sits in the nilpotent branch with "
           "char 2 | dim 2")


def test_criterion_10_yangian_table(yangian_report):
    assert yangian_report.N == 2 and yangian_report.D == 4
    assert yangian_report.mismatches == []
    assert yangian_report.pairs_checked == 208
    assert yangian_report.is_lie
    assert yangian_report.elapsed < 30.0
    _ok(10, f"dY(2,4) equals the displayed table on all "
            f"{yangian_report.pairs_checked} in-range pairs and is Lie "
            f"({yangian_report.elapsed:.2f}s < 30s)")


def test_criterion_11_no_line_ideals_in_l2n():
    V = l2n(2, GF(3))
    assert classify_direct(V).is_lie
    verdict = exhaustive_ideal_search(V, dims=[1])
    assert verdict.kind != "not_simple"
    assert verdict.witness is None
    _ok(11, "exhaustive enumeration of all 3280 lines of L(2,2) over GF(3) "
            "finds no 1-dimensional ideals")


def test_criterion_12_closure_suite():
    assert commutator_algebra(v2()) == l2()
    assert commutator_algebra(vc()).is_zero_bracket()
    assert classify_direct(tensor_product(l2(), vc())).is_lie
    assert classify_direct(tensor_product(v2(), vc())).is_associative
    assert dual_algebra(l2()) == l2_dual()
    assert classify_direct(l2_dual()).is_lie
    names = ("vc", "v2", "phi", "module_ext", "l2", "l2_dual", "l2n(1)",
             "p1(2)", "p1(3)", "real", "gf2t")
    for name in names:
        V = make_example(name)
        assert opposite_algebra(opposite_algebra(V)) == V
        assert dual_algebra(dual_algebra(V)) == V
    _ok(12, "commutator, dual, opposite, and tensor constructions match the "
            "displayed tables exactly; opposite and dual are involutive on "
            "the whole catalog")
