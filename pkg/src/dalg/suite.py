"""The verification harness: builds every catalog example, asserts its expected
classification and simplicity, runs the Yangian-table comparison, and checks
the finite-field evidence that the dual of L_2 is not a commutator algebra.

Reports are plain dataclasses with a shared JSON shape
``{run, checks: [{name, status, details}], counts}`` for the CLI.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from .algebra import (ClassificationFlags, DoubleAlgebra, classify_direct,
                      commutator_algebra, dual_algebra, opposite_algebra,
                      tensor_product)
from .catalog import dyangian, l2, l2_dual, make_example, real_example, v2, vc
from .field import QQ, Field
from .ideals import IdealVerdict, simplicity_report
from .operators import IdentityReport, check_identities, operator_from_bracket
from .sweep import operator_flags_batch, _operators_for_range
from .tensors import Tensor2


@dataclass
class ExampleReport:
    """One catalog example checked against its expected behaviour."""

    name: str
    dim: int
    flags: ClassificationFlags
    simplicity: IdealVerdict | None
    operator_identities: IdentityReport | None
    failures: list = dataclass_field(default_factory=list)

    def ok(self) -> bool:
        return not self.failures


# expected flags per example; simplicity expectations where a complete
# method applies (None = not decided at this dimension/field)
_EXPECTATIONS = [
    ("vc(2)", dict(is_associative=True, is_commutative=True,
                   is_symmetric=True, is_lie=False), "not_simple"),
    ("vc(2)^op", dict(is_associative=True, is_commutative=True), "not_simple"),
    ("v2", dict(is_associative=True, is_commutative=False, is_lie=False),
     "not_simple"),
    ("v2^op", dict(is_associative=True, is_commutative=False), "not_simple"),
    ("phi", dict(is_associative=True, is_commutative=True), "not_simple"),
    ("module_ext", dict(is_associative=True, is_commutative=False),
     "not_simple"),
    ("l2", dict(is_lie=True, is_skew=True, is_associative=False),
     "not_simple"),
    ("l2^op", dict(is_lie=True,), "not_simple"),
    ("l2_dual", dict(is_lie=True, is_skew=True), "not_simple"),
    ("l2n(1)", dict(is_lie=True,), "not_simple"),
    ("l2n(2)", dict(is_lie=True,), None),
    ("p1(2)", dict(is_lie=True,), "not_simple"),
    ("p1(3)", dict(is_lie=True,), None),
    ("p1(4)", dict(is_lie=True,), None),
    ("p1(5)", dict(is_lie=True,), None),
    ("dy(2,4)", dict(is_lie=True,), None),
    ("real", dict(is_associative=True, is_commutative=True,
                  is_symmetric=True), "simple"),
    ("gf2t", dict(is_associative=True, is_commutative=True), "simple"),
]

_OPERATOR_REPORT_MAX_DIM = 4


def _build_named(name: str) -> DoubleAlgebra:
    if name.endswith("^op"):
        return opposite_algebra(_build_named(name[:-3]))
    return make_example(name)


def run_examples() -> list[ExampleReport]:
    """Build and verify every catalog example; table equalities included."""
    reports = []
    for name, expected, simple_kind in _EXPECTATIONS:
        V = _build_named(name)
        failures = []
        flags = classify_direct(V)
        for key, want in expected.items():
            got = getattr(flags, key)
            if got != want:
                failures.append(f"{key}: expected {want}, got {got}")
        verdict = None
        if simple_kind is not None:
            verdict = simplicity_report(V)
            if verdict.kind != simple_kind:
                failures.append(
                    f"simplicity: expected {simple_kind}, got {verdict.kind}"
                    + (f" ({verdict.reason})" if verdict.reason else ""))
        op_report = None
        if V.n <= _OPERATOR_REPORT_MAX_DIM:
            op_report = check_identities(operator_from_bracket(V))
            if (flags.is_lie
                    and not (op_report.skew and op_report.rota_baxter)):
                failures.append("operator of a Lie algebra is not skew Rota-Baxter")
            if (flags.is_commutative
                    and not (op_report.symmetric and op_report.averaging)):
                failures.append(
                    "operator of a commutative algebra is not symmetric averaging")
        reports.append(ExampleReport(
            name=name, dim=V.n, flags=flags, simplicity=verdict,
            operator_identities=op_report, failures=failures))

    # displayed-table identities between catalog members
    extra = ExampleReport(name="table-identities", dim=0,
                          flags=classify_direct(l2()), simplicity=None,
                          operator_identities=None)
    checks = [
        ("commutator of v2 equals l2", commutator_algebra(v2()) == l2()),
        ("commutator of vc is zero",
         commutator_algebra(vc()).is_zero_bracket()),
        ("dual of l2 equals l2_dual", dual_algebra(l2()) == l2_dual()),
        ("module_ext over the base field equals v2",
         make_example("module_ext") == v2()),
        # for a commutative algebra the opposite is the argument-transposed
        # table ({{u,v}}^(12) = {{v,u}}), so it coincides with the original
        # exactly when the table is symmetric in its arguments
        ("opposite of a commutative algebra transposes the arguments",
         opposite_algebra(vc()) == DoubleAlgebra(
             QQ, 2, [[vc().constants[j][i] for j in range(2)]
                     for i in range(2)])),
        ("opposite of the argument-symmetric real example is itself",
         opposite_algebra(real_example()) == real_example()),
        ("opposite preserves commutativity",
         classify_direct(opposite_algebra(vc())).is_commutative),
        ("l2 (x) 1-dim unit is l2 on the nose",
         tensor_product(l2(), vc(1, 1)) == l2()),
    ]
    for label, holds in checks:
        if not holds:
            extra.failures.append(label)
    reports.append(extra)
    return reports


@dataclass
class YangianReport:
    N: int
    D: int
    pairs_checked: int
    mismatches: list
    is_lie: bool
    elapsed: float

    def ok(self) -> bool:
        return not self.mismatches and self.is_lie


def _yangian_expected(N: int, D: int, field: Field,
                      m: int, n: int, i: int, j: int, k: int, l: int) -> Tensor2:
    """The displayed closed form: sum over r < min(m,n) of
    T_r^{kj} (x) T_{m+n-r-1}^{il} - T_{m+n-r-1}^{kj} (x) T_r^{il}."""
    one = field.one()
    dim = D * N * N

    def tindex(d, a, b):
        return (d * N + a) * N + b

    terms = []
    for r in range(min(m, n)):
        hi = m + n - r - 1
        terms.append((tindex(r, k, j), tindex(hi, i, l), one))
        terms.append((tindex(hi, k, j), tindex(r, i, l), -one))
    return Tensor2.from_terms(field, dim, terms)


def run_yangian_check(N: int = 2, D: int = 4, field: Field = QQ) -> YangianReport:
    """Compare the tensor construction against the displayed table formula on
    every index in range (m + n - 1 < D, so truncation plays no role) and
    verify the construction satisfies the Lie identities exactly."""
    if N * N * D > 64:
        raise ValueError("size cap exceeded: need N*N*D <= 64")
    start = time.perf_counter()
    V = dyangian(N, D, field)

    def tindex(d, a, b):
        return (d * N + a) * N + b

    mismatches = []
    pairs = 0
    for m in range(D):
        for n in range(D):
            if m + n - 1 >= D:
                continue
            for i in range(N):
                for j in range(N):
                    for k in range(N):
                        for l in range(N):
                            pairs += 1
                            expected = _yangian_expected(N, D, field,
                                                         m, n, i, j, k, l)
                            actual = V.basis_bracket(tindex(m, i, j),
                                                     tindex(n, k, l))
                            if expected != actual:
                                mismatches.append((m, i, j, n, k, l))
    is_lie = classify_direct(V).is_lie
    return YangianReport(N=N, D=D, pairs_checked=pairs, mismatches=mismatches,
                         is_lie=is_lie, elapsed=time.perf_counter() - start)


@dataclass
class RepresentabilityReport:
    """Finite-field evidence that the dual of L_2 is not a commutator algebra.

    Over GF(2) every associative-pair operator is enumerated and none of the
    induced commutator tables equals the L_2-dual table; L_2 itself does arise
    (from V_2) and the zero bracket arises from any commutative algebra.  This
    is evidence at one finite field, not a proof over all fields.
    """

    associative_count: int
    dual_table_hits: int
    l2_table_hit: bool
    zero_table_hit: bool
    elapsed: float

    def ok(self) -> bool:
        return (self.dual_table_hits == 0 and self.l2_table_hit
                and self.zero_table_hit)


def run_negative_representability_check() -> RepresentabilityReport:
    start = time.perf_counter()
    p, n = 2, 2
    total = p ** 16
    target_dual = np.zeros((n, n, n, n), dtype=np.int64)
    # [[e1,e2]] = e1 (x) e1 = -[[e2,e1]] (signs coincide mod 2)
    target_dual[0, 1, 0, 0] = 1
    target_dual[1, 0, 0, 0] = 1
    target_l2 = np.zeros((n, n, n, n), dtype=np.int64)
    target_l2[0, 0, 0, 1] = 1
    target_l2[0, 0, 1, 0] = 1

    assoc_count = 0
    dual_hits = 0
    l2_hit = False
    zero_hit = False
    chunk = 16384
    for lo in range(0, total, chunk):
        ops = _operators_for_range(p, n * n, lo, min(lo + chunk, total))
        flags = operator_flags_batch(ops, p, n)
        assoc = flags["assoc_op"]
        assoc_count += int(assoc.sum())
        C = flags["C"][assoc] % p
        comm_tables = (C - C.transpose(0, 2, 1, 4, 3)) % p
        dual_hits += int((comm_tables == target_dual).reshape(
            comm_tables.shape[0], -1).all(axis=1).sum())
        if (comm_tables == target_l2).reshape(
                comm_tables.shape[0], -1).all(axis=1).any():
            l2_hit = True
        if (comm_tables == 0).reshape(
                comm_tables.shape[0], -1).all(axis=1).any():
            zero_hit = True
    return RepresentabilityReport(
        associative_count=assoc_count, dual_table_hits=dual_hits,
        l2_table_hit=l2_hit, zero_table_hit=zero_hit,
        elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# JSON shapes
# ---------------------------------------------------------------------------

def examples_to_json(reports: list[ExampleReport]) -> dict:
    checks = []
    for rep in reports:
        checks.append({
            "name": rep.name,
            "status": "pass" if rep.ok() else "fail",
            "details": "; ".join(rep.failures) if rep.failures
                       else rep.flags.summary(),
        })
    return {
        "run": "examples",
        "checks": checks,
        "counts": {"examples": len(reports),
                   "failures": sum(not r.ok() for r in reports)},
    }


def yangian_to_json(rep: YangianReport) -> dict:
    return {
        "run": f"yangian N={rep.N} D={rep.D}",
        "checks": [
            {"name": "table_matches_construction",
             "status": "pass" if not rep.mismatches else "fail",
             "details": f"{rep.pairs_checked} pairs checked, "
                        f"{len(rep.mismatches)} mismatches"
                        + (f"; first at {rep.mismatches[0]}"
                           if rep.mismatches else "")},
            {"name": "construction_is_lie",
             "status": "pass" if rep.is_lie else "fail",
             "details": f"dimension {rep.N * rep.N * rep.D}"},
        ],
        "counts": {"pairs_checked": rep.pairs_checked,
                   "mismatches": len(rep.mismatches)},
    }


def representability_to_json(rep: RepresentabilityReport) -> dict:
    return {
        "run": "negative-representability (GF(2) evidence)",
        "checks": [
            {"name": "no_associative_preimage_of_l2_dual",
             "status": "pass" if rep.dual_table_hits == 0 else "fail",
             "details": f"{rep.associative_count} associative operators scanned"},
            {"name": "l2_has_associative_preimage",
             "status": "pass" if rep.l2_table_hit else "fail",
             "details": "v2 provides one"},
            {"name": "zero_bracket_has_associative_preimage",
             "status": "pass" if rep.zero_table_hit else "fail",
             "details": "any commutative algebra provides one"},
        ],
        "counts": {"associative_operators": rep.associative_count,
                   "l2_dual_hits": rep.dual_table_hits},
    }
