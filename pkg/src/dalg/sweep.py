"""Exhaustive and sampled operator sweeps over small prime fields.

The sweep enumerates raw n^2-by-n^2 matrices over GF(p), evaluates every
operator identity and every bracket identity as batched integer tensor
contractions mod p (exact: no rounding is involved), and cross-checks the
two classification routes against each other together with the structural
consequences of the averaging identities.  Anything that fails lands in the
violation list of the returned report; on a healthy run every list is empty.

The batch formulas are validated against the generic exact implementation in
the test-suite, so the two routes stay independent.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass

import numpy as np

from .field import Field, PrimeField


# ---------------------------------------------------------------------------
# exact integer linear algebra mod p on small matrices (lists of ints)
# ---------------------------------------------------------------------------

def _rref_int(rows, p):
    rows = [[x % p for x in r] for r in rows]
    pivots = []
    if not rows:
        return [], pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:len(pivots)], pivots


def _member_int(rrows, pivots, vec, p):
    vec = [x % p for x in vec]
    for row, pc in zip(rrows, pivots):
        f = vec[pc]
        if f:
            vec = [(x - f * y) % p for x, y in zip(vec, row)]
    return not any(vec)


def _kernel_int(rows, p, ncols):
    rrows, pivots = _rref_int(rows, p)
    pivot_set = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-rrows[r][free]) % p
        out.append(vec)
    return out


def _intersect_int(rows_a, rows_b, p):
    if not rows_a or not rows_b:
        return []
    ncols = len(rows_a[0])
    stacked = []
    for i in range(ncols):
        stacked.append([r[i] for r in rows_a] + [(-r[i]) % p for r in rows_b])
    out = []
    for sol in _kernel_int(stacked, p, len(rows_a) + len(rows_b)):
        vec = [0] * ncols
        for coef, row in zip(sol[:len(rows_a)], rows_a):
            if coef:
                vec = [(x + coef * y) % p for x, y in zip(vec, row)]
        if any(vec):
            out.append(vec)
    return _rref_int(out, p)[0]


def _mat_of_vec(vec, n):
    return [[vec[r * n + c] for c in range(n)] for r in range(n)]


def _vec_of_mat(m):
    return [x for row in m for x in row]


def _matmul_int(a, b, p):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)]
            for i in range(n)]


def _apply_int(Rm, vec, p):
    return [sum(row[j] * vec[j] for j in range(len(vec))) % p for row in Rm]


# ---------------------------------------------------------------------------
# batched identity evaluation
# ---------------------------------------------------------------------------

def operator_flags_batch(R, p: int, n: int) -> dict:
    """Evaluate every operator and bracket identity for a batch of operators.

    ``R`` is an integer array of shape (N, n^2, n^2) taken mod p.  Returns a
    dict of boolean arrays (one entry per operator) plus the conjugate batch
    and the structure-constant tensor ``C[o,i,j,k,l]``.
    """
    R = np.asarray(R, dtype=np.int64) % p
    N = R.shape[0]
    n2 = n * n
    if R.shape[1:] != (n2, n2):
        raise ValueError("operator batch of the wrong shape")
    R5 = R.reshape(N, n, n, n, n)
    Rimg = R5.transpose(0, 3, 4, 1, 2)          # Rimg[o,a,b,u,v] = R(e_ab)_{uv}
    RSimg = Rimg.transpose(0, 4, 3, 2, 1)       # conjugate wrt the trace form
    RS = RSimg.transpose(0, 3, 4, 1, 2).reshape(N, n2, n2)

    def all_zero(A):
        return (np.asarray(A) % p == 0).reshape(N, -1).all(axis=1)

    def agree(A, B):
        return all_zero(A - B)

    es = np.einsum
    # products R(x)R(y) etc. on matrix-unit pairs x = e_ab, y = e_cd
    rr = es('oabuw,ocdwv->oabcduv', Rimg, Rimg)
    r_rx_y = es('oabuc,oudxy->oabcdxy', Rimg, Rimg)
    r_x_ry = es('ocdbv,oavxy->oabcdxy', Rimg, Rimg)
    left_avg = agree(rr, r_rx_y)
    rota_baxter = agree(rr, r_rx_y + r_x_ry)
    averaging = left_avg & agree(r_rx_y, r_x_ry)
    left_avg_mixed = agree(es('oabuw,ocdwv->oabcduv', RSimg, Rimg),
                           es('ocdbv,oavxy->oabcdxy', Rimg, RSimg))
    left_avg_conj = agree(es('oabuc,oudxy->oabcdxy', Rimg, RSimg),
                          es('ocdbv,oavxy->oabcdxy', RSimg, RSimg))
    dual_left_avg = agree(es('oabuw,ocdwv->oabcduv', RSimg, RSimg),
                          es('oabuc,oudxy->oabcdxy', RSimg, RSimg))
    dual_left_avg_mixed = agree(es('oabuw,ocdwv->oabcduv', Rimg, RSimg),
                                es('ocdbv,oavxy->oabcdxy', RSimg, Rimg))
    dual_left_avg_conj = agree(es('oabuc,oudxy->oabcdxy', RSimg, Rimg), r_x_ry)
    skew = all_zero(RS + R)
    symmetric = all_zero(RS - R)

    # structure constants of the induced bracket and its identities
    C = R5.transpose(0, 3, 2, 4, 1)             # C[o,i,j,k,l] = R[l*n+j, i*n+k]
    C2 = RS.reshape(N, n, n, n, n).transpose(0, 2, 3, 1, 4)
    two_expressions = agree(C, C2)
    Ct = C.transpose(0, 2, 1, 4, 3)
    skew_direct = all_zero(C + Ct)
    symmetric_direct = all_zero(C - Ct)
    T1 = es('ojkpz,oipxy->oijkxyz', C, C)
    T2 = es('oikxq,ojqyz->oijkxyz', C, C)
    T3 = es('oijpy,opkxz->oijkxyz', C, C)
    T4 = es('ojkyq,oiqxz->oijkxyz', C, C)
    T5 = es('oijxq,oqkyz->oijkxyz', C, C)
    lie_direct = skew_direct & all_zero(T1 - T2 - T3)
    associative_direct = all_zero(T1 - T3) & all_zero(T4 - T5)
    commutative_direct = associative_direct & symmetric_direct

    bracket_nonzero = (C % p != 0).reshape(N, -1).any(axis=1)

    if n == 2:
        # every proper nonzero subspace is a line; a line span{v} is an ideal
        # exactly when xi (x) xi kills all brackets against v
        line_ok = np.zeros((N, p + 1), dtype=bool)
        reps = [((1, b), (b % p, p - 1)) for b in range(p)] + [((0, 1), (1, 0))]
        for t, (v, xi) in enumerate(reps):
            va = np.array(v, dtype=np.int64)
            xa = np.array(xi, dtype=np.int64)
            left = es('ojikl,j,k,l->oi', C, va, xa, xa) % p
            right = es('oijkl,j,k,l->oi', C, va, xa, xa) % p
            line_ok[:, t] = (left == 0).all(axis=1) & (right == 0).all(axis=1)
        has_proper_ideal = line_ok.any(axis=1)
        simple = bracket_nonzero & ~has_proper_ideal
    elif n == 1:
        has_proper_ideal = np.zeros(N, dtype=bool)
        simple = bracket_nonzero.copy()
    else:
        has_proper_ideal = None
        simple = None

    return {
        "R": R, "RS": RS, "C": C,
        "left_avg": left_avg, "left_avg_mixed": left_avg_mixed,
        "left_avg_conj": left_avg_conj, "dual_left_avg": dual_left_avg,
        "dual_left_avg_mixed": dual_left_avg_mixed,
        "dual_left_avg_conj": dual_left_avg_conj,
        "skew": skew, "symmetric": symmetric,
        "rota_baxter": rota_baxter, "averaging": averaging,
        "lie_op": skew & rota_baxter,
        "assoc_op": left_avg & dual_left_avg,
        "comm_op": symmetric & averaging,
        "skew_direct": skew_direct, "symmetric_direct": symmetric_direct,
        "lie_direct": lie_direct, "associative_direct": associative_direct,
        "commutative_direct": commutative_direct,
        "two_expressions": two_expressions,
        "bracket_nonzero": bracket_nonzero,
        "has_proper_ideal": has_proper_ideal,
        "simple": simple,
    }


# ---------------------------------------------------------------------------
# per-operator structural consequences of the averaging identities
# ---------------------------------------------------------------------------

def _structural_violations(Rm, RSm, p, n, index, dichotomy):
    """Checks for one associative-pair operator given as integer matrices.

    ``dichotomy`` asks for the split/nilpotent dichotomy of symmetric
    averaging operators; it applies to operators of simple commutative
    algebras (non-simple ones can have 0 < R(A) ∩ Ker R < R(A)).
    """
    out = []
    n2 = n * n
    cols_r = [[Rm[i][j] for i in range(n2)] for j in range(n2)]
    cols_rs = [[RSm[i][j] for i in range(n2)] for j in range(n2)]
    im_r, piv_r = _rref_int(cols_r, p)
    im_rs, piv_rs = _rref_int(cols_rs, p)
    ker_r = _rref_int(_kernel_int(Rm, p, n2), p)
    ker_rs = _rref_int(_kernel_int(RSm, p, n2), p)
    b_rows, b_piv = _rref_int(im_r + im_rs, p)

    def member(space, vec):
        rows, pivots = space
        return _member_int(rows, pivots, vec, p)

    def prod(u, v):
        return _vec_of_mat(_matmul_int(_mat_of_vec(u, n), _mat_of_vec(v, n), p))

    B = (b_rows, b_piv)
    IMR = (im_r, piv_r)
    IMRS = (im_rs, piv_rs)
    KR = ker_r
    KRS = ker_rs

    for x in b_rows:
        for y in b_rows:
            if not member(B, prod(x, y)):
                out.append({"check": "subalgebra_closed", "operator": index})
    for x in im_r:
        for y in b_rows:
            if not member(IMR, prod(x, y)):
                out.append({"check": "image_right_ideal", "operator": index})
    for x in im_rs:
        for y in b_rows:
            if not member(IMRS, prod(x, y)):
                out.append({"check": "image_right_ideal", "operator": index})
    for x in b_rows:
        for k in KR[0]:
            if not member(KR, prod(x, k)):
                out.append({"check": "kernel_left_submodule", "operator": index})
        for k in KRS[0]:
            if not member(KRS, prod(x, k)):
                out.append({"check": "kernel_left_submodule", "operator": index})
    for k in KR[0]:
        for y in im_rs:
            w = prod(k, y)
            if not (member(KR, w) and member(KRS, w)):
                out.append({"check": "kernel_image_product", "operator": index})
    for k in KRS[0]:
        for y in im_r:
            w = prod(k, y)
            if not (member(KR, w) and member(KRS, w)):
                out.append({"check": "kernel_image_product", "operator": index})

    # injective associative operators must be nonzero scalar multiples of id
    if not KR[0]:
        alpha = Rm[0][0] % p
        scalar_ok = alpha != 0 and all(
            Rm[i][j] % p == (alpha if i == j else 0)
            for i in range(n2) for j in range(n2))
        conj_ok = all(Rm[i][j] % p == RSm[i][j] % p
                      for i in range(n2) for j in range(n2))
        if not (scalar_ok and conj_ok):
            out.append({"check": "injective_scalar", "operator": index})

    # if the images span everything the kernel must vanish
    if len(b_rows) == n2 and KR[0]:
        out.append({"check": "full_sum_injective", "operator": index})

    # proper image => the induced ideal R(A)V is proper
    if len(im_r) < len(b_rows):
        vectors = []
        for col in cols_r:
            m = _mat_of_vec(col, n)
            for j in range(n):
                vectors.append([m[i][j] for i in range(n)])
        span, _ = _rref_int(vectors, p)
        if len(span) == n:
            out.append({"check": "image_action_proper", "operator": index})

    # symmetric averaging dichotomy: either A = R(A) (+) Ker R with
    # R^2 = R(1)-multiple of R, or R(A) lies inside Ker R and R^2 = 0
    if dichotomy:
        inter = _intersect_int(im_r, KR[0], p) if KR[0] else []
        r_squared = _matmul_int(Rm, Rm, p)
        if not inter:
            eye = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            u = _mat_of_vec(_apply_int(Rm, _vec_of_mat(eye), p), n)
            ok = True
            for col in cols_r:
                lhs = _apply_int(r_squared, col, p)
                rhs = _vec_of_mat(_matmul_int(u, _mat_of_vec(
                    _apply_int(Rm, col, p), n), p))
                if lhs != rhs:
                    ok = False
            for x in im_r:
                xm = _mat_of_vec(x, n)
                if _matmul_int(u, xm, p) != _matmul_int(xm, u, p):
                    ok = False
            if not ok:
                out.append({"check": "dichotomy_split_type", "operator": index})
        else:
            im_in_ker = all(_member_int(KR[0], KR[1], x, p) for x in im_r)
            nilpotent = all(x % p == 0 for row in r_squared for x in row)
            nonzero = any(x % p for row in Rm for x in row)
            if not (im_in_ker and nilpotent):
                out.append({"check": "dichotomy_nilpotent_type", "operator": index})
            elif nonzero and n % p != 0:
                out.append({"check": "dichotomy_characteristic", "operator": index})
    return out


def _rb_image_violations(Rm, p, n, index):
    """The image of a skew Rota-Baxter operator never contains the identity."""
    n2 = n * n
    eye = [1 if (i % (n + 1) == 0) else 0 for i in range(n2)]
    augmented = [[Rm[i][j] for j in range(n2)] + [eye[i]] for i in range(n2)]
    plain_rank = len(_rref_int(Rm, p)[0])
    aug_rank = len(_rref_int(augmented, p)[0])
    if aug_rank == plain_rank:
        return [{"check": "rb_image_contains_identity", "operator": index}]
    return []


# ---------------------------------------------------------------------------
# the sweep driver
# ---------------------------------------------------------------------------

@dataclass
class SweepReport:
    """Aggregated result of one operator sweep."""

    field_tag: str
    n: int
    mode: str
    total: int
    counts: dict
    violations: list
    witnesses: dict
    elapsed: float
    seed: int | None = None
    workers: int = 1

    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        check_names = sorted({
            "classification_agreement", "left_triple_equivalence",
            "dual_triple_equivalence", "two_bracket_expressions",
            "lie_proper_ideal", "no_simple_lie", "simple_associative_commutative",
            "averaging_difference_rota_baxter", "rb_image_contains_identity",
            "subalgebra_closed", "image_right_ideal", "kernel_left_submodule",
            "kernel_image_product", "injective_scalar", "full_sum_injective",
            "image_action_proper", "dichotomy_split_type",
            "dichotomy_nilpotent_type", "dichotomy_characteristic",
        } | {v["check"] for v in self.violations})
        by_check = {name: [] for name in check_names}
        for v in self.violations:
            by_check[v["check"]].append(v)
        checks = [{
            "name": name,
            "status": "pass" if not by_check[name] else "fail",
            "details": f"{len(by_check[name])} violation(s)",
        } for name in check_names]
        return {
            "run": f"sweep {self.field_tag} n={self.n} {self.mode}",
            "checks": checks,
            "counts": dict(self.counts),
        }


def _operators_for_range(p, n2, lo, hi):
    idx = np.arange(lo, hi, dtype=np.int64)
    digits = np.empty((hi - lo, n2 * n2), dtype=np.int64)
    rem = idx.copy()
    for m in range(n2 * n2):
        digits[:, m] = rem % p
        rem //= p
    return digits.reshape(-1, n2, n2)


def _sweep_chunk(payload):
    p, n, base, operators = payload
    n2 = n * n
    flags = operator_flags_batch(operators, p, n)
    N = operators.shape[0]
    violations = []

    def record(mask, check):
        for local in np.flatnonzero(mask):
            violations.append({"check": check, "operator": int(base + local)})

    record(flags["lie_op"] != flags["lie_direct"], "classification_agreement")
    record(flags["assoc_op"] != flags["associative_direct"],
           "classification_agreement")
    record(flags["comm_op"] != flags["commutative_direct"],
           "classification_agreement")
    record(flags["skew"] != flags["skew_direct"], "classification_agreement")
    record(flags["symmetric"] != flags["symmetric_direct"],
           "classification_agreement")
    record((flags["left_avg"] != flags["left_avg_mixed"])
           | (flags["left_avg"] != flags["left_avg_conj"]),
           "left_triple_equivalence")
    record((flags["dual_left_avg"] != flags["dual_left_avg_mixed"])
           | (flags["dual_left_avg"] != flags["dual_left_avg_conj"]),
           "dual_triple_equivalence")
    record(~flags["two_expressions"], "two_bracket_expressions")

    simple = flags["simple"]
    if flags["has_proper_ideal"] is not None:
        if n >= 2:
            record(flags["lie_op"] & ~flags["has_proper_ideal"],
                   "lie_proper_ideal")
        record(flags["lie_op"] & simple, "no_simple_lie")
        record(flags["assoc_op"] & simple
               & ~(flags["symmetric"] & flags["commutative_direct"]),
               "simple_associative_commutative")

    R = flags["R"]
    RS = flags["RS"]
    assoc_idx = np.flatnonzero(flags["assoc_op"])
    lie_idx = np.flatnonzero(flags["lie_op"])
    comm = flags["comm_op"]

    if assoc_idx.size:
        diff = (R[assoc_idx] - RS[assoc_idx]) % p
        dflags = operator_flags_batch(diff, p, n)
        bad = ~(dflags["skew"] & dflags["rota_baxter"])
        for local in np.flatnonzero(bad):
            violations.append({
                "check": "averaging_difference_rota_baxter",
                "operator": int(base + assoc_idx[local])})
        for local in assoc_idx:
            Rm = [[int(x) for x in row] for row in R[local]]
            RSm = [[int(x) for x in row] for row in RS[local]]
            wants_dichotomy = bool(comm[local]) and simple is not None \
                and bool(simple[local])
            violations.extend(_structural_violations(
                Rm, RSm, p, n, int(base + local), wants_dichotomy))
    for local in lie_idx:
        Rm = [[int(x) for x in row] for row in R[local]]
        violations.extend(_rb_image_violations(Rm, p, n, int(base + local)))

    counts = {
        "total": int(N),
        "skew": int(flags["skew"].sum()),
        "symmetric": int(flags["symmetric"].sum()),
        "left_averaging": int(flags["left_avg"].sum()),
        "skew_rota_baxter": int(flags["lie_op"].sum()),
        "left_averaging_pair": int(flags["assoc_op"].sum()),
        "symmetric_averaging": int(flags["comm_op"].sum()),
        "commutative_direct": int(flags["commutative_direct"].sum()),
    }
    if simple is not None:
        counts["simple_algebras"] = int(simple.sum())
        counts["simple_associative"] = int((flags["assoc_op"] & simple).sum())

    witnesses = {}
    for key, mask in (("skew_rota_baxter", flags["lie_op"]),
                      ("left_averaging_pair", flags["assoc_op"]),
                      ("symmetric_averaging", comm)):
        hits = np.flatnonzero(mask & flags["bracket_nonzero"])
        if hits.size:
            witnesses[key] = [[int(x) for x in row] for row in R[hits[0]]]
    return {"counts": counts, "violations": violations, "witnesses": witnesses}


def run_sweep(field: Field, n: int, mode: str = "full", samples: int | None = None,
              seed: int = 0, workers: int = 1, chunk_size: int = 16384,
              full_cap: int = 250_000) -> SweepReport:
    """Sweep all (or ``samples`` random) operators on End(F^n) over GF(p).

    ``mode='full'`` enumerates every matrix, and requires p^(n^4) <= full_cap
    (GF(2) at n = 2 gives 65536 operators and is allowed by default).
    ``mode='sample'`` draws uniformly with a fixed seed.  Workers partition
    the operator range; aggregation is order-independent, so reports are
    deterministic for fixed seed and flags regardless of worker count.
    """
    if not isinstance(field, PrimeField):
        raise ValueError("sweeps run over prime fields GF(p)")
    p = field.p
    n2 = n * n
    start = time.perf_counter()

    if mode == "full":
        total = p ** (n2 * n2)
        if total > full_cap:
            raise ValueError(
                f"full sweep of {total} operators exceeds the cap {full_cap}; "
                "use mode='sample'")
        payloads = [(p, n, lo, _operators_for_range(p, n2, lo, min(lo + chunk_size, total)))
                    for lo in range(0, total, chunk_size)]
        used_seed = None
    elif mode == "sample":
        if not samples or samples < 1:
            raise ValueError("sample mode needs a positive sample count")
        total = samples
        rng = np.random.default_rng(seed)
        all_ops = rng.integers(0, p, size=(samples, n2, n2), dtype=np.int64)
        payloads = [(p, n, lo, all_ops[lo:min(lo + chunk_size, samples)])
                    for lo in range(0, samples, chunk_size)]
        used_seed = seed
    else:
        raise ValueError(f"unknown sweep mode {mode!r}")

    if workers > 1 and len(payloads) > 1:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            results = pool.map(_sweep_chunk, payloads)
    else:
        results = [_sweep_chunk(pl) for pl in payloads]

    counts: dict = {}
    violations: list = []
    witnesses: dict = {}
    for res in results:
        for k, v in res["counts"].items():
            counts[k] = counts.get(k, 0) + v
        violations.extend(res["violations"])
        for k, v in res["witnesses"].items():
            witnesses.setdefault(k, v)
    violations.sort(key=lambda v: (v["check"], v["operator"]))
    elapsed = time.perf_counter() - start
    return SweepReport(field_tag=field.tag, n=n, mode=mode, total=total,
                       counts=counts, violations=violations,
                       witnesses=witnesses, elapsed=elapsed,
                       seed=used_seed, workers=workers)
