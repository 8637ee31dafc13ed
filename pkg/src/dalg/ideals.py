"""Ideal testing and discovery for double algebras, and simplicity verdicts.

A subspace I of V is an ideal when {{V, I}} + {{I, V}} lands in the sleeve
I (x) V + V (x) I.  Simplicity additionally requires a nonzero bracket.
Three search methods are provided:

* exhaustive enumeration of subspaces over a finite field (complete, capped),
* a projective search over the two charts of the line when dim V = 2
  (complete over any field with root finding),
* a bounded invariant-closure heuristic (sound but incomplete).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from itertools import combinations, product

from .algebra import DoubleAlgebra
from .field import Field, RootSearchCapError, UniPoly, poly_gcd, roots_in_field
from .linalg import DimensionMismatchError, Subspace
from .operators import operator_from_bracket
from .tensors import sleeve


def is_ideal(V: DoubleAlgebra, I: Subspace) -> bool:
    """True when every bracket against I lies in I (x) V + V (x) I.

    By bilinearity it is enough to bracket basis vectors of I with basis
    vectors of V, in both orders.
    """
    if I.ambient != V.n:
        raise DimensionMismatchError("subspace of the wrong ambient dimension")
    if I.field != V.field:
        raise DimensionMismatchError("subspace over the wrong field")
    if I.is_zero() or I.is_full():
        return True
    hull = sleeve(I)
    basis_vectors = [tuple(V.field.one() if t == j else V.field.zero()
                           for t in range(V.n)) for j in range(V.n)]
    for u in I.basis():
        for e in basis_vectors:
            if not hull.contains_vector(V.bracket(e, u).coords):
                return False
            if not hull.contains_vector(V.bracket(u, e).coords):
                return False
    return True


@dataclass(frozen=True)
class IdealVerdict:
    """Outcome of a simplicity check.

    ``kind`` is one of ``simple``, ``not_simple``, ``unknown``;
    ``method`` records how the verdict was reached.  A ``not_simple`` verdict
    carries a witness ideal except in the degenerate zero-bracket case at
    dimension one, where no proper nonzero subspace exists.
    """

    kind: str
    method: str
    witness: Subspace | None = None
    reason: str = ""

    def is_simple(self) -> bool:
        return self.kind == "simple"


@dataclass(frozen=True)
class OneDimSearchResult:
    """All 1-dimensional ideals of a 2-dimensional algebra.

    ``all_lines`` is set only when every defining constraint vanishes
    identically, i.e. every line is an ideal.
    """

    all_lines: bool
    lines: tuple = dataclass_field(default_factory=tuple)


def invariant_ideal_search(V: DoubleAlgebra) -> list[Subspace]:
    """Bounded ideal discovery via invariant-subspace closures.

    Gathers the images of all matrix units under the bracket's operator and
    its conjugate, and closes basis vectors and kernel vectors under that set.
    Every invariant subspace of the set is automatically an ideal.  An empty
    result does NOT imply simplicity.
    """
    from .operators import conjugate

    field, n = V.field, V.n
    R = operator_from_bracket(V)
    RS = conjugate(R)
    ops = []
    for p in range(n):
        for q in range(n):
            ops.append(R.image_of_unit(p, q))
            ops.append(RS.image_of_unit(p, q))

    from .linalg import cyclic_closure, kernel_basis

    seeds = []
    for j in range(n):
        seeds.append(tuple(field.one() if t == j else field.zero()
                           for t in range(n)))
    for op in ops:
        for v in kernel_basis(op).basis():
            seeds.append(v)

    found = []
    seen = set()
    for seed in seeds:
        if all(x.is_zero() for x in seed):
            continue
        closure = cyclic_closure(field, n, [seed], ops)
        if closure.is_proper_nonzero() and closure not in seen:
            seen.add(closure)
            if not is_ideal(V, closure):
                raise RuntimeError(
                    "invariant closure failed the ideal check; "
                    "the operator extraction is inconsistent")
            found.append(closure)
    return found


def count_subspaces(q: int, n: int, dims) -> int:
    """Number of subspaces of F_q^n with dimension in ``dims`` (via RREF patterns)."""
    total = 0
    for d in dims:
        for pivots in combinations(range(n), d):
            free = _free_positions(n, pivots)
            total += q ** len(free)
    return total


def _free_positions(n, pivots):
    """Positions (row, col) that range freely in an RREF pattern."""
    pivot_set = set(pivots)
    free = []
    for r, pc in enumerate(pivots):
        for c in range(pc + 1, n):
            if c not in pivot_set:
                free.append((r, c))
    return free


def enumerate_subspaces(field: Field, n: int, dims):
    """All subspaces of F^n of dimension in ``dims``, each exactly once.

    Iterates RREF pivot patterns with free entries running over the field;
    the order is deterministic.
    """
    if not field.is_finite():
        raise ValueError("subspace enumeration requires a finite field")
    elements = list(field.elements())
    zero, one = field.zero(), field.one()
    for d in sorted(dims):
        if d < 0 or d > n:
            continue
        if d == 0:
            yield Subspace.zero(field, n)
            continue
        for pivots in combinations(range(n), d):
            free = _free_positions(n, pivots)
            for assignment in product(elements, repeat=len(free)):
                rows = [[zero] * n for _ in range(d)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = one
                for (r, c), value in zip(free, assignment):
                    rows[r][c] = value
                yield Subspace(field, n, [tuple(r) for r in rows], pivots)


def exhaustive_ideal_search(V: DoubleAlgebra, dims=None,
                            cap: int = 10 ** 6) -> IdealVerdict:
    """Enumerate candidate subspaces over a finite field and test each one.

    With the default dims (1..n-1) this is a complete simplicity decision for
    the ideal-existence part; with a dims filter it certifies statements like
    "no ideals of dimension below d".  Exceeding ``cap`` yields ``unknown``.
    """
    if not V.field.is_finite():
        return IdealVerdict("unknown", "exhaustive",
                            reason="field is not finite")
    if dims is None:
        dims = range(1, V.n)
    dims = sorted(set(dims))
    total = count_subspaces(V.field.order(), V.n, dims)
    if total > cap:
        return IdealVerdict(
            "unknown", "exhaustive",
            reason=f"{total} candidate subspaces exceed the cap {cap}")
    complete = dims == list(range(1, V.n))
    for candidate in enumerate_subspaces(V.field, V.n, dims):
        if candidate.is_proper_nonzero() and is_ideal(V, candidate):
            return IdealVerdict("not_simple", "exhaustive", witness=candidate)
    if complete:
        if V.is_zero_bracket():
            return IdealVerdict("not_simple", "exhaustive",
                                reason="the double bracket is zero")
        return IdealVerdict("simple", "exhaustive")
    return IdealVerdict("unknown", "exhaustive",
                        reason=f"no ideals of dimension in {dims}; "
                               "other dimensions were not searched")


def projective_1d_ideal_search(V: DoubleAlgebra) -> OneDimSearchResult:
    """All 1-dimensional ideals of a 2-dimensional algebra, over any field.

    A line spanned by v is an ideal exactly when the functional xi (x) xi,
    with xi spanning the annihilator of v, kills the four bracket values
    {{v, e_i}} and {{e_i, v}}.  The chart v = e1 + beta*e2 turns those into
    polynomials in beta (roots found exactly); the chart v = e2 is a direct
    scalar check.  Root finding may raise RootSearchCapError.
    """
    if V.n != 2:
        raise DimensionMismatchError("the projective line search needs dim V = 2")
    field = V.field
    one, zero = field.one(), field.zero()
    beta = UniPoly.x(field)
    # xi = beta*e1* - e2*: xi (x) xi has coordinates [beta^2, -beta, -beta, 1]
    xi_sq = [beta * beta, -beta, -beta, UniPoly.constant(field, one)]

    constraints = []
    basis = [(one, zero), (zero, one)]
    for e in basis:
        for left in (True, False):
            t0 = V.bracket(basis[0], e) if left else V.bracket(e, basis[0])
            t1 = V.bracket(basis[1], e) if left else V.bracket(e, basis[1])
            poly = UniPoly.zero(field)
            for idx in range(4):
                entry = UniPoly(field, (t0.coords[idx],)) + \
                    UniPoly(field, (zero, t1.coords[idx]))
                poly = poly + xi_sq[idx] * entry
            constraints.append(poly)

    # second chart: the line spanned by e2, annihilated by e1*
    e2_ok = all(
        V.bracket((zero, one), e)[(0, 0)].is_zero()
        and V.bracket(e, (zero, one))[(0, 0)].is_zero()
        for e in basis)

    nonzero = [p for p in constraints if not p.is_zero()]
    if not nonzero:
        # the constraints are homogeneous of degree 3 in the line coordinates,
        # so identical vanishing on this chart forces the e2 chart as well
        if not e2_ok:
            raise RuntimeError("chart constraints vanish but the e2 line fails; "
                               "the homogeneity reasoning is broken")
        return OneDimSearchResult(all_lines=True, lines=())

    lines = []
    g = nonzero[0]
    for p in nonzero[1:]:
        g = poly_gcd(g, p)
    if g.degree >= 1:
        for root in sorted(roots_in_field(g), key=lambda s: str(s)):
            lines.append(Subspace.from_vectors(field, 2, [(one, root)]))
    if e2_ok:
        lines.append(Subspace.from_vectors(field, 2, [(zero, one)]))

    for line in lines:
        if not is_ideal(V, line):
            raise RuntimeError("projective search produced a non-ideal line")
    return OneDimSearchResult(all_lines=False, lines=tuple(lines))


def simplicity_report(V: DoubleAlgebra, cap: int = 10 ** 6) -> IdealVerdict:
    """Decide simplicity with the strongest applicable method.

    Dispatch: the zero-bracket case fails by definition; finite fields under
    the cap get exhaustive enumeration; dimension 2 gets the projective line
    search; otherwise the invariant-closure heuristic runs and an empty
    result is reported as ``unknown``.
    """
    field, n = V.field, V.n
    if V.is_zero_bracket():
        witness = None
        if n >= 2:
            witness = Subspace.from_vectors(
                field, n, [tuple(field.one() if t == 0 else field.zero()
                                 for t in range(n))])
        return IdealVerdict("not_simple", "definition", witness=witness,
                            reason="the double bracket is zero")
    if n == 1:
        return IdealVerdict("simple", "exhaustive",
                            reason="no proper nonzero subspaces exist")
    if field.is_finite():
        total = count_subspaces(field.order(), n, range(1, n))
        if total <= cap:
            return exhaustive_ideal_search(V, cap=cap)
    if n == 2:
        try:
            result = projective_1d_ideal_search(V)
        except RootSearchCapError as exc:
            return IdealVerdict("unknown", "projective-1d", reason=str(exc))
        if result.all_lines:
            witness = Subspace.from_vectors(field, 2, [(field.one(), field.zero())])
            return IdealVerdict("not_simple", "projective-1d", witness=witness,
                                reason="every line is an ideal")
        if result.lines:
            return IdealVerdict("not_simple", "projective-1d",
                                witness=result.lines[0])
        return IdealVerdict("simple", "projective-1d")
    found = invariant_ideal_search(V)
    if found:
        return IdealVerdict("not_simple", "invariant-closure", witness=found[0])
    return IdealVerdict("unknown", "invariant-closure",
                        reason="bounded search found no ideals; "
                               "this does not certify simplicity")
