"""A catalog of concrete double algebras and operators used across the suite.

All constructions are exact.  Unless stated otherwise the default field is Q;
constructions carrying a field-specific identity (the symmetric averaging
operator over GF(2)(t), for instance) fix their own field.
"""

from __future__ import annotations

import re

from .algebra import DoubleAlgebra, opposite_algebra, tensor_product
from .field import Field, GFt, QQ
from .linalg import MatrixOverField, _rref_rows
from .operators import EndOperator, bracket_from_operator
from .tensors import Tensor2


def vc(n: int = 2, alpha=1, field: Field = QQ) -> DoubleAlgebra:
    """{{u, v}} = alpha * u (x) v; an associative and commutative double algebra."""
    alpha = field.scalar(alpha)
    table = {}
    for i in range(n):
        for j in range(n):
            table[(i, j)] = Tensor2.from_terms(field, n, [(i, j, alpha)])
    return DoubleAlgebra.from_table(field, n, table, name=f"V_c({n})")


def v2(field: Field = QQ) -> DoubleAlgebra:
    """Two-dimensional algebra with {{e1,e1}} = e1 (x) e2 and all else zero;
    associative and non-commutative."""
    table = {(0, 0): Tensor2.from_terms(field, 2, [(0, 1, 1)])}
    return DoubleAlgebra.from_table(field, 2, table, name="V_2")


def phi_algebra(phi: MatrixOverField) -> DoubleAlgebra:
    """{{u, v}} = phi(u) (x) v + u (x) phi(v) for a square-zero endomorphism phi;
    associative and commutative."""
    field = phi.field
    n = phi.nrows
    if phi.ncols != n:
        raise ValueError("phi must be square")
    if not (phi * phi).is_zero():
        raise ValueError("phi must satisfy phi^2 = 0")
    table = {}
    for i in range(n):
        for j in range(n):
            terms = []
            for k in range(n):
                if not phi.rows[k][i].is_zero():
                    terms.append((k, j, phi.rows[k][i]))
            for l in range(n):
                if not phi.rows[l][j].is_zero():
                    terms.append((i, l, phi.rows[l][j]))
            if terms:
                table[(i, j)] = Tensor2.from_terms(field, n, terms)
    return DoubleAlgebra.from_table(field, n, table, name="phi-algebra")


def module_ext(mult, phis, field: Field = QQ) -> DoubleAlgebra:
    """The associative double algebra on Z (+) A for an associative algebra A
    and a space Z of module endomorphisms with a fixed basis {phi_i}.

    ``mult[i][j]`` lists the coordinates of a_i * a_j; each phi is an m-by-m
    matrix over the field and must satisfy phi(x y) = x phi(y), which is
    validated on basis pairs rather than inferred.  The bracket is
    {{x, y}} = sum_i phi_i(x) y (x) phi_i on A, zero whenever either argument
    lies in Z.  Basis order: a_1..a_m then phi_1..phi_z.
    """
    m = len(mult)
    mult = [[tuple(field.scalar(c) for c in mult[i][j]) for j in range(m)]
            for i in range(m)]
    for i in range(m):
        for j in range(m):
            if len(mult[i][j]) != m:
                raise ValueError("multiplication table has wrong coordinate length")

    def product(vec_a, vec_b):
        out = [field.zero()] * m
        for i, ai in enumerate(vec_a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(vec_b):
                if bj.is_zero():
                    continue
                for s in range(m):
                    out[s] = out[s] + ai * bj * mult[i][j][s]
        return tuple(out)

    unit_vecs = [tuple(field.one() if t == i else field.zero() for t in range(m))
                 for i in range(m)]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                left = product(product(unit_vecs[i], unit_vecs[j]), unit_vecs[k])
                right = product(unit_vecs[i], product(unit_vecs[j], unit_vecs[k]))
                if left != right:
                    raise ValueError("the base algebra is not associative")

    phis = [MatrixOverField(field, p.rows if isinstance(p, MatrixOverField) else p)
            for p in phis]
    for phi in phis:
        if phi.nrows != m or phi.ncols != m:
            raise ValueError("phi matrices must act on the base algebra")
        for i in range(m):
            for j in range(m):
                lhs = phi.matvec(product(unit_vecs[i], unit_vecs[j]))
                rhs = product(unit_vecs[i], phi.matvec(unit_vecs[j]))
                if lhs != rhs:
                    raise ValueError(
                        "phi does not commute with left multiplication: "
                        "phi(x y) != x phi(y)")
    flat = [phi.flatten() for phi in phis]
    _, pivots = _rref_rows(field, flat)
    if len(pivots) != len(phis):
        raise ValueError("phi matrices must be linearly independent")

    z = len(phis)
    n = m + z
    table = {}
    for p in range(m):
        for q in range(m):
            terms = []
            for i, phi in enumerate(phis):
                coords = product(phi.matvec(unit_vecs[p]), unit_vecs[q])
                for s, c in enumerate(coords):
                    if not c.is_zero():
                        terms.append((s, m + i, c))
            if terms:
                table[(p, q)] = Tensor2.from_terms(field, n, terms)
    return DoubleAlgebra.from_table(field, n, table, name="Z(+)A")


def l2(field: Field = QQ) -> DoubleAlgebra:
    """Two-dimensional Lie double algebra: [[e1,e1]] = e1 (x) e2 - e2 (x) e1."""
    one = field.one()
    table = {(0, 0): Tensor2.from_terms(field, 2, [(0, 1, one), (1, 0, -one)])}
    return DoubleAlgebra.from_table(field, 2, table, name="L_2")


def l2_dual(field: Field = QQ) -> DoubleAlgebra:
    """The dual of L_2: [[e1,e2]] = e1 (x) e1 = -[[e2,e1]]; Lie but not a
    commutator algebra of any associative double algebra."""
    one = field.one()
    table = {
        (0, 1): Tensor2.from_terms(field, 2, [(0, 0, one)]),
        (1, 0): Tensor2.from_terms(field, 2, [(0, 0, -one)]),
    }
    return DoubleAlgebra.from_table(field, 2, table, name="L_2*")


def l2n(n: int = 2, field: Field = QQ) -> DoubleAlgebra:
    """L(2,n): a 2n^2-dimensional Lie double algebra whose nonzero ideals all
    have dimension at least n.

    Built as (dual of L_2) (x) V_c(n) (x) V_c(n)^op.  The dual generator is
    essential: it has no basis vector with identically zero brackets, whereas
    e2 in L_2 brackets to zero with everything, so any tensor factor built on
    L_2 itself would carry 1-dimensional zero-bracket ideals.
    """
    base = vc(n, 1, field)
    out = tensor_product(tensor_product(l2_dual(field), base),
                         opposite_algebra(base))
    return out.rename(f"L(2,{n})")


def p1_quotient(D: int, field: Field = QQ) -> DoubleAlgebra:
    """Finite quotient of the polynomial Lie double algebra on spans of
    1, t, ..., t^(D-1), truncating the span of degrees >= D.

    The bracket is the divided-difference product
    [[t^a, t^b]] = (t^a (x) 1 - 1 (x) t^a)(t^b (x) 1 - 1 (x) t^b) / (1 (x) t - t (x) 1),
    whose closed form is sum_{r+s=a-1} (t^r (x) t^(s+b) - t^(r+b) (x) t^s).
    """
    if D < 1:
        raise ValueError("the quotient needs at least the constant monomial")
    one = field.one()
    table = {}
    for a in range(D):
        for b in range(D):
            terms = []
            for r in range(a):
                s = a - 1 - r
                if s + b < D:
                    terms.append((r, s + b, one))
                if r + b < D:
                    terms.append((r + b, s, -one))
            if terms:
                table[(a, b)] = Tensor2.from_terms(field, D, terms)
    return DoubleAlgebra.from_table(field, D, table, name=f"P_1/deg>={D}")


def dyangian(N: int = 2, D: int = 4, field: Field = QQ) -> DoubleAlgebra:
    """The Yangian-shadow Lie double algebra: p1_quotient(D) (x) V_c^op(N) (x) V_c(N).

    Basis T_d^(i,j) = t^d (x) e_i (x) e_j at index (d*N + i)*N + j; its table
    mirrors the defining relations of the Yangian of gl_N.
    """
    base = vc(N, 1, field)
    out = tensor_product(
        tensor_product(p1_quotient(D, field), opposite_algebra(base)), base)
    return out.rename(f"dY({N},{D})")


def real_example() -> DoubleAlgebra:
    """The simple commutative double algebra on Q^2 with
    {{e1,e1}} = -{{e2,e2}} = e1 (x) e1 - e2 (x) e2 and
    {{e1,e2}} = {{e2,e1}} = e1 (x) e2 + e2 (x) e1.

    Its defining operator satisfies R^2 = 2R; the rational model is faithful
    for root-existence questions because a rational root would be a real one.
    """
    field = QQ
    one = field.one()
    t11 = Tensor2.from_terms(field, 2, [(0, 0, one), (1, 1, -one)])
    t12 = Tensor2.from_terms(field, 2, [(0, 1, one), (1, 0, one)])
    table = {(0, 0): t11, (0, 1): t12, (1, 0): t12, (1, 1): -t11}
    return DoubleAlgebra.from_table(field, 2, table, name="real-example")


def real_operator() -> EndOperator:
    """The symmetric averaging operator on M_2(Q) behind ``real_example``:
    [[x, y], [v, w]] -> [[x+w, y-v], [v-y, x+w]]."""
    field = QQ

    def action(mat):
        x, y = mat.rows[0]
        v, w = mat.rows[1]
        return MatrixOverField(field, [[x + w, y - v], [v - y, x + w]])

    return EndOperator.from_action(field, 2, action)


def gf2t_operator() -> EndOperator:
    """The symmetric averaging operator on M_2(GF(2)(t)) with R^2 = 0:
    [[x, y], [v, w]] -> [[x+w, y+t*v], [y/t+v, x+w]]."""
    field = GFt(2)
    t = field.t()
    tinv = t.inverse()

    def action(mat):
        x, y = mat.rows[0]
        v, w = mat.rows[1]
        return MatrixOverField(field, [[x + w, y + t * v], [tinv * y + v, x + w]])

    return EndOperator.from_action(field, 2, action)


def gf2t_example() -> DoubleAlgebra:
    """The simple commutative double algebra on GF(2)(t)^2 induced by
    ``gf2t_operator``."""
    return bracket_from_operator(gf2t_operator(), name="gf2t-example")


def _default_phi(field: Field) -> MatrixOverField:
    zero, one = field.zero(), field.one()
    return MatrixOverField(field, [[zero, one], [zero, zero]])


_EXAMPLES = {
    "vc": lambda field, params: vc(int(params.get("n", 2)),
                                   params.get("alpha", 1), field),
    "v2": lambda field, params: v2(field),
    "phi": lambda field, params: phi_algebra(params.get("phi") or _default_phi(field)),
    "module_ext": lambda field, params: module_ext(
        params.get("mult", [[[1]]]),
        params.get("phis", [MatrixOverField(field, [[1]])]), field),
    "l2": lambda field, params: l2(field),
    "l2_dual": lambda field, params: l2_dual(field),
    "l2n": lambda field, params: l2n(int(params.get("n", 2)), field),
    "p1": lambda field, params: p1_quotient(int(params.get("D", 3)), field),
    "dy": lambda field, params: dyangian(int(params.get("N", 2)),
                                         int(params.get("D", 4)), field),
    "real": lambda field, params: real_example(),
    "gf2t": lambda field, params: gf2t_example(),
}

_POSITIONAL = {
    "vc": ("n", "alpha"),
    "l2n": ("n",),
    "p1": ("D",),
    "dy": ("N", "D"),
}

EXAMPLE_NAMES = tuple(sorted(_EXAMPLES))


def make_example(name: str, field: Field | None = None, **params) -> DoubleAlgebra:
    """Build a catalog algebra by name; see EXAMPLE_NAMES.

    Names may carry integer arguments in parentheses, e.g. ``p1(3)``,
    ``dy(2,4)``, ``l2n(2)``, ``vc(3,1)``.  ``real`` is fixed over Q and
    ``gf2t`` over GF(2)(t).
    """
    name = name.strip()
    m = re.match(r"^([A-Za-z0-9_]+)\s*(?:\(([\d,\s]*)\))?$", name)
    if not m or m.group(1).lower() not in _EXAMPLES:
        raise ValueError(f"unknown example {name!r}; known: {', '.join(EXAMPLE_NAMES)}")
    key = m.group(1).lower()
    if m.group(2):
        args = [int(x) for x in m.group(2).split(",") if x.strip()]
        slots = _POSITIONAL.get(key, ())
        if len(args) > len(slots):
            raise ValueError(f"example {key!r} takes at most {len(slots)} arguments")
        for slot, value in zip(slots, args):
            params.setdefault(slot, value)
    if field is None:
        field = QQ
    if key in ("real", "gf2t") and params:
        raise ValueError(f"example {key!r} takes no parameters")
    return _EXAMPLES[key](field, params)


OPERATOR_EXAMPLE_NAMES = ("real", "gf2t", "zero", "identity")


def make_operator_example(name: str, field: Field | None = None,
                          n: int = 2) -> EndOperator:
    """Build a named operator: ``real``, ``gf2t``, ``zero(n)``, ``identity(n)``."""
    name = name.strip()
    m = re.match(r"^([A-Za-z0-9_]+)\s*(?:\((\d+)\))?$", name)
    if not m:
        raise ValueError(f"unknown operator example {name!r}")
    key = m.group(1).lower()
    if m.group(2):
        n = int(m.group(2))
    if key == "real":
        return real_operator()
    if key == "gf2t":
        return gf2t_operator()
    if key == "zero":
        return EndOperator.zero(field or QQ, n)
    if key == "identity":
        return EndOperator.identity(field or QQ, n)
    raise ValueError(f"unknown operator example {name!r}; "
                     f"known: {', '.join(OPERATOR_EXAMPLE_NAMES)}")
