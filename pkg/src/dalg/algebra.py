"""Double algebras: structure constants, bracket evaluation, extension maps,
classification by direct identity checking, and the derived constructions
(commutator, opposite, dual, tensor product).

A double algebra is a space F^n with a bilinear double bracket
{{.,.}} : V x V -> V (x) V given by structure constants
``c[i][j] = {{e_i, e_j}}`` as Tensor2 values.  All identities checked here
are multilinear, so verifying them on basis tuples is complete.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Field, FieldMismatchError
from .linalg import DimensionMismatchError, _coerce_row
from .tensors import Tensor2, Tensor3


@dataclass(frozen=True)
class ClassificationFlags:
    """Outcome of the direct identity checks on a double algebra."""

    is_skew: bool
    is_symmetric: bool
    is_lie: bool
    is_associative: bool
    is_commutative: bool

    def summary(self) -> str:
        names = []
        if self.is_lie:
            names.append("Lie")
        if self.is_commutative:
            names.append("commutative")
        elif self.is_associative:
            names.append("associative")
        if not names:
            names.append("unclassified")
        extra = []
        if self.is_skew:
            extra.append("skew")
        if self.is_symmetric:
            extra.append("symmetric")
        return ", ".join(names) + (f" ({', '.join(extra)})" if extra else "")


class DoubleAlgebra:
    """A finite-dimensional double algebra given by exact structure constants."""

    __slots__ = ("field", "n", "constants", "name", "_terms")

    def __init__(self, field: Field, n: int, constants, name: str | None = None):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        constants = tuple(tuple(row) for row in constants)
        if len(constants) != n or any(len(row) != n for row in constants):
            raise DimensionMismatchError("need an n-by-n grid of structure constants")
        for row in constants:
            for t in row:
                if not isinstance(t, Tensor2) or t.n != n or t.field != field:
                    raise DimensionMismatchError(
                        "structure constants must be Tensor2 values of matching shape")
        self.field = field
        self.n = n
        self.constants = constants
        self.name = name
        self._terms = None

    @classmethod
    def zero(cls, field, n, name=None):
        z = Tensor2.zero(field, n)
        return cls(field, n, [[z] * n for _ in range(n)], name=name)

    @classmethod
    def from_table(cls, field, n, table, name=None):
        """Build from a dict {(i, j): Tensor2} of nonzero brackets (zero-based)."""
        z = Tensor2.zero(field, n)
        grid = [[z] * n for _ in range(n)]
        for (i, j), t in table.items():
            grid[i][j] = t
        return cls(field, n, grid, name=name)

    def basis_bracket(self, i: int, j: int) -> Tensor2:
        return self.constants[i][j]

    def bracket(self, a, b) -> Tensor2:
        """Bilinear extension of the structure constants to coordinate vectors."""
        a = _coerce_row(self.field, a)
        b = _coerce_row(self.field, b)
        if len(a) != self.n or len(b) != self.n:
            raise DimensionMismatchError("vectors of the wrong dimension")
        out = Tensor2.zero(self.field, self.n)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                if bj.is_zero():
                    continue
                out = out + self.constants[i][j].scale(ai * bj)
        return out

    def nonzero_terms(self):
        """Per-pair sparse view: terms[i][j] is a list of (k, l, coeff)."""
        if self._terms is None:
            self._terms = tuple(
                tuple(t.nonzero_terms() for t in row) for row in self.constants)
        return self._terms

    def is_zero_bracket(self) -> bool:
        return all(t.is_zero() for row in self.constants for t in row)

    def rename(self, name: str) -> "DoubleAlgebra":
        return DoubleAlgebra(self.field, self.n, self.constants, name=name)

    def __eq__(self, other):
        if not isinstance(other, DoubleAlgebra):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.constants == other.constants)

    def __hash__(self):
        return hash((self.field, self.n, self.constants))

    def __repr__(self):
        label = self.name or "double algebra"
        return f"DoubleAlgebra({label}, n={self.n}, {self.field.tag})"


EXTENSION_KINDS = ("L-left", "R-left", "L-right", "R-right")


def extend(V: DoubleAlgebra, kind: str, x, y) -> Tensor3:
    """One of the four canonical liftings of the double bracket to V^(x)3.

    ``L-left`` / ``R-left`` take a plain vector on the left and a Tensor2 on
    the right: {{a, b(x)c}}_L = {{a,b}} (x) c and
    {{a, b(x)c}}_R = (b (x) {{a,c}}) permuted by (1 2).
    ``L-right`` / ``R-right`` take the Tensor2 on the left:
    {{a(x)b, c}}_L = ({{a,c}} (x) b) permuted by (2 3) and
    {{a(x)b, c}}_R = a (x) {{b,c}}.  All four extend linearly over tensors.
    """
    field, n = V.field, V.n
    out = Tensor3.zero(field, n)
    if kind in ("L-left", "R-left"):
        vec, tensor = _coerce_row(field, x), y
    elif kind in ("L-right", "R-right"):
        tensor, vec = x, _coerce_row(field, y)
    else:
        raise ValueError(f"unknown extension kind {kind!r}; "
                         f"expected one of {EXTENSION_KINDS}")
    if not isinstance(tensor, Tensor2) or tensor.n != n or tensor.field != field:
        raise DimensionMismatchError("tensor argument of the wrong shape")
    if len(vec) != n:
        raise DimensionMismatchError("vector argument of the wrong dimension")

    terms = []
    for p, q, w in tensor.nonzero_terms():
        if kind == "L-left":
            inner = _bracket_with_basis(V, vec, p)      # {{a, e_p}}
            for r, s, c in inner.nonzero_terms():
                terms.append((r, s, q, c * w))
        elif kind == "R-left":
            inner = _bracket_with_basis(V, vec, q)      # {{a, e_q}}
            for r, s, c in inner.nonzero_terms():
                terms.append((r, p, s, c * w))
        elif kind == "L-right":
            inner = _basis_bracket_with(V, p, vec)      # {{e_p, c}}
            for r, s, c in inner.nonzero_terms():
                terms.append((r, q, s, c * w))
        else:  # R-right
            inner = _basis_bracket_with(V, q, vec)      # {{e_q, c}}
            for r, s, c in inner.nonzero_terms():
                terms.append((p, r, s, c * w))
    return out + Tensor3.from_terms(field, n, terms)


def _bracket_with_basis(V, vec, j):
    """{{vec, e_j}} for a coordinate vector vec."""
    out = Tensor2.zero(V.field, V.n)
    for i, ai in enumerate(vec):
        if not ai.is_zero():
            out = out + V.constants[i][j].scale(ai)
    return out


def _basis_bracket_with(V, i, vec):
    """{{e_i, vec}} for a coordinate vector vec."""
    out = Tensor2.zero(V.field, V.n)
    for j, bj in enumerate(vec):
        if not bj.is_zero():
            out = out + V.constants[i][j].scale(bj)
    return out


# ---------------------------------------------------------------------------
# Identity checking.  The engine below iterates only over nonzero structure
# constant terms; the dense route through ``extend`` is kept for small cases
# and as an independent cross-check in the test-suite.
# ---------------------------------------------------------------------------

def bracket_is_skew(V: DoubleAlgebra) -> bool:
    for i in range(V.n):
        for j in range(V.n):
            if V.constants[i][j] != -(V.constants[j][i].permute((1, 2))):
                return False
    return True


def bracket_is_symmetric(V: DoubleAlgebra) -> bool:
    for i in range(V.n):
        for j in range(V.n):
            if V.constants[i][j] != V.constants[j][i].permute((1, 2)):
                return False
    return True


def _acc(d, key, value):
    cur = d.get(key)
    cur = value if cur is None else cur + value
    if cur.is_zero():
        d.pop(key, None)
    else:
        d[key] = cur


def _lie_identity_holds(V: DoubleAlgebra) -> bool:
    """{{a,{{b,c}}}}_L - {{b,{{a,c}}}}_R^(12) = {{{{a,b}},c}}_L on basis triples."""
    terms = V.nonzero_terms()
    n = V.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                diff: dict = {}
                for p, q, w1 in terms[j][k]:
                    for r, s, w2 in terms[i][p]:
                        _acc(diff, (r, s, q), w1 * w2)
                for p, q, w1 in terms[i][k]:
                    for r, s, w2 in terms[j][q]:
                        _acc(diff, (p, r, s), -(w1 * w2))
                for p, q, w1 in terms[i][j]:
                    for r, s, w2 in terms[p][k]:
                        _acc(diff, (r, q, s), -(w1 * w2))
                if diff:
                    return False
    return True


def _associative_identities_hold(V: DoubleAlgebra) -> bool:
    """{{a,{{b,c}}}}_X = {{{{a,b}},c}}_X for X in {L, R} on basis triples."""
    terms = V.nonzero_terms()
    n = V.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                diff: dict = {}
                for p, q, w1 in terms[j][k]:
                    for r, s, w2 in terms[i][p]:
                        _acc(diff, (r, s, q), w1 * w2)
                for p, q, w1 in terms[i][j]:
                    for r, s, w2 in terms[p][k]:
                        _acc(diff, (r, q, s), -(w1 * w2))
                if diff:
                    return False
                for p, q, w1 in terms[j][k]:
                    for r, s, w2 in terms[i][q]:
                        _acc(diff, (r, p, s), w1 * w2)
                for p, q, w1 in terms[i][j]:
                    for r, s, w2 in terms[q][k]:
                        _acc(diff, (p, r, s), -(w1 * w2))
                if diff:
                    return False
    return True


def classify_direct(V: DoubleAlgebra) -> ClassificationFlags:
    """Classify by checking the defining identities exactly on basis tuples."""
    skew = bracket_is_skew(V)
    symmetric = bracket_is_symmetric(V)
    lie = skew and _lie_identity_holds(V)
    associative = _associative_identities_hold(V)
    commutative = associative and symmetric
    return ClassificationFlags(
        is_skew=skew, is_symmetric=symmetric, is_lie=lie,
        is_associative=associative, is_commutative=commutative)


# ---------------------------------------------------------------------------
# Derived algebras
# ---------------------------------------------------------------------------

def commutator_algebra(V: DoubleAlgebra) -> DoubleAlgebra:
    """The bracket [[a,b]] = {{a,b}} - {{b,a}}^(12); Lie whenever V is associative."""
    grid = [[V.constants[i][j] - V.constants[j][i].permute((1, 2))
             for j in range(V.n)] for i in range(V.n)]
    name = f"{V.name}^(-)" if V.name else None
    return DoubleAlgebra(V.field, V.n, grid, name=name)


def opposite_algebra(V: DoubleAlgebra) -> DoubleAlgebra:
    """The opposite bracket {{a,b}}^op = {{a,b}}^(12)."""
    grid = [[V.constants[i][j].permute((1, 2)) for j in range(V.n)]
            for i in range(V.n)]
    name = f"{V.name}^op" if V.name else None
    return DoubleAlgebra(V.field, V.n, grid, name=name)


def dual_algebra(V: DoubleAlgebra) -> DoubleAlgebra:
    """The conjugate bracket on the dual space, i.e. the transpose of the
    bracket's n^2-by-n^2 matrix with respect to the dual bases."""
    field, n = V.field, V.n
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            coords = [V.constants[k][l][(i, j)]
                      for k in range(n) for l in range(n)]
            row.append(Tensor2(field, n, coords))
        grid.append(row)
    name = f"{V.name}*" if V.name else None
    return DoubleAlgebra(field, n, grid, name=name)


def tensor_product(V: DoubleAlgebra, U: DoubleAlgebra) -> DoubleAlgebra:
    """The double algebra on V (x) U with
    {{v1(x)u1, v2(x)u2}} = ({{v1,v2}} (x) {{u1,u2}}) permuted by (2 3).

    Basis index map: v_i (x) u_a sits at ``i*dim(U) + a``.
    """
    if V.field != U.field:
        raise FieldMismatchError("tensor product of algebras over different fields")
    field = V.field
    nv, nu = V.n, U.n
    n = nv * nu
    vterms = V.nonzero_terms()
    uterms = U.nonzero_terms()
    z = Tensor2.zero(field, n)
    grid = [[z] * n for _ in range(n)]
    for i in range(nv):
        for a in range(nu):
            for j in range(nv):
                for b in range(nu):
                    terms = []
                    for k, l, cv in vterms[i][j]:
                        for c, d, cu in uterms[a][b]:
                            terms.append((k * nu + c, l * nu + d, cv * cu))
                    if terms:
                        grid[i * nu + a][j * nu + b] = \
                            Tensor2.from_terms(field, n, terms)
    name = None
    if V.name and U.name:
        name = f"{V.name}(x){U.name}"
    return DoubleAlgebra(field, n, grid, name=name)
