"""The trace form on End V, conjugate operators, and the correspondence between
double brackets on V and linear operators on End V.

End V is coordinatized by matrix units e_pq (row-major index p*n + q), which
are their own trace-dual family up to the index swap: <e_pq, e_rs> = [q=r][p=s],
so e_pq* = e_qp.  An operator R : End V -> End V is stored as its n^2-by-n^2
matrix in that basis.  The correspondence used throughout is

    {{a, b}} = sum_i e_i(a) (x) R(e_i*)(b) = sum_i R*(e_i)(a) (x) e_i*(b),

which in matrix-unit coordinates reads ``c[i][j][k,l] = R[l*n+j, i*n+k]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ClassificationFlags, DoubleAlgebra
from .field import Field, FieldScalar, FieldMismatchError
from .linalg import DimensionMismatchError, MatrixOverField, Subspace
from .tensors import Tensor2


def trace_form(x: MatrixOverField, y: MatrixOverField) -> FieldScalar:
    """The invariant pairing <x, y> = tr(x y) on n-by-n matrices."""
    if x.field != y.field:
        raise FieldMismatchError("matrices over different fields")
    if x.nrows != x.ncols or y.nrows != y.ncols or x.nrows != y.nrows:
        raise DimensionMismatchError("trace form needs two square matrices of one size")
    acc = x.field.zero()
    for i in range(x.nrows):
        for k in range(x.ncols):
            a = x.rows[i][k]
            b = y.rows[k][i]
            if not a.is_zero() and not b.is_zero():
                acc = acc + a * b
    return acc


def matrix_unit(field: Field, n: int, p: int, q: int) -> MatrixOverField:
    zero, one = field.zero(), field.one()
    return MatrixOverField(field, [[one if (i, j) == (p, q) else zero
                                    for j in range(n)] for i in range(n)])


def matrix_units(field: Field, n: int):
    return [matrix_unit(field, n, p, q) for p in range(n) for q in range(n)]


def dual_basis(basis) -> list:
    """Trace-dual family b_j* with <b_i, b_j*> = delta_ij.

    Raises ValueError when the given matrices are linearly dependent.
    """
    if not basis:
        raise ValueError("empty basis")
    field = basis[0].field
    m = len(basis)
    gram = MatrixOverField(field, [[trace_form(basis[i], basis[j])
                                    for j in range(m)] for i in range(m)])
    # invert the Gram matrix by row reduction of [gram | I]
    from .linalg import _rref_rows
    eye = MatrixOverField.identity(field, m)
    augmented = [tuple(gram.rows[i]) + tuple(eye.rows[i]) for i in range(m)]
    reduced, pivots = _rref_rows(field, augmented)
    if len(pivots) != m or pivots != list(range(m)):
        raise ValueError("matrices are linearly dependent (singular Gram matrix)")
    inverse_rows = [r[m:] for r in reduced]
    out = []
    for j in range(m):
        acc = MatrixOverField.zeros(field, basis[0].nrows, basis[0].ncols)
        for k in range(m):
            coef = inverse_rows[j][k]
            if not coef.is_zero():
                acc = acc + basis[k].scale(coef)
        out.append(acc)
    return out


class EndOperator:
    """A linear map R : End V -> End V as an n^2-by-n^2 matrix over F."""

    __slots__ = ("field", "n", "matrix")

    def __init__(self, field: Field, n: int, matrix: MatrixOverField):
        if matrix.field != field:
            raise FieldMismatchError("matrix over a different field")
        if matrix.nrows != n * n or matrix.ncols != n * n:
            raise DimensionMismatchError("operator matrix must be n^2 by n^2")
        self.field = field
        self.n = n
        self.matrix = matrix

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, MatrixOverField.zeros(field, n * n, n * n))

    @classmethod
    def identity(cls, field, n, scale=None):
        m = MatrixOverField.identity(field, n * n)
        if scale is not None:
            m = m.scale(field.scalar(scale))
        return cls(field, n, m)

    @classmethod
    def from_rows(cls, field, n, rows):
        return cls(field, n, MatrixOverField(field, rows))

    @classmethod
    def from_action(cls, field, n, action):
        """Build from a callable sending an n-by-n MatrixOverField to another."""
        cols = []
        for p in range(n):
            for q in range(n):
                image = action(matrix_unit(field, n, p, q))
                cols.append(image.flatten())
        rows = [tuple(col[r] for col in cols) for r in range(n * n)]
        return cls(field, n, MatrixOverField(field, rows))

    @classmethod
    def random(cls, field, n, rng):
        rows = [[field.random_scalar(rng) for _ in range(n * n)]
                for _ in range(n * n)]
        return cls(field, n, MatrixOverField(field, rows))

    def apply(self, x: MatrixOverField) -> MatrixOverField:
        if x.nrows != self.n or x.ncols != self.n:
            raise DimensionMismatchError("operator applied to a matrix of wrong size")
        return MatrixOverField.from_flat(
            self.field, self.n, self.matrix.matvec(x.flatten()))

    def image_of_unit(self, p: int, q: int) -> MatrixOverField:
        return MatrixOverField.from_flat(
            self.field, self.n, self.matrix.column(p * self.n + q))

    def compose(self, other: "EndOperator") -> "EndOperator":
        return EndOperator(self.field, self.n, self.matrix * other.matrix)

    def __add__(self, other):
        return EndOperator(self.field, self.n, self.matrix + other.matrix)

    def __sub__(self, other):
        return EndOperator(self.field, self.n, self.matrix - other.matrix)

    def __neg__(self):
        return EndOperator(self.field, self.n, -self.matrix)

    def scale(self, s):
        return EndOperator(self.field, self.n, self.matrix.scale(s))

    def is_zero(self):
        return self.matrix.is_zero()

    def image_subspace(self) -> Subspace:
        """Column span of the operator matrix, in the n^2 vectorization."""
        return Subspace.from_vectors(
            self.field, self.n * self.n,
            [self.matrix.column(j) for j in range(self.n * self.n)])

    def kernel_subspace(self) -> Subspace:
        from .linalg import kernel_basis
        return kernel_basis(self.matrix)

    def __eq__(self, other):
        if not isinstance(other, EndOperator):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.field, self.n, self.matrix))

    def __repr__(self):
        return f"EndOperator(n={self.n}, {self.field.tag})"


def conjugate(R: EndOperator) -> EndOperator:
    """The unique R* with <R(x), y> = <x, R*(y)> for the trace form.

    In matrix-unit coordinates: R*[(a,b),(c,d)] = R[(d,c),(b,a)].
    """
    n = R.n
    rows = []
    for a in range(n):
        for b in range(n):
            row = []
            for c in range(n):
                for d in range(n):
                    row.append(R.matrix.rows[d * n + c][b * n + a])
            rows.append(row)
    return EndOperator(R.field, n, MatrixOverField(R.field, rows))


def bracket_from_operator(R: EndOperator, name: str | None = None) -> DoubleAlgebra:
    """The double algebra whose bracket is induced by R.

    Both closed forms of the correspondence (through R and through R*) are
    evaluated and must agree; a mismatch would mean a conjugation bug.
    """
    field, n = R.field, R.n
    RS = conjugate(R)
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            coords = []
            check = []
            for k in range(n):
                for l in range(n):
                    coords.append(R.matrix.rows[l * n + j][i * n + k])
                    check.append(RS.matrix.rows[k * n + i][j * n + l])
            if coords != check:
                raise RuntimeError(
                    "the two closed forms of the bracket disagree; "
                    "conjugate() is inconsistent with the index conventions")
            row.append(Tensor2(field, n, coords))
        grid.append(row)
    return DoubleAlgebra(field, n, grid, name=name)


def operator_from_bracket(V: DoubleAlgebra) -> EndOperator:
    """The inverse of ``bracket_from_operator``: R[l*n+j, i*n+k] = c[i][j][k,l]."""
    field, n = V.field, V.n
    rows = [[None] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            t = V.constants[i][j]
            for k in range(n):
                for l in range(n):
                    rows[l * n + j][i * n + k] = t[(k, l)]
    return EndOperator(field, n, MatrixOverField(field, rows))


@dataclass(frozen=True)
class IdentityReport:
    """Exact verdicts of the operator identities, checked on all pairs of
    matrix units (complete, since every identity is bilinear).

    ``left_avg``:        R(x)R(y) = R(R(x)y)
    ``left_avg_mixed``:  R*(x)R(y) = R*(xR(y))
    ``left_avg_conj``:   R*(R(x)y) = R*(xR*(y))
    ``dual_left_avg``:   R*(x)R*(y) = R*(R*(x)y)
    ``dual_left_avg_mixed``: R(x)R*(y) = R(xR*(y))
    ``dual_left_avg_conj``:  R(R*(x)y) = R(xR(y))
    ``rota_baxter``:     R(x)R(y) = R(R(x)y) + R(xR(y))
    ``averaging``:       R(x)R(y) = R(R(x)y) and R(R(x)y) = R(xR(y))
    """

    left_avg: bool
    left_avg_mixed: bool
    left_avg_conj: bool
    dual_left_avg: bool
    dual_left_avg_mixed: bool
    dual_left_avg_conj: bool
    skew: bool
    symmetric: bool
    rota_baxter: bool
    averaging: bool

    def left_triple_consistent(self) -> bool:
        return self.left_avg == self.left_avg_mixed == self.left_avg_conj

    def dual_triple_consistent(self) -> bool:
        return (self.dual_left_avg == self.dual_left_avg_mixed
                == self.dual_left_avg_conj)

    def as_dict(self) -> dict:
        return {
            "left_avg": self.left_avg,
            "left_avg_mixed": self.left_avg_mixed,
            "left_avg_conj": self.left_avg_conj,
            "dual_left_avg": self.dual_left_avg,
            "dual_left_avg_mixed": self.dual_left_avg_mixed,
            "dual_left_avg_conj": self.dual_left_avg_conj,
            "skew": self.skew,
            "symmetric": self.symmetric,
            "rota_baxter": self.rota_baxter,
            "averaging": self.averaging,
        }


def check_identities(R: EndOperator) -> IdentityReport:
    """Evaluate every operator identity exactly over all matrix-unit pairs."""
    field, n = R.field, R.n
    RS = conjugate(R)
    units = matrix_units(field, n)
    r_img = [R.apply(u) for u in units]
    rs_img = [RS.apply(u) for u in units]

    left_avg = left_avg_mixed = left_avg_conj = True
    dual_left_avg = dual_left_avg_mixed = dual_left_avg_conj = True
    rota_baxter = averaging = True

    for ix, x in enumerate(units):
        rx, rsx = r_img[ix], rs_img[ix]
        for iy, y in enumerate(units):
            ry, rsy = r_img[iy], rs_img[iy]
            r_rx_y = R.apply(rx * y)
            r_x_ry = R.apply(x * ry)
            if left_avg and rx * ry != r_rx_y:
                left_avg = False
            if left_avg_mixed and rsx * ry != RS.apply(x * ry):
                left_avg_mixed = False
            if left_avg_conj and RS.apply(rx * y) != RS.apply(x * rsy):
                left_avg_conj = False
            if dual_left_avg and rsx * rsy != RS.apply(rsx * y):
                dual_left_avg = False
            if dual_left_avg_mixed and rx * rsy != R.apply(x * rsy):
                dual_left_avg_mixed = False
            if dual_left_avg_conj and R.apply(rsx * y) != r_x_ry:
                dual_left_avg_conj = False
            if rota_baxter and rx * ry != r_rx_y + r_x_ry:
                rota_baxter = False
            if averaging and (rx * ry != r_rx_y or r_rx_y != r_x_ry):
                averaging = False

    skew = RS == -R
    symmetric = RS == R
    return IdentityReport(
        left_avg=left_avg, left_avg_mixed=left_avg_mixed,
        left_avg_conj=left_avg_conj, dual_left_avg=dual_left_avg,
        dual_left_avg_mixed=dual_left_avg_mixed,
        dual_left_avg_conj=dual_left_avg_conj,
        skew=skew, symmetric=symmetric,
        rota_baxter=rota_baxter, averaging=averaging)


def classify_operator(R: EndOperator) -> ClassificationFlags:
    """Flags of the induced double algebra, read off the operator identities:
    Lie <=> skew + Rota-Baxter; associative <=> R and R* both left averaging;
    commutative <=> symmetric + averaging."""
    rep = check_identities(R)
    return ClassificationFlags(
        is_skew=rep.skew,
        is_symmetric=rep.symmetric,
        is_lie=rep.skew and rep.rota_baxter,
        is_associative=rep.left_avg and rep.dual_left_avg,
        is_commutative=rep.symmetric and rep.averaging)


def averaging_difference(T: EndOperator) -> EndOperator:
    """T - T*; a skew Rota-Baxter operator whenever T and T* are left averaging."""
    return T - conjugate(T)
