"""Exact linear algebra over the scalar fields: RREF, kernels, subspaces, closures.

Everything here is pure and works on immutable values; pivoting always takes
the first nonzero entry in column order, which is safe because arithmetic is
exact.  Subspaces are held in reduced row echelon form so that equality is a
tuple comparison and enumeration never produces duplicates.
"""

from __future__ import annotations

from collections import deque

from .field import Field, FieldScalar, FieldMismatchError


class DimensionMismatchError(ValueError):
    """Raised when shapes or ambient dimensions do not line up."""


def _coerce_row(field: Field, row):
    return tuple(field.scalar(x) for x in row)


class MatrixOverField:
    """A dense rectangular matrix of FieldScalars over one field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(_coerce_row(field, r) for r in rows)
        if rows:
            width = len(rows[0])
            for r in rows:
                if len(r) != width:
                    raise DimensionMismatchError("ragged rows")
        self.field = field
        self.rows = rows

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def _check(self, other):
        if not isinstance(other, MatrixOverField):
            raise TypeError("expected MatrixOverField")
        if other.field != self.field:
            raise FieldMismatchError("matrices over different fields")

    def __add__(self, other):
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("matrix addition shape mismatch")
        return MatrixOverField(self.field, [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("matrix subtraction shape mismatch")
        return MatrixOverField(self.field, [
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return MatrixOverField(self.field, [[-a for a in r] for r in self.rows])

    def scale(self, s: FieldScalar):
        s = self.field.scalar(s)
        return MatrixOverField(self.field, [[a * s for a in r] for r in self.rows])

    def __mul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError("matrix product shape mismatch")
        zero = self.field.zero()
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            out_row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return MatrixOverField(self.field, out)

    def matvec(self, vec):
        vec = _coerce_row(self.field, vec)
        if len(vec) != self.ncols:
            raise DimensionMismatchError("matrix-vector shape mismatch")
        zero = self.field.zero()
        out = []
        for r in self.rows:
            acc = zero
            for a, x in zip(r, vec):
                if not a.is_zero() and not x.is_zero():
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def transpose(self):
        return MatrixOverField(self.field, list(zip(*self.rows)) if self.rows else [])

    def trace(self):
        acc = self.field.zero()
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def flatten(self):
        """Row-major coordinates, the shared vectorization of n-by-n matrices."""
        return tuple(x for r in self.rows for x in r)

    @classmethod
    def from_flat(cls, field, n, coords):
        coords = _coerce_row(field, coords)
        if len(coords) != n * n:
            raise DimensionMismatchError("flat vector has wrong length")
        return cls(field, [coords[i * n:(i + 1) * n] for i in range(n)])

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, MatrixOverField):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"MatrixOverField({self.field.tag}, {body})"


def _rref_rows(field: Field, rows):
    """In-place style RREF on a list of row tuples; returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows], pivots


def rref(m: MatrixOverField):
    """Reduced row echelon form with leading-one pivots; returns (matrix, rank)."""
    rows, pivots = _rref_rows(m.field, m.rows)
    return MatrixOverField(m.field, rows), len(pivots)


def kernel_basis(m: MatrixOverField) -> "Subspace":
    """Basis of the right kernel {v : m v = 0} as a subspace of F^ncols."""
    rows, pivots = _rref_rows(m.field, m.rows)
    ncols = m.ncols
    zero, one = m.field.zero(), m.field.one()
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][free]
        basis.append(tuple(vec))
    return Subspace.from_vectors(m.field, ncols, basis)


def _reduce_against(rows, pivots, vec):
    """Reduce vec by RREF rows; returns the remainder."""
    vec = list(vec)
    for row, pc in zip(rows, pivots):
        coef = vec[pc]
        if not coef.is_zero():
            vec = [x - coef * y for x, y in zip(vec, row)]
    return tuple(vec)


class Subspace:
    """A subspace of F^n held as nonzero RREF basis rows.

    Two subspaces are equal exactly when their RREF bases coincide.
    """

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field: Field, ambient: int, rows, pivots):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        vectors = [_coerce_row(field, v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatchError("vector length differs from ambient")
        rows, pivots = _rref_rows(field, vectors)
        rows = rows[:len(pivots)]
        return cls(field, ambient, rows, pivots)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field, ambient):
        eye = MatrixOverField.identity(field, ambient)
        return cls(field, ambient, eye.rows, tuple(range(ambient)))

    @property
    def dim(self):
        return len(self.rows)

    def is_zero(self):
        return not self.rows

    def is_full(self):
        return self.dim == self.ambient

    def is_proper_nonzero(self):
        return 0 < self.dim < self.ambient

    def basis(self):
        return self.rows

    def _check(self, other):
        if not isinstance(other, Subspace):
            raise TypeError("expected Subspace")
        if other.field != self.field:
            raise FieldMismatchError("subspaces over different fields")
        if other.ambient != self.ambient:
            raise DimensionMismatchError("ambient dimensions differ")

    def contains_vector(self, vec) -> bool:
        vec = _coerce_row(self.field, vec)
        if len(vec) != self.ambient:
            raise DimensionMismatchError("vector length differs from ambient")
        rem = _reduce_against(self.rows, self.pivots, vec)
        return all(x.is_zero() for x in rem)

    def contains_subspace(self, other) -> bool:
        self._check(other)
        return all(self.contains_vector(v) for v in other.rows)

    def sum(self, other) -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(
            self.field, self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other) -> "Subspace":
        """Exact intersection via the kernel of stacked coordinate constraints."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient)
        # solve y^T A = z^T B: kernel of the ambient-by-(dimA+dimB) matrix [A^T | -B^T]
        a_rows, b_rows = self.rows, other.rows
        stacked = []
        for i in range(self.ambient):
            stacked.append(tuple(r[i] for r in a_rows) +
                           tuple(-r[i] for r in b_rows))
        ker = kernel_basis(MatrixOverField(self.field, stacked))
        vectors = []
        zero = self.field.zero()
        for sol in ker.rows:
            vec = [zero] * self.ambient
            for coef, row in zip(sol[:len(a_rows)], a_rows):
                if not coef.is_zero():
                    vec = [x + coef * y for x, y in zip(vec, row)]
            vectors.append(tuple(vec))
        return Subspace.from_vectors(self.field, self.ambient, vectors)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.ambient, self.rows))

    def __repr__(self):
        body = "; ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self.rows)
        return f"Subspace({self.field.tag}, dim {self.dim} of F^{self.ambient}: {body})"


def cyclic_closure(field: Field, ambient: int, seeds, ops) -> Subspace:
    """Smallest subspace containing ``seeds`` and invariant under every operator.

    Saturation is breadth-first over (vector, operator) pairs, so the result
    and the intermediate basis order are deterministic.
    """
    for op in ops:
        if op.field != field:
            raise FieldMismatchError("operator over a different field")
        if op.nrows != ambient or op.ncols != ambient:
            raise DimensionMismatchError("operator does not act on the ambient space")
    space = Subspace.zero(field, ambient)
    queue = deque()
    for s in seeds:
        s = _coerce_row(field, s)
        if not space.contains_vector(s):
            space = space.sum(Subspace.from_vectors(field, ambient, [s]))
            queue.append(s)
    while queue:
        vec = queue.popleft()
        for op in ops:
            image = op.matvec(vec)
            if not space.contains_vector(image):
                space = space.sum(Subspace.from_vectors(field, ambient, [image]))
                queue.append(image)
    return space
