"""Coordinatized tensor squares and cubes of F^n, factor permutations, sleeves.

Index maps are row-major and fixed once for the whole package:
``e_k (x) e_l`` sits at ``k*n + l`` and ``e_k (x) e_l (x) e_m`` at
``(k*n + l)*n + m`` (all zero-based internally).  Permutations of tensor
factors are given as a single cycle of one-based positions, e.g. ``(1, 2)``
swaps the first two factors; the empty cycle is the identity.
"""

from __future__ import annotations

from .field import Field, FieldScalar, FieldMismatchError
from .linalg import DimensionMismatchError, Subspace, _coerce_row


def _cycle_to_map(cycle, arity: int):
    """One-based cycle -> zero-based position map sigma (position i goes to sigma[i])."""
    sigma = list(range(arity))
    if not cycle:
        return sigma
    seen = set()
    for pos in cycle:
        if not 1 <= pos <= arity:
            raise ValueError(f"cycle position {pos} outside 1..{arity}")
        if pos in seen:
            raise ValueError("repeated position in cycle")
        seen.add(pos)
    for i, pos in enumerate(cycle):
        nxt = cycle[(i + 1) % len(cycle)]
        sigma[pos - 1] = nxt - 1
    return sigma


class _Tensor:
    __slots__ = ("field", "n", "coords")

    arity = 0

    def __init__(self, field: Field, n: int, coords):
        coords = _coerce_row(field, coords)
        if len(coords) != n ** self.arity:
            raise DimensionMismatchError(
                f"expected {n ** self.arity} coordinates, got {len(coords)}")
        self.field = field
        self.n = n
        self.coords = coords

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, [field.zero()] * (n ** cls.arity))

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"expected {type(self).__name__}")
        if other.field != self.field:
            raise FieldMismatchError("tensors over different fields")
        if other.n != self.n:
            raise DimensionMismatchError("tensors of different dimension")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.field, self.n,
                          [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.field, self.n,
                          [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return type(self)(self.field, self.n, [-a for a in self.coords])

    def scale(self, s: FieldScalar):
        s = self.field.scalar(s)
        return type(self)(self.field, self.n, [a * s for a in self.coords])

    def is_zero(self):
        return all(a.is_zero() for a in self.coords)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.coords == other.coords)

    def __hash__(self):
        return hash((type(self).__name__, self.field, self.n, self.coords))


class Tensor2(_Tensor):
    """An element of F^n (x) F^n with row-major coordinates."""

    arity = 2

    @classmethod
    def basis_elem(cls, field, n, k, l):
        coords = [field.zero()] * (n * n)
        coords[k * n + l] = field.one()
        return cls(field, n, coords)

    @classmethod
    def from_terms(cls, field, n, terms):
        """Build from an iterable of ``(k, l, coefficient)`` triples (zero-based)."""
        coords = [field.zero()] * (n * n)
        for k, l, c in terms:
            coords[k * n + l] = coords[k * n + l] + field.scalar(c)
        return cls(field, n, coords)

    def __getitem__(self, kl):
        k, l = kl
        return self.coords[k * self.n + l]

    def nonzero_terms(self):
        n = self.n
        return [(i // n, i % n, c) for i, c in enumerate(self.coords)
                if not c.is_zero()]

    def permute(self, cycle) -> "Tensor2":
        sigma = _cycle_to_map(cycle, 2)
        if sigma == [0, 1]:
            return self
        n = self.n
        coords = [self.field.zero()] * (n * n)
        for k in range(n):
            for l in range(n):
                # the factor at position sigma(i) of the result is factor i here
                coords[k * n + l] = self.coords[l * n + k]
        return Tensor2(self.field, n, coords)

    def __repr__(self):
        return f"Tensor2({self.field.tag}, n={self.n}, {format_tensor2(self)})"


class Tensor3(_Tensor):
    """An element of F^n (x) F^n (x) F^n with row-major coordinates."""

    arity = 3

    @classmethod
    def basis_elem(cls, field, n, k, l, m):
        coords = [field.zero()] * (n ** 3)
        coords[(k * n + l) * n + m] = field.one()
        return cls(field, n, coords)

    @classmethod
    def from_terms(cls, field, n, terms):
        coords = [field.zero()] * (n ** 3)
        for k, l, m, c in terms:
            idx = (k * n + l) * n + m
            coords[idx] = coords[idx] + field.scalar(c)
        return cls(field, n, coords)

    def __getitem__(self, klm):
        k, l, m = klm
        return self.coords[(k * self.n + l) * self.n + m]

    def nonzero_terms(self):
        n = self.n
        out = []
        for i, c in enumerate(self.coords):
            if not c.is_zero():
                out.append((i // (n * n), (i // n) % n, i % n, c))
        return out

    def permute(self, cycle) -> "Tensor3":
        sigma = _cycle_to_map(cycle, 3)
        if sigma == [0, 1, 2]:
            return self
        n = self.n
        coords = [self.field.zero()] * (n ** 3)
        for j1 in range(n):
            for j2 in range(n):
                for j3 in range(n):
                    j = (j1, j2, j3)
                    src = (j[sigma[0]], j[sigma[1]], j[sigma[2]])
                    coords[(j1 * n + j2) * n + j3] = \
                        self.coords[(src[0] * n + src[1]) * n + src[2]]
        return Tensor3(self.field, n, coords)

    def __repr__(self):
        terms = self.nonzero_terms()
        body = " + ".join(f"({c})*e{k+1}(x)e{l+1}(x)e{m+1}" for k, l, m, c in terms)
        return f"Tensor3({self.field.tag}, n={self.n}, {body or '0'})"


def tensor2_of_vectors(field, u, v) -> Tensor2:
    """The pure tensor u (x) v of two coordinate vectors."""
    u = _coerce_row(field, u)
    v = _coerce_row(field, v)
    if len(u) != len(v):
        raise DimensionMismatchError("factors of different dimension")
    coords = [a * b for a in u for b in v]
    return Tensor2(field, len(u), coords)


def sleeve(ideal_candidate: Subspace) -> Subspace:
    """The subspace I (x) V + V (x) I of V (x) V, in Tensor2 coordinates.

    This is the right-hand side of the ideal condition for double algebras:
    a subspace I is an ideal when all brackets against I land here.
    """
    field = ideal_candidate.field
    n = ideal_candidate.ambient
    zero = field.zero()
    generators = []
    for u in ideal_candidate.basis():
        for j in range(n):
            left = [zero] * (n * n)   # u (x) e_j
            right = [zero] * (n * n)  # e_j (x) u
            for k in range(n):
                if not u[k].is_zero():
                    left[k * n + j] = u[k]
                    right[j * n + k] = u[k]
            generators.append(tuple(left))
            generators.append(tuple(right))
    return Subspace.from_vectors(field, n * n, generators)


def format_tensor2(t: Tensor2) -> str:
    """Canonical text form: ``c * e_k (x) e_l`` terms joined by signs, 1-based."""
    field = t.field
    terms = t.nonzero_terms()
    if not terms:
        return "0"
    is_negative = getattr(field, "is_negative", lambda s: False)
    pieces = []
    for k, l, c in terms:
        if is_negative(c):
            sign, mag = "-", -c
        else:
            sign, mag = "+", c
        pieces.append((sign, f"{field.format(mag)} * e{k + 1} (x) e{l + 1}"))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TENSOR_TERM_RE = None


def parse_tensor2(field: Field, n: int, text: str) -> Tensor2:
    """Parse the canonical Tensor2 text form (scalars in the field's syntax)."""
    import re
    global _TENSOR_TERM_RE
    if _TENSOR_TERM_RE is None:
        _TENSOR_TERM_RE = re.compile(
            r"^(?:(?P<scalar>.+?)\s*\*\s*)?e(?P<k>\d+)\s*\(x\)\s*e(?P<l>\d+)$")
    text = text.strip()
    if text == "0":
        return Tensor2.zero(field, n)
    # split into signed terms at parenthesis depth zero
    pieces = []
    depth = 0
    current = []
    sign = 1
    i = 0
    if text.startswith("-"):
        sign = -1
        i = 1
    elif text.startswith("+"):
        i = 1
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and i + 1 < len(text) \
                and text[i - 1] == " " and text[i + 1] == " ":
            pieces.append((sign, "".join(current).strip()))
            current = []
            sign = 1 if ch == "+" else -1
            i += 1
        else:
            current.append(ch)
        i += 1
    pieces.append((sign, "".join(current).strip()))

    total = Tensor2.zero(field, n)
    for sgn, piece in pieces:
        m = _TENSOR_TERM_RE.match(piece)
        if not m:
            raise ValueError(f"cannot parse tensor term {piece!r}")
        k, l = int(m.group("k")), int(m.group("l"))
        if not (1 <= k <= n and 1 <= l <= n):
            raise ValueError(f"tensor index out of range in {piece!r}")
        scalar = field.parse(m.group("scalar")) if m.group("scalar") else field.one()
        if sgn < 0:
            scalar = -scalar
        total = total + Tensor2.from_terms(field, n, [(k - 1, l - 1, scalar)])
    return total
