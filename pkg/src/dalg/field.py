"""Exact scalar arithmetic: rationals, prime fields GF(p), rational function fields GF(p)(t).

Every scalar is kept in a canonical form, so equality of scalars is a plain
payload comparison and all arithmetic is exact:

* rationals are reduced fractions with positive denominator,
* GF(p) elements are residues in [0, p),
* GF(p)(t) elements are fractions of polynomials over GF(p) with monic
  denominator and coprime numerator/denominator.

Scalars are immutable and safe to share between threads or worker processes.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache


class FieldMismatchError(ValueError):
    """Raised when scalars from different fields are combined."""


class RootSearchCapError(RuntimeError):
    """Raised when root finding would exceed its factorization caps."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# GF(p)[t] helpers on integer coefficient tuples, lowest degree first.
# The zero polynomial is the empty tuple.
# ---------------------------------------------------------------------------

def _pstrip(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _pdeg(a):
    return len(a) - 1


def _padd(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _pstrip(out)


def _pneg(a, p):
    return tuple((-c) % p for c in a)


def _psub(a, b, p):
    return _padd(a, _pneg(b, p), p)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    return _pstrip(out)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        coef = (a[-1] * inv_lead) % p
        q[shift] = coef
        for i, cb in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * cb) % p
    return _pstrip(q), _pstrip(a)


def _pmonic(a, p):
    if not a:
        return ()
    inv = pow(a[-1], p - 2, p)
    return tuple((c * inv) % p for c in a)


def _pgcd(a, b, p):
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return _pmonic(a, p)


def _pfmt(a) -> str:
    """Human form of a GF(p)[t] tuple, highest degree first, e.g. ``t^2+2t+1``."""
    if not a:
        return "0"
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        if d == 0:
            parts.append(str(c))
        elif d == 1:
            parts.append("t" if c == 1 else f"{c}t")
        else:
            parts.append(f"t^{d}" if c == 1 else f"{c}t^{d}")
    return "+".join(parts)


_POLY_TERM_RE = re.compile(r"^(\d+)?\s*\*?\s*(t(?:\^(\d+))?)?$")


def _pparse(text: str, p: int):
    """Parse ``t^2+2t+1`` style text into a coefficient tuple over GF(p)."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    if text == "0":
        return ()
    # normalize a-b into a+(p-1)b term handling: split keeping signs
    chunks = re.split(r"(?=[+-])", text)
    coeffs: dict[int, int] = {}
    for chunk in chunks:
        if not chunk:
            continue
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        m = _POLY_TERM_RE.match(chunk)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        coef = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            deg = 0
        elif m.group(3) is not None:
            deg = int(m.group(3))
        else:
            deg = 1
        coeffs[deg] = (coeffs.get(deg, 0) + sign * coef) % p
    if not coeffs:
        return ()
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return _pstrip(out)


def _pfactor(a, p, degree_cap: int):
    """Factor a nonzero GF(p)[t] polynomial into monic irreducibles by trial division.

    Returns a dict {irreducible tuple: multiplicity}.  Degrees above
    ``degree_cap`` are refused so that failure is explicit, not silent.
    """
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    if _pdeg(a) > degree_cap:
        raise RootSearchCapError(
            f"degree {_pdeg(a)} exceeds factorization cap {degree_cap}")
    a = _pmonic(a, p)
    factors: dict[tuple, int] = {}
    deg = 1
    while _pdeg(a) > 0:
        if 2 * deg > _pdeg(a):
            factors[a] = factors.get(a, 0) + 1
            break
        found = False
        # monic polynomials of this degree, lexicographic in low coefficients
        for mask in range(p ** deg):
            cs = []
            m = mask
            for _ in range(deg):
                cs.append(m % p)
                m //= p
            cand = tuple(cs) + (1,)
            q, r = _pdivmod(a, cand, p)
            if not r:
                factors[cand] = factors.get(cand, 0) + 1
                a = q
                found = True
                break
        if not found:
            deg += 1
    return factors


def _pdivisors(a, p, degree_cap: int):
    """All monic divisors of a nonzero GF(p)[t] polynomial."""
    divisors = [(1,)]
    for irred, mult in _pfactor(a, p, degree_cap).items():
        power = (1,)
        powers = [(1,)]
        for _ in range(mult):
            power = _pmul(power, irred, p)
            powers.append(power)
        divisors = [_pmul(d, q, p) for d in divisors for q in powers]
    return divisors


# ---------------------------------------------------------------------------
# Scalars and fields
# ---------------------------------------------------------------------------

class FieldScalar:
    """An exact element of one of the supported fields, in canonical form."""

    __slots__ = ("field", "payload")

    def __init__(self, field: "Field", payload):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    def _check(self, other) -> "FieldScalar":
        if not isinstance(other, FieldScalar):
            raise TypeError(f"expected FieldScalar, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot mix scalars from {self.field.tag} and {other.field.tag}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldScalar(self.field, self.field._add(self.payload, other.payload))

    def __sub__(self, other):
        other = self._check(other)
        return FieldScalar(
            self.field, self.field._add(self.payload, self.field._neg(other.payload)))

    def __neg__(self):
        return FieldScalar(self.field, self.field._neg(self.payload))

    def __mul__(self, other):
        other = self._check(other)
        return FieldScalar(self.field, self.field._mul(self.payload, other.payload))

    def __truediv__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return FieldScalar(
            self.field, self.field._mul(self.payload, self.field._inv(other.payload)))

    def inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise ZeroDivisionError("zero scalar has no inverse")
        return FieldScalar(self.field, self.field._inv(self.payload))

    def __pow__(self, k: int) -> "FieldScalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return self.field._is_zero(self.payload)

    def is_one(self) -> bool:
        return self.payload == self.field.one().payload

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, FieldScalar):
            return NotImplemented
        return self.field == other.field and self.payload == other.payload

    def __hash__(self):
        return hash((self.field, self.payload))

    def __repr__(self):
        return f"<{self.field.tag}: {self.field.format(self)}>"

    def __str__(self):
        return self.field.format(self)


class Field:
    """Base class: a field knows how to canonicalize, compute, parse and format."""

    tag: str = "?"

    def characteristic(self) -> int:
        raise NotImplementedError

    def is_finite(self) -> bool:
        raise NotImplementedError

    def elements(self):
        raise NotImplementedError(f"{self.tag} is not finite")

    def order(self) -> int:
        raise NotImplementedError(f"{self.tag} is not finite")

    def zero(self) -> FieldScalar:
        return self.scalar(0)

    def one(self) -> FieldScalar:
        return self.scalar(1)

    def scalar(self, value) -> FieldScalar:
        """Coerce ``value`` (int, payload, str, or FieldScalar) into this field."""
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatchError(
                    f"scalar of {value.field.tag} given to {self.tag}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return FieldScalar(self, self._canon(value))

    def parse(self, text: str) -> FieldScalar:
        raise NotImplementedError

    def format(self, s: FieldScalar) -> str:
        raise NotImplementedError

    def random_scalar(self, rng) -> FieldScalar:
        raise NotImplementedError

    # payload-level primitives supplied by subclasses
    def _canon(self, raw):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError


class RationalField(Field):
    """The rational numbers with arbitrary-precision ``Fraction`` payloads."""

    tag = "Q"

    def characteristic(self):
        return 0

    def is_finite(self):
        return False

    def _canon(self, raw):
        if isinstance(raw, Fraction):
            return raw
        if isinstance(raw, int):
            return Fraction(raw)
        raise TypeError(f"cannot make a rational from {type(raw).__name__}")

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def parse(self, text):
        return FieldScalar(self, Fraction(text.strip()))

    def format(self, s):
        return str(s.payload)

    def is_negative(self, s: FieldScalar) -> bool:
        return s.payload < 0

    def random_scalar(self, rng):
        return self.scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()

_GFP_RE = re.compile(r"^\s*(-?\d+)\s*mod\s*(\d+)\s*$")


class PrimeField(Field):
    """GF(p) for prime p; payloads are residues in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime; only prime fields are supported")
        self.p = p
        self.tag = f"GF({p})"

    def characteristic(self):
        return self.p

    def is_finite(self):
        return True

    def order(self):
        return self.p

    def elements(self):
        for a in range(self.p):
            yield FieldScalar(self, a)

    def _canon(self, raw):
        if isinstance(raw, int):
            return raw % self.p
        raise TypeError(f"cannot make a GF({self.p}) element from {type(raw).__name__}")

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        return pow(a, self.p - 2, self.p)

    def _is_zero(self, a):
        return a == 0

    def parse(self, text):
        m = _GFP_RE.match(text)
        if m:
            if int(m.group(2)) != self.p:
                raise FieldMismatchError(
                    f"modulus {m.group(2)} does not match {self.tag}")
            return self.scalar(int(m.group(1)))
        return self.scalar(int(text.strip()))

    def format(self, s):
        return f"{s.payload} mod {self.p}"

    def is_negative(self, s):
        return False

    def random_scalar(self, rng):
        return self.scalar(rng.randrange(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


class RationalFunctionField(Field):
    """GF(p)(t): fractions of GF(p)[t] polynomials with monic denominator.

    Payloads are pairs ``(num, den)`` of coefficient tuples with
    ``gcd(num, den) = 1`` and ``den`` monic; zero is ``((), (1,))``.
    """

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime; only prime fields are supported")
        self.p = p
        self.tag = f"GF({p})(t)"

    def characteristic(self):
        return self.p

    def is_finite(self):
        return False

    def t(self) -> FieldScalar:
        return FieldScalar(self, ((0, 1), (1,)))

    def from_poly(self, coeffs) -> FieldScalar:
        """Scalar from integer polynomial coefficients, lowest degree first."""
        return FieldScalar(self, self._canon((tuple(coeffs), (1,))))

    def _canon(self, raw):
        if isinstance(raw, int):
            num = _pstrip(((raw % self.p),))
            return (num, (1,))
        if isinstance(raw, tuple) and len(raw) == 2:
            num = _pstrip(tuple(c % self.p for c in raw[0]))
            den = _pstrip(tuple(c % self.p for c in raw[1]))
            if not den:
                raise ZeroDivisionError("zero denominator")
            g = _pgcd(num, den, self.p)
            if _pdeg(g) > 0:
                num = _pdivmod(num, g, self.p)[0]
                den = _pdivmod(den, g, self.p)[0]
            if den[-1] != 1:
                inv = pow(den[-1], self.p - 2, self.p)
                num = tuple((c * inv) % self.p for c in num)
                den = tuple((c * inv) % self.p for c in den)
            if not num:
                den = (1,)
            return (num, den)
        raise TypeError(
            f"cannot make a {self.tag} element from {type(raw).__name__}")

    def _add(self, a, b):
        num = _padd(_pmul(a[0], b[1], self.p), _pmul(b[0], a[1], self.p), self.p)
        return self._canon((num, _pmul(a[1], b[1], self.p)))

    def _neg(self, a):
        return (_pneg(a[0], self.p), a[1])

    def _mul(self, a, b):
        return self._canon((_pmul(a[0], b[0], self.p), _pmul(a[1], b[1], self.p)))

    def _inv(self, a):
        return self._canon((a[1], a[0]))

    def _is_zero(self, a):
        return not a[0]

    def parse(self, text):
        text = text.strip()
        m = re.match(r"^\((?P<num>[^()]*)\)\s*/\s*\((?P<den>[^()]*)\)$", text)
        if m:
            num = _pparse(m.group("num"), self.p)
            den = _pparse(m.group("den"), self.p)
            return FieldScalar(self, self._canon((num, den)))
        if text.startswith("(") and text.endswith(")"):
            return self.parse(text[1:-1])
        if "/" in text:
            num_text, den_text = text.split("/", 1)
            num = _pparse(num_text, self.p)
            den = _pparse(den_text, self.p)
            return FieldScalar(self, self._canon((num, den)))
        return FieldScalar(self, self._canon((_pparse(text, self.p), (1,))))

    def format(self, s):
        num, den = s.payload
        return f"({_pfmt(num)})/({_pfmt(den)})"

    def is_negative(self, s):
        return False

    def random_scalar(self, rng):
        num = tuple(rng.randrange(self.p) for _ in range(rng.randint(1, 3)))
        den = tuple(rng.randrange(self.p) for _ in range(rng.randint(0, 2))) + (1,)
        return FieldScalar(self, self._canon((num, den)))

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.p == self.p

    def __hash__(self):
        return hash(("GFt", self.p))

    def __repr__(self):
        return f"GFt({self.p})"


@lru_cache(maxsize=None)
def GFt(p: int) -> RationalFunctionField:
    return RationalFunctionField(p)


_FIELD_TAG_RE = re.compile(r"^\s*GF\s*\(\s*(\d+)\s*\)\s*(\(\s*t\s*\))?\s*$", re.IGNORECASE)


def parse_field_tag(text: str) -> Field:
    """Recognize ``Q``, ``GF(p)``, ``GF(p)(t)`` (also ``gf2``, ``gf3t`` shorthands)."""
    text = text.strip()
    if text in ("Q", "q", "QQ"):
        return QQ
    m = _FIELD_TAG_RE.match(text)
    if m:
        p = int(m.group(1))
        return GFt(p) if m.group(2) else GF(p)
    m = re.match(r"^gf(\d+)(t?)$", text, re.IGNORECASE)
    if m:
        p = int(m.group(1))
        return GFt(p) if m.group(2) else GF(p)
    raise ValueError(f"unrecognized field tag {text!r}")


# ---------------------------------------------------------------------------
# Univariate polynomials over any supported field
# ---------------------------------------------------------------------------

class UniPoly:
    """A univariate polynomial with FieldScalar coefficients, lowest degree first.

    The coefficient tuple never has a zero leading (highest) coefficient;
    the zero polynomial has an empty tuple.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = [field.scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> FieldScalar:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other):
        if not isinstance(other, UniPoly):
            raise TypeError("expected UniPoly")
        if other.field != self.field:
            raise FieldMismatchError("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.field.zero()
        out = [zero] * n
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] + c
        return UniPoly(self.field, out)

    def __neg__(self):
        return UniPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldScalar):
            return UniPoly(self.field, tuple(c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.field)
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    def divmod_poly(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [self.field.zero()] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv_lead = other.leading().inverse()
        while len(rem) >= len(other.coeffs):
            while rem and rem[-1].is_zero():
                rem.pop()
            if len(rem) < len(other.coeffs):
                break
            shift = len(rem) - len(other.coeffs)
            coef = rem[-1] * inv_lead
            quo[shift] = coef
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - coef * c
        return UniPoly(self.field, quo), UniPoly(self.field, rem)

    def __mod__(self, other):
        return self.divmod_poly(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self * self.leading().inverse()

    def evaluate(self, x: FieldScalar) -> FieldScalar:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c.is_zero():
                continue
            piece = f"({c})" if d == 0 else f"({c})*x^{d}"
            terms.append(piece)
        return "UniPoly(" + " + ".join(terms) + ")"


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor; ``poly_gcd(0, 0) = 0``."""
    if f.field != g.field:
        raise FieldMismatchError("polynomials over different fields")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def _int_divisors(n: int, trial_cap: int):
    n = abs(n)
    if n == 0:
        raise ValueError("zero has infinitely many divisors")
    if math.isqrt(n) > trial_cap:
        raise RootSearchCapError(f"integer {n} too large for divisor enumeration")
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def roots_in_field(f: UniPoly, *, degree_cap: int = 16,
                   int_trial_cap: int = 10 ** 6) -> set:
    """All roots of a nonzero polynomial lying in its coefficient field.

    GF(p) is searched exhaustively; over Q the candidates come from divisors
    of the cleared-denominator extreme coefficients; over GF(p)(t) the extreme
    GF(p)[t] coefficients are factored by trial division (degrees above
    ``degree_cap`` raise RootSearchCapError) and all coprime quotient
    candidates are tested by substitution.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has every scalar as a root")
    field = f.field
    if isinstance(field, PrimeField):
        return {a for a in field.elements() if f.evaluate(a).is_zero()}

    roots: set = set()
    # strip x^k so the constant coefficient of the cofactor is nonzero
    k = 0
    while f.coeffs[k].is_zero():
        k += 1
    if k > 0:
        roots.add(field.zero())
        f = UniPoly(field, f.coeffs[k:])
    if f.degree == 0:
        return roots

    if isinstance(field, RationalField):
        lcm = 1
        for c in f.coeffs:
            lcm = lcm * c.payload.denominator // math.gcd(lcm, c.payload.denominator)
        ints = [int(c.payload * lcm) for c in f.coeffs]
        for num in _int_divisors(ints[0], int_trial_cap):
            for den in _int_divisors(ints[-1], int_trial_cap):
                for sign in (1, -1):
                    cand = field.scalar(Fraction(sign * num, den))
                    if f.evaluate(cand).is_zero():
                        roots.add(cand)
        return roots

    if isinstance(field, RationalFunctionField):
        p = field.p
        lcm = (1,)
        for c in f.coeffs:
            den = c.payload[1]
            lcm = _pmul(_pdivmod(lcm, _pgcd(lcm, den, p), p)[0], den, p)
        polys = []
        for c in f.coeffs:
            num, den = c.payload
            polys.append(_pmul(num, _pdivmod(lcm, den, p)[0], p))
        content = ()
        for g in polys:
            content = _pgcd(content, g, p)
        if _pdeg(content) > 0:
            polys = [_pdivmod(g, content, p)[0] for g in polys]
        trailing, leading = polys[0], polys[-1]
        num_divs = _pdivisors(trailing, p, degree_cap)
        den_divs = _pdivisors(leading, p, degree_cap)
        for nd in num_divs:
            for dd in den_divs:
                if _pdeg(_pgcd(nd, dd, p)) > 0:
                    continue
                for unit in range(1, p):
                    num = tuple((unit * c) % p for c in nd)
                    cand = FieldScalar(field, field._canon((num, dd)))
                    if f.evaluate(cand).is_zero():
                        roots.add(cand)
        return roots

    raise NotImplementedError(f"root finding not supported over {field.tag}")
