"""Scalar backends shared by every algebraic module.

The exact backend is the quadratic field Q(sqrt(5)) written in the basis
(1, tau) with tau the golden ratio, tau^2 = tau + 1.  Everything H-family
runs on it.  Computations that genuinely need sqrt(2) or cos(pi/n) (B3, F4,
generic dihedral systems) run on the float backend with a fixed tolerance.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

TAU_FLOAT = (1.0 + math.sqrt(5.0)) / 2.0

RationalLike = Union[int, Fraction]


class GoldenNumber:
    """Element a + b*tau of Q(sqrt(5)), with exact rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def coerce(value: "GoldenNumber | RationalLike") -> "GoldenNumber":
        if isinstance(value, GoldenNumber):
            return value
        return GoldenNumber(value)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        other = GoldenNumber.coerce(other)
        return GoldenNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = GoldenNumber.coerce(other)
        return GoldenNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return GoldenNumber.coerce(other) - self

    def __mul__(self, other):
        # tau^2 = tau + 1, hence (a+b tau)(c+d tau) = (ac+bd) + (ad+bc+bd) tau.
        other = GoldenNumber.coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return GoldenNumber(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __neg__(self):
        return GoldenNumber(-self.a, -self.b)

    def __pow__(self, n: int):
        if n < 0:
            return (GoldenNumber(1) / self) ** (-n)
        out = GoldenNumber(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def field_norm(self) -> Fraction:
        """Norm to Q: x * conj(x) = a^2 + ab - b^2."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def conjugate(self) -> "GoldenNumber":
        """Galois conjugate tau -> 1 - tau."""
        return GoldenNumber(self.a + self.b, -self.b)

    def inverse(self) -> "GoldenNumber":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero golden number")
        c = self.conjugate()
        return GoldenNumber(c.a / n, c.b / n)

    def __truediv__(self, other):
        other = GoldenNumber.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GoldenNumber.coerce(other) * self.inverse()

    # -- comparisons (exact, using the real embedding tau > 0) -----------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GoldenNumber(other)
        if not isinstance(other, GoldenNumber):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Exact sign of the real embedding a + b*(1+sqrt5)/2.

        Writes the value as (u + v*sqrt5)/2 with u = 2a+b, v = b and does the
        usual case analysis; no floating point involved.
        """
        u = 2 * self.a + self.b
        v = self.b
        if v == 0:
            return -1 if u < 0 else (0 if u == 0 else 1)
        if u == 0:
            return -1 if v < 0 else 1
        if u > 0 and v > 0:
            return 1
        if u < 0 and v < 0:
            return -1
        # opposite signs: compare u^2 with 5 v^2
        if u * u > 5 * v * v:
            return 1 if u > 0 else -1
        return 1 if v > 0 else -1

    def __lt__(self, other):
        return (self - GoldenNumber.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - GoldenNumber.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - GoldenNumber.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - GoldenNumber.coerce(other)).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- embeddings and formatting ---------------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * TAU_FLOAT

    def __repr__(self):
        return f"GoldenNumber({self.a!r}, {self.b!r})"

    def __str__(self):
        return format_golden(self)

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    @staticmethod
    def from_json(obj: dict) -> "GoldenNumber":
        return GoldenNumber(Fraction(obj["a"]), Fraction(obj["b"]))


ZERO = GoldenNumber(0)
ONE = GoldenNumber(1)
TAU = GoldenNumber(0, 1)
HALF = GoldenNumber(Fraction(1, 2))


def golden_mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x * y


def galois_conjugate(x: GoldenNumber) -> GoldenNumber:
    return x.conjugate()


def rational_part(x: GoldenNumber) -> Fraction:
    """Coefficient of 1 in the (1, tau) basis."""
    return x.a


def tau_part(x: GoldenNumber) -> Fraction:
    return x.b


def float_embed(x: GoldenNumber) -> float:
    return float(x)


def format_golden(x: GoldenNumber) -> str:
    """Round-trippable text form 'p/q+r/s t' as used by the CLI."""
    if x.b == 0:
        return str(x.a)
    if x.a == 0:
        return f"{x.b}t"
    sep = "+" if x.b > 0 else "-"
    return f"{x.a}{sep}{abs(x.b)}t"


def parse_golden(text: str) -> GoldenNumber:
    s = text.strip().replace(" ", "")
    if not s.endswith("t"):
        return GoldenNumber(Fraction(s))
    body = s[:-1]
    split = None
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "+-/":
            split = i
            break
    a_txt, b_txt = ("0", body) if split is None else (body[:split], body[split:])
    if b_txt in ("", "+"):
        b = Fraction(1)
    elif b_txt == "-":
        b = Fraction(-1)
    else:
        b = Fraction(b_txt)
    return GoldenNumber(Fraction(a_txt), b)


class ExactBackend:
    """Exact golden-field scalars; equality and hashing are exact."""

    kind = "exact"
    is_exact = True

    def coerce(self, v):
        return GoldenNumber.coerce(v)

    def eq(self, x, y) -> bool:
        return GoldenNumber.coerce(x) == GoldenNumber.coerce(y)

    def is_zero(self, x) -> bool:
        return GoldenNumber.coerce(x).is_zero()

    def key(self, x):
        x = GoldenNumber.coerce(x)
        return (x.a, x.b)

    def to_float(self, x) -> float:
        return float(GoldenNumber.coerce(x))

    def zero(self):
        return ZERO

    def one(self):
        return ONE

    def __repr__(self):
        return "ExactBackend()"


class FloatBackend:
    """IEEE doubles with a fixed tolerance for equality and set keys."""

    kind = "float"
    is_exact = False

    def __init__(self, eps: float = 1e-9, key_digits: int = 6):
        if eps < 0:
            raise ValueError("tolerance must be nonnegative")
        self.eps = eps
        self.key_digits = key_digits

    def coerce(self, v) -> float:
        if isinstance(v, GoldenNumber):
            return float(v)
        return float(v)

    def eq(self, x, y) -> bool:
        return abs(self.coerce(x) - self.coerce(y)) <= self.eps

    def is_zero(self, x) -> bool:
        return abs(self.coerce(x)) <= self.eps

    def key(self, x):
        r = round(self.coerce(x), self.key_digits)
        return 0.0 if r == 0 else r  # fold -0.0 into 0.0

    def to_float(self, x) -> float:
        return self.coerce(x)

    def zero(self):
        return 0.0

    def one(self):
        return 1.0

    def __repr__(self):
        return f"FloatBackend(eps={self.eps!r})"


EXACT = ExactBackend()
FLOAT = FloatBackend()


class EpsilonSet:
    """Deterministic set of coordinate tuples under a backend's equality.

    Keys are per-coordinate `backend.key` values; a float coordinate close to
    a rounding boundary is probed against the neighbouring key as well, so
    epsilon-equal points always collide.
    """

    def __init__(self, backend):
        self.backend = backend
        self._buckets: dict = {}
        self._items: list = []

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def _plain_key(self, vec):
        be = self.backend
        return tuple(be.key(c) for c in vec)

    def _probe_keys(self, vec):
        be = self.backend
        if be.is_exact:
            yield self._plain_key(vec)
            return
        per_coord = []
        for c in vec:
            x = be.to_float(c)
            keys = {be.key(x), be.key(x - 2 * be.eps), be.key(x + 2 * be.eps)}
            per_coord.append(sorted(keys))
        combos = [()]
        for keys in per_coord:
            combos = [c + (k,) for c in combos for k in keys]
        yield from combos

    def _equal_vec(self, u, v) -> bool:
        return all(self.backend.eq(a, b) for a, b in zip(u, v))

    def find(self, vec):
        """Return the stored representative equal to vec, or None."""
        for key in self._probe_keys(vec):
            for cand in self._buckets.get(key, ()):
                if self._equal_vec(cand, vec):
                    return cand
        return None

    def add(self, vec) -> bool:
        """Insert vec if new; returns True when it was added."""
        if self.find(vec) is not None:
            return False
        vec = tuple(vec)
        self._buckets.setdefault(self._plain_key(vec), []).append(vec)
        self._items.append(vec)
        return True
