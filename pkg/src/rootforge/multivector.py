"""Positive-definite geometric (Clifford) algebra Cl(n) for 1 <= n <= 5.

Basis blades are bitmasks over the generators e1..en, stored dense as 2^n
coefficients over a scalar backend.  e_i e_j = -e_j e_i for i != j and
e_i^2 = +1; the product sign comes from counting transpositions.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import (
    DimensionMismatch,
    NotAVersor,
    NotUnitBivector,
    ZeroVector,
)
from .scalars import EXACT, FLOAT, GoldenNumber

MAX_DIM = 5


def _popcount(x: int) -> int:
    return bin(x).count("1")


def blade_sign(a: int, b: int) -> int:
    """Sign of the product of basis blades a*b from anticommutation swaps."""
    s = 0
    a >>= 1
    while a:
        s += _popcount(a & b)
        a >>= 1
    return -1 if s & 1 else 1


def blade_grade(mask: int) -> int:
    return _popcount(mask)


class Multivector:
    __slots__ = ("dim", "backend", "coeffs")

    def __init__(self, dim: int, coeffs: Sequence, backend=None):
        if not 1 <= dim <= MAX_DIM:
            raise DimensionMismatch(f"dimension {dim} outside 1..{MAX_DIM}")
        self.dim = dim
        self.backend = backend if backend is not None else EXACT
        size = 1 << dim
        if len(coeffs) != size:
            raise DimensionMismatch(f"expected {size} coefficients, got {len(coeffs)}")
        self.coeffs = [self.backend.coerce(c) for c in coeffs]

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, backend=None) -> "Multivector":
        backend = backend if backend is not None else EXACT
        return cls(dim, [backend.zero()] * (1 << dim), backend)

    @classmethod
    def scalar(cls, dim: int, value, backend=None) -> "Multivector":
        m = cls.zero(dim, backend)
        m.coeffs[0] = m.backend.coerce(value)
        return m

    @classmethod
    def vector(cls, components: Sequence, backend=None) -> "Multivector":
        dim = len(components)
        m = cls.zero(dim, backend)
        for i, c in enumerate(components):
            m.coeffs[1 << i] = m.backend.coerce(c)
        return m

    @classmethod
    def basis_blade(cls, dim: int, mask: int, backend=None) -> "Multivector":
        m = cls.zero(dim, backend)
        m.coeffs[mask] = m.backend.one()
        return m

    # -- structure -------------------------------------------------------------

    def grades(self) -> set[int]:
        return {
            blade_grade(i)
            for i, c in enumerate(self.coeffs)
            if not self.backend.is_zero(c)
        }

    def grade_part(self, g: int) -> "Multivector":
        out = Multivector.zero(self.dim, self.backend)
        for i, c in enumerate(self.coeffs):
            if blade_grade(i) == g:
                out.coeffs[i] = c
        return out

    def scalar_part(self):
        return self.coeffs[0]

    def vector_components(self) -> tuple:
        return tuple(self.coeffs[1 << i] for i in range(self.dim))

    def is_vector(self) -> bool:
        return self.grades() <= {1}

    def reverse(self) -> "Multivector":
        out = Multivector.zero(self.dim, self.backend)
        for i, c in enumerate(self.coeffs):
            g = blade_grade(i)
            out.coeffs[i] = -c if (g * (g - 1) // 2) & 1 else c
        return out

    # -- arithmetic ------------------------------------------------------------

    def _check_compatible(self, other: "Multivector"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"Cl({self.dim}) vs Cl({other.dim})")
        if self.backend.kind != other.backend.kind:
            raise DimensionMismatch("mixed scalar backends")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_compatible(other)
        return Multivector(
            self.dim,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
            self.backend,
        )

    def __sub__(self, other: "Multivector") -> "Multivector":
        self._check_compatible(other)
        return Multivector(
            self.dim,
            [a - b for a, b in zip(self.coeffs, other.coeffs)],
            self.backend,
        )

    def __neg__(self) -> "Multivector":
        return Multivector(self.dim, [-c for c in self.coeffs], self.backend)

    def scale(self, s) -> "Multivector":
        s = self.backend.coerce(s)
        return Multivector(self.dim, [c * s for c in self.coeffs], self.backend)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return all(self.backend.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        """Canonical hashable fingerprint under the backend's equality."""
        return tuple(self.backend.key(c) for c in self.coeffs)

    def canonical_sign_key(self) -> tuple:
        """Fingerprint shared by V and -V: flip so the first nonzero key is positive."""
        flip = False
        for c in self.coeffs:
            if not self.backend.is_zero(c):
                flip = self.backend.to_float(c) < 0
                break
        m = -self if flip else self
        return m.key()

    def norm_squared(self):
        """Sum of squared blade coefficients; equals V * ~V for versors."""
        out = self.backend.zero()
        for c in self.coeffs:
            out = out + c * c
        return out

    def to_float(self) -> "Multivector":
        return Multivector(
            self.dim, [self.backend.to_float(c) for c in self.coeffs], FLOAT
        )

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if self.backend.is_zero(c):
                continue
            blade = "".join(f"e{k + 1}" for k in range(self.dim) if i >> k & 1) or "1"
            terms.append(f"{c}*{blade}")
        return f"Mv({' + '.join(terms) or '0'})"

    def to_json(self) -> dict:
        coeffs = {}
        for i, c in enumerate(self.coeffs):
            if self.backend.is_zero(c):
                continue
            coeffs[str(i)] = c.to_json() if isinstance(c, GoldenNumber) else float(c)
        return {"dim": self.dim, "coeffs": coeffs}


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    a._check_compatible(b)
    be = a.backend
    out = Multivector.zero(a.dim, be)
    nz_a = [(i, c) for i, c in enumerate(a.coeffs) if not be.is_zero(c)]
    nz_b = [(j, c) for j, c in enumerate(b.coeffs) if not be.is_zero(c)]
    for i, ca in nz_a:
        for j, cb in nz_b:
            prod = ca * cb
            if blade_sign(i, j) < 0:
                prod = -prod
            k = i ^ j
            out.coeffs[k] = out.coeffs[k] + prod
    return out


def inner(a: Multivector, b: Multivector):
    """Symmetric bilinear form of two vectors: scalar part of a*b."""
    if not (a.is_vector() and b.is_vector()):
        raise DimensionMismatch("inner() expects grade-1 arguments")
    out = a.backend.zero()
    for x, y in zip(a.vector_components(), b.vector_components()):
        out = out + x * y
    return out


def reflect(alpha: Multivector, x: Multivector) -> Multivector:
    """Reflection of vector x in the hyperplane normal to alpha.

    Computed as -alpha x alpha / (alpha|alpha); agrees with the classical
    x - 2 (x|alpha)/(alpha|alpha) alpha.
    """
    if not alpha.is_vector() or not x.is_vector():
        raise DimensionMismatch("reflect() expects grade-1 arguments")
    n = inner(alpha, alpha)
    if alpha.backend.is_zero(n):
        raise ZeroVector("reflection normal must be nonzero")
    out = geometric_product(geometric_product(alpha, x), alpha)
    if isinstance(n, GoldenNumber):
        inv = n.inverse()
    else:
        inv = 1.0 / n
    return (-out).scale(inv)


def versor_parity(a: Multivector) -> int:
    """0 for even versors, 1 for odd; raises if grades are mixed-parity."""
    parities = {g & 1 for g in a.grades()}
    if len(parities) != 1:
        raise NotAVersor("mixed even and odd grades")
    return parities.pop()


def is_versor(a: Multivector, tol_scale: float = 1e-9) -> bool:
    """Check that ~A * A is a scalar (non-scalar residue below tolerance)."""
    try:
        versor_parity(a)
    except NotAVersor:
        return False
    prod = geometric_product(a.reverse(), a)
    be = a.backend
    if be.is_exact:
        return all(be.is_zero(c) for c in prod.coeffs[1:])
    mag = abs(be.to_float(prod.coeffs[0])) or 1.0
    residue = max(abs(be.to_float(c)) for c in prod.coeffs[1:])
    return residue <= tol_scale * mag


def versor_sandwich(a: Multivector, x: Multivector) -> Multivector:
    """Orthogonal action (-1)^k A x ~A / (A ~A) of a versor on a vector."""
    if not is_versor(a):
        raise NotAVersor("sandwich operand is not a versor")
    k = versor_parity(a)
    norm = geometric_product(a, a.reverse()).scalar_part()
    out = geometric_product(geometric_product(a, x), a.reverse())
    if k & 1:
        out = -out
    if isinstance(norm, GoldenNumber):
        inv = norm.inverse()
    else:
        inv = 1.0 / norm
    return out.scale(inv)


def rotor_exp(b: Multivector, theta: float) -> Multivector:
    """cos(theta) + sin(theta) B for a unit bivector B; float backend only."""
    if b.backend.is_exact:
        raise NotUnitBivector("rotor_exp runs on the float backend")
    if b.grades() not in ({2}, set()):
        raise NotUnitBivector("exponent must be a pure bivector")
    sq = geometric_product(b, b)
    if not b.backend.eq(sq.scalar_part(), -1.0) or any(
        not b.backend.is_zero(c) for c in sq.coeffs[1:]
    ):
        raise NotUnitBivector("bivector must square to -1")
    out = b.scale(math.sin(theta))
    out.coeffs[0] = out.coeffs[0] + math.cos(theta)
    return out


def versor_matrix(a: Multivector) -> list[list[float]]:
    """Matrix of the sandwich action on basis vectors (columns are images)."""
    be = a.backend
    n = a.dim
    cols = []
    for j in range(n):
        ej = Multivector.basis_blade(n, 1 << j, be)
        cols.append(versor_sandwich(a, ej).vector_components())
    return [[be.to_float(cols[j][i]) for j in range(n)] for i in range(n)]
