"""Root systems: catalogs, reflection closure, Cartan data, Coxeter elements.

Vectors are plain coordinate tuples over a scalar backend (GoldenNumber for
the exact backend, float otherwise), so ranks above the Clifford cap of 5
(D6, E8) work uniformly.  Versor machinery kicks in only where a Coxeter
element is requested in dimension <= 5.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import (
    ClosureBudgetExceeded,
    EigensolverFailure,
    FactorizationFailure,
    NonUnitSimples,
    NotIrreducible,
    UnknownName,
    UnrecognizedType,
)
from .multivector import Multivector, geometric_product
from .scalars import EXACT, FLOAT, EpsilonSet, GoldenNumber

Vector = tuple

DEFAULT_CLOSURE_CAP = 10_000


# -- coordinate-tuple helpers ---------------------------------------------------


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vscale(u: Vector, s) -> Vector:
    return tuple(a * s for a in u)


def vdot(u: Vector, v: Vector):
    out = None
    for a, b in zip(u, v):
        term = a * b
        out = term if out is None else out + term
    return out


def vfloat(u: Vector) -> tuple:
    return tuple(float(c) if not isinstance(c, float) else c for c in u)


def reflect_vector(alpha: Vector, x: Vector) -> Vector:
    """x - 2 (x|alpha)/(alpha|alpha) alpha, exact on golden coordinates."""
    num = vdot(x, alpha)
    den = vdot(alpha, alpha)
    if isinstance(den, GoldenNumber):
        coef = (num + num) / den
    else:
        coef = 2.0 * num / den
    return vsub(x, vscale(alpha, coef))


def _sort_key(vec: Vector) -> tuple:
    return tuple(round(float(c), 9) + 0.0 for c in vfloat(vec))


# -- core types ------------------------------------------------------------------


@dataclass(frozen=True)
class RootSystem:
    dim: int
    backend: object
    simples: tuple
    roots: tuple
    name: Optional[str] = None
    form_scale: Fraction = Fraction(1)

    def inner(self, u: Vector, v: Vector):
        base = vdot(u, v)
        if self.form_scale == 1:
            return base
        return base * GoldenNumber(self.form_scale) if isinstance(base, GoldenNumber) else float(self.form_scale) * base

    def __len__(self):
        return len(self.roots)

    def root_set(self) -> EpsilonSet:
        s = EpsilonSet(self.backend)
        for r in self.roots:
            s.add(r)
        return s


@dataclass(frozen=True)
class CoxeterElementReport:
    order: int
    exponents: tuple
    degrees: tuple


@dataclass
class RotorFactor:
    bivector: Multivector
    exponent: int
    angle: float
    rotor: Multivector


# -- catalog ----------------------------------------------------------------------

_G = GoldenNumber
_H = Fraction(1, 2)


def _golden_vec(*coords) -> Vector:
    return tuple(_G.coerce(c) for c in coords)


def _e(i: int, n: int, value=1) -> list:
    v = [Fraction(0)] * n
    v[i] = Fraction(value)
    return v


def _exact_diff(n: int, i: int, j: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    v[j] = Fraction(-1)
    return _golden_vec(*v)


def _exact_sum(n: int, i: int, j: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    v[j] = Fraction(1)
    return _golden_vec(*v)


# H4 simple roots over Z[tau]/2 (unit vectors, diagram path 5-3-3); they extend
# the catalog H3 simples by a fourth coordinate and close to the 120 icosian
# roots of the 600-cell.
_H4_SIMPLES = (
    _golden_vec(_G(1), _G(0), _G(0), _G(0)),
    _golden_vec(_G(0, -_H), _G(-_H, 0), _G(-_H, _H), _G(0)),
    _golden_vec(_G(0), _G(1), _G(0), _G(0)),
    _golden_vec(_G(0), _G(-_H, 0), _G(0, -_H), _G(-_H, _H)),
)

_I2_RE = re.compile(r"^I2\((\d+)\)$")
_A1XI2_RE = re.compile(r"^A1[x×]I2\((\d+)\)$")


def catalog(name: str):
    """Standard ordered simple roots; (simples, backend) for a catalog name."""
    m = _I2_RE.match(name)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise UnknownName("I2(n) needs n >= 2")
        c, s = math.cos(math.pi / n), math.sin(math.pi / n)
        return ((1.0, 0.0), (-c, s)), FLOAT
    m = _A1XI2_RE.match(name)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise UnknownName("A1xI2(n) needs n >= 2")
        c, s = math.cos(math.pi / n), math.sin(math.pi / n)
        return ((0.0, 0.0, 1.0), (1.0, 0.0, 0.0), (-c, s, 0.0)), FLOAT
    if name == "A1":
        return (_golden_vec(1),), EXACT
    if name == "A3":
        return (
            _exact_diff(3, 1, 2),
            _exact_diff(3, 0, 1),
            _exact_sum(3, 1, 2),
        ), EXACT
    if name == "B3":
        return (
            (1.0, -1.0, 0.0),
            (0.0, 1.0, -1.0),
            (0.0, 0.0, 1.0),
        ), FLOAT
    if name == "H3":
        return (
            _golden_vec(1, 0, 0),
            _golden_vec(_G(0, -_H), _G(-_H, 0), _G(-_H, _H)),
            _golden_vec(0, 1, 0),
        ), EXACT
    if name == "A4":
        return tuple(_exact_diff(5, i, i + 1) for i in range(4)), EXACT
    if name == "D4":
        return (
            _exact_diff(4, 0, 1),
            _exact_diff(4, 1, 2),
            _exact_diff(4, 2, 3),
            _exact_sum(4, 2, 3),
        ), EXACT
    if name == "D6":
        return tuple(_exact_diff(6, i, i + 1) for i in range(5)) + (
            _exact_sum(6, 4, 5),
        ), EXACT
    if name == "F4":
        return (
            (0.0, 1.0, -1.0, 0.0),
            (0.0, 0.0, 1.0, -1.0),
            (0.0, 0.0, 0.0, 1.0),
            (0.5, -0.5, -0.5, -0.5),
        ), FLOAT
    if name == "H4":
        return _H4_SIMPLES, EXACT
    if name == "E8":
        half = Fraction(1, 2)
        p7 = _golden_vec(half, -half, -half, -half, -half, -half, -half, half)
        return (
            _exact_diff(8, 6, 5),
            _exact_diff(8, 5, 4),
            _exact_diff(8, 4, 3),
            _exact_diff(8, 3, 2),
            _exact_diff(8, 2, 1),
            _exact_diff(8, 1, 0),
            p7,
            _exact_sum(8, 0, 1),
        ), EXACT
    raise UnknownName(f"no catalog entry named {name!r}")


CATALOG_NAMES = (
    "A1",
    "A3",
    "B3",
    "H3",
    "A4",
    "D4",
    "D6",
    "F4",
    "H4",
    "E8",
)

EXPECTED_ROOT_COUNTS = {
    "A1": 2,
    "A3": 12,
    "B3": 18,
    "H3": 30,
    "A4": 20,
    "D4": 24,
    "D6": 60,
    "F4": 48,
    "H4": 120,
    "E8": 240,
}


@lru_cache(maxsize=None)
def catalog_system(name: str) -> "RootSystem":
    """Closed catalog root system, cached (RootSystem is immutable)."""
    simples, backend = catalog(name)
    return close(simples, backend, name=name)


# -- closure and axioms ------------------------------------------------------------


def close(
    simples: Sequence[Vector],
    backend=None,
    cap: int = DEFAULT_CLOSURE_CAP,
    name: Optional[str] = None,
    form_scale: Fraction = Fraction(1),
) -> RootSystem:
    """Smallest reflection-closed set containing the simples.

    Reflecting in simples only is enough: the simple reflections generate the
    group and every root lies in the orbit of a simple.  A cap guards against
    affinised (non-finite) inputs.
    """
    if backend is None:
        backend = EXACT if isinstance(simples[0][0], GoldenNumber) else FLOAT
    simples = tuple(tuple(backend.coerce(c) for c in s) for s in simples)
    seen = EpsilonSet(backend)
    frontier = []
    for s in simples:
        if seen.add(s):
            frontier.append(s)
    while frontier:
        new = []
        for r in frontier:
            for s in simples:
                img = reflect_vector(s, r)
                if seen.add(img):
                    new.append(img)
        if len(seen) > cap:
            raise ClosureBudgetExceeded(
                f"root closure exceeded {cap} vectors; input is not a finite system"
            )
        frontier = new
    roots = tuple(sorted(seen, key=_sort_key))
    return RootSystem(
        dim=len(simples[0]),
        backend=backend,
        simples=simples,
        roots=roots,
        name=name,
        form_scale=form_scale,
    )


def _rational_int_vectors(vecs) -> Optional[list]:
    """Scale all-rational golden vectors to a common integer grid, or None."""
    denom = 1
    for v in vecs:
        for c in v:
            if not isinstance(c, GoldenNumber) or c.b != 0:
                return None
            denom = denom * c.a.denominator // math.gcd(denom, c.a.denominator)
    return [tuple(int(c.a * denom) for c in v) for v in vecs]


def verify_axioms(rs: RootSystem) -> None:
    """Raise AxiomViolation unless both root-system axioms hold exactly/within eps."""
    from .errors import AxiomViolation

    roots = rs.roots
    members = rs.root_set()
    # Axiom 1: -r present; no scalar multiple besides +-r.  Group by the
    # normalised float direction; each direction class must be exactly {r, -r}.
    for r in roots:
        if members.find(vneg(r)) is None:
            raise AxiomViolation(f"negative of {r} missing")
    directions: dict = {}
    for r in roots:
        rf = vfloat(r)
        norm = math.sqrt(sum(c * c for c in rf))
        unit = tuple(round(c / norm, 9) + 0.0 for c in rf)
        neg = tuple(round(-c, 9) + 0.0 for c in unit)
        key = min(unit, neg)
        directions.setdefault(key, []).append(r)
    for key, group in directions.items():
        if len(group) != 2:
            raise AxiomViolation(f"{len(group)} roots share the direction {key}")
    # Axiom 2: invariance under every root reflection.
    ints = _rational_int_vectors(roots) if rs.backend.is_exact else None
    if ints is not None:
        member_set = set(ints)
        n = len(ints)
        for ai in range(n):
            a = ints[ai]
            na = sum(c * c for c in a)
            scaled_members = {tuple(na * c for c in m) for m in member_set}
            for u in ints:
                du = 2 * sum(x * y for x, y in zip(u, a))
                img = tuple(na * x - du * y for x, y in zip(u, a))
                if img not in scaled_members:
                    raise AxiomViolation("reflection image leaves the set")
        return
    for alpha in roots:
        for x in roots:
            if members.find(reflect_vector(alpha, x)) is None:
                raise AxiomViolation(f"reflection of {x} in {alpha} leaves the set")


# -- Cartan matrix and diagram data -------------------------------------------------


def cartan_matrix(simples: Sequence[Vector]):
    """C[i][j] = 2 (a_i|a_j) / (a_j|a_j) over the coordinate scalars."""
    k = len(simples)
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            num = vdot(simples[i], simples[j])
            den = vdot(simples[j], simples[j])
            if isinstance(den, GoldenNumber):
                row.append((num + num) / den)
            else:
                row.append(2.0 * num / den)
        out.append(row)
    return out


def cartan_float(simples: Sequence[Vector]) -> np.ndarray:
    return np.array([[float(c) for c in row] for row in cartan_matrix(simples)])


def coxeter_edge_label(ci_j, cj_i) -> int:
    """Order m of s_i s_j from the Cartan entries: c_ij c_ji = 4 cos^2(pi/m)."""
    prod = float(ci_j) * float(cj_i)
    if prod < 1e-12:
        return 2
    c = math.sqrt(prod) / 2.0
    c = min(c, 1.0)
    angle = math.acos(c)
    if angle < 1e-9:
        raise UnrecognizedType("parallel simple roots")
    m = math.pi / angle
    mi = round(m)
    if abs(m - mi) > 1e-6:
        raise UnrecognizedType(f"non-crystallographic-looking edge order {m}")
    return mi


def diagram_edges(simples: Sequence[Vector]) -> list[tuple[int, int, int]]:
    """(i, j, m_ij) for every bonded pair of simple roots (m >= 3)."""
    C = cartan_matrix(simples)
    k = len(simples)
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            if abs(float(C[i][j])) > 1e-9:
                edges.append((i, j, coxeter_edge_label(C[i][j], C[j][i])))
    return edges


def diagram_dot(simples: Sequence[Vector], name: str = "coxeter") -> str:
    """DOT text of the Coxeter diagram; the conventional label 3 is suppressed."""
    lines = [f"graph {name} {{"]
    for i in range(len(simples)):
        lines.append(f'  a{i + 1} [label="{i + 1}"];')
    for i, j, m in diagram_edges(simples):
        attr = "" if m == 3 else f' [label="{m}"]'
        lines.append(f"  a{i + 1} -- a{j + 1}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- Coxeter element, exponents, factorisation --------------------------------------


def reflection_matrix(alpha: Vector) -> np.ndarray:
    a = np.array(vfloat(alpha), dtype=float)
    n = a @ a
    return np.eye(len(a)) - 2.0 * np.outer(a, a) / n


def coxeter_element(simples: Sequence[Vector]):
    """Versor W = a1 a2 ... ak (dim <= 5, float) and its orthogonal matrix.

    The matrix is the product of the simple reflections applied right to
    left, matching the sandwich action of W.
    """
    dim = len(simples[0])
    M = np.eye(dim)
    for s in simples:
        M = M @ reflection_matrix(s)
    W = None
    if dim <= 5:
        W = Multivector.scalar(dim, 1.0, FLOAT)
        for s in simples:
            sf = vfloat(s)
            norm = math.sqrt(sum(c * c for c in sf))
            if norm < 1e-12:
                raise NonUnitSimples("cannot normalise a zero simple root")
            W = geometric_product(W, Multivector.vector([c / norm for c in sf], FLOAT))
    return W, M


def matrix_order(M: np.ndarray, cap: int = 1000) -> int:
    P = np.eye(M.shape[0])
    for k in range(1, cap + 1):
        P = P @ M
        if np.max(np.abs(P - np.eye(M.shape[0]))) < 1e-8:
            return k
    raise EigensolverFailure(f"matrix order not found within {cap}")


def exponents(simples: Sequence[Vector]) -> CoxeterElementReport:
    """Exponents m_i from the Coxeter-element eigenphases exp(2 pi i m_i / h).

    The matrix action is restricted to the span of the simple roots, so
    systems embedded in a larger ambient space (A4 in 5D) work too.
    """
    _, M = coxeter_element(simples)
    h = matrix_order(M)
    basis = np.array([vfloat(s) for s in simples], dtype=float).T
    q, _ = np.linalg.qr(basis)
    M = q.T @ M @ q
    try:
        eig = np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise EigensolverFailure(str(exc)) from exc
    ms = []
    for lam in eig:
        theta = math.atan2(lam.imag, lam.real)
        if theta < 0:
            theta += 2 * math.pi
        m = theta * h / (2 * math.pi)
        mi = round(m)
        if abs(m - mi) > 1e-6 or not 1 <= mi <= h - 1:
            raise EigensolverFailure(f"eigenphase {m} is not an exponent of h={h}")
        ms.append(mi)
    ms.sort()
    rank = len(simples)
    if sum(ms) != rank * h // 2:
        raise EigensolverFailure("exponent sum identity failed")
    return CoxeterElementReport(order=h, exponents=tuple(ms), degrees=tuple(m + 1 for m in ms))


def _plane_bivector(u: np.ndarray, v: np.ndarray, dim: int) -> Multivector:
    """Unit bivector u ^ v as a float multivector."""
    B = Multivector.zero(dim, FLOAT)
    for i in range(dim):
        for j in range(i + 1, dim):
            B.coeffs[(1 << i) | (1 << j)] = u[i] * v[j] - u[j] * v[i]
    nrm = math.sqrt(sum(float(c) ** 2 for c in B.coeffs))
    if nrm < 1e-12:
        raise FactorizationFailure("degenerate eigenplane")
    return B.scale(1.0 / nrm)


def bivector_factorization(simples: Sequence[Vector]) -> list[RotorFactor]:
    """Commuting rotor factors exp(m_i pi / h * B_i) reconstructing the versor.

    Works for rank-4 systems (two eigenplanes).  Factor orientations are
    fixed by requiring the product to reproduce the Coxeter versor up to
    sign within 1e-9.
    """
    dim = len(simples[0])
    if dim != 4:
        raise FactorizationFailure("factorisation implemented for rank 4")
    W, M = coxeter_element(simples)
    h = matrix_order(M)
    lam, vecs = np.linalg.eig(M)
    planes = []  # (theta, u1, u2)
    used = set()
    # genuinely complex pairs: plane from Re/Im of one eigenvector
    for idx in range(len(lam)):
        if idx in used or abs(lam[idx].imag) < 1e-8:
            continue
        theta = np.angle(lam[idx]) % (2 * math.pi)
        if theta > math.pi:
            continue
        for jdx in range(len(lam)):
            if jdx != idx and jdx not in used and abs(lam[jdx] - np.conj(lam[idx])) < 1e-8:
                used.add(jdx)
                break
        used.add(idx)
        v = vecs[:, idx]
        u1 = np.real(v)
        u2 = np.imag(v)
        u1 /= np.linalg.norm(u1)
        u2 -= (u2 @ u1) * u1
        n2 = np.linalg.norm(u2)
        if n2 < 1e-9:
            raise FactorizationFailure("non-semisimple eigenplane")
        planes.append((theta, u1, u2 / n2))
    # real eigenvalue -1 comes in even multiplicity; pair orthonormalised vectors
    real_neg = [i for i in range(len(lam)) if i not in used and abs(lam[i] + 1) < 1e-8]
    basis = []
    for idx in real_neg:
        u = np.real(vecs[:, idx])
        for b in basis:
            u = u - (u @ b) * b
        n = np.linalg.norm(u)
        if n > 1e-9:
            basis.append(u / n)
    if len(basis) % 2:
        raise FactorizationFailure("odd -1 eigenspace")
    for a in range(0, len(basis), 2):
        planes.append((math.pi, basis[a], basis[a + 1]))
    if len(planes) != 2:
        raise FactorizationFailure("expected two eigenplanes in rank 4")
    planes.sort(key=lambda p: p[0])
    factors = []
    for theta, u1, u2 in planes:
        m = round(theta * h / (2 * math.pi))
        factors.append((m, _plane_bivector(u1, u2, dim)))
    # orient each plane so the rotor product reconstructs W up to sign
    best = None
    for s1 in (1, -1):
        for s2 in (1, -1):
            rotors = []
            for (m, B), s in zip(factors, (s1, s2)):
                ang = s * m * math.pi / h
                R = B.scale(math.sin(ang))
                R.coeffs[0] = R.coeffs[0] + math.cos(ang)
                rotors.append(R)
            P = geometric_product(rotors[0], rotors[1])
            for sign in (1, -1):
                err = max(
                    abs(float(a) - sign * float(b))
                    for a, b in zip(P.coeffs, W.coeffs)
                )
                if best is None or err < best[0]:
                    best = (err, rotors, [s1, s2])
    err, rotors, signs = best
    if err > 1e-9:
        raise FactorizationFailure(f"reconstruction error {err:.3e}")
    out = []
    for (m, B), R, s in zip(factors, rotors, signs):
        out.append(
            RotorFactor(bivector=B, exponent=m, angle=s * m * math.pi / h, rotor=R)
        )
    return out


# -- highest root and coordinates -----------------------------------------------------


def _solve_field(A: list[list], b: list) -> list:
    """Gaussian elimination over a field (GoldenNumber or float)."""
    n = len(A)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            entry = M[r][col]
            nonzero = not entry.is_zero() if isinstance(entry, GoldenNumber) else abs(entry) > 1e-12
            if nonzero:
                piv = r
                break
        if piv is None:
            raise UnrecognizedType("singular Gram matrix")
        M[col], M[piv] = M[piv], M[col]
        inv = M[col][col].inverse() if isinstance(M[col][col], GoldenNumber) else 1.0 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col:
                f = M[r][col]
                zero = f.is_zero() if isinstance(f, GoldenNumber) else abs(f) < 1e-15
                if not zero:
                    M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def simple_coordinates(simples: Sequence[Vector], root: Vector) -> list:
    """Coefficients of a root in the simple-root basis (via the Gram matrix)."""
    k = len(simples)
    G = [[vdot(simples[i], simples[j]) for j in range(k)] for i in range(k)]
    b = [vdot(root, simples[i]) for i in range(k)]
    return _solve_field(G, b)


def _is_connected_cartan(C: np.ndarray) -> bool:
    k = C.shape[0]
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(k):
            if j not in seen and abs(C[i][j]) > 1e-9:
                seen.add(j)
                stack.append(j)
    return len(seen) == k


def highest_root(rs: RootSystem) -> Vector:
    """The unique root maximal in the simple-root partial order."""
    if not _is_connected_cartan(cartan_float(rs.simples)):
        raise NotIrreducible("highest root needs an irreducible system")
    best = None
    best_height = None
    for r in rs.roots:
        coords = simple_coordinates(rs.simples, r)
        fs = [float(c) for c in coords]
        if any(c < -1e-9 for c in fs):
            continue
        height = sum(fs)
        if best_height is None or height > best_height + 1e-9:
            best_height = height
            best = r
    if best is None:
        raise UnrecognizedType("no positive roots found")
    return best


def highest_root_coefficients(rs: RootSystem) -> list[int]:
    coords = simple_coordinates(rs.simples, highest_root(rs))
    out = []
    for c in coords:
        f = float(c)
        i = round(f)
        if abs(f - i) > 1e-9:
            raise UnrecognizedType("non-integer highest-root coefficient")
        out.append(i)
    return out


# -- recognition -----------------------------------------------------------------------


def extract_simples(roots: Sequence[Vector]) -> list[Vector]:
    """Simple system of a root set w.r.t. a fixed generic functional.

    A positive root is simple exactly when its reflection permutes the other
    positive roots; unlike the sum-of-two-positives test this also holds for
    the golden (non-crystallographic) systems.
    """
    if not roots:
        raise UnrecognizedType("empty root set")
    dim = len(roots[0])
    functional = [math.pi ** i for i in range(dim)]
    scale = max(abs(x) for r in roots for x in vfloat(r)) or 1.0

    def fval(r):
        return sum(f * c for f, c in zip(functional, vfloat(r)))

    for r in roots:
        if abs(fval(r)) < 1e-9 * scale:
            raise UnrecognizedType("generic functional hit a root; cannot orient")
    positives = [r for r in roots if fval(r) > 0]
    backend = EXACT if isinstance(roots[0][0], GoldenNumber) else FLOAT
    pos_set = EpsilonSet(backend)
    for p in positives:
        pos_set.add(p)
    simples = []
    for alpha in positives:
        keeps_positives = True
        for beta in positives:
            if beta is alpha:
                continue
            if pos_set.find(reflect_vector(alpha, beta)) is None:
                keeps_positives = False
                break
        if keeps_positives:
            simples.append(alpha)
    return sorted(simples, key=_sort_key)


def coxeter_label_matrix(simples: Sequence[Vector]) -> tuple:
    """Integer matrix of bond orders m_ij (2 for orthogonal pairs, 1 on the
    diagonal).  Length-agnostic, so rescaled copies of a system match."""
    k = len(simples)
    M = [[2] * k for _ in range(k)]
    for i in range(k):
        M[i][i] = 1
    for i, j, m in diagram_edges(simples):
        M[i][j] = M[j][i] = m
    return tuple(tuple(row) for row in M)


def _label_match(C: tuple, D: tuple) -> bool:
    """Match bond-order matrices up to simultaneous node permutation."""
    k = len(C)
    if len(D) != k:
        return False

    def row_profile(M, i):
        return tuple(sorted(M[i]))

    cand = [
        [j for j in range(k) if row_profile(D, j) == row_profile(C, i)]
        for i in range(k)
    ]

    assignment = [-1] * k
    used = [False] * k

    def backtrack(i):
        if i == k:
            return True
        for j in cand[i]:
            if used[j]:
                continue
            ok = all(
                C[i][p] == D[j][assignment[p]] for p in range(i)
            )
            if ok:
                assignment[i] = j
                used[j] = True
                if backtrack(i + 1):
                    return True
                used[j] = False
        return False

    return backtrack(0)


def _component_split(simples: list[Vector]) -> list[list[Vector]]:
    k = len(simples)
    C = cartan_float(simples)
    comp = [-1] * k
    n_comp = 0
    for i in range(k):
        if comp[i] >= 0:
            continue
        stack = [i]
        comp[i] = n_comp
        while stack:
            a = stack.pop()
            for b in range(k):
                if comp[b] < 0 and abs(C[a][b]) > 1e-9:
                    comp[b] = n_comp
                    stack.append(b)
        n_comp += 1
    return [[simples[i] for i in range(k) if comp[i] == c] for c in range(n_comp)]


_IRREDUCIBLE_CANDIDATES = {
    3: ("A3", "B3", "H3"),
    4: ("A4", "D4", "F4", "H4"),
    5: (),
    6: ("D6",),
    8: ("E8",),
}


def _recognize_component(simples: list[Vector]) -> str:
    rank = len(simples)
    if rank == 1:
        return "A1"
    if rank == 2:
        m = diagram_edges(simples)
        n = m[0][2] if m else 2
        return f"I2({n})"
    C = coxeter_label_matrix(simples)
    for name in _IRREDUCIBLE_CANDIDATES.get(rank, ()):
        ref, _ = catalog(name)
        if _label_match(C, coxeter_label_matrix(list(ref))):
            return name
    raise UnrecognizedType(f"rank-{rank} component matches no catalog entry")


def recognize(roots: Sequence[Vector]) -> str:
    """Type label of a root set, e.g. 'D4', 'H3' or 'I2(5)xI2(5)'."""
    simples = extract_simples(list(roots))
    labels = sorted(_recognize_component(c) for c in _component_split(simples))
    return "x".join(labels)
