"""Pin/Spin double covers as explicit versor groups, plus matrix images.

A pinor group is the multiplicative closure of the unit root vectors of a
root system inside the Clifford algebra.  Both signs +-V are kept as distinct
elements: the sign is the whole point of the double cover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .errors import ClosureBudgetExceeded, NotUnitRotor
from .multivector import Multivector, geometric_product, versor_parity
from .roots import Vector, vdot, vfloat
from .scalars import EXACT, FLOAT, GoldenNumber

DEFAULT_GROUP_CAP = 10_000


@dataclass(frozen=True)
class PinorGroup:
    dim: int
    backend: object
    elements: tuple  # Multivectors, closed under product and reversal
    generators: tuple  # unit root vectors as Multivectors

    def __len__(self):
        return len(self.elements)

    def even_elements(self) -> tuple:
        return tuple(v for v in self.elements if versor_parity(v) == 0)


@dataclass(frozen=True)
class ConjugacyClasses:
    classes: tuple  # (representative, size, element_order)

    def sizes(self) -> tuple:
        return tuple(size for _, size, _ in self.classes)

    def __len__(self):
        return len(self.classes)


def _unitize_roots(roots: Sequence[Vector]):
    """Unit root vectors as multivectors; exact only if already unit length."""
    exact_ok = all(isinstance(r[0], GoldenNumber) for r in roots) and all(
        vdot(r, r) == GoldenNumber(1) for r in roots
    )
    out = []
    if exact_ok:
        for r in roots:
            out.append(Multivector.vector(list(r), EXACT))
        return out, EXACT
    for r in roots:
        rf = vfloat(r)
        n = math.sqrt(sum(c * c for c in rf))
        out.append(Multivector.vector([c / n for c in rf], FLOAT))
    return out, FLOAT


def generate_pin(roots: Sequence[Vector], cap: int = DEFAULT_GROUP_CAP) -> PinorGroup:
    """Multiplicative closure of the unit root vectors: the Pin double cover."""
    gens, backend = _unitize_roots(roots)
    seen: dict = {}
    order = []
    frontier = []
    for g in gens:
        k = g.key()
        if k not in seen:
            seen[k] = g
            order.append(g)
            frontier.append(g)
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = geometric_product(v, g)
                k = w.key()
                if k not in seen:
                    seen[k] = w
                    order.append(w)
                    new.append(w)
        if len(order) > cap:
            raise ClosureBudgetExceeded(f"pinor closure exceeded {cap} elements")
        frontier = new
    dim = gens[0].dim
    elements = tuple(sorted(order, key=lambda m: m.key() if backend.is_exact else tuple(
        round(backend.to_float(c), 9) + 0.0 for c in m.coeffs)))
    return PinorGroup(dim=dim, backend=backend, elements=elements, generators=tuple(gens))


def spin_group(pin: PinorGroup) -> PinorGroup:
    """Even subgroup (the Spin double cover of the rotation subgroup)."""
    return PinorGroup(
        dim=pin.dim,
        backend=pin.backend,
        elements=pin.even_elements(),
        generators=pin.generators,
    )


@lru_cache(maxsize=None)
def pin_group_of(catalog_name: str) -> PinorGroup:
    """Pin double cover of a catalog root system, cached."""
    from .roots import catalog_system

    return generate_pin(catalog_system(catalog_name).roots)


def spinor_to_matrix(rotor: Multivector):
    """Orthogonal matrix of the sandwich action R x ~R on basis vectors.

    Exact golden entries on the exact backend, floats otherwise.  R and -R
    map to the same matrix.
    """
    be = rotor.backend
    norm = geometric_product(rotor, rotor.reverse())
    if be.is_exact:
        if norm.scalar_part() != GoldenNumber(1) or any(
            not c.is_zero() for c in norm.coeffs[1:]
        ):
            raise NotUnitRotor("rotor must satisfy R ~R = 1")
    else:
        if abs(be.to_float(norm.scalar_part()) - 1.0) > 1e-6:
            raise NotUnitRotor("rotor must satisfy R ~R = 1")
    n = rotor.dim
    k = versor_parity(rotor)
    cols = []
    for j in range(n):
        ej = Multivector.basis_blade(n, 1 << j, be)
        img = geometric_product(geometric_product(rotor, ej), rotor.reverse())
        if k & 1:
            img = -img
        cols.append(img.vector_components())
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


# -- generic finite-group helpers -----------------------------------------------


def conjugacy_partition(
    elements: Sequence,
    mult: Callable,
    inv: Callable,
    key: Callable,
) -> ConjugacyClasses:
    """Full class partition by conjugation orbit search."""
    index = {key(e): e for e in elements}
    identity = None
    for e in elements:
        if all(key(mult(e, f)) == key(f) for f in elements[: min(3, len(elements))]):
            if all(key(mult(e, f)) == key(f) for f in elements):
                identity = e
                break
    if identity is None:
        raise ValueError("no identity in element list")

    def element_order(g):
        p = g
        n = 1
        while key(p) != key(identity):
            p = mult(p, g)
            n += 1
        return n

    unassigned = dict(index)
    classes = []
    for e in elements:
        k = key(e)
        if k not in unassigned:
            continue
        orbit = {}
        for h in elements:
            c = mult(mult(h, e), inv(h))
            orbit[key(c)] = c
        for ck in orbit:
            unassigned.pop(ck, None)
        rep = min(orbit.values(), key=key)
        classes.append((rep, len(orbit), element_order(rep)))
    classes.sort(key=lambda t: (t[2], -t[1], key(t[0])))
    return ConjugacyClasses(classes=tuple(classes))


def conjugacy_classes(group: PinorGroup) -> ConjugacyClasses:
    """Conjugacy classes of a pinor group."""
    return conjugacy_partition(
        list(group.elements),
        mult=geometric_product,
        inv=lambda v: v.reverse(),
        key=lambda v: v.key(),
    )


# -- exact matrix groups ----------------------------------------------------------


def matrix_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), start=GoldenNumber(0))
              if isinstance(a[0][0], GoldenNumber)
              else sum(a[i][k] * b[k][j] for k in range(n))
              for j in range(n))
        for i in range(n)
    )


def matrix_apply(m, v: Vector) -> Vector:
    n = len(m)
    return tuple(
        sum((m[i][j] * v[j] for j in range(n)), start=GoldenNumber(0))
        if isinstance(m[0][0], GoldenNumber)
        else sum(m[i][j] * v[j] for j in range(n))
        for i in range(n)
    )


def matrix_transpose(m):
    n = len(m)
    return tuple(tuple(m[j][i] for j in range(n)) for i in range(n))


def matrix_key(m, backend):
    return tuple(backend.key(c) for row in m for c in row)


def matrix_det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def reflection_matrix_exact(alpha: Vector):
    """I - 2 a a^T / (a|a) over the coordinate scalars of alpha."""
    n = len(alpha)
    exact = isinstance(alpha[0], GoldenNumber)
    den = vdot(alpha, alpha)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            diag = (GoldenNumber(1) if exact else 1.0) if i == j else (GoldenNumber(0) if exact else 0.0)
            num = alpha[i] * alpha[j]
            term = (num + num) / den if exact else 2.0 * num / den
            row.append(diag - term)
        rows.append(tuple(row))
    return tuple(rows)


def matrix_group(generators, backend, cap: int = DEFAULT_GROUP_CAP):
    """Multiplicative closure of matrices, deterministic ordering."""
    seen = {}
    order = []
    frontier = []
    for g in generators:
        k = matrix_key(g, backend)
        if k not in seen:
            seen[k] = g
            order.append(g)
            frontier.append(g)
    while frontier:
        new = []
        for m in frontier:
            for g in generators:
                w = matrix_mul(m, g)
                k = matrix_key(w, backend)
                if k not in seen:
                    seen[k] = w
                    order.append(w)
                    new.append(w)
        if len(order) > cap:
            raise ClosureBudgetExceeded(f"matrix closure exceeded {cap}")
        frontier = new
    return sorted(order, key=lambda m: matrix_key(m, backend))


def reflection_group(simples: Sequence[Vector], backend=None, cap: int = DEFAULT_GROUP_CAP):
    """Full reflection group W as explicit matrices from simple reflections."""
    if backend is None:
        backend = EXACT if isinstance(simples[0][0], GoldenNumber) else FLOAT
    gens = [reflection_matrix_exact(s) for s in simples]
    return matrix_group(gens, backend, cap)


def rotation_subgroup(matrices, backend):
    """Determinant +1 part (3x3 only)."""
    out = []
    for m in matrices:
        d = matrix_det3(m)
        if backend.eq(d, GoldenNumber(1) if backend.is_exact else 1.0):
            out.append(m)
    return out


def pinor_class_csv(group: PinorGroup, classes: ConjugacyClasses) -> str:
    """CSV rows (size, element order, trace of the matrix image, scalar part)."""
    lines = ["size,order,trace,scalar_part"]
    for rep, size, order in classes.classes:
        be = group.backend
        k = versor_parity(rep)
        # trace of the orthogonal image (sandwich action with parity sign)
        n = rep.dim
        tr = 0.0
        for j in range(n):
            ej = Multivector.basis_blade(n, 1 << j, be)
            img = geometric_product(geometric_product(rep, ej), rep.reverse())
            if k & 1:
                img = -img
            tr += be.to_float(img.vector_components()[j])
        sp = be.to_float(rep.scalar_part())
        lines.append(f"{size},{order},{tr:.12g},{sp:.12g}")
    return "\n".join(lines) + "\n"
