"""Root-system induction: 3D systems to 4D via spinors, and H3 to E8.

The even (spinor) part of the Pin double cover of a 3D root system, read as
4D coordinates (a0, a23, a31, a12), is itself a root system: the double
cover supplies axiom 1, closure of the spinor group supplies axiom 2.

For E8 the full 240-element Pin cover of H3 is flattened through the
quaternionic (even) coordinates: an odd pinor A factors through the central
pseudoscalar as A = I R, and its image is tau times the image of R.  Writing
each golden coordinate a + b*tau as the rational pair (a, b) turns the 240
pinors into 240 rational 8D vectors whose plain dot product is exactly the
rational part of the golden quaternion form; scaled so the minimal norm is
2, this is the E8 root system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cover, roots
from .errors import DimensionMismatch, ReducedFormDegenerate
from .multivector import Multivector, geometric_product, versor_parity
from .roots import RootSystem, close, recognize, vdot, verify_axioms
from .scalars import EXACT, GoldenNumber, TAU

# blade flattening order: 1, e1, e2, e3, e12, e23, e31, e123
_BLADE_ORDER = (0b000, 0b001, 0b010, 0b100, 0b011, 0b110, 0b101, 0b111)


@dataclass(frozen=True)
class ReducedVector8:
    """A Cl(3) pinor flattened for the E8 construction.

    blades   -- its 8 golden blade coefficients in the fixed order above;
    quaternion -- even-part coordinates (a0, a23, a31, a12), with the odd
                  part transferred through the pseudoscalar and scaled by tau;
    rational8 -- the quaternion coordinates split into rational pairs (a, b).
    """

    blades: tuple
    quaternion: tuple
    rational8: tuple


def spinor_coordinates(r: Multivector) -> tuple:
    """(a0, a1, a2, a3) of an even element a0 + a1 e23 + a2 e31 + a3 e12."""
    c = r.coeffs
    return (c[0], c[0b110], c[0b101], c[0b011])


def induce_4d(rs3: RootSystem) -> RootSystem:
    """4D root system induced by the spinor group of a 3D root system."""
    if rs3.dim != 3:
        raise DimensionMismatch("spinor induction starts from a 3D system")
    pin = cover.generate_pin(rs3.roots)
    spin = cover.spin_group(pin)
    points = [spinor_coordinates(r) for r in spin.elements]
    rs4 = RootSystem(
        dim=4,
        backend=spin.backend,
        simples=tuple(roots.extract_simples(points)),
        roots=tuple(sorted(points, key=roots._sort_key)),
        name=None,
    )
    verify_axioms(rs4)  # failure here would be an implementation bug
    label = recognize(rs4.roots)
    return RootSystem(
        dim=4,
        backend=rs4.backend,
        simples=rs4.simples,
        roots=rs4.roots,
        name=label,
    )


def induce_2d_selfdual(rs2: RootSystem) -> tuple:
    """Spinor (scalar + e12) points of a rank-2 system; congruent to the input."""
    if rs2.dim != 2:
        raise DimensionMismatch("self-dual induction is the rank-2 case")
    pin = cover.generate_pin(rs2.roots)
    spin = cover.spin_group(pin)
    pts = tuple(
        sorted(((r.coeffs[0], r.coeffs[0b11]) for r in spin.elements), key=roots._sort_key)
    )
    return pts


# -- E8 ---------------------------------------------------------------------------


def _pseudoscalar_transfer(a: Multivector) -> Multivector:
    """Even part of an odd pinor A through A = I R, i.e. R = -I A."""
    i3 = Multivector.basis_blade(3, 0b111, a.backend)
    return -geometric_product(i3, a)


def reduced_vector(pinor: Multivector) -> ReducedVector8:
    blades = tuple(pinor.coeffs[m] for m in _BLADE_ORDER)
    if versor_parity(pinor) == 0:
        quat = spinor_coordinates(pinor)
    else:
        quat = tuple(TAU * c for c in spinor_coordinates(_pseudoscalar_transfer(pinor)))
    rational8 = tuple(
        part for c in quat for part in (c.a, c.b)
    )
    return ReducedVector8(blades=blades, quaternion=quat, rational8=rational8)


def reduced_inner(x: ReducedVector8, y: ReducedVector8) -> Fraction:
    """Rational part of the golden quaternion form; equals the plain dot
    product of the rational8 coordinates."""
    total = GoldenNumber(0)
    for a, b in zip(x.quaternion, y.quaternion):
        total = total + a * b
    return total.a


def unreduced_inner(x: ReducedVector8, y: ReducedVector8) -> GoldenNumber:
    """Golden Euclidean form on the raw blade coefficients."""
    total = GoldenNumber(0)
    for a, b in zip(x.blades, y.blades):
        total = total + a * b
    return total


@dataclass(frozen=True)
class E8Report:
    system: RootSystem
    vectors: tuple  # ReducedVector8, aligned with pin element order
    even_copy: RootSystem
    odd_copy: RootSystem


def e8_from_h3() -> E8Report:
    """E8 as the reduced image of the 240 pinors of H3."""
    h3_simples, backend = roots.catalog("H3")
    rs3 = close(h3_simples, backend, name="H3")
    pin = cover.generate_pin(rs3.roots)
    if len(pin) != 240:
        raise ReducedFormDegenerate(f"expected 240 pinors, got {len(pin)}")
    reduced = [reduced_vector(p) for p in pin.elements]

    # with the generic inner product the even and odd pinors form two
    # mutually orthogonal copies of H4
    even_pts = [
        spinor_coordinates(p) for p in pin.elements if versor_parity(p) == 0
    ]
    odd_pts = [
        tuple(p.coeffs[m] for m in (0b001, 0b010, 0b100, 0b111))
        for p in pin.elements
        if versor_parity(p) == 1
    ]

    def _as_system(points):
        pts = tuple(sorted(points, key=roots._sort_key))
        return RootSystem(
            dim=4,
            backend=EXACT,
            simples=tuple(roots.extract_simples(list(pts))),
            roots=pts,
            name=recognize(pts),
        )

    even_copy = _as_system(even_pts)
    odd_copy = _as_system(odd_pts)

    # reduced rational coordinates; norms must all agree, scaled to 2
    vectors = tuple(tuple(GoldenNumber(f) for f in rv.rational8) for rv in reduced)
    norms = {vdot(v, v) for v in vectors}
    if len(norms) != 1:
        raise ReducedFormDegenerate(f"unequal reduced norms {sorted(norms)}")
    norm = norms.pop()
    if norm.is_zero():
        raise ReducedFormDegenerate("reduced form vanished")
    scale = Fraction(2) / norm.a
    pts = tuple(sorted(vectors, key=roots._sort_key))
    system = RootSystem(
        dim=8,
        backend=EXACT,
        simples=tuple(roots.extract_simples(list(pts))),
        roots=pts,
        name="E8",
        form_scale=scale,
    )
    return E8Report(system=system, vectors=tuple(reduced), even_copy=even_copy, odd_copy=odd_copy)
