"""Character theory of the icosahedral rotation group and its double cover.

The A5 and 2I tables live in the golden field, so every decomposition is
exact.  Built-in data is validated on first use: orthogonality relations,
the trace of an explicit 5-fold rotation against the 3D character, and the
spinor character against twice the scalar part of explicit group elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence

from . import cover, polyhedra, roots
from .errors import NonIntegralMultiplicity, NotInvariant, ValidationFailure
from .scalars import EXACT, GoldenNumber, TAU

_G = GoldenNumber
ONE = _G(1)


@dataclass(frozen=True)
class ClassInfo:
    name: str
    size: int
    order: int  # rotation (or spinor) order of a representative


@dataclass(frozen=True)
class CharacterTable:
    group: str
    classes: tuple  # ClassInfo
    irreps: tuple  # (name, dimension)
    values: tuple  # rows: irreps, columns: classes, GoldenNumber entries

    def group_order(self) -> int:
        return sum(c.size for c in self.classes)

    def character(self, irrep: str) -> dict:
        row = self.values[[n for n, _ in self.irreps].index(irrep)]
        return {c.name: v for c, v in zip(self.classes, row)}

    def inner(self, chi: Sequence, psi: Sequence) -> GoldenNumber:
        total = _G(0)
        for c, x, y in zip(self.classes, chi, psi):
            total = total + _G(c.size) * x * y
        return total / _G(self.group_order())


@dataclass(frozen=True)
class RepDecomposition:
    multiplicities: Dict[str, int]

    def dimension(self, table: CharacterTable) -> int:
        dims = dict(table.irreps)
        return sum(m * dims[name] for name, m in self.multiplicities.items())

    def __str__(self):
        return " + ".join(
            f"{m}{name}" for name, m in self.multiplicities.items() if m
        )


_MINUS_TAU = -TAU
_TAU_M1 = TAU - ONE  # 1/tau
_ONE_M_TAU = ONE - TAU

_A5_CLASSES = (
    ClassInfo("1", 1, 1),
    ClassInfo("C2", 15, 2),
    ClassInfo("C3", 20, 3),
    ClassInfo("C5", 12, 5),
    ClassInfo("C5^2", 12, 5),
)

_A5_IRREPS = (("G1", 1), ("G3", 3), ("G3p", 3), ("G4", 4), ("G5", 5))

_A5_VALUES = (
    (ONE, ONE, ONE, ONE, ONE),
    (_G(3), _G(-1), _G(0), TAU, _ONE_M_TAU),
    (_G(3), _G(-1), _G(0), _ONE_M_TAU, TAU),
    (_G(4), _G(0), ONE, _G(-1), _G(-1)),
    (_G(5), ONE, _G(-1), _G(0), _G(0)),
)

# binary icosahedral group: classes keyed by (spinor order, scalar part)
_2I_CLASSES = (
    ClassInfo("1", 1, 1),
    ClassInfo("-1", 1, 2),
    ClassInfo("C4", 30, 4),
    ClassInfo("C6", 20, 6),
    ClassInfo("C3", 20, 3),
    ClassInfo("C10", 12, 10),
    ClassInfo("C5", 12, 5),
    ClassInfo("C10'", 12, 10),
    ClassInfo("C5'", 12, 5),
)

_2I_SCALAR_PARTS = {
    "1": ONE,
    "-1": _G(-1),
    "C4": _G(0),
    "C6": _G(Fraction(1, 2)),
    "C3": _G(Fraction(-1, 2)),
    "C10": TAU * _G(Fraction(1, 2)),
    "C5": _TAU_M1 * _G(Fraction(1, 2)),
    "C10'": _ONE_M_TAU * _G(Fraction(1, 2)),
    "C5'": _MINUS_TAU * _G(Fraction(1, 2)),
}

_2I_IRREPS = (
    ("G1", 1),
    ("G2", 2),
    ("G2p", 2),
    ("G3", 3),
    ("G3p", 3),
    ("G4", 4),
    ("G4p", 4),
    ("G5", 5),
    ("G6", 6),
)

_2I_VALUES = (
    (ONE,) * 9,
    (_G(2), _G(-2), _G(0), ONE, _G(-1), TAU, _TAU_M1, _ONE_M_TAU, _MINUS_TAU),
    (_G(2), _G(-2), _G(0), ONE, _G(-1), _ONE_M_TAU, _MINUS_TAU, TAU, _TAU_M1),
    (_G(3), _G(3), _G(-1), _G(0), _G(0), TAU, _ONE_M_TAU, _ONE_M_TAU, TAU),
    (_G(3), _G(3), _G(-1), _G(0), _G(0), _ONE_M_TAU, TAU, TAU, _ONE_M_TAU),
    (_G(4), _G(4), _G(0), ONE, ONE, _G(-1), _G(-1), _G(-1), _G(-1)),
    (_G(4), _G(-4), _G(0), _G(-1), ONE, ONE, _G(-1), ONE, _G(-1)),
    (_G(5), _G(5), ONE, _G(-1), _G(-1), _G(0), _G(0), _G(0), _G(0)),
    (_G(6), _G(-6), _G(0), _G(0), _G(0), _G(-1), ONE, _G(-1), ONE),
)


def _validate(table: CharacterTable) -> None:
    order = table.group_order()
    dims = [d for _, d in table.irreps]
    if sum(d * d for d in dims) != order:
        raise ValidationFailure(f"{table.group}: dimension sum rule violated")
    k = len(table.irreps)
    for i in range(k):
        for j in range(k):
            expected = ONE if i == j else _G(0)
            if table.inner(table.values[i], table.values[j]) != expected:
                raise ValidationFailure(
                    f"{table.group}: rows {i},{j} fail orthogonality"
                )


@lru_cache(maxsize=None)
def character_table(group: str) -> CharacterTable:
    if group == "A5":
        table = CharacterTable("A5", _A5_CLASSES, _A5_IRREPS, _A5_VALUES)
        _validate(table)
        _validate_a5_traces(table)
        return table
    if group == "2I":
        table = CharacterTable("2I", _2I_CLASSES, _2I_IRREPS, _2I_VALUES)
        _validate(table)
        _validate_2i_spinors(table)
        return table
    raise ValidationFailure(f"no exact golden table for {group!r}; see mckay for 2T/2O/Cn/Dicn")


@lru_cache(maxsize=1)
def _a5_class_representatives():
    """Representative rotation matrix per A5 class, keyed by (order, trace)."""
    mats = rotation_matrices()
    reps = {}
    backend = EXACT
    for m in mats:
        order = _matrix_order(m)
        trace = m[0][0] + m[1][1] + m[2][2]
        key = (order, backend.key(trace))
        reps.setdefault(key, m)
    return reps


def _matrix_order(m) -> int:
    size = len(m)
    ident = tuple(
        tuple(_G(1) if i == j else _G(0) for j in range(size)) for i in range(size)
    )
    p = m
    n = 1
    while p != ident:
        p = cover.matrix_mul(p, m)
        n += 1
        if n > 120:
            raise ValidationFailure("runaway matrix order")
    return n


@lru_cache(maxsize=1)
def rotation_matrices():
    return tuple(polyhedra.rotation_group())


def _a5_class_of_matrix(m) -> str:
    order = _matrix_order(m)
    trace = m[0][0] + m[1][1] + m[2][2]
    if order == 1:
        return "1"
    if order == 2:
        return "C2"
    if order == 3:
        return "C3"
    # 5-fold: trace tau for the 2pi/5 turn, 1 - tau for the 4pi/5 turn
    return "C5" if trace == TAU else "C5^2"


def _validate_a5_traces(table: CharacterTable) -> None:
    chi3 = table.character("G3")
    for m in rotation_matrices():
        cls = _a5_class_of_matrix(m)
        trace = m[0][0] + m[1][1] + m[2][2]
        if chi3[cls] != trace:
            raise ValidationFailure("A5 3D character disagrees with matrix traces")


def _validate_2i_spinors(table: CharacterTable) -> None:
    simples, backend = roots.catalog("H3")
    rs = roots.close(simples, backend, name="H3")
    spin = cover.spin_group(cover.generate_pin(rs.roots))
    chi2 = table.character("G2")
    scalar_to_class = {}
    for info in table.classes:
        sp = _2I_SCALAR_PARTS[info.name]
        scalar_to_class[(info.order, backend.key(sp))] = info.name
    counts = {info.name: 0 for info in table.classes}
    for r in spin.elements:
        sp = r.scalar_part()
        order = _spinor_order(r)
        cls = scalar_to_class.get((order, backend.key(sp)))
        if cls is None:
            raise ValidationFailure(f"2I element with unexpected (order, scalar) {(order, sp)}")
        counts[cls] += 1
        if chi2[cls] != sp + sp:
            raise ValidationFailure("2I spinor character is not twice the scalar part")
    for info in table.classes:
        if counts[info.name] != info.size:
            raise ValidationFailure("2I class sizes disagree with explicit spinors")


def _spinor_order(r) -> int:
    from .multivector import Multivector, geometric_product

    ident = Multivector.scalar(r.dim, 1, r.backend)
    p = r
    n = 1
    while p != ident:
        p = geometric_product(p, r)
        n += 1
        if n > 240:
            raise ValidationFailure("runaway spinor order")
    return n


# -- class functions on vertex sets --------------------------------------------------


def permutation_character(vertices: Sequence) -> dict:
    """Fixed-vertex counts per A5 class; raises if the set is not invariant."""
    verts = [tuple(_G.coerce(c) for c in v) for v in vertices]
    from .scalars import EpsilonSet

    members = EpsilonSet(EXACT)
    for v in verts:
        members.add(v)
    for m in rotation_matrices():
        for v in verts:
            if members.find(cover.matrix_apply(m, v)) is None:
                raise NotInvariant("vertex set is not icosahedrally invariant")
    chi = {}
    for key, m in _a5_class_representatives().items():
        cls = _a5_class_of_matrix(m)
        fixed = sum(
            1 for v in verts if all(a == b for a, b in zip(cover.matrix_apply(m, v), v))
        )
        chi[cls] = _G(fixed)
    return chi


def displacement_character(perm_character: dict) -> dict:
    """Pointwise product with the standard 3D rotation character."""
    chi3 = character_table("A5").character("G3")
    return {cls: perm_character[cls] * chi3[cls] for cls in perm_character}


def decompose(chi: dict, table: CharacterTable) -> RepDecomposition:
    """Multiplicities via the class-weighted inner product, exactly."""
    order = table.group_order()
    mult = {}
    for (name, dim), row in zip(table.irreps, table.values):
        total = _G(0)
        for info, val in zip(table.classes, row):
            total = total + _G(info.size) * chi[info.name] * val
        q = total / _G(order)
        if q.b != 0 or q.a.denominator != 1 or q.a < 0:
            raise NonIntegralMultiplicity(f"non-integral multiplicity for {name}: {q}")
        mult[name] = int(q.a)
    return RepDecomposition(multiplicities=mult)


def solid_decomposition(solid_name: str) -> RepDecomposition:
    solid = polyhedra.catalog_solid(solid_name)
    chi = permutation_character(solid.vertices)
    return decompose(displacement_character(chi), character_table("A5"))


def character_table_csv(table: CharacterTable) -> str:
    lines = ["irrep," + ",".join(c.name for c in table.classes)]
    lines.append("size," + ",".join(str(c.size) for c in table.classes))
    for (name, _), row in zip(table.irreps, table.values):
        lines.append(name + "," + ",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
