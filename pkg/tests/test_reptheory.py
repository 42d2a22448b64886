from fractions import Fraction

import pytest

from rootforge import polyhedra, reptheory
from rootforge.errors import NonIntegralMultiplicity, NotInvariant, ValidationFailure
from rootforge.scalars import GoldenNumber, TAU

G = GoldenNumber


def test_a5_dimensions():
    table = reptheory.character_table("A5")
    assert [d for _, d in table.irreps] == [1, 3, 3, 4, 5]
    assert sum(d * d for _, d in table.irreps) == 60


def test_2i_dimensions():
    table = reptheory.character_table("2I")
    dims = [d for _, d in table.irreps]
    assert dims == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert sum(dims) == 30
    assert sum(d * d for d in dims) == 120
    assert len(table.classes) == 9


def test_tables_are_orthogonal():
    for group in ("A5", "2I"):
        table = reptheory.character_table(group)
        for i in range(len(table.irreps)):
            for j in range(len(table.irreps)):
                want = G(1) if i == j else G(0)
                assert table.inner(table.values[i], table.values[j]) == want


def test_chi3_on_five_fold_class_is_tau():
    table = reptheory.character_table("A5")
    assert table.character("G3")["C5"] == TAU
    assert table.character("G3")["C5^2"] == G(1) - TAU


def test_unknown_table():
    with pytest.raises(ValidationFailure):
        reptheory.character_table("S5")


def test_permutation_character_icosahedron():
    chi = reptheory.permutation_character(polyhedra.catalog_solid("icosahedron").vertices)
    assert chi == {"1": G(12), "C2": G(0), "C3": G(0), "C5": G(2), "C5^2": G(2)}


def test_permutation_character_dodecahedron():
    chi = reptheory.permutation_character(polyhedra.catalog_solid("dodecahedron").vertices)
    assert chi == {"1": G(20), "C2": G(0), "C3": G(2), "C5": G(0), "C5^2": G(0)}


def test_permutation_character_free_orbit():
    verts = polyhedra.orbit((G(1), G(2), G(3)))
    chi = reptheory.permutation_character(verts)
    assert chi == {"1": G(60), "C2": G(0), "C3": G(0), "C5": G(0), "C5^2": G(0)}


def test_permutation_character_requires_invariance():
    verts = list(polyhedra.catalog_solid("icosahedron").vertices)[:-1]
    with pytest.raises(NotInvariant):
        reptheory.permutation_character(verts)


def test_displacement_character_values():
    icosa = reptheory.permutation_character(polyhedra.catalog_solid("icosahedron").vertices)
    disp = reptheory.displacement_character(icosa)
    assert disp["1"] == G(36)  # 3V on the identity
    assert disp["C5"] == G(2) * TAU
    dode = reptheory.permutation_character(polyhedra.catalog_solid("dodecahedron").vertices)
    disp2 = reptheory.displacement_character(dode)
    assert disp2["C3"] == G(0)  # two fixed points times a vanishing character


FIVE_DECOMPOSITIONS = [
    ("icosahedron", {"G1": 1, "G3": 3, "G3p": 1, "G4": 2, "G5": 3}),
    ("dodecahedron", {"G1": 1, "G3": 3, "G3p": 3, "G4": 4, "G5": 5}),
    ("icosidodecahedron", {"G1": 1, "G3": 5, "G3p": 5, "G4": 6, "G5": 7}),
    ("rhombic_triacontahedron", {"G1": 2, "G3": 6, "G3p": 4, "G4": 6, "G5": 8}),
    ("MS2_tiling_vertices", {"G1": 8, "G3": 24, "G3p": 22, "G4": 30, "G5": 38}),
]


@pytest.mark.parametrize("name,expect", FIVE_DECOMPOSITIONS)
def test_printed_decompositions(name, expect):
    dec = reptheory.solid_decomposition(name)
    assert dec.multiplicities == expect
    table = reptheory.character_table("A5")
    solid = polyhedra.catalog_solid(name)
    assert dec.dimension(table) == 3 * solid.vertex_count


def test_free_orbit_multiple_rule():
    # a free set of 20T vertices decomposes as T copies of the regular
    # pattern, total dimension 60T; the truncated icosahedron is the T=3 case
    table = reptheory.character_table("A5")
    base = {"G1": 1, "G3": 3, "G3p": 3, "G4": 4, "G5": 5}
    for verts in (
        polyhedra.catalog_solid("truncated_icosahedron").vertices,
        polyhedra.orbit((G(1), G(2), G(3))) + polyhedra.orbit((G(2), G(1), G(5))),
    ):
        t = len(verts) // 20
        chi = reptheory.permutation_character(verts)
        dec = reptheory.decompose(reptheory.displacement_character(chi), table)
        assert dec.multiplicities == {k: t * v for k, v in base.items()}
        assert dec.dimension(table) == 60 * t


def test_multiplicities_independent_of_generic_seed_choice():
    table = reptheory.character_table("A5")
    alt = (
        polyhedra.orbit(polyhedra.ICOSAHEDRON_SEED)
        + polyhedra.orbit(polyhedra.DODECAHEDRON_SEED)
        + polyhedra.orbit((G(3), G(1), G(Fraction(1, 2), 1)))
        + polyhedra.orbit((G(1), G(5), G(2, 2)))
    )
    assert len(alt) == 152
    chi = reptheory.permutation_character(alt)
    dec = reptheory.decompose(reptheory.displacement_character(chi), table)
    assert dec.multiplicities == {"G1": 8, "G3": 24, "G3p": 22, "G4": 30, "G5": 38}


def test_swapping_the_3d_irreps_permutes_multiplicities():
    # using the Galois-partner 3D representation swaps G3 and G3p throughout
    table = reptheory.character_table("A5")
    chi = reptheory.permutation_character(polyhedra.catalog_solid("icosahedron").vertices)
    chi3p = table.character("G3p")
    swapped = {cls: chi[cls] * chi3p[cls] for cls in chi}
    dec = reptheory.decompose(swapped, table)
    assert dec.multiplicities == {"G1": 1, "G3": 1, "G3p": 3, "G4": 2, "G5": 3}


def test_decompose_rejects_inconsistent_character():
    table = reptheory.character_table("A5")
    bad = {"1": G(1), "C2": G(1), "C3": G(0), "C5": G(0), "C5^2": G(0)}
    with pytest.raises(NonIntegralMultiplicity):
        reptheory.decompose(bad, table)


def test_character_table_csv():
    csv = reptheory.character_table_csv(reptheory.character_table("A5"))
    lines = csv.strip().splitlines()
    assert lines[0].startswith("irrep,")
    assert lines[1].startswith("size,")
    assert len(lines) == 2 + 5
