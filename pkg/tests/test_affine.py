import math
import random
from fractions import Fraction

import numpy as np
import pytest

from rootforge import affine, polyhedra, roots
from rootforge.errors import UnknownName, ZeroVector
from rootforge.roots import vadd, vscale, vsub
from rootforge.scalars import GoldenNumber, TAU

G = GoldenNumber
rng = random.Random(3141)


def rand_golden_vec(dim):
    return tuple(
        G(Fraction(rng.randint(-12, 12), rng.randint(1, 4)),
          Fraction(rng.randint(-12, 12), rng.randint(1, 4)))
        for _ in range(dim)
    )


def test_affine_reflection_of_origin():
    alpha = (G(1), G(0), G(0))
    lam = (G(0), G(0), G(0))
    assert affine.affine_reflection(alpha, lam) == alpha


def test_affine_reflection_is_involution():
    rs = roots.catalog_system("H3")
    alpha = roots.highest_root(rs)
    for _ in range(25):
        lam = rand_golden_vec(3)
        twice = affine.affine_reflection(alpha, affine.affine_reflection(alpha, lam))
        assert twice == lam


def test_reflection_pair_is_translation_by_highest_root():
    for name in ("H3", "E8"):
        rs = roots.catalog_system(name)
        alpha = roots.highest_root(rs)
        for _ in range(100):
            lam = rand_golden_vec(rs.dim)
            assert affine.translation_of(alpha, lam) == alpha


def test_affine_reflection_rejects_zero():
    with pytest.raises(ZeroVector):
        affine.affine_reflection((G(0), G(0), G(0)), (G(1), G(0), G(0)))


def test_extend_generic_translation_is_maximal():
    seed = polyhedra.orbit(polyhedra.ICOSAHEDRON_SEED)
    t = (G(Fraction(1, 5)), G(Fraction(9, 7)), G(3, 1))  # no axis symmetry
    array = affine.extend(seed, t)
    assert len(array) == 12 * 60 + 12
    assert not array.degenerate


def test_extend_axis_translation_is_degenerate():
    seed = polyhedra.orbit(polyhedra.ICOSAHEDRON_SEED)
    t = polyhedra.ICOSAHEDRON_SEED  # vertex-length translation along a 5-fold axis
    array = affine.extend(seed, t)
    assert array.degenerate
    assert len(array) < 12 * 60 + 12


def test_extend_zero_translation_returns_seed():
    seed = polyhedra.orbit(polyhedra.ICOSAHEDRON_SEED)
    array = affine.extend(seed, (G(0), G(0), G(0)))
    assert len(array) == 12
    assert array.degenerate


def test_extend_output_is_group_invariant():
    seed = polyhedra.orbit(polyhedra.DODECAHEDRON_SEED)
    t = (G(1), G(2), G(0, 1))
    array = affine.extend(seed, t)
    from rootforge.cover import matrix_apply
    from rootforge.scalars import EXACT, EpsilonSet

    members = EpsilonSet(EXACT)
    for p in array.points:
        members.add(p)
    for m in affine._icosahedral_rotations_exact():
        for p in array.points[:: max(1, len(array.points) // 60)]:
            assert members.find(matrix_apply(m, p)) is not None


@pytest.mark.parametrize("source,target,rank", [("A4", "H2", 2), ("D6", "H3", 3), ("E8", "H4", 4)])
def test_affine_root_projection(source, target, rank):
    folding = affine.project_affine_root(source)
    assert folding.target == target
    assert len(folding.affine_coefficients) == rank
    # the folded Cartan reconstructs the golden target Cartan over Z[tau]
    simples, backend = roots.catalog(source)
    src_cartan = roots.cartan_matrix(simples)
    tgt = affine._golden_cartan(target)
    plain = {}
    taued = {}
    for i, u, c in folding.pairing:
        if c == G(1):
            plain[u] = i
        else:
            taued[u] = i
    for u in range(rank):
        for v in range(rank):
            reconstructed = G(src_cartan[plain[u]][plain[v]].a) + TAU * G(
                src_cartan[plain[u]][taued[v]].a
            )
            assert reconstructed == tgt[u][v]


def test_e8_affine_marks_feed_the_folding():
    rs = roots.catalog_system("E8")
    assert roots.highest_root_coefficients(rs) == [2, 3, 4, 5, 6, 4, 2, 3]
    folding = affine.project_affine_root("E8")
    total = G(0)
    for c in folding.affine_coefficients:
        total = total + c
    # pushing integer marks through (1, tau) multipliers keeps Z[tau] integrality
    for c in folding.affine_coefficients:
        assert c.a.denominator == 1 and c.b.denominator == 1


def test_d6_translation_lies_on_symmetry_axis():
    folding = affine.project_affine_root("D6")
    assert folding.translation is not None
    assert affine.axis_class(folding.translation) in {"2fold", "5fold"}


def test_projection_unknown_source():
    with pytest.raises(UnknownName):
        affine.project_affine_root("D4")


def test_c60_onion_counts(onion_c60):
    assert [s.atom_count for s in onion_c60] == [60, 240, 540]
    assert [s.t_number for s in onion_c60] == [3, 12, 27]


def test_c80_onion_counts(onion_c80):
    assert [s.atom_count for s in onion_c80] == [80, 180, 320]
    assert [s.t_number for s in onion_c80] == [4, 9, 16]


def test_onion_shells_are_valid_cages(onion_c60, onion_c80):
    for shell in list(onion_c60) + list(onion_c80):
        atoms = np.array(shell.atoms)
        res = affine.validate_shell(atoms)
        assert res is not None
        _, _, spread = res
        assert spread <= 0.05
        assert shell.atom_count == 20 * shell.t_number


def test_onion_translations_are_recorded(onion_c60, onion_c80):
    for shell in onion_c60[1:]:
        assert shell.translation == pytest.approx(math.sqrt(2 + float(TAU)), abs=1e-5)
    for shell in onion_c80:
        assert shell.translation == pytest.approx(math.sqrt(2 + float(TAU)), abs=1e-5)


def test_validity_accepts_the_start_cages():
    c60 = polyhedra.catalog_solid("truncated_icosahedron").float_vertices()
    assert affine.validate_shell(c60) is not None
    dod = polyhedra.catalog_solid("dodecahedron").float_vertices()
    assert affine.validate_shell(dod) is not None


def test_exactly_one_surviving_translation_per_step(onion_c60):
    atoms = np.array(onion_c60[0].atoms)
    res = affine.validate_shell(atoms)
    winners = affine.surviving_translations(atoms, res[1])
    assert len(winners) == 1
    t, size = winners[0]
    assert size == 240
