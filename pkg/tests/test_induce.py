import math
from fractions import Fraction

import pytest

from rootforge import cover, induce, roots
from rootforge.errors import DimensionMismatch
from rootforge.scalars import EXACT, GoldenNumber

G = GoldenNumber


@pytest.mark.parametrize("name,target,count", [("A3", "D4", 24), ("B3", "F4", 48), ("H3", "H4", 120)])
def test_trinity_induction(induced_4d, name, target, count):
    rs4 = induced_4d[name]
    assert rs4.name == target
    assert len(rs4) == count


@pytest.mark.parametrize("n", range(3, 9))
def test_dihedral_doubling(n):
    rs3 = roots.catalog_system(f"A1xI2({n})")
    rs4 = induce.induce_4d(rs3)
    assert rs4.name == f"I2({n})xI2({n})"
    assert len(rs4) == 4 * n


def test_orthogonal_frame_gives_sixteen_cell():
    e = lambda i: tuple(G(1 if j == i else 0) for j in range(3))
    rs3 = roots.close([e(0), e(1), e(2)], EXACT)
    rs4 = induce.induce_4d(rs3)
    assert len(rs4) == 8
    assert rs4.name == "A1xA1xA1xA1"


def test_induced_count_is_spin_order(induced_4d):
    for name, spin_order in (("A3", 24), ("B3", 48), ("H3", 120)):
        assert len(induced_4d[name]) == spin_order
        pin = cover.pin_group_of(name)
        assert len(cover.spin_group(pin)) == spin_order


def test_induction_needs_rank_three():
    with pytest.raises(DimensionMismatch):
        induce.induce_4d(roots.catalog_system("I2(4)"))


def _angle_gaps(points):
    angles = sorted(
        math.atan2(float(p[1]), float(p[0])) % (2 * math.pi) for p in points
    )
    gaps = [
        round((b - a) % (2 * math.pi), 9)
        for a, b in zip(angles, angles[1:] + angles[:1])
    ]
    return sorted(gaps)


@pytest.mark.parametrize("n", [2, 4, 5, 7])
def test_2d_self_duality(n):
    rs2 = roots.catalog_system(f"I2({n})")
    pts = induce.induce_2d_selfdual(rs2)
    assert len(pts) == 2 * n
    # congruent to the input system up to rotation and scale
    assert _angle_gaps(pts) == _angle_gaps(rs2.roots)


def test_e8_count_and_label(e8_report):
    assert len(e8_report.system) == 240
    assert e8_report.system.name == "E8"


def test_e8_unreduced_form_splits_into_two_h4_copies(e8_report):
    assert e8_report.even_copy.name == "H4"
    assert e8_report.odd_copy.name == "H4"
    assert len(e8_report.even_copy) == len(e8_report.odd_copy) == 120
    def is_even(v):
        return all(v.blades[k].is_zero() for k in (1, 2, 3, 7))

    evens = [v for v in e8_report.vectors if is_even(v)]
    odds = [v for v in e8_report.vectors if not is_even(v)]
    assert len(evens) == len(odds) == 120
    for x in evens[::17]:
        for y in odds[::17]:
            assert induce.unreduced_inner(x, y).is_zero()


def test_e8_gram_entries(e8_report):
    rs = e8_report.system
    allowed = {Fraction(k) for k in (-2, -1, 0, 1, 2)}
    pts = rs.roots
    for i in range(0, len(pts), 7):
        for j in range(len(pts)):
            v = rs.inner(pts[i], pts[j])
            assert v.b == 0 and v.a in allowed


def test_e8_equal_reduced_norms(e8_report):
    rs = e8_report.system
    norms = {rs.inner(r, r).a for r in rs.roots}
    assert norms == {Fraction(2)}


def test_e8_reflection_closed(e8_report):
    roots.verify_axioms(e8_report.system)


def test_e8_simples_match_catalog_cartan(e8_report):
    rs = e8_report.system
    got = roots.coxeter_label_matrix(rs.simples)
    ref, _ = roots.catalog("E8")
    assert roots._label_match(got, roots.coxeter_label_matrix(list(ref)))
    # Gram of the extracted simples is an honest E8 Cartan matrix
    gram = tuple(
        tuple(int(rs.inner(a, b).a) for b in rs.simples) for a in rs.simples
    )
    refC = tuple(
        tuple(int(float(c)) for c in row) for row in roots.cartan_matrix(list(ref))
    )
    assert roots._label_match(gram, refC)


def test_reduced_inner_equals_rational_octet_dot(e8_report):
    vs = e8_report.vectors
    for x in vs[::31]:
        for y in vs[::29]:
            dot = sum(a * b for a, b in zip(x.rational8, y.rational8))
            assert induce.reduced_inner(x, y) == dot


def test_spinor_coordinate_order():
    from rootforge.multivector import Multivector

    r = Multivector.zero(3, EXACT)
    r.coeffs[0] = G(1)
    r.coeffs[0b110] = G(2)  # e2 e3
    r.coeffs[0b101] = G(3)  # e3 e1
    r.coeffs[0b011] = G(4)  # e1 e2
    assert induce.spinor_coordinates(r) == (G(1), G(2), G(3), G(4))
