import math
import random

import pytest

from rootforge.errors import DimensionMismatch, NotAVersor, NotUnitBivector, ZeroVector
from rootforge.multivector import (
    Multivector,
    blade_sign,
    geometric_product,
    inner,
    is_versor,
    reflect,
    rotor_exp,
    versor_matrix,
    versor_sandwich,
)
from rootforge.scalars import FLOAT, GoldenNumber

rng = random.Random(411)


def e(i, dim=3, backend=None):
    return Multivector.basis_blade(dim, 1 << i, backend)


def rand_vec(dim):
    return Multivector.vector([rng.uniform(-2, 2) for _ in range(dim)], FLOAT)


def rand_mv(dim):
    m = Multivector.zero(dim, FLOAT)
    for i in range(1 << dim):
        m.coeffs[i] = rng.uniform(-1, 1)
    return m


def test_unit_vector_squares_to_one():
    sq = geometric_product(e(0), e(0))
    assert sq.scalar_part() == GoldenNumber(1)
    assert sq.grades() <= {0}


def test_anticommutation():
    assert geometric_product(e(0), e(1)) == -geometric_product(e(1), e(0))


def test_bivectors_square_to_minus_one():
    for mask in (0b011, 0b110, 0b101):
        b = Multivector.basis_blade(3, mask)
        assert geometric_product(b, b).scalar_part() == GoldenNumber(-1)


def test_blade_sign_cocycle_all_triples():
    # associativity of the blade product reduces to this sign identity
    for dim in range(2, 6):
        for a in range(1 << dim):
            for b in range(1 << dim):
                sab = blade_sign(a, b)
                for c in range(1 << dim):
                    lhs = sab * blade_sign(a ^ b, c)
                    rhs = blade_sign(b, c) * blade_sign(a, b ^ c)
                    assert lhs == rhs


@pytest.mark.parametrize("dim", [2, 3, 4, 5])
def test_float_associativity_random(dim):
    for _ in range(250):
        a, b, c = rand_mv(dim), rand_mv(dim), rand_mv(dim)
        lhs = geometric_product(geometric_product(a, b), c)
        rhs = geometric_product(a, geometric_product(b, c))
        assert all(abs(x - y) < 1e-9 for x, y in zip(lhs.coeffs, rhs.coeffs))


def test_reverse_antiautomorphism():
    for _ in range(50):
        a, b = rand_mv(4), rand_mv(4)
        lhs = geometric_product(a, b).reverse()
        rhs = geometric_product(b.reverse(), a.reverse())
        assert all(abs(x - y) < 1e-12 for x, y in zip(lhs.coeffs, rhs.coeffs))


def test_grade_projection_partitions():
    m = rand_mv(4)
    total = Multivector.zero(4, FLOAT)
    for g in range(5):
        total = total + m.grade_part(g)
    assert all(abs(x - y) < 1e-15 for x, y in zip(m.coeffs, total.coeffs))


def test_reflect_normal_and_orthogonal():
    assert reflect(e(0), e(0)) == -e(0)
    assert reflect(e(0), e(1)) == e(1)


def test_reflect_matches_classical_formula():
    for _ in range(100):
        a, x = rand_vec(3), rand_vec(3)
        got = reflect(a, x).vector_components()
        av, xv = a.vector_components(), x.vector_components()
        d = sum(p * q for p, q in zip(av, xv))
        n = sum(p * p for p in av)
        want = [q - 2 * d / n * p for p, q in zip(av, xv)]
        assert got == pytest.approx(want, abs=1e-12)


def test_reflect_is_involution():
    for _ in range(50):
        a, x = rand_vec(4), rand_vec(4)
        twice = reflect(a, reflect(a, x))
        assert twice.vector_components() == pytest.approx(x.vector_components(), abs=1e-10)


def test_reflect_zero_normal_raises():
    with pytest.raises(ZeroVector):
        reflect(Multivector.vector([0, 0, 0], FLOAT), rand_vec(3))


def test_sandwich_single_reflection():
    assert versor_sandwich(e(0), e(0)) == -e(0)


def test_sandwich_rotor_pi_rotation():
    b = geometric_product(e(0), e(1))
    assert versor_sandwich(b, e(0)) == -e(0)


def test_sandwich_composition_and_norm():
    for _ in range(40):
        vecs = [rand_vec(3) for _ in range(3)]
        units = []
        for v in vecs:
            n = math.sqrt(sum(c * c for c in v.vector_components()))
            units.append(v.scale(1.0 / n))
        a = geometric_product(units[0], units[1])
        b = units[2]
        x = rand_vec(3)
        lhs = versor_sandwich(geometric_product(a, b), x)
        rhs = versor_sandwich(a, versor_sandwich(b, x))
        assert lhs.vector_components() == pytest.approx(rhs.vector_components(), abs=1e-9)
        norm_in = sum(c * c for c in x.vector_components())
        norm_out = sum(c * c for c in lhs.vector_components())
        assert norm_out == pytest.approx(norm_in, rel=1e-9)


def test_sandwich_rejects_non_versor():
    junk = Multivector.zero(3, FLOAT)
    junk.coeffs[0] = 1.0
    junk.coeffs[1] = 1.0  # scalar + vector: mixed parity
    assert not is_versor(junk)
    with pytest.raises(NotAVersor):
        versor_sandwich(junk, rand_vec(3))


def test_rotor_exp_identity_and_angle_addition():
    b = Multivector.basis_blade(3, 0b011, FLOAT)
    r0 = rotor_exp(b, 0.0)
    assert r0.scalar_part() == pytest.approx(1.0)
    for _ in range(30):
        t1, t2 = rng.uniform(-3, 3), rng.uniform(-3, 3)
        lhs = geometric_product(rotor_exp(b, t1), rotor_exp(b, t2))
        rhs = rotor_exp(b, t1 + t2)
        assert all(abs(x - y) < 1e-12 for x, y in zip(lhs.coeffs, rhs.coeffs))


def test_rotor_exp_reproduces_dihedral_coxeter_versor():
    # alpha1 alpha2 = -exp(-pi e12 / n) for the standard dihedral simples
    for n in (3, 5, 8):
        a1 = Multivector.vector([1.0, 0.0], FLOAT)
        a2 = Multivector.vector([-math.cos(math.pi / n), math.sin(math.pi / n)], FLOAT)
        w = geometric_product(a1, a2)
        expm = -rotor_exp(Multivector.basis_blade(2, 0b11, FLOAT), -math.pi / n)
        assert all(abs(x - y) < 1e-12 for x, y in zip(w.coeffs, expm.coeffs))


def test_rotor_exp_requires_unit_bivector():
    with pytest.raises(NotUnitBivector):
        rotor_exp(Multivector.basis_blade(3, 0b011, FLOAT).scale(2.0), 0.3)
    with pytest.raises(NotUnitBivector):
        rotor_exp(Multivector.basis_blade(3, 0b011), 0.3)  # exact backend


def test_versor_matrix_rotation():
    m = versor_matrix(rotor_exp(Multivector.basis_blade(3, 0b011, FLOAT), math.pi / 4))
    # rotation by pi/2 in the e1e2 plane
    assert m[0][1] == pytest.approx(1.0)
    assert m[1][0] == pytest.approx(-1.0)
    assert m[2][2] == pytest.approx(1.0)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        geometric_product(rand_mv(3), rand_mv(4))


def test_inner_matches_bilinear_form():
    for _ in range(20):
        x, y = rand_vec(4), rand_vec(4)
        direct = sum(a * b for a, b in zip(x.vector_components(), y.vector_components()))
        sym = geometric_product(x, y) + geometric_product(y, x)
        assert inner(x, y) == pytest.approx(direct)
        assert 0.5 * sym.scalar_part() == pytest.approx(direct)


def test_json_round_trip_shape():
    m = rand_mv(3)
    blob = m.to_json()
    assert blob["dim"] == 3
    assert all(isinstance(k, str) for k in blob["coeffs"])
