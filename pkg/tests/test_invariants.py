"""
Tests for unit-circle points, Alexander polynomials and signature profiles
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from core.exceptions import OutOfRange, ZeroPolynomial
from core.invariants import (
    TWO_PI,
    IntPolynomial,
    UnitCirclePoint,
    alexander_determinant,
    as_polynomial,
    alexander_poly,
    cluster_angles,
    compose_power,
    normalize_unit,
    nth_root_angles,
    profile_to_csv,
    signature_profile,
    tl_form,
    tl_signature,
    torus_alexander,
    unit_circle_roots,
    units_equal,
    wrap_angle,
)


def test_wrap_angle():
    assert wrap_angle(-math.pi / 2) == pytest.approx(3 * math.pi / 2)
    assert wrap_angle(TWO_PI) == 0.0
    assert wrap_angle(TWO_PI - 1e-14) == 0.0


def test_unit_circle_point_powers():
    """Powers multiply the angle"""
    w = UnitCirclePoint(math.pi / 3)
    assert w.power(6).is_one
    assert w.is_root_of_unity(6)
    assert not w.is_root_of_unity(5)
    assert w.power(3).omega == pytest.approx(-1)
    assert w.conjugate().angle == pytest.approx(5 * math.pi / 3)


def test_from_turns_is_exact_at_quarter_turns():
    assert UnitCirclePoint.from_turns(Fraction(1, 2)).omega == complex(-1, 0)
    assert UnitCirclePoint.from_turns(Fraction(1, 4)).omega == complex(0, 1)
    assert UnitCirclePoint.from_turns(Fraction(3, 2)).angle == pytest.approx(math.pi)


def test_normalize_unit():
    assert normalize_unit(IntPolynomial((0, -1, 1))).coeffs == (1, -1)
    assert normalize_unit(IntPolynomial((-1, 3, -1))).coeffs == (1, -3, 1)
    assert units_equal(IntPolynomial((0, 0, 1, -1, 1)), IntPolynomial((-1, 1, -1)))
    with pytest.raises(ZeroPolynomial):
        normalize_unit(IntPolynomial(()))


def test_compose_power():
    p = IntPolynomial((1, -1, 1))
    assert compose_power(p, 2).coeffs == (1, 0, -1, 0, 1)
    assert compose_power(p, 1) == p
    assert compose_power(p, 0).coeffs == (1,)
    with pytest.raises(OutOfRange):
        compose_power(p, -1)


def test_torus_alexander():
    assert torus_alexander(2, 3).coeffs == (1, -1, 1)
    assert torus_alexander(3, 4).coeffs == (1, -1, 0, 1, 0, -1, 1)
    assert as_polynomial([1, -1, 1]) == torus_alexander(2, 3)


def test_unit_circle_roots():
    roots = unit_circle_roots(IntPolynomial((1, -1, 1)))
    assert roots == pytest.approx([math.pi / 3, 5 * math.pi / 3])
    # t^2 - 3t + 1 has real roots off the circle
    assert unit_circle_roots(IntPolynomial((1, -3, 1))) == []
    # repeated roots keep their multiplicity
    assert unit_circle_roots(IntPolynomial((1, -2, 1))) == [0.0, 0.0]
    with pytest.raises(ZeroPolynomial):
        unit_circle_roots(IntPolynomial(()))


def test_cluster_angles():
    assert cluster_angles([0.1, 0.1 + 1e-12, 2.0]) == [(0.1, 2), (2.0, 1)]
    (merged,) = cluster_angles([1e-10, TWO_PI - 1e-10])
    assert merged[1] == 2


def test_nth_root_angles():
    assert nth_root_angles([math.pi], 2) == pytest.approx([math.pi / 2, 3 * math.pi / 2])
    assert nth_root_angles([1.0], 0) == []


def test_tl_form_trefoil(trefoil):
    assert np.allclose(tl_form(trefoil, math.pi), [[-4, 2], [2, -4]])
    assert np.allclose(tl_form(trefoil, 0.0), 0)


def test_tl_signature_examples(catalog):
    assert tl_signature(catalog.seifert("trefoil"), math.pi) == -2
    assert tl_signature(catalog.seifert("figure-eight"), math.pi) == 0
    assert tl_signature(catalog.seifert("T2_5"), math.pi) == -4
    assert tl_signature(catalog.seifert("T3_4"), math.pi) == -6
    assert tl_signature(catalog.seifert("unknot"), math.pi) == 0
    assert tl_signature(catalog.seifert("trefoil"), 0.0) == 0


def test_tl_signature_conjugate_symmetry(catalog):
    for entry in catalog:
        for angle in (0.4, 1.3, 2.9):
            assert tl_signature(entry.seifert, angle) == tl_signature(entry.seifert, -angle)


def test_alexander_polynomials(catalog):
    assert alexander_determinant(catalog.seifert("trefoil")).coeffs == (1, -1, 1)
    assert alexander_poly(catalog.seifert("unknot")).coeffs == (1,)
    assert alexander_poly(catalog.seifert("figure-eight")).coeffs == (1, -3, 1)
    assert alexander_poly(catalog.seifert("T2_5")).coeffs == (1, -1, 1, -1, 1)
    assert alexander_poly(catalog.seifert("T3_4")) == torus_alexander(3, 4)


def test_alexander_at_one_is_unit(catalog):
    for entry in catalog:
        assert abs(sum(alexander_poly(entry.seifert).coeffs)) == 1


def test_profile_trefoil(trefoil):
    profile = signature_profile(trefoil, resolution=72)
    assert profile.jump_angles == pytest.approx([math.pi / 3, 5 * math.pi / 3])
    assert profile.jump_multiplicities == [1, 1]
    assert profile.arc_values == [0, -2]
    assert profile.value_at(math.pi) == -2
    assert profile.value_at(0.1) == 0
    assert profile.value_at(6.0) == 0


def test_profile_without_jumps(unknot, figure_eight):
    for A in (unknot, figure_eight):
        profile = signature_profile(A, resolution=36)
        assert profile.jump_angles == []
        assert profile.arc_values == [0]
        assert set(profile.values) == {0}


def test_profile_torus_knot_is_symmetric(catalog):
    profile = signature_profile(catalog.seifert("T3_4"), resolution=120)
    # Phi_6 * Phi_12: six simple roots
    assert len(profile.jump_angles) == 6
    assert profile.value_at(math.pi) == -6
    values = profile.arc_values
    assert values == values[:1] + values[1:][::-1]


def test_profile_csv(trefoil):
    text = profile_to_csv(signature_profile(trefoil, resolution=8))
    lines = text.splitlines()
    assert lines[0] == "angle,omega_re,omega_im,signature"
    assert lines[1].startswith("0,1,0,0")
    jumps = [line for line in lines if line.startswith("# jump")]
    assert len(jumps) == 2
    assert jumps[0].endswith("multiplicity 1")
