"""
Tests for closed-form predictions and the direct-sum normal form
"""

import math

import numpy as np
import pytest

from core.exceptions import OutOfRange, RootOfUnityExcluded, VerificationFailed
from core.hermitian import signature
from core.invariants import TWO_PI, UnitCirclePoint
import core.lab.direct_sum_form as direct_sum_form
from core.lab import (
    chako_diagonal,
    chako_form,
    displayed_skew_factor,
    generic_angles,
    sgnS_closed,
    sgnS_from_chako,
    skew_factor,
    step2_blocks,
)


def test_sgnS_closed_examples():
    assert sgnS_closed(5, 0.0) == 0
    assert sgnS_closed(3, math.pi) == 0
    assert sgnS_closed(4, math.pi / 2) == 2
    assert sgnS_closed(2, 0.1) == 1
    assert sgnS_closed(3, 3 * math.pi / 2) == -2
    with pytest.raises(OutOfRange):
        sgnS_closed(0, 1.0)


SWEEP = [TWO_PI * (k + 0.37) / 100 for k in range(100)]


@pytest.mark.parametrize("n", range(3, 11))
def test_sgnS_closed_matches_skew_factor(n):
    for x in SWEEP:
        assert signature(1j * skew_factor(n, x)) == sgnS_closed(n, x), x


@pytest.mark.parametrize("n", range(2, 9))
def test_sgnS_closed_matches_chako_signs(n):
    for x in SWEEP:
        assert sgnS_from_chako(n, x) == sgnS_closed(n, x), x


def test_skew_factor_shapes():
    assert skew_factor(1, 1.0).shape == (0, 0)
    assert skew_factor(2, 1.0).shape == (1, 1)
    S = skew_factor(5, 1.0)
    assert S.shape == (4, 4)
    assert np.allclose(S + S.conj().T, 0)


def test_skew_factor_excluded_at_roots():
    with pytest.raises(RootOfUnityExcluded):
        skew_factor(4, math.pi / 2)


def test_chako_diagonal_is_imaginary():
    d = chako_diagonal(5, 0.7)
    assert d.shape == (4,)
    assert np.allclose(d.real, 0)
    with pytest.raises(RootOfUnityExcluded):
        chako_diagonal(4, math.pi / 2)


def test_displayed_skew_factor_needs_three():
    assert displayed_skew_factor(4, 0.3).shape == (3, 3)
    with pytest.raises(OutOfRange):
        displayed_skew_factor(2, 0.3)


def test_step2_blocks_are_hermitian_together(trefoil):
    D, U, L = step2_blocks(trefoil.array, 3, 1.1)
    assert np.allclose(D, D.conj().T)
    assert np.allclose(U.conj().T, L)
    with pytest.raises(RootOfUnityExcluded):
        step2_blocks(trefoil.array, 3, 2 * math.pi / 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_chako_form_matches_B(catalog, n):
    for name in ("trefoil", "figure-eight", "T3_4"):
        N = catalog.seifert(name)
        for w in generic_angles(3, [n], N, seed=60 + n):
            comparison = chako_form(N, n, w)
            assert comparison.ok
            assert comparison.form.shape[0] == n * N.dim
            assert comparison.summand_signatures == [0] * (n - 1)


def test_chako_form_dimension_note(trefoil):
    comparison = chako_form(trefoil, 3, UnitCirclePoint(1.0))
    assert "dim 6 = dim B" in comparison.dimension_note


def test_chako_form_strict_raises_on_disagreement(trefoil, monkeypatch):
    build_B = direct_sum_form.build_B
    monkeypatch.setattr(direct_sum_form, "build_B", lambda N, n, omega: -build_B(N, n, omega))

    comparison = chako_form(trefoil, 1, math.pi)
    assert not comparison.ok
    assert (comparison.total_signature, comparison.b_signature) == (-2, 2)
    with pytest.raises(VerificationFailed):
        chako_form(trefoil, 1, math.pi, strict=True)
