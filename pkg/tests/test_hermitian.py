"""
Tests for Hermitian forms: inertia, congruence moves, sums and products
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, seed, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from core.exceptions import EqualIndices, IndexOutOfRange, NotHermitian, ZeroScale
from core.hermitian import (
    Inertia,
    apply_congruence,
    congruence_add,
    congruence_scale,
    direct_sum,
    inertia,
    is_nonsingular,
    kronecker,
    kronecker_signature_rule,
    signature,
    skew_signature,
)

J = np.array([[0, 1], [-1, 0]], dtype=complex)


def test_inertia_of_empty_matrix():
    """The 0x0 form has trivial inertia"""
    assert inertia(np.zeros((0, 0))) == Inertia(0, 0, 0)
    assert signature(np.zeros((0, 0))) == 0


def test_inertia_examples():
    assert inertia(np.diag([3.0, -5.0])) == Inertia(1, 1, 0)
    assert inertia([[-4, 2], [2, -4]]) == Inertia(0, 2, 0)
    assert signature([[-4, 2], [2, -4]]) == -2
    assert inertia(np.zeros((3, 3))) == Inertia(0, 0, 3)


def test_inertia_zero_band():
    """Eigenvalues inside the relative band count as zero"""
    result = inertia(np.diag([1.0, 1e-14, -1.0]))
    assert result == Inertia(1, 1, 1)
    assert not result.nonsingular


def test_not_hermitian_reports_entry():
    with pytest.raises(NotHermitian) as excinfo:
        inertia([[1, 2], [3, 1]])
    assert set(excinfo.value.entry) == {0, 1}


def test_congruence_add_example():
    """I with row 0 added i-times to row 1"""
    result = congruence_add(np.eye(2), 0, 1, 1j)
    assert np.allclose(result, [[1, -1j], [1j, 2]])
    assert signature(result) == 2


def test_congruence_add_zero_is_identity():
    H = np.array([[2, 1 - 1j], [1 + 1j, -3]])
    assert np.allclose(congruence_add(H, 0, 1, 0), H)


def test_congruence_add_errors():
    with pytest.raises(IndexOutOfRange):
        congruence_add(np.eye(2), 0, 2, 1.0)
    with pytest.raises(EqualIndices):
        congruence_add(np.eye(2), 1, 1, 1.0)


def test_congruence_scale():
    assert np.allclose(congruence_scale([[1]], 0, 2), [[4]])
    assert np.allclose(congruence_scale([[-3]], 0, 1j), [[-3]])
    with pytest.raises(ZeroScale):
        congruence_scale(np.eye(2), 0, 0)


def test_direct_sum():
    assert direct_sum().shape == (0, 0)
    assert direct_sum(np.zeros((0, 0)), [[2]]).shape == (1, 1)
    D = direct_sum([[1]], [[-1]])
    assert np.allclose(D, np.diag([1, -1]))
    assert signature(D) == 0


def test_kronecker_with_one_is_identity():
    B = np.array([[1, 2j], [-2j, 0]])
    assert np.allclose(kronecker([[1]], B), B)
    assert kronecker(np.zeros((0, 0)), B).shape == (0, 0)


def test_kronecker_of_two_skew_forms():
    """J (x) J is Hermitian with signature 0"""
    K = kronecker(J, J)
    assert np.allclose(K, K.conj().T)
    assert signature(K) == 0
    assert kronecker_signature_rule(J, J) == 0


def test_kronecker_signature_rule_signs():
    A = np.diag([1.0, 2.0])
    S = np.array([[1j, 0], [0, 2j]])
    assert skew_signature(S) == -2
    assert kronecker_signature_rule(A, A) == 4
    assert kronecker_signature_rule(A, S) == -4
    # skew (x) skew picks up a minus sign
    assert kronecker_signature_rule(S, S) == -4
    assert signature(kronecker(S, S)) == -4


def test_is_nonsingular():
    assert is_nonsingular(np.zeros((0, 0)))
    assert is_nonsingular(np.eye(3))
    assert not is_nonsingular(np.diag([1.0, 0.0]))


# Property tests

small_ints = st.integers(min_value=-10, max_value=10)


@st.composite
def hermitian_matrices(draw, min_dim=1, max_dim=8):
    n = draw(st.integers(min_value=min_dim, max_value=max_dim))
    re = draw(arrays(np.int64, (n, n), elements=small_ints))
    im = draw(arrays(np.int64, (n, n), elements=small_ints))
    X = re + 1j * im
    return (X + X.conj().T) / 2


@st.composite
def skew_hermitian_matrices(draw, max_dim=3):
    n = draw(st.integers(min_value=1, max_value=max_dim))
    re = draw(arrays(np.int64, (n, n), elements=small_ints))
    im = draw(arrays(np.int64, (n, n), elements=small_ints))
    X = re + 1j * im
    return X - X.conj().T


unit_floats = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
scale_moduli = st.floats(min_value=0.5, max_value=2.0, allow_nan=False)
phases = st.floats(min_value=0.0, max_value=6.283, allow_nan=False)


@seed(20240611)
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(H=hermitian_matrices(), data=st.data())
def test_congruence_moves_preserve_signature(H, data):
    """Ten random elementary congruences keep the signature of a nonsingular form"""
    eigenvalues = np.abs(np.linalg.eigvalsh(H))
    assume(eigenvalues.min() > 1e-2 * eigenvalues.max())
    before = signature(H)
    n = H.shape[0]
    for _ in range(10):
        if n > 1 and data.draw(st.booleans()):
            i = data.draw(st.integers(0, n - 1))
            j = data.draw(st.integers(0, n - 1).filter(lambda k: k != i))
            z = complex(data.draw(unit_floats), data.draw(unit_floats))
            H = congruence_add(H, i, j, z)
        else:
            i = data.draw(st.integers(0, n - 1))
            z = data.draw(scale_moduli) * np.exp(1j * data.draw(phases))
            H = congruence_scale(H, i, z)
    assert signature(H, tau_zero=1e-13) == before


@seed(20240612)
@settings(max_examples=100, deadline=None)
@given(A=hermitian_matrices(max_dim=4), B=hermitian_matrices(max_dim=4))
def test_direct_sum_inertia_is_additive(A, B):
    assert inertia(direct_sum(A, B)) == inertia(A) + inertia(B)


@seed(20240613)
@settings(max_examples=100, deadline=None)
@given(A=hermitian_matrices(max_dim=3), B=hermitian_matrices(max_dim=3))
def test_kronecker_eigenvalues_are_products(A, B):
    products = np.sort(np.outer(np.linalg.eigvalsh(A), np.linalg.eigvalsh(B)).ravel())
    actual = np.linalg.eigvalsh(kronecker(A, B))
    scale = 1.0 + np.abs(products).max()
    assert np.allclose(actual, products, atol=1e-9 * scale)


@seed(20240614)
@settings(max_examples=100, deadline=None)
@given(S=skew_hermitian_matrices(), T=skew_hermitian_matrices())
def test_kronecker_of_skew_forms_is_hermitian(S, T):
    """S (x) T has real eigenvalues -mu*nu for S = i*mu, T = i*nu"""
    K = kronecker(S, T)
    assert np.allclose(K, K.conj().T)
    mu = np.linalg.eigvalsh(-1j * S)
    nu = np.linalg.eigvalsh(-1j * T)
    expected = np.sort(-np.outer(mu, nu).ravel())
    scale = 1.0 + np.abs(expected).max()
    assert np.allclose(np.linalg.eigvalsh(K), expected, atol=1e-9 * scale)


@seed(20240615)
@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(
    H=hermitian_matrices(max_dim=5),
    entries=arrays(np.float64, (2, 5, 5), elements=st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)),
)
def test_sylvester_invariance(H, entries):
    """signature(P H P*) = signature(H) for invertible P"""
    n = H.shape[0]
    eigenvalues = np.abs(np.linalg.eigvalsh(H))
    assume(eigenvalues.min() > 1e-2 * eigenvalues.max())
    P = np.eye(n) + 0.5 * (entries[0, :n, :n] + 1j * entries[1, :n, :n])
    assume(np.linalg.cond(P) < 1e3)
    assert signature(apply_congruence(H, P), tau_zero=1e-13) == signature(H)
