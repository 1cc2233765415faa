"""
Tests for Seifert matrices, torus knots and the knot catalog
"""

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from core.exceptions import (
    NonUnimodularSkewPart,
    NotCoprime,
    NotValid,
    OddDimension,
    OutOfRange,
    ParseError,
    UnknownKnot,
)
from core.invariants import alexander_poly, units_equal
from core.seifert import (
    KnotCatalog,
    builtin_catalog,
    load_catalog,
    SeifertMatrix,
    format_entry,
    integer_det,
    parse_catalog,
    read_knot_file,
    resolve_knot,
    standard_symplectic,
    symplectic_normalize,
    torus_knot_seifert,
    validate,
)
from tests.conftest import CATALOG_NAMES


def test_integer_det():
    assert integer_det([]) == 1
    assert integer_det([[0, 1], [-1, 0]]) == 1
    assert integer_det([[2, 0], [0, 3]]) == 6


def test_seifert_matrix_basics():
    A = SeifertMatrix.from_rows([[-1, 1], [0, -1]])
    assert A.dim == 2
    assert A.genus == 1
    assert A.transpose().entries == ((-1, 0), (1, -1))
    assert A.skew_part() == [[0, 1], [-1, 0]]
    assert np.array_equal(A.symmetrized(), [[-2, 1], [1, -2]])
    assert SeifertMatrix.empty().dim == 0


def test_from_array_rejects_fractions():
    with pytest.raises(ValueError):
        SeifertMatrix.from_array(np.array([[0.5, 1], [0, 1]]))


def test_validate_accepts_knots():
    assert validate(SeifertMatrix.empty()).genus == 0
    report = validate(SeifertMatrix.from_rows([[-1, 1], [0, -1]]))
    assert report.valid
    assert report.skew_determinant == 1


def test_validate_rejects_odd_dimension():
    with pytest.raises(OddDimension):
        validate(SeifertMatrix.from_rows([[1]]))


def test_validate_reports_determinant():
    with pytest.raises(NonUnimodularSkewPart) as excinfo:
        validate(SeifertMatrix.from_rows([[0, 0], [0, 0]]))
    assert excinfo.value.determinant == 0

    with pytest.raises(NonUnimodularSkewPart) as excinfo:
        validate(SeifertMatrix.from_rows([[0, 2], [0, 0]]))
    assert excinfo.value.determinant == 4


def test_symplectic_normalize_certificate():
    """P (A - A^T) P^T is the standard form for every catalog knot"""
    for name in ["trefoil", "T2_5", "T3_4"]:
        A = KnotCatalog.builtin().seifert(name)
        P, cert = symplectic_normalize(A)
        W = np.array(A.skew_part(), dtype=object)
        assert np.all(P.dot(W).dot(P.T) == standard_symplectic(A.dim))
        assert cert.verified
        assert abs(cert.determinant) == 1
        assert cert.genus == A.genus


def test_symplectic_normalize_rejects_invalid():
    with pytest.raises(NotValid):
        symplectic_normalize(SeifertMatrix.from_rows([[0, 2], [0, 0]]))


def test_torus_knots():
    assert torus_knot_seifert(2, 3).entries == ((-1, 1), (0, -1))
    assert torus_knot_seifert(2, 5).dim == 4
    assert torus_knot_seifert(3, 4).dim == 6
    with pytest.raises(NotCoprime):
        torus_knot_seifert(2, 4)
    with pytest.raises(OutOfRange):
        torus_knot_seifert(1, 3)


def test_builtin_catalog_contents(catalog):
    assert catalog.names() == CATALOG_NAMES
    for entry in catalog:
        validate(entry.seifert)
        assert units_equal(alexander_poly(entry.seifert), entry.alexander_reference)


def test_packaged_catalog_matches_builtin():
    loaded = KnotCatalog.load()
    builtin = KnotCatalog.builtin()
    assert set(loaded.names()) >= set(builtin.names())
    for entry in builtin:
        assert loaded.get(entry.name).seifert == entry.seifert


def test_catalog_lookup(catalog):
    assert catalog.get("Trefoil").name == "trefoil"
    assert "FIGURE-EIGHT" in catalog
    with pytest.raises(UnknownKnot):
        catalog.get("five-two")


def test_catalog_torus_tokens(catalog):
    assert catalog.seifert("T(2,7)") == torus_knot_seifert(2, 7)
    assert catalog.seifert("t3_5") == torus_knot_seifert(3, 5)
    with pytest.raises(UnknownKnot):
        catalog.get("T(2,4)")


def test_parse_and_format_entry():
    A = torus_knot_seifert(2, 5)
    text = "# comment line\n" + format_entry("cinquefoil", A, alexander_poly(A))
    (entry,) = parse_catalog(text)
    assert entry.name == "cinquefoil"
    assert entry.seifert == A
    assert entry.alexander_reference == alexander_poly(A)


def test_format_entry_layout():
    text = format_entry("trefoil", torus_knot_seifert(2, 3))
    assert text == "knot trefoil 2\n-1 1\n0 -1\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("knot a 2\n1 0\n", 1),
        ("knot a 2\n1 x\n0 1\n", 2),
        ("knot a 2\n1 0 0\n0 1\n", 2),
        ("matrix a 2\n", 1),
        ("knot a 2\n0 0\n0 0\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_catalog(text)
    assert excinfo.value.line == line


def test_parse_without_check_keeps_invalid():
    (entry,) = parse_catalog("knot zero 2\n0 0\n0 0\n", check=False)
    assert entry.seifert.dim == 2


def test_parse_rejects_wrong_alexander_reference():
    text = "knot x 2\n-1 1\n0 -1\nalexander 1 5 1\n"
    with pytest.raises(ParseError) as excinfo:
        parse_catalog(text)
    assert excinfo.value.line == 4
    assert excinfo.value.exit_code == 3

    (entry,) = parse_catalog(text, check=False)
    assert entry.alexander_reference.coeffs == (1, 5, 1)


def test_parse_accepts_reference_up_to_units():
    (entry,) = parse_catalog("knot x 2\n-1 1\n0 -1\nalexander 0 -1 1 -1\n")
    assert units_equal(entry.alexander_reference, alexander_poly(entry.seifert))


def test_parse_rejects_zero_alexander_reference():
    with pytest.raises(ParseError) as excinfo:
        parse_catalog("knot x 2\n-1 1\n0 -1\nalexander 0\n")
    assert excinfo.value.line == 4


def test_resolve_knot_from_file(tmp_path, catalog):
    path = tmp_path / "knot.txt"
    path.write_text(format_entry("mine", torus_knot_seifert(2, 3)))
    assert resolve_knot(str(path), catalog).name == "mine"
    assert read_knot_file(str(path)).seifert == torus_knot_seifert(2, 3)
    assert resolve_knot("trefoil", catalog).name == "trefoil"


def test_read_undecodable_knot_file(tmp_path):
    path = tmp_path / "binary.txt"
    path.write_bytes(b"knot x 2\n\xff\xfe\n")
    with pytest.raises(ParseError, match="not UTF-8"):
        read_knot_file(str(path))


def test_read_empty_knot_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing here\n")
    with pytest.raises(ParseError):
        read_knot_file(str(path))


def test_load_missing_catalog_falls_back(tmp_path):
    catalog = KnotCatalog.load(str(tmp_path / "missing.txt"))
    assert "trefoil" in catalog


def test_validate_rejects_identity():
    with pytest.raises(NonUnimodularSkewPart) as excinfo:
        validate(SeifertMatrix.from_rows([[1, 0], [0, 1]]))
    assert excinfo.value.determinant == 0


def test_symplectic_normalize_standard_input_is_identity():
    A = SeifertMatrix.from_rows([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    P, _ = symplectic_normalize(A)
    assert np.all(P == np.eye(4, dtype=int))


def test_symplectic_normalize_rejects_skew_input():
    with pytest.raises(NotValid):
        symplectic_normalize(SeifertMatrix.from_rows([[0, 2], [-2, 0]]))


@seed(7)
@settings(max_examples=60, deadline=None)
@given(
    moves=st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-2, 2)),
        min_size=1,
        max_size=6,
    ),
    sym=st.lists(st.integers(-3, 3), min_size=10, max_size=10),
)
def test_symplectic_normalize_random_genus_two(moves, sym):
    """Any integer basis change of the standard form plus a symmetric part"""
    Q = np.eye(4, dtype=np.int64)
    for i, j, c in moves:
        if i != j:
            Q[j] += c * Q[i]
    A0 = np.array([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]], dtype=np.int64)
    S = np.zeros((4, 4), dtype=np.int64)
    S[np.triu_indices(4)] = sym
    S = S + np.triu(S, k=1).T
    A = SeifertMatrix.from_array(Q @ A0 @ Q.T + S)

    P, cert = symplectic_normalize(A)
    W = np.array(A.skew_part(), dtype=object)
    assert np.all(P.dot(W).dot(P.T) == standard_symplectic(4))
    assert cert.verified


def test_catalog_loaders():
    assert "T3_4" in load_catalog()
    assert len(builtin_catalog()) >= 5
