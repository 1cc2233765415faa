"""
Knot catalog - line-oriented text file of named Seifert matrices

Format:

    # comment
    knot <name> <dim>
    <dim rows of dim space-separated integers>
    alexander <coefficients from lowest degree>     (optional)
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterator, List, Optional

from core.exceptions import ParseError, UnknownKnot, KnotSigError
from core.invariants.polynomial import IntPolynomial, normalize_unit, torus_alexander, units_equal
from .matrix import SeifertMatrix, validate
from .torus import torus_knot_seifert
from utils import get_logger

log = get_logger(__name__)

PACKAGED_CATALOG = Path(__file__).resolve().parents[2] / "data" / "catalog.txt"

_TORUS_NAME = re.compile(r"^t\(?(\d+)[,_](\d+)\)?$", re.IGNORECASE)


@dataclass(frozen=True)
class KnotCatalogEntry:
    """A named knot with its Seifert matrix and the expected Alexander polynomial"""
    name: str
    seifert: SeifertMatrix
    alexander_reference: Optional[IntPolynomial] = None


def _builtin_entries() -> List[KnotCatalogEntry]:
    return [
        KnotCatalogEntry("unknot", SeifertMatrix.empty(), IntPolynomial((1,))),
        KnotCatalogEntry("trefoil", torus_knot_seifert(2, 3), torus_alexander(2, 3)),
        KnotCatalogEntry(
            "figure-eight",
            SeifertMatrix.from_rows([[1, 1], [0, -1]]),
            IntPolynomial((-1, 3, -1)),
        ),
        KnotCatalogEntry("T2_5", torus_knot_seifert(2, 5), torus_alexander(2, 5)),
        KnotCatalogEntry("T3_4", torus_knot_seifert(3, 4), torus_alexander(3, 4)),
    ]


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 text ({exc.reason} at byte {exc.start})") from exc


def _parse_ints(tokens: List[str], lineno: int) -> List[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from exc


def _check_reference(name: str, seifert: SeifertMatrix, reference: IntPolynomial, lineno: int):
    # signature imports core.seifert, so this cannot sit at module level
    from core.invariants.signature import alexander_poly

    computed = alexander_poly(seifert)
    try:
        agrees = units_equal(computed, reference)
    except KnotSigError as exc:
        raise ParseError(f"knot {name}: bad alexander line: {exc}", lineno) from exc
    if not agrees:
        raise ParseError(
            f"knot {name}: alexander {list(reference.coeffs)} does not match "
            f"the Seifert matrix, which gives {list(normalize_unit(computed).coeffs)}",
            lineno,
        )


def parse_catalog(text: str, check: bool = True) -> List[KnotCatalogEntry]:
    """
    Parse catalog text into entries.

    Args:
        text: catalog file contents
        check: run validate() on every matrix and compare each alexander
            line with the polynomial of its matrix up to units

    Raises:
        ParseError: malformed structure, an invalid matrix or a wrong
            alexander reference, with line number
    """
    entries: List[KnotCatalogEntry] = []
    lines = [
        (lineno, line.split("#", 1)[0].split())
        for lineno, line in enumerate(text.splitlines(), start=1)
    ]
    lines = [(lineno, tokens) for lineno, tokens in lines if tokens]

    pos = 0
    while pos < len(lines):
        lineno, tokens = lines[pos]
        if tokens[0] != "knot" or len(tokens) != 3:
            raise ParseError(f"expected 'knot <name> <dim>', got {' '.join(tokens)!r}", lineno)
        name = tokens[1]
        (dim,) = _parse_ints(tokens[2:], lineno)
        if dim < 0:
            raise ParseError(f"negative dimension {dim}", lineno)
        header_line = lineno
        pos += 1

        rows = []
        for _ in range(dim):
            if pos >= len(lines):
                raise ParseError(f"knot {name}: expected {dim} rows", header_line)
            lineno, tokens = lines[pos]
            row = _parse_ints(tokens, lineno)
            if len(row) != dim:
                raise ParseError(f"knot {name}: row has {len(row)} entries, expected {dim}", lineno)
            rows.append(row)
            pos += 1

        reference = None
        reference_line = header_line
        if pos < len(lines) and lines[pos][1][0] == "alexander":
            lineno, tokens = lines[pos]
            reference_line = lineno
            reference = IntPolynomial(tuple(_parse_ints(tokens[1:], lineno)))
            pos += 1

        seifert = SeifertMatrix.from_rows(rows)
        if check:
            try:
                validate(seifert)
            except KnotSigError as exc:
                raise ParseError(f"knot {name}: {exc}", header_line) from exc
            if reference is not None:
                _check_reference(name, seifert, reference, reference_line)
        entries.append(KnotCatalogEntry(name, seifert, reference))

    return entries


def format_entry(name: str, seifert: SeifertMatrix, alexander: Optional[IntPolynomial] = None) -> str:
    """Render one catalog entry"""
    lines = [f"knot {name} {seifert.dim}"]
    lines.extend(" ".join(str(v) for v in row) for row in seifert.entries)
    if alexander is not None:
        lines.append("alexander " + " ".join(str(c) for c in alexander.coeffs))
    return "\n".join(lines) + "\n"


class KnotCatalog:
    """
    Name -> knot lookup.

    Names are case-insensitive; T(p,q) and Tp_q resolve to torus knots even
    when not listed.
    """

    def __init__(self, entries: Optional[List[KnotCatalogEntry]] = None):
        self._entries: Dict[str, KnotCatalogEntry] = {}
        for entry in entries or []:
            self.add(entry)

    def add(self, entry: KnotCatalogEntry):
        self._entries[entry.name.lower()] = entry

    def __contains__(self, name: str) -> bool:
        return name.lower() in self._entries

    def __iter__(self) -> Iterator[KnotCatalogEntry]:
        return iter(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def names(self) -> List[str]:
        return [entry.name for entry in self._entries.values()]

    def get(self, name: str) -> KnotCatalogEntry:
        entry = self._entries.get(name.lower())
        if entry is not None:
            return entry
        match = _TORUS_NAME.match(name)
        if match:
            p, q = int(match.group(1)), int(match.group(2))
            try:
                return KnotCatalogEntry(name, torus_knot_seifert(p, q), torus_alexander(p, q))
            except KnotSigError as exc:
                raise UnknownKnot(f"{name}: {exc}") from exc
        raise UnknownKnot(f"unknown knot {name!r}; known: {', '.join(self.names())}")

    def seifert(self, name: str) -> SeifertMatrix:
        return self.get(name).seifert

    @classmethod
    def builtin(cls) -> "KnotCatalog":
        return cls(_builtin_entries())

    @classmethod
    def load(cls, path: Optional[str] = None) -> "KnotCatalog":
        """
        Load a catalog file, falling back to the packaged file and then the
        in-code five-knot table when the path is missing.
        """
        candidates = [Path(path)] if path else []
        candidates.append(PACKAGED_CATALOG)
        for candidate in candidates:
            if candidate.is_file():
                log.debug(f"loading catalog {candidate}")
                return cls(parse_catalog(_read_text(candidate)))
            log.warning(f"catalog {candidate} not found")
        return cls.builtin()


def read_knot_file(path: str) -> KnotCatalogEntry:
    """First entry of a catalog-format file"""
    entries = parse_catalog(_read_text(Path(path)))
    if not entries:
        raise ParseError(f"{path}: no knot entries")
    return entries[0]


def resolve_knot(token: str, catalog: KnotCatalog) -> KnotCatalogEntry:
    """A knot given by catalog name or by path to a catalog-format file"""
    if token in catalog:
        return catalog.get(token)
    path = Path(token)
    if path.is_file():
        return read_knot_file(token)
    return catalog.get(token)


def load_catalog(path: Optional[str] = None) -> KnotCatalog:
    return KnotCatalog.load(path)


def builtin_catalog() -> KnotCatalog:
    """The packaged catalog file, or the in-code table when it is missing"""
    return KnotCatalog.load(None)
