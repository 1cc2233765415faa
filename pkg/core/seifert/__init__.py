from .matrix import (
    SeifertMatrix,
    ValidationReport,
    NormalFormCertificate,
    integer_det,
    validate,
    standard_symplectic,
    symplectic_normalize,
)
from .torus import torus_knot_seifert
from .catalog import (
    KnotCatalog,
    KnotCatalogEntry,
    parse_catalog,
    format_entry,
    read_knot_file,
    resolve_knot,
    load_catalog,
    builtin_catalog,
)

__all__ = [
    "SeifertMatrix",
    "ValidationReport",
    "NormalFormCertificate",
    "integer_det",
    "validate",
    "standard_symplectic",
    "symplectic_normalize",
    "torus_knot_seifert",
    "KnotCatalog",
    "KnotCatalogEntry",
    "parse_catalog",
    "format_entry",
    "read_knot_file",
    "resolve_knot",
    "load_catalog",
    "builtin_catalog",
]
