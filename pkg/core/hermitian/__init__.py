from .forms import (
    Tolerances,
    DEFAULT_TOLERANCES,
    Inertia,
    as_complex_matrix,
    is_hermitian,
    is_skew_hermitian,
    check_hermitian,
    hermitian_deviation,
    inertia,
    signature,
    skew_signature,
    is_nonsingular,
    congruence_add,
    congruence_scale,
    apply_congruence,
    direct_sum,
    kronecker,
    form_signature,
    kronecker_signature_rule,
)

__all__ = [
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "Inertia",
    "as_complex_matrix",
    "is_hermitian",
    "is_skew_hermitian",
    "check_hermitian",
    "hermitian_deviation",
    "inertia",
    "signature",
    "skew_signature",
    "is_nonsingular",
    "congruence_add",
    "congruence_scale",
    "apply_congruence",
    "direct_sum",
    "kronecker",
    "form_signature",
    "kronecker_signature_rule",
]
