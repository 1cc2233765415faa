"""
Direct-sum normal form of the companion block and its comparison with B
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from core.exceptions import RootOfUnityExcluded, VerificationFailed
from core.hermitian import DEFAULT_TOLERANCES, Tolerances, direct_sum, signature
from utils import get_logger
from .closed_forms import AngleLike, as_point, chako_diagonal, power
from .replay import CompanionLike, build_B, companion_array

log = get_logger(__name__)


@dataclass
class ChakoComparison:
    """
    The form F / (2 - w^n - conj(w)^n) (+) d_1 (N - N^T) (+) ... (+) d_{n-1} (N - N^T)
    next to B.

    The summation range is k = 1..n-1, the one whose dimension matches B;
    the range k = 1..n would give (n + 1) dim N and is reported in
    `dimension_note`.
    """
    form: np.ndarray
    first_signature: int
    summand_signatures: List[int] = field(default_factory=list)
    total_signature: int = 0
    b_signature: int = 0
    dimension_note: str = ""

    @property
    def ok(self) -> bool:
        return self.total_signature == self.b_signature and not any(self.summand_signatures)


def chako_form(
    N: CompanionLike,
    n: int,
    omega: AngleLike,
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
    strict: bool = False,
) -> ChakoComparison:
    """
    Raises:
        RootOfUnityExcluded: w^k = 1 for some 1 <= k <= n
        VerificationFailed: (strict) the form and B differ in signature, or a
            summand has nonzero signature
    """
    omega = as_point(omega)
    N = companion_array(N)
    g = N.shape[0]
    if omega.power(n).is_one:
        raise RootOfUnityExcluded(f"omega^{n} = 1 at angle {omega.angle:.12g}")

    wn = power(omega, n)
    F = (1 - wn) * N + (1 - wn.conjugate()) * N.T
    first = F / (2 - 2 * wn.real)
    skew = N - N.T
    summands = [d * skew for d in chako_diagonal(n, omega)]

    form = direct_sum(first, *summands)
    B = build_B(N, n, omega)
    comparison = ChakoComparison(
        form=form,
        first_signature=signature(first, tau_zero, tol),
        summand_signatures=[signature(S, tau_zero, tol) for S in summands],
        total_signature=signature(form, tau_zero, tol),
        b_signature=signature(B, tau_zero, tol),
        dimension_note=(
            f"range k=1..{n - 1} gives dim {n * g} = dim B; "
            f"k=1..{n} would give {(n + 1) * g}"
        ),
    )
    if not comparison.ok:
        message = (
            f"direct-sum form disagrees at angle {omega.angle:.12g}, n {n}: "
            f"{comparison.total_signature} vs {comparison.b_signature}, "
            f"summands {comparison.summand_signatures}"
        )
        if strict:
            raise VerificationFailed(message)
        log.warning(message)
    return comparison
