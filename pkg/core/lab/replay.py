"""
Congruence replay for the satellite signature formula

The companion part of the satellite form is

    B = Phi (x) N + eps Phi* (x) N^T

for an upper-triangular n x n scalar matrix Phi. With eps = -1, B is
skew-Hermitian and the replay runs on i*B instead. Writing
lift(Psi) = Psi (x) N + Psi* (x) N^T, the replayed matrix is always
lift(kappa * Phi) with kappa = 1 or i, and every block congruence is P (x) I
for a scalar P. Each block step is executed as scalar elementary congruences on
the full matrix while (P, Psi) are tracked alongside; the two are compared
at every stage.

Steps:
    1. prescale block row 1 and add the telescoping combination of the
       other block rows, so block row 1 becomes (sigma F | F | ... | F)
    2. clear block row/column 1, leaving sigma F (+) C
    3. (n >= 3) average the block rows of C against each other; C stays a
       Kronecker product with N - N^T (or N + N^T when eps = -1)
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from core.exceptions import OutOfRange, RequiresNAtLeast3, RootOfUnityExcluded, StageMismatch
from core.hermitian import (
    DEFAULT_TOLERANCES,
    Inertia,
    Tolerances,
    congruence_add,
    congruence_scale,
    direct_sum,
    inertia,
    is_nonsingular,
    kronecker,
    signature,
    skew_signature,
)
from core.invariants import (
    TWO_PI,
    UnitCirclePoint,
    alexander_poly,
    circular_distance,
    unit_circle_roots,
)
from core.seifert import SeifertMatrix
from utils import get_logger
from .closed_forms import (
    as_point,
    displayed_skew_factor,
    displayed_step2_blocks,
    power,
    sgnS_closed,
    step2_blocks,
)

log = get_logger(__name__)

DEFAULT_REL_TOL = 1e-10

CompanionLike = Union[SeifertMatrix, np.ndarray]
AngleLike = Union[UnitCirclePoint, float]


@dataclass
class Stage:
    """One matrix of the replay with its inertia"""
    label: str
    matrix: np.ndarray
    inertia: Inertia
    det_ok: bool
    scalar: Optional[np.ndarray] = None
    recorded: Dict[str, float] = field(default_factory=dict)
    note: str = ""

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def signature(self) -> int:
        return self.inertia.signature()


@dataclass
class Check:
    """An integer identity evaluated during the replay"""
    name: str
    expected: int
    actual: int
    asserted: bool = True

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class ProofTrace:
    omega: UnitCirclePoint
    n: int
    companion: np.ndarray
    epsilon: int = 1
    u: Optional[int] = None
    stages: List[Stage] = field(default_factory=list)
    checks: List[Check] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)

    def stage(self, label: str) -> Stage:
        for stage in self.stages:
            if stage.label == label:
                return stage
        raise KeyError(label)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.asserted and not c.ok]

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class _Setup:
    N: np.ndarray
    g: int
    n: int
    omega: UnitCirclePoint
    epsilon: int
    u: int

    @property
    def kappa(self) -> complex:
        return 1.0 if self.epsilon == 1 else 1j

    @property
    def m(self) -> int:
        return 2 * self.u - self.n

    @property
    def psi(self) -> complex:
        return 1 - power(self.omega, self.m)

    @property
    def standard(self) -> bool:
        return self.epsilon == 1 and self.u == self.n


def companion_array(N: CompanionLike) -> np.ndarray:
    if isinstance(N, SeifertMatrix):
        return N.array.astype(np.complex128)
    return np.asarray(N, dtype=np.complex128)


def _setup(N: CompanionLike, n: int, omega: AngleLike, epsilon: int = 1, u: Optional[int] = None) -> _Setup:
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    if epsilon not in (1, -1):
        raise OutOfRange(f"epsilon must be +1 or -1, got {epsilon}")
    u = n if u is None else u
    if not 0 <= u <= n:
        raise OutOfRange(f"u must lie in 0..{n}, got {u}")
    N = companion_array(N)
    return _Setup(N, N.shape[0], n, as_point(omega), epsilon, u)


def scalar_pattern(n: int, omega: AngleLike, u: Optional[int] = None) -> np.ndarray:
    """
    Upper-triangular Phi: diagonal 1 - w for the first u entries and
    1 - conj(w) after, every entry above the diagonal 2 - w - conj(w).
    """
    omega = as_point(omega)
    u = n if u is None else u
    w = omega.omega
    Phi = (2 - 2 * w.real) * np.triu(np.ones((n, n), dtype=np.complex128), k=1)
    for k in range(n):
        Phi[k, k] = 1 - w if k < u else 1 - w.conjugate()
    return Phi


def lift(Psi: np.ndarray, N: np.ndarray) -> np.ndarray:
    """Psi (x) N + Psi* (x) N^T, Hermitian for any Psi"""
    return kronecker(Psi, N) + kronecker(Psi.conj().T, np.asarray(N).T)


def build_B(N: CompanionLike, n: int, omega: AngleLike) -> np.ndarray:
    """Companion part of the satellite form at w"""
    s = _setup(N, n, omega)
    return lift(scalar_pattern(n, s.omega), s.N)


def build_B_general(
    N: CompanionLike,
    n: int,
    omega: AngleLike,
    epsilon: int = 1,
    u: Optional[int] = None,
) -> np.ndarray:
    """
    Phi (x) N + eps Phi* (x) N^T with the last n - u diagonal blocks
    swapped to (1 - conj(w)) N + eps (1 - w) N^T.

    Hermitian for eps = 1, skew-Hermitian for eps = -1.
    """
    s = _setup(N, n, omega, epsilon, u)
    Phi = scalar_pattern(n, s.omega, s.u)
    return kronecker(Phi, s.N) + s.epsilon * kronecker(Phi.conj().T, s.N.T)


def telescoping_coefficients(n: int, omega: AngleLike, u: Optional[int] = None) -> np.ndarray:
    """
    Coefficients a_1..a_n of the block row combination of step 1.

    a_k = sum_{e=1-k}^{2u-n-k} w^e for k <= u and
    a_k = -sum_{e=k-2u}^{k-n-1} w^e for k > u. With u = n this is
    w^{1-k} + ... + w^{n-k}.
    """
    omega = as_point(omega)
    u = n if u is None else u
    m = 2 * u - n
    a = np.zeros(n, dtype=np.complex128)
    for k in range(1, n + 1):
        if k <= u:
            a[k - 1] = sum(power(omega, e) for e in range(1 - k, m - k + 1))
        else:
            a[k - 1] = -sum(power(omega, e) for e in range(k - 2 * u, k - n))
    return a


def _block(H: np.ndarray, g: int, i: int, j: int) -> np.ndarray:
    return H[g * i:g * (i + 1), g * j:g * (j + 1)]


def _block_add(H: np.ndarray, g: int, i: int, j: int, z: complex) -> np.ndarray:
    """Block row/column j += z * block row/column i, as g scalar congruences"""
    for r in range(g):
        H = congruence_add(H, g * i + r, g * j + r, z)
    return H


def _block_scale(H: np.ndarray, g: int, i: int, z: complex, tau_zero: float) -> np.ndarray:
    for r in range(g):
        H = congruence_scale(H, g * i + r, z, tau_zero)
    return H


def _elementary(n: int, i: int, j: int, z: complex) -> np.ndarray:
    """Scalar matrix of 'row j += z row i' (or 'row i *= z' when i == j)"""
    E = np.eye(n, dtype=np.complex128)
    E[j, i] = z if i == j else E[j, i] + z
    return E


def _max_dev(actual: np.ndarray, expected: np.ndarray) -> float:
    if actual.size == 0:
        return 0.0
    return float(np.max(np.abs(actual - expected)))


def _assert_close(label: str, actual: np.ndarray, expected: np.ndarray, rel_tol: float, what: str) -> float:
    dev = _max_dev(actual, expected)
    scale = 1.0 + (float(np.max(np.abs(expected))) if expected.size else 0.0)
    if dev > rel_tol * scale:
        raise StageMismatch(label, dev, what)
    return dev


def _make_stage(
    label: str,
    H: np.ndarray,
    Psi: Optional[np.ndarray],
    tau_zero: Optional[float],
    tol: Tolerances,
    **recorded: float,
) -> Stage:
    stage_inertia = inertia(H, tau_zero, tol)
    # |det| > tol.det, and no eigenvalue inside the zero band
    det_ok = is_nonsingular(H, tol) and stage_inertia.nonsingular
    stage = Stage(label, H, stage_inertia, det_ok, Psi, dict(recorded))
    log.debug(f"stage {label} dim {stage.dim} inertia {stage_inertia}")
    return stage


def _tracked(s: _Setup, H: np.ndarray, Psi: np.ndarray, label: str, rel_tol: float) -> float:
    """Full matrix against the lift of the tracked scalar matrix"""
    return _assert_close(label, H, lift(Psi, s.N), rel_tol, "tracked scalar congruence disagrees")


def _prescale(s: _Setup, tau_zero: float) -> np.ndarray:
    a = telescoping_coefficients(s.n, s.omega, s.u)
    if s.m < 1:
        raise OutOfRange(f"step 1 needs 2u - n >= 1, got {s.m}")
    if (not s.omega.is_one and s.omega.power(s.m).is_one) or abs(a[0]) < tau_zero:
        raise RootOfUnityExcluded(
            f"omega = e^(i {s.omega.angle:.12g}) is an {s.m}th root of unity other than 1"
        )
    return a


def replay_step1(
    B: np.ndarray,
    N: CompanionLike,
    n: int,
    omega: AngleLike,
    epsilon: int = 1,
    u: Optional[int] = None,
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
    rel_tol: float = DEFAULT_REL_TOL,
) -> Stage:
    """
    Telescoping step.

    B is the Hermitian matrix being replayed (i*B_general when eps = -1).
    After prescaling block row 1 by a_1 and adding a_k times block row k,
    every off-corner block of block row 1 is psi N + conj(psi) N^T with
    psi = kappa (1 - w^{2u-n}), and the corner is sigma times that with
    sigma = |a_1|^2.

    Raises:
        RootOfUnityExcluded: w^{2u-n} = 1 with w != 1
        StageMismatch: block row 1 differs from the closed form
    """
    s = _setup(N, n, omega, epsilon, u)
    tau = tol.zero if tau_zero is None else tau_zero
    a = _prescale(s, tau)
    sigma = abs(a[0]) ** 2

    H = np.asarray(B, dtype=np.complex128)
    Psi = s.kappa * scalar_pattern(s.n, s.omega, s.u)
    _tracked(s, H, Psi, "B", rel_tol)

    P = _elementary(s.n, 0, 0, a[0])
    H = _block_scale(H, s.g, 0, a[0], tau)
    for k in range(1, s.n):
        H = _block_add(H, s.g, k, 0, a[k])
        P = _elementary(s.n, k, 0, a[k]) @ P
    Psi = P @ Psi @ P.conj().T
    _tracked(s, H, Psi, "step1", rel_tol)

    off = lift(np.array([[s.kappa * s.psi]]), s.N)
    corner = sigma * off
    _assert_close("step1", _block(H, s.g, 0, 0), corner, rel_tol, "corner block")
    for l in range(1, s.n):
        _assert_close("step1", _block(H, s.g, 0, l), off, rel_tol, f"block (1, {l + 1})")
        _assert_close("step1", _block(H, s.g, l, 0), off, rel_tol, f"block ({l + 1}, 1)")

    return _make_stage(
        "step1", H, Psi, tau_zero, tol,
        sigma=sigma,
        corner_twice=_max_dev(_block(H, s.g, 0, 0), 2 * off),
    )


def replay_step2(
    stage1: Stage,
    N: CompanionLike,
    n: int,
    omega: AngleLike,
    epsilon: int = 1,
    u: Optional[int] = None,
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
    rel_tol: float = DEFAULT_REL_TOL,
) -> Stage:
    """
    Clear block row/column 1: subtract 1/sigma of it from every other block
    row and column, leaving sigma F (+) C.

    C = lift(kappa T) with T = Phi_sub - (psi / sigma) J skew-Hermitian, so C
    is T (x) (N - N^T) for eps = 1 and (iT) (x) (N + N^T) for eps = -1. For
    eps = 1, u = n the blocks of C are compared with step2_blocks().

    Raises:
        StageMismatch: with the max-abs deviation
    """
    s = _setup(N, n, omega, epsilon, u)
    sigma = stage1.recorded["sigma"]
    H = stage1.matrix
    Psi = stage1.scalar
    Q = np.eye(s.n, dtype=np.complex128)
    for l in range(1, s.n):
        H = _block_add(H, s.g, 0, l, -1.0 / sigma)
        Q = _elementary(s.n, 0, l, -1.0 / sigma) @ Q
    Psi = Q @ Psi @ Q.conj().T
    _tracked(s, H, Psi, "step2", rel_tol)

    psi = s.kappa * s.psi
    T = scalar_pattern(s.n, s.omega, s.u)[1:, 1:] - (s.psi / sigma)
    expected_C = lift(s.kappa * T, s.N)
    expected = direct_sum(lift(np.array([[sigma * psi]]), s.N), expected_C)
    _assert_close("step2", H, expected, rel_tol, "split into corner (+) C")
    _assert_close("step2", T + T.conj().T, np.zeros_like(T), rel_tol, "T is not skew-Hermitian")

    recorded = {}
    C = H[s.g:, s.g:]
    if s.standard and s.n >= 2:
        D, U, L = step2_blocks(s.N, s.n, s.omega)
        Dp, Up, Lp = displayed_step2_blocks(s.N, s.n, s.omega)
        shown = 0.0
        for i in range(s.n - 1):
            for j in range(s.n - 1):
                want, displayed = (D, Dp) if i == j else ((U, Up) if i < j else (L, Lp))
                _assert_close("step2", _block(C, s.g, i, j), want, rel_tol, f"C block ({i + 1}, {j + 1})")
                shown = max(shown, _max_dev(_block(C, s.g, i, j), displayed))
        recorded["displayed_DUL"] = shown

    stage = _make_stage("step2", H, Psi, tau_zero, tol, **recorded)
    stage.note = f"C dim {C.shape[0]}"
    return stage


def replay_step3(
    stage2: Stage,
    N: CompanionLike,
    n: int,
    omega: AngleLike,
    epsilon: int = 1,
    u: Optional[int] = None,
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
    rel_tol: float = DEFAULT_REL_TOL,
) -> Stage:
    """
    Subtract 1/(2(n-2)) of each block row/column of C from every other one.

    The result is still S (x) (N - N^T) (eps = 1) or (iS) (x) (N + N^T)
    (eps = -1) with S = R T R* for the averaging matrix R.

    Raises:
        RequiresNAtLeast3: n < 3, the coefficient is undefined at n = 2
        StageMismatch: the Kronecker factorization fails
    """
    s = _setup(N, n, omega, epsilon, u)
    if s.n < 3:
        raise RequiresNAtLeast3(f"averaging needs n >= 3, got {s.n}")

    c = 1.0 / (2 * (s.n - 2))
    H = stage2.matrix
    R = np.eye(s.n, dtype=np.complex128)
    for i in range(1, s.n):
        for j in range(1, s.n):
            if i != j:
                H = _block_add(H, s.g, i, j, -c)
                R = _elementary(s.n, i, j, -c) @ R
    Psi = R @ stage2.scalar @ R.conj().T
    _tracked(s, H, Psi, "step3", rel_tol)

    S = Psi[1:, 1:] / s.kappa
    _assert_close("step3", S + S.conj().T, np.zeros_like(S), rel_tol, "S is not skew-Hermitian")
    if s.epsilon == 1:
        factored = kronecker(S, s.N - s.N.T)
    else:
        factored = kronecker(1j * S, s.N + s.N.T)
    _assert_close("step3", H[s.g:, s.g:], factored, rel_tol, "Kronecker factorization")

    return _make_stage(
        "step3", H, Psi, tau_zero, tol,
        displayed_S=_max_dev(S, displayed_skew_factor(s.n, s.omega)),
    )


def skew_factor(n: int, omega: AngleLike, u: Optional[int] = None, averaged: bool = True) -> np.ndarray:
    """
    The scalar skew factor alone (no companion): T after step 2 and, for
    n >= 3 when averaged, S = R T R* after step 3. Empty for n = 1.
    """
    omega = as_point(omega)
    u = n if u is None else u
    a = telescoping_coefficients(n, omega, u)
    if (not omega.is_one and omega.power(2 * u - n).is_one) or 2 * u - n < 1:
        raise RootOfUnityExcluded(f"no skew factor at angle {omega.angle:.12g} for n = {n}, u = {u}")
    sigma = abs(a[0]) ** 2
    psi = 1 - power(omega, 2 * u - n)
    T = scalar_pattern(n, omega, u)[1:, 1:] - psi / sigma
    if not averaged or n < 3:
        return T
    c = 1.0 / (2 * (n - 2))
    R = np.eye(n - 1, dtype=np.complex128)
    for i in range(n - 1):
        for j in range(n - 1):
            if i != j:
                R = _elementary(n - 1, i, j, -c) @ R
    return R @ T @ R.conj().T


def _consecutive(trace: ProofTrace, before: Stage, after: Stage):
    if before.det_ok and after.det_ok:
        trace.checks.append(Check(f"sig_{before.label}_{after.label}", before.signature, after.signature))


def replay_general(
    N: CompanionLike,
    n: int,
    omega: AngleLike,
    epsilon: int = 1,
    u: Optional[int] = None,
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
    rel_tol: float = DEFAULT_REL_TOL,
    strict: bool = True,
) -> ProofTrace:
    """
    Replay all steps for the (eps, u) generalization.

    eps = 1: sgn(B) = sgn((1 - w^m) N + (1 - conj(w)^m) N^T), m = 2u - n.
    eps = -1: sgn(iB) = sgn(i((1 - w^m) N - (1 - conj(w)^m) N^T))
              + sgnS_closed(m, x) sgn(N + N^T); asserted for u = n and
              recorded otherwise.

    Raises:
        RootOfUnityExcluded: w^m = 1, w != 1
        StageMismatch: a closed form fails, or (strict) a signature check fails
    """
    s = _setup(N, n, omega, epsilon, u)
    trace = ProofTrace(s.omega, s.n, s.N, s.epsilon, s.u)
    kwargs = dict(epsilon=s.epsilon, u=s.u, tau_zero=tau_zero, tol=tol, rel_tol=rel_tol)

    B = build_B_general(s.N, s.n, s.omega, s.epsilon, s.u)
    H0 = s.kappa * B
    start = _make_stage("B", H0, s.kappa * scalar_pattern(s.n, s.omega, s.u), tau_zero, tol)
    trace.stages.append(start)

    stage1 = replay_step1(H0, s.N, s.n, s.omega, **kwargs)
    trace.stages.append(stage1)
    _consecutive(trace, start, stage1)

    stage2 = replay_step2(stage1, s.N, s.n, s.omega, **kwargs)
    trace.stages.append(stage2)
    _consecutive(trace, stage1, stage2)

    C = stage2.matrix[s.g:, s.g:]
    sgn_C = signature(C, tau_zero, tol)
    if s.n >= 3:
        stage3 = replay_step3(stage2, s.N, s.n, s.omega, **kwargs)
        trace.stages.append(stage3)
        _consecutive(trace, stage2, stage3)
        C_final = stage3.matrix[s.g:, s.g:]
        trace.checks.append(Check("sig_C_averaged", sgn_C, signature(C_final, tau_zero, tol)))
    elif s.n == 2:
        trace.skipped.append("step3 n=2 averaging coefficient undefined, sgn(D) checked directly")

    sgnN_sym = signature(s.N + s.N.T, tau_zero, tol)
    T = stage2.scalar[1:, 1:] / s.kappa
    x = s.omega.angle
    if s.n >= 2:
        trace.checks.append(Check("sgnS_closed", sgnS_closed(s.m, x), skew_signature(T, tau_zero, tol),
                                  asserted=s.u == s.n))

    if s.epsilon == 1:
        trace.checks.append(Check("sgn_C", 0, sgn_C))
        F = lift(np.array([[s.psi]]), s.N)
        trace.checks.append(Check("theorem", signature(F, tau_zero, tol), start.signature,
                                  asserted=start.det_ok))
    else:
        wm = power(s.omega, s.m)
        corner = (1 - wm) * s.N - (1 - wm.conjugate()) * s.N.T
        predicted = skew_signature(corner, tau_zero, tol) + sgnS_closed(s.m, x) * sgnN_sym
        trace.checks.append(Check("sgn_C", skew_signature(T, tau_zero, tol) * sgnN_sym, sgn_C))
        trace.checks.append(Check("skew_formula", predicted, start.signature,
                                  asserted=start.det_ok and s.u == s.n))

    for check in trace.checks:
        if not check.ok:
            level = "WARNING" if check.asserted else "DEBUG"
            log.log(level, f"check {check.name}: expected {check.expected}, got {check.actual}")
    if strict and not trace.passed:
        first = trace.failures[0]
        raise StageMismatch(first.name, float(abs(first.expected - first.actual)),
                            f"expected {first.expected}, got {first.actual}")
    return trace


def replay_theorem(
    N: CompanionLike,
    n: int,
    omega: AngleLike,
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
    rel_tol: float = DEFAULT_REL_TOL,
    strict: bool = True,
) -> ProofTrace:
    """Replay of the standard case eps = 1, u = n"""
    return replay_general(N, n, omega, 1, n, tau_zero, tol, rel_tol, strict)


def trace_to_log(trace: ProofTrace) -> str:
    """
    One line per stage, 'stage <label> dim <d> sig <s> det_ok <bool>',
    followed by recorded deviations and the checks.
    """
    lines = [
        f"# replay n {trace.n} angle {trace.omega.angle:.12g} "
        f"epsilon {trace.epsilon} u {trace.u}"
    ]
    for stage in trace.stages:
        lines.append(
            f"stage {stage.label} dim {stage.dim} sig {stage.signature} "
            f"det_ok {str(stage.det_ok).lower()}"
        )
    for reason in trace.skipped:
        lines.append(f"skip {reason}")
    for stage in trace.stages:
        for name, value in stage.recorded.items():
            lines.append(f"recorded {stage.label} {name} {value:.6e}")
    for check in trace.checks:
        suffix = "" if check.asserted else " (not asserted)"
        lines.append(
            f"check {check.name} expected {check.expected} actual {check.actual} "
            f"ok {str(check.ok).lower()}{suffix}"
        )
    return "\n".join(lines) + "\n"


def generic_angles(
    count: int,
    powers: Sequence[int],
    companion: Optional[SeifertMatrix] = None,
    margin: float = 0.05,
    seed: int = 0,
) -> List[UnitCirclePoint]:
    """
    Random angles at least `margin` (in the angle of w^k) away from every
    k-th root of unity for k = 1..max(powers), and, when a companion is
    given, from every Alexander root of it at w^p for p in powers.
    """
    rng = np.random.default_rng(seed)
    top = max(max(powers), 1)
    roots = unit_circle_roots(alexander_poly(companion)) if companion is not None else []
    out: List[UnitCirclePoint] = []
    while len(out) < count:
        x = float(rng.uniform(0.0, TWO_PI))
        if any(circular_distance(k * x, 0.0) <= margin for k in range(1, top + 1)):
            continue
        if any(circular_distance(p * x, r) <= margin for p in powers if p > 0 for r in roots):
            continue
        out.append(UnitCirclePoint(x))
    return out
