from .closed_forms import (
    sgnS_closed,
    sgnS_from_chako,
    chako_diagonal,
    displayed_skew_factor,
    step2_blocks,
    displayed_step2_blocks,
)
from .replay import (
    Stage,
    Check,
    ProofTrace,
    scalar_pattern,
    lift,
    build_B,
    build_B_general,
    telescoping_coefficients,
    replay_step1,
    replay_step2,
    replay_step3,
    replay_general,
    replay_theorem,
    skew_factor,
    trace_to_log,
    generic_angles,
)
from .direct_sum_form import ChakoComparison, chako_form
from .theorem import (
    AngleRecord,
    VerificationReport,
    jump_candidates,
    verify_theorem,
    report_to_csv,
)
from .shinohara import ParityRow, ShinoharaReport, shinohara_check

__all__ = [
    "sgnS_closed",
    "sgnS_from_chako",
    "chako_diagonal",
    "displayed_skew_factor",
    "step2_blocks",
    "displayed_step2_blocks",
    "Stage",
    "Check",
    "ProofTrace",
    "scalar_pattern",
    "lift",
    "build_B",
    "build_B_general",
    "telescoping_coefficients",
    "replay_step1",
    "replay_step2",
    "replay_step3",
    "replay_general",
    "replay_theorem",
    "skew_factor",
    "trace_to_log",
    "generic_angles",
    "ChakoComparison",
    "chako_form",
    "AngleRecord",
    "VerificationReport",
    "jump_candidates",
    "verify_theorem",
    "report_to_csv",
    "ParityRow",
    "ShinoharaReport",
    "shinohara_check",
]
