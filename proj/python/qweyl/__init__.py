"""Real q-Weyl algebra, U_q(sl_{n+1}(R)) actions and the quantum-trace integral."""

from ._qweyl import (
    SUITES,
    AlgebraElement,
    DescriptorMismatch,
    Error,
    FiniteRankOperator,
    GaussianState,
    HopfElement,
    IndexOutOfRange,
    InvalidContext,
    PoleAtEvaluationPoint,
    ReportRecord,
    Scalar,
    ShapeMismatch,
    SyntaxError,
    a_op,
    act,
    act_on_operator,
    apply,
    b_op,
    gamma,
    inner,
    normalize,
    quantum_trace,
    rank_one,
    rho,
    run_suite,
    verify_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
