from .utils import PwlabError, InvalidArgumentError, IncompatibleGridsError, EvaluationOutOfRangeError, \
    NoFixedPointError, AdjointNotCompositionError, SpanSolveError  # noqa
from .core import SigmaBand, GridSpec, make_grid, SpectralFunction, inner_product, eval_entire, KernelPoint, \
    kernel_value, kernel_spectral, verify_reproducing  # noqa
from .operators import AffineSymbol, iterate_symbol, fixed_point, adjoint_symbol, apply_chat, apply_chat_adjoint, \
    ConjugationTag, apply_conjugation, OperatorMatrix, assemble_matrix, commutator_residual  # noqa
from .classify import Classification, RealnessTolerance, classify, explain  # noqa
from .certify import Certificate, ExponentialSequence, orbit_residual, adjoint_orbit_kernel_residual, \
    blaschke_sum, carleman_check, completeness_residual, certify_all  # noqa
from .config import RunConfig  # noqa
