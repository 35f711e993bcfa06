from .symbols import AffineSymbol, iterate_symbol, fixed_point, adjoint_symbol, reflection_factorization, \
    kernel_orbit_point, REFLECTION  # noqa
from .weighted import apply_chat, apply_chat_adjoint, ConjugationTag, apply_conjugation, conjugate_kernel_point, \
    CompositionOperator, chat, chat_adjoint  # noqa
from .matrix import OperatorMatrix, assemble_matrix, assemble_commutator, commutator_residual, normality_residual, \
    basis_function, exponential_basis  # noqa
from .matrix import read_csv as read_matrix_csv, write_csv as write_matrix_csv  # noqa
