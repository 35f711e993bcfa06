from .band import SigmaBand, GridSpec, make_grid, gauss_legendre_panel  # noqa
from .functions import SpectralFunction, inner_product, eval_entire, quadrature_frame, random_smooth, \
    DEFAULT_GROWTH  # noqa
from .functions import read_csv as read_spectral_csv, write_csv as write_spectral_csv  # noqa
from .kernels import KernelPoint, kernel_value, kernel_spectral, verify_reproducing, kernel_lattice  # noqa
