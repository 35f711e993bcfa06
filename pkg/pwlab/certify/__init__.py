from .certificate import Certificate, decide_verdict, PASS, FAIL, INCONCLUSIVE, BELOW, ABOVE  # noqa
from .density import ExponentialSequence, BlaschkeEstimate, blaschke_sum, CarlemanStatus, CarlemanResult, \
    carleman_check, multiplier_fold_fraction  # noqa
from .spans import SpanSolution, solve_span, orbit_gram, span_singular_values, orbit_elements, \
    kernel_orbit_elements, exponential_elements, orbit_residual, adjoint_orbit_kernel_residual, \
    completeness_residual, DEFAULT_REG  # noqa
from .golden import GoldenThreshold, load_golden, closest_row, golden_path, GOLDEN_ENV  # noqa
from .battery import Battery, certify_all  # noqa
