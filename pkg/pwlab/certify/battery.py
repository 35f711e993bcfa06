"""
The certificate battery: numerical evidence for every verdict :func:`pwlab.classify.classify` reaches about ``C_phi``.

Identity checks (adjoint pairing, kernel covariance, the semigroup law, conjugation axioms, J-symmetry, the fixed
point) must always pass. Property checks (normality, unitarity, self-adjointness) are expected to pass or fail as
the classifier says. Cyclicity evidence is semi-decidable: a small residual passes, anything else is inconclusive.
Obstructions are exact and pass whenever the classifier says the operator is not cyclic.
"""
from __future__ import annotations

import logging
import math
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from pwlab.certify.certificate import ABOVE, FAIL, INCONCLUSIVE, PASS, Certificate
from pwlab.certify.density import (
    MARGIN_TOLERANCE, CarlemanStatus, ExponentialSequence, blaschke_sum, carleman_check, multiplier_fold_fraction)
from pwlab.certify.golden import GoldenThreshold, closest_row, load_golden
from pwlab.certify.spans import (
    kernel_orbit_elements, orbit_elements, solve_span, span_singular_values)
from pwlab.classify import KERNELS_ALL, Classification, classify
from pwlab.config import RunConfig
from pwlab.core.band import SigmaBand, make_grid
from pwlab.core.functions import SpectralFunction, inner_product, quadrature_frame, random_smooth
from pwlab.core.kernels import KernelPoint, kernel_lattice, kernel_spectral
from pwlab.operators.matrix import normality_residual
from pwlab.operators.symbols import AffineSymbol, fixed_point, iterate_symbol, kernel_orbit_point
from pwlab.operators.weighted import (
    ConjugationTag, apply_chat, apply_chat_adjoint, apply_conjugation, chat)
from pwlab.utils import PwlabError

logger = logging.getLogger(__name__)

PAIRING_TOLERANCE = 1e-7
COVARIANCE_TOLERANCE = 1e-8
SEMIGROUP_TOLERANCE = 1e-7
SEMIGROUP_POWERS = 5
CONJUGATION_TOLERANCE = 1e-10
J_SYMMETRY_TOLERANCE = 1e-8
PROPERTY_TOLERANCE = 1e-9
# Property residuals above this are a clear violation rather than discretization noise
PROPERTY_FAILURE = 1e-3
FIXED_POINT_TOLERANCE = 1e-10
RANK_TOLERANCE = 1e-10
MONOTONICITY_TOLERANCE = 1e-12
MONOTONICITY_LENGTHS = (5, 10, 20, 40)
# An orbit span at this distance from the target is orthogonal to it up to rounding
ORTHOGONAL_RESIDUAL = 1 - 1e-8
OBSTRUCTION_SLACK = 1e-8
BLASCHKE_HORIZON = 10_000
CARLEMAN_COUNT = 1000
FOLD_FRACTION = 0.01
# Default distance between the seed kernel and the target kernel of an adjoint kernel orbit
ADJOINT_TARGET_OFFSET = 5.


def _expect(holds: bool) -> str:
    return PASS if holds else FAIL


def _kernel_label(w: KernelPoint) -> str:
    return f'k_({w.w.real:g}{w.w.imag:+g}i)'


class Battery:
    """Runs the checks applicable to one symbol and collects their certificates."""

    def __init__(self, band: SigmaBand, phi: AffineSymbol, config: RunConfig,
                 golden: Optional[Dict[str, List[GoldenThreshold]]] = None):
        self.band = band
        self.phi = phi
        self.config = config
        self.grid = make_grid(band, config.grid_nodes)
        self.classification: Classification = classify(band, phi.a, phi.b, config.tolerance())
        self.golden = load_golden() if golden is None else golden
        rng = np.random.default_rng(config.random_seed)
        self.functions = [random_smooth(self.grid, rng) for _ in range(2 * config.pairs)]
        self.certificates: List[Certificate] = []

    def add(self, name: str, residual: Optional[float], threshold: float, **kwargs) -> Certificate:
        params = {'grid': self.grid.n_nodes, **kwargs.pop('params', {})}
        certificate = Certificate.build(name, self.band.sigma, self.phi.a, self.phi.b, residual, threshold,
                                        params=params, **kwargs)
        if certificate.verdict == INCONCLUSIVE:
            logger.warning('Certificate %s is inconclusive: residual %s, threshold %s',
                           name, certificate.residual, threshold)
        elif not certificate.consistent:
            logger.warning('Certificate %s contradicts the classifier: %s instead of %s',
                           name, certificate.verdict, certificate.expected)
        else:
            logger.info('Certificate %s: %s (residual %s)', name, certificate.verdict, certificate.residual)
        self.certificates.append(certificate)
        return certificate

    def run(self, name: str, check: Callable[[], Any]):
        try:
            check()
        except PwlabError as e:
            logger.warning('Check %s could not be completed: %s', name, e)
            self.add(name, None, 0., params={'error': str(e)})

    def golden_row(self, name: str) -> Optional[GoldenThreshold]:
        """The row of ``name`` pinned closest to this band."""
        rows = self.golden.get(name)
        return closest_row(rows, self.band.sigma) if rows else None

    def golden_threshold(self, name: str, N: int, params: Dict[str, Any], default: float = 0.) -> float:
        row = self.golden_row(name)
        if row is None:
            logger.warning('No golden threshold named %s, using %s', name, default)
            params['golden'] = 'missing'
            return default
        if not row.matches(N, self.grid.n_nodes, self.band.sigma):
            logger.info('Golden threshold %s was pinned at N=%d, grid=%d, sigma=%r; used at N=%d, grid=%d, '
                        'sigma=%r', name, row.N, row.grid, row.sigma, N, self.grid.n_nodes, self.band.sigma)
            params['golden'] = 'extrapolated'
        else:
            params['golden'] = 'pinned'
        return row.threshold

    @property
    def pairs(self):
        return zip(self.functions[::2], self.functions[1::2])

    @property
    def seeds(self) -> List[SpectralFunction]:
        return self.functions[:self.config.pairs]

    def check_pairing(self):
        worst = 0.
        for F, G in self.pairs:
            defect = abs(inner_product(apply_chat_adjoint(self.phi, F), G) - inner_product(F, apply_chat(self.phi, G)))
            worst = max(worst, defect / (F.norm() * G.norm()))
        self.add('adjoint-pairing', worst, PAIRING_TOLERANCE, expected=PASS, params={'pairs': self.config.pairs})

    def check_covariance(self):
        lattice = kernel_lattice(self.config.lattice)
        worst = 0.
        for w in lattice:
            image = apply_chat_adjoint(self.phi, kernel_spectral(w, self.grid))
            expected = kernel_spectral(KernelPoint(self.phi(w.w)), self.grid)
            worst = max(worst, (image - expected).norm() / expected.norm())
        self.add('kernel-covariance', worst, COVARIANCE_TOLERANCE, expected=PASS, params={'points': len(lattice)})

    def check_semigroup(self):
        operator = chat(self.phi)
        worst = 0.
        for F in self.seeds:
            for n in range(2, SEMIGROUP_POWERS + 1):
                direct = apply_chat(iterate_symbol(self.phi, n), F)
                scale = direct.norm() or F.norm()
                worst = max(worst, (operator.power(F, n) - direct).norm() / scale)
        self.add('semigroup-law', worst, SEMIGROUP_TOLERANCE, expected=PASS, params={'powers': SEMIGROUP_POWERS})

    def check_conjugation(self):
        tag = ConjugationTag.for_symbol(self.phi)
        worst = 0.
        for F, G in self.pairs:
            JF, JG = apply_conjugation(tag, F), apply_conjugation(tag, G)
            scale = F.norm() * G.norm()
            worst = max(worst,
                        abs(JF.norm() - F.norm()) / F.norm(),
                        (apply_conjugation(tag, JF) - F).norm() / F.norm(),
                        abs(inner_product(JF, JG) - inner_product(G, F)) / scale)
        self.add('conjugation-axioms', worst, CONJUGATION_TOLERANCE, expected=PASS, params={'conjugation': tag.a})

    def check_j_symmetry(self):
        tag = ConjugationTag.for_symbol(self.phi)
        worst = 0.
        for F in self.seeds:
            symmetric = apply_conjugation(tag, apply_chat(self.phi, apply_conjugation(tag, F)))
            worst = max(worst, (symmetric - apply_chat_adjoint(self.phi, F)).norm() / F.norm())
        self.add('j-symmetry', worst, J_SYMMETRY_TOLERANCE, fail_threshold=PROPERTY_FAILURE,
                 expected=_expect(self.classification.complex_symmetric), params={'conjugation': tag.a})

    def check_normality(self):
        residual = normality_residual(self.phi, self.config.basis_M, self.band, self.grid)
        self.add('normality', residual, PROPERTY_TOLERANCE, fail_threshold=PROPERTY_FAILURE,
                 expected=_expect(self.classification.normal), params={'M': self.config.basis_M})

    def check_unitarity(self):
        worst = 0.
        for F in self.seeds:
            image = apply_chat(self.phi, F)
            norm = F.norm()
            worst = max(worst,
                        abs(image.norm() - norm) / norm,
                        (apply_chat_adjoint(self.phi, image) - F).norm() / norm,
                        (apply_chat(self.phi, apply_chat_adjoint(self.phi, F)) - F).norm() / norm)
        self.add('unitarity', worst, PROPERTY_TOLERANCE, fail_threshold=PROPERTY_FAILURE,
                 expected=_expect(self.classification.unitary))

    def check_self_adjointness(self):
        worst = max((apply_chat(self.phi, F) - apply_chat_adjoint(self.phi, F)).norm() / F.norm()
                    for F in self.seeds)
        self.add('self-adjointness', worst, PROPERTY_TOLERANCE, fail_threshold=PROPERTY_FAILURE,
                 expected=_expect(self.classification.self_adjoint))

    def check_multiplier_injectivity(self):
        params: Dict[str, Any] = {}
        threshold = self.golden_threshold('multiplier-injectivity', 0, params, FOLD_FRACTION)
        row = self.golden_row('multiplier-injectivity')
        samples = row.grid if row is not None else 2048
        fraction = multiplier_fold_fraction(self.band, self.phi.b, samples)
        params['samples'] = samples
        self.add('multiplier-injectivity', fraction, threshold, expected=_expect(self.classification.cyclic),
                 params=params)

    def kernel_orbit_target(self, w: KernelPoint) -> KernelPoint:
        """``k_{w + conj(b)}``, spectrally ``e^{-ibt} k^_w``: one step of the orbit backwards."""
        if self.config.target_kernel is not None:
            return KernelPoint(self.config.target_kernel)
        return KernelPoint(w.w + self.phi.b.conjugate())

    def kernel_orbit(self, N: int) -> Tuple[List[SpectralFunction], SpectralFunction]:
        """The ``C_phi`` orbit of the seed kernel and the kernel it should approach."""
        w = self.config.seed_point()
        seed = kernel_spectral(w, self.grid)
        return orbit_elements(self.phi, seed, N), kernel_spectral(self.kernel_orbit_target(w), self.grid)

    def adjoint_target(self, w: KernelPoint) -> KernelPoint:
        if self.config.target_kernel is not None:
            return KernelPoint(self.config.target_kernel)
        return KernelPoint(w.w + ADJOINT_TARGET_OFFSET)

    def adjoint_kernel_orbit(self, N: int) -> Tuple[List[SpectralFunction], SpectralFunction]:
        """The ``C_phi*`` orbit of the seed kernel and the kernel it should approach."""
        w = self.config.seed_point()
        return kernel_orbit_elements(self.phi, w, N, self.grid), kernel_spectral(self.adjoint_target(w), self.grid)

    def orbit_params(self, target_point: KernelPoint) -> Dict[str, Any]:
        return {'N': self.config.orbit_N, 'seed': _kernel_label(self.config.seed_point()),
                'target': _kernel_label(target_point), 'reg': self.config.reg}

    def check_kernel_orbit(self):
        N = self.config.orbit_N
        params = self.orbit_params(self.kernel_orbit_target(self.config.seed_point()))
        threshold = self.golden_threshold('kernel-orbit', N, params)
        solution = solve_span(*self.kernel_orbit(N), self.config.reg)
        params.update(rank=solution.rank, gram_condition=solution.gram_condition)
        expected = None
        if self.config.target_kernel is None:
            expected = _expect(self.classification.kernels_all_cyclic == KERNELS_ALL)
        self.add('kernel-orbit', solution.residual, threshold, fail_threshold=ORTHOGONAL_RESIDUAL, expected=expected,
                 params=params)

    def check_adjoint_kernel_orbit(self):
        N = self.config.orbit_N
        params = self.orbit_params(self.adjoint_target(self.config.seed_point()))
        threshold = self.golden_threshold('adjoint-kernel-orbit', N, params)
        solution = solve_span(*self.adjoint_kernel_orbit(N), self.config.reg)
        params.update(rank=solution.rank, gram_condition=solution.gram_condition)
        self.add('adjoint-kernel-orbit', solution.residual, threshold,
                 expected=_expect(self.classification.adjoint_kernels_all_cyclic == KERNELS_ALL), params=params)

    def check_monotonicity(self, orbit: Callable[[int], Tuple[List[SpectralFunction], SpectralFunction]]):
        elements, target = orbit(max(MONOTONICITY_LENGTHS))
        residuals = [solve_span(elements[:N + 1], target, self.config.reg).residual for N in MONOTONICITY_LENGTHS]
        increase = max(max(later - earlier for earlier, later in zip(residuals, residuals[1:])), 0.)
        self.add('orbit-monotonicity', increase, MONOTONICITY_TOLERANCE, fail_threshold=MONOTONICITY_TOLERANCE,
                 expected=PASS, params={'lengths': list(MONOTONICITY_LENGTHS), 'residuals': residuals})

    def check_blaschke(self):
        w = self.config.seed_point().w
        b = self.phi.b
        points = [kernel_orbit_point(self.phi, w, n, adjoint=False) for n in range(BLASCHKE_HORIZON)]
        estimate = blaschke_sum(points, BLASCHKE_HORIZON)
        # Terms behave like |Im b| / (|b|^2 n), so the partial sums grow like that constant times log n
        threshold = abs(b.imag) / (2 * abs(b) ** 2)
        self.add('blaschke', estimate.log_slope, threshold, predicate=ABOVE,
                 expected=_expect(self.classification.kernels_all_cyclic == KERNELS_ALL),
                 params={'horizon': BLASCHKE_HORIZON, 'total': estimate.total})

    def check_carleman(self):
        step = abs(self.phi.b.real)
        result = carleman_check(ExponentialSequence.arithmetic(step, CARLEMAN_COUNT), self.band)
        threshold = MARGIN_TOLERANCE * self.band.sigma / math.pi
        residual = None if result.status == CarlemanStatus.INCONCLUSIVE else max(result.margin, 0.)
        self.add('carleman', residual, threshold, predicate=ABOVE, fail_threshold=threshold,
                 expected=_expect(self.classification.kernels_all_cyclic == KERNELS_ALL),
                 params={'step': step, 'count': CARLEMAN_COUNT, 'margin': result.margin,
                         'status': result.status.value})

    def check_finite_orbit(self):
        rank = 1 if self.phi.is_translation else 2
        worst = 0.
        for F in self.seeds:
            singular_values = span_singular_values(orbit_elements(self.phi, F, self.config.orbit_N))
            if singular_values.size > rank:
                worst = max(worst, float(singular_values[rank] / singular_values[0]))
        self.add('finite-orbit-obstruction', worst, RANK_TOLERANCE, fail_threshold=PROPERTY_FAILURE,
                 expected=_expect(not self.classification.cyclic),
                 params={'rank': rank, 'N': self.config.orbit_N})

    def check_support_obstruction(self):
        sigma = self.band.sigma
        edge = abs(self.phi.a) * sigma
        width = sigma - edge

        def bump(t: np.ndarray) -> np.ndarray:
            t = np.asarray(t, dtype=float)
            outside = (np.abs(t) > edge) & (np.abs(t) < sigma)
            return np.where(outside, np.sign(t) * np.sin(math.pi * (np.abs(t) - edge) / width) ** 2, 0.) + 0j

        w = self.config.seed_point()
        seed = kernel_spectral(w, self.grid)
        beta = SpectralFunction(self.grid, bump(self.grid.nodes), breaks=[edge], continuation=bump)
        target = seed + beta
        N = self.config.orbit_N
        solution = solve_span(orbit_elements(self.phi, seed, N), target, self.config.reg)

        # Orbit elements past the seed vanish for |t| > |a| sigma, so there the target can only be matched by
        # multiples of the seed: the part of the bump orthogonal to the seed on that set is out of reach
        nodes, weights, samples = quadrature_frame([seed, beta, target])
        far = np.abs(nodes) > edge
        far_weights, far_seed, far_beta = weights[far], samples[0][far], samples[1][far]
        seed_energy = float(np.sum(far_weights * np.abs(far_seed) ** 2))
        overlap = complex(np.sum(far_weights * far_beta * np.conj(far_seed)))
        orthogonal = float(np.sum(far_weights * np.abs(far_beta) ** 2))
        if seed_energy > 0:
            orthogonal -= abs(overlap) ** 2 / seed_energy
        target_norm = math.sqrt(float(np.sum(weights * np.abs(samples[2]) ** 2)))
        bound = math.sqrt(max(orthogonal, 0.)) / target_norm
        threshold = max(bound - OBSTRUCTION_SLACK, 0.)
        self.add('forward-support-obstruction', solution.residual, threshold, predicate=ABOVE,
                 fail_threshold=threshold, expected=_expect(not self.classification.cyclic),
                 params={'N': N, 'bound': bound, 'edge': edge, 'seed': _kernel_label(w), 'rank': solution.rank})

    def check_fixed_point(self):
        alpha = fixed_point(self.phi)
        kernel = kernel_spectral(KernelPoint(alpha), self.grid)
        residual = (apply_chat_adjoint(self.phi, kernel) - kernel).norm() / kernel.norm()
        self.add('fixed-point-orbit', residual, FIXED_POINT_TOLERANCE, expected=PASS,
                 params={'fixed_point': [alpha.real, alpha.imag]})

    def check_consistency(self):
        contradicted = [certificate.name for certificate in self.certificates if not certificate.consistent]
        inconclusive = [certificate.name for certificate in self.certificates if certificate.verdict == INCONCLUSIVE]
        self.add('classifier-consistency', float(len(contradicted)), 0., fail_threshold=0., expected=PASS,
                 params={'contradicted': contradicted, 'inconclusive': inconclusive})

    def checks(self) -> List[tuple]:
        """The ``(name, check)`` pairs applicable to the symbol's regime, in report order."""
        phi, classification = self.phi, self.classification
        checks = [
            ('adjoint-pairing', self.check_pairing),
            ('kernel-covariance', self.check_covariance),
            ('semigroup-law', self.check_semigroup),
        ]
        if not phi.is_contraction:
            checks += [('conjugation-axioms', self.check_conjugation), ('j-symmetry', self.check_j_symmetry)]
        checks += [
            ('normality', self.check_normality),
            ('unitarity', self.check_unitarity),
            ('self-adjointness', self.check_self_adjointness),
        ]
        if phi.is_translation:
            if classification.cyclic:
                checks += [('multiplier-injectivity', self.check_multiplier_injectivity),
                           ('kernel-orbit', self.check_kernel_orbit),
                           ('orbit-monotonicity', lambda: self.check_monotonicity(self.kernel_orbit))]
                if not self.config.tolerance().is_real(phi.b):
                    checks.append(('blaschke', self.check_blaschke))
                else:
                    checks.append(('carleman', self.check_carleman))
            elif abs(phi.b) <= classification.eps:
                checks.append(('finite-orbit-obstruction', self.check_finite_orbit))
            else:
                logger.warning('Non-cyclicity of translation by real b=%r with |b| > pi/sigma rests on the folding '
                               'of e^{ibt} alone; no certificate is issued', phi.b.real)
        elif phi.is_reflection:
            checks.append(('finite-orbit-obstruction', self.check_finite_orbit))
        else:
            checks += [('forward-support-obstruction', self.check_support_obstruction),
                       ('adjoint-kernel-orbit', self.check_adjoint_kernel_orbit),
                       ('orbit-monotonicity', lambda: self.check_monotonicity(self.adjoint_kernel_orbit))]
        if not phi.is_translation:
            checks.append(('fixed-point-orbit', self.check_fixed_point))
        return checks


def certify_all(band: SigmaBand, phi: AffineSymbol, config: RunConfig,
                golden: Optional[Dict[str, List[GoldenThreshold]]] = None) -> List[Certificate]:
    """
    Runs every check applicable to ``phi`` and cross-checks the outcome with the classifier; the last certificate,
    ``classifier-consistency``, counts the certificates that contradict it.

    Never raises for numerical trouble: a check that cannot be completed yields an inconclusive certificate.

    :param golden: Threshold table, loaded with :func:`load_golden` when omitted
    """
    battery = Battery(band, phi, config, golden)
    logger.info('Certifying %r on %r with %d nodes', phi, band, config.grid_nodes)
    for name, check in battery.checks():
        battery.run(name, check)
    battery.check_consistency()
    return battery.certificates
