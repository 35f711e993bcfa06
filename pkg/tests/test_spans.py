import math
from unittest import TestCase

import numpy as np

from pwlab.certify import ExponentialSequence, SpanSolution, solve_span, orbit_gram, span_singular_values, \
    orbit_elements, kernel_orbit_elements, orbit_residual, adjoint_orbit_kernel_residual, completeness_residual
from pwlab.core import KernelPoint, SpectralFunction, kernel_spectral, make_grid
from pwlab.operators import AffineSymbol
from pwlab.utils import IncompatibleGridsError, InvalidArgumentError, SpanSolveError
from tests.common import PI_BAND, PI_GRID, UNIT_BAND, UNIT_GRID, exponential, random_functions

ORIGIN = KernelPoint(0)


class TestOrbitResidual(TestCase):
    def test_critical_translation_orbit_misses_conjugate_exponential(self):
        seed = kernel_spectral(ORIGIN, PI_GRID)
        target = exponential(PI_GRID, -1)
        for N in (5, 10, 20, 40):
            residual = orbit_residual(AffineSymbol(1, 1), seed, target, N)
            self.assertAlmostEqual(1., residual, delta=1e-8)

    def test_orthogonal_orbit_gram(self):
        elements = orbit_elements(AffineSymbol(1, 1), kernel_spectral(ORIGIN, PI_GRID), 6)
        self.assertEqual(7, len(elements))
        np.testing.assert_allclose(2 * math.pi * np.eye(7), orbit_gram(elements), atol=1e-9)

    def test_subcritical_translation_orbit_converges(self):
        seed = kernel_spectral(ORIGIN, PI_GRID)
        target = exponential(PI_GRID, -.5)
        phi = AffineSymbol(1, .5)
        residuals = {N: orbit_residual(phi, seed, target, N) for N in (10, 20, 40, 60)}
        self.assertGreater(residuals[10], residuals[20])
        self.assertGreater(residuals[20], residuals[40])
        self.assertLessEqual(residuals[60], residuals[40] + 1e-12)
        self.assertLess(residuals[60], .5)

    def test_residual_is_nonincreasing(self):
        seed = random_functions(UNIT_GRID, 1)[0]
        target = exponential(UNIT_GRID, -2)
        for phi in (AffineSymbol(1, .5), AffineSymbol(1, 1j), AffineSymbol(1, 1 + 1j)):
            residuals = [orbit_residual(phi, seed, target, N) for N in (1, 2, 4, 8, 16, 32)]
            for previous, current in zip(residuals, residuals[1:]):
                self.assertLessEqual(current, previous + 1e-12, msg=repr(phi))

    def test_identity_orbit(self):
        seed = random_functions(PI_GRID, 1)[0]
        self.assertLessEqual(orbit_residual(AffineSymbol.identity(), seed, seed, 3), 1e-12)
        self.assertLessEqual(orbit_residual(AffineSymbol.identity(), seed, 2j * seed, 3), 1e-12)

    def test_orbit_length(self):
        seed = kernel_spectral(ORIGIN, PI_GRID)
        with self.assertRaises(InvalidArgumentError):
            orbit_residual(AffineSymbol(1, 1), seed, seed, 0)
        with self.assertRaises(InvalidArgumentError):
            kernel_orbit_elements(AffineSymbol(.5, 1), ORIGIN, 0, PI_GRID)

    def test_regularization_insensitivity(self):
        seed = kernel_spectral(ORIGIN, PI_GRID)
        target = exponential(PI_GRID, -1)
        coarse = orbit_residual(AffineSymbol(1, 1), seed, target, 40, reg=1e-10)
        fine = orbit_residual(AffineSymbol(1, 1), seed, target, 40, reg=1e-12)
        self.assertLess(abs(coarse - fine), 1e-4)


class TestAdjointKernelOrbit(TestCase):
    def test_contraction_kernel_orbit_is_dense(self):
        phi = AffineSymbol(.5, 1)
        target = kernel_spectral(KernelPoint(5), UNIT_GRID)
        residuals = [adjoint_orbit_kernel_residual(phi, ORIGIN, target, N) for N in (5, 10, 20, 40)]
        self.assertLess(residuals[-1], .2)
        for previous, current in zip(residuals, residuals[1:]):
            self.assertLessEqual(current, previous + 1e-12)

    def test_fixed_point_orbit_is_one_kernel(self):
        phi = AffineSymbol(.5, 1)
        target = kernel_spectral(KernelPoint(2), UNIT_GRID)
        self.assertLessEqual(adjoint_orbit_kernel_residual(phi, KernelPoint(2), target, 10), 1e-12)
        elements = kernel_orbit_elements(phi, KernelPoint(2), 10, UNIT_GRID)
        self.assertEqual(11, len(elements))
        self.assertEqual(1, solve_span(elements, target).rank)

    def test_reflection_kernel_orbit_is_finite(self):
        phi = AffineSymbol(-1)
        target = kernel_spectral(KernelPoint(3), PI_GRID)
        self.assertGreaterEqual(adjoint_orbit_kernel_residual(phi, KernelPoint(1), target, 5), .5)
        singular_values = span_singular_values(kernel_orbit_elements(phi, KernelPoint(1), 5, PI_GRID))
        self.assertEqual(6, singular_values.size)
        self.assertGreater(singular_values[1], .1 * singular_values[0])
        self.assertLess(singular_values[2], 1e-10 * singular_values[0])


class TestCompleteness(TestCase):
    def test_integer_frequencies(self):
        seq = ExponentialSequence(np.arange(81))
        self.assertAlmostEqual(1., completeness_residual(seq, PI_BAND, [exponential(PI_GRID, -1)]), delta=1e-8)
        self.assertLessEqual(completeness_residual(seq, PI_BAND, [exponential(PI_GRID, 3)]), 1e-8)
        # The largest residual over the targets is reported
        self.assertAlmostEqual(1., completeness_residual(seq, PI_BAND, [exponential(PI_GRID, 3),
                                                                          exponential(PI_GRID, -1)]), delta=1e-8)

    def test_half_integer_frequencies(self):
        seq = ExponentialSequence(np.arange(81) / 2)
        self.assertLess(completeness_residual(seq, PI_BAND, [exponential(PI_GRID, -.5)]), .5)

    def test_errors(self):
        seq = ExponentialSequence(np.arange(5))
        with self.assertRaises(IncompatibleGridsError):
            completeness_residual(seq, UNIT_BAND, [exponential(PI_GRID, 1)])
        with self.assertRaises(IncompatibleGridsError):
            completeness_residual(seq, PI_BAND, [exponential(PI_GRID, 1), exponential(make_grid(PI_BAND, 64), 1)])
        with self.assertRaises(InvalidArgumentError):
            completeness_residual(seq, PI_BAND, [])


class TestSolveSpan(TestCase):
    def test_solution(self):
        elements = [exponential(PI_GRID, n) for n in range(3)]
        solution = solve_span(elements, elements[0] + elements[2])
        self.assertIsInstance(solution, SpanSolution)
        self.assertLessEqual(solution.residual, 1e-12)
        self.assertEqual(3, solution.rank)
        self.assertAlmostEqual(1., solution.gram_condition, places=8)

        duplicated = solve_span(elements + elements, exponential(PI_GRID, 5))
        self.assertEqual(3, duplicated.rank)
        self.assertAlmostEqual(1., duplicated.residual, delta=1e-12)

    def test_zero_elements(self):
        zero = SpectralFunction(PI_GRID, np.zeros(PI_GRID.n_nodes))
        self.assertEqual(SpanSolution(1., 0, 1.), solve_span([zero], exponential(PI_GRID, 1)))

    def test_errors(self):
        target = exponential(PI_GRID, 1)
        with self.assertRaises(InvalidArgumentError):
            solve_span([target], target, reg=-1)
        with self.assertRaises(InvalidArgumentError):
            solve_span([], target)
        with self.assertRaises(InvalidArgumentError):
            solve_span([target], SpectralFunction(PI_GRID, np.zeros(PI_GRID.n_nodes)))
        with self.assertRaises(SpanSolveError):
            solve_span([SpectralFunction(PI_GRID, np.full(PI_GRID.n_nodes, math.nan))], target)
        with self.assertRaises(IncompatibleGridsError):
            solve_span([exponential(UNIT_GRID, 1)], target)
