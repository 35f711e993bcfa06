import math
from unittest import TestCase

import numpy as np
from stereotype import ValidationError

from pwlab.classify import Classification, RealnessTolerance, classify, explain, multiplier_injective, \
    KERNELS_ALL, KERNELS_NONE, KERNELS_NOT_COVERED
from pwlab.core import SigmaBand
from pwlab.utils import InvalidArgumentError
from tests.common import PI_BAND, UNIT_BAND

EXACT = RealnessTolerance(0)


class TestClassify(TestCase):
    def test_critical_translation(self):
        c = classify(PI_BAND, 1, 1)
        self.assertTrue(c.bounded)
        self.assertTrue(c.cyclic)
        self.assertTrue(c.adjoint_cyclic)
        self.assertFalse(c.supercyclic)
        self.assertTrue(c.complex_symmetric)
        self.assertTrue(c.normal)
        self.assertTrue(c.unitary)
        self.assertFalse(c.self_adjoint)
        self.assertEqual(KERNELS_NONE, c.kernels_all_cyclic)
        self.assertEqual(KERNELS_NONE, c.adjoint_kernels_all_cyclic)

    def test_subcritical_translation(self):
        c = classify(PI_BAND, 1, .5)
        self.assertTrue(c.cyclic)
        self.assertEqual(KERNELS_ALL, c.kernels_all_cyclic)
        self.assertEqual(KERNELS_ALL, c.adjoint_kernels_all_cyclic)

    def test_supercritical_and_zero_translation(self):
        for b in (1.5, -4, 0):
            c = classify(PI_BAND, 1, b)
            self.assertFalse(c.cyclic)
            self.assertFalse(c.adjoint_cyclic)
            self.assertEqual(KERNELS_NONE, c.kernels_all_cyclic)
            self.assertTrue(c.normal)
        self.assertTrue(classify(PI_BAND, 1, 0).self_adjoint)

    def test_imaginary_translation(self):
        c = classify(PI_BAND, 1, 1j)
        self.assertTrue(c.cyclic)
        self.assertTrue(c.self_adjoint)
        self.assertTrue(c.normal)
        self.assertFalse(c.unitary)
        self.assertEqual(KERNELS_ALL, c.kernels_all_cyclic)

        c = classify(UNIT_BAND, 1, 5 + 1j)
        self.assertTrue(c.cyclic)
        self.assertFalse(c.self_adjoint)
        self.assertEqual(KERNELS_ALL, c.kernels_all_cyclic)

    def test_tiny_real_translation_is_cyclic(self):
        # Only Im b is snapped, any nonzero real shift up to pi/sigma gives an injective multiplier
        c = classify(PI_BAND, 1, 1e-13)
        self.assertTrue(c.cyclic)
        self.assertEqual(KERNELS_ALL, c.kernels_all_cyclic)
        self.assertTrue(c.self_adjoint)
        self.assertFalse(classify(PI_BAND, 1, 0).cyclic)

    def test_reflection(self):
        c = classify(UNIT_BAND, -1, 1j)
        self.assertTrue(c.bounded)
        self.assertFalse(c.cyclic)
        self.assertFalse(c.adjoint_cyclic)
        self.assertTrue(c.complex_symmetric)
        self.assertFalse(c.normal)
        self.assertFalse(c.self_adjoint)
        self.assertFalse(c.unitary)
        self.assertEqual(KERNELS_NONE, c.kernels_all_cyclic)

        c = classify(UNIT_BAND, -1, 2)
        self.assertTrue(c.normal)
        self.assertTrue(c.self_adjoint)
        self.assertTrue(c.unitary)

    def test_contraction(self):
        c = classify(PI_BAND, .5, 1)
        self.assertTrue(c.bounded)
        self.assertFalse(c.cyclic)
        self.assertTrue(c.adjoint_cyclic)
        self.assertFalse(c.complex_symmetric)
        self.assertFalse(c.normal)
        self.assertEqual(KERNELS_NONE, c.kernels_all_cyclic)
        self.assertEqual(KERNELS_ALL, c.adjoint_kernels_all_cyclic)
        self.assertTrue(classify(PI_BAND, -.25, 1j).adjoint_cyclic)

    def test_unbounded(self):
        for a in (2, 0, -1.5, 1j, math.inf, math.nan):
            c = classify(UNIT_BAND, a, 0)
            self.assertFalse(c.bounded)
            self.assertFalse(any((c.cyclic, c.adjoint_cyclic, c.supercyclic, c.complex_symmetric, c.normal,
                                  c.self_adjoint, c.unitary)))
            self.assertEqual(KERNELS_NOT_COVERED, c.kernels_all_cyclic)
            self.assertEqual(KERNELS_NOT_COVERED, c.adjoint_kernels_all_cyclic)
            self.assertEqual(1, len(c.rule_citations))
        self.assertFalse(classify(UNIT_BAND, 1, complex(math.inf, 0)).bounded)

    def test_tolerance_snaps_near_unit_slope(self):
        self.assertTrue(classify(UNIT_BAND, 1 + 1e-13, .5).cyclic)
        self.assertFalse(classify(UNIT_BAND, 1 + 1e-13, .5, EXACT).bounded)
        self.assertTrue(classify(UNIT_BAND, 1 - 1e-13, .5).cyclic)
        self.assertFalse(classify(UNIT_BAND, 1 - 1e-13, .5, EXACT).cyclic)
        self.assertTrue(classify(UNIT_BAND, 1, .5 + 1e-13j).unitary)
        self.assertFalse(classify(UNIT_BAND, 1, .5 + 1e-13j, EXACT).unitary)

    def test_exact_critical_boundary(self):
        critical = PI_BAND.critical_shift
        self.assertEqual(KERNELS_NONE, classify(PI_BAND, 1, critical, EXACT).kernels_all_cyclic)
        self.assertTrue(classify(PI_BAND, 1, critical, EXACT).cyclic)

        below = float(np.nextafter(critical, 0))
        self.assertTrue(classify(PI_BAND, 1, below, EXACT).cyclic)
        self.assertEqual(KERNELS_ALL, classify(PI_BAND, 1, below, EXACT).kernels_all_cyclic)

        above = float(np.nextafter(critical, 2))
        self.assertFalse(classify(PI_BAND, 1, above, EXACT).cyclic)
        self.assertEqual(KERNELS_NONE, classify(PI_BAND, 1, above, EXACT).kernels_all_cyclic)

    def test_invariants_over_random_symbols(self):
        rng = np.random.default_rng(2024)
        slopes = [1., -1., 1 + 1e-13, -1 + 1e-13, 0., 2.]
        for _ in range(10000):
            band = SigmaBand(rng.uniform(.1, 10))
            if rng.random() < .4:
                a = slopes[rng.integers(len(slopes))]
            else:
                a = rng.uniform(-1.5, 1.5)
            kind = rng.integers(3)
            b = complex(rng.normal(scale=2), 0 if kind == 0 else rng.normal(scale=2) if kind == 1 else 1e-14)
            c = classify(band, a, b)
            # classify validates, the implications are checked here once more in plain terms
            self.assertTrue(not c.unitary or c.normal)
            self.assertTrue(not c.normal or c.complex_symmetric)
            self.assertTrue(not c.self_adjoint or c.normal)
            self.assertTrue(not c.cyclic or c.adjoint_cyclic)
            self.assertFalse(c.supercyclic)
            self.assertTrue(c.kernels_all_cyclic != KERNELS_ALL or c.cyclic)
            if not c.bounded:
                self.assertEqual(KERNELS_NOT_COVERED, c.kernels_all_cyclic)


class TestClassification(TestCase):
    def _record(self, **overrides):
        record = {
            'sigma': 1., 'a': 1., 'b': [1., 0.], 'eps': 1e-12, 'bounded': True, 'cyclic': True,
            'adjoint_cyclic': True, 'supercyclic': False, 'complex_symmetric': True, 'normal': True,
            'self_adjoint': False, 'unitary': True, 'kernels_all_cyclic': 'all', 'adjoint_kernels_all_cyclic': 'all',
        }
        record.update(overrides)
        return Classification(record)

    def test_valid_record(self):
        c = self._record()
        c.validate()
        self.assertEqual(1 + 0j, c.b)
        self.assertEqual(math.pi, c.critical_shift)
        primitive = c.to_primitive()
        self.assertEqual([1., 0.], primitive['b'])
        self.assertEqual([], primitive['rule_citations'])

    def test_implications_are_validated(self):
        with self.assertRaises(ValidationError) as ctx:
            self._record(normal=False).validate()
        self.assertEqual({'unitary': ['A unitary operator must be normal']}, ctx.exception.errors)

        with self.assertRaises(ValidationError) as ctx:
            self._record(adjoint_cyclic=False).validate()
        self.assertEqual({'cyclic': ['Cyclic operators in this family have cyclic adjoints']}, ctx.exception.errors)

        with self.assertRaises(ValidationError) as ctx:
            self._record(supercyclic=True).validate()
        self.assertEqual({'supercyclic': ['Bounded composition operators on the Paley-Wiener space are never '
                                          'supercyclic']}, ctx.exception.errors)

        with self.assertRaises(ValidationError) as ctx:
            self._record(kernels_all_cyclic='maybe').validate()
        self.assertIn('kernels_all_cyclic', ctx.exception.errors)

    def test_explain(self):
        c = classify(PI_BAND, 1, 1)
        lines = explain(c)
        self.assertEqual(len(c.rule_citations) + 1, len(lines))
        self.assertTrue(lines[0].startswith('C_phi with phi(z) = 1.0 z + (1+0j)'))
        self.assertTrue(any(line.startswith('kernels not cyclic: for |b| = pi/sigma') for line in lines))
        for line in lines[1:]:
            self.assertIn(':', line)

    def test_explain_names_the_rule(self):
        def rule(c, verdict):
            return next(line for line in explain(c) if line.startswith(verdict + ': '))

        self.assertEqual('cyclic: C_phi is multiplication by e^{ibt}, injective on [-sigma, sigma] since b is '
                         'non-real or 0 < |b| <= pi/sigma', rule(classify(PI_BAND, 1, 1), 'cyclic'))
        self.assertEqual('not complex symmetric: C_phi* is cyclic while C_phi is not, which a complex symmetric '
                         'operator cannot be', rule(classify(PI_BAND, .5, 0), 'not complex symmetric'))
        self.assertEqual('unbounded: C_phi is bounded only for phi(z) = az + b with a real, 0 < |a| <= 1',
                         rule(classify(PI_BAND, 2, 0), 'unbounded'))


class TestHelpers(TestCase):
    def test_tolerance(self):
        tol = RealnessTolerance(1e-6)
        self.assertTrue(tol.is_real(1 + 1e-7j))
        self.assertFalse(tol.is_real(1 + 1e-5j))
        self.assertTrue(tol.is_close(1, 1 + 1e-7))
        self.assertEqual('<RealnessTolerance eps=1e-06>', repr(tol))
        for eps in (-1, math.nan):
            with self.assertRaises(InvalidArgumentError):
                RealnessTolerance(eps)

    def test_multiplier_injective(self):
        self.assertTrue(multiplier_injective(PI_BAND, 1j))
        self.assertTrue(multiplier_injective(PI_BAND, 1))
        self.assertTrue(multiplier_injective(PI_BAND, -.5))
        self.assertFalse(multiplier_injective(PI_BAND, 1.01))
        self.assertFalse(multiplier_injective(PI_BAND, 0))
        self.assertTrue(multiplier_injective(PI_BAND, 1e-13))
        self.assertTrue(multiplier_injective(PI_BAND, 1e-13 + 1e-14j))
