import math
from unittest import TestCase

from pwlab.operators import AffineSymbol, iterate_symbol, fixed_point, adjoint_symbol, reflection_factorization, \
    kernel_orbit_point, REFLECTION
from pwlab.utils import AdjointNotCompositionError, InvalidArgumentError, NoFixedPointError


class TestAffineSymbol(TestCase):
    def test_construction(self):
        phi = AffineSymbol(.5, 1)
        self.assertEqual(.5, phi.a)
        self.assertEqual(1 + 0j, phi.b)
        self.assertEqual(2.5 + 1j, phi(3 + 2j))
        self.assertTrue(phi.is_contraction)
        self.assertFalse(phi.is_translation)
        self.assertTrue(AffineSymbol(1, 1j).is_translation)
        self.assertTrue(AffineSymbol(-1).is_reflection)
        self.assertEqual('<AffineSymbol a=0.5, b=(1+0j)>', repr(phi))
        self.assertEqual(AffineSymbol(1., 0j), AffineSymbol.identity())

        for a in (0, 2, -1.5, math.inf, math.nan, 1j, .5 + 0j, 'x'):
            with self.assertRaises(InvalidArgumentError):
                AffineSymbol(a)
        with self.assertRaises(InvalidArgumentError):
            AffineSymbol(1, complex(math.inf, 0))

    def test_compose(self):
        phi, psi = AffineSymbol(.5, 1), AffineSymbol(-1, 1j)
        composed = phi.compose(psi)
        for z in (0, 1 + 1j, -2.5):
            self.assertAlmostEqual(phi(psi(z)), composed(z), places=14)

    def test_iterate(self):
        phi = AffineSymbol(.5, 1)
        repeated = AffineSymbol.identity()
        for n in range(8):
            closed = iterate_symbol(phi, n)
            self.assertAlmostEqual(repeated.a, closed.a, places=14)
            self.assertAlmostEqual(repeated.b, closed.b, places=14)
            repeated = phi.compose(repeated)

        self.assertEqual(AffineSymbol(1, 5j), iterate_symbol(AffineSymbol(1, 1j), 5))
        self.assertEqual(AffineSymbol(-1, 1 + 1j), iterate_symbol(AffineSymbol(-1, 1 + 1j), 3))
        self.assertEqual(AffineSymbol.identity(), iterate_symbol(AffineSymbol(-1, 1 + 1j), 2))
        self.assertEqual(AffineSymbol.identity(), iterate_symbol(phi, 0))
        with self.assertRaises(InvalidArgumentError):
            iterate_symbol(phi, -1)

    def test_fixed_point(self):
        self.assertEqual(2, fixed_point(AffineSymbol(.5, 1)))
        self.assertEqual(.5j, fixed_point(AffineSymbol(-1, 1j)))

        with self.assertRaises(NoFixedPointError) as ctx:
            fixed_point(AffineSymbol(1, 1))
        self.assertFalse(ctx.exception.unique_failure)
        with self.assertRaises(NoFixedPointError) as ctx:
            fixed_point(AffineSymbol.identity())
        self.assertTrue(ctx.exception.unique_failure)

    def test_adjoint_symbol(self):
        self.assertEqual(AffineSymbol(1, -1 + 1j), adjoint_symbol(AffineSymbol(1, 1 + 1j)))
        self.assertEqual(AffineSymbol(-1, -1j), adjoint_symbol(AffineSymbol(-1, 1j)))
        self.assertEqual(AffineSymbol(-1, 2), adjoint_symbol(AffineSymbol(-1, 2)))
        with self.assertRaises(AdjointNotCompositionError) as ctx:
            adjoint_symbol(AffineSymbol(.5, 1))
        self.assertEqual(2, ctx.exception.type_inflation)

    def test_reflection_factorization(self):
        phi = AffineSymbol(-.5, 1 + 1j)
        eta, psi = reflection_factorization(phi)
        self.assertIs(REFLECTION, eta)
        self.assertEqual(AffineSymbol(.5, 1 + 1j), psi)
        for z in (0, 1 - 1j, 3.5):
            self.assertEqual(phi(z), psi(eta(z)))
        with self.assertRaises(InvalidArgumentError):
            reflection_factorization(AffineSymbol(.5))

    def test_kernel_orbit_point(self):
        phi = AffineSymbol(.5, 1)
        self.assertEqual(1.5, kernel_orbit_point(phi, 1, 1))
        self.assertAlmostEqual(2 - 2 ** -9, kernel_orbit_point(phi, 0, 10), places=14)
        self.assertEqual(1 - 3 + 3j, kernel_orbit_point(AffineSymbol(1, 1 + 1j), 1, 3, adjoint=False))
        self.assertEqual(1 + 3 + 3j, kernel_orbit_point(AffineSymbol(1, 1 + 1j), 1, 3))
        with self.assertRaises(InvalidArgumentError):
            kernel_orbit_point(phi, 0, 1, adjoint=False)
