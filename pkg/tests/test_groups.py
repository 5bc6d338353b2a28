import unittest
from math import prod

from hypothesis import given, settings, strategies as st

from pykkboot.groups import (
    ZERO, DivAtom, FGGroup, GroupExpr, GroupValue, canonicalize, direct_sum,
    ext, finite_groups, group_support, hom, injective_support, localization_vanishes, tensor,
    invariant_factors, tor, value_sum,
)
from pykkboot.linalg import IntMatrix, cokernel_invariants
from pykkboot.zariski import SpecPoint, SpecSubset

Z  = GroupExpr.free()
Q  = GroupExpr.rationals()
C  = GroupExpr.cyclic
I  = GroupExpr.prufer_group

@st.composite
def group_exprs(draw, compact=False):

    rank   = draw( st.integers(0, 2) )
    orders = draw( st.lists(st.integers(2, 24), max_size=3) )
    fg     = FGGroup.from_cyclic_orders(orders, rank=rank)
    if compact:
        return GroupExpr(fg)
    q      = draw( st.integers(0, 1) )
    prufer = draw( st.lists(st.sampled_from([2, 3, 5]), max_size=2) )
    return GroupExpr(fg, q, tuple(prufer))

class TestCanonicalForm(unittest.TestCase):

    def test_invariant_factors(self):

        group = FGGroup.from_cyclic_orders([4, 6, 0, 1])
        self.assertEqual( group.rank, 1 )
        self.assertEqual( group.factors, (2, 12) )
        self.assertEqual( group.elementary_divisors(), [2, 3, 4] )

    def test_bad_chain(self):

        with self.assertRaises(ValueError):
            FGGroup(factors=(4, 6))
        with self.assertRaises(ValueError):
            FGGroup(factors=(1,))

    def test_bad_atom(self):

        with self.assertRaises(ValueError):
            DivAtom(4)
        with self.assertRaises(ValueError):
            GroupExpr(prufer=(9,))

    def test_canonicalize(self):

        self.assertEqual( canonicalize( IntMatrix.from_rows([[6]]) ), C(6) )
        self.assertEqual( canonicalize( IntMatrix.diagonal([2, 3]) ), C(6) )
        self.assertEqual(
            canonicalize( IntMatrix.zeros(1, 0), q_copies=1 ),
            direct_sum(Z, Q),
        )

    def test_direct_sum(self):

        self.assertEqual( direct_sum(C(2), C(2)).fg.factors, (2, 2) )
        self.assertEqual( direct_sum(C(2), C(3)).fg.factors, (6,) )
        self.assertEqual( direct_sum(ZERO, I(5)), I(5) )
        self.assertEqual( direct_sum(I(5), I(2)).prufer, (2, 5) )

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(0, 200), max_size=8))
    def test_matches_smith_form(self, orders):

        expected = cokernel_invariants( IntMatrix.diagonal(orders) )
        self.assertEqual( FGGroup.from_cyclic_orders(orders), expected )
        self.assertEqual( invariant_factors(n for n in orders if n > 1), expected.factors )

    @settings(max_examples=5, deadline=2000)
    @given(st.lists(st.integers(2, 64), min_size=200, max_size=200))
    def test_many_summands(self, orders):

        total = direct_sum( *(C(n) for n in orders) )
        self.assertEqual( total.fg, FGGroup.from_cyclic_orders(orders) )
        self.assertEqual( total.fg.order, prod(orders) )
        self.assertEqual(
            value_sum( GroupValue.exact(C(n)) for n in orders ).group,
            total,
        )

    def test_str(self):

        self.assertEqual( str( direct_sum(Z, Z, C(12), Q, I(3)) ), 'Z^2 + Z/12 + Q + I(3)' )
        self.assertEqual( str(ZERO), '0' )

    def test_predicates(self):

        self.assertTrue( ZERO.is_zero() )
        self.assertTrue( C(4).is_finite() )
        self.assertTrue( direct_sum(Z, Z).is_free() )
        self.assertTrue( direct_sum(Q, I(2)).is_divisible() )
        self.assertTrue( direct_sum(C(3), I(2)).is_torsion() )
        self.assertFalse( Q.is_torsion() )
        self.assertFalse( direct_sum(Z, Q).is_fg() )

    def test_finite_groups(self):

        groups = finite_groups(16)
        self.assertEqual( sum(1 for g in groups if g.order == 16), 5 )
        self.assertEqual( sum(1 for g in groups if g.order == 12), 2 )
        self.assertEqual( groups[0], FGGroup() )
        self.assertEqual( len(set(groups)), len(groups) )

class TestBifunctors(unittest.TestCase):

    def setUp(self):

        self.p = 3

    def test_hom(self):

        G = direct_sum(C(4), Q, I(2))
        self.assertEqual( hom(Z, G), GroupValue.exact(G) )
        self.assertEqual( hom(C(4), C(6)).group, C(2) )
        self.assertTrue( hom(C(5), Z).is_zero() )
        self.assertEqual( hom(C(12), I(2)).group, C(4) )
        self.assertEqual( hom(Q, Q).group, Q )
        self.assertTrue( hom(I(3), Q).is_zero() )
        self.assertTrue( hom(I(3), I(5)).is_zero() )

    def test_hom_unrepresentable(self):

        value = hom(I(self.p), I(self.p))
        self.assertFalse( value.is_exact() )
        self.assertFalse( value.is_zero() )
        self.assertIn( 'adic', value.tags[0] )
        self.assertFalse( hom(Q, I(self.p)).is_zero() )

    def test_ext(self):

        self.assertEqual( ext(C(6), Z).group, C(6) )
        self.assertEqual( ext(C(4), C(6)).group, C(2) )
        self.assertTrue( ext(C(7), I(7)).is_zero() )
        self.assertTrue( ext(Z, C(7)).is_zero() )
        self.assertTrue( ext(Q, C(7)).is_zero() )
        self.assertEqual( ext(I(3), C(18)).group, C(9) )
        self.assertFalse( ext(Q, Z).is_exact() )
        self.assertFalse( ext(I(2), Z).is_exact() )

    def test_tensor(self):

        G = direct_sum(C(4), I(2))
        self.assertEqual( tensor(Z, G), G )
        self.assertEqual( tensor(C(4), C(6)), C(2) )
        self.assertTrue( tensor(I(self.p), C(9)).is_zero() )
        self.assertEqual( tensor(Q, Q), Q )
        self.assertTrue( tensor(Q, I(2)).is_zero() )
        self.assertEqual( tensor(I(2), Z), I(2) )

    def test_tor(self):

        self.assertTrue( tor(Z, C(4)).is_zero() )
        self.assertEqual( tor(C(4), C(6)), C(2) )
        self.assertEqual( tor(I(3), I(3)), I(3) )
        self.assertTrue( tor(I(3), I(5)).is_zero() )
        self.assertEqual( tor(C(18), I(3)), C(9) )
        self.assertTrue( tor(Q, I(3)).is_zero() )

    def test_value_sum(self):

        bad   = GroupValue.unrepresentable('x')
        value = value_sum([GroupValue.exact(C(2)), bad, GroupValue.unrepresentable('y', 'x')])
        self.assertEqual( value.tags, ('x', 'y') )
        self.assertEqual( value_sum([]), GroupValue.exact(ZERO) )
        with self.assertRaises(ValueError):
            GroupValue()

    @settings(max_examples=80, deadline=None)
    @given(group_exprs(), group_exprs(), group_exprs())
    def test_biadditive(self, G, H, K):

        for func in (tensor, tor):
            self.assertEqual( func(direct_sum(G, H), K), direct_sum(func(G, K), func(H, K)) )
            self.assertEqual( func(K, direct_sum(G, H)), direct_sum(func(K, G), func(K, H)) )
        for func in (hom, ext):
            self.assertEqual( func(direct_sum(G, H), K), func(G, K) + func(H, K) )
            self.assertEqual( func(K, direct_sum(G, H)), func(K, G) + func(K, H) )

    @settings(max_examples=80, deadline=None)
    @given(group_exprs(), group_exprs())
    def test_tor_symmetric(self, G, H):

        self.assertEqual( tor(G, H), tor(H, G) )
        self.assertEqual( tensor(G, H), tensor(H, G) )

    @settings(max_examples=80, deadline=None)
    @given(group_exprs(), st.integers(0, 2), st.lists(st.sampled_from([2, 3, 7]), max_size=3))
    def test_divisible_injective(self, G, q, prufer):

        self.assertTrue( ext(G, GroupExpr(q_copies=q, prufer=tuple(prufer))).is_zero() )

class TestSupports(unittest.TestCase):

    def test_localization(self):

        self.assertTrue( localization_vanishes(C(9), SpecPoint(2)) )
        self.assertFalse( localization_vanishes(direct_sum(Z, C(9)), SpecPoint(2)) )
        self.assertFalse( localization_vanishes(I(3), SpecPoint(3)) )
        self.assertTrue( localization_vanishes(I(3), SpecPoint(5)) )
        self.assertTrue( localization_vanishes(I(3), SpecPoint(0)) )
        self.assertFalse( localization_vanishes(Q, SpecPoint(5)) )

    @settings(max_examples=80, deadline=None)
    @given(group_exprs())
    def test_localization_detects_zero(self, G):

        points = [0, 2, 3, 5, 7, 11, 13, 17, 19, 23]
        vanish = all( localization_vanishes(G, SpecPoint(q)) for q in points )
        self.assertEqual( vanish, G.is_zero() )

    def test_injective_support(self):

        self.assertTrue( injective_support(Z).is_all )
        self.assertEqual( injective_support(C(8)), SpecSubset.of([2]) )
        self.assertEqual( injective_support(Q), SpecSubset.of([0]) )
        self.assertEqual( injective_support(direct_sum(C(15), I(7))), SpecSubset.of([3, 5, 7]) )
        self.assertTrue( injective_support(ZERO).is_empty() )

    @settings(max_examples=80, deadline=None)
    @given(group_exprs())
    def test_supports_agree(self, G):

        self.assertEqual( group_support(G), injective_support(G) )
        for q in [0, 2, 3, 5, 7, 11]:
            F    = Q if q == 0 else C(q)
            seen = not tensor(G, F).is_zero() or not tor(G, F).is_zero()
            self.assertEqual( seen, SpecPoint(q) in group_support(G), f'{G} at {q}' )

if __name__ == "__main__":
    unittest.main()
