import unittest

from hypothesis import given, settings, strategies as st

from pykkboot.graded import (
    Degree, GradedGroup, GradedValue, as_degree, graded_ext, graded_hom,
    graded_tensor, graded_tor, place, suspend,
)
from pykkboot.groups import ZERO, FGGroup, GroupExpr, GroupValue, direct_sum, hom, tensor

Z = GroupExpr.free()
Q = GroupExpr.rationals()
C = GroupExpr.cyclic

@st.composite
def graded_groups(draw):

    def part():
        fg = FGGroup.from_cyclic_orders(
            draw( st.lists(st.integers(2, 12), max_size=2) ),
            rank = draw( st.integers(0, 1) ),
        )
        atoms = draw( st.lists(st.sampled_from([0, 2, 3]), max_size=1) )
        return GroupExpr(fg, atoms.count(0), tuple(p for p in atoms if p))

    return GradedGroup( part(), part() )

class TestDegree(unittest.TestCase):

    def test_arithmetic(self):

        self.assertEqual( Degree.ODD + Degree.ODD, Degree.EVEN )
        self.assertEqual( Degree.EVEN.shift(), Degree.ODD )
        self.assertEqual( as_degree(3), Degree.ODD )
        self.assertIsInstance( Degree.ODD + 1, Degree )

class TestGradedGroup(unittest.TestCase):

    def setUp(self):

        self.p = 5
        self.M = GradedGroup( direct_sum(Z, C(4)), Q )

    def test_place(self):

        self.assertEqual( place(C(self.p), 0), GradedGroup(C(self.p), ZERO) )
        self.assertTrue( place(ZERO, 1).is_zero() )
        self.assertEqual( place(Q, Degree.ODD)[1], Q )

    def test_suspend(self):

        self.assertEqual( suspend(self.M), GradedGroup(Q, direct_sum(Z, C(4))) )
        self.assertEqual( suspend(suspend(self.M)), self.M )
        self.assertTrue( suspend(GradedGroup()).is_zero() )

    def test_direct_sum(self):

        total = self.M.direct_sum( place(C(3), 0) )
        self.assertEqual( total.deg0, direct_sum(Z, C(12)) )
        self.assertFalse( total.is_fg() )

    def test_str(self):

        self.assertEqual( str(self.M), '(Z + Z/4, Q)' )
        self.assertEqual( self.M.to_json(), {'deg0': 'Z + Z/4', 'deg1': 'Q'} )

class TestGradedBifunctors(unittest.TestCase):

    def setUp(self):

        self.p = 3

    def test_hom(self):

        N = GradedGroup( C(6), Q )
        self.assertEqual( graded_hom(place(Z, 0), N), GradedValue.exact(N) )
        value = graded_hom( place(C(2), 1), place(C(4), 0) )
        self.assertTrue( value.deg0.is_zero() )
        self.assertEqual( value.deg1.group, C(2) )
        self.assertTrue( graded_hom(place(Q, 0), place(C(3), 0)).is_zero() )

    def test_hom_unrepresentable(self):

        value = graded_hom( place(Q, 0), place(GroupExpr.prufer_group(2), 1) )
        self.assertTrue( value.deg0.is_zero() )
        self.assertFalse( value.is_exact() )
        self.assertEqual( len(value.tags()), 1 )
        with self.assertRaises(ValueError):
            value.as_graded()

    def test_ext(self):

        value = graded_ext( place(C(self.p), 0), place(C(self.p), 0) )
        self.assertEqual( value.as_graded(), place(C(self.p), 0) )
        self.assertTrue( graded_ext(GradedGroup(Z, Z), GradedGroup(C(5), Q)).is_zero() )
        value = graded_ext( place(C(4), 1), place(C(6), 0) )
        self.assertEqual( value.as_graded(), place(C(2), 1) )

    def test_tensor(self):

        N = GradedGroup( C(6), GroupExpr.prufer_group(3) )
        self.assertEqual( graded_tensor(place(Z, 0), N), N )
        self.assertEqual( graded_tensor(place(C(self.p), 0), place(C(self.p), 1)), place(C(self.p), 1) )
        self.assertEqual( graded_tensor(place(C(2), 1), place(C(2), 1)), place(C(2), 0) )

    def test_tor(self):

        self.assertTrue( graded_tor(GradedGroup(Z, Z), GradedGroup(C(4), Q)).is_zero() )
        self.assertEqual( graded_tor(place(C(self.p), 0), place(C(self.p), 0)), place(C(self.p), 0) )
        self.assertEqual( graded_tor(place(C(2), 0), place(C(2), 1)), place(C(2), 1) )

    @settings(max_examples=60, deadline=None)
    @given(graded_groups(), graded_groups())
    def test_suspension_shifts(self, M, N):

        self.assertEqual( graded_hom(suspend(M), N), graded_hom(M, N).shift(1) )
        self.assertEqual( graded_ext(suspend(M), N), graded_ext(M, N).shift(1) )
        self.assertEqual( graded_tensor(suspend(M), N), suspend(graded_tensor(M, N)) )
        self.assertEqual( graded_tor(M, suspend(N)), suspend(graded_tor(M, N)) )

    @settings(max_examples=60, deadline=None)
    @given(graded_groups(), graded_groups())
    def test_symmetric(self, M, N):

        self.assertEqual( graded_tensor(M, N), graded_tensor(N, M) )
        self.assertEqual( graded_tor(M, N), graded_tor(N, M) )

    @settings(max_examples=60, deadline=None)
    @given(graded_groups(), graded_groups())
    def test_degree_zero_reduces(self, M, N):

        G, H = M.deg0, N.deg0
        self.assertEqual( graded_hom(place(G, 0), place(H, 0)).deg0, hom(G, H) )
        self.assertEqual( graded_tensor(place(G, 0), place(H, 0)).deg0, tensor(G, H) )
        self.assertEqual( graded_hom(place(G, 0), place(H, 0)).deg1, GroupValue.exact(ZERO) )

if __name__ == "__main__":
    unittest.main()
