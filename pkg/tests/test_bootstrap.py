import unittest

from hypothesis import given, settings, strategies as st

from pykkboot.bootstrap import (
    HomPartMorphism, coproduct, cone, cone_sequence_check, identity_morphism,
    injective_decomposition, injective_object, is_compact, is_isomorphic,
    is_k_injective, k_with_coefficients, kk_groups, kk_is_hom_only, moore_object,
    morphism_cokernel, morphism_kernel, multiplication_morphism, realize,
    residue_object, split_summands, suspension, tensor_object, unit, zero_morphism,
    zero_object,
)
from pykkboot.exceptions import IllFormedMorphism, InvalidPoint
from pykkboot.graded import GradedGroup, GradedValue, place
from pykkboot.groups import FGGroup, GroupExpr, direct_sum
from pykkboot.linalg import IntMatrix

Z = GroupExpr.free()
Q = GroupExpr.rationals()
C = GroupExpr.cyclic
I = GroupExpr.prufer_group

@st.composite
def objects(draw, compact=False):

    def part():
        fg = FGGroup.from_cyclic_orders(
            draw( st.lists(st.integers(2, 12), max_size=2) ),
            rank = draw( st.integers(0, 1) ),
        )
        if compact:
            return GroupExpr(fg)
        atoms = draw( st.lists(st.sampled_from([0, 2, 3]), max_size=1) )
        return GroupExpr(fg, atoms.count(0), tuple(p for p in atoms if p))

    return realize( GradedGroup( part(), part() ) )

class TestConstructors(unittest.TestCase):

    def setUp(self):

        self.p = 2

    def test_unit(self):

        self.assertEqual( unit().ktheory, place(Z, 0) )
        self.assertEqual( str(unit()), 'C' )
        self.assertEqual( suspension(unit()).ktheory, place(Z, 1) )
        self.assertTrue( is_compact(unit()) )

    def test_residue(self):

        self.assertEqual( residue_object(self.p).ktheory, place(C(self.p), 0) )
        self.assertEqual( residue_object(0).ktheory, place(Q, 0) )
        kappa = cone( multiplication_morphism(unit(), self.p) )
        self.assertTrue( is_isomorphic(kappa.object, residue_object(self.p)) )
        self.assertFalse( kappa.extension_ambiguous )
        with self.assertRaises(InvalidPoint):
            residue_object(4)

    def test_injective(self):

        self.assertTrue( is_isomorphic(injective_object(0), residue_object(0)) )
        self.assertEqual( injective_object(3).ktheory, place(I(3), 0) )
        self.assertFalse( is_compact(injective_object(3)) )
        with self.assertRaises(InvalidPoint):
            injective_object(1)

    def test_realize(self):

        self.assertTrue( is_isomorphic(realize(place(C(12), 0)), moore_object(12)) )
        self.assertTrue( realize(GradedGroup()).is_zero() )
        self.assertEqual( realize(place(I(2), 1)), suspension(injective_object(2)) )
        with self.assertRaises(ValueError):
            moore_object(1)

    def test_coproduct(self):

        self.assertTrue( coproduct([]).is_zero() )
        kappa = residue_object(2)
        self.assertEqual( coproduct([kappa, kappa]).ktheory.deg0.fg.factors, (2, 2) )
        self.assertEqual( coproduct([unit(), suspension(unit())]).ktheory, GradedGroup(Z, Z) )

    def test_isomorphic(self):

        kappa = residue_object(2)
        self.assertFalse( is_isomorphic(kappa, suspension(kappa)) )
        self.assertTrue( is_isomorphic(
            realize( place(direct_sum(C(2), C(3)), 0) ),
            realize( place(C(6), 0) ),
        ))

    def test_compact(self):

        self.assertFalse( is_compact(injective_object(2)) )
        self.assertTrue( is_compact(realize( GradedGroup(GroupExpr.free(3), C(8)) )) )

class TestKK(unittest.TestCase):

    def setUp(self):

        self.p     = 5
        self.kappa = residue_object(self.p)

    def test_unit_source(self):

        B = realize( GradedGroup(direct_sum(C(4), Q), I(3)) )
        self.assertEqual( kk_groups(unit(), B), GradedValue.exact(B.ktheory) )

    def test_kappa(self):

        value = kk_groups(self.kappa, self.kappa)
        self.assertEqual( value.as_graded(), GradedGroup(C(self.p), C(self.p)) )
        value = kk_groups(self.kappa, unit())
        self.assertEqual( value.as_graded(), place(C(self.p), 1) )

    def test_hom_only(self):

        kappa = residue_object(2)
        self.assertTrue( kk_is_hom_only(unit(), kappa) )
        self.assertTrue( kk_is_hom_only(kappa, injective_object(2)) )
        self.assertFalse( kk_is_hom_only(kappa, kappa) )

    def test_unrepresentable(self):

        value = kk_groups( injective_object(3), injective_object(3) )
        self.assertFalse( value.is_exact() )
        self.assertFalse( value.is_zero() )

    @settings(max_examples=60, deadline=None)
    @given(objects())
    def test_unit_law(self, B):

        self.assertEqual( kk_groups(unit(), B), GradedValue.exact(B.ktheory) )

class TestTensor(unittest.TestCase):

    def setUp(self):

        self.p = 3

    def test_known_values(self):

        kappa = residue_object(self.p)
        self.assertEqual( tensor_object(kappa, kappa).ktheory, GradedGroup(C(self.p), C(self.p)) )
        self.assertEqual(
            tensor_object( moore_object(4), moore_object(6) ).ktheory,
            GradedGroup(C(2), C(2)),
        )

    def test_coefficients(self):

        self.assertEqual( k_with_coefficients(unit(), 7), place(C(7), 0) )
        self.assertTrue( k_with_coefficients(moore_object(12), 5).is_zero() )
        self.assertEqual( k_with_coefficients(injective_object(3), 3), place(C(3), 1) )
        self.assertEqual( k_with_coefficients(unit(), 0), place(Q, 0) )

    @settings(max_examples=60, deadline=None)
    @given(objects())
    def test_unit_law(self, B):

        self.assertTrue( is_isomorphic(tensor_object(unit(), B), B) )

    @settings(max_examples=40, deadline=None)
    @given(objects(compact=True), objects(compact=True), objects(compact=True))
    def test_symmetric_associative(self, A, B, D):

        self.assertTrue( is_isomorphic(tensor_object(A, B), tensor_object(B, A)) )
        self.assertTrue( is_isomorphic(
            tensor_object(tensor_object(A, B), D),
            tensor_object(A, tensor_object(B, D)),
        ))

    @settings(max_examples=60, deadline=None)
    @given(objects(), objects())
    def test_suspension(self, A, B):

        self.assertTrue( is_isomorphic(
            tensor_object(suspension(A), B),
            suspension( tensor_object(A, B) ),
        ))

    def test_residue_dichotomy(self):

        points = [0, 2, 3, 5, 7]
        for p in points:
            for q in points:
                product = tensor_object( residue_object(p), residue_object(q) )
                self.assertEqual( product.is_zero(), p != q, f'kappa({p}) ⊗ kappa({q})' )

class TestDecompositions(unittest.TestCase):

    def test_split_summands(self):

        A      = realize( GradedGroup(direct_sum(Z, C(12)), I(2)) )
        pieces = split_summands(A)
        self.assertEqual( len(pieces), 4 )
        self.assertTrue( is_isomorphic(coproduct(pieces), A) )

    def test_injective_decomposition(self):

        B      = realize( GradedGroup(direct_sum(Q, I(5)), I(2)) )
        pieces = injective_decomposition(B)
        self.assertTrue( is_k_injective(B) )
        self.assertEqual( pieces[-1], suspension(injective_object(2)) )
        self.assertTrue( is_isomorphic(coproduct(pieces), B) )
        with self.assertRaises(ValueError):
            injective_decomposition( moore_object(3) )

class TestMorphisms(unittest.TestCase):

    def setUp(self):

        self.source = moore_object(4)
        self.target = moore_object(2)
        self.empty  = IntMatrix(0, 0)

    def test_well_defined(self):

        with self.assertRaises(IllFormedMorphism):
            HomPartMorphism(self.target, self.source, IntMatrix.from_rows([[1]]), self.empty)
        with self.assertRaises(IllFormedMorphism):
            HomPartMorphism(self.target, unit(), IntMatrix.from_rows([[1]]), self.empty)
        with self.assertRaises(IllFormedMorphism):
            HomPartMorphism(self.source, self.target, IntMatrix.from_rows([[1, 0]]), self.empty)
        with self.assertRaises(IllFormedMorphism):
            zero_morphism(injective_object(2), unit())

    def test_surjection_cone(self):

        phi    = HomPartMorphism(self.source, self.target, IntMatrix.from_rows([[1]]), self.empty)
        result = cone(phi)
        self.assertEqual( result.object.ktheory, place(C(2), 1) )
        self.assertFalse( result.extension_ambiguous )
        self.assertEqual( morphism_kernel(phi), place(C(2), 0) )
        self.assertTrue( morphism_cokernel(phi).is_zero() )
        self.assertTrue( cone_sequence_check(phi).ok )

    def test_zero_cone(self):

        kappa  = residue_object(2)
        result = cone( zero_morphism(kappa, kappa) )
        self.assertEqual( result.object.ktheory, GradedGroup(C(2), C(2)) )
        self.assertFalse( result.extension_ambiguous )

        result = cone( zero_morphism(kappa, suspension(kappa)) )
        self.assertEqual( result.object.ktheory, place(direct_sum(C(2), C(2)), 1) )
        self.assertTrue( result.extension_ambiguous )
        self.assertEqual( result.ambiguity_witness.group, C(2) )

    def test_compose(self):

        A   = realize( GradedGroup(direct_sum(Z, C(6)), C(4)) )
        phi = multiplication_morphism(A, 3)
        self.assertEqual( phi.compose(identity_morphism(A)), phi )
        self.assertEqual( phi.compose(phi), multiplication_morphism(A, 9) )
        with self.assertRaises(IllFormedMorphism):
            phi.compose( identity_morphism(unit()) )

    def test_multiplication_cone(self):

        A = realize( GradedGroup(direct_sum(Z, C(6)), C(4)) )
        for n in (2, 3, 5):
            phi = multiplication_morphism(A, n)
            self.assertTrue( cone_sequence_check(phi).ok, n )

    def test_zero_object(self):

        self.assertTrue( cone( identity_morphism(unit()) ).object.is_zero() )
        self.assertTrue( zero_object().is_zero() )

if __name__ == "__main__":
    unittest.main()
