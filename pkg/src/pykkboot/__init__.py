"""
Package for computing in the compact and divisible bootstrap category

Objects of the bootstrap category are modeled by their Z/2-graded
K-theory groups; KK-groups, tensor products, supports and localizing
subcategories are computed from exact abelian group algebra.

"""

from .constants import BIFUNCTORS
from .groups    import FGGroup, GroupExpr, GroupValue, hom, ext, tensor, tor
from .bootstrap import (
    BootObject, HomPartMorphism, cone, injective_object, kk_groups,
    moore_object, residue_object, suspension, tensor_object, unit,
)
from .parser    import parse_object
from .spectrum  import LocalizingSubcat, member, supp, supp_injective
from .zariski   import SpecPoint, SpecSubset

def bifunctor( method, G, H ):
    """
    Evaluate a bifunctor of abelian groups

    Wrapper for the exact Hom, Ext, tensor and Tor tables. Set the method
    to use and you're off

    Arguments:
        method (str) : name of the bifunctor; one of BIFUNCTORS
        G (GroupExpr) : First argument
        H (GroupExpr) : Second argument

    Returns:
        GroupValue : For hom and ext; may be unrepresentable
        GroupExpr : For tensor and tor

    """

    method = method.lower()
    if method == 'hom':
        return hom( G, H )
    if method == 'ext':
        return ext( G, H )
    if method == 'tensor':
        return tensor( G, H )
    if method == 'tor':
        return tor( G, H )

    raise Exception( f'Unsupported bifunctor : {method}! Must be one of {BIFUNCTORS}' )
