"""
Supports and the classification of localizing subcategories

Localizing subcategories of the bootstrap category correspond to subsets
S of Spec Z via

    L_S = {A : K_*(A; F_p) = 0 for all p not in S}

with inverse L -> Supp L. Smashing subcategories correspond to the
specialization closed subsets (sets of primes, or everything), and so do
the thick subcategories of compact objects. Everything here works at
the level of supports: an object is in L_S exactly when its support is
contained in S.

"""

import logging
from dataclasses import dataclass
from itertools import combinations

from sympy import nextprime

from .bootstrap import (
    cone, coproduct, injective_object, is_compact, k_with_coefficients, kk_groups,
    moore_object, multiplication_morphism, residue_object, suspension,
    tensor_object, unit, zero_morphism, zero_object,
)
from .constants import PRIME_BOUND, RESIDUE_PRIME_BOUND
from .exceptions import NonCompactInput, NotSpecializationClosed
from .groups import GroupExpr, group_support, hom, injective_support, localization_vanishes
from .report import RunReport
from .utils import points_up_to, prime_divisors, primes_up_to
from .zariski import SpecPoint, SpecSubset

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class LocalizingSubcat:
    """
    The localizing subcategory L_S

    Arguments:
        S (SpecSubset) : Its support; L_S = L_T iff S = T

    """

    S : SpecSubset

    def __str__(self):
        return f'L_{self.S}'

def supp(A):
    """
    Support of an object: the points p with K_*(A; F_p) nonzero

    A free summand is seen by every F_p (All), Q only by the rationals
    ({0}), Z/n by the primes dividing n and I(p) by F_p through Tor.
    Equal to supp_injective, see groups.group_support.

    Arguments:
        A (BootObject) : Object

    Returns:
        SpecSubset

    """

    return group_support(A.ktheory.deg0) | group_support(A.ktheory.deg1)

def supp_by_coefficients(A, prime_bound=RESIDUE_PRIME_BOUND):
    """The points p <= prime_bound where K_*(A; F_p) is nonzero, computed by Künneth"""

    return SpecSubset.of(
        p for p in points_up_to(prime_bound)
        if not k_with_coefficients(A, p).is_zero()
    )

def supp_injective(A):
    """Points whose I(p) occurs in the minimal injective resolution of K_*A"""

    return injective_support(A.ktheory.deg0) | injective_support(A.ktheory.deg1)

def member(A, L):
    """A in L_S iff supp(A) is contained in S"""

    return supp(A) <= L.S

def member_bootV(A, V):
    """A in Boot_V iff supp_Z(K_*A) is contained in V"""

    return supp_injective(A) <= V

def is_specialization_closed(S):
    """A set of primes, or all of Spec Z"""

    return S.is_all or not S.contains_generic()

def specialization_closure(S):
    """Smallest specialization closed set containing S"""

    return SpecSubset.all() if S.contains_generic() else S

def is_smashing(L):
    return is_specialization_closed(L.S)

def _data_primes(G):

    primes = set(G.prufer)
    for d in G.fg.factors:
        primes.update( prime_divisors(d) )
    return primes

def localization_kernel_member(A, V):
    """
    Whether K_*(A)_(q) vanishes at every point q outside V

    Only the point 0, the primes in the data of K_*A and one prime beyond
    them can fail; all other primes behave like the sentinel.

    Arguments:
        A (BootObject) : Object
        V (SpecSubset) : Specialization closed subset

    Returns:
        bool

    """

    if not is_specialization_closed(V):
        raise NotSpecializationClosed( f'{V} contains 0 but is not all of Spec Z' )
    if V.is_all:
        return True
    parts  = A.ktheory.parts()
    primes = set().union( *(_data_primes(G) for G in parts) )
    probe  = {0} | primes
    # first prime outside V and the data
    sentinel = nextprime( max(probe | {p.p for p in V}) )
    probe.add( sentinel )
    return all(
        localization_vanishes(G, SpecPoint(q))
        for q in sorted(probe) if q not in V
        for G in parts
    )

def generated_support(family):
    """Support of the localizing subcategory generated by a finite family"""

    out = SpecSubset.empty()
    for A in family:
        out = out | supp(A)
    return out

def in_generated(A, family):
    """Whether A lies in the localizing subcategory generated by family"""

    family = list(family)
    if any( G.fg.rank > 0 for B in family for G in B.ktheory.parts() ):
        return True
    return supp(A) <= generated_support(family)

def orthogonal_residues(L):
    """
    Points p with kappa(p) in the right orthogonal of L

    KK(kappa(q), kappa(p)) vanishes iff q != p, so these are the points
    outside S.

    Returns:
        SpecSubset, Cofinite : Empty for L = Boot, else the complement of S

    """

    return L.S.complement()

def canonical_generators(S):
    """unit() for All, else the residue objects kappa(p) for p in S"""

    if S.is_all:
        return [unit()]
    return [residue_object(p) for p in S]

def compact_generators(S):
    """
    Compact objects generating L_S for a specialization closed S

    Returns:
        list : unit() for All, else kappa(p) = cone(p) for the primes of S

    """

    if not is_specialization_closed(S):
        raise NotSpecializationClosed( f'{S} is not generated by compact objects' )
    return canonical_generators(S)

def injective_generators(S):
    """The objects iota(p), p in S (finite S only)"""

    if S.is_all:
        raise ValueError( 'All of Spec Z needs infinitely many iota(p)' )
    return [injective_object(p) for p in S]

def is_zero_by_residues(A, prime_bound=RESIDUE_PRIME_BOUND):
    """
    A = 0 iff A ⊗ kappa(p) = 0 for every point p

    Checks the points up to prime_bound and every prime in the data of A,
    which is where a nonzero object must be seen.

    """

    points = set( points_up_to(prime_bound) )
    for G in A.ktheory.parts():
        points |= _data_primes(G)
    return all( k_with_coefficients(A, p).is_zero() for p in sorted(points) )

def smashing_obstruction(L):
    """
    Certificate that L_S is not smashing when 0 is in S and S is not All

    Returns:
        tuple : (p, hom(Q, I(p))) for the smallest prime p outside S; the
            nonzero Hom gives a nonzero map iota(0) -> iota(p) out of L_S
            into L_S-local objects. None when L is smashing.

    """

    if is_smashing(L):
        return None
    p = 2
    while p in L.S:
        p = nextprime(p)
    return SpecPoint(p), hom( GroupExpr.rationals(), GroupExpr.prufer_group(p) )

def dichotomy_iota(L, p):
    """
    Place iota(p) relative to L: 'member', 'orthogonal' or 'neither'

    For smashing L the answer is never 'neither'. Orthogonality is
    checked against the canonical generators of L.

    """

    obj = injective_object(p)
    if member(obj, L):
        return 'member'
    if all( kk_groups(G, obj).is_zero() for G in canonical_generators(L.S) ):
        return 'orthogonal'
    return 'neither'

def _cone_witnesses(A, B):
    """Unambiguous cones built from A and B"""

    out = []
    for phi in (zero_morphism(A, B), multiplication_morphism(A, 2), multiplication_morphism(A, 0)):
        result = cone(phi)
        if not result.extension_ambiguous:
            out.append( (phi, result.object) )
    return out

def support_datum_check(corpus, report=None):
    """
    Support datum axioms on a corpus of compact objects

    supp(0) is empty, supp(C) is All, supp(A + B) = supp A | supp B,
    supp(SA) = supp A, supp(cone f) is inside supp(source) | supp(target)
    for unambiguous cones, and supp(A ⊗ B) = supp A & supp B.

    Arguments:
        corpus (list) : Compact BootObjects

    Keyword arguments:
        report (RunReport) : Report to add the checks to

    Returns:
        RunReport

    """

    corpus = list(corpus)
    for A in corpus:
        if not is_compact(A):
            raise NonCompactInput( f'Support datum check needs compact objects : {A}' )
    if report is None:
        report = RunReport('support-datum')

    report.check('supp-zero').record( supp(zero_object()).is_empty() )
    report.check('supp-unit').record( supp(unit()).is_all )
    for A in corpus:
        report.check('supp-suspension').record( supp(suspension(A)) == supp(A), A )
    for A, B in zip(corpus, corpus[1:] + corpus[:1]):
        sA, sB = supp(A), supp(B)
        report.check('supp-sum').record( supp(coproduct([A, B])) == sA | sB, f'{A}, {B}' )
        report.check('supp-tensor').record( supp(tensor_object(A, B)) == sA & sB, f'{A}, {B}' )
        for phi, C in _cone_witnesses(A, B):
            report.check('supp-cone').record( supp(C) <= sA | sB, f'{phi.source} -> {phi.target}' )
    logger.info('support datum: %d objects', len(corpus))
    return report

def _subsets(primes):

    for k in range(len(primes) + 1):
        for combo in combinations(primes, k):
            yield SpecSubset.of(combo)

def thick_classification_demo(prime_bound=PRIME_BOUND):
    """
    Thick subcategories of compact objects over the primes <= prime_bound

    Enumerates every set of primes up to the bound plus All, generates each
    class from Moore objects, and checks that the classes are pairwise
    distinct and closed under tensoring with witnesses, suspension,
    coproducts and cones of multiplication maps.

    Arguments:
        prime_bound (int) : At least 2

    Returns:
        RunReport : result holds the class count and the sets

    """

    if prime_bound < 2:
        raise ValueError( f'prime_bound must be >= 2 : {prime_bound}' )
    primes  = primes_up_to(prime_bound)
    subsets = list( _subsets(primes) ) + [SpecSubset.all()]
    report  = RunReport('classification-thick', [str(prime_bound)])

    witnesses  = [zero_object(), unit()] + [moore_object(p) for p in primes]
    witnesses += [moore_object(p * q) for p, q in combinations(primes, 2)]

    signatures = {}
    for S in subsets:
        L          = LocalizingSubcat(S)
        generators = [unit()] if S.is_all else [moore_object(pt.p) for pt in S]
        report.check('generated-support').record( generated_support(generators) == S, S )
        report.check('smashing').record( is_smashing(L), S )

        inside = [A for A in witnesses if member(A, L)]
        signatures[S] = tuple( member(A, L) for A in witnesses )
        for A in inside:
            for B in witnesses:
                report.check('tensor-ideal').record(
                    member(tensor_object(A, B), L), f'{A} ⊗ {B} outside {L}',
                )
            report.check('suspension').record( member(suspension(A), L), A )
            report.check('cone').record(
                member(cone(multiplication_morphism(A, 2)).object, L), A,
            )
            for B in inside:
                report.check('coproduct').record( member(coproduct([A, B]), L), f'{A}, {B}' )

    for S, T in combinations(subsets, 2):
        report.check('distinct-classes').record( signatures[S] != signatures[T], f'{S}, {T}' )

    report.result = {
        'classes' : len(set(signatures.values())),
        'sets'    : [S.to_json() for S in subsets],
    }
    return report
