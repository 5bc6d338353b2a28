"""
Bootstrap category objects modeled by their K-theory

Two objects of the bootstrap category are isomorphic exactly when their
Z/2-graded K-theory groups are, so a BootObject is its K-theory plus a
label recording how it was built. KK-groups come from the split
universal coefficient sequence

    Ext(K_*A, K_*B) -> KK_*(A, B) -> Hom(K_*A, K_*B)

whose first map has degree one, so KK_e = Hom_e + Ext_(e+1); tensor
products come from the split Künneth sequence

    K_*A ⊗ K_*B -> K_*(A ⊗ B) -> Tor(K_*A, K_*B)

whose second map has degree one, so K_e(A ⊗ B) = (K_*A ⊗ K_*B)_e + Tor_(e+1).

Morphisms are only modeled through their image in Hom (HomPartMorphism);
the Ext part of a KK class is counted but never composed. The cone of a
HomPartMorphism is returned as the split extension of its kernel by its
cokernel together with the Ext group that could make it non-split.

"""

import logging
from dataclasses import dataclass, field

from . import graded, groups
from .exceptions import IllFormedMorphism
from .constants import MAX_ORDER
from .graded import Degree, GradedGroup, as_degree, place, suspend
from .groups import GroupExpr
from .linalg import IntMatrix, presented_cokernel, presented_kernel
from .oracle import image_order
from .report import RunReport
from .zariski import as_point

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class BootObject:
    """
    Object of the bootstrap category, up to isomorphism

    Equality compares K-theory only, which is the isomorphism test.

    Arguments:
        ktheory (GradedGroup) : K_*A

    Keyword arguments:
        label (str) : How the object was built

    """

    ktheory : GradedGroup
    label   : str = field(default='', compare=False)

    def is_zero(self):
        return self.ktheory.is_zero()

    def __str__(self):
        return self.label or f'realize{self.ktheory}'

def unit():
    """The complex numbers C, K-theory Z[0]"""

    return BootObject( place( GroupExpr.free() ), 'C' )

def zero_object():
    return BootObject( GradedGroup(), '0' )

def residue_object(p):
    """
    The residue field object kappa(p)

    Arguments:
        p (int, SpecPoint) : 0 or a prime

    Returns:
        BootObject : K-theory Z/p[0], or Q[0] for p = 0

    """

    p = as_point(p).p
    group = GroupExpr.rationals() if p == 0 else GroupExpr.cyclic(p)
    return BootObject( place(group), f'kappa({p})' )

def injective_object(p):
    """
    The injective object iota(p)

    Arguments:
        p (int, SpecPoint) : 0 or a prime

    Returns:
        BootObject : K-theory I(p)[0]; iota(0) = kappa(0) has Q[0]

    """

    p = as_point(p).p
    group = GroupExpr.rationals() if p == 0 else GroupExpr.prufer_group(p)
    return BootObject( place(group), f'iota({p})' )

def moore_object(n, degree=Degree.EVEN):
    """Moore object: K-theory Z/n in one degree (the cone of n on C)"""

    if n < 2:
        raise ValueError( f'Moore objects need n >= 2 : {n}' )
    label = f'moore({n})' if degree == 0 else f'S moore({n})'
    return BootObject( place(GroupExpr.cyclic(n), degree), label )

def realize(M, label=None):
    """
    An object with prescribed K-theory

    Every countable Z/2-graded group is the K-theory of some object of the
    bootstrap category, and that object is unique up to isomorphism.

    Arguments:
        M (GradedGroup) : K-theory

    Keyword arguments:
        label (str) : Construction label

    Returns:
        BootObject

    """

    return BootObject( M, label if label is not None else f'realize{M}' )

def suspension(A):
    """Sigma A: K-theory with the degrees exchanged"""

    return BootObject( suspend(A.ktheory), f'S {A}' )

def coproduct(objs):
    """Finite coproduct (degreewise direct sum of K-theories)"""

    objs = list(objs)
    if not objs:
        return zero_object()
    ktheory = objs[0].ktheory
    for obj in objs[1:]:
        ktheory = ktheory.direct_sum(obj.ktheory)
    return BootObject( ktheory, ' + '.join( str(obj) for obj in objs ) )

def kk_groups(A, B):
    """
    KK_*(A, B) by the universal coefficient theorem

    Arguments:
        A (BootObject) : First argument
        B (BootObject) : Second argument

    Returns:
        GradedValue : KK_e = graded Hom_e + graded Ext_(e+1)

    """

    hom = graded.graded_hom(A.ktheory, B.ktheory)
    ext = graded.graded_ext(A.ktheory, B.ktheory)
    return hom + ext.shift(1)

def kk_is_hom_only(A, B):
    """
    Whether KK_*(A, B) = Hom(K_*A, K_*B), i.e. the graded Ext vanishes

    Always the case when K_*A is free or K_*B divisible.

    """

    return graded.graded_ext(A.ktheory, B.ktheory).is_zero()

def tensor_object(A, B):
    """
    A ⊗ B by the Künneth theorem

    Returns:
        BootObject : K_e = (K_*A ⊗ K_*B)_e + Tor(K_*A, K_*B)_(e+1)

    """

    tens    = graded.graded_tensor(A.ktheory, B.ktheory)
    tor     = graded.graded_tor(A.ktheory, B.ktheory)
    return BootObject( tens.direct_sum( tor.shift(1) ), f'({A}) ⊗ ({B})' )

def k_with_coefficients(A, p):
    """
    K_*(A; F_p) = K_*(A ⊗ kappa(p))

    Arguments:
        A (BootObject) : Object
        p (int, SpecPoint) : 0 or a prime

    Returns:
        GradedGroup

    """

    return tensor_object(A, residue_object(p)).ktheory

def is_isomorphic(A, B):
    return A.ktheory == B.ktheory

def is_compact(A):
    """Compact iff the K-theory is finitely generated (no Q, no I(p))"""

    return A.ktheory.is_fg()

def is_k_injective(B):
    """Divisible K-theory: B is a coproduct of copies of iota(p) and their suspensions"""

    return all( part.is_divisible() for part in B.ktheory.parts() )

def _indecomposables(group):
    """Indecomposable summands of a group: Z, Z/p^k, Q, I(p)"""

    out  = [GroupExpr.free()] * group.fg.rank
    out += [GroupExpr.cyclic(q) for q in group.fg.elementary_divisors()]
    out += [GroupExpr.atom(atom) for atom in group.atoms()]
    return out

def split_summands(A):
    """
    Indecomposable pieces of A

    Any decomposition of K_*A lifts to a coproduct decomposition of A, so A
    is the coproduct of objects with K-theory Z, Z/p^k, Q or I(p) in one
    degree.

    Returns:
        list : BootObjects, degree 0 pieces first

    """

    out = []
    for degree in Degree:
        for piece in _indecomposables( A.ktheory[degree] ):
            out.append( realize( place(piece, degree), f'{piece}[{int(degree)}]' ) )
    return out

def injective_decomposition(B):
    """
    Decompose an object with divisible K-theory into iota(p)'s

    Returns:
        list : injective_object(p) for each degree 0 atom I(p) (Q for p = 0),
            then suspension(injective_object(p)) for each degree 1 atom

    """

    if not is_k_injective(B):
        raise ValueError( f'K-theory of {B} is not divisible : {B.ktheory}' )
    out = []
    for degree in Degree:
        for atom in B.ktheory[degree].atoms():
            obj = injective_object(atom.p)
            out.append( suspension(obj) if degree else obj )
    return out

def _relations(group):
    return group.fg.presentation()

def _generator_count(group):
    return len( group.fg.generator_orders() )

@dataclass(frozen=True)
class HomPartMorphism:
    """
    Degree-0 homomorphism K_*A -> K_*B between finitely generated K-theories

    The matrices act on the canonical generator systems (torsion
    generators in invariant factor order, then free generators): column j
    of f_e is the image of generator j of K_e(source).

    Arguments:
        source (BootObject) : Source object
        target (BootObject) : Target object
        f0 (IntMatrix) : Degree 0 part
        f1 (IntMatrix) : Degree 1 part

    """

    source : BootObject
    target : BootObject
    f0     : IntMatrix
    f1     : IntMatrix

    def __post_init__(self):

        for obj in (self.source, self.target):
            if not is_compact(obj):
                raise IllFormedMorphism( f'Morphisms need finitely generated K-theory : {obj}' )
        for degree, F in enumerate( (self.f0, self.f1) ):
            _check_well_defined(
                F,
                self.source.ktheory[degree].fg,
                self.target.ktheory[degree].fg,
                degree,
            )

    def __getitem__(self, degree):
        return self.f1 if as_degree(degree) else self.f0

    def compose(self, other):
        """self after other"""

        if not is_isomorphic(other.target, self.source):
            raise IllFormedMorphism( f'Cannot compose : {other.target} is not {self.source}' )
        return HomPartMorphism(
            other.source, self.target, self.f0 @ other.f0, self.f1 @ other.f1,
        )

def _check_well_defined(F, source, target, degree):
    """F must send each relation of the source into the target relations"""

    m = len( target.generator_orders() )
    n = len( source.generator_orders() )
    if F.shape != (m, n):
        raise IllFormedMorphism( f'Degree {degree} matrix must be {m}x{n}, got {F.rows}x{F.cols}' )
    for j, d in enumerate( source.generator_orders() ):
        if d == 0:
            continue
        for i, e in enumerate( target.generator_orders() ):
            image = d * F[i, j]
            if (e == 0 and image != 0) or (e != 0 and image % e):
                raise IllFormedMorphism(
                    f'Degree {degree}: generator {j} of order {d} cannot map '
                    f'to {F[i, j]} in a coordinate of order {e or "infinity"}'
                )

def identity_morphism(A):

    return HomPartMorphism(
        A, A,
        IntMatrix.identity( _generator_count(A.ktheory.deg0) ),
        IntMatrix.identity( _generator_count(A.ktheory.deg1) ),
    )

def zero_morphism(A, B):

    return HomPartMorphism(
        A, B,
        IntMatrix.zeros( _generator_count(B.ktheory.deg0), _generator_count(A.ktheory.deg0) ),
        IntMatrix.zeros( _generator_count(B.ktheory.deg1), _generator_count(A.ktheory.deg1) ),
    )

def multiplication_morphism(A, n):
    """Multiplication by n on A"""

    return HomPartMorphism(
        A, A,
        IntMatrix.diagonal( [n] * _generator_count(A.ktheory.deg0) ),
        IntMatrix.diagonal( [n] * _generator_count(A.ktheory.deg1) ),
    )

def morphism_kernel(phi):
    """Kernel of phi as a GradedGroup"""

    return GradedGroup(*(
        GroupExpr( presented_kernel(
            phi[e],
            _relations( phi.source.ktheory[e] ),
            _relations( phi.target.ktheory[e] ),
        ))
        for e in Degree
    ))

def morphism_cokernel(phi):
    """Cokernel of phi as a GradedGroup"""

    return GradedGroup(*(
        GroupExpr( presented_cokernel( phi[e], _relations( phi.target.ktheory[e] ) ) )
        for e in Degree
    ))

@dataclass(frozen=True)
class ConeResult:
    """
    Cone of a HomPartMorphism

    Arguments:
        object (BootObject) : Split representative, K_e = coker_e + ker_(e+1)
        extension_ambiguous (bool) : Whether other extensions are possible
        ambiguity_witness (GroupValue) : Ext(ker_(e+1), coker_e) summed over
            both degrees; zero iff the extension is forced

    """

    object              : BootObject
    extension_ambiguous : bool
    ambiguity_witness   : groups.GroupValue

def cone(phi):
    """
    Cone of a morphism from the six-term exact sequence

    The sequence gives coker(phi)_e -> K_e(cone) -> ker(phi)_(e+1), which is
    returned in split form. The extension classes live in the degree 0
    part of the graded Ext of the suspended kernel against the cokernel.

    Arguments:
        phi (HomPartMorphism) : Morphism

    Returns:
        ConeResult

    """

    kernel   = morphism_kernel(phi)
    coker    = morphism_cokernel(phi)
    ktheory  = coker.direct_sum( suspend(kernel) )
    witness  = graded.graded_ext( suspend(kernel), coker ).deg0
    result   = ConeResult(
        BootObject( ktheory, f'cone({phi.source} -> {phi.target})' ),
        not witness.is_zero(),
        witness,
    )
    logger.debug('cone: kernel %s, cokernel %s, witness %s', kernel, coker, witness)
    return result

def cone_sequence_check(phi, max_order=MAX_ORDER):
    """
    Bookkeeping of the six-term exact sequence of a cone

    Checks the alternating rank sum around the hexagon
    A_0 -> B_0 -> C_0 -> A_1 -> B_1 -> C_1 -> A_0 and, when source and
    target are finite, the alternating order product and the kernel and
    cokernel orders against a brute-force image count.

    Arguments:
        phi (HomPartMorphism) : Morphism

    Keyword arguments:
        max_order (int) : Largest source order enumerated

    Returns:
        RunReport

    """

    report    = RunReport('cone-sequence', [f'{phi.source} -> {phi.target}'])
    C         = cone(phi).object.ktheory
    A         = phi.source.ktheory
    B         = phi.target.ktheory
    hexagon   = [A.deg0, B.deg0, C.deg0, A.deg1, B.deg1, C.deg1]

    ranks = sum( (-1)**i * g.fg.rank for i, g in enumerate(hexagon) )
    report.check('rank-euler').record( ranks == 0, f'alternating rank sum {ranks}' )

    if all( g.is_finite() for g in hexagon ):
        num = den = 1
        for i, g in enumerate(hexagon):
            if i % 2:
                den *= g.fg.order
            else:
                num *= g.fg.order
        report.check('order-euler').record( num == den, f'{num} != {den}' )

        kernel = morphism_kernel(phi)
        coker  = morphism_cokernel(phi)
        for e in Degree:
            source = A[e].fg
            if source.order > max_order:
                continue
            image = image_order(phi[e], source, B[e].fg, max_order)
            report.check('image-order').record(
                kernel[e].fg.order * image == source.order
                and coker[e].fg.order * image == B[e].fg.order,
                f'degree {int(e)}: image {image}, kernel {kernel[e]}, cokernel {coker[e]}',
            )
    return report
