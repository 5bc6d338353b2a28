"""
Brute-force oracle for the bifunctors on finite groups

Independent of the closed-form tables in pykkboot.groups: every result
is obtained by enumerating group elements and reading the isomorphism
type off the torsion counts #{x : p^j x = 0}, which determine a finite
abelian group. Elements of Z/m_1 + ... + Z/m_n are enumerated in
mixed radix order (last coordinate fastest) by numba kernels.

The module also holds the finite-stage probes for the Prüfer atoms,
I(p) = colim Z/p^n: the value of a bifunctor on I(p) is approached
through the stages Z/p^n and their transition maps (multiplication by
p on the colimit side, restriction on the limit side), keeping only the
stable image of each stage.

"""

import logging
from dataclasses import dataclass
from functools import reduce

import numpy as np
from numba import njit, prange
from sympy import factorint

from .constants import BIFUNCTORS, MAX_ORDER, PROBE_DEPTH, PROBE_MAX_ELEMENTS
from .exceptions import BoundExceeded
from .groups import FGGroup, DivAtom, GroupExpr, GroupValue
from .utils import valuation

logger = logging.getLogger(__name__)

@njit
def _elements(moduli):
    """All elements of Z/m_1 + ... + Z/m_n, one row each"""

    n     = moduli.size
    total = 1
    for i in range(n):
        total *= moduli[i]
    out = np.zeros((total, n), dtype=np.int64)
    for idx in range(total):
        rem = idx
        for i in range(n - 1, -1, -1):
            out[idx, i] = rem % moduli[i]
            rem //= moduli[i]
    return out

@njit(parallel=True)
def _annihilated_mask(elements, moduli, k):
    """Mask of {x : k x = 0}"""

    out = np.zeros(elements.shape[0], dtype=np.bool_)
    for idx in prange(elements.shape[0]):
        ok = True
        for i in range(moduli.size):
            if (k * elements[idx, i]) % moduli[i] != 0:
                ok = False
        out[idx] = ok
    return out

@njit
def _image_mask(elements, moduli, member, k):
    """Mask of {k x : x in member}"""

    out = np.zeros(elements.shape[0], dtype=np.bool_)
    for idx in range(elements.shape[0]):
        if member[idx]:
            j = 0
            for i in range(moduli.size):
                j = j * moduli[i] + (k * elements[idx, i]) % moduli[i]
            out[j] = True
    return out

@njit(parallel=True)
def _torsion_count(elements, moduli, member, kill, k):
    """#{x in member : k x in kill}"""

    count = 0
    for idx in prange(elements.shape[0]):
        if member[idx]:
            j = 0
            for i in range(moduli.size):
                j = j * moduli[i] + (k * elements[idx, i]) % moduli[i]
            if kill[j]:
                count += 1
    return count

def _moduli(orders):
    return np.asarray(orders, dtype=np.int64).reshape(-1)

def _zero_mask(elements):

    mask    = np.zeros(elements.shape[0], dtype=np.bool_)
    mask[0] = True
    return mask

def _full_mask(elements):
    return np.ones(elements.shape[0], dtype=np.bool_)

def _from_torsion_counts(order, count):
    """
    Isomorphism type of a finite abelian group from its torsion counts

    Arguments:
        order (int) : Order of the group
        count (callable) : k -> #{x : k x = 0}

    Returns:
        FGGroup

    """

    orders = []
    for p, e in factorint(order).items():
        ranks = [0]
        prev  = 1
        for j in range(1, e + 1):
            cur = count(p**j)
            ranks.append( valuation(cur // prev, p) )
            prev = cur
        ranks.append(0)
        # ranks[j] = number of cyclic p-factors of order >= p^j
        for j in range(1, e + 1):
            orders += [p**j] * (ranks[j] - ranks[j + 1])
    return FGGroup.from_cyclic_orders(orders)

def _subquotient(moduli, member, kill, elements=None):
    """
    Structure of S/K for subgroups K <= S of Z/m_1 + ... given as masks

    Arguments:
        moduli (ndarray) : Cyclic orders of the ambient group
        member (ndarray) : Mask of S
        kill (ndarray) : Mask of K

    Returns:
        FGGroup

    """

    if elements is None:
        elements = _elements(moduli)
    size_kill = int( kill.sum() )
    order     = int( member.sum() ) // size_kill
    return _from_torsion_counts(
        order,
        lambda k: _torsion_count(elements, moduli, member, kill, k) // size_kill,
    )

def _check_size(size, bound, what):

    if size > bound:
        raise BoundExceeded( f'{what} has {size} elements; bound is {bound}' )

def _hom_cyclic(a, H, bound):
    """Hom(Z/a, H): candidate images x of the generator with a x = 0"""

    moduli   = _moduli(H.factors)
    _check_size(H.order, bound, f'Hom(Z/{a}, {H}) ambient')
    elements = _elements(moduli)
    return _subquotient(
        moduli,
        _annihilated_mask(elements, moduli, a),
        _zero_mask(elements),
        elements,
    )

def _ext_cyclic(a, H, bound):
    """
    Ext(Z/a, H) as classes of extensions H -> E -> Z/a

    An extension is fixed by the element x = a * (lift of 1) in H; x and
    x + a y give equivalent extensions, so the classes are H/aH.

    """

    moduli   = _moduli(H.factors)
    _check_size(H.order, bound, f'Ext(Z/{a}, {H}) ambient')
    elements = _elements(moduli)
    full     = _full_mask(elements)
    return _subquotient(
        moduli,
        full,
        _image_mask(elements, moduli, full, a),
        elements,
    )

def _check_finite(G, max_order):

    if not G.is_finite():
        raise ValueError( f'Oracle works on finite groups only, got : {G}' )
    if G.order > max_order:
        raise BoundExceeded( f'Group {G} has order {G.order} > {max_order}' )

def oracle_bifunctor(which, G, H, max_order=MAX_ORDER):
    """
    Bifunctor of two finite groups by exhaustive enumeration

    Hom enumerates generator images, Ext counts extension classes of each
    cyclic summand of G, Tor uses the resolution of H (Tor(G, Z/b) is the
    b-torsion of G) and the tensor product that same resolution
    (G ⊗ Z/b = G/bG); both arguments may be decomposed into cyclic summands
    since each bifunctor is additive.

    Arguments:
        which (str) : One of BIFUNCTORS
        G (FGGroup) : Finite group
        H (FGGroup) : Finite group

    Keyword arguments:
        max_order (int) : Largest order allowed for G and H

    Returns:
        FGGroup

    """

    which = which.lower()
    if which not in BIFUNCTORS:
        raise ValueError( f'Unsupported bifunctor : {which}! Must be one of {BIFUNCTORS}' )
    _check_finite(G, max_order)
    _check_finite(H, max_order)

    if which == 'hom':
        parts = [_hom_cyclic(a, H, max_order) for a in G.factors]
    elif which == 'ext':
        parts = [_ext_cyclic(a, H, max_order) for a in G.factors]
    elif which == 'tor':
        parts = [_hom_cyclic(b, G, max_order) for b in H.factors]
    else:
        parts = [_ext_cyclic(b, G, max_order) for b in H.factors]

    logger.debug('oracle %s(%s, %s) from %d summands', which, G, H, len(parts))
    return reduce(lambda x, y: x.direct_sum(y), parts, FGGroup())

@dataclass(frozen=True)
class ProbeResult:
    """
    Finite-stage approximation of a bifunctor with a Prüfer argument

    Attributes:
        which (str) : Bifunctor name
        p (int) : Prime of the Prüfer atom
        side (str) : 'left' when I(p) is the first argument
        other (str) : The other argument
        stages (tuple) : Stable image (FGGroup) at stages 1, 2, ...
        verdict (str) : 'zero', 'stable', 'growing' or 'undetermined'

    """

    which   : str
    p       : int
    side    : str
    other   : str
    stages  : tuple
    verdict : str

    @property
    def limit(self):
        """The stable group for verdicts 'zero'/'stable', else None"""

        if self.verdict in ('zero', 'stable'):
            return self.stages[-1]
        return None

def _verdict(stages):

    orders = [g.order for g in stages]
    if stages[-1].is_zero() and (len(stages) < 2 or stages[-2].is_zero()):
        return 'zero'
    if len(stages) >= 3 and orders[-3] < orders[-2] < orders[-1]:
        return 'growing'
    if len(stages) >= 2 and stages[-1] == stages[-2]:
        return 'stable'
    return 'undetermined'

def _cyclic_ambient(n):
    moduli = _moduli([n])
    return moduli, _elements(moduli)

def _stage(which, side, p, H, K, M):
    """Stable image of stage K (M transition steps) for a finite group H"""

    if which == 'hom' and side == 'right':
        # colim_K Hom(H, Z/p^K), injective transitions
        return reduce(
            lambda x, y: x.direct_sum(y),
            [_hom_cyclic(a, FGGroup(factors=(p**K,)), np.inf) for a in H.factors],
            FGGroup(),
        )
    if which == 'ext' and side == 'right':
        # colim_K Ext(H, Z/p^K) = sum of (Z/p^K)/b, transition y -> p y
        parts = []
        for b in H.factors:
            moduli, elements = _cyclic_ambient(p**(K + M))
            full = _full_mask(elements)
            kill = _image_mask(elements, moduli, full, b)
            # subgroups of a cyclic group are a chain, so the union is the sum
            parts.append( _subquotient(
                moduli,
                _image_mask(elements, moduli, full, p**M) | kill,
                kill,
                elements,
            ))
        return reduce(lambda x, y: x.direct_sum(y), parts, FGGroup())

    moduli   = _moduli(H.factors)
    elements = _elements(moduli)
    full     = _full_mask(elements)
    zero     = _zero_mask(elements)
    if which == 'tor':
        # colim_K H[p^K], inclusions
        return _subquotient(moduli, _annihilated_mask(elements, moduli, p**K), zero, elements)
    if which == 'hom':
        # lim_K H[p^K], transition x -> p x: image of H[p^(K+M)] in H[p^K]
        source = _annihilated_mask(elements, moduli, p**(K + M))
        return _subquotient(moduli, _image_mask(elements, moduli, source, p**M), zero, elements)
    if which == 'ext':
        # lim_K H/p^K H, surjective transitions
        return _subquotient(moduli, full, _image_mask(elements, moduli, full, p**K), elements)
    # colim_K H/p^K H, transition x -> p x: p^M H / p^(K+M) H
    return _subquotient(
        moduli,
        _image_mask(elements, moduli, full, p**M),
        _image_mask(elements, moduli, full, p**(K + M)),
        elements,
    )

def prufer_probe(which, p, other, side='left', depth=PROBE_DEPTH,
                 max_elements=PROBE_MAX_ELEMENTS):
    """
    Approximate a bifunctor with one Prüfer argument I(p) by finite stages

    Arguments:
        which (str) : One of BIFUNCTORS
        p (int) : Prime of the Prüfer argument
        other (FGGroup, DivAtom) : The other argument; a finite group, or
            an atom I(q) for Tor(I(p), I(q)) and Hom(I(p), I(q))

    Keyword arguments:
        side (str) : 'left' when I(p) is the first argument
        depth (int) : Number of stages; a finite argument always runs
            until its stages are constant
        max_elements (int) : Largest ambient group enumerated; stages
            beyond it are skipped

    Returns:
        ProbeResult

    """

    which = which.lower()
    if which not in BIFUNCTORS:
        raise ValueError( f'Unsupported bifunctor : {which}! Must be one of {BIFUNCTORS}' )
    if side not in ('left', 'right'):
        raise ValueError( f"side must be 'left' or 'right' : {side}" )
    if which in ('tor', 'tensor') and side == 'right':
        side = 'left'    # symmetric

    stages = []
    if isinstance(other, DivAtom):
        if which not in ('tor', 'hom') or side != 'left' or other.is_rationals():
            raise ValueError( f'Pair probe only covers Tor/Hom(I({p}), I(q)) : {which}, {other}' )
        q = other.p
        for K in range(1, depth + 1):
            # I(q)[p^n] for n <= K lives in the truncation q^(-(K+1))Z/Z = Z/q^(K+1)
            trunc = q**(K + 1)
            if trunc > max_elements:
                break
            stages.append( _stage(which, side, p, FGGroup(factors=(trunc,)), K, 1) )
    else:
        if not other.is_finite():
            raise ValueError( f'Probe needs a finite group, got : {other}' )
        v = valuation(other.exponent, p)
        M = v + 1
        # every stage is constant from K = v on
        for K in range(1, max(depth, v + 2) + 1):
            if which in ('hom', 'ext') and side == 'right':
                ambient = p**(K + M)
            else:
                ambient = other.order
            if ambient > max_elements:
                break
            stages.append( _stage(which, side, p, other, K, M) )

    if not stages:
        raise BoundExceeded( f'No probe stage of I({p}) vs {other} fits {max_elements} elements' )
    result = ProbeResult(which, p, side, str(other), tuple(stages), _verdict(stages))
    logger.debug('probe %s', result)
    return result

def probe_agrees(probe, value):
    """
    Whether a probe verdict matches a closed-form GroupValue

    'zero' needs an exact zero, 'stable' an equal finite group, and
    'growing' an unrepresentable value or an infinite divisible result.

    Arguments:
        probe (ProbeResult) : Finite-stage probe
        value (GroupValue, GroupExpr) : Closed-form result

    Returns:
        bool

    """

    if isinstance(value, GroupExpr):
        value = GroupValue.exact(value)
    if probe.verdict == 'zero':
        return value.is_zero()
    if probe.verdict == 'stable':
        return value.is_exact() and value.group == GroupExpr(probe.limit)
    if probe.verdict == 'growing':
        return not value.is_exact() or not value.group.is_fg()
    return False

@njit(parallel=True)
def _image_codes(elements, F, moduli):
    """Mixed radix code of F x for every element x"""

    out = np.zeros(elements.shape[0], dtype=np.int64)
    for idx in prange(elements.shape[0]):
        code = 0
        for i in range(moduli.size):
            s = 0
            for j in range(elements.shape[1]):
                s += F[i, j] * elements[idx, j]
            code = code * moduli[i] + s % moduli[i]
        out[idx] = code
    return out

def image_order(F, source, target, max_order=MAX_ORDER):
    """
    Order of the image of a homomorphism between finite groups, by enumeration

    Arguments:
        F (IntMatrix) : Matrix on the canonical generators, target x source
        source (FGGroup) : Finite source
        target (FGGroup) : Finite target

    Keyword arguments:
        max_order (int) : Largest source order enumerated

    Returns:
        int

    """

    _check_finite(source, max_order)
    if not target.is_finite():
        raise ValueError( f'Image order needs a finite target, got : {target}' )
    moduli = _moduli(target.factors)
    F      = np.array(
        [[F[i, j] % moduli[i] for j in range(F.cols)] for i in range(F.rows)],
        dtype = np.int64,
    ).reshape(F.rows, F.cols)
    codes  = _image_codes( _elements( _moduli(source.factors) ), F, moduli )
    return int( np.unique(codes).size )
