"""
Countable abelian groups and the four bifunctors

Groups are stored in canonical form: a finitely generated part in
invariant-factor form (Z^r + Z/d_1 + ... with d_1 | d_2 | ...), some
copies of the rationals Q = I(0), and a sorted multiset of Prüfer
groups I(p) = Z[1/p]/Z.

Hom, Ext, tensor and Tor are computed from closed-form values on pairs
of cyclic/atomic summands and summed, which is the unique biadditive
extension of the textbook formulas. Every finite entry is checked against
the brute-force oracle and every I(p) entry against a finite-stage probe
(see pykkboot.oracle). Results that are uncountable (p-adic integers,
Ext(Q, Z) and Hom(Q, I(p))) come back as a GroupValue that can only be
tested for vanishing.

"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, prod

from sympy import factorint
from sympy.utilities.iterables import partitions

from .linalg import IntMatrix, cokernel_invariants
from .utils import check_prime, prime_divisors, valuation
from .zariski import SpecSubset, SpecPoint

logger = logging.getLogger(__name__)

_factorint = lru_cache(maxsize=4096)(factorint)

def invariant_factors(orders):
    """
    Invariant factors of Z/n_1 + Z/n_2 + ... (every n >= 2)

    The prime powers of each n are grouped per prime; the k-th largest
    invariant factor is the product over primes of the k-th largest power.

    Arguments:
        orders (iterable) : Cyclic orders

    Returns:
        tuple : d_1 | d_2 | ... | d_k, each >= 2

    """

    powers = defaultdict(list)
    for n in orders:
        for p, k in _factorint(n).items():
            powers[p].append( p**k )
    if not powers:
        return ()
    length  = max( len(v) for v in powers.values() )
    factors = [1] * length
    for v in powers.values():
        for i, q in enumerate( sorted(v, reverse=True) ):
            factors[length - 1 - i] *= q
    return tuple(factors)

@dataclass(frozen=True)
class FGGroup:
    """
    Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k

    Arguments:
        rank (int) : Free rank
        factors (tuple) : Invariant factors, each >= 2, d_i | d_{i+1}

    """

    rank    : int   = 0
    factors : tuple = ()

    def __post_init__(self):

        factors = tuple( int(d) for d in self.factors )
        if self.rank < 0:
            raise ValueError( f'Free rank must be nonnegative : {self.rank}' )
        for d in factors:
            if d < 2:
                raise ValueError( f'Invariant factors must be >= 2 : {factors}' )
        for small, big in zip(factors, factors[1:]):
            if big % small:
                raise ValueError( f'Invariant factors must form a divisor chain : {factors}' )
        object.__setattr__(self, 'factors', factors)

    @classmethod
    def from_cyclic_orders(cls, orders, rank=0):
        """
        Canonical form of Z^rank + Z/n_1 + Z/n_2 + ...

        Arguments:
            orders (list) : Cyclic orders; 0 means Z and 1 the trivial group

        Keyword arguments:
            rank (int) : Extra free rank

        """

        orders = [abs(int(n)) for n in orders]
        rank  += orders.count(0)
        return cls(rank, invariant_factors( n for n in orders if n > 1 ))

    @property
    def order(self):
        """Order of the group; None when infinite"""

        return prod(self.factors) if self.rank == 0 else None

    @property
    def exponent(self):
        """Exponent of the torsion part (1 for torsion-free groups)"""

        return self.factors[-1] if self.factors else 1

    def is_zero(self):
        return self.rank == 0 and not self.factors

    def is_finite(self):
        return self.rank == 0

    def generator_orders(self):
        """Orders of the canonical generators: torsion generators first, then free (0)"""

        return self.factors + (0,) * self.rank

    def presentation(self):
        """
        Relation matrix on the canonical generator system

        Returns:
            IntMatrix : (len(factors)+rank) x len(factors); column i is
                d_i times torsion generator i

        """

        return IntMatrix.diagonal(
            self.factors,
            rows = len(self.factors) + self.rank,
            cols = len(self.factors),
        )

    def elementary_divisors(self):
        """Prime power decomposition of the torsion part, sorted"""

        out = []
        for d in self.factors:
            out += [p**k for p, k in _factorint(d).items()]
        return sorted(out)

    def direct_sum(self, other):
        return FGGroup.from_cyclic_orders(
            self.factors + other.factors,
            rank = self.rank + other.rank,
        )

    def __str__(self):

        parts = []
        if self.rank == 1:
            parts.append('Z')
        elif self.rank > 1:
            parts.append(f'Z^{self.rank}')
        parts += [f'Z/{d}' for d in self.factors]
        return ' + '.join(parts) if parts else '0'

@dataclass(frozen=True, order=True)
class DivAtom:
    """
    Indecomposable divisible group I(p)

    Arguments:
        p (int) : 0 for the rationals Q = I(0), otherwise a prime

    """

    p : int

    def __post_init__(self):
        if self.p != 0:
            check_prime(self.p)

    def is_rationals(self):
        return self.p == 0

    def __str__(self):
        return 'Q' if self.p == 0 else f'I({self.p})'

@dataclass(frozen=True)
class GroupExpr:
    """
    Canonical countable abelian group: fg + Q^q_copies + sum of I(p)

    Arguments:
        fg (FGGroup) : Finitely generated part
        q_copies (int) : Copies of Q
        prufer (tuple) : Primes p, one per copy of I(p); stored sorted

    """

    fg       : FGGroup = FGGroup()
    q_copies : int     = 0
    prufer   : tuple   = ()

    def __post_init__(self):

        if self.q_copies < 0:
            raise ValueError( f'Copies of Q must be nonnegative : {self.q_copies}' )
        prufer = tuple( sorted( check_prime(int(p)) for p in self.prufer ) )
        object.__setattr__(self, 'prufer', prufer)

    @classmethod
    def free(cls, rank=1):
        return cls(FGGroup(rank=rank))

    @classmethod
    def cyclic(cls, n):
        """Z/n for n >= 2 (n = 1 gives 0, n = 0 gives Z)"""

        return cls(FGGroup.from_cyclic_orders([n]))

    @classmethod
    def rationals(cls, copies=1):
        return cls(q_copies=copies)

    @classmethod
    def prufer_group(cls, p, copies=1):
        return cls(prufer=(p,) * copies)

    @classmethod
    def atom(cls, atom):
        """Group of a single DivAtom"""

        if atom.is_rationals():
            return cls.rationals()
        return cls.prufer_group(atom.p)

    def atoms(self):
        """DivAtoms of the divisible part, Q copies first"""

        return [DivAtom(0)] * self.q_copies + [DivAtom(p) for p in self.prufer]

    def is_zero(self):
        return self.fg.is_zero() and self.q_copies == 0 and not self.prufer

    def is_fg(self):
        """Finitely generated: no divisible atoms"""

        return self.q_copies == 0 and not self.prufer

    def is_finite(self):
        return self.is_fg() and self.fg.is_finite()

    def is_free(self):
        """Free abelian: no torsion factors, no atoms"""

        return self.is_fg() and not self.fg.factors

    def is_divisible(self):
        """Divisible (= injective): trivial finitely generated part"""

        return self.fg.is_zero()

    def is_torsion(self):
        return self.fg.rank == 0 and self.q_copies == 0

    def __str__(self):

        parts = [] if self.fg.is_zero() else [str(self.fg)]
        parts += [str(atom) for atom in self.atoms()]
        return ' + '.join(parts) if parts else '0'

ZERO = GroupExpr()

def canonicalize(presentation, q_copies=0, prufer=()):
    """
    Canonical group expression from a presentation plus divisible atoms

    Arguments:
        presentation (IntMatrix) : Relation matrix of the finitely
            generated part (cokernel of the matrix)

    Keyword arguments:
        q_copies (int) : Copies of Q
        prufer (iterable) : Primes of the Prüfer atoms

    Returns:
        GroupExpr

    """

    return GroupExpr(cokernel_invariants(presentation), q_copies, tuple(prufer))

def direct_sum(*groups):
    """Canonical form of G_1 + G_2 + ..."""

    fg = FGGroup.from_cyclic_orders(
        [d for G in groups for d in G.fg.factors],
        rank = sum( G.fg.rank for G in groups ),
    )
    return GroupExpr(
        fg,
        sum( G.q_copies for G in groups ),
        tuple( p for G in groups for p in G.prufer ),
    )

@dataclass(frozen=True)
class GroupValue:
    """
    Result of a bifunctor: an exact group or an unrepresentable nonzero one

    Arguments:
        group (GroupExpr) : The exact result; None when unrepresentable
        tags (tuple) : Labels of the unrepresentable summands (sorted,
            deduplicated); nonempty exactly when group is None

    """

    group : GroupExpr = None
    tags  : tuple     = ()

    def __post_init__(self):

        tags = tuple( sorted( set(self.tags) ) )
        if (self.group is None) == (not tags):
            raise ValueError( 'GroupValue holds either an exact group or tags' )
        object.__setattr__(self, 'tags', tags)

    @classmethod
    def exact(cls, group):
        return cls(group=group)

    @classmethod
    def unrepresentable(cls, *tags):
        return cls(tags=tags)

    def is_exact(self):
        return self.group is not None

    def is_zero(self):
        return self.group is not None and self.group.is_zero()

    def __add__(self, other):

        if self.is_exact() and other.is_exact():
            return GroupValue.exact( direct_sum(self.group, other.group) )
        return GroupValue.unrepresentable(*self.tags, *other.tags)

    def __str__(self):

        if self.is_exact():
            return str(self.group)
        return f"nonzero (unrepresentable: {', '.join(self.tags)})"

ZERO_VALUE = GroupValue.exact(ZERO)

def value_sum(values):
    """Sum of GroupValues; any unrepresentable summand absorbs"""

    values = list(values)
    tags   = [tag for v in values for tag in v.tags]
    if tags:
        return GroupValue.unrepresentable(*tags)
    return GroupValue.exact( direct_sum(*(v.group for v in values)) )

def _p_adic(p):
    return f'Z_{p} ({p}-adic integers)'

# Summands are ('Z', 0), ('C', n), ('I', 0) for Q, ('I', p) for I(p)
def _summands(G):

    out  = [('Z', 0)] * G.fg.rank
    out += [('C', d) for d in G.fg.factors]
    out += [('I', atom.p) for atom in G.atoms()]
    return out

def _group_of(summand):

    kind, n = summand
    if kind == 'Z':
        return GroupExpr.free()
    if kind == 'C':
        return GroupExpr.cyclic(n)
    return GroupExpr.atom( DivAtom(n) )

def _p_part(n, p):
    """Z/p^{v_p(n)}"""

    return GroupExpr.cyclic( p**valuation(n, p) )

def _hom_entry(a, b):

    (ka, na), (kb, nb) = a, b
    if ka == 'Z':
        return GroupValue.exact( _group_of(b) )
    if ka == 'C':
        if kb == 'C':
            return GroupValue.exact( GroupExpr.cyclic( gcd(na, nb) ) )
        if kb == 'I' and nb != 0:
            return GroupValue.exact( _p_part(na, nb) )
        return ZERO_VALUE
    if na == 0:
        if kb == 'I' and nb == 0:
            return GroupValue.exact( GroupExpr.rationals() )
        if kb == 'I':
            return GroupValue.unrepresentable( f'Hom(Q,I({nb}))' )
        return ZERO_VALUE
    if kb == 'I' and nb == na:
        return GroupValue.unrepresentable( _p_adic(na) )
    return ZERO_VALUE

def _ext_entry(a, b):

    (ka, na), (kb, nb) = a, b
    if ka == 'Z' or kb == 'I':
        return ZERO_VALUE
    if ka == 'C':
        return GroupValue.exact( GroupExpr.cyclic( na if kb == 'Z' else gcd(na, nb) ) )
    if kb == 'Z':
        return GroupValue.unrepresentable( 'Ext(Q,Z)' if na == 0 else _p_adic(na) )
    if na == 0:
        return ZERO_VALUE
    return GroupValue.exact( _p_part(nb, na) )

_RANK = {'Z': 0, 'C': 1, 'I': 2}

def _tensor_entry(a, b):

    if _RANK[a[0]] > _RANK[b[0]]:
        a, b = b, a
    (ka, na), (kb, nb) = a, b
    if ka == 'Z':
        return _group_of(b)
    if ka == 'C':
        return GroupExpr.cyclic( gcd(na, nb) ) if kb == 'C' else ZERO
    if na == 0 and nb == 0:
        return GroupExpr.rationals()
    return ZERO

def _tor_entry(a, b):

    if _RANK[a[0]] > _RANK[b[0]]:
        a, b = b, a
    (ka, na), (kb, nb) = a, b
    if ka == 'Z' or (ka == 'I' and na == 0) or (kb == 'I' and nb == 0):
        return ZERO
    if ka == 'C':
        return GroupExpr.cyclic( gcd(na, nb) ) if kb == 'C' else _p_part(na, nb)
    return GroupExpr.prufer_group(na) if na == nb else ZERO

def hom(G, H):
    """
    Hom(G, H)

    Arguments:
        G (GroupExpr) : Source
        H (GroupExpr) : Target

    Returns:
        GroupValue : Exact group, or unrepresentable nonzero for the
            p-adic integers and Hom(Q, I(p))

    """

    return value_sum(
        _hom_entry(a, b) for a, b in product( _summands(G), _summands(H) )
    )

def ext(G, H):
    """
    Ext^1(G, H)

    Arguments:
        G (GroupExpr) : First argument
        H (GroupExpr) : Second argument

    Returns:
        GroupValue : Zero whenever H is divisible or G free

    """

    return value_sum(
        _ext_entry(a, b) for a, b in product( _summands(G), _summands(H) )
    )

def tensor(G, H):
    """G ⊗ H (always representable)"""

    return direct_sum(
        *(_tensor_entry(a, b) for a, b in product( _summands(G), _summands(H) ))
    )

def tor(G, H):
    """Tor_1(G, H) (always representable, symmetric)"""

    return direct_sum(
        *(_tor_entry(a, b) for a, b in product( _summands(G), _summands(H) ))
    )

def localization_vanishes(G, q):
    """
    Whether the localization G_(q) is the zero group

    Localizing at the point 0 is rationalization, under which all
    torsion (finite factors and Prüfer atoms alike) vanishes.

    Arguments:
        G (GroupExpr) : Group
        q (SpecPoint) : Point of Spec Z

    Returns:
        bool

    """

    if G.fg.rank > 0 or G.q_copies > 0:
        return False
    if q.is_generic():
        return True
    if any(d % q.p == 0 for d in G.fg.factors):
        return False
    return q.p not in G.prufer

def _summand_points(kind, n):
    """Points seen by one summand of _summands: None stands for all of Spec Z"""

    if kind == 'Z':
        return None
    if kind == 'C':
        return prime_divisors(n)
    return {n}

def group_support(G):
    """
    Points p with G ⊗ F_p or Tor(G, F_p) nonzero, where F_0 = Q

    This is also the support of the minimal injective resolution of G (see
    injective_support): the two agree summand by summand. Z meets every
    F_p and resolves as Z -> Q -> sum of all I(p); Z/n meets F_p for p | n
    and embeds in the I(p) for p | n; Q meets only F_0 and I(p) only F_p
    (through Tor), both being injective already.

    Arguments:
        G (GroupExpr) : Group

    Returns:
        SpecSubset

    """

    points = set()
    for kind, n in _summands(G):
        seen = _summand_points(kind, n)
        if seen is None:
            return SpecSubset.all()
        points.update(seen)
    return SpecSubset.of(points)

def injective_support(G):
    """
    Points p such that I(p) occurs in the minimal injective resolution of G

    Z has resolution Z -> Q -> Q/Z = sum of all I(p), so any free summand
    gives all of Spec Z; Z/p^k -> I(p) -> I(p) gives {p}; atoms are
    already injective. Coincides with group_support.

    Arguments:
        G (GroupExpr) : Group

    Returns:
        SpecSubset

    """

    return group_support(G)

def finite_groups(max_order):
    """
    All finite abelian groups of order <= max_order, one per isomorphism class

    Arguments:
        max_order (int) : Largest order

    Returns:
        list : FGGroups sorted by (order, invariant factors)

    """

    out = []
    for n in range(1, max_order + 1):
        choices = []
        for p, e in sorted( factorint(n).items() ):
            choices.append([
                [p**part for part, mult in parts.items() for _ in range(mult)]
                for parts in (dict(x) for x in partitions(e))
            ])
        for combo in product(*choices):
            out.append( FGGroup.from_cyclic_orders([q for powers in combo for q in powers]) )
    logger.debug('%d finite abelian groups of order <= %d', len(out), max_order)
    return sorted(out, key=lambda g: (g.order, g.factors))
